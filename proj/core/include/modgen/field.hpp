#pragma once

#include <gmpxx.h>

#include <string>

#include "modgen/errors.hpp"

namespace modgen {

// Coefficient field: the rationals, or a prime field F_p.
// Elements of F_p are stored as mpq with denominator 1 and numerator in [0,p).
struct FieldSpec {
  bool rationals = true;
  unsigned long p = 0;

  static FieldSpec Q() { return FieldSpec{true, 0}; }
  static FieldSpec Fp(unsigned long p);

  bool operator==(const FieldSpec& o) const {
    return rationals == o.rationals && p == o.p;
  }

  unsigned long characteristic() const { return rationals ? 0 : p; }

  mpq_class normalize(const mpq_class& a) const;
  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class sub(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class neg(const mpq_class& a) const;
  mpq_class inv(const mpq_class& a) const;
  mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }
  mpq_class from_long(long n) const { return normalize(mpq_class(n)); }

  std::string name() const { return rationals ? "Q" : "F" + std::to_string(p); }
};

std::string coeff_to_string(const mpq_class& c);

}  // namespace modgen
