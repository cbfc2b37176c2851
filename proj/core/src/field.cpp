#include "modgen/field.hpp"

namespace modgen {

FieldSpec FieldSpec::Fp(unsigned long p) {
  mpz_class pz(static_cast<long>(p));
  if (p < 2 || mpz_probab_prime_p(pz.get_mpz_t(), 40) == 0)
    throw math_error("field characteristic must be prime: " + std::to_string(p));
  return FieldSpec{false, p};
}

mpq_class FieldSpec::normalize(const mpq_class& a) const {
  if (rationals) {
    mpq_class r = a;
    r.canonicalize();
    return r;
  }
  mpz_class pz(static_cast<long>(p));
  mpz_class num = a.get_num() % pz;
  if (num < 0) num += pz;
  mpz_class den = a.get_den() % pz;
  if (den < 0) den += pz;
  if (den == 0) throw math_error("division by zero in F_" + std::to_string(p));
  if (den != 1) {
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
      throw math_error("non-invertible denominator in F_" + std::to_string(p));
    num = (num * dinv) % pz;
  }
  return mpq_class(num);
}

mpq_class FieldSpec::add(const mpq_class& a, const mpq_class& b) const {
  return normalize(mpq_class(a + b));
}

mpq_class FieldSpec::sub(const mpq_class& a, const mpq_class& b) const {
  return normalize(mpq_class(a - b));
}

mpq_class FieldSpec::mul(const mpq_class& a, const mpq_class& b) const {
  return normalize(mpq_class(a * b));
}

mpq_class FieldSpec::neg(const mpq_class& a) const {
  return normalize(mpq_class(-a));
}

mpq_class FieldSpec::inv(const mpq_class& a) const {
  if (a == 0) throw math_error("inverse of zero");
  if (rationals) return mpq_class(1) / a;
  mpz_class pz(static_cast<long>(p));
  mpz_class num = normalize(a).get_num();
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw math_error("non-invertible element in F_" + std::to_string(p));
  return mpq_class(r);
}

std::string coeff_to_string(const mpq_class& c) {
  return c.get_str();
}

}  // namespace modgen
