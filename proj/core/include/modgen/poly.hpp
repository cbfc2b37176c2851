#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modgen/field.hpp"

namespace modgen {

using Exp = std::vector<std::uint32_t>;

// Monomial order on exponent vectors.  Block orders compare successive
// variable blocks by grevlex; with block sizes {k, n-k} this is the usual
// elimination order for the first k variables.
struct MonomialOrder {
  enum Kind { Grevlex, Lex, Block } kind = Grevlex;
  std::vector<int> blocks;  // used when kind == Block

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && blocks == o.blocks;
  }
  std::string name() const;
};

struct PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

struct PolyRing {
  FieldSpec field;
  std::vector<std::string> vars;
  MonomialOrder order;

  static RingPtr make(FieldSpec field, std::vector<std::string> vars,
                      MonomialOrder order = {});

  std::size_t nvars() const { return vars.size(); }
  int var_index(const std::string& name) const;  // -1 if absent

  // a > b  ->  +1,  a == b -> 0,  a < b -> -1
  int cmp(const Exp& a, const Exp& b) const;

  bool same_as(const PolyRing& other) const {
    return field == other.field && vars == other.vars && order == other.order;
  }
};

long total_degree(const Exp& e);
bool exp_divides(const Exp& a, const Exp& b);          // a | b
Exp exp_mul(const Exp& a, const Exp& b, const Limits& lim = {});
Exp exp_div(const Exp& b, const Exp& a);               // b / a, assumes a | b
Exp exp_lcm(const Exp& a, const Exp& b);

struct Term {
  Exp exp;
  mpq_class coeff;
};

// Sparse multivariate polynomial.  Terms are kept sorted strictly descending
// in the ring's order with no zero coefficients, so equal polynomials have
// identical representations.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, std::vector<Term> terms);  // normalizes

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, const mpq_class& c);
  static Poly variable(RingPtr ring, int idx, std::uint32_t power = 1);
  static Poly monomial(RingPtr ring, Exp e, const mpq_class& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exp) == 0);
  }
  std::size_t size() const { return terms_.size(); }
  long degree() const;  // total degree, -1 for zero

  const Term& leading_term() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const mpq_class& c) const;
  Poly times_monomial(const Exp& e, const mpq_class& c, const Limits& lim = {}) const;
  Poly pow(unsigned long n) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Strict total order used for canonical sorting of polynomial lists.
  static int cmp(const Poly& a, const Poly& b);

  Poly monic() const;  // leading coefficient 1
  bool is_homogeneous() const;

  std::string to_string() const;

 private:
  void normalize();
  RingPtr ring_;
  std::vector<Term> terms_;
};

Poly partial_derivative(const Poly& f, int var);
Poly partial_derivative(const Poly& f, const std::string& var);

// Entry (i,j) is d(gens[i])/d(vars[j]).
std::vector<std::vector<Poly>> jacobian_matrix(const std::vector<Poly>& gens);

// Determinant by cofactor expansion; fine at desk scale.
Poly poly_det(const std::vector<std::vector<Poly>>& m);

void require_same_ring(const Poly& a, const Poly& b);

// Element of a free module A^rank, as a dense vector of polynomials.
using Vec = std::vector<Poly>;

Vec vec_zero(const RingPtr& ring, int rank);
Vec unit_vec(const RingPtr& ring, int rank, int pos);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const mpq_class& c);
Vec vec_times_poly(const Vec& a, const Poly& f);
Vec vec_times_monomial(const Vec& a, const Exp& e, const mpq_class& c,
                       const Limits& lim = {});
bool vec_eq(const Vec& a, const Vec& b);
int vec_cmp(const Vec& a, const Vec& b);
std::string vec_to_string(const Vec& v);

// Map a polynomial into a ring with the same leading variables plus extras
// appended (used by the radical-membership trick).
Poly promote(const Poly& f, const RingPtr& bigger);

}  // namespace modgen
