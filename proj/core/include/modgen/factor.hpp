#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "modgen/gb.hpp"
#include "modgen/poly.hpp"

namespace modgen {

// Exact division a / b; nullopt when b does not divide a.
std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b);

// gcd in a polynomial ring over a field, computed through the principal
// intersection (f) ∩ (g) = (lcm).  Result is monic.
Poly poly_gcd(const Poly& f, const Poly& g, const Limits& lim = {});

// Product of the distinct irreducible factors (characteristic zero only).
Poly squarefree_part(const Poly& f, const Limits& lim = {});

// Full factorization over Q into irreducibles with multiplicities, by
// Kronecker's method (substitution to one variable, divisor enumeration,
// interpolation, trial division).  Complete but desk-scale only; throws
// cutoff_error when the divisor search exceeds its budget.  Factors are
// integer-primitive with positive leading coefficient; the scalar unit is
// dropped.
std::vector<std::pair<Poly, int>> factor_poly(const Poly& f, const Limits& lim = {});

bool is_irreducible(const Poly& f, const Limits& lim = {});

}  // namespace modgen
