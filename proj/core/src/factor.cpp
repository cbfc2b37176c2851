#include "modgen/factor.hpp"

#include <algorithm>
#include <map>

namespace modgen {

namespace {

// integer primitive part with positive leading coefficient
Poly normalize_factor(const Poly& f) {
  if (f.is_zero()) return f;
  mpz_class den_lcm = 1;
  for (const auto& t : f.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  mpz_class content = 0;
  for (const auto& t : f.terms()) {
    mpz_class n = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
  }
  mpq_class scale(den_lcm, content);
  Poly g = f.scaled(scale);
  if (g.leading_term().coeff < 0) g = -g;
  return g;
}

std::vector<mpz_class> divisors_signed(const mpz_class& v, std::size_t cap) {
  mpz_class a = abs(v);
  std::vector<mpz_class> divs;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      divs.push_back(d);
      if (d * d != a) divs.push_back(a / d);
      if (divs.size() > cap) throw cutoff_error("divisor enumeration budget exhausted");
    }
  }
  std::sort(divs.begin(), divs.end());
  std::vector<mpz_class> out;
  for (const auto& d : divs) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

mpq_class eval_univariate(const Poly& f, const mpq_class& x) {
  // terms are sorted; plain term-by-term evaluation
  mpq_class acc = 0;
  for (const auto& t : f.terms()) {
    mpq_class p = t.coeff;
    for (std::uint32_t k = 0; k < t.exp[0]; ++k) p *= x;
    acc += p;
  }
  return acc;
}

// Lagrange interpolation through (points[i], values[i]) in a 1-variable ring.
Poly interpolate(const RingPtr& ring, const std::vector<mpq_class>& points,
                 const std::vector<mpq_class>& values) {
  Poly acc = Poly::zero(ring);
  Poly x = Poly::variable(ring, 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    Poly num = Poly::constant(ring, values[i]);
    mpq_class den = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      num = num * (x - Poly::constant(ring, points[j]));
      den *= points[i] - points[j];
    }
    acc = acc + num.scaled(mpq_class(1) / den);
  }
  return acc;
}

bool has_integer_coeffs(const Poly& f) {
  for (const auto& t : f.terms())
    if (t.coeff.get_den() != 1) return false;
  return true;
}

// Irreducible factors of a primitive squarefree-ish univariate integer
// polynomial; Kronecker divisor enumeration.  Returns factors in discovery
// order; complete.
std::vector<Poly> kronecker_univariate(Poly f, const Limits& lim) {
  const RingPtr& ring = f.ring();
  std::vector<Poly> out;
  long budget = 2000000;
  for (;;) {
    long deg = f.degree();
    if (deg <= 0) break;
    if (deg == 1) {
      out.push_back(normalize_factor(f));
      break;
    }
    long half = deg / 2;
    bool split = false;
    for (long d = 1; d <= half && !split; ++d) {
      // evaluation points 0, 1, -1, 2, -2, ...
      std::vector<mpq_class> pts;
      for (long k = 0; static_cast<long>(pts.size()) < d + 1; ++k) {
        mpq_class p = (k % 2 == 1) ? mpq_class((k + 1) / 2) : mpq_class(-(k / 2));
        pts.push_back(p);
      }
      std::vector<std::vector<mpz_class>> choices;
      bool root_found = false;
      for (const auto& p : pts) {
        mpq_class v = eval_univariate(f, p);
        if (v == 0) {
          // p is a rational (here integer) root
          Poly lin = Poly::variable(ring, 0) - Poly::constant(ring, p);
          auto q = poly_divide_exact(f, lin);
          out.push_back(normalize_factor(lin));
          f = normalize_factor(*q);
          split = true;
          root_found = true;
          break;
        }
        choices.push_back(divisors_signed(v.get_num(), 4096));
      }
      if (root_found) break;
      // enumerate divisor tuples
      std::vector<std::size_t> idx(static_cast<std::size_t>(d + 1), 0);
      for (;;) {
        if (--budget < 0) throw cutoff_error("factorization budget exhausted");
        std::vector<mpq_class> vals;
        for (std::size_t i = 0; i < idx.size(); ++i)
          vals.push_back(mpq_class(choices[i][idx[i]]));
        Poly cand = interpolate(ring, pts, vals);
        if (cand.degree() == d && has_integer_coeffs(cand)) {
          auto q = poly_divide_exact(f, cand);
          if (q) {
            out.push_back(normalize_factor(cand));
            f = normalize_factor(*q);
            split = true;
            break;
          }
        }
        // next tuple
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
      }
    }
    if (!split) {
      out.push_back(normalize_factor(f));  // irreducible
      break;
    }
  }
  return out;
}

}  // namespace

std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Poly::zero(a.ring());
  const RingPtr& ring = a.ring();
  Poly r = a;
  Poly q = Poly::zero(ring);
  const Term& blt = b.leading_term();
  while (!r.is_zero()) {
    const Term& rlt = r.leading_term();
    if (!exp_divides(blt.exp, rlt.exp)) return std::nullopt;
    Exp e = exp_div(rlt.exp, blt.exp);
    mpq_class c = ring->field.div(rlt.coeff, blt.coeff);
    Poly m = Poly::monomial(ring, e, c);
    q = q + m;
    r = r - b * m;
  }
  return q;
}

Poly poly_gcd(const Poly& f, const Poly& g, const Limits& lim) {
  require_same_ring(f, g);
  if (f.is_zero()) return g.is_zero() ? g : g.monic();
  if (g.is_zero()) return f.monic();
  const RingPtr& R = f.ring();
  Ideal meet = ideal_intersect(Ideal(R, {f}), Ideal(R, {g}), lim);
  // (f) ∩ (g) is principal; its reduced GB is the single generator lcm(f,g)
  const auto& basis = meet.gb(lim).basis;
  if (basis.size() != 1)
    throw math_error("principal intersection has non-singleton reduced basis");
  Poly l = basis[0][0];
  auto prod_over_l = poly_divide_exact(f * g, l);
  if (!prod_over_l) throw math_error("lcm does not divide the product");
  return prod_over_l->monic();
}

Poly squarefree_part(const Poly& f, const Limits& lim) {
  if (f.ring()->field.characteristic() != 0)
    throw math_error("squarefree part implemented for characteristic zero only");
  if (f.is_zero() || f.is_constant()) return f;
  Poly d = f;
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
    Poly pi = partial_derivative(f, static_cast<int>(i));
    d = poly_gcd(d, pi, lim);
    if (d.is_constant()) break;
  }
  auto q = poly_divide_exact(f, d);
  if (!q) throw math_error("gcd does not divide its argument");
  return q->monic();
}

std::vector<std::pair<Poly, int>> factor_poly(const Poly& f, const Limits& lim) {
  const RingPtr& ring = f.ring();
  if (ring->field.characteristic() != 0)
    throw math_error("factorization implemented over Q only");
  if (f.is_zero()) throw math_error("cannot factor the zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  if (f.is_constant()) return out;

  Poly work = normalize_factor(f);

  // pull out variable factors
  const std::size_t n = ring->nvars();
  Exp minexp(n, 0);
  if (!work.terms().empty()) {
    minexp = work.terms()[0].exp;
    for (const auto& t : work.terms())
      for (std::size_t i = 0; i < n; ++i)
        minexp[i] = std::min(minexp[i], t.exp[i]);
  }
  if (total_degree(minexp) > 0) {
    std::vector<Term> ts;
    for (const auto& t : work.terms())
      ts.push_back(Term{exp_div(t.exp, minexp), t.coeff});
    work = Poly(ring, std::move(ts));
    for (std::size_t i = 0; i < n; ++i)
      if (minexp[i] > 0)
        out.push_back({Poly::variable(ring, static_cast<int>(i)),
                       static_cast<int>(minexp[i])});
  }
  if (work.is_constant()) return out;

  // squarefree reduction, then factor the squarefree part
  Poly sqf = normalize_factor(squarefree_part(work, lim));

  std::vector<int> vars_present;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : sqf.terms())
      if (t.exp[i] > 0) {
        vars_present.push_back(static_cast<int>(i));
        break;
      }

  RingPtr uni = PolyRing::make(FieldSpec::Q(), {"t"}, MonomialOrder{});
  std::vector<Poly> irreducibles;

  if (vars_present.size() <= 1) {
    // univariate (or constant): map to the 1-variable ring directly
    int v = vars_present.empty() ? 0 : vars_present[0];
    std::vector<Term> ts;
    for (const auto& t : sqf.terms())
      ts.push_back(Term{Exp{t.exp[static_cast<std::size_t>(v)]}, t.coeff});
    Poly u(uni, std::move(ts));
    for (const auto& g : kronecker_univariate(u, lim)) {
      std::vector<Term> back;
      for (const auto& t : g.terms()) {
        Exp e(n, 0);
        e[static_cast<std::size_t>(v)] = t.exp[0];
        back.push_back(Term{std::move(e), t.coeff});
      }
      irreducibles.push_back(Poly(ring, std::move(back)));
    }
  } else {
    // Kronecker substitution x_{v_k} -> t^(D^k)
    long maxdeg = 0;
    for (const auto& t : sqf.terms())
      for (int v : vars_present)
        maxdeg = std::max(maxdeg, static_cast<long>(t.exp[static_cast<std::size_t>(v)]));
    const unsigned long D = static_cast<unsigned long>(maxdeg) + 1;
    auto to_uni = [&](const Poly& p) {
      std::vector<Term> ts;
      for (const auto& t : p.terms()) {
        unsigned long e = 0, base = 1;
        for (int v : vars_present) {
          e += base * t.exp[static_cast<std::size_t>(v)];
          base *= D;
        }
        if (e > static_cast<unsigned long>(lim.max_exponent))
          throw cutoff_error("Kronecker substitution exponent overflow");
        ts.push_back(Term{Exp{static_cast<std::uint32_t>(e)}, t.coeff});
      }
      return Poly(uni, std::move(ts));
    };
    auto from_uni = [&](const Poly& p) -> std::optional<Poly> {
      std::vector<Term> ts;
      unsigned long limit = 1;
      for (std::size_t k = 0; k < vars_present.size(); ++k) limit *= D;
      for (const auto& t : p.terms()) {
        unsigned long e = t.exp[0];
        if (e >= limit) return std::nullopt;
        Exp ex(n, 0);
        for (int v : vars_present) {
          ex[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(e % D);
          e /= D;
        }
        ts.push_back(Term{std::move(ex), t.coeff});
      }
      return Poly(ring, std::move(ts));
    };

    std::vector<Poly> ufactors = kronecker_univariate(to_uni(sqf), lim);
    Poly rem = sqf;
    // combine univariate factors; every true factor is a sub-product
    bool progress = true;
    while (progress && !rem.is_constant()) {
      progress = false;
      const std::size_t m = ufactors.size();
      if (m == 0) break;
      if (m > 20) throw cutoff_error("too many Kronecker factors to recombine");
      for (std::size_t size = 1; size <= m && !progress; ++size) {
        // iterate subsets of the given size
        std::vector<std::size_t> comb(size);
        for (std::size_t i = 0; i < size; ++i) comb[i] = i;
        for (;;) {
          Poly prod = Poly::constant(uni, 1);
          for (std::size_t i : comb) prod = prod * ufactors[i];
          auto cand = from_uni(prod);
          if (cand) {
            Poly c = normalize_factor(*cand);
            if (!c.is_constant()) {
              auto q = poly_divide_exact(rem, c);
              if (q) {
                irreducibles.push_back(c);
                rem = normalize_factor(*q);
                std::vector<Poly> keep;
                for (std::size_t i = 0; i < m; ++i)
                  if (std::find(comb.begin(), comb.end(), i) == comb.end())
                    keep.push_back(ufactors[i]);
                ufactors = std::move(keep);
                progress = true;
                break;
              }
            }
          }
          // next combination
          long i = static_cast<long>(size) - 1;
          while (i >= 0 && comb[static_cast<std::size_t>(i)] ==
                               m - size + static_cast<std::size_t>(i))
            --i;
          if (i < 0) break;
          ++comb[static_cast<std::size_t>(i)];
          for (std::size_t j = static_cast<std::size_t>(i) + 1; j < size; ++j)
            comb[j] = comb[j - 1] + 1;
        }
      }
    }
    if (!rem.is_constant()) irreducibles.push_back(normalize_factor(rem));
  }

  // multiplicities by repeated exact division of the full input
  for (const auto& g : irreducibles) {
    int mult = 0;
    for (;;) {
      auto q = poly_divide_exact(work, g);
      if (!q) break;
      work = *q;
      ++mult;
    }
    if (mult > 0) out.push_back({g, mult});
  }
  if (!work.is_constant())
    throw math_error("factorization incomplete: nontrivial cofactor remains");

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return Poly::cmp(a.first, b.first) < 0;
  });
  return out;
}

bool is_irreducible(const Poly& f, const Limits& lim) {
  if (f.is_zero() || f.is_constant()) return false;
  auto fs = factor_poly(f, lim);
  return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace modgen
