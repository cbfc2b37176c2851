#include "modgen/loci.hpp"

#include <algorithm>

#include "modgen/errors.hpp"

namespace modgen {

bool ClosedLocus::is_empty(const Limits& lim) const {
  return defining.is_unit_ideal(lim);
}

bool ClosedLocus::is_all(const Limits& lim) const {
  for (const auto& g : defining.gens())
    if (!radical_membership(g, ring->defining, lim)) return false;
  return true;
}

bool locus_contains(const ClosedLocus& outer, const ClosedLocus& inner,
                    const Limits& lim) {
  for (const auto& g : outer.defining.gens())
    if (!radical_membership(g, inner.defining, lim)) return false;
  return true;
}

bool locus_equal(const ClosedLocus& a, const ClosedLocus& b, const Limits& lim) {
  return locus_contains(a, b, lim) && locus_contains(b, a, lim);
}

bool is_equidimensional_auto(const QPtr& r, const Limits& lim) {
  if (r->dim < 0) return true;  // empty spectrum
  int nonzero = 0;
  for (const auto& g : r->defining.gens())
    if (!g.is_zero()) ++nonzero;
  if (nonzero == 0) return true;
  int c = (int)r->ambient->nvars() - r->dim;
  return nonzero == c;  // complete intersections are unmixed
}

// all c-by-c minors of the Jacobian of the defining generators
static std::vector<Poly> jacobian_minors(const QPtr& r, int c, const Limits&) {
  const auto& A = r->ambient;
  if (c == 0) return {Poly::constant(A, 1)};
  auto jac = jacobian_matrix(r->defining.gens());
  int rows = (int)jac.size();
  int cols = rows ? (int)jac[0].size() : 0;
  std::vector<Poly> out;
  if (c > rows || c > cols) return out;
  std::vector<int> ri(c), ci(c);
  // iterate over all row and column c-subsets in lexicographic order
  auto next_subset = [](std::vector<int>& s, int n) {
    int c2 = (int)s.size();
    int i = c2 - 1;
    while (i >= 0 && s[i] == n - c2 + i) --i;
    if (i < 0) return false;
    ++s[i];
    for (int j = i + 1; j < c2; ++j) s[j] = s[j - 1] + 1;
    return true;
  };
  for (int i = 0; i < c; ++i) ri[i] = i;
  do {
    for (int i = 0; i < c; ++i) ci[i] = i;
    do {
      std::vector<std::vector<Poly>> sub(c, std::vector<Poly>(c, Poly::zero(A)));
      for (int a = 0; a < c; ++a)
        for (int b = 0; b < c; ++b) sub[a][b] = jac[ri[a]][ci[b]];
      Poly det = poly_det(sub);
      if (!det.is_zero()) out.push_back(std::move(det));
    } while (next_subset(ci, cols));
  } while (next_subset(ri, rows));
  return out;
}

ClosedLocus singular_locus(const QPtr& r, const Limits& lim,
                           bool attested_equidimensional) {
  const auto& A = r->ambient;
  if (r->dim < 0)
    return {r, Ideal(A, {Poly::constant(A, 1)})};
  if (!attested_equidimensional && !is_equidimensional_auto(r, lim))
    throw math_error(
        "defining ideal not recognized as equidimensional; supply a component "
        "decomposition or attest equidimensionality");
  int c = (int)A->nvars() - r->dim;
  std::vector<Poly> gens = r->defining.gens();
  auto minors = jacobian_minors(r, c, lim);
  gens.insert(gens.end(), minors.begin(), minors.end());
  return {r, Ideal(A, std::move(gens))};
}

OpenLocus regular_locus(const QPtr& r, const Limits& lim,
                        bool attested_equidimensional) {
  return {singular_locus(r, lim, attested_equidimensional)};
}

ClosedLocus nonperf_locus(const PresentedModule& m, const Limits& lim) {
  const auto& r = m.ring();
  if (r->dim < 0) return {r, Ideal(r->ambient, {Poly::constant(r->ambient, 1)})};
  int d = r->dim;
  PresentedModule om = syzygy(d + 1, m, lim);
  PresentedModule e = ext_module(d + 1, m, om, lim);
  return {r, annihilator(e, lim)};
}

OpenLocus perf_locus(const PresentedModule& m, const Limits& lim) {
  return {nonperf_locus(m, lim)};
}

OpenLocus perf_locus_complex(const BoundedFreeComplex& x, const Limits& lim) {
  int s = top_homology_degree(x, lim);
  if (s < x.lo)  // exact complex: zero object, perfect everywhere
    return {{x.ring, Ideal(x.ring->ambient, {Poly::constant(x.ring->ambient, 1)})}};
  TruncationTriangle t = truncation_split(x, s, lim);
  return {nonperf_locus(t.module_part, lim)};
}

J0Result is_J0(const QPtr& r, bool domain_attested, const Limits& lim,
               bool attested_equidimensional) {
  ClosedLocus sing = singular_locus(r, lim, attested_equidimensional);
  J0Result res;
  if (!domain_attested) {
    res.j0 = !sing.is_all(lim);
    return res;
  }
  // domain: the singular ideal survives in R iff its vanishing set is proper;
  // any GB element with nonzero image is a localization witness
  struct Cand {
    long deg;
    Poly f;
  };
  std::vector<Cand> cands;
  for (const auto& b : sing.defining.gb(lim).basis) {
    Poly im = r->defining.nf(b[0], lim);
    if (!im.is_zero()) cands.push_back({im.degree(), im});
  }
  if (cands.empty()) {
    res.j0 = false;
    return res;
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return Poly::cmp(a.f, b.f) < 0;
  });
  res.j0 = true;
  res.witness = cands.front().f;
  return res;
}

J1Result is_J1(const QPtr& r, const Limits& lim, bool attested_equidimensional) {
  return {true, regular_locus(r, lim, attested_equidimensional)};
}

NagataReport nagata_check(const QPtr& r, const std::vector<Ideal>& primes,
                          const Limits& lim, bool attested_equidimensional) {
  NagataReport rep;
  const auto& A = r->ambient;
  if (primes.empty()) {
    rep.ok = false;
    rep.failure = "no primes supplied";
    return rep;
  }
  for (std::size_t i = 0; i < primes.size(); ++i) {
    // each prime must contain the defining ideal
    for (const auto& g : r->defining.gens())
      if (!primes[i].contains(g, lim)) {
        rep.ok = false;
        rep.failure = "prime " + primes[i].to_string() + " does not contain the defining ideal";
        return rep;
      }
  }
  // joint covering of the minimal primes: the product must be nilpotent on R
  std::vector<Poly> products{Poly::constant(A, 1)};
  for (const auto& p : primes) {
    std::vector<Poly> next;
    for (const auto& a : products)
      for (const auto& g : p.gens()) next.push_back(a * g);
    products = std::move(next);
  }
  for (const auto& f : products)
    if (!radical_membership(f, r->defining, lim)) {
      rep.ok = false;
      rep.failure = "supplied primes do not cover the minimal primes";
      return rep;
    }
  // J-0 for each quotient domain
  for (const auto& p : primes) {
    QPtr rp = QuotientRing::make(A, p.gens(), lim);
    J0Result j0 = is_J0(rp, /*domain_attested=*/true, lim,
                        /*attested_equidimensional=*/true);
    if (!j0.j0) {
      rep.ok = false;
      rep.failure = "quotient by " + p.to_string() + " is not J-0";
      return rep;
    }
  }
  rep.reg = regular_locus(r, lim, attested_equidimensional);
  return rep;
}

}  // namespace modgen
