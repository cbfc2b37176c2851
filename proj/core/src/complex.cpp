#include "modgen/complex.hpp"

#include <algorithm>

#include "modgen/errors.hpp"

namespace modgen {

const std::vector<Vec>& BoundedFreeComplex::diff_at(int i) const {
  if (i <= lo || i > hi) throw math_error("differential index out of range");
  return diffs[i - lo];
}

BoundedFreeComplex make_complex(QPtr ring, int lo, std::vector<int> ranks,
                                std::vector<std::vector<Vec>> diffs,
                                const Limits& lim) {
  BoundedFreeComplex x;
  x.ring = std::move(ring);
  x.lo = lo;
  x.hi = lo + (int)ranks.size() - 1;
  x.ranks = std::move(ranks);
  if (diffs.empty()) diffs.resize(x.ranks.size());
  if (diffs.size() != x.ranks.size()) throw math_error("differential list length mismatch");
  x.diffs = std::move(diffs);
  for (int i = x.lo + 1; i <= x.hi; ++i) {
    const auto& d = x.diffs[i - x.lo];
    if ((int)d.size() != x.ranks[i - x.lo]) throw math_error("differential column count mismatch");
    for (const auto& c : d)
      if ((int)c.size() != x.ranks[i - 1 - x.lo]) throw math_error("differential column length mismatch");
  }
  // d composed with d must vanish in R
  for (int i = x.lo + 2; i <= x.hi; ++i) {
    const auto& d1 = x.diffs[i - 1 - x.lo];
    const auto& d2 = x.diffs[i - x.lo];
    for (const auto& c : d2) {
      Vec im = vec_zero(x.ring->ambient, x.ranks[i - 2 - x.lo]);
      for (std::size_t j = 0; j < c.size(); ++j)
        if (!c[j].is_zero()) im = vec_add(im, vec_times_poly(d1[j], c[j]));
      for (const auto& f : im)
        if (!x.ring->defining.nf(f, lim).is_zero())
          throw math_error("composite differential is nonzero");
    }
  }
  return x;
}

BoundedFreeComplex zero_complex(QPtr ring) {
  BoundedFreeComplex x;
  x.ring = std::move(ring);
  x.lo = 0;
  x.hi = -1;
  return x;
}

BoundedFreeComplex free_complex(QPtr ring, int degree, int rank) {
  return make_complex(std::move(ring), degree, {rank}, {});
}

PresentedModule homology(const BoundedFreeComplex& x, int i, const Limits& lim) {
  if (i < x.lo || i > x.hi) throw math_error("homology index out of range");
  int r = x.rank_at(i);
  std::vector<Vec> K;
  if (i == x.lo) {
    for (int q = 0; q < r; ++q) K.push_back(unit_vec(x.ring->ambient, r, q));
  } else {
    K = preimage_cols(x.ring, x.rank_at(i - 1), x.diff_at(i), {}, lim);
  }
  std::vector<Vec> L;
  if (i < x.hi) L = x.diff_at(i + 1);
  return present_subquotient(x.ring, r, std::move(K), std::move(L), lim).module;
}

int top_homology_degree(const BoundedFreeComplex& x, const Limits& lim) {
  for (int i = x.hi; i >= x.lo; --i)
    if (!homology(x, i, lim).is_zero_module(lim)) return i;
  return x.lo - 1;
}

TruncationTriangle truncation_split(const BoundedFreeComplex& x, int s,
                                    const Limits& lim) {
  for (int i = std::max(s + 1, x.lo); i <= x.hi; ++i)
    if (!homology(x, i, lim).is_zero_module(lim))
      throw math_error("truncation degree below top homology");

  TruncationTriangle t;
  t.source = x;
  t.s = s;

  if (s <= x.lo) {
    t.perfect_part = zero_complex(x.ring);
  } else {
    int top = std::min(x.hi, s - 1);
    std::vector<int> ranks(x.ranks.begin(), x.ranks.begin() + (top - x.lo + 1));
    std::vector<std::vector<Vec>> diffs(x.diffs.begin(), x.diffs.begin() + (top - x.lo + 1));
    t.perfect_part = make_complex(x.ring, x.lo, std::move(ranks), std::move(diffs), lim);
  }

  if (s > x.hi) {
    t.quotient_part = zero_complex(x.ring);
  } else {
    int bot = std::max(x.lo, s);
    std::vector<int> ranks(x.ranks.begin() + (bot - x.lo), x.ranks.end());
    std::vector<std::vector<Vec>> diffs(x.diffs.begin() + (bot - x.lo), x.diffs.end());
    if (!diffs.empty()) diffs[0].clear();  // d_bot leaves the quotient complex
    t.quotient_part = make_complex(x.ring, bot, std::move(ranks), std::move(diffs), lim);
  }

  if (s + 1 > x.lo && s + 1 <= x.hi) t.next_diff = x.diff_at(s + 1);
  t.module_part = PresentedModule(x.ring, x.rank_at(s), t.next_diff);
  return t;
}

TruncationTriangle module_truncation(const PresentedModule& m, int s, const Limits& lim) {
  if (s < 0) throw math_error("negative truncation degree");
  FreeResolution res(m);
  res.extend_to(s + 1, lim);

  TruncationTriangle t;
  t.s = s;
  std::vector<int> ranks;
  std::vector<std::vector<Vec>> diffs;
  for (int j = 0; j <= s; ++j) {
    ranks.push_back(res.rank(j, lim));
    diffs.push_back(j == 0 ? std::vector<Vec>{} : res.differential(j, lim));
  }
  t.source = make_complex(m.ring(), 0, ranks, diffs, lim);
  if (res.rank(s, lim) > 0) t.next_diff = res.differential(s + 1, lim);
  if (s == 0) {
    t.perfect_part = zero_complex(m.ring());
    t.quotient_part = t.source;
    t.module_part = m;
    return t;
  }
  t.perfect_part = make_complex(
      m.ring(), 0, std::vector<int>(ranks.begin(), ranks.end() - 1),
      std::vector<std::vector<Vec>>(diffs.begin(), diffs.end() - 1), lim);
  t.quotient_part = free_complex(m.ring(), s, ranks.back());
  t.module_part = res.syzygy_at(s, lim);
  return t;
}

bool verify_truncation(const TruncationTriangle& t, const Limits& lim) {
  const auto& x = t.source;
  // no homology above the truncation degree
  for (int i = std::max(t.s + 1, x.lo); i <= x.hi; ++i)
    if (!homology(x, i, lim).is_zero_module(lim)) return false;
  // degreewise split: ranks add up and differentials restrict
  for (int i = x.lo; i <= x.hi; ++i)
    if (t.perfect_part.rank_at(i) + t.quotient_part.rank_at(i) != x.rank_at(i))
      return false;
  for (int i = x.lo + 1; i < t.s && i <= x.hi; ++i) {
    const auto& a = t.perfect_part.diff_at(i);
    const auto& b = x.diff_at(i);
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!vec_eq(a[j], b[j])) return false;
  }
  for (int i = std::max(t.s + 1, x.lo + 1); i <= x.hi; ++i) {
    const auto& a = t.quotient_part.diff_at(i);
    const auto& b = x.diff_at(i);
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!vec_eq(a[j], b[j])) return false;
  }
  // the module part is the cokernel of the connecting differential
  if (t.s + 1 > x.lo && t.s + 1 <= x.hi) {
    const auto& a = t.next_diff;
    const auto& b = x.diff_at(t.s + 1);
    if (a.size() != b.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!vec_eq(a[j], b[j])) return false;
  }
  PresentedModule coker(x.ring, x.rank_at(t.s), t.next_diff);
  if (t.s >= x.lo && t.s <= x.hi) {
    if (coker.canonical_key(lim) != t.module_part.canonical_key(lim) &&
        !(coker.is_zero_module(lim) && t.module_part.is_zero_module(lim)))
      return false;
  }
  return true;
}

}  // namespace modgen
