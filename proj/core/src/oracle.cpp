#include "modgen/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "modgen/errors.hpp"

namespace modgen {

std::optional<int> pd_by_resolution(const PresentedModule& m, int bound,
                                    const Limits& lim) {
  if (m.is_zero_module(lim)) return 0;
  // minimize the presentation first: the syzygy steps keep minimality, so the
  // length of the resolution below is the projective dimension itself rather
  // than an upper bound inflated by redundant generators
  std::vector<Vec> gens;
  for (int i = 0; i < m.ngens(); ++i)
    gens.push_back(unit_vec(m.ring()->ambient, m.ngens(), i));
  PresentedModule mm =
      present_subquotient(m.ring(), m.ngens(), std::move(gens), m.relations(), lim)
          .module;
  FreeResolution res(mm);
  for (int j = 0; j <= bound; ++j) {
    const PresentedModule& om = res.syzygy_at(j, lim);
    if (om.is_zero_module(lim) || om.is_free(lim)) return j;
  }
  return std::nullopt;
}

// leading terms (position, exponent) of the relation GB
static std::vector<std::pair<int, Exp>> lead_terms(const PresentedModule& m,
                                                   const Limits& lim) {
  std::vector<std::pair<int, Exp>> lt;
  for (const auto& b : m.rel_gb(lim).basis) {
    LeadTerm l = vec_lead(b);
    lt.push_back({l.pos, l.term->exp});
  }
  return lt;
}

static bool is_standard(int pos, const Exp& e,
                        const std::vector<std::pair<int, Exp>>& lt) {
  for (const auto& [p, le] : lt)
    if (p == pos && exp_divides(le, e)) return false;
  return true;
}

// count standard monomials of total degree t at one position
static long count_degree(std::size_t nvars, int pos, long t,
                         const std::vector<std::pair<int, Exp>>& lt) {
  if (t < 0) return 0;
  long count = 0;
  Exp e(nvars, 0);
  // enumerate exponent vectors of total degree t
  auto rec = [&](auto&& self, std::size_t v, long rem) -> void {
    if (v + 1 == nvars) {
      e[v] = (std::uint32_t)rem;
      if (is_standard(pos, e, lt)) ++count;
      e[v] = 0;
      return;
    }
    for (long a = 0; a <= rem; ++a) {
      e[v] = (std::uint32_t)a;
      self(self, v + 1, rem - a);
    }
    e[v] = 0;
  };
  if (nvars == 0) return t == 0 && is_standard(pos, e, lt) ? 1 : 0;
  rec(rec, 0, t);
  return count;
}

long GradedVectorData::total() const {
  return std::accumulate(dims.begin(), dims.end(), 0L);
}

GradedVectorData graded_dimensions(const PresentedModule& m, long lo, long hi,
                                   const Limits& lim) {
  if (!m.gen_degrees())
    throw math_error("graded dimensions require a graded presentation");
  const auto& degs = *m.gen_degrees();
  auto lt = lead_terms(m, lim);
  std::size_t nv = m.ring()->ambient->nvars();
  GradedVectorData out;
  out.lo = lo;
  for (long d = lo; d <= hi; ++d) {
    long c = 0;
    for (int i = 0; i < m.ngens(); ++i) c += count_degree(nv, i, d - degs[i], lt);
    out.dims.push_back(c);
  }
  return out;
}

long total_k_dimension(const PresentedModule& m, const Limits& lim) {
  auto lt = lead_terms(m, lim);
  std::size_t nv = m.ring()->ambient->nvars();
  long count = 0;
  std::set<std::pair<int, Exp>> seen;
  std::queue<std::pair<int, Exp>> q;
  for (int i = 0; i < m.ngens(); ++i) q.push({i, Exp(nv, 0)});
  while (!q.empty()) {
    auto [pos, e] = q.front();
    q.pop();
    if (!seen.insert({pos, e}).second) continue;
    if (!is_standard(pos, e, lt)) continue;
    if (++count > 100000)
      throw cutoff_error("dimension enumeration exceeded its budget");
    for (std::size_t v = 0; v < nv; ++v) {
      Exp e2 = e;
      ++e2[v];
      q.push({pos, e2});
    }
  }
  return count;
}

GradedVectorData ext_by_dimension_shift(int n, const PresentedModule& m,
                                        const PresentedModule& nn, long lo, long hi,
                                        const Limits& lim) {
  if (n < 1) throw math_error("shift route needs n >= 1");
  if (!m.gen_degrees() || !nn.gen_degrees())
    throw math_error("shift route requires graded inputs");
  PresentedModule om = syzygy(n - 1, m, lim);
  PresentedModule e = ext_module(1, om, nn, lim);
  return graded_dimensions(e, lo, hi, lim);
}

bool artinian_thick_probe(const std::vector<PresentedModule>& gen_summands,
                          const PresentedModule& m, long dim_bound,
                          const Limits& lim) {
  if (gen_summands.empty()) return false;
  const QPtr& r = gen_summands.front().ring();
  if (r->dim != 0) throw math_error("probe only runs over zero-dimensional rings");

  struct Entry {
    PresentedModule mod;
    long dim;
  };
  std::map<std::string, Entry> S;
  auto add = [&](const PresentedModule& x) -> bool {
    std::string k = x.canonical_key(lim);
    if (S.count(k)) return false;
    long d = total_k_dimension(x, lim);
    if (d > dim_bound) return false;
    S.emplace(std::move(k), Entry{x, d});
    return true;
  };
  add(PresentedModule::zero(r));
  for (const auto& g : gen_summands) add(g);

  long mdim = total_k_dimension(m, lim);
  std::string mkey = m.canonical_key(lim);
  std::vector<Poly> vars;
  for (std::size_t v = 0; v < r->ambient->nvars(); ++v)
    vars.push_back(Poly::variable(r->ambient, v));
  std::string kkey = PresentedModule::cyclic(r, vars).canonical_key(lim);

  bool have_free1 = false;
  for (const auto& [k, e] : S)
    if (e.mod.is_free(lim) && e.mod.ngens() == 1) have_free1 = true;

  bool changed = true;
  while (changed) {
    changed = false;
    if (S.count(mkey)) return true;
    // length induction: once the residue field is available every
    // finite-length module has a filtration witnessing membership
    if (S.count(kkey) && mdim <= dim_bound) return true;
    std::vector<Entry> snapshot;
    for (const auto& [k, e] : S) snapshot.push_back(e);
    for (const auto& a : snapshot)
      for (const auto& b : snapshot) {
        if (a.dim + b.dim > dim_bound || a.dim == 0 || b.dim == 0) continue;
        if (add(direct_sum({a.mod, b.mod}))) changed = true;
      }
    if (have_free1)
      for (const auto& a : snapshot) {
        if (a.dim == 0 || a.mod.is_free(lim)) continue;
        if (add(syzygy(1, a.mod, lim))) changed = true;
      }
  }
  return S.count(mkey) > 0;
}

}  // namespace modgen
