#include "modgen/module.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "modgen/errors.hpp"

namespace modgen {

// ---------------------------------------------------------------- QuotientRing

QPtr QuotientRing::make(RingPtr ambient, std::vector<Poly> gens, const Limits& lim) {
  std::vector<Poly> kept;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.ring() && !g.ring()->same_as(*ambient)) throw ring_mismatch("quotient generator in wrong ring");
    kept.push_back(g);
  }
  auto q = std::make_shared<QuotientRing>();
  q->ambient = std::move(ambient);
  q->defining = Ideal(q->ambient, std::move(kept));
  q->dim = krull_dimension(q->defining, lim);
  return q;
}

QPtr QuotientRing::quotient_by(const QPtr& base, const std::vector<Poly>& more,
                               const Limits& lim) {
  std::vector<Poly> gens = base->defining.gens();
  gens.insert(gens.end(), more.begin(), more.end());
  return make(base->ambient, std::move(gens), lim);
}

bool QuotientRing::same_as(const QuotientRing& o) const {
  if (!ambient->same_as(*o.ambient)) return false;
  const auto& a = defining.gb().basis;
  const auto& b = o.defining.gb().basis;
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!vec_eq(a[i], b[i])) return false;
  return true;
}

std::string QuotientRing::to_string() const {
  std::ostringstream os;
  os << ambient->field.name() << "[";
  for (std::size_t i = 0; i < ambient->vars.size(); ++i) {
    if (i) os << ",";
    os << ambient->vars[i];
  }
  os << "]";
  if (!defining.is_zero_ideal()) {
    os << "/(";
    const auto& gs = defining.gens();
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (i) os << ", ";
      os << gs[i].to_string();
    }
    os << ")";
  }
  return os.str();
}

// columns g*e_i for g in the reduced GB of the defining ideal
static std::vector<Vec> fold_ie(const QPtr& ring, int rank, const Limits& lim) {
  std::vector<Vec> out;
  for (const auto& b : ring->defining.gb(lim).basis) {
    for (int i = 0; i < rank; ++i) {
      Vec v = vec_zero(ring->ambient, rank);
      v[i] = b[0];
      out.push_back(std::move(v));
    }
  }
  return out;
}

// ------------------------------------------------------------- PresentedModule

struct PresentedModule::Cache {
  std::once_flag flag;
  ModuleGB gb;
};

PresentedModule::PresentedModule(QPtr ring, int ngens, std::vector<Vec> relations,
                                 std::optional<std::vector<long>> gen_degrees)
    : ring_(std::move(ring)),
      ngens_(ngens),
      degrees_(std::move(gen_degrees)),
      cache_(std::make_shared<Cache>()) {
  if (ngens_ < 0) throw math_error("negative generator count");
  for (auto& r : relations) {
    if ((int)r.size() != ngens_) throw math_error("relation length != generator count");
    if (!vec_is_zero(r)) relations_.push_back(std::move(r));
  }
  if (degrees_ && (int)degrees_->size() != ngens_)
    throw math_error("degree list length != generator count");
}

PresentedModule PresentedModule::free_module(QPtr ring, int rank) {
  return PresentedModule(std::move(ring), rank, {}, std::vector<long>(rank, 0));
}

PresentedModule PresentedModule::cyclic(QPtr ring, std::vector<Poly> ideal_gens) {
  std::vector<Vec> rels;
  for (auto& g : ideal_gens)
    if (!g.is_zero()) rels.push_back(Vec{std::move(g)});
  return PresentedModule(std::move(ring), 1, std::move(rels), std::vector<long>{0});
}

const ModuleGB& PresentedModule::rel_gb(const Limits& lim) const {
  std::call_once(cache_->flag, [&] {
    std::vector<Vec> gens = relations_;
    auto ie = fold_ie(ring_, ngens_, lim);
    gens.insert(gens.end(), ie.begin(), ie.end());
    cache_->gb = module_groebner(ring_->ambient, ngens_, std::move(gens), lim);
  });
  return cache_->gb;
}

Vec PresentedModule::nf(const Vec& v, const Limits& lim) const {
  if (ngens_ == 0) return {};
  return module_nf(v, rel_gb(lim), lim);
}

bool PresentedModule::elem_is_zero(const Vec& v, const Limits& lim) const {
  return vec_is_zero(nf(v, lim));
}

bool PresentedModule::is_zero_module(const Limits& lim) const {
  for (int i = 0; i < ngens_; ++i)
    if (!elem_is_zero(unit_vec(ring_->ambient, ngens_, i), lim)) return false;
  return true;
}

bool PresentedModule::is_free(const Limits& lim) const {
  for (const auto& r : relations_)
    for (const auto& f : r)
      if (!ring_->defining.nf(f, lim).is_zero()) return false;
  return true;
}

std::string PresentedModule::canonical_key(const Limits& lim) const {
  std::ostringstream os;
  os << ngens_ << "|" << ring_->to_string() << "|";
  for (const auto& b : rel_gb(lim).basis) os << vec_to_string(b) << ";";
  return os.str();
}

// ------------------------------------------------------------------ ModuleMap

Vec ModuleMap::apply(const Vec& v, const Limits& lim) const {
  if ((int)v.size() != src.ngens()) throw math_error("vector length != source rank");
  Vec out = vec_zero(tgt.ring()->ambient, tgt.ngens());
  for (int j = 0; j < src.ngens(); ++j)
    if (!v[j].is_zero()) out = vec_add(out, vec_times_poly(cols[j], v[j]));
  return tgt.nf(out, lim);
}

ModuleMap make_map(PresentedModule src, PresentedModule tgt, std::vector<Vec> cols,
                   const Limits& lim) {
  if (!src.ring()->same_as(*tgt.ring())) throw ring_mismatch("map between different rings");
  if ((int)cols.size() != src.ngens()) throw math_error("column count != source rank");
  for (const auto& c : cols)
    if ((int)c.size() != tgt.ngens()) throw math_error("column length != target rank");
  for (const auto& r : src.relations()) {
    Vec im = vec_zero(tgt.ring()->ambient, tgt.ngens());
    for (int j = 0; j < src.ngens(); ++j)
      if (!r[j].is_zero()) im = vec_add(im, vec_times_poly(cols[j], r[j]));
    if (!tgt.elem_is_zero(im, lim)) throw math_error("map is not well defined");
  }
  ModuleMap m;
  m.src = std::move(src);
  m.tgt = std::move(tgt);
  m.cols = std::move(cols);
  return m;
}

ModuleMap identity_map(const PresentedModule& m) {
  std::vector<Vec> cols;
  for (int j = 0; j < m.ngens(); ++j)
    cols.push_back(unit_vec(m.ring()->ambient, m.ngens(), j));
  return ModuleMap{m, m, std::move(cols)};
}

ModuleMap zero_map(const PresentedModule& src, const PresentedModule& tgt) {
  std::vector<Vec> cols(src.ngens(), vec_zero(tgt.ring()->ambient, tgt.ngens()));
  return ModuleMap{src, tgt, std::move(cols)};
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f, const Limits& lim) {
  if (f.tgt.canonical_key(lim) != g.src.canonical_key(lim))
    throw math_error("maps are not composable");
  std::vector<Vec> cols;
  for (int j = 0; j < f.src.ngens(); ++j) cols.push_back(g.apply(f.cols[j], lim));
  return ModuleMap{f.src, g.tgt, std::move(cols)};
}

bool map_is_zero(const ModuleMap& m, const Limits& lim) {
  for (const auto& c : m.cols)
    if (!m.tgt.elem_is_zero(c, lim)) return false;
  return true;
}

bool maps_equal(const ModuleMap& a, const ModuleMap& b, const Limits& lim) {
  if (a.src.ngens() != b.src.ngens() || a.tgt.ngens() != b.tgt.ngens()) return false;
  for (std::size_t j = 0; j < a.cols.size(); ++j)
    if (!a.tgt.elem_is_zero(vec_sub(a.cols[j], b.cols[j]), lim)) return false;
  return true;
}

// ----------------------------------------------------- submodules, subquotients

std::vector<Vec> preimage_cols(const QPtr& ring, int rank,
                               const std::vector<Vec>& mat_cols,
                               const std::vector<Vec>& target_sub,
                               const Limits& lim) {
  const auto& A = ring->ambient;
  int k = (int)mat_cols.size();
  std::vector<Vec> all;
  std::vector<int> slot(k, -1);  // position of mat col j in the nonzero list
  int live = 0;
  for (int j = 0; j < k; ++j) {
    if (vec_is_zero(mat_cols[j])) continue;
    slot[j] = live++;
    all.push_back(mat_cols[j]);
  }
  for (const auto& t : target_sub)
    if (!vec_is_zero(t)) all.push_back(t);
  auto ie = fold_ie(ring, rank, lim);
  all.insert(all.end(), ie.begin(), ie.end());

  std::vector<Vec> out;
  // a zero matrix column is unconstrained
  for (int j = 0; j < k; ++j)
    if (slot[j] < 0) out.push_back(unit_vec(A, k, j));
  if (live > 0) {
    ModuleGB gb = module_groebner(A, rank, std::move(all), lim, /*track=*/true);
    for (const auto& s : gb.syzygies) {
      Vec v = vec_zero(A, k);
      bool nz = false;
      for (int j = 0; j < k; ++j)
        if (slot[j] >= 0 && !s[slot[j]].is_zero()) {
          v[j] = s[slot[j]];
          nz = true;
        }
      if (nz) out.push_back(std::move(v));
    }
  }
  return out;
}

std::optional<Vec> express_in(const QPtr& ring, int rank, const Vec& target,
                              const std::vector<Vec>& gens,
                              const std::vector<Vec>& extra, const Limits& lim) {
  const auto& A = ring->ambient;
  int k = (int)gens.size();
  std::vector<Vec> all;
  std::vector<int> slot(k, -1);
  int live = 0;
  for (int j = 0; j < k; ++j) {
    if (vec_is_zero(gens[j])) continue;
    slot[j] = live++;
    all.push_back(gens[j]);
  }
  for (const auto& t : extra)
    if (!vec_is_zero(t)) all.push_back(t);
  auto ie = fold_ie(ring, rank, lim);
  all.insert(all.end(), ie.begin(), ie.end());
  ModuleGB gb = module_groebner(A, rank, std::move(all), lim, /*track=*/true);
  auto lifted = module_lift(target, gb, lim);
  if (!lifted) return std::nullopt;
  Vec out = vec_zero(A, k);
  for (int j = 0; j < k; ++j)
    if (slot[j] >= 0) out[j] = (*lifted)[slot[j]];
  return out;
}

// is v homogeneous for the given position degrees, and of what degree?
static std::optional<long> vec_degree(const Vec& v, const std::vector<long>& pos_deg) {
  std::optional<long> d;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!v[i].is_homogeneous()) return std::nullopt;
    long di = v[i].degree() + pos_deg[i];
    if (d && *d != di) return std::nullopt;
    d = di;
  }
  return d ? d : std::optional<long>(0);
}

Subquotient present_subquotient(const QPtr& ring, int rank, std::vector<Vec> K,
                                std::vector<Vec> L, const Limits& lim,
                                const std::optional<std::vector<long>>& ambient_degs,
                                bool minimize) {
  const auto& A = ring->ambient;

  std::vector<Vec> gens;
  if (minimize) {
    // canonicalize the K generators modulo L + I and drop the redundant ones
    std::vector<Vec> lbase = L;
    {
      auto ie = fold_ie(ring, rank, lim);
      lbase.insert(lbase.end(), ie.begin(), ie.end());
    }
    ModuleGB lgb = module_groebner(A, rank, lbase, lim);
    for (auto& k : K) {
      Vec r = module_nf(k, lgb, lim);
      if (vec_is_zero(r)) continue;
      bool dup = false;
      for (const auto& g : gens)
        if (vec_eq(g, r)) { dup = true; break; }
      if (!dup) gens.push_back(std::move(r));
    }
  } else {
    // keep the generator list literally (callers rely on index alignment)
    for (auto& k : K) {
      if (vec_is_zero(k)) throw math_error("zero generator in unminimized presentation");
      gens.push_back(std::move(k));
    }
  }
  int g = (int)gens.size();
  if (g == 0) return {PresentedModule::zero(ring), {}};

  // relations: syzygies of [gens | L | I*e] restricted to the gens block
  std::vector<Vec> all = gens;
  for (const auto& t : L)
    if (!vec_is_zero(t)) all.push_back(t);
  {
    auto ie = fold_ie(ring, rank, lim);
    all.insert(all.end(), ie.begin(), ie.end());
  }
  ModuleGB gb = module_groebner(A, rank, std::move(all), lim, /*track=*/true);
  std::vector<Vec> rels;
  for (const auto& s : gb.syzygies) {
    Vec v(g, Poly::zero(A));
    bool nz = false;
    for (int j = 0; j < g; ++j) {
      v[j] = ring->defining.nf(s[j], lim);
      if (!v[j].is_zero()) nz = true;
    }
    if (nz) rels.push_back(std::move(v));
  }

  // eliminate generators hit by a unit relation entry
  std::vector<Vec> wit = gens;
  bool changed = minimize;
  while (changed) {
    changed = false;
    int ci = -1, ri = -1;
    for (std::size_t c = 0; c < rels.size() && ci < 0; ++c)
      for (std::size_t i = 0; i < rels[c].size(); ++i)
        if (!rels[c][i].is_zero() && rels[c][i].is_constant()) {
          ci = (int)c;
          ri = (int)i;
          break;
        }
    if (ci < 0) break;
    mpq_class u = rels[ci][ri].leading_term().coeff;
    Vec pivot = rels[ci];
    std::vector<Vec> next;
    for (std::size_t c = 0; c < rels.size(); ++c) {
      if ((int)c == ci) continue;
      Vec v = rels[c];
      if (!v[ri].is_zero()) {
        Poly factor = v[ri].scaled(mpq_class(1) / u);
        for (std::size_t i = 0; i < v.size(); ++i)
          v[i] = ring->defining.nf(v[i] - factor * pivot[i], lim);
      }
      v.erase(v.begin() + ri);
      if (!vec_is_zero(v)) next.push_back(std::move(v));
    }
    rels = std::move(next);
    wit.erase(wit.begin() + ri);
    changed = true;
  }
  g = (int)wit.size();
  if (g == 0) return {PresentedModule::zero(ring), {}};

  // canonical clean-up of the relation list
  std::sort(rels.begin(), rels.end(), [](const Vec& a, const Vec& b) {
    return vec_cmp(a, b) > 0;
  });
  rels.erase(std::unique(rels.begin(), rels.end(),
                         [](const Vec& a, const Vec& b) { return vec_eq(a, b); }),
             rels.end());

  // grading, when everything in sight is homogeneous
  std::optional<std::vector<long>> degs;
  if (ambient_degs && (int)ambient_degs->size() == rank) {
    bool ok = true;
    for (const auto& f : ring->defining.gens())
      if (!f.is_homogeneous()) ok = false;
    std::vector<long> d;
    for (const auto& w : wit) {
      auto dw = ok ? vec_degree(w, *ambient_degs) : std::nullopt;
      if (!dw) { ok = false; break; }
      d.push_back(*dw);
    }
    if (ok)
      for (const auto& r : rels)
        if (!vec_degree(r, d)) { ok = false; break; }
    if (ok) degs = std::move(d);
  }

  return {PresentedModule(ring, g, std::move(rels), std::move(degs)), std::move(wit)};
}

// ----------------------------------------------------------------- syzygies

Subquotient syzygy_embedded(const PresentedModule& m, const Limits& lim) {
  return present_subquotient(m.ring(), m.ngens(), m.relations(), {}, lim,
                             m.gen_degrees());
}

PresentedModule syzygy(int n, const PresentedModule& m, const Limits& lim) {
  if (n < 0) throw math_error("negative syzygy index");
  if (n > lim.max_resolution) throw cutoff_error("resolution length limit exceeded");
  PresentedModule cur = m;
  for (int i = 0; i < n; ++i) {
    if (cur.ngens() == 0) return cur;
    cur = syzygy_embedded(cur, lim).module;
  }
  return cur;
}

struct FreeResolution::State {
  std::mutex mu;
  std::vector<PresentedModule> omegas;     // omegas[j] = Omega^j, omegas[0] = M
  std::vector<std::vector<Vec>> diffs;     // diffs[j] = d_j columns, diffs[0] unused
};

FreeResolution::FreeResolution(PresentedModule m)
    : module_(std::move(m)), state_(std::make_shared<State>()) {
  state_->omegas.push_back(module_);
  state_->diffs.emplace_back();
}

void FreeResolution::extend_to(int n, const Limits& lim) {
  if (n > lim.max_resolution) throw cutoff_error("resolution length limit exceeded");
  std::lock_guard<std::mutex> lock(state_->mu);
  while ((int)state_->diffs.size() <= n) {
    const PresentedModule& cur = state_->omegas.back();
    if (cur.ngens() == 0) {
      state_->omegas.push_back(cur);
      state_->diffs.emplace_back();
      continue;
    }
    Subquotient sq = syzygy_embedded(cur, lim);
    state_->diffs.push_back(sq.witnesses);
    state_->omegas.push_back(sq.module);
  }
}

int FreeResolution::computed_length() const {
  std::lock_guard<std::mutex> lock(state_->mu);
  return (int)state_->diffs.size() - 1;
}

int FreeResolution::rank(int j, const Limits& lim) {
  extend_to(j, lim);
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->omegas[j].ngens();
}

const std::vector<Vec>& FreeResolution::differential(int j, const Limits& lim) {
  if (j < 1) throw math_error("differential index must be >= 1");
  extend_to(j, lim);
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->diffs[j];
}

const PresentedModule& FreeResolution::syzygy_at(int j, const Limits& lim) {
  extend_to(j, lim);
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->omegas[j];
}

bool FreeResolution::terminated_by(int n, const Limits& lim) {
  extend_to(n, lim);
  std::lock_guard<std::mutex> lock(state_->mu);
  for (int j = 0; j <= n && j < (int)state_->omegas.size(); ++j)
    if (state_->omegas[j].ngens() == 0) return true;
  return false;
}

// ----------------------------------------------------------------- Hom / Ext

// column of the matrix E_{ij} |-> E_{ij} * d, flattened as position t*h + i
// for source block t; d given as columns d[t] of length (rows of the source).
static Vec times_embedding_col(const RingPtr& A, int h, int i, int j,
                               const std::vector<Vec>& d) {
  int blocks = (int)d.size();
  Vec v = vec_zero(A, h * blocks);
  for (int t = 0; t < blocks; ++t) v[t * h + i] = d[t][j];
  return v;
}

static std::vector<Vec> blockwise(const RingPtr& A, int h, int blocks,
                                  const std::vector<Vec>& rels) {
  std::vector<Vec> out;
  for (int t = 0; t < blocks; ++t)
    for (const auto& r : rels) {
      Vec v = vec_zero(A, h * blocks);
      for (int i = 0; i < h; ++i) v[t * h + i] = r[i];
      out.push_back(std::move(v));
    }
  return out;
}

HomModule hom_module(const PresentedModule& m, const PresentedModule& n,
                     const Limits& lim) {
  if (!m.ring()->same_as(*n.ring())) throw ring_mismatch("Hom between different rings");
  const auto& ring = m.ring();
  const auto& A = ring->ambient;
  int h = n.ngens(), g = m.ngens();
  HomModule out;
  out.src = m;
  out.tgt = n;
  if (h == 0 || g == 0) {
    out.mod = PresentedModule::zero(ring);
    return out;
  }

  const auto& relsM = m.relations();
  int nrel = (int)relsM.size();
  std::vector<Vec> K;
  if (nrel == 0) {
    for (int q = 0; q < h * g; ++q) K.push_back(unit_vec(A, h * g, q));
  } else {
    // condition: the matrix sends every relation of M into relations of N
    std::vector<Vec> psi;
    std::vector<Vec> drel;  // relation matrix of M as columns indexed by relation
    for (int t = 0; t < nrel; ++t) drel.push_back(relsM[t]);
    for (int j = 0; j < g; ++j)
      for (int i = 0; i < h; ++i)
        psi.push_back(times_embedding_col(A, h, i, j, drel));
    // flat index in psi is i + j*h == q; keep that pairing below
    std::vector<Vec> psi_ordered(h * g);
    {
      int idx = 0;
      for (int j = 0; j < g; ++j)
        for (int i = 0; i < h; ++i) psi_ordered[j * h + i] = std::move(psi[idx++]);
    }
    K = preimage_cols(ring, h * nrel, psi_ordered,
                      blockwise(A, h, nrel, n.relations()), lim);
  }
  std::vector<Vec> L = blockwise(A, h, g, n.relations());

  std::optional<std::vector<long>> amb;
  if (m.gen_degrees() && n.gen_degrees()) {
    std::vector<long> d(h * g);
    for (int j = 0; j < g; ++j)
      for (int i = 0; i < h; ++i)
        d[j * h + i] = (*n.gen_degrees())[i] - (*m.gen_degrees())[j];
    amb = std::move(d);
  }

  Subquotient sq = present_subquotient(ring, h * g, std::move(K), std::move(L), lim, amb);
  out.mod = sq.module;
  for (const auto& w : sq.witnesses) {
    std::vector<Vec> cols(g, vec_zero(A, h));
    for (int j = 0; j < g; ++j)
      for (int i = 0; i < h; ++i) cols[j][i] = w[j * h + i];
    out.gen_maps.push_back(std::move(cols));
  }
  return out;
}

ModuleMap hom_element(const HomModule& h, const Vec& coeffs, const Limits& lim) {
  if ((int)coeffs.size() != h.mod.ngens()) throw math_error("coefficient length mismatch");
  const auto& A = h.src.ring()->ambient;
  std::vector<Vec> cols(h.src.ngens(), vec_zero(A, h.tgt.ngens()));
  for (int k = 0; k < h.mod.ngens(); ++k) {
    if (coeffs[k].is_zero()) continue;
    for (int j = 0; j < h.src.ngens(); ++j)
      cols[j] = vec_add(cols[j], vec_times_poly(h.gen_maps[k][j], coeffs[k]));
  }
  return make_map(h.src, h.tgt, std::move(cols), lim);
}

PresentedModule ext_module(int n, const PresentedModule& m, const PresentedModule& nn,
                           const Limits& lim) {
  if (n < 0) throw math_error("negative Ext index");
  if (!m.ring()->same_as(*nn.ring())) throw ring_mismatch("Ext between different rings");
  if (n == 0) return hom_module(m, nn, lim).mod;
  const auto& ring = m.ring();
  const auto& A = ring->ambient;

  // free cover ranks g[j] and embedding matrices d[j] : F_j -> F_{j-1}
  std::vector<int> grank{m.ngens()};
  std::vector<std::vector<Vec>> d(1);  // d[0] unused
  std::vector<std::optional<std::vector<long>>> fdeg{m.gen_degrees()};
  PresentedModule cur = m;
  for (int j = 1; j <= n + 1; ++j) {
    if (cur.ngens() == 0) {
      grank.push_back(0);
      d.push_back({});
      fdeg.push_back(std::vector<long>{});
      continue;
    }
    Subquotient sq = syzygy_embedded(cur, lim);
    d.push_back(sq.witnesses);
    cur = sq.module;
    grank.push_back(cur.ngens());
    fdeg.push_back(cur.gen_degrees());
  }

  int h = nn.ngens();
  int gn = grank[n];
  if (h == 0 || gn == 0) return PresentedModule::zero(ring);

  std::vector<Vec> K;
  if (grank[n + 1] == 0) {
    for (int q = 0; q < h * gn; ++q) K.push_back(unit_vec(A, h * gn, q));
  } else {
    std::vector<Vec> psi(h * gn);
    for (int j = 0; j < gn; ++j)
      for (int i = 0; i < h; ++i)
        psi[j * h + i] = times_embedding_col(A, h, i, j, d[n + 1]);
    K = preimage_cols(ring, h * grank[n + 1], psi,
                      blockwise(A, h, grank[n + 1], nn.relations()), lim);
  }

  std::vector<Vec> L = blockwise(A, h, gn, nn.relations());
  // coboundaries: images of Hom(F_{n-1}, N) under composition with d[n]
  for (int j = 0; j < grank[n - 1]; ++j)
    for (int i = 0; i < h; ++i) {
      Vec v = times_embedding_col(A, h, i, j, d[n]);
      if (!vec_is_zero(v)) L.push_back(std::move(v));
    }

  std::optional<std::vector<long>> amb;
  if (nn.gen_degrees() && fdeg[n]) {
    std::vector<long> dd(h * gn);
    for (int t = 0; t < gn; ++t)
      for (int i = 0; i < h; ++i)
        dd[t * h + i] = (*nn.gen_degrees())[i] - (*fdeg[n])[t];
    amb = std::move(dd);
  }

  return present_subquotient(ring, h * gn, std::move(K), std::move(L), lim, amb).module;
}

// ---------------------------------------------------------------- annihilator

Ideal annihilator(const PresentedModule& m, const Limits& lim) {
  const auto& ring = m.ring();
  const auto& A = ring->ambient;
  if (m.ngens() == 0) return Ideal(A, {Poly::constant(A, 1)});
  std::optional<Ideal> acc;
  for (int i = 0; i < m.ngens(); ++i) {
    std::vector<Vec> cols{unit_vec(A, m.ngens(), i)};
    auto pre = preimage_cols(ring, m.ngens(), cols, m.relations(), lim);
    std::vector<Poly> gens;
    for (const auto& v : pre)
      if (!v[0].is_zero()) gens.push_back(v[0]);
    Ideal qi(A, std::move(gens));
    acc = acc ? ideal_intersect(*acc, qi, lim) : qi;
  }
  return *acc;
}

// --------------------------------------------------------- projective dimension

bool is_pd_le(const PresentedModule& m, int n, const Limits& lim) {
  if (n < 0) return m.is_zero_module(lim);
  PresentedModule om = syzygy(n + 1, m, lim);
  return ext_module(n + 1, m, om, lim).is_zero_module(lim);
}

std::optional<int> localized_pd(const PresentedModule& m, const Poly& f,
                                const Limits& lim) {
  if (f.is_zero()) throw math_error("cannot localize at zero");
  int top = std::max(m.ring()->dim, 0);
  for (int n = 0; n <= top; ++n) {
    PresentedModule om = syzygy(n + 1, m, lim);
    PresentedModule e = ext_module(n + 1, m, om, lim);
    if (radical_membership(f, annihilator(e, lim), lim)) return n;
  }
  return std::nullopt;
}

// ------------------------------------------------------------------ exactness

ExactnessReport exactness_check(const std::vector<ModuleMap>& maps, const Limits& lim) {
  ExactnessReport rep;
  int k = (int)maps.size();
  if (k == 0) {
    rep.ok = false;
    rep.position = 0;
    rep.reason = "empty chain";
    return rep;
  }
  const auto& ring = maps[0].src.ring();
  const auto& A = ring->ambient;

  // kernel generators of map i, as ambient vectors over the source
  auto kernel_of = [&](const ModuleMap& f) {
    return preimage_cols(ring, f.tgt.ngens(), f.cols, f.tgt.relations(), lim);
  };

  // position 0: injectivity at the left end
  for (const auto& v : kernel_of(maps[0]))
    if (!maps[0].src.elem_is_zero(v, lim)) {
      rep.ok = false;
      rep.position = 0;
      rep.reason = "left map has kernel " + vec_to_string(v);
      return rep;
    }

  // interior nodes
  for (int i = 1; i < k; ++i) {
    const ModuleMap& in = maps[i - 1];
    const ModuleMap& out = maps[i];
    if (in.tgt.ngens() != out.src.ngens()) throw math_error("chain is not composable");
    // image inside kernel: the composite must vanish
    for (int j = 0; j < in.src.ngens(); ++j) {
      Vec im = out.apply(in.cols[j], lim);
      if (!vec_is_zero(im)) {
        rep.ok = false;
        rep.position = i;
        rep.reason = "composite is nonzero at node " + std::to_string(i);
        return rep;
      }
    }
    // kernel inside image
    std::vector<Vec> modulo = in.cols;
    const auto& rels = out.src.relations();
    modulo.insert(modulo.end(), rels.begin(), rels.end());
    auto ie = fold_ie(ring, out.src.ngens(), lim);
    modulo.insert(modulo.end(), ie.begin(), ie.end());
    ModuleGB gb = module_groebner(A, out.src.ngens(), std::move(modulo), lim);
    for (const auto& v : kernel_of(out))
      if (!vec_is_zero(module_nf(v, gb, lim))) {
        rep.ok = false;
        rep.position = i;
        rep.reason = "kernel exceeds image at node " + std::to_string(i);
        return rep;
      }
  }

  // position k: surjectivity at the right end
  {
    const ModuleMap& last = maps.back();
    std::vector<Vec> modulo = last.cols;
    const auto& rels = last.tgt.relations();
    modulo.insert(modulo.end(), rels.begin(), rels.end());
    auto ie = fold_ie(ring, last.tgt.ngens(), lim);
    modulo.insert(modulo.end(), ie.begin(), ie.end());
    ModuleGB gb = module_groebner(A, last.tgt.ngens(), std::move(modulo), lim);
    for (int i = 0; i < last.tgt.ngens(); ++i)
      if (!vec_is_zero(module_nf(unit_vec(A, last.tgt.ngens(), i), gb, lim))) {
        rep.ok = false;
        rep.position = k;
        rep.reason = "right map misses generator " + std::to_string(i);
        return rep;
      }
  }
  return rep;
}

// ------------------------------------------------------------------ direct sum

PresentedModule direct_sum(const std::vector<PresentedModule>& parts) {
  if (parts.empty()) throw math_error("empty direct sum");
  const auto& ring = parts[0].ring();
  const auto& A = ring->ambient;
  int total = 0;
  bool graded = true;
  for (const auto& p : parts) {
    if (!p.ring()->same_as(*ring)) throw ring_mismatch("direct sum across rings");
    total += p.ngens();
    graded = graded && p.gen_degrees().has_value();
  }
  std::vector<Vec> rels;
  std::vector<long> degs;
  int off = 0;
  for (const auto& p : parts) {
    for (const auto& r : p.relations()) {
      Vec v = vec_zero(A, total);
      for (int i = 0; i < p.ngens(); ++i) v[off + i] = r[i];
      rels.push_back(std::move(v));
    }
    if (graded)
      degs.insert(degs.end(), p.gen_degrees()->begin(), p.gen_degrees()->end());
    off += p.ngens();
  }
  return PresentedModule(ring, total, std::move(rels),
                         graded ? std::optional<std::vector<long>>(std::move(degs))
                                : std::nullopt);
}

}  // namespace modgen
