#include "modgen/gb.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace modgen {

LeadTerm vec_lead(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return LeadTerm{static_cast<int>(i), &v[i].leading_term()};
  throw math_error("leading term of zero vector");
}

namespace {

// POT: earlier components dominate; within a component, the ring order.
// Returns +1 if (pa,ea) > (pb,eb).
int lead_cmp(const PolyRing& ring, int pa, const Exp& ea, int pb, const Exp& eb) {
  if (pa != pb) return pa < pb ? 1 : -1;
  return ring.cmp(ea, eb);
}

struct WorkElem {
  Vec vec;   // monic
  Vec rep;   // over original generators
};

struct Reducer {
  const RingPtr& ring;
  const std::vector<WorkElem>& basis;
  const std::vector<int>& alive;  // indices usable as reducers
  const Limits& lim;

  // Full normal form. cof (over basis indices, length basis.size()) is
  // updated so that on return  input = result + sum_k cof[k]*basis[k].vec
  // relative to its entry value.
  Vec reduce(Vec h, std::vector<Poly>* cof) const {
    const RingPtr& R = ring;
    Vec result = vec_zero(R, static_cast<int>(h.size()));
    long guard = 0;
    while (!vec_is_zero(h)) {
      if (++guard > 1000000) throw cutoff_error("reduction did not terminate");
      LeadTerm lt = vec_lead(h);
      if (total_degree(lt.term->exp) > lim.max_degree)
        throw cutoff_error("degree budget exhausted");
      bool reduced = false;
      for (int k : alive) {
        const Vec& g = basis[static_cast<std::size_t>(k)].vec;
        LeadTerm glt = vec_lead(g);
        if (glt.pos != lt.pos || !exp_divides(glt.term->exp, lt.term->exp)) continue;
        Exp q = exp_div(lt.term->exp, glt.term->exp);
        mpq_class c = R->field.div(lt.term->coeff, glt.term->coeff);
        h = vec_sub(h, vec_times_monomial(g, q, c, lim));
        if (cof) {
          auto& ck = (*cof)[static_cast<std::size_t>(k)];
          ck = ck + Poly::monomial(R, q, c);
        }
        reduced = true;
        break;
      }
      if (!reduced) {
        // move the irreducible lead term to the result
        Poly t = Poly::monomial(R, lt.term->exp, lt.term->coeff);
        result[static_cast<std::size_t>(lt.pos)] =
            result[static_cast<std::size_t>(lt.pos)] + t;
        h[static_cast<std::size_t>(lt.pos)] =
            h[static_cast<std::size_t>(lt.pos)] - t;
      }
    }
    return result;
  }
};

struct PairKey {
  long deg;
  Exp lcm;
  int pos;
  int i, j;
  bool operator<(const PairKey& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (lcm != o.lcm) return lcm < o.lcm;
    if (pos != o.pos) return pos < o.pos;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

}  // namespace

ModuleGB module_groebner(const RingPtr& ring, int rank, std::vector<Vec> gens,
                         const Limits& lim, bool track) {
  ModuleGB out;
  out.ring = ring;
  out.rank = rank;
  out.gens = gens;

  const std::size_t ngens = gens.size();
  std::vector<WorkElem> B;
  std::vector<int> alive;
  std::set<PairKey> pairs;

  auto add_pairs = [&](int idx) {
    LeadTerm lt = vec_lead(B[static_cast<std::size_t>(idx)].vec);
    for (int k = 0; k < idx; ++k) {
      LeadTerm kt = vec_lead(B[static_cast<std::size_t>(k)].vec);
      if (kt.pos != lt.pos) continue;
      Exp l = exp_lcm(kt.term->exp, lt.term->exp);
      if (!track) {
        // product criterion, valid in the rank-one (ideal) case only
        if (rank == 1) {
          Exp prod = exp_mul(kt.term->exp, lt.term->exp, lim);
          if (l == prod) continue;
        }
      }
      pairs.insert(PairKey{total_degree(l), l, lt.pos, k, idx});
    }
  };

  auto insert_elem = [&](Vec v, Vec rep) {
    LeadTerm lt = vec_lead(v);
    mpq_class lc = lt.term->coeff;
    mpq_class ilc = ring->field.inv(lc);
    v = vec_scaled(v, ilc);
    if (track) rep = vec_scaled(rep, ilc);
    B.push_back(WorkElem{std::move(v), std::move(rep)});
    int idx = static_cast<int>(B.size()) - 1;
    alive.push_back(idx);
    add_pairs(idx);
  };

  for (std::size_t i = 0; i < ngens; ++i) {
    if (vec_is_zero(gens[i])) {
      if (track) out.syzygies.push_back(unit_vec(ring, static_cast<int>(ngens),
                                                 static_cast<int>(i)));
      continue;
    }
    Vec rep = track ? unit_vec(ring, static_cast<int>(ngens), static_cast<int>(i))
                    : Vec{};
    insert_elem(gens[i], std::move(rep));
  }

  Reducer red{ring, B, alive, lim};
  long processed = 0;
  while (!pairs.empty()) {
    if (++processed > lim.max_pairs) throw cutoff_error("pair budget exhausted");
    PairKey pk = *pairs.begin();
    pairs.erase(pairs.begin());
    const WorkElem& a = B[static_cast<std::size_t>(pk.i)];
    const WorkElem& b = B[static_cast<std::size_t>(pk.j)];
    LeadTerm la = vec_lead(a.vec), lb = vec_lead(b.vec);
    Exp ua = exp_div(pk.lcm, la.term->exp);
    Exp ub = exp_div(pk.lcm, lb.term->exp);
    Vec s = vec_sub(vec_times_monomial(a.vec, ua, 1, lim),
                    vec_times_monomial(b.vec, ub, 1, lim));
    std::vector<Poly> cof;
    if (track) cof.assign(B.size(), Poly::zero(ring));
    Vec r = red.reduce(std::move(s), track ? &cof : nullptr);
    if (vec_is_zero(r)) {
      if (track) {
        // x^ua * B_i - x^ub * B_j - sum cof_k B_k = 0; rewrite over the gens
        cof[static_cast<std::size_t>(pk.i)] =
            cof[static_cast<std::size_t>(pk.i)] - Poly::monomial(ring, ua, 1);
        cof[static_cast<std::size_t>(pk.j)] =
            cof[static_cast<std::size_t>(pk.j)] + Poly::monomial(ring, ub, 1);
        Vec syz = vec_zero(ring, static_cast<int>(ngens));
        for (std::size_t k = 0; k < B.size(); ++k) {
          if (cof[k].is_zero()) continue;
          syz = vec_add(syz, vec_times_poly(B[k].rep, cof[k]));
        }
        if (!vec_is_zero(syz)) out.syzygies.push_back(std::move(syz));
      }
      continue;
    }
    Vec rep;
    if (track) {
      rep = vec_sub(vec_times_monomial(a.rep, ua, 1, lim),
                    vec_times_monomial(b.rep, ub, 1, lim));
      for (std::size_t k = 0; k < B.size(); ++k) {
        if (cof[k].is_zero()) continue;
        rep = vec_sub(rep, vec_times_poly(B[k].rep, cof[k]));
      }
    }
    insert_elem(std::move(r), std::move(rep));
  }

  // Minimalize: keep only elements with minimal leading terms.
  std::vector<int> kept;
  for (std::size_t i = 0; i < B.size(); ++i) {
    LeadTerm li = vec_lead(B[i].vec);
    bool minimal = true;
    for (std::size_t j = 0; j < B.size(); ++j) {
      if (i == j) continue;
      LeadTerm lj = vec_lead(B[j].vec);
      if (lj.pos != li.pos || !exp_divides(lj.term->exp, li.term->exp)) continue;
      if (lj.term->exp == li.term->exp && j > i) continue;  // keep the earlier one
      minimal = false;
      break;
    }
    if (minimal) kept.push_back(static_cast<int>(i));
  }

  // Tail-reduce each kept element against the others.
  std::vector<WorkElem> reduced;
  for (std::size_t idx = 0; idx < kept.size(); ++idx) {
    std::vector<int> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != idx) others.push_back(kept[j]);
    Reducer r2{ring, B, others, lim};
    std::vector<Poly> cof;
    if (track) cof.assign(B.size(), Poly::zero(ring));
    Vec v = r2.reduce(B[static_cast<std::size_t>(kept[idx])].vec,
                      track ? &cof : nullptr);
    Vec rep;
    if (track) {
      rep = B[static_cast<std::size_t>(kept[idx])].rep;
      for (std::size_t k = 0; k < B.size(); ++k) {
        if (cof[k].is_zero()) continue;
        rep = vec_sub(rep, vec_times_poly(B[k].rep, cof[k]));
      }
    }
    reduced.push_back(WorkElem{std::move(v), std::move(rep)});
  }

  std::vector<std::size_t> perm(reduced.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    LeadTerm lx = vec_lead(reduced[x].vec), ly = vec_lead(reduced[y].vec);
    return lead_cmp(*ring, lx.pos, lx.term->exp, ly.pos, ly.term->exp) > 0;
  });
  for (std::size_t i : perm) out.basis.push_back(reduced[i].vec);
  if (track) {
    out.basis_reps_.clear();
    for (std::size_t i : perm) out.basis_reps_.push_back(reduced[i].rep);
  }
  return out;
}

Vec module_nf(const Vec& v, const ModuleGB& gb, const Limits& lim) {
  std::vector<WorkElem> B;
  std::vector<int> alive;
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    B.push_back(WorkElem{gb.basis[i], Vec{}});
    alive.push_back(static_cast<int>(i));
  }
  Reducer red{gb.ring, B, alive, lim};
  return red.reduce(v, nullptr);
}

std::optional<Vec> module_lift(const Vec& v, const ModuleGB& gb, const Limits& lim) {
  if (gb.basis_reps_.size() != gb.basis.size())
    throw math_error("lift requires a syzygy-tracked basis");
  std::vector<WorkElem> B;
  std::vector<int> alive;
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    B.push_back(WorkElem{gb.basis[i], Vec{}});
    alive.push_back(static_cast<int>(i));
  }
  Reducer red{gb.ring, B, alive, lim};
  std::vector<Poly> cof(B.size(), Poly::zero(gb.ring));
  Vec r = red.reduce(v, &cof);
  if (!vec_is_zero(r)) return std::nullopt;
  Vec lift = vec_zero(gb.ring, static_cast<int>(gb.gens.size()));
  for (std::size_t k = 0; k < cof.size(); ++k) {
    if (cof[k].is_zero()) continue;
    lift = vec_add(lift, vec_times_poly(gb.basis_reps_[k], cof[k]));
  }
  return lift;
}

// --- Ideal ------------------------------------------------------------------

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  for (const auto& g : gens_)
    if (!g.ring()->same_as(*ring_)) throw ring_mismatch("generator in wrong ring");
}

const ModuleGB& Ideal::gb(const Limits& lim) const {
  std::call_once(cache_->flag, [&] {
    std::vector<Vec> cols;
    for (const auto& g : gens_) cols.push_back(Vec{g});
    cache_->gb = module_groebner(ring_, 1, std::move(cols), lim, false);
  });
  return cache_->gb;
}

bool Ideal::is_zero_ideal() const {
  for (const auto& g : gens_)
    if (!g.is_zero()) return false;
  return true;
}

bool Ideal::is_unit_ideal(const Limits& lim) const {
  return contains(Poly::constant(ring_, 1), lim);
}

bool Ideal::contains(const Poly& f, const Limits& lim) const {
  return nf(f, lim).is_zero();
}

Poly Ideal::nf(const Poly& f, const Limits& lim) const {
  return module_nf(Vec{f}, gb(lim), lim)[0];
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

bool radical_membership(const Poly& f, const Ideal& I, const Limits& lim) {
  if (f.is_zero()) return true;
  const RingPtr& R = I.ring();
  std::string tname = "t_";
  while (R->var_index(tname) >= 0) tname += "_";
  auto vars = R->vars;
  vars.push_back(tname);
  RingPtr ext = PolyRing::make(R->field, vars, MonomialOrder{});
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(promote(g, ext));
  Poly t = Poly::variable(ext, static_cast<int>(ext->nvars()) - 1);
  gens.push_back(Poly::constant(ext, 1) - t * promote(f, ext));
  Ideal J(ext, std::move(gens));
  return J.is_unit_ideal(lim);
}

Ideal ideal_quotient(const Ideal& I, const Poly& f, const Limits& lim) {
  const RingPtr& R = I.ring();
  if (f.is_zero())
    return Ideal(R, {Poly::constant(R, 1)});
  std::vector<Vec> cols;
  cols.push_back(Vec{f});
  for (const auto& g : I.gens()) cols.push_back(Vec{g});
  auto syz = syzygy_basis(R, 1, cols, lim);
  std::vector<Poly> qgens;
  for (const auto& s : syz)
    if (!s[0].is_zero()) qgens.push_back(s[0].monic());
  std::sort(qgens.begin(), qgens.end(),
            [](const Poly& a, const Poly& b) { return Poly::cmp(a, b) > 0; });
  qgens.erase(std::unique(qgens.begin(), qgens.end()), qgens.end());
  return Ideal(R, std::move(qgens));
}

Ideal ideal_sum(const Ideal& I, const std::vector<Poly>& more) {
  auto gens = I.gens();
  for (const auto& f : more) gens.push_back(f);
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J, const Limits& lim) {
  const RingPtr& R = I.ring();
  std::vector<Vec> cols;
  Poly one = Poly::constant(R, 1);
  cols.push_back(Vec{one, one});
  for (const auto& g : I.gens()) cols.push_back(Vec{g, Poly::zero(R)});
  for (const auto& h : J.gens()) cols.push_back(Vec{Poly::zero(R), h});
  auto syz = syzygy_basis(R, 2, cols, lim);
  std::vector<Poly> gens;
  for (const auto& s : syz)
    if (!s[0].is_zero()) gens.push_back((-s[0]).monic());
  std::sort(gens.begin(), gens.end(),
            [](const Poly& a, const Poly& b) { return Poly::cmp(a, b) > 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return Ideal(R, std::move(gens));
}

int saturation_index(const Poly& f, const Ideal& I, const Limits& lim) {
  if (!radical_membership(f, I, lim))
    throw math_error("no finite index: element is not in the radical");
  Poly p = Poly::constant(I.ring(), 1);
  for (int a = 0;; ++a) {
    if (I.contains(p, lim)) return a;
    if (a > 512) throw cutoff_error("saturation index search exceeded budget");
    p = p * f;
  }
}

int krull_dimension(const Ideal& I, const Limits& lim) {
  if (I.is_unit_ideal(lim)) return -1;
  const auto& basis = I.gb(lim).basis;
  std::vector<Exp> lts;
  for (const auto& v : basis) lts.push_back(vec_lead(v).term->exp);
  const int n = static_cast<int>(I.ring()->nvars());
  if (n > 24) throw cutoff_error("too many variables for dimension computation");
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& e : lts) {
      bool inside = true;
      for (int v = 0; v < n; ++v)
        if (e[static_cast<std::size_t>(v)] > 0 && !(mask & (1u << v))) {
          inside = false;
          break;
        }
      if (inside) {  // some leading monomial lives inside the candidate set
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::vector<Vec> syzygy_basis(const RingPtr& ring, int rank,
                              const std::vector<Vec>& cols, const Limits& lim) {
  auto gb = module_groebner(ring, rank, cols, lim, true);
  return gb.syzygies;
}

}  // namespace modgen
