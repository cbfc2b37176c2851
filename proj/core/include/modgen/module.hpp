#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modgen/gb.hpp"
#include "modgen/poly.hpp"

namespace modgen {

struct QuotientRing;
using QPtr = std::shared_ptr<const QuotientRing>;

// R = ambient/I.  dim is cached at construction.
struct QuotientRing {
  RingPtr ambient;
  Ideal defining;
  int dim = 0;

  static QPtr make(RingPtr ambient, std::vector<Poly> gens, const Limits& lim = {});
  // base with extra generators folded into the defining ideal
  static QPtr quotient_by(const QPtr& base, const std::vector<Poly>& more,
                          const Limits& lim = {});

  bool same_as(const QuotientRing& o) const;
  std::string to_string() const;
};

// Finitely generated module over R = ambient/I, as the cokernel of the
// column span of `relations` together with I times each basis vector.
// Relations live over the ambient ring.  Optional generator degrees make the
// module graded when all relations are homogeneous with respect to them.
class PresentedModule {
 public:
  PresentedModule() = default;
  PresentedModule(QPtr ring, int ngens, std::vector<Vec> relations,
                  std::optional<std::vector<long>> gen_degrees = std::nullopt);

  static PresentedModule free_module(QPtr ring, int rank);
  static PresentedModule zero(QPtr ring) { return free_module(std::move(ring), 0); }
  // R/J as a cyclic module over R (J given by generators over the ambient)
  static PresentedModule cyclic(QPtr ring, std::vector<Poly> ideal_gens);

  const QPtr& ring() const { return ring_; }
  int ngens() const { return ngens_; }
  const std::vector<Vec>& relations() const { return relations_; }
  const std::optional<std::vector<long>>& gen_degrees() const { return degrees_; }

  // GB of relations + I*e_i; cached, write-once.
  const ModuleGB& rel_gb(const Limits& lim = {}) const;

  Vec nf(const Vec& v, const Limits& lim = {}) const;
  bool elem_is_zero(const Vec& v, const Limits& lim = {}) const;
  bool is_zero_module(const Limits& lim = {}) const;
  // all relations lie in I * A^ngens, i.e. the module is free of rank ngens
  bool is_free(const Limits& lim = {}) const;

  // Identical key iff same generator count and same relation span; used for
  // object deduplication and axiom matching.
  std::string canonical_key(const Limits& lim = {}) const;

 private:
  QPtr ring_;
  int ngens_ = 0;
  std::vector<Vec> relations_;
  std::optional<std::vector<long>> degrees_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Map of presented modules; well-definedness (relations map into relations)
// is verified at construction.
struct ModuleMap {
  PresentedModule src;
  PresentedModule tgt;
  std::vector<Vec> cols;  // cols[j] = image of source generator j, length tgt.ngens

  Vec apply(const Vec& v, const Limits& lim = {}) const;
};

ModuleMap make_map(PresentedModule src, PresentedModule tgt, std::vector<Vec> cols,
                   const Limits& lim = {});
ModuleMap identity_map(const PresentedModule& m);
ModuleMap zero_map(const PresentedModule& src, const PresentedModule& tgt);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f, const Limits& lim = {});
bool map_is_zero(const ModuleMap& m, const Limits& lim = {});
bool maps_equal(const ModuleMap& a, const ModuleMap& b, const Limits& lim = {});

// --- submodule / subquotient machinery --------------------------------------

// Generators of { v in A^k : sum_j v_j * mat_cols[j] in span(target_sub) + I*A^rank }.
std::vector<Vec> preimage_cols(const QPtr& ring, int rank,
                               const std::vector<Vec>& mat_cols,
                               const std::vector<Vec>& target_sub,
                               const Limits& lim = {});

// Coefficients c with target = sum c_j gens_j modulo span(extra) + I*A^rank.
std::optional<Vec> express_in(const QPtr& ring, int rank, const Vec& target,
                              const std::vector<Vec>& gens,
                              const std::vector<Vec>& extra = {},
                              const Limits& lim = {});

// Presentation of (span K + L + I) / (span L + I) inside A^rank, with unit
// relations eliminated.  witnesses[i] is the ambient vector representing
// generator i.
struct Subquotient {
  PresentedModule module;
  std::vector<Vec> witnesses;
};
Subquotient present_subquotient(const QPtr& ring, int rank, std::vector<Vec> K,
                                std::vector<Vec> L, const Limits& lim = {},
                                const std::optional<std::vector<long>>& ambient_degs =
                                    std::nullopt,
                                bool minimize = true);

// --- syzygies and resolutions -----------------------------------------------

// First syzygy with its embedding into the free cover: witnesses are the
// generators of Omega^1 M as vectors in A^ngens(M).
Subquotient syzygy_embedded(const PresentedModule& m, const Limits& lim = {});

PresentedModule syzygy(int n, const PresentedModule& m, const Limits& lim = {});

// Lazily extended free resolution F_0 <- F_1 <- ... of a module, built from
// successive embedded syzygies.  Extension is synchronized and idempotent;
// completed segments are immutable.
class FreeResolution {
 public:
  explicit FreeResolution(PresentedModule m);

  const PresentedModule& module() const { return module_; }
  // ensures differentials d_1..d_n are available (or the resolution has
  // terminated earlier with a zero syzygy)
  void extend_to(int n, const Limits& lim = {});
  int computed_length() const;
  // rank of F_j (extends on demand)
  int rank(int j, const Limits& lim = {});
  // columns of d_j : F_j -> F_{j-1}, each of length rank(j-1); j >= 1
  const std::vector<Vec>& differential(int j, const Limits& lim = {});
  // Omega^j as a presented module
  const PresentedModule& syzygy_at(int j, const Limits& lim = {});
  // true once some Omega^j with j <= n is zero
  bool terminated_by(int n, const Limits& lim = {});

 private:
  struct State;
  PresentedModule module_;
  std::shared_ptr<State> state_;
};

// --- Hom / Ext --------------------------------------------------------------

struct HomModule {
  PresentedModule mod;             // Hom_R(M, N) as a presented module
  PresentedModule src, tgt;        // M and N
  std::vector<std::vector<Vec>> gen_maps;  // column matrices of the generators
};
HomModule hom_module(const PresentedModule& m, const PresentedModule& n,
                     const Limits& lim = {});
ModuleMap hom_element(const HomModule& h, const Vec& coeffs, const Limits& lim = {});

PresentedModule ext_module(int n, const PresentedModule& m, const PresentedModule& nn,
                           const Limits& lim = {});

Ideal annihilator(const PresentedModule& m, const Limits& lim = {});

bool is_pd_le(const PresentedModule& m, int n, const Limits& lim = {});

// Smallest n with Ext^{n+1}(M, Omega^{n+1} M) killed by a power of f,
// searched for n = 0..dim R; nullopt means infinite.
std::optional<int> localized_pd(const PresentedModule& m, const Poly& f,
                                const Limits& lim = {});

// --- exactness --------------------------------------------------------------

// Checks 0 -> M_0 -> ... -> M_k -> 0 for a composable chain of maps.
// Position 0 is injectivity at the left end, position i (0<i<k) exactness at
// the i-th interior node, position k surjectivity at the right end.
struct ExactnessReport {
  bool ok = true;
  int position = -1;
  std::string reason;
};
ExactnessReport exactness_check(const std::vector<ModuleMap>& maps,
                                const Limits& lim = {});

// Direct sum with block-diagonal relations.
PresentedModule direct_sum(const std::vector<PresentedModule>& parts);

}  // namespace modgen
