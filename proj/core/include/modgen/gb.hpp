#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "modgen/poly.hpp"

namespace modgen {

// Reduced Groebner basis of a submodule of A^rank under the
// position-over-term extension of the ring order (component 0 dominates).
// When computed with syzygy tracking, `syzygies` generates the full syzygy
// module of the original generator list (Schreyer).
struct ModuleGB {
  RingPtr ring;
  int rank = 1;
  std::vector<Vec> gens;      // original generators, zeros dropped but order kept
  std::vector<Vec> basis;     // reduced GB, monic, sorted by leading term descending
  std::vector<Vec> syzygies;  // vectors of length gens.size() (if tracked)
  std::vector<Vec> basis_reps_;  // basis[i] over the original gens (if tracked)
};

// Leading position/monomial of a nonzero vector under POT.
struct LeadTerm {
  int pos;
  const Term* term;
};
LeadTerm vec_lead(const Vec& v);

ModuleGB module_groebner(const RingPtr& ring, int rank, std::vector<Vec> gens,
                         const Limits& lim = {}, bool track_syzygies = false);

// Unique remainder of v modulo the basis.
Vec module_nf(const Vec& v, const ModuleGB& gb, const Limits& lim = {});

// Expresses v over the ORIGINAL generators if v lies in their span
// (requires a tracked basis); nullopt otherwise.
std::optional<Vec> module_lift(const Vec& v, const ModuleGB& gb,
                               const Limits& lim = {});

// --- Ideals -----------------------------------------------------------------

class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }

  // Reduced GB for the ring's order; computed once, cached, shareable.
  const ModuleGB& gb(const Limits& lim = {}) const;

  bool is_zero_ideal() const;
  bool is_unit_ideal(const Limits& lim = {}) const;  // 1 in I
  bool contains(const Poly& f, const Limits& lim = {}) const;
  Poly nf(const Poly& f, const Limits& lim = {}) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  struct Cache {
    std::once_flag flag;
    ModuleGB gb;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// f in rad(I), by the extended-ring trick: 1 in (I, 1 - t*f).
bool radical_membership(const Poly& f, const Ideal& I, const Limits& lim = {});

// (I : f) = { g | g*f in I }.
Ideal ideal_quotient(const Ideal& I, const Poly& f, const Limits& lim = {});

Ideal ideal_sum(const Ideal& I, const std::vector<Poly>& more);
Ideal ideal_intersect(const Ideal& I, const Ideal& J, const Limits& lim = {});

// Minimal a >= 0 with f^a in I; requires f in rad(I), else math_error
// ("no finite index").
int saturation_index(const Poly& f, const Ideal& I, const Limits& lim = {});

// dim(ambient/I) from the leading-term ideal (maximal independent variable
// set); -1 for the unit ideal.
int krull_dimension(const Ideal& I, const Limits& lim = {});

// Generating set of the kernel of A^k -> A^rank, v -> cols * v.
std::vector<Vec> syzygy_basis(const RingPtr& ring, int rank,
                              const std::vector<Vec>& cols,
                              const Limits& lim = {});

}  // namespace modgen
