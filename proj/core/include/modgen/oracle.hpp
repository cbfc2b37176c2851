#pragma once

#include <optional>
#include <vector>

#include "modgen/module.hpp"

namespace modgen {

// Brute-force cross-checks for the test suite.  Everything here recomputes
// results by a route independent of the primary implementation.

// Projective dimension read directly off a free resolution: the first level
// whose syzygy is free (or zero).  nullopt means "> bound".
std::optional<int> pd_by_resolution(const PresentedModule& m, int bound,
                                    const Limits& lim = {});

// Degreewise k-dimensions of a graded module on a window [lo, hi].
struct GradedVectorData {
  long lo = 0;
  std::vector<long> dims;  // dims[d - lo]

  long total() const;
  bool operator==(const GradedVectorData& o) const {
    return lo == o.lo && dims == o.dims;
  }
};
GradedVectorData graded_dimensions(const PresentedModule& m, long lo, long hi,
                                   const Limits& lim = {});

// Total k-dimension of a finite-dimensional module; throws cutoff_error when
// the standard-monomial enumeration exceeds its budget (infinite dimension).
long total_k_dimension(const PresentedModule& m, const Limits& lim = {});

// Ext^n(M, N) on a degree window computed through the shift
// Ext^n(M, N) = Ext^1(Omega^{n-1} M, N); requires graded inputs.
GradedVectorData ext_by_dimension_shift(int n, const PresentedModule& m,
                                        const PresentedModule& nn, long lo, long hi,
                                        const Limits& lim = {});

// Bounded saturation probe for thick membership over an Artinian ring.
// The generator is given by its summands (the free rank-one module must be
// listed if it is part of the generator).  A `true` answer is backed by a
// derivation (sums, syzygies against available frees, length induction once
// the residue field is reached); `false` only means no derivation was found
// within the dimension bound.
bool artinian_thick_probe(const std::vector<PresentedModule>& gen_summands,
                          const PresentedModule& m, long dim_bound,
                          const Limits& lim = {});

}  // namespace modgen
