#pragma once

#include <vector>

#include "modgen/module.hpp"

namespace modgen {

// Bounded complex of finite free R-modules in homological degrees [lo, hi];
// d_i : X_i -> X_{i-1}.  d(d) = 0 is verified at construction.
struct BoundedFreeComplex {
  QPtr ring;
  int lo = 0;
  int hi = -1;  // hi < lo means the zero complex
  std::vector<int> ranks;                    // ranks[i - lo]
  std::vector<std::vector<Vec>> diffs;       // diffs[i - lo] = columns of d_i; diffs[0] unused

  int rank_at(int i) const {
    return (i < lo || i > hi) ? 0 : ranks[i - lo];
  }
  const std::vector<Vec>& diff_at(int i) const;  // valid for lo < i <= hi
};

BoundedFreeComplex make_complex(QPtr ring, int lo, std::vector<int> ranks,
                                std::vector<std::vector<Vec>> diffs,
                                const Limits& lim = {});
BoundedFreeComplex zero_complex(QPtr ring);
// free module of the given rank concentrated in one degree
BoundedFreeComplex free_complex(QPtr ring, int degree, int rank);

// H_i(X) = ker d_i / im d_{i+1} as a presented module.
PresentedModule homology(const BoundedFreeComplex& x, int i, const Limits& lim = {});

// sup{ i : H_i(X) != 0 }; lo - 1 when X is exact everywhere.
int top_homology_degree(const BoundedFreeComplex& x, const Limits& lim = {});

// The brutal truncation triangle: P = X_{<s} is perfect, the quotient
// complex X_{>=s} is quasi-isomorphic to the s-th suspension of
// M = coker(d_{s+1}).  Requires H_i(X) = 0 for all i > s.
struct TruncationTriangle {
  BoundedFreeComplex source;
  int s = 0;
  BoundedFreeComplex perfect_part;   // X_{<s}
  BoundedFreeComplex quotient_part;  // X_{>=s}
  PresentedModule module_part;       // M
  std::vector<Vec> next_diff;        // columns of d_{s+1}; M = coker of these
};

TruncationTriangle truncation_split(const BoundedFreeComplex& x, int s,
                                    const Limits& lim = {});

// Same triangle for a module viewed as a complex in degree 0, after the
// resolution replacement: P = the first s free terms of the resolution
// (degrees 0..s-1) and M = Omega^s of the module.
TruncationTriangle module_truncation(const PresentedModule& m, int s,
                                     const Limits& lim = {});

// Degreewise exactness of 0 -> X_{<s} -> X -> X_{>=s} -> 0 plus the
// quasi-isomorphism class checks that make the triangle valid.
bool verify_truncation(const TruncationTriangle& t, const Limits& lim = {});

}  // namespace modgen
