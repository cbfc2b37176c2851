#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modgen/complex.hpp"
#include "modgen/module.hpp"

namespace modgen {

// Closed subset V(defining) of Spec R.  The defining ideal lives in the
// ambient ring and always contains the defining ideal of R; loci are compared
// only up to radical, via membership tests.
struct ClosedLocus {
  QPtr ring;
  Ideal defining;

  bool is_empty(const Limits& lim = {}) const;  // no prime contains defining
  bool is_all(const Limits& lim = {}) const;    // defining vanishes on Spec R
};

struct OpenLocus {
  ClosedLocus complement;

  bool is_empty(const Limits& lim = {}) const { return complement.is_all(lim); }
  bool is_all(const Limits& lim = {}) const { return complement.is_empty(lim); }
};

// V(inner.defining) subset of V(outer.defining), up to radical.
bool locus_contains(const ClosedLocus& outer, const ClosedLocus& inner,
                    const Limits& lim = {});
bool locus_equal(const ClosedLocus& a, const ClosedLocus& b, const Limits& lim = {});

// Classes recognized as equidimensional without an attestation: the zero
// ideal, the unit ideal, and complete intersections (generator count equals
// codimension).  Everything else needs the caller to vouch.
bool is_equidimensional_auto(const QPtr& r, const Limits& lim = {});

// V(I + c-by-c minors of the Jacobian), c = codim; complement is the regular
// locus (Jacobian criterion, valid over Q and F_p since both are perfect).
ClosedLocus singular_locus(const QPtr& r, const Limits& lim = {},
                           bool attested_equidimensional = false);
OpenLocus regular_locus(const QPtr& r, const Limits& lim = {},
                        bool attested_equidimensional = false);

// V(ann Ext^{d+1}(M, Omega^{d+1} M)), d = dim R: the primes where M fails to
// have finite projective dimension.
ClosedLocus nonperf_locus(const PresentedModule& m, const Limits& lim = {});

// Complement of nonperf_locus: the primes where M has finite projective
// dimension.
OpenLocus perf_locus(const PresentedModule& m, const Limits& lim = {});

// Truncates the complex and reduces to the module case.  Since the input is
// already a bounded complex of frees this is all of Spec R; the call exists
// to exercise the truncation reduction.
OpenLocus perf_locus_complex(const BoundedFreeComplex& x, const Limits& lim = {});

// Does the regular locus contain a nonempty open set?  For attested domains a
// witness f (nonzero in R, with R_f regular) is produced from the singular
// ideal's reduced GB, tie-broken by least degree then term order.
struct J0Result {
  bool j0 = false;
  std::optional<Poly> witness;
};
J0Result is_J0(const QPtr& r, bool domain_attested, const Limits& lim = {},
               bool attested_equidimensional = false);

struct J1Result {
  bool j1 = true;
  OpenLocus reg;
};
J1Result is_J1(const QPtr& r, const Limits& lim = {},
               bool attested_equidimensional = false);

// Checks the openness criterion: every supplied prime must (a) contain the
// defining ideal, (b) jointly cover the minimal primes, and (c) have R/p
// satisfying J-0; on success the open regular locus is returned.
struct NagataReport {
  bool ok = true;
  std::string failure;
  OpenLocus reg;
};
NagataReport nagata_check(const QPtr& r, const std::vector<Ideal>& primes,
                          const Limits& lim = {},
                          bool attested_equidimensional = false);

}  // namespace modgen
