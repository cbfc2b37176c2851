#pragma once

#include <memory>
#include <string>
#include <vector>

#include "modgen/module.hpp"

namespace modgen {

struct Certificate;

// One establishment step.  `target` is the object table id this step proves
// membership for; `refs` are previously established ids and `mats` the matrix
// witnesses, with per-kind meaning:
//   AXIOM    refs {},        mats {}
//   ISO      refs {other},   mats {fwd: other->target, bwd: target->other}
//   SES      refs {x,y,z},   mats {alpha: x->y, beta: y->z}; target is one of x,y,z
//   SUMMAND  refs {ambient}, mats {s: target->ambient, r: ambient->target}
//   DSUM     refs parts,     mats = injections then projections
//   RESTRICT refs {},        sub-certificate over ring/(ideal_gens)
struct CertStep {
  enum Kind { Axiom, Iso, Ses, Summand, Dsum, Restrict } kind = Axiom;
  int target = -1;
  std::vector<int> refs;
  std::vector<std::vector<Vec>> mats;
  std::vector<Poly> ideal_gens;
  std::shared_ptr<Certificate> sub;
};

// Proof that every object in the table lies in the thick closure of the
// declared generator (the parts, plus all free modules when ring_declared).
struct Certificate {
  QPtr ring;
  std::vector<PresentedModule> objects;
  std::vector<PresentedModule> generator_parts;
  bool ring_declared = true;
  std::vector<CertStep> steps;
  int root = -1;
  std::vector<std::string> attestations;
};

// An R/J-module viewed as an R-module: same generators, relations inflated
// with the defining ideal of the smaller ring.
PresentedModule restrict_module(const PresentedModule& m, const QPtr& outer);

struct CheckResult {
  bool ok = true;
  int step = -1;          // first failing step (sub-steps reported in reason)
  std::string reason;
};

// Re-checks every step with GB/module primitives only; all witnesses must be
// present in the certificate.
CheckResult check_certificate(const Certificate& c, const Limits& lim = {});

struct CertStats {
  int depth = 0;           // maximum RESTRICT nesting
  int step_count = 0;      // total steps including sub-certificates
  int triangle_count = 0;  // total SES steps
  std::vector<std::string> attestations;
};
CertStats certificate_stats(const Certificate& c);

}  // namespace modgen
