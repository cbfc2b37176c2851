#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modgen/certificate.hpp"
#include "modgen/loci.hpp"
#include "modgen/module.hpp"

namespace modgen {

struct PrimeAttestation {
  Ideal ideal;
  enum Status { VerifiedMonomial, VerifiedPrincipalFactor, UserTrusted } status =
      VerifiedMonomial;

  std::string status_name() const;
  std::string to_string() const;
};

// Minimal primes of I.  Scope: zero/monomial ideals (combinatorial covers),
// principal ideals over Q (factorization), or a user-supplied decomposition
// which is verified up to radical and marked user_trusted.
std::vector<PrimeAttestation> minimal_primes(const Ideal& i, const Limits& lim = {},
                                             const std::vector<Ideal>& user = {});

// For a non-regular affine domain: a nonzero non-unit f of R lying in the
// singular ideal, so that R_f is regular.  Tie-break: least degree, then term
// order, over the reduced GB of the singular ideal.
Poly find_inverting_element(const QPtr& r, const Limits& lim = {});

// Output of the generator recursion.  G = R (+) parts; the tree records the
// choice made at each level.
struct GeneratorResult {
  QPtr ring;
  enum Kind { RegularBase, DomainStep, SplitStep } kind = RegularBase;
  std::optional<Poly> f;                 // domain step: R_f regular
  std::vector<PrimeAttestation> primes;  // domain: I itself; split: minimal primes
  std::vector<GeneratorResult> children;
  std::vector<PresentedModule> parts;    // non-free generator summands over R
  PresentedModule generator;             // R (+) parts as one module
  int depth = 0;                         // recursion depth below this node
  std::vector<std::string> attestations;
};

GeneratorResult build_generator(const QPtr& r, const Limits& lim = {},
                                const std::vector<Ideal>& root_primes = {});

// Prime filtration 0 = M_0 < M_1 < ... < M_n = M; step i adjoins new_gen and
// the quotient M_i/M_{i-1} is R/prime (colon ideal equals the prime exactly).
struct FiltrationStep {
  Vec new_gen;
  PrimeAttestation prime;
};
struct PrimeFiltration {
  PresentedModule m;
  std::vector<FiltrationStep> steps;
};

// Constructs the filtration when all the colon ideals that appear are
// monomial (after GB reduction); otherwise hints must supply the steps,
// which are then verified.
PrimeFiltration prime_filtration(const PresentedModule& m, const Limits& lim = {},
                                 const std::vector<FiltrationStep>* hints = nullptr);
bool verify_filtration(const PrimeFiltration& f, const Limits& lim = {});

// Builds a checkable thick-membership certificate for M relative to the
// generator.
Certificate certify_module(const PresentedModule& m, const GeneratorResult& gen,
                           const Limits& lim = {});

}  // namespace modgen
