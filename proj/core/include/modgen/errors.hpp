#pragma once

#include <stdexcept>
#include <string>

namespace modgen {

// Input could not be parsed.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Operands live in different rings, or indices are out of range.
struct ring_mismatch : std::runtime_error {
  explicit ring_mismatch(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource budget (degree, pair count, resolution length) was
// exhausted.  Distinct from mathematical failure: the computation was cut
// short, nothing was decided.
struct cutoff_error : std::runtime_error {
  explicit cutoff_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical precondition failed or a verification did not hold.
struct math_error : std::runtime_error {
  explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// Resource budgets threaded through every potentially expensive computation.
struct Limits {
  long max_degree = 200;       // total degree of any polynomial produced
  long max_pairs = 200000;     // S-pairs processed per basis computation
  long max_resolution = 32;    // resolution length
  long max_exponent = 1 << 20; // per-variable exponent bound
};

}  // namespace modgen
