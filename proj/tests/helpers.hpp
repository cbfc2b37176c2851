#pragma once

#include <string>
#include <vector>

#include "modgen/genesis.hpp"
#include "modgen/parse.hpp"

namespace th {

using namespace modgen;

inline RingPtr QA(std::vector<std::string> vars,
                  FieldSpec f = FieldSpec::Q(), MonomialOrder ord = {}) {
  return PolyRing::make(f, std::move(vars), ord);
}

inline Poly P(const RingPtr& a, const std::string& s) { return parse_poly(a, s); }

inline QPtr QR(const RingPtr& a, const std::string& quot = "") {
  std::vector<Poly> gens;
  if (!quot.empty()) gens = parse_poly_list(a, quot);
  return QuotientRing::make(a, gens, {});
}

// the usual suspects
inline QPtr dual_numbers() { return QR(QA({"x"}), "x^2"); }
inline QPtr node() { return QR(QA({"x", "y"}), "x*y"); }
inline QPtr cusp() { return QR(QA({"x", "y"}), "y^2-x^3"); }

inline PresentedModule residue_field(const QPtr& r) {
  std::vector<Poly> vars;
  for (std::size_t v = 0; v < r->ambient->nvars(); ++v)
    vars.push_back(Poly::variable(r->ambient, v));
  return PresentedModule::cyclic(r, vars);
}

inline bool ideals_equal(const Ideal& a, const Ideal& b, const Limits& lim = {}) {
  for (const auto& g : a.gens())
    if (!b.contains(g, lim)) return false;
  for (const auto& g : b.gens())
    if (!a.contains(g, lim)) return false;
  return true;
}

inline bool same_key(const PresentedModule& a, const PresentedModule& b) {
  return a.canonical_key() == b.canonical_key();
}

}  // namespace th
