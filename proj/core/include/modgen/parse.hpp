#pragma once

#include <string>
#include <vector>

#include "modgen/gb.hpp"
#include "modgen/poly.hpp"

namespace modgen {

// Polynomial text grammar: identifiers for variables, `^` for powers, `*`
// optional (juxtaposition multiplies), integer or a/b coefficients,
// parentheses allowed.  Whitespace-insensitive.
Poly parse_poly(const RingPtr& ring, const std::string& text);

// "f; g; h" or "f, g, h" at top level (semicolon preferred, comma accepted
// outside parentheses).
std::vector<Poly> parse_poly_list(const RingPtr& ring, const std::string& text);

// Ring syntax: K[vars]/(g1,...,gk) with K in {Q, F<p>}; the quotient part is
// optional.  Example: "Q[x,y]/(y^2-x^3)".
struct ParsedRing {
  RingPtr ambient;
  std::vector<Poly> quotient_gens;  // empty if no quotient was given
};
ParsedRing parse_ring(const std::string& text, MonomialOrder order = {});

// Prime lists: "(x);(y,z)" — parenthesized generator lists separated by `;`.
std::vector<std::vector<Poly>> parse_ideal_list(const RingPtr& ring,
                                                const std::string& text);

// Module text: `gens <k> relations [[c11,...,c1k],[...],...]` where each
// inner list is one relation column of length k, entries in the polynomial
// grammar.  An optional leading `module <name> over <ring>` prefix is
// accepted; the ring given there must match `ring` when both are present.
struct ParsedModule {
  int ngens = 0;
  std::vector<Vec> relations;
};
ParsedModule parse_module_text(const RingPtr& ring, const std::string& text);

}  // namespace modgen
