#pragma once

#include <json.hpp>
#include <string>

#include "modgen/certificate.hpp"
#include "modgen/module.hpp"

namespace modgen {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "modgen/1";

// Polynomials travel as re-parseable strings; a module is its generator
// count plus relation columns; rings as `K[vars]/(...)` text.

std::string ring_to_text(const QPtr& r);
QPtr ring_from_text(const std::string& text, const Limits& lim = {});

ojson vec_to_json(const Vec& v);
Vec vec_from_json(const ojson& j, const RingPtr& ring);

ojson matrix_to_json(const std::vector<Vec>& cols);
std::vector<Vec> matrix_from_json(const ojson& j, const RingPtr& ring);

ojson module_to_json(const PresentedModule& m);
PresentedModule module_from_json(const ojson& j, const QPtr& ring);

ojson certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const ojson& j, const Limits& lim = {});

}  // namespace modgen
