#include "modgen/json_io.hpp"

#include "modgen/errors.hpp"
#include "modgen/parse.hpp"

namespace modgen {

std::string ring_to_text(const QPtr& r) { return r->to_string(); }

QPtr ring_from_text(const std::string& text, const Limits& lim) {
  ParsedRing pr = parse_ring(text);
  return QuotientRing::make(pr.ambient, pr.quotient_gens, lim);
}

ojson vec_to_json(const Vec& v) {
  ojson a = ojson::array();
  for (const auto& p : v) a.push_back(p.to_string());
  return a;
}

Vec vec_from_json(const ojson& j, const RingPtr& ring) {
  if (!j.is_array()) throw parse_error("vector: expected an array");
  Vec v;
  for (const auto& e : j) v.push_back(parse_poly(ring, e.get<std::string>()));
  return v;
}

ojson matrix_to_json(const std::vector<Vec>& cols) {
  ojson a = ojson::array();
  for (const auto& c : cols) a.push_back(vec_to_json(c));
  return a;
}

std::vector<Vec> matrix_from_json(const ojson& j, const RingPtr& ring) {
  if (!j.is_array()) throw parse_error("matrix: expected an array of columns");
  std::vector<Vec> cols;
  for (const auto& e : j) cols.push_back(vec_from_json(e, ring));
  return cols;
}

ojson module_to_json(const PresentedModule& m) {
  ojson j;
  j["ngens"] = m.ngens();
  j["relations"] = matrix_to_json(m.relations());
  if (m.gen_degrees()) j["degrees"] = *m.gen_degrees();
  return j;
}

PresentedModule module_from_json(const ojson& j, const QPtr& ring) {
  if (!j.contains("ngens") || !j.contains("relations"))
    throw parse_error("module: need ngens and relations");
  int ng = j["ngens"].get<int>();
  std::vector<Vec> rels = matrix_from_json(j["relations"], ring->ambient);
  for (const auto& r : rels)
    if ((int)r.size() != ng) throw parse_error("module: relation column length mismatch");
  std::optional<std::vector<long>> degs;
  if (j.contains("degrees")) degs = j["degrees"].get<std::vector<long>>();
  return PresentedModule(ring, ng, std::move(rels), std::move(degs));
}

static const char* step_name(CertStep::Kind k) {
  switch (k) {
    case CertStep::Axiom: return "axiom";
    case CertStep::Iso: return "iso";
    case CertStep::Ses: return "ses";
    case CertStep::Summand: return "summand";
    case CertStep::Dsum: return "dsum";
    case CertStep::Restrict: return "restrict";
  }
  return "?";
}

static CertStep::Kind step_kind(const std::string& s) {
  if (s == "axiom") return CertStep::Axiom;
  if (s == "iso") return CertStep::Iso;
  if (s == "ses") return CertStep::Ses;
  if (s == "summand") return CertStep::Summand;
  if (s == "dsum") return CertStep::Dsum;
  if (s == "restrict") return CertStep::Restrict;
  throw parse_error("certificate: unknown step kind '" + s + "'");
}

ojson certificate_to_json(const Certificate& c) {
  ojson j;
  j["schema"] = kSchemaVersion;
  j["ring"] = ring_to_text(c.ring);
  ojson objs = ojson::array();
  for (const auto& m : c.objects) objs.push_back(module_to_json(m));
  j["objects"] = std::move(objs);
  ojson parts = ojson::array();
  for (const auto& m : c.generator_parts) parts.push_back(module_to_json(m));
  j["generator_parts"] = std::move(parts);
  j["ring_declared"] = c.ring_declared;
  j["root"] = c.root;
  j["attestations"] = c.attestations;
  ojson steps = ojson::array();
  for (const auto& st : c.steps) {
    ojson s;
    s["kind"] = step_name(st.kind);
    s["target"] = st.target;
    if (!st.refs.empty()) s["refs"] = st.refs;
    if (!st.mats.empty()) {
      ojson mats = ojson::array();
      for (const auto& m : st.mats) mats.push_back(matrix_to_json(m));
      s["mats"] = std::move(mats);
    }
    if (!st.ideal_gens.empty()) {
      ojson ig = ojson::array();
      for (const auto& g : st.ideal_gens) ig.push_back(g.to_string());
      s["ideal_gens"] = std::move(ig);
    }
    if (st.sub) s["sub"] = certificate_to_json(*st.sub);
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  return j;
}

Certificate certificate_from_json(const ojson& j, const Limits& lim) {
  if (!j.is_object()) throw parse_error("certificate: expected an object");
  if (j.value("schema", std::string(kSchemaVersion)) != kSchemaVersion)
    throw parse_error("certificate: unsupported schema version");
  if (!j.contains("ring")) throw parse_error("certificate: missing ring");
  Certificate c;
  c.ring = ring_from_text(j["ring"].get<std::string>(), lim);
  const RingPtr& A = c.ring->ambient;
  for (const auto& o : j.value("objects", ojson::array()))
    c.objects.push_back(module_from_json(o, c.ring));
  for (const auto& o : j.value("generator_parts", ojson::array()))
    c.generator_parts.push_back(module_from_json(o, c.ring));
  c.ring_declared = j.value("ring_declared", true);
  c.root = j.value("root", -1);
  c.attestations = j.value("attestations", std::vector<std::string>{});
  for (const auto& s : j.value("steps", ojson::array())) {
    CertStep st;
    st.kind = step_kind(s.value("kind", std::string()));
    st.target = s.value("target", -1);
    st.refs = s.value("refs", std::vector<int>{});
    for (const auto& m : s.value("mats", ojson::array()))
      st.mats.push_back(matrix_from_json(m, A));
    for (const auto& g : s.value("ideal_gens", ojson::array()))
      st.ideal_gens.push_back(parse_poly(A, g.get<std::string>()));
    if (s.contains("sub"))
      st.sub = std::make_shared<Certificate>(certificate_from_json(s["sub"], lim));
    c.steps.push_back(std::move(st));
  }
  return c;
}

}  // namespace modgen
