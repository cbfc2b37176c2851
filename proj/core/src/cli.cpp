#include "modgen/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "modgen/errors.hpp"
#include "modgen/genesis.hpp"
#include "modgen/loci.hpp"
#include "modgen/oracle.hpp"
#include "modgen/parse.hpp"

namespace modgen {

namespace {

struct Session {
  std::string ring_text;
  std::string ideal_text;
  std::string poly_text;
  std::string module_text;
  std::string module2_text;
  std::string primes_text;
  std::string cert_file;
  std::string out_file;
  int n = 1;
  int length = -1;
  bool domain = false;
  bool equidim = false;
  std::string format = "json";
  Limits lim;

  QPtr ring() const {
    ParsedRing pr = parse_ring(ring_text);
    return QuotientRing::make(pr.ambient, pr.quotient_gens, lim);
  }
  Ideal ideal(const QPtr& r) const {
    return Ideal(r->ambient, parse_poly_list(r->ambient, ideal_text));
  }
  PresentedModule module(const QPtr& r, const std::string& text) const {
    ParsedModule pm = parse_module_text(r->ambient, text);
    return PresentedModule(r, pm.ngens, pm.relations);
  }
  std::vector<Ideal> primes(const QPtr& r) const {
    std::vector<Ideal> out;
    for (auto& gens : parse_ideal_list(r->ambient, primes_text))
      out.push_back(Ideal(r->ambient, std::move(gens)));
    return out;
  }
};

ojson ideal_json(const Ideal& i, const Limits& lim) {
  ojson a = ojson::array();
  for (const auto& b : i.gb(lim).basis) a.push_back(b[0].to_string());
  return a;
}

ojson generator_json(const GeneratorResult& g, const Limits& lim) {
  ojson j;
  j["ring"] = ring_to_text(g.ring);
  switch (g.kind) {
    case GeneratorResult::RegularBase: j["kind"] = "regular_base"; break;
    case GeneratorResult::DomainStep: j["kind"] = "domain_step"; break;
    case GeneratorResult::SplitStep: j["kind"] = "split_step"; break;
  }
  if (g.f) j["inverted_element"] = g.f->to_string();
  ojson primes = ojson::array();
  for (const auto& p : g.primes) primes.push_back(p.to_string());
  j["primes"] = std::move(primes);
  ojson parts = ojson::array();
  for (const auto& p : g.parts) parts.push_back(module_to_json(p));
  j["parts"] = std::move(parts);
  j["generator"] = module_to_json(g.generator);
  j["depth"] = g.depth;
  j["attestations"] = g.attestations;
  ojson kids = ojson::array();
  for (const auto& c : g.children) kids.push_back(generator_json(c, lim));
  j["children"] = std::move(kids);
  return j;
}

ojson stats_json(const CertStats& s) {
  ojson j;
  j["depth"] = s.depth;
  j["step_count"] = s.step_count;
  j["triangle_count"] = s.triangle_count;
  j["attestations"] = s.attestations;
  return j;
}

void render_text(const ojson& j, std::ostream& os, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || v.is_array()) {
        os << pad << k << ":\n";
        render_text(v, os, indent + 2);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        os << pad << "-\n";
        render_text(v, os, indent + 2);
      } else {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

GeneratorResult generator_for(const Session& s, const QPtr& r) {
  std::vector<Ideal> rp;
  if (!s.primes_text.empty()) rp = s.primes(r);
  return build_generator(r, s.lim, rp);
}

}  // namespace

CliResult run_command(const std::vector<std::string>& args) {
  Session s;
  std::string command;
  ojson result;
  int code = 0;

  CLI::App app{"exact commutative-algebra toolkit: loci, generators, certificates"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* c, bool needs_ring) {
    auto* ring_opt = c->add_option("--ring", s.ring_text, "ring, e.g. Q[x,y]/(x*y)");
    if (needs_ring) ring_opt->required();
    c->add_option("--max-degree", s.lim.max_degree, "polynomial degree cutoff");
    c->add_option("--max-pairs", s.lim.max_pairs, "basis pair cutoff");
    c->add_option("--max-resolution", s.lim.max_resolution, "resolution length cutoff");
    c->add_option("--format", s.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    c->add_option("--out", s.out_file, "write the report to a file as well");
  };

  auto* gb = app.add_subcommand("gb", "reduced basis of an ideal");
  add_common(gb, true);
  gb->add_option("--ideal", s.ideal_text, "generators, `;`-separated")->required();

  auto* nf = app.add_subcommand("nf", "normal form modulo an ideal");
  add_common(nf, true);
  nf->add_option("--ideal", s.ideal_text, "generators, `;`-separated")->required();
  nf->add_option("--poly", s.poly_text, "polynomial to reduce")->required();

  auto* resolve = app.add_subcommand("resolve", "free resolution of a module");
  add_common(resolve, true);
  resolve->add_option("--module", s.module_text, "module text")->required();
  resolve->add_option("--length", s.length, "levels to compute")->required();

  auto* ext = app.add_subcommand("ext", "Ext module of two presented modules");
  add_common(ext, true);
  ext->add_option("--module", s.module_text, "source module M")->required();
  ext->add_option("--module2", s.module2_text, "target module N")->required();
  ext->add_option("--n", s.n, "cohomological degree")->required();

  auto* sing = app.add_subcommand("sing-locus", "singular locus of the ring");
  add_common(sing, true);
  sing->add_flag("--equidim", s.equidim, "attest equidimensionality");

  auto* perf = app.add_subcommand("perf-locus", "perfect locus of a module");
  add_common(perf, true);
  perf->add_option("--module", s.module_text, "module text")->required();

  auto* j0 = app.add_subcommand("j0", "does the regular locus contain a nonempty open set");
  add_common(j0, true);
  j0->add_flag("--domain", s.domain, "attest that the ring is a domain");
  j0->add_flag("--equidim", s.equidim, "attest equidimensionality");

  auto* nagata = app.add_subcommand("nagata", "openness criterion for the regular locus");
  add_common(nagata, true);
  nagata->add_option("--primes", s.primes_text, "minimal primes, `(..);(..)`")->required();
  nagata->add_flag("--equidim", s.equidim, "attest equidimensionality");

  auto* gen = app.add_subcommand("gen", "construct a module-category generator");
  add_common(gen, true);
  gen->add_option("--primes", s.primes_text, "minimal prime decomposition to trust");

  auto* certify = app.add_subcommand("certify", "generator plus membership certificate");
  add_common(certify, true);
  certify->add_option("--module", s.module_text, "module to certify")->required();
  certify->add_option("--primes", s.primes_text, "minimal prime decomposition to trust");

  auto* check = app.add_subcommand("check", "verify a certificate file");
  add_common(check, false);
  check->add_option("cert", s.cert_file, "certificate JSON file")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    CliResult r;
    std::ostringstream os;
    r.code = app.exit(e, os, os);
    r.output = os.str();
    return r;
  } catch (const CLI::ParseError& e) {
    CliResult r;
    r.code = 2;
    r.report = {{"schema", kSchemaVersion}, {"error", e.what()}};
    r.output = r.report.dump(2) + "\n";
    return r;
  }

  try {
    if (gb->parsed()) {
      command = "gb";
      QPtr r = s.ring();
      Ideal full(r->ambient, [&] {
        auto gens = r->defining.gens();
        auto more = parse_poly_list(r->ambient, s.ideal_text);
        gens.insert(gens.end(), more.begin(), more.end());
        return gens;
      }());
      result["basis"] = ideal_json(full, s.lim);
    } else if (nf->parsed()) {
      command = "nf";
      QPtr r = s.ring();
      Ideal full(r->ambient, [&] {
        auto gens = r->defining.gens();
        auto more = parse_poly_list(r->ambient, s.ideal_text);
        gens.insert(gens.end(), more.begin(), more.end());
        return gens;
      }());
      result["normal_form"] = full.nf(parse_poly(r->ambient, s.poly_text), s.lim).to_string();
    } else if (resolve->parsed()) {
      command = "resolve";
      QPtr r = s.ring();
      PresentedModule m = s.module(r, s.module_text);
      FreeResolution res(m);
      res.extend_to(s.length, s.lim);
      ojson ranks = ojson::array();
      ojson diffs = ojson::array();
      ranks.push_back(res.rank(0, s.lim));
      for (int j = 1; j <= s.length; ++j) {
        if (res.terminated_by(j - 1, s.lim)) break;
        ranks.push_back(res.rank(j, s.lim));
        diffs.push_back(matrix_to_json(res.differential(j, s.lim)));
      }
      result["ranks"] = std::move(ranks);
      result["differentials"] = std::move(diffs);
    } else if (ext->parsed()) {
      command = "ext";
      QPtr r = s.ring();
      PresentedModule m = s.module(r, s.module_text);
      PresentedModule n2 = s.module(r, s.module2_text);
      PresentedModule e = ext_module(s.n, m, n2, s.lim);
      result["ext"] = module_to_json(e);
      result["annihilator"] = ideal_json(annihilator(e, s.lim), s.lim);
      result["is_zero"] = e.is_zero_module(s.lim);
    } else if (sing->parsed()) {
      command = "sing-locus";
      QPtr r = s.ring();
      ClosedLocus l = singular_locus(r, s.lim, s.equidim);
      result["defining_ideal"] = ideal_json(l.defining, s.lim);
      result["is_empty"] = l.is_empty(s.lim);
    } else if (perf->parsed()) {
      command = "perf-locus";
      QPtr r = s.ring();
      PresentedModule m = s.module(r, s.module_text);
      OpenLocus l = perf_locus(m, s.lim);
      result["complement_defining_ideal"] = ideal_json(l.complement.defining, s.lim);
      result["is_all"] = l.is_all(s.lim);
    } else if (j0->parsed()) {
      command = "j0";
      QPtr r = s.ring();
      J0Result jr = is_J0(r, s.domain, s.lim, s.equidim);
      result["j0"] = jr.j0;
      if (jr.witness) result["witness"] = jr.witness->to_string();
    } else if (nagata->parsed()) {
      command = "nagata";
      QPtr r = s.ring();
      NagataReport rep = nagata_check(r, s.primes(r), s.lim, s.equidim);
      result["ok"] = rep.ok;
      if (!rep.ok) result["failure"] = rep.failure;
      result["regular_locus_complement"] = ideal_json(rep.reg.complement.defining, s.lim);
    } else if (gen->parsed()) {
      command = "gen";
      QPtr r = s.ring();
      result["generator"] = generator_json(generator_for(s, r), s.lim);
    } else if (certify->parsed()) {
      command = "certify";
      QPtr r = s.ring();
      PresentedModule m = s.module(r, s.module_text);
      GeneratorResult g = generator_for(s, r);
      Certificate c = certify_module(m, g, s.lim);
      result["certificate"] = certificate_to_json(c);
      result["stats"] = stats_json(certificate_stats(c));
    } else if (check->parsed()) {
      command = "check";
      std::ifstream in(s.cert_file);
      if (!in) throw parse_error("cannot open certificate file: " + s.cert_file);
      ojson j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("certificate JSON: ") + e.what());
      }
      ojson payload = j.contains("result") && j["result"].contains("certificate")
                          ? j["result"]["certificate"]
                          : j.contains("certificate") ? j["certificate"] : j;
      Certificate c = certificate_from_json(payload, s.lim);
      CheckResult cr = check_certificate(c, s.lim);
      result["ok"] = cr.ok;
      if (!cr.ok) {
        result["fail_step"] = cr.step;
        result["reason"] = cr.reason;
        code = 1;
      } else {
        result["stats"] = stats_json(certificate_stats(c));
      }
    }
  } catch (const parse_error& e) {
    code = 2;
    result = {{"error", e.what()}, {"error_kind", "parse"}};
  } catch (const ring_mismatch& e) {
    code = 2;
    result = {{"error", e.what()}, {"error_kind", "input"}};
  } catch (const cutoff_error& e) {
    code = 3;
    result = {{"error", e.what()}, {"error_kind", "cutoff"}};
  } catch (const math_error& e) {
    code = 2;
    result = {{"error", e.what()}, {"error_kind", "math"}};
  }

  ojson report;
  report["schema"] = kSchemaVersion;
  report["command"] = command;
  report["config"] = {{"max_degree", s.lim.max_degree},
                      {"max_pairs", s.lim.max_pairs},
                      {"max_resolution", s.lim.max_resolution},
                      {"format", s.format}};
  ojson inputs;
  if (!s.ring_text.empty()) inputs["ring"] = s.ring_text;
  if (!s.ideal_text.empty()) inputs["ideal"] = s.ideal_text;
  if (!s.poly_text.empty()) inputs["poly"] = s.poly_text;
  if (!s.module_text.empty()) inputs["module"] = s.module_text;
  if (!s.module2_text.empty()) inputs["module2"] = s.module2_text;
  if (!s.primes_text.empty()) inputs["primes"] = s.primes_text;
  if (!s.cert_file.empty()) inputs["cert"] = s.cert_file;
  report["inputs"] = std::move(inputs);
  report["result"] = std::move(result);

  CliResult out;
  out.code = code;
  out.report = report;
  if (s.format == "text") {
    std::ostringstream os;
    render_text(report, os, 0);
    out.output = os.str();
  } else {
    out.output = report.dump(2) + "\n";
  }
  if (!s.out_file.empty()) {
    std::ofstream of(s.out_file);
    of << out.output;
  }
  return out;
}

}  // namespace modgen
