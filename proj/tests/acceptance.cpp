// End-to-end acceptance suite.  Each criterion prints exactly one PASS/FAIL
// line with its wall time; the process exits with the number of failures.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "modgen/certificate.hpp"
#include "modgen/cli.hpp"
#include "modgen/genesis.hpp"
#include "modgen/loci.hpp"
#include "modgen/oracle.hpp"
#include "modgen/parse.hpp"

using namespace modgen;
using Clock = std::chrono::steady_clock;

namespace {

Limits lim;

QPtr make_ring(const std::vector<std::string>& vars, const FieldSpec& f,
               const std::string& ideal_text) {
  auto A = PolyRing::make(f, vars);
  return QuotientRing::make(A, parse_poly_list(A, ideal_text), lim);
}

QPtr dual_ring() { return make_ring({"x"}, FieldSpec::Q(), "x^2"); }
QPtr node_ring() { return make_ring({"x", "y"}, FieldSpec::Q(), "x*y"); }
QPtr cusp_ring() { return make_ring({"x", "y"}, FieldSpec::Q(), "y^2-x^3"); }

ClosedLocus vee(const QPtr& r, const std::string& text) {
  return ClosedLocus{r, Ideal(r->ambient, parse_poly_list(r->ambient, text))};
}

Poly random_small_poly(const RingPtr& A, std::mt19937& rng, int max_deg,
                       int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms), coef(1, 100);
  std::uniform_int_distribution<int> expd(0, max_deg);
  Poly out = Poly::zero(A);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Exp e(A->nvars(), 0);
    int budget = max_deg;
    for (auto& x : e) {
      int d = std::uniform_int_distribution<int>(0, budget)(rng);
      x = (std::uint32_t)d;
      budget -= d;
    }
    out = out + Poly::monomial(A, e, A->field.from_long(coef(rng)));
  }
  return out;
}

struct Instance {
  QPtr ring;
  PresentedModule mod;
};

// hypersurface rings over F_101 in <= 3 variables, modules with <= 3
// generators and sparse low-degree relations
std::vector<Instance> random_suite(int count, std::mt19937& rng) {
  std::vector<std::vector<std::string>> varsets{
      {"x"}, {"x", "y"}, {"x", "y", "z"}};
  std::vector<Instance> out;
  while ((int)out.size() < count) {
    auto& vars = varsets[rng() % varsets.size()];
    auto A = PolyRing::make(FieldSpec::Fp(101), vars);
    Poly f = random_small_poly(A, rng, 3, 2);
    if (f.is_constant() && !f.is_zero()) continue;  // unit ideal: skip
    QPtr r = QuotientRing::make(A, f.is_zero() ? std::vector<Poly>{} :
                                                 std::vector<Poly>{f}, lim);
    // three-variable instances stay small: resolutions over random cubic
    // hypersurfaces grow quickly
    int max_g = vars.size() == 3 ? 2 : 3;
    int entry_deg = vars.size() == 3 ? 1 : 2;
    int g = 1 + (int)(rng() % max_g);
    int nrel = 1 + (int)(rng() % (g + 1));
    std::vector<Vec> rels;
    for (int c = 0; c < nrel; ++c) {
      Vec v;
      for (int i = 0; i < g; ++i)
        v.push_back(rng() % 2 ? random_small_poly(A, rng, entry_deg, 1)
                              : Poly::zero(A));
      rels.push_back(v);
    }
    out.push_back({r, PresentedModule(r, g, rels)});
  }
  return out;
}

struct CorpusCert {
  std::string label;
  QPtr ring;
  Certificate cert;
};

bool g_corpus_built = false;
std::vector<CorpusCert> g_corpus;
std::vector<PresentedModule> g_dual_summands;  // generator summands over Q[x]/(x^2)
std::vector<PresentedModule> g_dual_modules;   // certified modules over Q[x]/(x^2)
std::string g_corpus_error;

void build_corpus() {
  if (g_corpus_built) return;
  g_corpus_built = true;
  try {
    struct Entry {
      const char* label;
      QPtr ring;
    };
    std::vector<Entry> rings{{"Q[x]", make_ring({"x"}, FieldSpec::Q(), "")},
                             {"Q[x]/(x^2)", dual_ring()},
                             {"node", node_ring()},
                             {"cusp", cusp_ring()}};
    for (auto& e : rings) {
      GeneratorResult g = build_generator(e.ring, lim);
      if (g.depth > e.ring->dim + 1)
        throw math_error(std::string("recursion depth too large for ") + e.label);
      auto A = e.ring->ambient;
      std::vector<PresentedModule> modules;
      modules.push_back(PresentedModule::free_module(e.ring, 1));
      std::vector<Poly> maximal;
      for (std::size_t i = 0; i < A->nvars(); ++i)
        maximal.push_back(Poly::variable(A, i, 1));
      modules.push_back(PresentedModule::cyclic(e.ring, maximal));
      modules.push_back(PresentedModule::cyclic(e.ring, {Poly::variable(A, 0, 1)}));
      if (std::string(e.label) == "cusp")
        modules.push_back(
            present_subquotient(e.ring, 1,
                                {Vec{parse_poly(A, "x")}, Vec{parse_poly(A, "y")}},
                                {}, lim)
                .module);
      if (std::string(e.label) == "Q[x]/(x^2)") {
        g_dual_summands.push_back(PresentedModule::free_module(e.ring, 1));
        for (const auto& p : g.parts) g_dual_summands.push_back(p);
      }
      for (std::size_t mi = 0; mi < modules.size(); ++mi) {
        Certificate c = certify_module(modules[mi], g, lim);
        CheckResult cr = check_certificate(c, lim);
        if (!cr.ok)
          throw math_error(std::string(e.label) + " module " +
                           std::to_string(mi) + ": step " +
                           std::to_string(cr.step) + " " + cr.reason);
        g_corpus.push_back({std::string(e.label) + "#" + std::to_string(mi),
                            e.ring, std::move(c)});
        if (std::string(e.label) == "Q[x]/(x^2)")
          g_dual_modules.push_back(modules[mi]);
      }
    }
  } catch (const std::exception& e) {
    g_corpus_error = e.what();
  }
}

// ---- criteria ---------------------------------------------------------------

bool crit_loci(std::string& msg, long& budget_ms) {
  budget_ms = 2000;
  auto c = cusp_ring();
  if (!locus_equal(singular_locus(c, lim), vee(c, "x; y"), lim)) {
    msg = "cusp singular locus is not V(x, y)";
    return false;
  }
  auto n = node_ring();
  if (!locus_equal(singular_locus(n, lim), vee(n, "x; y"), lim)) {
    msg = "node singular locus is not V(x, y)";
    return false;
  }
  return true;
}

bool crit_stabilization(std::string& msg, long& budget_ms) {
  budget_ms = 120000;
  std::mt19937 rng(811);
  auto suite = random_suite(20, rng);
  for (std::size_t t = 0; t < suite.size(); ++t) {
    const auto& inst = suite[t];
    int d = std::max(inst.ring->dim, 0);
    std::vector<ClosedLocus> chain;
    for (int n = 1; n <= d + 3; ++n) {
      PresentedModule om = syzygy(n, inst.mod, lim);
      PresentedModule e = ext_module(n, inst.mod, om, lim);
      chain.push_back(ClosedLocus{inst.ring, annihilator(e, lim)});
    }
    for (std::size_t i = 1; i < chain.size(); ++i)
      if (!locus_contains(chain[i - 1], chain[i], lim)) {
        msg = "instance " + std::to_string(t) + ": support not descending at n=" +
              std::to_string(i + 1);
        return false;
      }
    // chain[d] is n = d+1, chain[d+1] is n = d+2
    if (!locus_equal(chain[d], chain[d + 1], lim)) {
      msg = "instance " + std::to_string(t) + ": no stabilization at n=d+1";
      return false;
    }
  }
  return true;
}

bool crit_perf_sanity(std::string& msg, long& budget_ms) {
  budget_ms = 15000;
  auto n = node_ring();
  if (!nonperf_locus(PresentedModule::free_module(n, 2), lim).is_empty(lim)) {
    msg = "free module has a nonempty imperfection locus";
    return false;
  }
  auto d = dual_ring();
  PresentedModule k = PresentedModule::cyclic(d, {parse_poly(d->ambient, "x")});
  if (!locus_equal(nonperf_locus(k, lim), vee(d, "x"), lim)) {
    msg = "k over Q[x]/(x^2): imperfection locus is not V(x)";
    return false;
  }
  PresentedModule rx = PresentedModule::cyclic(n, {parse_poly(n->ambient, "x")});
  if (!locus_equal(nonperf_locus(rx, lim), vee(n, "x; y"), lim)) {
    msg = "R/(x) over the node: imperfection locus is not V(x, y)";
    return false;
  }
  return true;
}

bool crit_containment(std::string& msg, long& budget_ms) {
  budget_ms = 120000;
  std::mt19937 rng(811);  // same suite as the stabilization criterion
  auto suite = random_suite(20, rng);
  for (std::size_t t = 0; t < suite.size(); ++t) {
    ClosedLocus np = nonperf_locus(suite[t].mod, lim);
    ClosedLocus sing = singular_locus(suite[t].ring, lim);
    if (!locus_contains(sing, np, lim)) {
      msg = "instance " + std::to_string(t) +
            ": imperfection locus escapes the singular locus";
      return false;
    }
  }
  return true;
}

bool crit_generator(std::string& msg, long& budget_ms) {
  budget_ms = 60000;
  build_corpus();
  if (!g_corpus_error.empty()) {
    msg = g_corpus_error;
    return false;
  }
  if (g_corpus.size() != 13) {  // 3 modules per ring + cusp maximal ideal
    msg = "unexpected corpus size " + std::to_string(g_corpus.size());
    return false;
  }
  return true;
}

bool crit_summand_cover(std::string& msg, long& budget_ms) {
  budget_ms = 30000;
  for (const QPtr& r : {node_ring(), cusp_ring()}) {
    GeneratorResult g = build_generator(r, lim);
    std::vector<PresentedModule> summands;
    summands.push_back(PresentedModule::free_module(r, 1));  // extra copy of R
    summands.push_back(PresentedModule::free_module(r, 1));
    for (const auto& p : g.parts) summands.push_back(p);
    Ideal acc(r->ambient, {Poly::constant(r->ambient, 1)});
    for (const auto& s : summands)
      acc = ideal_intersect(acc, nonperf_locus(s, lim).defining, lim);
    if (!locus_equal(ClosedLocus{r, acc}, singular_locus(r, lim), lim)) {
      msg = "union of summand imperfection loci differs from the singular locus";
      return false;
    }
  }
  return true;
}

bool crit_tamper(std::string& msg, long& budget_ms) {
  budget_ms = 60000;
  build_corpus();
  if (!g_corpus_error.empty()) {
    msg = g_corpus_error;
    return false;
  }
  int mutations = 0, rejected = 0;
  for (const auto& entry : g_corpus) {
    const auto A = entry.ring->ambient;
    for (std::size_t si = 0; si < entry.cert.steps.size(); ++si) {
      const CertStep& st = entry.cert.steps[si];
      for (std::size_t mi = 0; mi < st.mats.size(); ++mi)
        for (std::size_t ci = 0; ci < st.mats[mi].size(); ++ci)
          for (std::size_t ri = 0; ri < st.mats[mi][ci].size(); ++ri)
            for (int variant = 0; variant < 2; ++variant) {
              Certificate bad = entry.cert;
              Poly delta = variant == 0 ? Poly::constant(A, 1)
                                        : Poly::variable(A, 0, 1);
              bad.steps[si].mats[mi][ci][ri] =
                  bad.steps[si].mats[mi][ci][ri] + delta;
              CheckResult cr = check_certificate(bad, lim);
              ++mutations;
              if (!cr.ok) {
                ++rejected;
                if (cr.step != (int)si) {
                  msg = entry.label + ": mutation at step " + std::to_string(si) +
                        " rejected at step " + std::to_string(cr.step);
                  return false;
                }
              }
            }
    }
  }
  if (mutations < 50 || rejected < 50) {
    msg = "only " + std::to_string(rejected) + " of " +
          std::to_string(mutations) + " mutations rejected; need 50";
    return false;
  }
  msg = std::to_string(rejected) + "/" + std::to_string(mutations) +
        " mutations rejected at the mutated step";
  return true;
}

bool crit_oracles(std::string& msg, long& budget_ms) {
  budget_ms = 120000;
  // projective dimension: resolution route vs ext-vanishing route
  std::mt19937 rng(271828);
  std::vector<QPtr> regs{make_ring({"x"}, FieldSpec::Q(), ""),
                         make_ring({"x", "y"}, FieldSpec::Q(), ""),
                         make_ring({"x", "y", "z"}, FieldSpec::Fp(101), "")};
  for (int t = 0; t < 30; ++t) {
    const QPtr& r = regs[t % regs.size()];
    auto A = r->ambient;
    int g = 1 + (int)(rng() % 2);
    std::vector<Vec> rels;
    int nrel = (int)(rng() % 3);
    for (int c = 0; c < nrel; ++c) {
      Vec v;
      for (int i = 0; i < g; ++i)
        v.push_back(rng() % 2 ? random_small_poly(A, rng, 2, 1) : Poly::zero(A));
      rels.push_back(v);
    }
    PresentedModule m(r, g, rels);
    auto p = pd_by_resolution(m, (int)A->nvars() + 1, lim);
    if (!p) {
      msg = "finite projective dimension not reached over a regular ring";
      return false;
    }
    if (!is_pd_le(m, *p, lim) || (*p > 0 && is_pd_le(m, *p - 1, lim))) {
      msg = "pd disagreement on instance " + std::to_string(t);
      return false;
    }
  }
  // graded ext: dimension-shift route vs direct computation
  std::vector<QPtr> artin{make_ring({"x"}, FieldSpec::Q(), "x^2"),
                          make_ring({"x"}, FieldSpec::Q(), "x^3"),
                          make_ring({"x"}, FieldSpec::Fp(101), "x^2"),
                          make_ring({"x", "y"}, FieldSpec::Q(), "x^2; y^2")};
  int graded_instances = 0;
  for (const auto& r : artin) {
    auto A = r->ambient;
    for (std::size_t v = 0; v < A->nvars() && graded_instances < 10; ++v) {
      PresentedModule m(r, 1, {Vec{Poly::variable(A, v, 1)}},
                        std::vector<long>{(long)(graded_instances % 3)});
      ++graded_instances;
      for (int n = 1; n <= 5; ++n) {
        GradedVectorData shifted = ext_by_dimension_shift(n, m, m, -10, 10, lim);
        PresentedModule e = ext_module(n, m, m, lim);
        if (!e.gen_degrees().has_value()) {
          msg = "ext module lost its grading";
          return false;
        }
        if (!(shifted == graded_dimensions(e, -10, 10, lim))) {
          msg = "graded ext mismatch, instance " +
                std::to_string(graded_instances) + " n=" + std::to_string(n);
          return false;
        }
      }
    }
  }
  // derivation probe corroborates every certificate over the artinian ring
  build_corpus();
  if (!g_corpus_error.empty()) {
    msg = g_corpus_error;
    return false;
  }
  for (const auto& m : g_dual_modules)
    if (!artinian_thick_probe(g_dual_summands, m, 12, lim)) {
      msg = "probe fails to corroborate an artinian certificate";
      return false;
    }
  return true;
}

bool crit_determinism(std::string& msg, long& budget_ms) {
  budget_ms = 120000;
  std::vector<std::vector<std::string>> cmds{
      {"gb", "--ring", "Q[x,y]", "--ideal", "x^2-y; x^3-y*x"},
      {"nf", "--ring", "Q[x,y]", "--ideal", "x^2-y", "--poly", "x^2*y + y"},
      {"resolve", "--ring", "Q[x]/(x^2)", "--module", "gens 1 relations [[x]]",
       "--length", "4"},
      {"ext", "--ring", "Q[x]/(x^2)", "--module", "gens 1 relations [[x]]",
       "--module2", "gens 1 relations [[x]]", "--n", "2"},
      {"sing-locus", "--ring", "Q[x,y]/(y^2-x^3)"},
      {"perf-locus", "--ring", "Q[x,y]/(x*y)", "--module",
       "gens 1 relations [[x]]"},
      {"j0", "--ring", "Q[x,y]/(y^2-x^3)", "--domain"},
      {"nagata", "--ring", "Q[x,y]/(x*y)", "--primes", "(x);(y)"},
      {"gen", "--ring", "Q[x,y]/(x*y)"},
      {"certify", "--ring", "Q[x,y]/(y^2-x^3)", "--module",
       "gens 2 relations [[y,-x],[x^2,-y]]"},
  };
  std::string cert_path = "acceptance_cert_tmp.json";
  for (const auto& cmd : cmds) {
    CliResult a = run_command(cmd);
    CliResult b = run_command(cmd);
    if (a.code != 0 || b.code != 0) {
      msg = "command " + cmd[0] + " exited with " + std::to_string(a.code);
      return false;
    }
    if (a.output != b.output) {
      msg = "command " + cmd[0] + " is not byte-deterministic";
      return false;
    }
    if (cmd[0] == "certify") {
      std::ofstream out(cert_path);
      out << a.output;
    }
  }
  CliResult ka = run_command({"check", cert_path});
  CliResult kb = run_command({"check", cert_path});
  std::remove(cert_path.c_str());
  if (ka.code != 0 || ka.output != kb.output) {
    msg = "check is not byte-deterministic";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool(std::string&, long&)> fn;
  };
  std::vector<Criterion> criteria{
      {"singular loci of the cusp and the node equal V(x, y)", crit_loci},
      {"ext-support chains descend and stabilize at n = dim + 1", crit_stabilization},
      {"imperfection loci of the reference modules", crit_perf_sanity},
      {"imperfection loci stay inside the singular locus", crit_containment},
      {"generator construction and certification across the corpus", crit_generator},
      {"summand imperfection loci cover exactly the singular locus", crit_summand_cover},
      {"single-entry tampering is rejected at the mutated step", crit_tamper},
      {"independent oracles agree with the primary routes", crit_oracles},
      {"repeated CLI runs are byte-identical", crit_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string msg;
    long budget_ms = 0;
    auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = criteria[i].fn(msg, budget_ms);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  Clock::now() - t0)
                  .count();
    if (ok && budget_ms > 0 && ms > budget_ms) {
      ok = false;
      msg = "over time budget (" + std::to_string(ms) + " ms > " +
            std::to_string(budget_ms) + " ms)";
    }
    if (!ok) ++failures;
    std::printf("%s criterion %zu: %s [%ld ms]%s%s\n", ok ? "PASS" : "FAIL",
                i + 1, criteria[i].name, ms, msg.empty() ? "" : " -- ",
                msg.c_str());
    std::fflush(stdout);
  }
  return failures;
}
