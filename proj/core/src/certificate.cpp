#include "modgen/certificate.hpp"

#include <algorithm>
#include <set>

#include "modgen/errors.hpp"

namespace modgen {

PresentedModule restrict_module(const PresentedModule& m, const QPtr& outer) {
  std::vector<Vec> rels = m.relations();
  for (const auto& g : m.ring()->defining.gens())
    for (int i = 0; i < m.ngens(); ++i) {
      Vec v = vec_zero(outer->ambient, m.ngens());
      v[i] = g;
      rels.push_back(std::move(v));
    }
  return PresentedModule(outer, m.ngens(), std::move(rels));
}

namespace {

struct Checker {
  const Limits& lim;

  CheckResult fail(int step, std::string reason) {
    CheckResult r;
    r.ok = false;
    r.step = step;
    r.reason = std::move(reason);
    return r;
  }

  // builds a map and verifies well-definedness; nullopt on failure
  std::optional<ModuleMap> map_of(const PresentedModule& src, const PresentedModule& tgt,
                                  const std::vector<Vec>& cols) {
    try {
      return make_map(src, tgt, cols, lim);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  CheckResult run(const Certificate& c) {
    if (c.root < 0 || c.root >= (int)c.objects.size())
      return fail(-1, "missing or invalid root object");
    if (c.steps.empty()) return fail(-1, "empty certificate");
    std::vector<bool> done(c.objects.size(), false);
    bool used_free_axiom = false;

    std::vector<std::string> part_keys;
    for (const auto& p : c.generator_parts) part_keys.push_back(p.canonical_key(lim));

    for (int si = 0; si < (int)c.steps.size(); ++si) {
      const CertStep& st = c.steps[si];
      if (st.target < 0 || st.target >= (int)c.objects.size())
        return fail(si, "invalid target id");
      if (done[st.target]) return fail(si, "target already established");
      const PresentedModule& tgt = c.objects[st.target];
      if (!tgt.ring()->same_as(*c.ring)) return fail(si, "object over wrong ring");
      for (int r : st.refs) {
        if (r < 0 || r >= (int)c.objects.size()) return fail(si, "invalid reference id");
        // an SES may list its own target among the three objects; everything
        // else must reference established objects only
        if (!done[r] && !(st.kind == CertStep::Ses && r == st.target))
          return fail(si, "reference not yet established");
      }

      switch (st.kind) {
        case CertStep::Axiom: {
          bool free_ok = c.ring_declared && tgt.is_free(lim);
          bool part_ok =
              std::find(part_keys.begin(), part_keys.end(), tgt.canonical_key(lim)) !=
              part_keys.end();
          if (!free_ok && !part_ok)
            return fail(si, "object is not a declared generator part or allowed free module");
          if (free_ok && !part_ok) used_free_axiom = true;
          break;
        }
        case CertStep::Iso: {
          if (st.refs.size() != 1 || st.mats.size() != 2)
            return fail(si, "iso step needs one reference and two maps");
          const PresentedModule& other = c.objects[st.refs[0]];
          auto fwd = map_of(other, tgt, st.mats[0]);
          if (!fwd) return fail(si, "forward map not well defined");
          auto bwd = map_of(tgt, other, st.mats[1]);
          if (!bwd) return fail(si, "backward map not well defined");
          if (!maps_equal(compose(*bwd, *fwd, lim), identity_map(other), lim))
            return fail(si, "bwd o fwd is not the identity");
          if (!maps_equal(compose(*fwd, *bwd, lim), identity_map(tgt), lim))
            return fail(si, "fwd o bwd is not the identity");
          break;
        }
        case CertStep::Ses: {
          if (st.refs.size() != 3 || st.mats.size() != 2)
            return fail(si, "ses step needs three references and two maps");
          int fresh = 0;
          for (int r : st.refs)
            if (r == st.target) ++fresh;
          if (fresh != 1) return fail(si, "target must appear exactly once in the sequence");
          // the two non-target objects must be established; target may coincide
          for (int r : st.refs)
            if (r != st.target && !done[r]) return fail(si, "sequence object not established");
          const PresentedModule& x = c.objects[st.refs[0]];
          const PresentedModule& y = c.objects[st.refs[1]];
          const PresentedModule& z = c.objects[st.refs[2]];
          auto alpha = map_of(x, y, st.mats[0]);
          if (!alpha) return fail(si, "left map not well defined");
          auto beta = map_of(y, z, st.mats[1]);
          if (!beta) return fail(si, "right map not well defined");
          ExactnessReport rep = exactness_check({*alpha, *beta}, lim);
          if (!rep.ok) return fail(si, "sequence not exact: " + rep.reason);
          break;
        }
        case CertStep::Summand: {
          if (st.refs.size() != 1 || st.mats.size() != 2)
            return fail(si, "summand step needs one reference and two maps");
          const PresentedModule& amb = c.objects[st.refs[0]];
          auto s = map_of(tgt, amb, st.mats[0]);
          if (!s) return fail(si, "section not well defined");
          auto r = map_of(amb, tgt, st.mats[1]);
          if (!r) return fail(si, "retraction not well defined");
          if (!maps_equal(compose(*r, *s, lim), identity_map(tgt), lim))
            return fail(si, "r o s is not the identity");
          break;
        }
        case CertStep::Dsum: {
          std::size_t k = st.refs.size();
          if (k == 0 || st.mats.size() != 2 * k)
            return fail(si, "dsum step needs parts with injections and projections");
          std::vector<ModuleMap> inj, proj;
          for (std::size_t i = 0; i < k; ++i) {
            auto m1 = map_of(c.objects[st.refs[i]], tgt, st.mats[i]);
            if (!m1) return fail(si, "injection not well defined");
            auto m2 = map_of(tgt, c.objects[st.refs[i]], st.mats[k + i]);
            if (!m2) return fail(si, "projection not well defined");
            inj.push_back(*m1);
            proj.push_back(*m2);
          }
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
              ModuleMap comp = compose(proj[i], inj[j], lim);
              if (i == j) {
                if (!maps_equal(comp, identity_map(comp.src), lim))
                  return fail(si, "projection o injection is not the identity");
              } else if (!map_is_zero(comp, lim)) {
                return fail(si, "cross composite is nonzero");
              }
            }
          // sum of inj o proj must be the identity on the target
          std::vector<Vec> total(tgt.ngens(), vec_zero(c.ring->ambient, tgt.ngens()));
          for (std::size_t i = 0; i < k; ++i) {
            ModuleMap comp = compose(inj[i], proj[i], lim);
            for (int j = 0; j < tgt.ngens(); ++j)
              total[j] = vec_add(total[j], comp.cols[j]);
          }
          auto tot = map_of(tgt, tgt, total);
          if (!tot || !maps_equal(*tot, identity_map(tgt), lim))
            return fail(si, "injections and projections do not sum to the identity");
          break;
        }
        case CertStep::Restrict: {
          if (!st.sub) return fail(si, "missing sub-certificate");
          QPtr expect = QuotientRing::quotient_by(c.ring, st.ideal_gens, lim);
          if (!st.sub->ring->same_as(*expect))
            return fail(si, "sub-certificate ring does not match the quotient");
          CheckResult inner = run(*st.sub);
          if (!inner.ok)
            return fail(si, "sub-certificate step " + std::to_string(inner.step) + ": " +
                                inner.reason);
          // generator compatibility: what the sub uses must restrict into
          // what the outer declaration provides
          for (const auto& p : st.sub->generator_parts) {
            std::string key = restrict_module(p, c.ring).canonical_key(lim);
            if (std::find(part_keys.begin(), part_keys.end(), key) == part_keys.end())
              return fail(si, "sub-certificate generator part missing from outer declaration");
          }
          bool sub_uses_free = false;
          for (const auto& sst : st.sub->steps)
            if (sst.kind == CertStep::Axiom && st.sub->ring_declared) {
              const PresentedModule& ob = st.sub->objects[sst.target];
              bool is_part = false;
              for (const auto& p : st.sub->generator_parts)
                if (p.canonical_key(lim) == ob.canonical_key(lim)) is_part = true;
              if (!is_part && ob.is_free(lim)) sub_uses_free = true;
            }
          if (sub_uses_free) {
            PresentedModule cyc =
                restrict_module(PresentedModule::free_module(st.sub->ring, 1), c.ring);
            std::string key = cyc.canonical_key(lim);
            bool covered =
                std::find(part_keys.begin(), part_keys.end(), key) != part_keys.end() ||
                (c.ring_declared && cyc.is_free(lim));
            if (!covered)
              return fail(si, "sub-certificate uses its ring as axiom but the quotient "
                              "ring is not declared in the outer generator");
          }
          if (restrict_module(st.sub->objects[st.sub->root], c.ring).canonical_key(lim) !=
              tgt.canonical_key(lim))
            return fail(si, "restricted sub-root does not match the target object");
          break;
        }
      }
      done[st.target] = true;
    }
    if (!done[c.root]) return fail((int)c.steps.size() - 1, "root never established");
    if (c.steps.back().target != c.root)
      return fail((int)c.steps.size() - 1, "final step does not establish the root");
    (void)used_free_axiom;
    return {};
  }
};

void stats_walk(const Certificate& c, int depth, CertStats& out,
                std::set<std::string>& att) {
  out.depth = std::max(out.depth, depth);
  for (const auto& a : c.attestations) att.insert(a);
  for (const auto& st : c.steps) {
    ++out.step_count;
    if (st.kind == CertStep::Ses) ++out.triangle_count;
    if (st.kind == CertStep::Restrict && st.sub) stats_walk(*st.sub, depth + 1, out, att);
  }
}

}  // namespace

CheckResult check_certificate(const Certificate& c, const Limits& lim) {
  Checker ch{lim};
  return ch.run(c);
}

CertStats certificate_stats(const Certificate& c) {
  CertStats s;
  std::set<std::string> att;
  stats_walk(c, 0, s, att);
  s.attestations.assign(att.begin(), att.end());
  return s;
}

}  // namespace modgen
