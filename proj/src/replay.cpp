// Independent certificate checkers. They consult only the lattice model
// (generator, canonical, intersect, restrict_to) and never call a prover.

#include <algorithm>
#include <set>

#include "burniat/cohomology.hpp"
#include "burniat/effectivity.hpp"

namespace burniat {

namespace {

struct Checker {
  ReplayResult result;

  bool fail(const Certificate& c, const std::string& msg) {
    if (result.ok) {
      result.ok = false;
      result.error = msg + " at " + c.cls.to_string();
    }
    return false;
  }

  bool child_class_ok(const Certificate& parent, const Certificate& child) {
    DivClass expect = parent.cls;
    for (Curve F : child.removed) expect = expect - generator(F);
    return expect == child.cls;
  }

  bool check(const Certificate& c) {
    ++result.nodes_checked;
    const Int dk = intersect(c.cls, canonical());
    switch (c.rule) {
      case Rule::Neg:
        if (dk >= 0) return fail(c, "R-NEG with D.K >= 0");
        if (c.verdict != Verdict::Proven || !c.children.empty()) return fail(c, "malformed R-NEG leaf");
        return true;
      case Rule::Zero:
        if (dk != 0 || c.cls.is_zero()) return fail(c, "R-ZERO hypotheses fail");
        if (c.verdict != Verdict::Proven || !c.children.empty()) return fail(c, "malformed R-ZERO leaf");
        return true;
      case Rule::Refuted:
        if (!c.cls.is_zero()) return fail(c, "REFUTED leaf on a nonzero class");
        if (c.verdict != Verdict::Refuted) return fail(c, "malformed REFUTED leaf");
        return true;
      case Rule::Open:
        if (c.verdict != Verdict::Unknown || !c.children.empty()) return fail(c, "OPEN leaf must be Unknown");
        return true;
      case Rule::Base: {
        if (!c.curve || !is_elliptic(*c.curve)) return fail(c, "R-BASE without an elliptic curve");
        const RestrictionClass r = restrict_to(c.cls, *c.curve);
        if (r.deg != 0 || r.tor == 0) return fail(c, "R-BASE restriction is not (0, nonzero)");
        if (c.children.size() != 1) return fail(c, "R-BASE must have one child");
        const Certificate& ch = c.children.front();
        if (ch.removed != std::vector<Curve>{*c.curve}) return fail(c, "R-BASE child removes the wrong curve");
        if (!child_class_ok(c, ch)) return fail(c, "R-BASE child class mismatch");
        if (ch.verdict != c.verdict) return fail(c, "R-BASE verdict does not follow its child");
        return check(ch);
      }
      case Rule::Corner: {
        const CornerConfig* g = find_corner_config(c.corner);
        if (!g) return fail(c, "unknown corner configuration");
        for (const auto& [E, Ep] : g->pairs) {
          if (restrict_to(c.cls, E) != RestrictionClass{1, 0b10})
            return fail(c, "corner restriction is not (1, 10)");
          if (intersect(c.cls, generator(Ep)) != 0) return fail(c, "corner partner degree is not 0");
        }
        if (c.children.size() != 8) return fail(c, "R-CORNER needs 8 branches");
        std::set<std::vector<Curve>> picks;
        bool all_proven = true, any_refuted = false;
        for (const Certificate& ch : c.children) {
          if (ch.removed.size() != 3) return fail(c, "corner branch must remove three curves");
          for (std::size_t k = 0; k < 3; ++k)
            if (ch.removed[k] != g->pairs[k].first && ch.removed[k] != g->pairs[k].second)
              return fail(c, "corner branch picks a curve outside its pair");
          picks.insert(ch.removed);
          if (!child_class_ok(c, ch)) return fail(c, "corner branch class mismatch");
          all_proven = all_proven && ch.verdict == Verdict::Proven;
          any_refuted = any_refuted || ch.verdict == Verdict::Refuted;
          if (!check(ch)) return false;
        }
        if (picks.size() != 8) return fail(c, "corner branches are not the 8 distinct choices");
        const Verdict expect = any_refuted ? Verdict::Refuted : all_proven ? Verdict::Proven : Verdict::Unknown;
        if (c.verdict != expect) return fail(c, "corner verdict is not the conjunction of its branches");
        return true;
      }
    }
    return fail(c, "unknown rule");
  }
};

}  // namespace

ReplayResult replay_certificate(const Certificate& cert) {
  Checker ch;
  ch.check(cert);
  return ch.result;
}

ReplayResult replay_chain(const ChainCertificate& cert) {
  ReplayResult r;
  auto fail = [&r](const std::string& msg) {
    r.ok = false;
    r.error = msg;
    return r;
  };
  if (!cert.target.is_torsion() && cert.chain.empty()) return fail("empty chain for a non-torsion class");
  // Lemma-level axioms: h^1(O) = 0 and h^1(tau) = 0 off the three exceptional torsion classes.
  const DivClass base = DivClass::torsion(cert.base);
  if (!cert.base.is_zero() && in_pardini_set(cert.base)) return fail("base torsion lies in the Pardini set");
  DivClass cur = base;
  if (cert.steps.size() != cert.chain.size()) return fail("step list does not match chain");
  for (std::size_t s = 0; s < cert.chain.size(); ++s) {
    ++r.nodes_checked;
    const Curve E = cert.chain[s];
    const ChainStep& step = cert.steps[s];
    if (step.curve != E || step.before != cur) return fail("step " + std::to_string(s) + " is out of sync");
    if (is_elliptic(E)) {
      const RestrictionClass res = restrict_to(cur, E);
      if (!(res.deg < 0 || (res.deg == 0 && res.tor != 0)))
        return fail("restriction to " + std::string(curve_name(E)) + " may have sections");
    } else if (intersect(cur, generator(E)) >= 0) {
      return fail("restriction to genus 2 curve " + std::string(curve_name(E)) + " has degree >= 0");
    }
    cur = cur - generator(E);
  }
  if (cur != cert.target) return fail("chain does not end at the target class");
  ++r.nodes_checked;
  return r;
}

}  // namespace burniat
