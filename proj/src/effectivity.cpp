#include "burniat/effectivity.hpp"

#include <algorithm>
#include <stdexcept>

namespace burniat {

namespace {

constexpr RestrictionClass kCornerPoint{1, 0b10};

bool base_applicable(const DivClass& D, Curve E) {
  const RestrictionClass r = restrict_to(D, E);
  return r.deg == 0 && r.tor != 0;
}

bool corner_applicable(const DivClass& D, const CornerConfig& g) {
  return std::all_of(g.pairs.begin(), g.pairs.end(), [&](const auto& p) {
    return restrict_to(D, p.first) == kCornerPoint && degree_on(D, p.second) == 0;
  });
}

class Prover {
 public:
  Certificate node(const DivClass& D, int budget, std::vector<Curve> pending) const {
    Certificate c;
    c.cls = D;
    const Int dk = intersect(D, canonical());
    if (dk < 0) return leaf(std::move(c), Rule::Neg, Verdict::Proven);
    if (dk == 0 && !D.is_zero()) return leaf(std::move(c), Rule::Zero, Verdict::Proven);
    if (D.is_zero()) return leaf(std::move(c), Rule::Refuted, Verdict::Refuted);
    if (budget <= 0) return leaf(std::move(c), Rule::Open, Verdict::Unknown);

    std::erase_if(pending, [&](Curve E) { return !base_applicable(D, E); });
    const bool continuation = !pending.empty();
    if (pending.empty())
      for (Curve E : kEllipticCurves)
        if (base_applicable(D, E)) pending.push_back(E);
    if (!pending.empty()) {
      const Curve E = pending.front();
      pending.erase(pending.begin());
      c.rule = Rule::Base;
      c.curve = E;
      c.batch_continuation = continuation;
      Certificate child = node(D - generator(E), budget - 1, std::move(pending));
      child.removed = {E};
      c.verdict = child.verdict;
      c.children.push_back(std::move(child));
      return c;
    }

    for (const CornerConfig& g : kCornerConfigs) {
      if (!corner_applicable(D, g)) continue;
      c.rule = Rule::Corner;
      c.corner = std::string(g.name);
      bool all_proven = true, any_refuted = false;
      for (int mask = 0; mask < 8; ++mask) {
        std::vector<Curve> picks;
        DivClass residual = D;
        for (int k = 0; k < 3; ++k) {
          const auto& [E, Ep] = g.pairs[k];
          const Curve F = (mask >> (2 - k)) & 1 ? Ep : E;
          picks.push_back(F);
          residual -= generator(F);
        }
        Certificate child = node(residual, budget - 1, {});
        child.removed = std::move(picks);
        all_proven = all_proven && child.verdict == Verdict::Proven;
        any_refuted = any_refuted || child.verdict == Verdict::Refuted;
        c.children.push_back(std::move(child));
      }
      c.verdict = any_refuted ? Verdict::Refuted : all_proven ? Verdict::Proven : Verdict::Unknown;
      return c;
    }
    return leaf(std::move(c), Rule::Open, Verdict::Unknown);
  }

 private:
  static Certificate leaf(Certificate c, Rule r, Verdict v) {
    c.rule = r;
    c.verdict = v;
    return c;
  }
};

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Proven: return "Proven";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::Neg: return "R-NEG";
    case Rule::Zero: return "R-ZERO";
    case Rule::Base: return "R-BASE";
    case Rule::Corner: return "R-CORNER";
    case Rule::Refuted: return "REFUTED";
    case Rule::Open: return "OPEN";
  }
  return "?";
}

std::optional<Rule> parse_rule(std::string_view name) {
  for (Rule r : {Rule::Neg, Rule::Zero, Rule::Base, Rule::Corner, Rule::Refuted, Rule::Open})
    if (rule_name(r) == name) return r;
  return std::nullopt;
}

bool corner_config_valid(const CornerConfig& g) {
  std::vector<Curve> seen;
  for (const auto& [E, Ep] : g.pairs) {
    if (!is_elliptic(E) || !is_elliptic(Ep)) return false;
    if (restrict_to(generator(Ep), E) != kCornerPoint) return false;
    seen.push_back(E);
    seen.push_back(Ep);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end() && seen.size() == 6;
}

const CornerConfig* find_corner_config(std::string_view name) {
  for (const CornerConfig& g : kCornerConfigs)
    if (g.name == name) return &g;
  return nullptr;
}

std::size_t Certificate::depth() const {
  std::size_t d = 0;
  for (const Certificate& ch : children) d = std::max(d, ch.depth());
  return children.empty() ? 0 : d + 1;
}

std::size_t Certificate::node_count() const {
  std::size_t n = 1;
  for (const Certificate& ch : children) n += ch.node_count();
  return n;
}

H0Proof prove_h0_zero(const DivClass& D, int max_depth) {
  if (max_depth < 1) throw std::invalid_argument("prove_h0_zero: max_depth must be >= 1");
  Certificate cert = Prover{}.node(D, max_depth, {});
  const Verdict v = cert.verdict;
  return {v, std::move(cert)};
}

std::optional<std::array<int, 12>> effective_witness(const DivClass& D, int coeff_bound) {
  if (coeff_bound < 0 || coeff_bound > 6)
    throw std::invalid_argument("effective_witness: coeff_bound must lie in [0, 6]");
  if (D.d() < 0) return std::nullopt;

  // Search order: genus 2 curves first with ascending coefficients, so the
  // first hit uses the fewest (then lexicographically smallest) genus 2
  // curves; then the elliptic curves. The K-degree of the remainder prunes.
  std::array<Curve, 12> order{};
  std::copy(kGenus2Curves.begin(), kGenus2Curves.end(), order.begin());
  std::copy(kEllipticCurves.begin(), kEllipticCurves.end(), order.begin() + 6);

  std::optional<std::array<int, 12>> best;
  std::array<int, 12> coeff{};
  int best_genus2 = 0;

  auto index_of = [](Curve c) { return static_cast<std::size_t>(std::find(kAllCurves.begin(), kAllCurves.end(), c) - kAllCurves.begin()); };

  auto dfs = [&](auto&& self, std::size_t k, const DivClass& rest, int genus2) -> void {
    if (best && genus2 > best_genus2) return;
    if (k == order.size()) {
      if (!rest.is_zero()) return;
      if (!best || genus2 < best_genus2 || (genus2 == best_genus2 && coeff < *best)) {
        best = coeff;
        best_genus2 = genus2;
      }
      return;
    }
    const Curve c = order[k];
    const DivClass g = generator(c);
    DivClass r = rest;
    for (int m = 0; m <= coeff_bound && r.d() >= 0; ++m) {
      coeff[index_of(c)] = m;
      self(self, k + 1, r, genus2 + (is_elliptic(c) ? 0 : m));
      r -= g;
    }
    coeff[index_of(c)] = 0;
  };
  dfs(dfs, 0, D, 0);
  return best;
}

TraceSummary summarize(const Certificate& cert) {
  TraceSummary s;
  const Certificate* c = &cert;
  while (c->rule == Rule::Base) {
    if (!c->batch_continuation || s.batches.empty()) s.batches.emplace_back();
    s.batches.back().push_back(*c->curve);
    c = &c->children.front();
  }
  s.closing = c->rule;
  s.corner = c->corner;
  return s;
}

std::string render_trace(std::string_view label, const Certificate& cert) {
  const TraceSummary s = summarize(cert);
  std::string out(label);
  for (const auto& batch : s.batches) {
    out += " -> D-";
    for (Curve E : batch) out += curve_name(E);
  }
  const Certificate* leaf = &cert;
  while (leaf->rule == Rule::Base) leaf = &leaf->children.front();
  switch (s.closing) {
    case Rule::Neg: out += "; DK<0"; break;
    case Rule::Zero: out += "; DK=0, D!=0"; break;
    case Rule::Refuted: out += "; D=0, effective"; break;
    case Rule::Open: out += "; open"; break;
    case Rule::Corner: {
      const CornerConfig* g = find_corner_config(s.corner);
      out += "; corner " + s.corner + " (";
      for (std::size_t k = 0; g && k < g->pairs.size(); ++k) {
        out += k ? "," : "";
        out += std::string(curve_name(g->pairs[k].first)) + std::string(curve_name(g->pairs[k].second));
      }
      const auto closed = std::count_if(leaf->children.begin(), leaf->children.end(),
                                        [](const Certificate& ch) { return ch.verdict == Verdict::Proven; });
      out += "): " + std::to_string(closed) + "/" + std::to_string(leaf->children.size()) +
             " branches closed";
      break;
    }
    case Rule::Base: break;
  }
  return out;
}

}  // namespace burniat
