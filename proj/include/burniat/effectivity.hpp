#pragma once

// Rule-based prover for h^0(O_X(D)) = 0.
//
// Rules, tried in this order at every node:
//   R-NEG     D.K < 0                         -> not effective (K is ample)
//   R-ZERO    D.K = 0 and D != 0              -> not effective
//   refute    D = 0                           -> effective
//   R-BASE(E) D|_E = (0, tau), tau != 0        -> E is in the base locus; recurse on D - E
//   R-CORNER  the three-corner configuration  -> recurse on all 8 residuals
//
// R-BASE works in batches: all elliptic curves applicable at a node form a
// batch, and the rest of the batch is re-verified on the residual before any
// fresh curve is considered. Proven and Refuted verdicts are always sound;
// Unknown is returned when no rule closes within the depth budget.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "burniat/picard.hpp"

namespace burniat {

enum class Verdict { Proven, Refuted, Unknown };
std::string_view verdict_name(Verdict v);

enum class Rule { Neg, Zero, Base, Corner, Refuted, Open };
std::string_view rule_name(Rule r);
std::optional<Rule> parse_rule(std::string_view name);

struct CornerConfig {
  std::string_view name;
  /// (E, E'): D|_E must equal (1, 10) and D.E' must vanish.
  std::array<std::pair<Curve, Curve>, 3> pairs;
};

inline constexpr CornerConfig kCornerG0{
    "G0", {{{Curve::A0, Curve::C3}, {Curve::B0, Curve::A3}, {Curve::C0, Curve::B3}}}};
inline constexpr CornerConfig kCornerG3{
    "G3", {{{Curve::A3, Curve::C0}, {Curve::B3, Curve::A0}, {Curve::C3, Curve::B0}}}};
inline constexpr std::array<CornerConfig, 2> kCornerConfigs = {kCornerG0, kCornerG3};

/// The six curves partition the elliptic set and each E' meets E in the
/// corner point (1, 10).
bool corner_config_valid(const CornerConfig& g);
const CornerConfig* find_corner_config(std::string_view name);

struct Certificate {
  DivClass cls;
  Rule rule = Rule::Open;
  Verdict verdict = Verdict::Unknown;
  /// Curves subtracted from the parent's class to reach this node.
  std::vector<Curve> removed;
  /// Set for R-BASE.
  std::optional<Curve> curve;
  /// Set for R-CORNER.
  std::string corner;
  /// R-BASE node that continues the batch started by an ancestor.
  bool batch_continuation = false;
  std::vector<Certificate> children;

  std::size_t depth() const;
  std::size_t node_count() const;
  bool operator==(const Certificate&) const = default;
};

struct H0Proof {
  Verdict verdict = Verdict::Unknown;
  Certificate certificate;
};

/// max_depth bounds the number of R-BASE / R-CORNER applications along any
/// path. Requires max_depth >= 1.
H0Proof prove_h0_zero(const DivClass& D, int max_depth);

/// Coefficients m_c >= 0 (indexed like kAllCurves) with sum m_c * c == D in
/// Pic X, each m_c <= coeff_bound. Among all witnesses, the one with the
/// fewest genus 2 curves is returned, ties broken by the smallest coefficient
/// vector in kAllCurves order. Requires 0 <= coeff_bound <= 6.
std::optional<std::array<int, 12>> effective_witness(const DivClass& D, int coeff_bound);

/// Result of checking a certificate against the lattice model alone.
struct ReplayResult {
  bool ok = true;
  std::string error;
  std::size_t nodes_checked = 0;
};

/// Re-validates every node of an h^0 certificate using only picard operations.
ReplayResult replay_certificate(const Certificate& cert);

/// Linear summary of a certificate's main path: R-BASE batches followed by
/// the closing rule.
struct TraceSummary {
  std::vector<std::vector<Curve>> batches;
  Rule closing = Rule::Open;
  std::string corner;
};
TraceSummary summarize(const Certificate& cert);

/// Shorthand such as "R5-R6 -> D-C0C3; DK=0, D!=0".
std::string render_trace(std::string_view label, const Certificate& cert);

}  // namespace burniat
