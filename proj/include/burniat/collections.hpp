#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burniat/cohomology.hpp"
#include "burniat/numerics.hpp"
#include "burniat/picard.hpp"

namespace burniat {

/// Ordered line bundles O(R_1), ..., O(R_n) split into consecutive blocks.
struct BlockedCollection {
  std::vector<DivClass> classes;
  std::vector<int> blocks;
  /// Names used in traces; defaults to R1..Rn when empty.
  std::vector<std::string> labels;

  /// Throws std::invalid_argument on bad block sizes or repeated classes.
  void validate() const;
  std::size_t block_of(std::size_t i) const;
  std::string label(std::size_t i) const;
  bool operator==(const BlockedCollection&) const = default;
};

enum class Status { Verified, Inconclusive, Failed };
std::string_view status_name(Status s);

class ExtTable {
 public:
  ExtTable() = default;
  explicit ExtTable(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t size() const { return n_; }
  ExtResult& at(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
  const ExtResult& at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  bool fully_resolved() const;
  std::size_t open_entries() const;

  /// Header "i,j,hom,ext1,ext2" then one row per ordered pair; open entries
  /// are written as "?".
  std::string to_csv() const;

 private:
  std::size_t n_ = 0;
  std::vector<ExtResult> cells_;
};

enum class GoalKind { H0, H0Dual, Chi };
std::string_view goal_kind_name(GoalKind k);

/// One vanishing statement needed for exceptionality: a component of
/// Ext^*(L_from, L_to) = H^*(R_to - R_from) must vanish.
struct Goal {
  std::size_t from = 0, to = 0;
  GoalKind kind = GoalKind::H0;
  DivClass divisor;
  std::string label;
  Verdict verdict = Verdict::Unknown;
  std::optional<Certificate> certificate;
};

struct VerificationReport {
  Status status = Status::Inconclusive;
  BlockedCollection collection;
  NumericalCheck numerical;
  ExtTable table;
  std::vector<Goal> goals;
  std::vector<std::string> unknown_goals;
  std::vector<std::string> refuted_goals;
};

VerificationReport verify_collection(const BlockedCollection& c, int depth);
VerificationReport verify_collection(const BlockedCollection& c, int depth, ChainSearcher& searcher);

ExtTable ext_table(const BlockedCollection& c, int depth);

/// Graded quiver of the endomorphism algebra of a collection whose only
/// nonzero groups are Hom on the diagonal and Ext^2 off it.
struct AlgebraReport {
  std::size_t vertices = 0;
  Int degree0_dim = 0;
  IntMatrix degree2;
  std::size_t arrow_pairs = 0;
  Int arrow_total = 0;
  std::vector<int> degrees;
  bool concentrated_in_0_2 = false;
  bool compositions_vanish = false;
  bool higher_products_vanish = false;

  bool operator==(const AlgebraReport&) const = default;
};

/// Throws std::domain_error unless every entry is resolved, Ext^1 vanishes
/// and off-diagonal Hom vanishes.
AlgebraReport algebra_report(const ExtTable& table);

struct K0Report {
  int length = 0;
  int k0_x_rank = 0, k0_x_torsion = 0;
  int k0_d_rank = 0;
  int k0_a_rank = 0, k0_a_torsion = 0;
  int hh_x = 0, hh_d = 0, hh_a = 0;
  bool operator==(const K0Report&) const = default;
};

/// Additivity of K_0 and HH_* over the decomposition <D, A>, where D is
/// generated by an exceptional collection of the given length.
K0Report k0_report_for_length(int length);
/// Throws std::domain_error unless the report is Verified.
K0Report k0_report(const VerificationReport& verified);

/// Free parts of a numerical exceptional collection, torsion ignored.
struct NumericalCollection {
  std::vector<DivClass> free_parts;
  std::vector<int> blocks;
};

struct LiftSearchResult {
  /// Torsion assignments tau_1..tau_n with tau_n = 0, lexicographic order.
  std::vector<std::vector<TorsionClass>> lifts;
  /// admissible_counts[i][j] = |S_ij| for i < j.
  std::vector<std::vector<int>> admissible_counts;
  std::size_t candidates = 0;
};

/// Enumerates torsion lifts whose verification closes with certificates.
/// The result is a lower bound on the exceptional lifts. Throws
/// std::invalid_argument when the free parts are not numerically exceptional.
LiftSearchResult search_lifts(const NumericalCollection& numerical, int depth, unsigned parallelism = 1);

BlockedCollection apply_lift(const NumericalCollection& numerical, const std::vector<TorsionClass>& lift);

}  // namespace burniat
