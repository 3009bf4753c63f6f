#include "burniat/collections.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>

namespace burniat {

void BlockedCollection::validate() const {
  if (classes.empty()) throw std::invalid_argument("collection is empty");
  Int total = 0;
  for (int b : blocks) {
    if (b <= 0) throw std::invalid_argument("block sizes must be positive");
    total += b;
  }
  if (total != static_cast<Int>(classes.size()))
    throw std::invalid_argument("block sizes must sum to the collection length");
  if (!labels.empty() && labels.size() != classes.size())
    throw std::invalid_argument("one label per class is required");
  std::set<DivClass> distinct(classes.begin(), classes.end());
  if (distinct.size() != classes.size()) throw std::invalid_argument("collection classes must be pairwise distinct");
}

std::size_t BlockedCollection::block_of(std::size_t i) const {
  std::size_t acc = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    acc += static_cast<std::size_t>(blocks[b]);
    if (i < acc) return b;
  }
  throw std::out_of_range("block_of: index beyond the collection");
}

std::string BlockedCollection::label(std::size_t i) const {
  return labels.empty() ? "R" + std::to_string(i + 1) : labels.at(i);
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Verified: return "Verified";
    case Status::Inconclusive: return "Inconclusive";
    case Status::Failed: return "Failed";
  }
  return "?";
}

std::string_view goal_kind_name(GoalKind k) {
  switch (k) {
    case GoalKind::H0: return "h0";
    case GoalKind::H0Dual: return "h0-dual";
    case GoalKind::Chi: return "chi";
  }
  return "?";
}

bool ExtTable::fully_resolved() const { return open_entries() == 0; }

std::size_t ExtTable::open_entries() const {
  return static_cast<std::size_t>(std::count_if(cells_.begin(), cells_.end(), [](const ExtResult& r) { return !r.resolved(); }));
}

std::string ExtTable::to_csv() const {
  std::ostringstream os;
  os << "i,j,hom,ext1,ext2\n";
  auto cell = [](const ExtEntry& e) { return e.value ? std::to_string(*e.value) : std::string("?"); };
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const ExtResult& r = at(i, j);
      os << i + 1 << "," << j + 1 << "," << cell(r.hom) << "," << cell(r.ext1) << "," << cell(r.ext2) << "\n";
    }
  return os.str();
}

namespace {

ExtTable build_table(const BlockedCollection& c, int depth, ChainSearcher& searcher) {
  const std::size_t n = c.classes.size();
  ExtTable t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = ext_dims(c.classes[i], c.classes[j], depth, searcher);
  return t;
}

}  // namespace

VerificationReport verify_collection(const BlockedCollection& c, int depth, ChainSearcher& searcher) {
  c.validate();
  VerificationReport rep;
  rep.collection = c;
  rep.numerical = is_numerically_exceptional(c.classes);
  rep.table = build_table(c, depth, searcher);

  const std::size_t n = c.classes.size();
  for (std::size_t from = 0; from < n; ++from) {
    for (std::size_t to = 0; to < n; ++to) {
      if (from == to) continue;
      const bool required = from > to || c.block_of(from) == c.block_of(to);
      if (!required) continue;
      const ExtResult& cell = rep.table.at(from, to);
      const std::string diff = c.label(to) + "-" + c.label(from);

      Goal hom{from, to, GoalKind::H0, cell.difference, diff, Verdict::Refuted, std::nullopt};
      if (!cell.difference.is_zero()) {
        hom.verdict = cell.hom_proof.verdict;
        hom.certificate = cell.hom_proof.certificate;
      }
      Goal dual{from, to, GoalKind::H0Dual, canonical() - cell.difference, "K-(" + diff + ")", Verdict::Refuted,
                std::nullopt};
      if (!dual.divisor.is_zero()) {
        dual.verdict = cell.ext2_proof.verdict;
        dual.certificate = cell.ext2_proof.certificate;
      }
      Goal num{from, to, GoalKind::Chi, cell.difference, "chi(" + diff + ")",
               cell.chi == 0 ? Verdict::Proven : Verdict::Refuted, std::nullopt};
      for (Goal* g : {&hom, &dual, &num}) rep.goals.push_back(std::move(*g));
    }
  }
  for (const Goal& g : rep.goals) {
    if (g.verdict == Verdict::Unknown) rep.unknown_goals.push_back(g.label);
    if (g.verdict == Verdict::Refuted) rep.refuted_goals.push_back(g.label);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto t = rep.table.at(i, i).triple();
    const std::string label = "Ext(" + c.label(i) + "," + c.label(i) + ")";
    if (!t) rep.unknown_goals.push_back(label);
    else if (*t != std::array<Int, 3>{1, 0, 0}) rep.refuted_goals.push_back(label);
  }
  rep.status = !rep.refuted_goals.empty() ? Status::Failed
               : !rep.unknown_goals.empty() ? Status::Inconclusive
                                            : Status::Verified;
  return rep;
}

VerificationReport verify_collection(const BlockedCollection& c, int depth) {
  ChainSearcher searcher;
  return verify_collection(c, depth, searcher);
}

ExtTable ext_table(const BlockedCollection& c, int depth) {
  c.validate();
  ChainSearcher searcher;
  return build_table(c, depth, searcher);
}

AlgebraReport algebra_report(const ExtTable& table) {
  const std::size_t n = table.size();
  AlgebraReport rep;
  rep.vertices = n;
  rep.degree2 = IntMatrix(n);
  std::set<int> degrees;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto t = table.at(i, j).triple();
      if (!t) throw std::domain_error("algebra_report: Ext table has open entries");
      const auto [hom, ext1, ext2] = *t;
      if (ext1 != 0) throw std::domain_error("algebra_report: nonzero Ext^1");
      if (i != j && hom != 0) throw std::domain_error("algebra_report: nonzero off-diagonal Hom");
      rep.degree0_dim += hom;
      if (hom) degrees.insert(0);
      if (ext2) {
        degrees.insert(2);
        rep.degree2(i, j) = ext2;
        ++rep.arrow_pairs;
        rep.arrow_total += ext2;
      }
    }
  }
  rep.degrees.assign(degrees.begin(), degrees.end());
  rep.concentrated_in_0_2 = std::all_of(degrees.begin(), degrees.end(), [](int d) { return d == 0 || d == 2; });

  // Cohomology of line bundles on a surface stops in degree 2. With the
  // identities strict, m_l only sees positive-degree inputs: l inputs of
  // degree >= p give output degree >= l*p + 2 - l.
  constexpr int kTopDegree = 2;
  int min_positive = 0;
  for (int d : degrees)
    if (d > 0) {
      min_positive = d;
      break;
    }
  rep.compositions_vanish = min_positive == 0 || 2 * min_positive > kTopDegree;
  rep.higher_products_vanish = true;
  if (min_positive > 0)
    for (int l = 3; l <= static_cast<int>(n) + 1; ++l)
      if (l * min_positive + 2 - l <= kTopDegree) rep.higher_products_vanish = false;
  return rep;
}

namespace {

// Pic X = Z^4 + Z_2^6 with p_g = q = 0, so h^{1,1} = rank Pic = 4 and the Chow
// group of 0-cycles is Z. K_0(X) = Z (rank) + Pic X + CH_0.
constexpr int kPicardRank = 4;
constexpr int kTorsionRank = 6;
constexpr int kK0Rank = 1 + kPicardRank + 1;
constexpr int kHH0 = 1 + kPicardRank + 1;

}  // namespace

K0Report k0_report_for_length(int length) {
  K0Report r;
  r.length = length;
  r.k0_x_rank = kK0Rank;
  r.k0_x_torsion = kTorsionRank;
  r.k0_d_rank = length;
  r.k0_a_rank = kK0Rank - length;
  r.k0_a_torsion = kTorsionRank;
  r.hh_x = kHH0;
  r.hh_d = length;
  r.hh_a = kHH0 - length;
  return r;
}

K0Report k0_report(const VerificationReport& verified) {
  if (verified.status != Status::Verified) throw std::domain_error("k0_report: collection is not verified");
  return k0_report_for_length(static_cast<int>(verified.collection.classes.size()));
}

BlockedCollection apply_lift(const NumericalCollection& numerical, const std::vector<TorsionClass>& lift) {
  BlockedCollection c;
  c.blocks = numerical.blocks;
  for (std::size_t i = 0; i < numerical.free_parts.size(); ++i)
    c.classes.push_back(numerical.free_parts[i].free_part().with_torsion(lift.at(i)));
  return c;
}

namespace {

using Admissible = std::array<bool, TorsionClass::kCount>;

// Torsion differences delta = tau_j - tau_i for which every vanishing goal of
// the pair (i, j), i < j, closes with a certificate.
Admissible admissible_set(const NumericalCollection& num, std::size_t i, std::size_t j, bool same_block, int depth) {
  Admissible ok{};
  const DivClass base = num.free_parts[i].free_part() - num.free_parts[j].free_part();
  for (int m = 0; m < TorsionClass::kCount; ++m) {
    const DivClass D = base.with_torsion(TorsionClass(static_cast<std::uint8_t>(m)));
    std::vector<DivClass> goals = {D, canonical() - D};
    if (same_block) {
      goals.push_back(-D);
      goals.push_back(canonical() + D);
    }
    ok[m] = std::all_of(goals.begin(), goals.end(), [&](const DivClass& g) {
      return !g.is_zero() && prove_h0_zero(g, depth).verdict == Verdict::Proven;
    });
  }
  return ok;
}

}  // namespace

LiftSearchResult search_lifts(const NumericalCollection& numerical, int depth, unsigned parallelism) {
  const std::size_t n = numerical.free_parts.size();
  if (n < 1) throw std::invalid_argument("search_lifts: empty collection");
  {
    BlockedCollection probe = apply_lift(numerical, std::vector<TorsionClass>(n));
    probe.validate();
    if (!is_numerically_exceptional(probe.classes).exceptional)
      throw std::invalid_argument("search_lifts: free parts are not a numerical exceptional sequence");
  }
  const BlockedCollection shape = apply_lift(numerical, std::vector<TorsionClass>(n));
  if (parallelism == 0) parallelism = 1;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<std::vector<Admissible>> S(n, std::vector<Admissible>(n));
  auto fill = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      const auto [i, j] = pairs[k];
      S[i][j] = admissible_set(numerical, i, j, shape.block_of(i) == shape.block_of(j), depth);
    }
  };
  {
    std::vector<std::future<void>> jobs;
    const std::size_t chunk = (pairs.size() + parallelism - 1) / parallelism;
    for (std::size_t lo = 0; lo < pairs.size(); lo += chunk)
      jobs.push_back(std::async(std::launch::async, fill, lo, std::min(pairs.size(), lo + chunk)));
    for (auto& j : jobs) j.get();
  }

  LiftSearchResult out;
  out.admissible_counts.assign(n, std::vector<int>(n, 0));
  for (const auto& [i, j] : pairs)
    out.admissible_counts[i][j] = static_cast<int>(std::count(S[i][j].begin(), S[i][j].end(), true));

  // Depth-first over tau_1..tau_{n-1} in ascending mask order with tau_n = 0,
  // which yields candidates in lexicographic order.
  std::vector<std::vector<TorsionClass>> candidates;
  std::vector<TorsionClass> tau(n);
  auto dfs = [&](auto&& self, std::size_t k) -> void {
    if (k + 1 == n) {
      candidates.push_back(tau);
      return;
    }
    for (int m = 0; m < TorsionClass::kCount; ++m) {
      const TorsionClass t(static_cast<std::uint8_t>(m));
      bool ok = S[k][n - 1][(t - tau[n - 1]).mask()];
      for (std::size_t i = 0; ok && i < k; ++i) ok = S[i][k][(t - tau[i]).mask()];
      if (!ok) continue;
      tau[k] = t;
      self(self, k + 1);
    }
    tau[k] = TorsionClass{};
  };
  if (n == 1) candidates.push_back(tau);
  else dfs(dfs, 0);
  out.candidates = candidates.size();

  std::vector<char> verified(candidates.size(), 0);
  auto check = [&](std::size_t lo, std::size_t hi) {
    ChainSearcher searcher;
    for (std::size_t k = lo; k < hi; ++k) {
      BlockedCollection c = apply_lift(numerical, candidates[k]);
      verified[k] = verify_collection(c, depth, searcher).status == Status::Verified;
    }
  };
  {
    std::vector<std::future<void>> jobs;
    const std::size_t chunk = std::max<std::size_t>(1, (candidates.size() + parallelism - 1) / parallelism);
    for (std::size_t lo = 0; lo < candidates.size(); lo += chunk)
      jobs.push_back(std::async(std::launch::async, check, lo, std::min(candidates.size(), lo + chunk)));
    for (auto& j : jobs) j.get();
  }
  for (std::size_t k = 0; k < candidates.size(); ++k)
    if (verified[k]) out.lifts.push_back(candidates[k]);
  std::sort(out.lifts.begin(), out.lifts.end());
  return out;
}

}  // namespace burniat
