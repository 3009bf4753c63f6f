#pragma once

#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include "burniat/effectivity.hpp"
#include "burniat/picard.hpp"

namespace burniat {

/// The three torsion classes restricting to (10) on exactly one of A0, B0, C0
/// and trivially on the other two. h^1 is not controlled on them.
std::array<TorsionClass, 3> pardini_set();
bool in_pardini_set(TorsionClass t);

/// Proven for tau = 0 and for every tau outside the Pardini set; Unknown on it.
Verdict torsion_h1_zero(TorsionClass t);

struct ChainStep {
  Curve curve;
  /// Class before subtracting `curve`; the step needs h^0 of its restriction
  /// to `curve` to vanish.
  DivClass before;
  Int degree = 0;
  TwoTorsion torsion = 0;  // elliptic curves only
};

/// D = tau - (E_1 + ... + E_k), walked from tau down to D through the
/// sequences 0 -> O(C - E) -> O(C) -> O_E(C) -> 0.
struct ChainCertificate {
  DivClass target;
  TorsionClass base;
  std::vector<Curve> chain;
  std::vector<ChainStep> steps;
};

struct H1Proof {
  Verdict verdict = Verdict::Unknown;  // Proven or Unknown
  std::optional<ChainCertificate> chain;
};

/// Breadth-first search for a chain certificate of h^1(O_X(D)) = 0, with
/// results memoized per instance. Elliptic steps need a restriction of
/// negative degree or of degree 0 with nonzero torsion; genus 2 steps need
/// negative degree. Curves are tried elliptic first (A0, B0, C0, A3, B3, C3),
/// then A1, A2, B1, B2, C1, C2. Not thread-safe; use one instance per thread.
class ChainSearcher {
 public:
  explicit ChainSearcher(int max_len = 6);
  H1Proof prove(const DivClass& D);
  int max_len() const { return max_len_; }

 private:
  int max_len_;
  std::unordered_map<DivClass, H1Proof, DivClassHash> memo_;
};

H1Proof prove_h1_zero(const DivClass& D, int max_len = 6);

/// Re-validates a chain certificate from lattice data alone.
ReplayResult replay_chain(const ChainCertificate& cert);

enum class EntrySource { Trivial, Certificate, ChiClosure, Open };
std::string_view entry_source_name(EntrySource s);

struct ExtEntry {
  std::optional<Int> value;
  EntrySource source = EntrySource::Open;
};

/// Dimensions of Ext^k(O(R_i), O(R_j)) = H^k(O(R_j - R_i)), k = 0, 1, 2.
struct ExtResult {
  DivClass difference;
  Int chi = 0;
  ExtEntry hom, ext1, ext2;
  H0Proof hom_proof;   // h^0(D)
  H0Proof ext2_proof;  // h^0(K - D), Serre dual of h^2(D)
  H1Proof ext1_proof;

  bool resolved() const { return hom.value && ext1.value && ext2.value; }
  std::optional<std::array<Int, 3>> triple() const;
};

/// hom and ext2 come from the h^0 prover, ext1 from the chain search; a
/// single open entry is closed with chi = hom - ext1 + ext2. Throws
/// std::logic_error if the resolved entries contradict chi.
ExtResult ext_dims(const DivClass& Ri, const DivClass& Rj, int depth, ChainSearcher& searcher);
ExtResult ext_dims(const DivClass& Ri, const DivClass& Rj, int depth);

}  // namespace burniat
