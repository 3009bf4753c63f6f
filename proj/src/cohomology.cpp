#include "burniat/cohomology.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "burniat/numerics.hpp"

namespace burniat {

std::array<TorsionClass, 3> pardini_set() {
  return {TorsionClass(0b10, 0b00, 0b00), TorsionClass(0b00, 0b10, 0b00), TorsionClass(0b00, 0b00, 0b10)};
}

bool in_pardini_set(TorsionClass t) {
  const auto s = pardini_set();
  return std::find(s.begin(), s.end(), t) != s.end();
}

Verdict torsion_h1_zero(TorsionClass t) { return in_pardini_set(t) ? Verdict::Unknown : Verdict::Proven; }

namespace {

bool step_ok(const DivClass& before, Curve E, ChainStep& step) {
  step.curve = E;
  step.before = before;
  if (is_elliptic(E)) {
    const RestrictionClass r = restrict_to(before, E);
    step.degree = r.deg;
    step.torsion = r.tor;
    return r.deg < 0 || (r.deg == 0 && r.tor != 0);
  }
  step.degree = intersect(before, generator(E));
  return step.degree < 0;
}

constexpr std::array<Curve, 12> kChainOrder = {
    Curve::A0, Curve::B0, Curve::C0, Curve::A3, Curve::B3, Curve::C3,
    Curve::A1, Curve::A2, Curve::B1, Curve::B2, Curve::C1, Curve::C2};

}  // namespace

ChainSearcher::ChainSearcher(int max_len) : max_len_(max_len) {
  if (max_len < 0) throw std::invalid_argument("ChainSearcher: max_len must be >= 0");
}

H1Proof ChainSearcher::prove(const DivClass& D) {
  if (auto it = memo_.find(D); it != memo_.end()) return it->second;

  // Walk upward from D: a state X has a chain X = tau - (curves added so far).
  struct State {
    DivClass cls;
    std::vector<ChainStep> steps;  // nearest to D last
  };
  H1Proof out;
  std::deque<State> queue{{D, {}}};
  std::unordered_set<DivClass, DivClassHash> seen{D};
  while (!queue.empty()) {
    State s = std::move(queue.front());
    queue.pop_front();
    if (s.cls.is_torsion() && torsion_h1_zero(s.cls.t()) == Verdict::Proven) {
      ChainCertificate cert;
      cert.target = D;
      cert.base = s.cls.t();
      // s.steps were pushed walking up from D, so reversing yields the order
      // walking down from tau.
      std::reverse(s.steps.begin(), s.steps.end());
      cert.steps = std::move(s.steps);
      for (const ChainStep& st : cert.steps) cert.chain.push_back(st.curve);
      out = {Verdict::Proven, std::move(cert)};
      break;
    }
    if (static_cast<int>(s.steps.size()) >= max_len_) continue;
    for (Curve E : kChainOrder) {
      const DivClass up = s.cls + generator(E);
      if (up.d() > 0) continue;  // a torsion class has K-degree 0
      ChainStep step;
      if (!step_ok(up, E, step) || seen.contains(up)) continue;
      seen.insert(up);
      State next{up, s.steps};
      next.steps.push_back(step);
      queue.push_back(std::move(next));
    }
  }
  memo_.emplace(D, out);
  return out;
}

H1Proof prove_h1_zero(const DivClass& D, int max_len) { return ChainSearcher(max_len).prove(D); }

std::string_view entry_source_name(EntrySource s) {
  switch (s) {
    case EntrySource::Trivial: return "trivial";
    case EntrySource::Certificate: return "certificate";
    case EntrySource::ChiClosure: return "chi-closure";
    case EntrySource::Open: return "open";
  }
  return "?";
}

std::optional<std::array<Int, 3>> ExtResult::triple() const {
  if (!resolved()) return std::nullopt;
  return std::array<Int, 3>{*hom.value, *ext1.value, *ext2.value};
}

ExtResult ext_dims(const DivClass& Ri, const DivClass& Rj, int depth, ChainSearcher& searcher) {
  ExtResult r;
  const DivClass D = Rj - Ri;
  r.difference = D;
  r.chi = chi(D);

  if (D.is_zero()) {
    r.hom = {1, EntrySource::Trivial};
  } else {
    r.hom_proof = prove_h0_zero(D, depth);
    if (r.hom_proof.verdict == Verdict::Proven) r.hom = {0, EntrySource::Certificate};
  }

  const DivClass dual = canonical() - D;
  if (dual.is_zero()) {
    r.ext2 = {1, EntrySource::Trivial};
  } else {
    r.ext2_proof = prove_h0_zero(dual, depth);
    if (r.ext2_proof.verdict == Verdict::Proven) r.ext2 = {0, EntrySource::Certificate};
  }

  r.ext1_proof = searcher.prove(D);
  if (r.ext1_proof.verdict == Verdict::Proven) r.ext1 = {0, EntrySource::Certificate};

  const int open = !r.hom.value + !r.ext1.value + !r.ext2.value;
  if (open == 1) {
    if (!r.hom.value) r.hom = {r.chi + *r.ext1.value - *r.ext2.value, EntrySource::ChiClosure};
    else if (!r.ext1.value) r.ext1 = {*r.hom.value + *r.ext2.value - r.chi, EntrySource::ChiClosure};
    else r.ext2 = {r.chi - *r.hom.value + *r.ext1.value, EntrySource::ChiClosure};
  }
  if (r.resolved()) {
    const Int h = *r.hom.value, e1 = *r.ext1.value, e2 = *r.ext2.value;
    if (h < 0 || e1 < 0 || e2 < 0 || h - e1 + e2 != r.chi)
      throw std::logic_error("ext_dims: dimensions contradict Riemann-Roch for " + D.to_string());
  }
  return r;
}

ExtResult ext_dims(const DivClass& Ri, const DivClass& Rj, int depth) {
  ChainSearcher searcher;
  return ext_dims(Ri, Rj, depth, searcher);
}

}  // namespace burniat
