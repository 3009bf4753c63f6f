#include "burniat/json_io.hpp"

#include <stdexcept>

namespace burniat {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
  return j.at(key);
}

Int read_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  const Int v = j.get<Int>();
  if (v < -kMaxInputMagnitude || v > kMaxInputMagnitude) bad(std::string(what) + " out of range");
  return v;
}

Curve read_curve(const Json& j) {
  if (!j.is_string()) bad("curve name must be a string");
  const auto c = parse_curve(j.get<std::string>());
  if (!c) bad("unknown curve " + j.get<std::string>());
  return *c;
}

Json opt(const std::optional<Int>& v) { return v ? Json(*v) : Json(nullptr); }

Json entry(const ExtEntry& e) { return {{"value", opt(e.value)}, {"source", std::string(entry_source_name(e.source))}}; }

std::vector<int> read_blocks(const Json& j) {
  if (!j.is_array()) bad("\"blocks\" must be an array");
  std::vector<int> out;
  for (const Json& b : j) out.push_back(static_cast<int>(read_int(b, "block size")));
  return out;
}

std::vector<DivClass> read_classes(const Json& j) {
  if (!j.is_array()) bad("class list must be an array");
  std::vector<DivClass> out;
  for (const Json& c : j) out.push_back(divclass_from_json(c));
  return out;
}

}  // namespace

Json to_json(const TorsionClass& t) {
  Json a = Json::array();
  for (int b : t.bits()) a.push_back(b);
  return a;
}

Json to_json(const DivClass& D) {
  return {{"d", D.d()}, {"a0", D.a0()}, {"b0", D.b0()}, {"c0", D.c0()}, {"t", to_json(D.t())}};
}

DivClass divclass_from_json(const Json& j) {
  const Int d = read_int(member(j, "d"), "d"), a = read_int(member(j, "a0"), "a0"),
            b = read_int(member(j, "b0"), "b0"), c = read_int(member(j, "c0"), "c0");
  std::array<int, 6> bits{};
  if (j.contains("t")) {
    const Json& t = j.at("t");
    if (!t.is_array() || t.size() != 6) bad("\"t\" must be an array of six bits");
    for (int i = 0; i < 6; ++i) {
      const Int v = read_int(t[i], "torsion bit");
      if (v != 0 && v != 1) bad("torsion bits must be 0 or 1");
      bits[i] = static_cast<int>(v);
    }
  }
  try {
    return DivClass(d, a, b, c, TorsionClass::from_bits(bits));
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

Json to_json(const DPClass& D) { return {{"n", D.n}, {"a", D.a}, {"b", D.b}, {"c", D.c}}; }

DPClass dpclass_from_json(const Json& j) {
  return {read_int(member(j, "n"), "n"), read_int(member(j, "a"), "a"), read_int(member(j, "b"), "b"),
          read_int(member(j, "c"), "c")};
}

Json to_json(const Certificate& c) {
  Json j = {{"class", to_json(c.cls)},
            {"rule", std::string(rule_name(c.rule))},
            {"verdict", std::string(verdict_name(c.verdict))}};
  if (!c.removed.empty()) {
    Json r = Json::array();
    for (Curve E : c.removed) r.push_back(std::string(curve_name(E)));
    j["removed"] = r;
  }
  if (c.curve) j["curve"] = std::string(curve_name(*c.curve));
  if (!c.corner.empty()) j["corner"] = c.corner;
  if (c.batch_continuation) j["batch_continuation"] = true;
  if (!c.children.empty()) {
    Json ch = Json::array();
    for (const Certificate& k : c.children) ch.push_back(to_json(k));
    j["children"] = ch;
  }
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.cls = divclass_from_json(member(j, "class"));
  const Json& rule = member(j, "rule");
  if (!rule.is_string() || !parse_rule(rule.get<std::string>())) bad("unknown rule");
  c.rule = *parse_rule(rule.get<std::string>());
  const std::string v = member(j, "verdict").get<std::string>();
  if (v == "Proven") c.verdict = Verdict::Proven;
  else if (v == "Refuted") c.verdict = Verdict::Refuted;
  else if (v == "Unknown") c.verdict = Verdict::Unknown;
  else bad("unknown verdict " + v);
  if (j.contains("removed"))
    for (const Json& E : j.at("removed")) c.removed.push_back(read_curve(E));
  if (j.contains("curve")) c.curve = read_curve(j.at("curve"));
  if (j.contains("corner")) c.corner = j.at("corner").get<std::string>();
  if (j.contains("batch_continuation")) c.batch_continuation = j.at("batch_continuation").get<bool>();
  if (j.contains("children"))
    for (const Json& k : j.at("children")) c.children.push_back(certificate_from_json(k));
  return c;
}

Json to_json(const ChainCertificate& c) {
  Json chain = Json::array(), steps = Json::array();
  for (Curve E : c.chain) chain.push_back(std::string(curve_name(E)));
  for (const ChainStep& s : c.steps) {
    Json st = {{"curve", std::string(curve_name(s.curve))}, {"before", to_json(s.before)}, {"degree", s.degree}};
    if (is_elliptic(s.curve)) st["torsion"] = RestrictionClass{0, s.torsion}.to_string().substr(2);
    steps.push_back(st);
  }
  return {{"type", "H1-CHAIN"}, {"target", to_json(c.target)}, {"base", to_json(c.base)}, {"chain", chain},
          {"steps", steps}};
}

ChainCertificate chain_from_json(const Json& j) {
  if (member(j, "type") != "H1-CHAIN") bad("not an H1-CHAIN certificate");
  ChainCertificate c;
  c.target = divclass_from_json(member(j, "target"));
  const Json& base = member(j, "base");
  if (!base.is_array() || base.size() != 6) bad("\"base\" must be six bits");
  std::array<int, 6> bits{};
  for (int i = 0; i < 6; ++i) bits[i] = static_cast<int>(read_int(base[i], "torsion bit"));
  c.base = TorsionClass::from_bits(bits);
  for (const Json& E : member(j, "chain")) c.chain.push_back(read_curve(E));
  if (j.contains("steps"))
    for (const Json& s : j.at("steps")) {
      ChainStep st;
      st.curve = read_curve(member(s, "curve"));
      st.before = divclass_from_json(member(s, "before"));
      st.degree = read_int(member(s, "degree"), "degree");
      if (s.contains("torsion")) {
        const std::string t = s.at("torsion").get<std::string>();
        if (t.size() != 2) bad("torsion must be two bits");
        st.torsion = static_cast<TwoTorsion>(((t[0] == '1') << 1) | (t[1] == '1'));
      }
      c.steps.push_back(st);
    }
  return c;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < m.size(); ++k) r.push_back(m(i, k));
    rows.push_back(r);
  }
  return rows;
}

Json to_json(const ExtResult& r) {
  Json j = {{"difference", to_json(r.difference)},
            {"chi", r.chi},
            {"hom", entry(r.hom)},
            {"ext1", entry(r.ext1)},
            {"ext2", entry(r.ext2)}};
  if (r.ext1_proof.chain) j["ext1_certificate"] = to_json(*r.ext1_proof.chain);
  return j;
}

Json to_json(const ExtTable& t) {
  Json a = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t k = 0; k < t.size(); ++k) {
      Json cell = to_json(t.at(i, k));
      cell["i"] = i + 1;
      cell["j"] = k + 1;
      a.push_back(cell);
    }
  return a;
}

Json to_json(const BlockedCollection& c) {
  Json classes = Json::array();
  for (const DivClass& D : c.classes) classes.push_back(to_json(D));
  Json labels = Json::array();
  for (std::size_t i = 0; i < c.classes.size(); ++i) labels.push_back(c.label(i));
  return {{"classes", classes}, {"blocks", c.blocks}, {"labels", labels}};
}

BlockedCollection collection_from_json(const Json& j) {
  if (j.is_object() && j.contains("collection")) return collection_from_json(j.at("collection"));
  BlockedCollection c;
  c.classes = read_classes(member(j, "classes"));
  if (j.contains("blocks")) c.blocks = read_blocks(j.at("blocks"));
  else c.blocks.assign(c.classes.size(), 1);
  if (j.contains("labels")) {
    if (!j.at("labels").is_array()) bad("\"labels\" must be an array");
    for (const Json& l : j.at("labels")) {
      if (!l.is_string()) bad("labels must be strings");
      c.labels.push_back(l.get<std::string>());
    }
    // Default labels are not stored, so a written collection reads back equal.
    bool defaults = c.labels.size() == c.classes.size();
    for (std::size_t i = 0; defaults && i < c.labels.size(); ++i) defaults = c.labels[i] == "R" + std::to_string(i + 1);
    if (defaults) c.labels.clear();
  }
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  return c;
}

Json to_json(const NumericalCollection& n) {
  Json parts = Json::array();
  for (const DivClass& D : n.free_parts) parts.push_back(to_json(D.free_part()));
  return {{"free_parts", parts}, {"blocks", n.blocks}};
}

NumericalCollection numerical_from_json(const Json& j) {
  NumericalCollection n;
  for (const DivClass& D : read_classes(member(j, "free_parts"))) n.free_parts.push_back(D.free_part());
  n.blocks = j.contains("blocks") ? read_blocks(j.at("blocks")) : std::vector<int>(n.free_parts.size(), 1);
  Int total = 0;
  for (int b : n.blocks) {
    if (b <= 0) bad("block sizes must be positive");
    total += b;
  }
  if (n.free_parts.empty() || total != static_cast<Int>(n.free_parts.size())) bad("block sizes must sum to the length");
  return n;
}

Json to_json(const VerificationReport& r) {
  Json goals = Json::array();
  for (const Goal& g : r.goals) {
    Json j = {{"from", g.from + 1},
              {"to", g.to + 1},
              {"kind", std::string(goal_kind_name(g.kind))},
              {"divisor", to_json(g.divisor)},
              {"label", g.label},
              {"verdict", std::string(verdict_name(g.verdict))}};
    if (g.certificate) j["certificate"] = to_json(*g.certificate);
    goals.push_back(j);
  }
  return {{"status", std::string(status_name(r.status))},
          {"collection", to_json(r.collection)},
          {"numerical", {{"exceptional", r.numerical.exceptional}, {"matrix", to_json(r.numerical.matrix)}}},
          {"ext_table", to_json(r.table)},
          {"goals", goals},
          {"unknown_goals", r.unknown_goals},
          {"refuted_goals", r.refuted_goals}};
}

Json to_json(const AlgebraReport& r) {
  return {{"vertices", r.vertices},
          {"degree0_dim", r.degree0_dim},
          {"degree2_multiplicities", to_json(r.degree2)},
          {"arrow_pairs", r.arrow_pairs},
          {"arrow_total", r.arrow_total},
          {"degrees", r.degrees},
          {"concentrated_in_0_2", r.concentrated_in_0_2},
          {"compositions_vanish", r.compositions_vanish},
          {"higher_products_vanish", r.higher_products_vanish}};
}

Json to_json(const K0Report& r) {
  auto group = [](int rank, int torsion) {
    std::string s;
    if (rank) s = "Z^" + std::to_string(rank);
    if (torsion) s += std::string(s.empty() ? "" : " + ") + "Z_2^" + std::to_string(torsion);
    return s.empty() ? std::string("0") : s;
  };
  return {{"length", r.length},
          {"K0_X", group(r.k0_x_rank, r.k0_x_torsion)},
          {"K0_D", group(r.k0_d_rank, 0)},
          {"K0_A", group(r.k0_a_rank, r.k0_a_torsion)},
          {"HH_X", r.hh_x},
          {"HH_D", r.hh_d},
          {"HH_A", r.hh_a}};
}

Json to_json(const LiftSearchResult& r) {
  Json lifts = Json::array();
  for (const auto& lift : r.lifts) {
    Json l = Json::array();
    for (const TorsionClass& t : lift) l.push_back(t.to_string());
    lifts.push_back(l);
  }
  Json counts = Json::array();
  for (std::size_t i = 0; i < r.admissible_counts.size(); ++i)
    for (std::size_t k = i + 1; k < r.admissible_counts[i].size(); ++k)
      counts.push_back({{"i", i + 1}, {"j", k + 1}, {"admissible", r.admissible_counts[i][k]}});
  return {{"count", r.lifts.size()}, {"candidates", r.candidates}, {"lifts", lifts}, {"admissible_sets", counts}};
}

Json to_json(const DPCollectionReport& r) {
  Json classes = Json::array(), checks = Json::array(), table = Json::array();
  for (const DPClass& D : r.classes) classes.push_back(to_json(D));
  for (const DPCheck& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  for (std::size_t i = 0; i < r.cohomology.size(); ++i)
    for (std::size_t k = 0; k < r.cohomology.size(); ++k)
      table.push_back({{"i", i + 1}, {"j", k + 1}, {"h", r.cohomology[i][k]}});
  return {{"classes", classes}, {"labels", r.labels}, {"blocks", r.blocks}, {"cohomology", table},
          {"checks", checks}, {"passed", r.passed}};
}

Json to_json(const TorsionChange& t) {
  Json rref = Json::array();
  for (const auto& row : t.rref) {
    std::string s;
    for (bool b : row) s += b ? '1' : '0';
    rref.push_back(s);
  }
  Json formulas = Json::object();
  static constexpr const char* kTargets[] = {"a3^1", "a3^2", "b3^1", "b3^2", "c3^1", "c3^2"};
  for (int k = 0; k < 6; ++k) formulas[kTargets[k]] = t.formulas[k].to_string();
  return {{"rref", rref}, {"pivot_columns", t.pivot_columns}, {"formulas", formulas}, {"agrees", t.agrees}};
}

}  // namespace burniat
