#include "burniat/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "burniat/collections.hpp"
#include "burniat/datasets.hpp"
#include "burniat/delpezzo.hpp"
#include "burniat/expression.hpp"
#include "burniat/json_io.hpp"
#include "burniat/tables.hpp"

namespace burniat {

namespace {

struct Malformed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Malformed("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Malformed(path + ": " + e.what());
  }
}

BlockedCollection load_collection(const RunConfig& cfg) {
  if (!cfg.collection_path.empty() && !cfg.builtin.empty())
    throw Malformed("give either --collection or --builtin, not both");
  BlockedCollection c;
  if (!cfg.collection_path.empty()) c = collection_from_json(read_json_file(cfg.collection_path));
  else if (!cfg.builtin.empty()) c = builtin_collection(cfg.builtin);
  else throw Malformed("a collection is required (--collection or --builtin)");
  if (cfg.blocks) {
    c.blocks = *cfg.blocks;
    c.validate();
  }
  return c;
}

std::string format_or(const RunConfig& cfg, const std::string& fallback) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  if (f != "json" && f != "csv" && f != "text") throw Malformed("unknown format " + f);
  return f;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int status_code(Status s) {
  switch (s) {
    case Status::Verified: return kExitOk;
    case Status::Inconclusive: return kExitInconclusive;
    case Status::Failed: return kExitFailed;
  }
  return kExitFailed;
}

std::vector<std::string> traces(const VerificationReport& rep) {
  std::vector<std::string> out;
  for (const Goal& g : rep.goals) {
    if (g.kind == GoalKind::Chi) {
      if (g.verdict != Verdict::Proven) out.push_back(g.label + " != 0");
      continue;
    }
    if (g.certificate) out.push_back(render_trace(g.label, *g.certificate));
    else out.push_back(g.label + " -> D=0, effective");
  }
  return out;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const BlockedCollection c = load_collection(cfg);
  const VerificationReport rep = verify_collection(c, cfg.depth);
  const std::string fmt = format_or(cfg, cfg.trace ? "text" : "json");
  if (fmt == "json") {
    Json j = to_json(rep);
    if (cfg.trace) j["traces"] = traces(rep);
    emit(out, j);
  } else if (fmt == "csv") {
    out << rep.table.to_csv();
  } else {
    out << "status: " << status_name(rep.status) << "\n";
    if (cfg.trace)
      for (const std::string& t : traces(rep)) out << t << "\n";
    for (const std::string& g : rep.unknown_goals) out << "unknown: " << g << "\n";
    for (const std::string& g : rep.refuted_goals) out << "refuted: " << g << "\n";
  }
  return status_code(rep.status);
}

int cmd_ext_table(const RunConfig& cfg, std::ostream& out) {
  const ExtTable t = ext_table(load_collection(cfg), cfg.depth);
  const std::string fmt = format_or(cfg, "csv");
  if (fmt == "json") emit(out, to_json(t));
  else out << t.to_csv();
  return t.fully_resolved() ? kExitOk : kExitInconclusive;
}

int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const VerificationReport rep = verify_collection(load_collection(cfg), cfg.depth);
  if (rep.status != Status::Verified) {
    err << "collection is " << status_name(rep.status) << "; no report\n";
    return status_code(rep.status);
  }
  const Json j = {{"algebra", to_json(algebra_report(rep.table))}, {"k0", to_json(k0_report(rep))}};
  const std::string fmt = format_or(cfg, "json");
  if (fmt == "json") {
    emit(out, j);
  } else {
    for (const auto& [key, value] : j["algebra"].items()) out << "algebra." << key << " = " << value.dump() << "\n";
    for (const auto& [key, value] : j["k0"].items()) out << "k0." << key << " = " << value.dump() << "\n";
  }
  return kExitOk;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  NumericalCollection num;
  if (!cfg.numerical_path.empty()) {
    num = numerical_from_json(read_json_file(cfg.numerical_path));
  } else if (cfg.builtin == "table2-upsilon" || cfg.builtin == "table2-upsilon-prime") {
    num = table2_numerical();
  } else {
    throw Malformed("search needs --numerical or a table2 built-in");
  }
  if (cfg.blocks) num.blocks = *cfg.blocks;
  const LiftSearchResult r = search_lifts(num, cfg.depth, cfg.parallelism);
  const std::string fmt = format_or(cfg, "json");
  if (fmt == "json") {
    emit(out, to_json(r));
  } else {
    out << "tau_1,tau_2,tau_3,tau_4,tau_5,tau_6\n";
    for (const auto& lift : r.lifts) {
      for (std::size_t i = 0; i < lift.size(); ++i) out << (i ? "," : "") << '"' << lift[i].to_string() << '"';
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_dp_check(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.builtin.empty() && cfg.builtin != "sigma-delpezzo") throw Malformed("dp-check only knows sigma-delpezzo");
  const DPCollectionReport rep = verify_sigma();
  const std::string fmt = format_or(cfg, "text");
  if (fmt == "json") {
    emit(out, to_json(rep));
  } else {
    out << "Hom table (rows = source, columns = target)\n";
    for (std::size_t i = 0; i < rep.classes.size(); ++i) {
      out << rep.labels[i];
      for (std::size_t k = 0; k < rep.classes.size(); ++k) out << (k ? "," : "\t") << rep.cohomology[i][k][0];
      out << "\n";
    }
    for (const DPCheck& c : rep.checks)
      out << c.name << ": " << (c.passed ? "pass" : "FAIL") << (c.detail.empty() ? "" : " " + c.detail) << "\n";
    out << (rep.passed ? "all checks pass" : "checks failed") << "\n";
  }
  return rep.passed ? kExitOk : kExitFailed;
}

int cmd_prove(const RunConfig& cfg, std::ostream& out) {
  if (cfg.divisor.empty()) throw Malformed("prove needs --class");
  DivClass D;
  const auto first = cfg.divisor.find_first_not_of(" \t");
  if (first != std::string::npos && cfg.divisor[first] == '{') {
    try {
      D = divclass_from_json(Json::parse(cfg.divisor));
    } catch (const Json::parse_error& e) {
      throw Malformed(e.what());
    }
  } else {
    D = parse_divisor(cfg.divisor, default_symbols());
  }
  const H0Proof p = prove_h0_zero(D, cfg.depth);
  const std::string fmt = format_or(cfg, "json");
  if (fmt == "json") {
    emit(out, {{"class", to_json(D)},
               {"verdict", std::string(verdict_name(p.verdict))},
               {"certificate", to_json(p.certificate)},
               {"trace", render_trace(cfg.divisor, p.certificate)}});
  } else {
    out << render_trace(cfg.divisor, p.certificate) << "\n" << verdict_name(p.verdict) << "\n";
  }
  switch (p.verdict) {
    case Verdict::Proven: return kExitOk;
    case Verdict::Unknown: return kExitInconclusive;
    case Verdict::Refuted: return kExitFailed;
  }
  return kExitFailed;
}

int cmd_derive_change(const RunConfig& cfg, std::ostream& out) {
  const TorsionChange t = derive_torsion_change();
  const std::string fmt = format_or(cfg, "text");
  if (fmt == "json") {
    emit(out, to_json(t));
  } else {
    static constexpr const char* kTargets[] = {"a3^1", "a3^2", "b3^1", "b3^2", "c3^1", "c3^2"};
    for (int k = 0; k < 6; ++k) out << kTargets[k] << " = " << t.formulas[k].to_string() << "\n";
    out << (t.agrees ? "agrees with restrict" : "DISAGREES with restrict") << "\n";
  }
  return t.agrees ? kExitOk : kExitFailed;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.depth < 1) throw Malformed("depth must be >= 1");
    if (cfg.parallelism < 1) throw Malformed("parallelism must be >= 1");
    const std::string& s = cfg.subcommand;
    if (s == "verify") return cmd_verify(cfg, out);
    if (s == "ext-table") return cmd_ext_table(cfg, out);
    if (s == "report") return cmd_report(cfg, out, err);
    if (s == "search") return cmd_search(cfg, out);
    if (s == "dp-check") return cmd_dp_check(cfg, out);
    if (s == "prove") return cmd_prove(cfg, out);
    if (s == "derive-change") return cmd_derive_change(cfg, out);
    throw Malformed("unknown subcommand '" + s + "'");
  } catch (const Malformed& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
  }
  return kExitMalformed;
}

}  // namespace burniat
