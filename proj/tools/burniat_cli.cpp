#include <CLI11.hpp>

#include <iostream>

#include "burniat/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exceptional collections on Burniat surfaces with K^2 = 6"};
  app.require_subcommand(1);

  burniat::RunConfig cfg;
  std::vector<int> blocks;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--depth", cfg.depth, "Prover depth budget")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_collection = [&](CLI::App* sub) {
    sub->add_option("--collection", cfg.collection_path, "Collection JSON file");
    sub->add_option("--builtin", cfg.builtin, "table2-upsilon | table2-upsilon-prime");
    sub->add_option("--blocks", blocks, "Block sizes, e.g. 2,3,1")->delimiter(',');
  };

  auto* verify = app.add_subcommand("verify", "Verify a blocked collection");
  add_common(verify);
  add_collection(verify);
  verify->add_flag("--trace", cfg.trace, "Print reduction traces");

  auto* ext = app.add_subcommand("ext-table", "Ext dimensions for all ordered pairs");
  add_common(ext);
  add_collection(ext);

  auto* report = app.add_subcommand("report", "Algebra and K_0 report of a verified collection");
  add_common(report);
  add_collection(report);

  auto* search = app.add_subcommand("search", "Enumerate certified torsion lifts");
  add_common(search);
  search->add_option("--numerical", cfg.numerical_path, "Numerical collection JSON file");
  search->add_option("--builtin", cfg.builtin, "Use the free parts of a built-in collection");
  search->add_option("--blocks", blocks, "Block sizes")->delimiter(',');
  search->add_option("--parallelism", cfg.parallelism, "Worker threads")->check(CLI::PositiveNumber);

  auto* dp = app.add_subcommand("dp-check", "Check the 1+3+2 collection on Bl_3 P^2");
  add_common(dp);
  dp->add_option("--builtin", cfg.builtin, "sigma-delpezzo");

  auto* prove = app.add_subcommand("prove", "Prove h^0 = 0 for one class");
  add_common(prove);
  prove->add_option("--class", cfg.divisor, "JSON class or expression like K-(R5-R6)")->required();

  auto* derive = app.add_subcommand("derive-change", "Row-reduce the generator table mod 2");
  add_common(derive);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : burniat::kExitMalformed;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (!blocks.empty()) cfg.blocks = blocks;
  return burniat::run(cfg, std::cout, std::cerr);
}
