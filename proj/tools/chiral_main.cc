#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chiral/atlas.h"
#include "chiral/errors.h"

namespace {

enum Exit { kOk = 0, kInput = 2, kCapacity = 3, kInvariant = 4 };

void add_search_flags(CLI::App* cmd, chiral::SearchConfig& cfg) {
  cmd->add_option("--max-rank", cfg.max_rank, "Largest rank searched")->capture_default_str();
  cmd->add_flag("--include-regular", cfg.include_regular, "Also report directly regular polytopes");
  cmd->add_flag("--merge-enantiomorphs", cfg.merge_enantiomorphs, "List each chiral pair once");
  cmd->add_option("--cap", cfg.enumeration_cap, "Largest group order enumerated")->capture_default_str();
  cmd->add_option("--threads", cfg.threads, "Seed searches run at once (0 = all cores)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chiral and directly regular polytopes from permutation groups"};
  app.set_version_flag("--version", std::string(chiral::kToolVersion));
  app.require_subcommand(1);

  chiral::SearchConfig cfg;
  std::string format = "text";

  auto* classify = app.add_subcommand("classify", "Classify polytopes for one group");
  std::string group;
  std::string algorithm = "blt";
  classify->add_option("--group", group, "Builtin like alt:5 or psl3:2, or a group file")->required();
  classify->add_option("--algorithm", algorithm, "blt or hhl")
      ->check(CLI::IsMember({"blt", "hhl"}))
      ->capture_default_str();
  classify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  add_search_flags(classify, cfg);

  auto* bench = app.add_subcommand("bench", "Time both algorithms on several groups");
  std::vector<std::string> groups;
  bench->add_option("--group", groups, "Groups to compare; repeatable")->required();
  bench->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  add_search_flags(bench, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*classify) {
      const auto g = chiral::parse_group(group);
      const auto alg = algorithm == "hhl" ? chiral::Algorithm::hhl : chiral::Algorithm::blt;
      const auto report = chiral::run_classify(g, cfg, alg);
      if (format == "json")
        std::cout << chiral::to_json(report).dump(2) << "\n";
      else
        std::cout << chiral::render_text(report);
      return kOk;
    }
    cfg.validate();
    const auto rows = chiral::run_bench(groups, cfg);
    if (format == "json")
      std::cout << chiral::bench_to_json(rows, cfg).dump(2) << "\n";
    else
      std::cout << chiral::render_bench_table(rows);
    for (const auto& r : rows)
      if (r.failed) return kInvariant;
    return kOk;
  } catch (const chiral::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInput;
  } catch (const chiral::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const chiral::CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return kCapacity;
  } catch (const chiral::InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kInvariant;
  }
}
