// Serial vs OpenMP seed search, and BLT vs the sigma-tuple baseline.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chiral/atlas.h"
#include "chiral/hhl_oracle.h"

namespace {

template <class Fn>
double best_of(int repeats, Fn&& fn, std::size_t& records) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    records = fn().records.size();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chiral search benchmark"};
  std::vector<std::string> groups{"sym:5", "alt:6", "sym:6", "psl3:2", "psl3:3", "alt:7"};
  int repeats = 3;
  int threads = 0;
  bool regular = false;
  app.add_option("--group", groups, "Groups to time")->capture_default_str();
  app.add_option("--repeat", repeats, "Runs per measurement; the best is kept")->capture_default_str();
  app.add_option("--threads", threads, "Threads for the parallel column (0 = all cores)")->capture_default_str();
  app.add_flag("--include-regular", regular, "Also classify directly regular polytopes");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads available: %d\n", threads > 0 ? threads : omp_get_max_threads());
  std::printf("%-10s %8s %10s %10s %8s %10s %10s %8s %6s\n", "group", "order", "BLT ser", "BLT par", "par x",
              "HHL ser", "HHL par", "HHL/BLT", "recs");
  for (const auto& spec : groups) {
    const auto g = chiral::parse_group(spec);
    chiral::SearchConfig serial;
    serial.include_regular = regular;
    serial.threads = 1;
    chiral::SearchConfig parallel = serial;
    parallel.threads = threads;

    std::size_t n1 = 0, n2 = 0, n3 = 0, n4 = 0;
    const double bs = best_of(repeats, [&] { return chiral::classify(g.group, serial); }, n1);
    const double bp = best_of(repeats, [&] { return chiral::classify(g.group, parallel); }, n2);
    const double hs = best_of(repeats, [&] { return chiral::classify_hhl(g.group, serial); }, n3);
    const double hp = best_of(repeats, [&] { return chiral::classify_hhl(g.group, parallel); }, n4);
    const bool agree = n1 == n2 && n2 == n3 && n3 == n4;
    std::printf("%-10s %8s %10.4f %10.4f %8.2f %10.4f %10.4f %8.2f %6zu%s\n", spec.c_str(),
                g.group->order().to_string().c_str(), bs, bp, bs / bp, hs, hp, hs / bs, n1,
                agree ? "" : "  MISMATCH");
  }
  return 0;
}
