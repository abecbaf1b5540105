#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "chiral/group_analysis.h"

namespace chiral {

/// Which of the involution-search pruning rules are active. Turning them
/// off leaves a plain generate-and-test search with the same output.
struct Pruning {
  bool normalizer = true;          // pool restricted to N(<a_1>) after a_2
  bool centralize_previous = true; // candidate commutes with the involution two back
  bool avoid_last = true;          // candidate does not commute with the last involution
  bool inverts_first = true;       // o(a_1^-1 a_k) = 2 from a_3 on
  bool nondegenerate_second = true;// o(a_1^-1 a_2) >= 3

  static Pruning none() { return {false, false, false, false, false}; }
};

struct SearchConfig {
  std::size_t max_rank = 8;
  bool include_regular = false;
  bool merge_enantiomorphs = false;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  /// Only seeds whose order is listed here are searched.
  std::optional<std::vector<std::uint64_t>> seed_filter;
  /// 0 lets OpenMP decide; 1 runs the serial loop.
  int threads = 0;
  Pruning pruning;
  /// Candidate evaluations allowed to the sigma-tuple enumeration.
  std::uint64_t hhl_budget = 1'000'000'000;

  /// InputError on an unusable configuration.
  void validate() const;
};

struct SearchStats {
  std::uint64_t classes_seeded = 0;
  std::uint64_t tuples_tested = 0;
  std::uint64_t ic_checks = 0;
  std::uint64_t chirality_checks = 0;
  std::uint64_t records_emitted = 0;
  std::uint64_t truncated_branches = 0;
  std::uint64_t degenerate_second_rotation = 0;
  std::uint64_t candidates_before_dedup = 0;
  std::chrono::duration<double> wall_time{0};

  SearchStats& operator+=(const SearchStats& o);
};

}  // namespace chiral
