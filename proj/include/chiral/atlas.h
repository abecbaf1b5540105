#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chiral/blt_search.h"

namespace chiral {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Algorithm { blt, hhl };

std::string_view to_string(Algorithm a);

struct NamedGroup {
  std::string name;
  std::shared_ptr<const PermGroup> group;
};

/// Builtins `sym:n`, `alt:n`, `cyc:n`, `dih:n`, `psl2:p`, `psl3:p`;
/// anything else is read as a group file.
NamedGroup parse_group(const std::string& spec);

/// Group file text: a `degree d` header, then one generator per line in
/// disjoint-cycle notation. Blank lines and lines starting with '#' are
/// skipped. ParseError carries the 1-based line number.
PermGroup parse_group_text(std::string_view text);

/// Inverse of parse_group_text for the generators of g.
std::string serialize_group(const PermGroup& g);

PermGroup psl2(int p);
PermGroup psl3(int p);

struct AtlasReport {
  std::string group_name;
  GroupOrder group_order;
  std::size_t degree = 0;
  std::uint64_t involution_count = 0;
  double involution_ratio = 0;
  Algorithm algorithm = Algorithm::blt;
  SearchConfig config;
  std::vector<PolytopeRecord> records;
  SearchStats stats;
};

AtlasReport run_classify(const NamedGroup& g, const SearchConfig& cfg, Algorithm algorithm);

/// Involution ratio to four significant digits, e.g. "0.2500".
std::string format_ratio(double ratio);

std::string render_text(const AtlasReport& report);
nlohmann::json to_json(const AtlasReport& report);

struct BenchRow {
  std::string group_name;
  std::string group_order;
  double involution_ratio = 0;
  double blt_seconds = 0;
  double hhl_seconds = 0;
  std::size_t blt_records = 0;
  std::size_t hhl_records = 0;
  bool failed = false;
  std::string error;  // set when a run threw or the record lists disagree
};

/// Runs both algorithms on each group. A failing group is reported in its
/// row and does not stop the remaining ones.
std::vector<BenchRow> run_bench(const std::vector<std::string>& specs, const SearchConfig& cfg);

std::string render_bench_table(const std::vector<BenchRow>& rows);
nlohmann::json bench_to_json(const std::vector<BenchRow>& rows, const SearchConfig& cfg);

}  // namespace chiral
