#include "chiral/atlas.h"

#include <array>
#include <cctype>
#include <charconv>
#include <chrono>
#include <fmt/format.h>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "chiral/errors.h"
#include "chiral/hhl_oracle.h"

namespace chiral {

namespace {

using Cycles = std::vector<std::vector<std::size_t>>;

std::vector<std::size_t> iota1(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

PermGroup symmetric(std::size_t n) {
  if (n < 2) return PermGroup(n, {});
  return PermGroup(n, {Permutation::from_cycles(n, {{1, 2}}), Permutation::from_cycles(n, {iota1(n)})});
}

PermGroup alternating(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::size_t i = 3; i <= n; ++i) gens.push_back(Permutation::from_cycles(n, {{1, 2, i}}));
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(std::size_t n) { return PermGroup(n, {Permutation::from_cycles(n, {iota1(n)})}); }

PermGroup dihedral_group(std::size_t n) {
  Cycles refl;
  for (std::size_t i = 2, j = n; i < j; ++i, --j) refl.push_back({i, j});
  return PermGroup(n, {Permutation::from_cycles(n, {iota1(n)}), Permutation::from_cycles(n, refl)});
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(int p, const char* what) {
  if (!is_prime(p)) throw InputError(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

int mod_inverse(int a, int p) {
  long long result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

std::size_t parse_count(std::string_view text, const std::string& spec) {
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw InputError("bad parameter in group spec '" + spec + "'");
  return n;
}

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

Permutation parse_cycles(const std::string& line, std::size_t degree, std::size_t line_no) {
  Cycles cycles;
  std::set<std::size_t> seen;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] != '(') throw ParseError(line_no, "expected '(' at column " + std::to_string(i + 1));
    const std::size_t close = line.find_first_of("()", i + 1);
    if (close == std::string::npos || line[close] != ')') throw ParseError(line_no, "unbalanced parentheses");
    std::vector<std::size_t> cycle;
    std::string_view body(line.data() + i + 1, close - i - 1);
    while (!body.empty()) {
      const std::size_t comma = body.find(',');
      std::string_view tok = body.substr(0, comma);
      std::size_t x = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "bad point '" + std::string(tok) + "'");
      if (x < 1 || x > degree)
        throw ParseError(line_no, "point " + std::to_string(x) + " outside 1.." + std::to_string(degree));
      if (!seen.insert(x).second) throw ParseError(line_no, "point " + std::to_string(x) + " repeated");
      cycle.push_back(x);
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
      if (body.empty()) throw ParseError(line_no, "trailing comma");
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace

std::string_view to_string(Algorithm a) { return a == Algorithm::blt ? "blt" : "hhl"; }

PermGroup psl2(int p) {
  require_prime(p, "psl2");
  // Points 0..p-1 of the affine line and p for infinity; x -> x+1 and
  // x -> -1/x generate the group.
  const auto n = static_cast<std::size_t>(p) + 1;
  std::vector<Point> shift(n), flip(n);
  for (int x = 0; x < p; ++x) {
    shift[x] = static_cast<Point>((x + 1) % p);
    flip[x] = static_cast<Point>(x == 0 ? p : (p - mod_inverse(x, p)) % p);
  }
  shift[p] = static_cast<Point>(p);
  flip[p] = 0;
  return PermGroup(n, {Permutation::from_images(shift), Permutation::from_images(flip)});
}

PermGroup psl3(int p) {
  require_prime(p, "psl3");
  using Vec = std::array<int, 3>;
  auto normalize = [p](Vec v) {
    for (int c : v)
      if (c != 0) {
        const int inv = mod_inverse(c, p);
        for (int& x : v) x = x * inv % p;
        break;
      }
    return v;
  };
  std::vector<Vec> points;
  std::map<Vec, std::size_t> index;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c) {
        Vec v{a, b, c};
        if (v == Vec{0, 0, 0} || normalize(v) != v) continue;
        index[v] = points.size();
        points.push_back(v);
      }
  // Elementary transvections I + E_ij generate SL(3,p).
  std::vector<Permutation> gens;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::vector<Point> images(points.size());
      for (std::size_t k = 0; k < points.size(); ++k) {
        Vec w = points[k];
        w[i] = (w[i] + w[j]) % p;
        images[k] = static_cast<Point>(index.at(normalize(w)));
      }
      gens.push_back(Permutation::from_images(std::move(images)));
    }
  return PermGroup(points.size(), std::move(gens));
}

PermGroup parse_group_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (!degree) {
      if (line.rfind("degree", 0) != 0) throw ParseError(line_no, "expected 'degree d' header");
      std::size_t d = 0;
      const std::string num = line.substr(6);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), d);
      if (num.empty() || ec != std::errc() || ptr != num.data() + num.size() || d == 0 || d > kMaxDegree)
        throw ParseError(line_no, "bad degree '" + num + "'");
      degree = d;
      continue;
    }
    gens.push_back(parse_cycles(line, *degree, line_no));
  }
  if (!degree) throw ParseError(line_no, "missing 'degree d' header");
  return PermGroup(*degree, std::move(gens));
}

std::string serialize_group(const PermGroup& g) {
  std::string out = "degree " + std::to_string(g.degree()) + "\n";
  for (const auto& x : g.generators()) out += x.to_cycle_string() + "\n";
  return out;
}

NamedGroup parse_group(const std::string& spec) {
  static const std::set<std::string> builtins{"sym", "alt", "cyc", "dih", "psl2", "psl3"};
  const auto colon = spec.find(':');
  if (colon != std::string::npos && builtins.count(spec.substr(0, colon))) {
    const std::string name = spec.substr(0, colon);
    const std::size_t n = parse_count(std::string_view(spec).substr(colon + 1), spec);
    if (n == 0 || n > kMaxDegree) throw InputError("parameter out of range in '" + spec + "'");
    PermGroup g = [&] {
      if (name == "sym") return symmetric(n);
      if (name == "alt") return alternating(n);
      if (name == "cyc") return cyclic_group(n);
      if (name == "dih") {
        if (n < 3) throw InputError("dih:n needs n >= 3");
        return dihedral_group(n);
      }
      if (n > 1000) throw InputError("prime parameter too large in '" + spec + "'");
      return name == "psl2" ? psl2(static_cast<int>(n)) : psl3(static_cast<int>(n));
    }();
    return {spec, std::make_shared<const PermGroup>(std::move(g))};
  }
  std::ifstream in(spec);
  if (!in) throw InputError("cannot open group file '" + spec + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return {spec, std::make_shared<const PermGroup>(parse_group_text(buf.str()))};
}

AtlasReport run_classify(const NamedGroup& g, const SearchConfig& cfg, Algorithm algorithm) {
  AtlasReport r;
  r.group_name = g.name;
  r.group_order = g.group->order();
  r.degree = g.group->degree();
  r.algorithm = algorithm;
  r.config = cfg;
  for (const auto& c : conjugacy_classes(*g.group, cfg.enumeration_cap))
    if (c.element_order == 2) r.involution_count += c.size;
  r.involution_ratio = static_cast<double>(r.involution_count) / r.group_order.to_double();
  SearchResult res = algorithm == Algorithm::blt ? classify(g.group, cfg) : classify_hhl(g.group, cfg);
  r.records = std::move(res.records);
  r.stats = res.stats;
  return r;
}

std::string format_ratio(double ratio) { return fmt::format("{:#.4g}", ratio); }

namespace {

std::string type_brackets(const SchlafliType& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.entries.size(); ++i) s += (i ? "," : "") + std::to_string(t.entries[i]);
  return s + "]";
}

nlohmann::json order_json(const GroupOrder& o) {
  if (o.fits_u64()) return o.to_u64();
  return o.to_string();
}

nlohmann::json config_json(const SearchConfig& c) {
  nlohmann::json j{{"max_rank", c.max_rank},
                   {"include_regular", c.include_regular},
                   {"merge_enantiomorphs", c.merge_enantiomorphs},
                   {"enumeration_cap", c.enumeration_cap},
                   {"threads", c.threads}};
  if (c.seed_filter) j["seed_filter"] = *c.seed_filter;
  return j;
}

}  // namespace

std::string render_text(const AtlasReport& r) {
  std::string out;
  out += fmt::format("group {} of order {} on {} points\n", r.group_name, r.group_order.to_string(), r.degree);
  out += fmt::format("involutions {} (ratio {})\n", r.involution_count, format_ratio(r.involution_ratio));
  for (const auto& rec : r.records) {
    out += fmt::format("New {} of type {} for group of order {}\n", rec.chiral ? "chiral" : "directly regular",
                       type_brackets(rec.schlafli), rec.group_order.to_string());
    const auto& a = rec.alpha_tuple.alphas();
    for (std::size_t i = 0; i < a.size(); ++i) out += fmt::format("  a{} = {}\n", i + 1, a[i].to_cycle_string());
  }
  const auto& s = r.stats;
  out += fmt::format("{} records by {} in {:.3f}s; {} seeds, {} tuples tested, {} intersection checks, "
                     "{} chirality checks, {} truncated branches\n",
                     r.records.size(), to_string(r.algorithm), s.wall_time.count(), s.classes_seeded,
                     s.tuples_tested, s.ic_checks, s.chirality_checks, s.truncated_branches);
  return out;
}

nlohmann::json to_json(const AtlasReport& r) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& rec : r.records) {
    std::vector<std::string> gens;
    for (const auto& a : rec.alpha_tuple.alphas()) gens.push_back(a.to_cycle_string());
    records.push_back({{"rank", rec.rank},
                       {"schlafli", rec.schlafli.entries},
                       {"chiral", rec.chiral},
                       {"generators", gens}});
  }
  const auto& s = r.stats;
  return {{"tool", "chiral"},
          {"version", kToolVersion},
          {"group",
           {{"name", r.group_name},
            {"order", order_json(r.group_order)},
            {"degree", r.degree},
            {"involutions", r.involution_count},
            {"involution_ratio", r.involution_ratio}}},
          {"algorithm", to_string(r.algorithm)},
          {"config", config_json(r.config)},
          {"records", records},
          {"stats",
           {{"classes_seeded", s.classes_seeded},
            {"tuples_tested", s.tuples_tested},
            {"ic_checks", s.ic_checks},
            {"chirality_checks", s.chirality_checks},
            {"records_emitted", s.records_emitted},
            {"truncated_branches", s.truncated_branches},
            {"degenerate_second_rotation", s.degenerate_second_rotation},
            {"candidates_before_dedup", s.candidates_before_dedup},
            {"wall_time_s", s.wall_time.count()}}}};
}

std::vector<BenchRow> run_bench(const std::vector<std::string>& specs, const SearchConfig& cfg) {
  std::vector<BenchRow> rows;
  for (const auto& spec : specs) {
    BenchRow row;
    row.group_name = spec;
    try {
      const NamedGroup g = parse_group(spec);
      const AtlasReport blt = run_classify(g, cfg, Algorithm::blt);
      row.group_order = blt.group_order.to_string();
      row.involution_ratio = blt.involution_ratio;
      row.blt_seconds = blt.stats.wall_time.count();
      row.blt_records = blt.records.size();
      const AtlasReport hhl = run_classify(g, cfg, Algorithm::hhl);
      row.hhl_seconds = hhl.stats.wall_time.count();
      row.hhl_records = hhl.records.size();
      std::multiset<std::pair<std::size_t, SchlafliType>> a, b;
      for (const auto& rec : blt.records) a.insert({rec.rank, rec.schlafli});
      for (const auto& rec : hhl.records) b.insert({rec.rank, rec.schlafli});
      if (a != b) {
        row.failed = true;
        row.error = "record lists differ";
      }
    } catch (const std::exception& e) {
      row.failed = true;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_bench_table(const std::vector<BenchRow>& rows) {
  std::string out = fmt::format("{:<12} {:>10} {:>8} {:>10} {:>10} {:>8} {:>6} {:>6}  {}\n", "group", "order",
                                "i2/|G|", "BLT s", "HHL s", "speedup", "BLT#", "HHL#", "status");
  for (const auto& r : rows) {
    const double speedup = r.blt_seconds > 0 ? r.hhl_seconds / r.blt_seconds : 0.0;
    out += fmt::format("{:<12} {:>10} {:>8} {:>10.4f} {:>10.4f} {:>8.2f} {:>6} {:>6}  {}\n", r.group_name,
                       r.group_order, format_ratio(r.involution_ratio), r.blt_seconds, r.hhl_seconds, speedup,
                       r.blt_records, r.hhl_records, r.failed ? "FAILED " + r.error : "ok");
  }
  return out;
}

nlohmann::json bench_to_json(const std::vector<BenchRow>& rows, const SearchConfig& cfg) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"group", r.group_name},
                   {"order", r.group_order},
                   {"involution_ratio", r.involution_ratio},
                   {"blt_seconds", r.blt_seconds},
                   {"hhl_seconds", r.hhl_seconds},
                   {"blt_records", r.blt_records},
                   {"hhl_records", r.hhl_records},
                   {"status", r.failed ? "FAILED" : "ok"},
                   {"error", r.error}});
  return {{"tool", "chiral"}, {"version", kToolVersion}, {"config", config_json(cfg)}, {"rows", out}};
}

}  // namespace chiral
