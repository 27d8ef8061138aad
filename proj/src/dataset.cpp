#include "fraczee/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "fraczee/error.hpp"

namespace fraczee {
namespace {

using enum Group;

const std::vector<ParticleRecord> kTable = {
    {"π⁰", 1, 0, 135, "", meson},
    {"K⁰_S", 1, 1, 498, "", meson},
    {"ρ(770)", 2, 0, 776, "", meson},
    {"K*(892)⁰", 2, 1, 896, "", meson},
    {"φ(1020)", 2, 2, 1019, "", meson},
    {"N", 3, 0, 938, "", baryon},
    {"Λ", 3, 1, 1116, "", baryon},
    {"Σ⁰", 3, 2, 1193, "", baryon},
    {"Ξ⁰", 3, 3, 1315, "", baryon},
    {"Δ(1232)", 4, 0, 1232, "", baryon},
    {"Σ⁰(1385)", 4, 1, 1384, "", baryon},
    {"Ξ(1530)", 4, 2, 1532, "", baryon},
    {"Ω⁻", 4, 3, 1672, "", baryon},
    {"Λ(1800)", 4, 4, 1775, "", baryon},
    {"Λ(1520)", 5, 0, 1520, "", baryon},
    {"Λ(1670)", 5, 1, 1670, "", baryon},
    {"Ξ(1820)", 5, 2, 1823, "", baryon},
    {"Δ(1910)", 5, 3, 1910, "", baryon},
    {"Σ(2030)", 5, 4, 2030, "", baryon},
    {"Λ(2100)", 5, 5, 2100, "", baryon},
    {"Σ(1750)", 6, 0, 1750, "", baryon},
    {"Σ(1915)", 6, 1, 1915, "", baryon},
    {"Ξ(2030)", 6, 2, 2025, "", baryon},
    {"Δ(2150)", 6, 3, 2150, "*", baryon},
    {"Ω(2250)", 6, 4, 2252, "", baryon},
    {"Ω(2380)", 6, 5, 2380, "**", baryon},
    {"Σ_c(2452)", 6, 6, 2452, "", baryon},
    {"Ξ(1950)", 7, 0, 1950, "", baryon},
    {"Λ(2110)", 7, 1, 2110, "", baryon},
    {"Λ_c", 7, 2, 2286, "", baryon},
    {"Δ(2420)", 7, 3, 2420, "", baryon},
    {"Ξ⁺_c(2467)", 7, 4, 2467, "", baryon},
    {"Ξ'⁺_c(2575)", 7, 5, 2576, "", baryon},
    {"Ξ⁰_c(2645)", 7, 6, 2645, "", baryon},
    {"Ξ⁰_c(2790)", 7, 7, 2791, "", baryon},
    {"N(2190)", 8, 0, 2190, "", baryon},
    {"Λ(2350)", 8, 1, 2350, "", baryon},
    {"Ξ⁰_c(2471)", 8, 2, 2471, "", baryon},
    {"Λ⁺_c(2593)", 8, 3, 2595, "", baryon},
    {"Ω⁰_c", 8, 4, 2698, "", baryon},
    {"Σ⁰_c(2800)", 8, 5, 2800, "", baryon},
    {"Λ⁺_c(2880)", 8, 6, 2882, "***", baryon},
    {"Ξ(2980)", 8, 7, 2978, "***", baryon},
    {"Ξ_c(3080)", 8, 8, 3076, "***", baryon},
    {"Ω⁻(2380)", 9, 0, 2380, "**", baryon},
    {"Σ_c(2520)", 9, 1, 2518, "***", baryon},
    {"Σ_c(2645)", 9, 2, 2646, "***", baryon},
    {"Λ_c(2880)", 9, 4, 2882, "***", baryon},
    {"Σ(3170)", 9, 7, 3170, "*", baryon},
    {"Ξ⁺_cc", 10, 9, 3519, "*", baryon},
    {"Ω_cc", 11, 8, 3637, "", theoretical},
    {"Ω_ccc", 15, 15, 4681, "", theoretical},
    {"Λ⁰_b", 20, 20, 5620, "***", baryon},
};

constexpr std::string_view kHeader = "name,L,M,mass_mev,status,group";

std::vector<std::string> split_csv_line(std::string_view line, std::size_t lineno) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) {
    throw DataError("unterminated quote", lineno);
  }
  fields.push_back(std::move(cur));
  return fields;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  return out + "\"";
}

unsigned parse_unsigned(std::string_view s, const char* what, std::size_t lineno) {
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw DataError(fmt::format("bad {} '{}'", what, s), lineno);
  }
  return v;
}

double parse_double(std::string_view s, const char* what, std::size_t lineno) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) {
    throw DataError(fmt::format("bad {} '{}'", what, s), lineno);
  }
  return v;
}

Group parse_group(std::string_view s, std::size_t lineno) {
  if (auto g = group_from_string(s)) {
    return *g;
  }
  throw DataError(fmt::format("unknown group '{}'", s), lineno);
}

void check_unique(const std::vector<ParticleRecord>& records,
                  const std::vector<std::size_t>& lines) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!seen.insert(records[i].name).second) {
      throw DataError("duplicate name '" + records[i].name + "'", lines[i]);
    }
  }
}

}  // namespace

std::string_view to_string(Group g) noexcept {
  switch (g) {
    case Group::meson:
      return "meson";
    case Group::baryon:
      return "baryon";
    case Group::theoretical:
      return "theoretical";
  }
  return "baryon";
}

std::optional<Group> group_from_string(std::string_view s) noexcept {
  for (Group g : {Group::meson, Group::baryon, Group::theoretical}) {
    if (to_string(g) == s) {
      return g;
    }
  }
  return std::nullopt;
}

const std::vector<ParticleRecord>& builtin_table() { return kTable; }

void validate(const ParticleRecord& r, std::size_t line) {
  if (r.name.empty()) {
    throw DataError("empty name", line);
  }
  if (r.M > r.L) {
    throw DataError(fmt::format("'{}': M = {} exceeds L = {}", r.name, r.M, r.L), line);
  }
  if (!(r.mass_exp > 0.0) || !std::isfinite(r.mass_exp)) {
    throw DataError(fmt::format("'{}': mass must be positive", r.name), line);
  }
}

std::vector<ParticleRecord> parse_records_csv(std::string_view text) {
  std::vector<ParticleRecord> out;
  std::vector<std::size_t> lines;
  std::size_t lineno = 0;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    if (!header_seen) {
      if (line != kHeader) {
        throw DataError(fmt::format("expected header '{}'", kHeader), lineno);
      }
      header_seen = true;
      continue;
    }
    const auto f = split_csv_line(line, lineno);
    if (f.size() != 6) {
      throw DataError(fmt::format("expected 6 fields, got {}", f.size()), lineno);
    }
    ParticleRecord r{f[0],
                     parse_unsigned(f[1], "L", lineno),
                     parse_unsigned(f[2], "M", lineno),
                     parse_double(f[3], "mass_mev", lineno),
                     f[4],
                     parse_group(f[5], lineno)};
    validate(r, lineno);
    out.push_back(std::move(r));
    lines.push_back(lineno);
  }
  check_unique(out, lines);
  return out;
}

std::vector<ParticleRecord> parse_records_json(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    return {};
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!doc.is_array()) {
    throw DataError("expected a JSON array of records", 0);
  }
  std::vector<ParticleRecord> out;
  std::vector<std::size_t> lines;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& o = doc[i];
    try {
      ParticleRecord r{o.at("name").get<std::string>(),
                       o.at("L").get<unsigned>(),
                       o.at("M").get<unsigned>(),
                       o.at("mass_mev").get<double>(),
                       o.value("status", std::string{}),
                       parse_group(o.at("group").get<std::string>(), i + 1)};
      validate(r, i + 1);
      out.push_back(std::move(r));
      lines.push_back(i + 1);
    } catch (const nlohmann::json::exception& e) {
      throw DataError(fmt::format("record {}: {}", i + 1, e.what()), 0);
    }
  }
  check_unique(out, lines);
  return out;
}

std::vector<ParticleRecord> load_records(const std::filesystem::path& path, DataFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  return format == DataFormat::json ? parse_records_json(text) : parse_records_csv(text);
}

std::string records_to_csv(const std::vector<ParticleRecord>& records) {
  std::string out(kHeader);
  out += '\n';
  for (const auto& r : records) {
    out += fmt::format("{},{},{},{},{},{}\n", csv_field(r.name), r.L, r.M, r.mass_exp,
                       csv_field(r.status), to_string(r.group));
  }
  return out;
}

std::string records_to_json(const std::vector<ParticleRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    arr.push_back({{"name", r.name},
                   {"L", r.L},
                   {"M", r.M},
                   {"mass_mev", r.mass_exp},
                   {"status", r.status},
                   {"group", std::string(to_string(r.group))}});
  }
  return arr.dump(2) + "\n";
}

DataFormat format_for(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".json" ? DataFormat::json : DataFormat::csv;
}

}  // namespace fraczee
