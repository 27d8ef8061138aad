#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fraczee {

enum class Group { meson, baryon, theoretical };

std::string_view to_string(Group g) noexcept;
std::optional<Group> group_from_string(std::string_view s) noexcept;

struct ParticleRecord {
  std::string name;
  unsigned L = 0;
  unsigned M = 0;
  double mass_exp = 0.0;  // MeV, as printed in the source table
  std::string status;     // "", "*", "**", "***"
  Group group = Group::baryon;

  friend bool operator==(const ParticleRecord&, const ParticleRecord&) = default;
};

enum class DataFormat { csv, json };

// The 53 rows of the published baryon/meson comparison table, in table order.
const std::vector<ParticleRecord>& builtin_table();

// Checks M <= L, mass > 0, non-empty and unique names. `line` is reported in
// the error (0 for none).
void validate(const ParticleRecord& r, std::size_t line = 0);

// CSV needs the header name,L,M,mass_mev,status,group. JSON is an array of
// objects with the same keys. Throws DataError / IoError.
std::vector<ParticleRecord> load_records(const std::filesystem::path& path, DataFormat format);
std::vector<ParticleRecord> parse_records_csv(std::string_view text);
std::vector<ParticleRecord> parse_records_json(std::string_view text);

std::string records_to_csv(const std::vector<ParticleRecord>& records);
std::string records_to_json(const std::vector<ParticleRecord>& records);

// Format from the extension: ".json" -> json, otherwise csv.
DataFormat format_for(const std::filesystem::path& path);

}  // namespace fraczee
