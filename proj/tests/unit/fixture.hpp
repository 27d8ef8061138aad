#pragma once

// Rows of the published comparison table, transcribed into
// tests/data/table1_fixture.csv, including the printed E_th and dE columns.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef FRACZEE_TEST_DATA_DIR
#error "FRACZEE_TEST_DATA_DIR must be defined"
#endif

struct FixtureRow {
  std::string name;
  unsigned L = 0;
  unsigned M = 0;
  double mass = 0.0;
  std::string status;
  std::string group;
  double e_th = 0.0;
  std::optional<double> delta_e;
};

inline std::string fixture_path(const std::string& file) {
  return std::string(FRACZEE_TEST_DATA_DIR) + "/" + file;
}

inline std::vector<FixtureRow> load_fixture() {
  std::ifstream in(fixture_path("table1_fixture.csv"));
  std::vector<FixtureRow> rows;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (line.back() == ',') f.emplace_back();
    FixtureRow r;
    r.name = f.at(0);
    r.L = static_cast<unsigned>(std::stoul(f.at(1)));
    r.M = static_cast<unsigned>(std::stoul(f.at(2)));
    r.mass = std::stod(f.at(3));
    r.status = f.at(4);
    r.group = f.at(5);
    r.e_th = std::stod(f.at(6));
    if (!f.at(7).empty()) r.delta_e = std::stod(f.at(7));
    rows.push_back(r);
  }
  return rows;
}
