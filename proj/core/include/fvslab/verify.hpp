#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fvslab/graph.hpp"

namespace fvslab {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string claimed;
  std::string measured;
};

struct SuiteReport {
  std::string suite;
  bool pass = true;
  std::vector<CheckLine> checks;
  double seconds = 0;

  void add(std::string name, bool ok, std::string claimed, std::string measured) {
    pass = pass && ok;
    checks.push_back({std::move(name), ok, std::move(claimed), std::move(measured)});
  }
};

nlohmann::json to_json(const SuiteReport& rep);

// Decodes the five published building blocks and checks n, f, degeneracy,
// right-left degeneracy and badness of R against the captions; also the
// directed-triangle row.
SuiteReport verify_table1(int threads = 1);

// Recomputes the three ratio columns of all thirty treewidth rows from the
// formulas and solver-verifies the k=4 row's first family member.
SuiteReport verify_table2(std::optional<int> only_row = std::nullopt, int threads = 1);

// Exhaustively establishes a(n) for n up to max_n (at most 7). Progress
// streams to stderr when requested; results go to the report only.
SuiteReport verify_tournaments(int max_n = 7, bool progress = false);

// Full badness and right-left-degeneracy report for a user-supplied block.
SuiteReport verify_block(const Digraph& d, std::span<const int> R, int r_prime);

}  // namespace fvslab
