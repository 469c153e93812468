#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "fvslab/graph.hpp"

namespace fvslab {

struct SolveOptions {
  std::optional<int> budget;  // give up once no FVS within this size can exist
  std::optional<std::chrono::milliseconds> deadline;
  uint64_t node_limit = 0;  // 0 = unlimited
};

enum class SolveStatus { optimal, budget_exceeded, timeout };

struct FvsCertificate {
  std::vector<int> vertices;  // the feedback vertex set F
  bool optimal = false;
  SolveStatus status = SolveStatus::optimal;
  // Residual acyclicity witness for G - F: a topological order (directed)
  // or a rooted forest as a parent array (undirected, -1 at roots, -2 on F).
  std::vector<int> topo_order;
  std::vector<int> forest_parent;
  uint64_t nodes = 0;

  int size() const { return static_cast<int>(vertices.size()); }
};

inline constexpr int kSolverMaxVertices = 64;

// Exact minimum feedback vertex set by branch and bound on a shortest
// (directed) cycle, with source/sink (degree <= 1) stripping and a greedy
// vertex-disjoint cycle packing lower bound. Deterministic.
FvsCertificate min_fvs(const Digraph& d, const SolveOptions& opt = {});
FvsCertificate min_fvs(const Graph& g, const SolveOptions& opt = {});

// Complement of a minimum FVS; induces a DAG.
std::vector<int> max_acyclic_set(const Digraph& d, const SolveOptions& opt = {});

struct TournamentA {
  int n = 0;
  int value = 0;   // a(n), or the best upper bound found
  bool exact = false;
  Digraph witness;  // tournament attaining the value
};

// a(n): minimum over n-vertex tournaments of the largest acyclic subset.
// Exhaustive (up to relabeling) for n <= 7; seeded stochastic search above,
// flagged as an upper bound only.
TournamentA tournament_a(int n, uint64_t seed = 1, uint64_t iterations = 20000);

// Largest transitive subtournament size of a tournament.
int max_transitive_subset(const Digraph& t);

struct BadSetReport {
  std::vector<int> R;
  bool is_bad = false;
  bool is_minimal_bad = false;
  int f = 0;           // minimum FVS size of the whole graph
  int f_minus_r = 0;   // f(D - R)
  int f_forced = 0;    // |R| + f(D - R)
  std::vector<int> f_codim;  // f(D - (R minus one vertex)), aligned with R
};

// R is bad iff it lies in no minimum FVS, i.e. |R| + f(D-R) > f.
// Minimality is certified through the |R| co-dimension-one subsets.
BadSetReport bad_set_report(const Digraph& d, std::span<const int> R,
                            const SolveOptions& opt = {});
BadSetReport bad_set_report(const Graph& g, std::span<const int> R,
                            const SolveOptions& opt = {});

// Smallest (then lexicographically first) bad set; it is minimal.
std::vector<int> find_minimum_bad_set(const Digraph& d, const SolveOptions& opt = {});
std::vector<int> find_minimum_bad_set(const Graph& g, const SolveOptions& opt = {});

}  // namespace fvslab
