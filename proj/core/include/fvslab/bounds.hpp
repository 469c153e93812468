#pragma once

#include <optional>
#include <vector>

#include "fvslab/fvs.hpp"
#include "fvslab/graph.hpp"
#include "fvslab/orderings.hpp"
#include "fvslab/rational.hpp"

namespace fvslab {

// ------------------------------------------------------------- constants

// f_k: the largest minimum FVS size over tournaments on k+1 vertices.
// Exact for 3 <= k <= 33; only an upper bound from k = 34 on.
struct FkEntry {
  int value;
  bool exact;
};
FkEntry tournament_fk(int k);

// a(n) rows as published; n = 34 appears in two rows and is flagged.
struct AnEntry {
  int lo;
  int hi;  // equals lo when the row pins the value
  bool doubly_specified;
};
AnEntry tournament_a_row(int n);

int floor_log2(int x);

// Formula evaluators (ratios of |F| to n).
Rat ratio_undirected_treewidth(int k);   // (k-1)/(k+1)
Rat ratio_undirected_degeneracy(int k);  // (k-1)/(k+1) odd, k/(k+2) even
Rat ratio_directed_degeneracy(int k);    // (k-1)/(k+1)
Rat ratio_directed_treewidth(int k);     // k/(k+3)
Rat ratio_lbdg(int k);                   // (3k-2)/(3k+4)
Rat ratio_lbtw(int k);                   // (k-2*floor(log2 k))/(k+1)
Rat ratio_tournament_union(int k);       // (k-2*floor(log2(k+1)))/(k+1)

// --------------------------------------------------- constructive bounds

struct ForestPartition {
  std::vector<std::vector<int>> classes;  // ceil((k+1)/2) classes, each a forest
  std::vector<int> fvs;                   // all classes but a largest one
};

// Colors vertices along a k-elimination ordering so every class induces a
// forest (each vertex has at most one earlier neighbor of its own color).
ForestPartition forest_partition(const Graph& g, int k);

// Constructive FVS for a k-degenerate digraph, |F| <= floor((k-1)/(k+1) n):
// peel low in/out-degree vertices; once stuck (k even, balanced k-vertices),
// complete to an edge-maximal k-degenerate graph and remove the vertex sets
// prescribed by the two-vertex case analysis.
FvsCertificate degdir_fvs(const Digraph& d, int k);

// Constructive FVS for a digraph of treewidth <= k (witnessed by the given
// ordering), |F| <= floor(k/(k+3) n). k = 1 yields the empty set; k in {2,3}
// delegates to degdir_fvs; k >= 4 runs the k-tree case analysis with the
// exact solver on the n <= k+6 base.
FvsCertificate ubtw_fvs(const Digraph& d, int k, const std::vector<int>& witness_order);

enum class StrictnessKind {
  even_degeneracy_undirected,  // f (k+2) < k n
  odd_degeneracy_directed,     // f (k+1) < (k-1) n
};

struct StrictnessReport {
  StrictnessKind kind;
  int n = 0;
  int f = 0;
  int k = 0;
  long long margin = 0;  // f*denominator - numerator*n, strict means < 0
  bool strict = false;   // false contradicts the published strict inequality
};

StrictnessReport strictness_check(int n, int f, int k, StrictnessKind kind);

}  // namespace fvslab
