#pragma once

#include <optional>
#include <vector>

#include "fvslab/graph.hpp"

namespace fvslab {

// A vertex permutation with the per-vertex statistics the elimination
// machinery needs: back-degree d_p, forward-degree d_s, and whether the back
// neighborhood is a clique. Vertices are eliminated right to left.
struct EliminationOrdering {
  std::vector<int> order;         // order[p] = vertex at position p (0-based)
  std::vector<int> position;      // inverse permutation
  std::vector<int> back_degree;   // d_p, indexed by vertex
  std::vector<int> forward_degree;  // d_s, indexed by vertex
  std::vector<char> back_clique;  // per vertex: back neighborhood is a clique

  int width() const;
  bool chordal() const;
};

// Computes d_p, d_s and the clique flags of `order` on g.
EliminationOrdering analyze_ordering(const Graph& g, std::vector<int> order);

struct DegeneracyResult {
  int value;
  EliminationOrdering ordering;  // max back-degree equals value
};

// Exact degeneracy by greedy minimum-degree peeling, lowest id first.
DegeneracyResult degeneracy(const Graph& g);
DegeneracyResult degeneracy(const Digraph& d);

// The stable-set replacement D_{r' x |R|}: r' is replaced by a stable set S
// of |R| vertices, each wired like r'. Vertices keep their ids except r' is
// dropped and S occupies the top ids.
struct StableReplacement {
  Graph graph;
  std::vector<int> stable_set;  // ids of S in the replacement
  std::vector<int> new_id;      // old id -> new id, -1 at r'
};

StableReplacement stable_replacement(const Graph& g, std::span<const int> R, int r_prime);

struct RlDegeneracyResult {
  int value;
  EliminationOrdering ordering;  // S-last ordering of the replacement graph
  StableReplacement replacement;
};

// Right-left degeneracy of a building block (D, R, r'): the minimum k such
// that D_{r' x |R|} admits an S-last k-elimination ordering. Computed by the
// constrained greedy peel (S is never peeled while anything else remains),
// which is optimal by the usual degeneracy exchange argument.
RlDegeneracyResult rl_degeneracy(const Graph& g, std::span<const int> R, int r_prime);
RlDegeneracyResult rl_degeneracy(const Digraph& d, std::span<const int> R, int r_prime);

struct TreewidthWitness {
  enum class Kind { exact, upper };
  Kind kind = Kind::upper;
  int value = 0;
  // Completing the fill-in along this ordering yields max back-degree `value`.
  EliminationOrdering ordering;
};

inline constexpr int kTreewidthExactLimit = 20;

// Exact treewidth by dynamic programming over elimination prefixes.
// Refuses orders above `limit` (callers should fall back to treewidth_upper).
TreewidthWitness treewidth_exact(const Graph& g, int limit = kTreewidthExactLimit);

// Fill-in width of g along the given elimination order.
int fill_in_width(const Graph& g, const std::vector<int>& order);

// Upper bound: fill-in width of the supplied ordering when given, otherwise
// of a greedy minimum-fill ordering.
TreewidthWitness treewidth_upper(const Graph& g,
                                 const std::vector<int>* hint_order = nullptr);

// Supergraph with a k-elimination ordering where d_p(v) = min(k, p) at every
// position p. Requires degeneracy(g) <= k.
Graph complete_to_maximal_kdegenerate(const Graph& g, int k);

struct KTreeCompletion {
  Graph ktree;
  EliminationOrdering ordering;  // chordal, d_p(v) = min(k, position)
};

// Completes g to a k-tree. Needs a width-<=k witness: the hint ordering if
// given, the exact DP below the size limit, greedy fill-in otherwise.
KTreeCompletion complete_to_ktree(const Graph& g, int k,
                                  const std::vector<int>* hint_order = nullptr);

// True iff g has a chordal k-elimination ordering with d_p = min(k, p).
bool is_ktree(const Graph& g, int k);

struct MainLemmaVertex {
  bool degenerate = false;  // all degrees <= k (K_{k+1} style input)
  int v = -1;
  int l = 0;
  std::vector<int> k_neighbors;
};

// In a k-tree, finds a (k+l)-vertex with exactly l neighbors of degree k
// (lowest id). Reports the degenerate case when max degree <= k; throws
// InternalError when the input cannot be a k-tree.
MainLemmaVertex find_main_lemma_vertex(const Graph& g, int k);

// All vertices satisfying the main-lemma shape, ascending by id.
std::vector<MainLemmaVertex> main_lemma_candidates(const Graph& g, int k);

}  // namespace fvslab
