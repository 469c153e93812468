#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fvslab/fvs.hpp"
#include "fvslab/graph.hpp"
#include "fvslab/orderings.hpp"
#include "fvslab/rational.hpp"

namespace fvslab {

// Building block (D, R, r') for the iterated gluing construction, with the
// solver-backed certificates cached once computed.
template <typename G>
struct Block {
  G graph;
  std::vector<int> R;
  int r_prime = -1;
  std::optional<int> f;
  std::optional<bool> r_bad;
  std::optional<bool> r_minimal;
  std::optional<int> deg_rl;
};

void certify_block(Block<Graph>& b, const SolveOptions& opt = {});
void certify_block(Block<Digraph>& b, const SolveOptions& opt = {});

template <typename G>
struct GluePart {
  G graph;
  std::vector<int> R;
};

template <typename G>
struct Glued {
  G graph;
  std::vector<int> part_offset;  // part i occupies [offset[i], offset[i] + n_i)
};

// Substitution gluing: replace vertex i of d0 by parts[i]; along every arc
// (edge) (v_i, v_j) of d0, join R_i to R_j completely in that direction.
Glued<Graph> glue_substitution(const Graph& d0, const std::vector<GluePart<Graph>>& parts);
Glued<Digraph> glue_substitution(const Digraph& d0, const std::vector<GluePart<Digraph>>& parts);

enum class ClaimKind { exact, lower_bound };

template <typename G>
struct FamilyMember {
  int index = 0;
  G graph;
  long long n_formula = 0;
  long long f_formula = 0;
  ClaimKind f_claim = ClaimKind::lower_bound;
  std::optional<int> f_exact;  // filled when the solver is run
  int degeneracy_value = 0;
  EliminationOrdering degeneracy_witness;
  std::optional<TreewidthWitness> treewidth_witness;
  Rat ratio;                 // f_formula / n_formula
  std::vector<int> bad_set;  // R of the newest copy, in composed ids
  std::vector<int> copy_offset;
};

// Iterated gluing of a building block: member i has n + i(n-1) vertices and
// minimum FVS at least (i+1) f, with equality when R is minimal. The block's
// f is taken from its cache, or solved on the spot.
FamilyMember<Graph> iterate_block(const Block<Graph>& block, int i);
FamilyMember<Digraph> iterate_block(const Block<Digraph>& block, int i);

// k/2 copies of K_{k+1} plus one K_{k/2+1+1}, grey and blue edges as in the
// even-degeneracy construction: n = (k+2)k/2 + 1, f = k^2/2. k even.
FamilyMember<Graph> even_deg_block(int k);

// Two glued cliques K_{k+1} and K_{k/2+2} iterated along their bad set:
// n_i = (3k+6)/2 + i(3k+4)/2 and f_i = (i+1)(3k-2)/2 exactly. k even.
FamilyMember<Graph> lbdg_family(int k, int i);

// Adds r1, r2 with arcs (r1,r2), (v,r1), (r2,v) for v in R. R must be a
// minimal bad set (verified); then f grows by exactly one and {r1, r2} is a
// minimal bad set of the result.
std::pair<Digraph, std::vector<int>> addedge_gadget(const Digraph& d, std::span<const int> R,
                                                    const SolveOptions& opt = {});

// Treewidth-k family from a k-vertex tournament: n_i = k+2+i(k+1) and
// f_i >= (i+1)(k - 2 floor(log2 k)).
FamilyMember<Digraph> lbtw_family(int k, int i, const Digraph& tournament);

// Treewidth-k family gluing m gadgeted copies of a (k+1)-tournament and l
// single vertices onto a tournament of order l+m, with 2m+l = k+1.
FamilyMember<Digraph> lbtw2_family(int k, int l, int m, const Digraph& d, const Digraph& d0,
                                   int i);

struct PublishedBlock {
  std::string name;
  std::string digraph6;  // headerless, as printed
  int n = 0;
  int f = 0;
  int deg = 0;
  int deg_rl = 0;  // as printed in the caption
  // Bad set and r' in encoding-index space. The drawings of figures a and d
  // number their vertices differently from the encoding, so R differs from
  // the printed labels there; R_caption keeps the printed ones.
  std::vector<int> R;
  int r_prime = -1;
  std::vector<int> R_caption;
  Digraph graph;
};

// The five published building blocks with their caption metadata.
const std::vector<PublishedBlock>& builtin_blocks();

struct BlockSearchResult {
  bool found = false;
  Block<Digraph> block;
  Rat ratio;  // certified f/(n-1)
  uint64_t iterations = 0;
};

// Seeded local search over oriented digraphs and (R, r') choices maximizing
// f/(n-1) subject to deg_RL <= max_rldeg. Deterministic given the seed;
// iteration-bounded, not wall-clock-bounded.
BlockSearchResult search_block(int n, int max_rldeg, uint64_t seed, uint64_t iterations);

// JSON construction spec: {"op": "digraph6"|"graph6"|"vertex"|"triangle"|
// "addedge"|"gen2"|"gen", ...} with nested part specs.
struct ConstructionOutput {
  std::variant<Graph, Digraph> graph;
  std::string description;
  std::optional<int> f_exact;
};

ConstructionOutput run_construction_spec(const std::string& json_text, bool verify = false,
                                         const SolveOptions& opt = {});

}  // namespace fvslab
