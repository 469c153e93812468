#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fvslab {

// Hard cap on the order of any graph handled by this library.
inline constexpr int kMaxVertices = 4096;

// Thrown on violated preconditions (bad vertex ids, antiparallel arcs, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an internal invariant that the algorithms rely on fails.
// The message carries a serialized copy of the offending (sub)graph.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple undirected graph: no loops, no parallel edges, vertices 0..n-1.
// Immutable after construction; all surgery returns new graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int size() const { return m_; }
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

// Oriented digraph: no loops, at most one arc per vertex pair (antiparallel
// pairs are rejected at construction, always).
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, const std::vector<std::pair<int, int>>& arcs);

  int order() const { return n_; }
  int size() const { return m_; }
  std::span<const int> out_neighbors(int v) const { return out_[v]; }
  std::span<const int> in_neighbors(int v) const { return in_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
  int degree(int v) const { return out_degree(v) + in_degree(v); }
  bool has_arc(int u, int v) const;
  bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

  std::vector<std::pair<int, int>> arcs() const;

  bool operator==(const Digraph&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

Graph underlying(const Digraph& d);

// Result of taking an induced subgraph: the new graph plus both directions
// of the re-indexing map (new id -> old id, old id -> new id or -1).
template <typename G>
struct Induced {
  G graph;
  std::vector<int> old_id;  // indexed by new id
  std::vector<int> new_id;  // indexed by old id, -1 if dropped
};

Induced<Graph> induced_subgraph(const Graph& g, std::span<const int> keep);
Induced<Digraph> induced_subgraph(const Digraph& d, std::span<const int> keep);

// Convenience: induced subgraph on the complement of `remove`.
Induced<Graph> remove_vertices(const Graph& g, std::span<const int> remove);
Induced<Digraph> remove_vertices(const Digraph& d, std::span<const int> remove);

// Acyclicity check with witness: a rooted forest (parent array, -1 at roots)
// for undirected inputs, a topological order for directed ones.
struct Acyclicity {
  bool acyclic = false;
  std::vector<int> topo_order;      // directed witness
  std::vector<int> forest_parent;   // undirected witness
  explicit operator bool() const { return acyclic; }
};

Acyclicity is_acyclic(const Graph& g);
Acyclicity is_acyclic(const Digraph& d);

// New vertex n adjacent to all old vertices.
Graph add_apex(const Graph& g);

// Vertex ids offset cumulatively, no cross edges.
Graph disjoint_union(const std::vector<Graph>& parts);
Digraph disjoint_union(const std::vector<Digraph>& parts);

// DOT export, deterministic vertex order.
std::string to_dot(const Graph& g);
std::string to_dot(const Digraph& d);

}  // namespace fvslab
