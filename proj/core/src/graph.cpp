#include "fvslab/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace fvslab {

namespace {

int check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("graph order " + std::to_string(n) + " out of range [0, " +
                     std::to_string(kMaxVertices) + "]");
  }
  return n;
}

void check_vertex(int v, int n, const char* what) {
  if (v < 0 || v >= n) {
    throw InputError(std::string(what) + " id " + std::to_string(v) +
                     " out of range for order " + std::to_string(n));
  }
}

void sort_lists(std::vector<std::vector<int>>& lists) {
  for (auto& l : lists) std::sort(l.begin(), l.end());
}

}  // namespace

Graph::Graph(int n) : n_(check_order(n)), adj_(n_) {}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(u, n_, "vertex");
    check_vertex(v, n_, "vertex");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  sort_lists(adj_);
  for (int v = 0; v < n_; ++v) {
    if (std::adjacent_find(adj_[v].begin(), adj_[v].end()) != adj_[v].end()) {
      throw InputError("duplicate edge at vertex " + std::to_string(v));
    }
  }
  m_ = static_cast<int>(edges.size());
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u, n_, "vertex");
  check_vertex(v, n_, "vertex");
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Digraph::Digraph(int n) : n_(check_order(n)), out_(n_), in_(n_) {}

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& arcs) : Digraph(n) {
  for (auto [u, v] : arcs) {
    check_vertex(u, n_, "vertex");
    check_vertex(v, n_, "vertex");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  sort_lists(out_);
  sort_lists(in_);
  for (int v = 0; v < n_; ++v) {
    if (std::adjacent_find(out_[v].begin(), out_[v].end()) != out_[v].end()) {
      throw InputError("duplicate arc out of vertex " + std::to_string(v));
    }
  }
  // Oriented: an arc and its reverse may not both be present.
  for (int u = 0; u < n_; ++u) {
    for (int v : out_[u]) {
      if (u < v && std::binary_search(out_[v].begin(), out_[v].end(), u)) {
        throw InputError("antiparallel arc pair between " + std::to_string(u) +
                         " and " + std::to_string(v));
      }
    }
  }
  m_ = static_cast<int>(arcs.size());
}

bool Digraph::has_arc(int u, int v) const {
  check_vertex(u, n_, "vertex");
  check_vertex(v, n_, "vertex");
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : out_[u]) out.emplace_back(u, v);
  return out;
}

Graph underlying(const Digraph& d) {
  std::vector<std::pair<int, int>> edges = d.arcs();
  return Graph(d.order(), edges);
}

namespace {

std::vector<int> make_new_ids(int n, std::span<const int> keep, const char* what) {
  std::vector<int> new_id(n, -1);
  std::vector<char> seen(n, 0);
  int next = 0;
  for (int v : keep) {
    check_vertex(v, n, what);
    if (seen[v]) throw InputError("duplicate vertex in selection: " + std::to_string(v));
    seen[v] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (seen[v]) new_id[v] = next++;
  return new_id;
}

}  // namespace

Induced<Graph> induced_subgraph(const Graph& g, std::span<const int> keep) {
  std::vector<int> new_id = make_new_ids(g.order(), keep, "selected vertex");
  std::vector<int> old_id;
  old_id.reserve(keep.size());
  for (int v = 0; v < g.order(); ++v)
    if (new_id[v] >= 0) old_id.push_back(v);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (new_id[u] >= 0 && new_id[v] >= 0) edges.emplace_back(new_id[u], new_id[v]);
  return {Graph(static_cast<int>(old_id.size()), edges), std::move(old_id), std::move(new_id)};
}

Induced<Digraph> induced_subgraph(const Digraph& d, std::span<const int> keep) {
  std::vector<int> new_id = make_new_ids(d.order(), keep, "selected vertex");
  std::vector<int> old_id;
  old_id.reserve(keep.size());
  for (int v = 0; v < d.order(); ++v)
    if (new_id[v] >= 0) old_id.push_back(v);
  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : d.arcs())
    if (new_id[u] >= 0 && new_id[v] >= 0) arcs.emplace_back(new_id[u], new_id[v]);
  return {Digraph(static_cast<int>(old_id.size()), arcs), std::move(old_id), std::move(new_id)};
}

namespace {

std::vector<int> complement_of(int n, std::span<const int> remove) {
  std::vector<char> drop(n, 0);
  for (int v : remove) {
    check_vertex(v, n, "removed vertex");
    drop[v] = 1;
  }
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (!drop[v]) keep.push_back(v);
  return keep;
}

}  // namespace

Induced<Graph> remove_vertices(const Graph& g, std::span<const int> remove) {
  return induced_subgraph(g, complement_of(g.order(), remove));
}

Induced<Digraph> remove_vertices(const Digraph& d, std::span<const int> remove) {
  return induced_subgraph(d, complement_of(d.order(), remove));
}

Acyclicity is_acyclic(const Graph& g) {
  Acyclicity res;
  int n = g.order();
  res.forest_parent.assign(n, -1);
  std::vector<int> state(n, 0);  // 0 unvisited, 1 visited
  for (int root = 0; root < n; ++root) {
    if (state[root]) continue;
    // iterative DFS; a visited non-parent neighbor closes a cycle
    std::vector<int> stack = {root};
    state[root] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (!state[w]) {
          state[w] = 1;
          res.forest_parent[w] = u;
          stack.push_back(w);
        } else if (w != res.forest_parent[u]) {
          return {};  // cycle
        }
      }
    }
  }
  res.acyclic = true;
  return res;
}

Acyclicity is_acyclic(const Digraph& d) {
  Acyclicity res;
  int n = d.order();
  std::vector<int> indeg(n);
  for (int v = 0; v < n; ++v) indeg[v] = d.in_degree(v);
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  while (!ready.empty()) {
    int u = ready.top();
    ready.pop();
    res.topo_order.push_back(u);
    for (int w : d.out_neighbors(u))
      if (--indeg[w] == 0) ready.push(w);
  }
  if (static_cast<int>(res.topo_order.size()) != n) return {};
  res.acyclic = true;
  return res;
}

Graph add_apex(const Graph& g) {
  int n = g.order();
  check_order(n + 1);
  std::vector<std::pair<int, int>> edges = g.edges();
  for (int v = 0; v < n; ++v) edges.emplace_back(v, n);
  return Graph(n + 1, edges);
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  for (const Graph& p : parts) {
    for (auto [u, v] : p.edges()) edges.emplace_back(u + n, v + n);
    n += p.order();
  }
  return Graph(n, edges);
}

Digraph disjoint_union(const std::vector<Digraph>& parts) {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;
  for (const Digraph& p : parts) {
    for (auto [u, v] : p.arcs()) arcs.emplace_back(u + n, v + n);
    n += p.order();
  }
  return Digraph(n, arcs);
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const Digraph& d) {
  std::ostringstream os;
  os << "digraph {\n";
  for (int v = 0; v < d.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : d.arcs()) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace fvslab
