#include "fvslab/orderings.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace fvslab {

namespace {

// Square bit matrix used by the fill-in simulations.
class BitMatrix {
 public:
  explicit BitMatrix(int n) : words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_) {}

  void set(int i, int j) { bits_[static_cast<size_t>(i) * words_ + (j >> 6)] |= 1ull << (j & 63); }
  bool get(int i, int j) const {
    return (bits_[static_cast<size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1;
  }

  static BitMatrix adjacency(const Graph& g) {
    BitMatrix m(g.order());
    for (auto [u, v] : g.edges()) {
      m.set(u, v);
      m.set(v, u);
    }
    return m;
  }

 private:
  int words_;
  std::vector<uint64_t> bits_;
};

}  // namespace

int EliminationOrdering::width() const {
  int w = 0;
  for (int d : back_degree) w = std::max(w, d);
  return w;
}

bool EliminationOrdering::chordal() const {
  for (char c : back_clique)
    if (!c) return false;
  return true;
}

EliminationOrdering analyze_ordering(const Graph& g, std::vector<int> order) {
  int n = g.order();
  if (static_cast<int>(order.size()) != n) throw InputError("ordering length mismatch");
  EliminationOrdering eo;
  eo.order = std::move(order);
  eo.position.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    int v = eo.order[p];
    if (v < 0 || v >= n || eo.position[v] != -1) throw InputError("ordering is not a permutation");
    eo.position[v] = p;
  }
  eo.back_degree.assign(n, 0);
  eo.forward_degree.assign(n, 0);
  eo.back_clique.assign(n, 1);
  for (int v = 0; v < n; ++v) {
    std::vector<int> back;
    for (int w : g.neighbors(v)) {
      if (eo.position[w] < eo.position[v])
        back.push_back(w);
      else
        ++eo.forward_degree[v];
    }
    eo.back_degree[v] = static_cast<int>(back.size());
    for (size_t i = 0; i < back.size() && eo.back_clique[v]; ++i)
      for (size_t j = i + 1; j < back.size(); ++j)
        if (!g.has_edge(back[i], back[j])) {
          eo.back_clique[v] = 0;
          break;
        }
  }
  return eo;
}

namespace {

// Greedy peel: repeatedly remove the minimum-degree vertex (lowest id on
// ties) among those not in `keep_last`; once only `keep_last` remains, peel
// it too. Returns the removal order (reverse of the elimination ordering)
// and the max degree seen at removal time.
struct PeelResult {
  std::vector<int> removal;
  int width;
};

PeelResult constrained_peel(const Graph& g, const std::vector<char>& keep_last) {
  int n = g.order();
  std::vector<int> deg(n);
  std::vector<char> alive(n, 1);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int pending_late = 0;
  for (int v = 0; v < n; ++v) pending_late += keep_last[v];

  PeelResult res{{}, 0};
  res.removal.reserve(n);
  for (int step = 0; step < n; ++step) {
    bool only_late = static_cast<int>(res.removal.size()) + pending_late == n;
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      if (keep_last[v] && !only_late) continue;
      if (best == -1 || deg[v] < deg[best]) best = v;
    }
    alive[best] = 0;
    res.removal.push_back(best);
    if (keep_last[best]) --pending_late;
    res.width = std::max(res.width, deg[best]);
    for (int w : g.neighbors(best))
      if (alive[w]) --deg[w];
  }
  return res;
}

EliminationOrdering ordering_from_removal(const Graph& g, const std::vector<int>& removal) {
  std::vector<int> order(removal.rbegin(), removal.rend());
  return analyze_ordering(g, std::move(order));
}

}  // namespace

DegeneracyResult degeneracy(const Graph& g) {
  PeelResult peel = constrained_peel(g, std::vector<char>(g.order(), 0));
  return {peel.width, ordering_from_removal(g, peel.removal)};
}

DegeneracyResult degeneracy(const Digraph& d) { return degeneracy(underlying(d)); }

namespace {

template <typename G>
StableReplacement stable_replacement_impl(const G& g, std::span<const int> R, int r_prime) {
  int n = g.order();
  if (r_prime < 0 || r_prime >= n) throw InputError("r' out of range");
  if (R.empty()) throw InputError("R must be nonempty");
  std::vector<char> in_r(n, 0);
  for (int v : R) {
    if (v < 0 || v >= n) throw InputError("R contains out-of-range id");
    in_r[v] = 1;
  }
  if (in_r[r_prime]) throw InputError("r' must not lie in R");

  int s = static_cast<int>(R.size());
  std::vector<int> new_id(n);
  for (int v = 0; v < n; ++v) new_id[v] = v < r_prime ? v : v - 1;
  new_id[r_prime] = -1;

  std::vector<std::pair<int, int>> edges;
  std::vector<int> wired;  // neighbors of r' in the underlying sense
  auto add_pair = [&](int u, int v) { edges.emplace_back(u, v); };
  if constexpr (std::is_same_v<G, Graph>) {
    for (auto [u, v] : g.edges()) {
      if (u == r_prime)
        wired.push_back(v);
      else if (v == r_prime)
        wired.push_back(u);
      else
        add_pair(new_id[u], new_id[v]);
    }
  } else {
    for (auto [u, v] : g.arcs()) {
      if (u == r_prime)
        wired.push_back(v);
      else if (v == r_prime)
        wired.push_back(u);
      else
        add_pair(new_id[u], new_id[v]);
    }
  }
  StableReplacement rep;
  rep.stable_set.resize(s);
  for (int i = 0; i < s; ++i) {
    rep.stable_set[i] = n - 1 + i;
    for (int w : wired) add_pair(new_id[w], n - 1 + i);
  }
  rep.graph = Graph(n - 1 + s, edges);
  rep.new_id = std::move(new_id);
  return rep;
}

template <typename G>
RlDegeneracyResult rl_degeneracy_impl(const G& g, std::span<const int> R, int r_prime) {
  RlDegeneracyResult res;
  res.replacement = stable_replacement_impl(g, R, r_prime);
  std::vector<char> last(res.replacement.graph.order(), 0);
  for (int v : res.replacement.stable_set) last[v] = 1;
  PeelResult peel = constrained_peel(res.replacement.graph, last);
  res.value = peel.width;
  res.ordering = ordering_from_removal(res.replacement.graph, peel.removal);
  return res;
}

}  // namespace

StableReplacement stable_replacement(const Graph& g, std::span<const int> R, int r_prime) {
  return stable_replacement_impl(g, R, r_prime);
}

RlDegeneracyResult rl_degeneracy(const Graph& g, std::span<const int> R, int r_prime) {
  return rl_degeneracy_impl(g, R, r_prime);
}

RlDegeneracyResult rl_degeneracy(const Digraph& d, std::span<const int> R, int r_prime) {
  return rl_degeneracy_impl(d, R, r_prime);
}

TreewidthWitness treewidth_exact(const Graph& g, int limit) {
  int n = g.order();
  if (limit > 24) limit = 24;
  if (n > limit) {
    throw InputError("treewidth_exact limited to " + std::to_string(limit) +
                     " vertices (n=" + std::to_string(n) + "); use treewidth_upper");
  }
  if (n == 0) return {TreewidthWitness::Kind::exact, 0, analyze_ordering(g, {})};

  std::vector<uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  uint32_t full = n == 32 ? ~0u : (1u << n) - 1;

  // q(S, v): neighbors of v outside S reachable through S.
  auto q = [&](uint32_t S, int v) {
    uint32_t reach = adj[v];
    uint32_t blob = 1u << v;
    uint32_t frontier = reach & S & ~blob;
    while (frontier) {
      blob |= frontier;
      uint32_t nb = 0;
      for (uint32_t f = frontier; f;) {
        int u = std::countr_zero(f);
        f &= f - 1;
        nb |= adj[u];
      }
      reach |= nb;
      frontier = reach & S & ~blob;
    }
    return std::popcount(reach & ~S & ~(1u << v));
  };

  std::vector<uint8_t> dp(size_t(1) << n, 255);
  std::vector<uint8_t> choice(size_t(1) << n, 255);
  dp[0] = 0;
  for (uint32_t S = 0; S < full; ++S) {
    if (dp[S] == 255) continue;
    uint32_t rest = full & ~S;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      uint8_t w = static_cast<uint8_t>(std::max<int>(dp[S], q(S, v)));
      uint32_t T = S | (1u << v);
      if (w < dp[T]) {
        dp[T] = w;
        choice[T] = static_cast<uint8_t>(v);
      }
    }
  }

  std::vector<int> order;
  order.reserve(n);
  uint32_t S = full;
  while (S) {
    int v = choice[S];
    order.push_back(v);  // removed last among S: leftmost remaining position
    S &= ~(1u << v);
  }
  return {TreewidthWitness::Kind::exact, dp[full], analyze_ordering(g, std::move(order))};
}

int fill_in_width(const Graph& g, const std::vector<int>& order) {
  int n = g.order();
  if (static_cast<int>(order.size()) != n) throw InputError("ordering length mismatch");
  BitMatrix m = BitMatrix::adjacency(g);
  std::vector<char> alive(n, 1);
  int width = 0;
  // eliminate right to left; all still-alive neighbors precede v
  for (int p = n - 1; p >= 0; --p) {
    int v = order[p];
    std::vector<int> nbrs;
    for (int u = 0; u < n; ++u)
      if (alive[u] && u != v && m.get(v, u)) nbrs.push_back(u);
    width = std::max(width, static_cast<int>(nbrs.size()));
    for (size_t i = 0; i < nbrs.size(); ++i)
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        m.set(nbrs[i], nbrs[j]);
        m.set(nbrs[j], nbrs[i]);
      }
    alive[v] = 0;
  }
  return width;
}

namespace {

// Greedy minimum-fill elimination order (ties: smaller degree, then id).
std::vector<int> min_fill_order(const Graph& g) {
  int n = g.order();
  BitMatrix m = BitMatrix::adjacency(g);
  std::vector<char> alive(n, 1);
  std::vector<int> removal;
  removal.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_fill = -1;
    int best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      std::vector<int> nbrs;
      for (int u = 0; u < n; ++u)
        if (alive[u] && u != v && m.get(v, u)) nbrs.push_back(u);
      long fill = 0;
      for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
          if (!m.get(nbrs[i], nbrs[j])) ++fill;
      int deg = static_cast<int>(nbrs.size());
      if (best == -1 || fill < best_fill || (fill == best_fill && deg < best_deg)) {
        best = v;
        best_fill = fill;
        best_deg = deg;
      }
    }
    std::vector<int> nbrs;
    for (int u = 0; u < n; ++u)
      if (alive[u] && u != best && m.get(best, u)) nbrs.push_back(u);
    for (size_t i = 0; i < nbrs.size(); ++i)
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        m.set(nbrs[i], nbrs[j]);
        m.set(nbrs[j], nbrs[i]);
      }
    alive[best] = 0;
    removal.push_back(best);
  }
  return {removal.rbegin(), removal.rend()};
}

}  // namespace

TreewidthWitness treewidth_upper(const Graph& g, const std::vector<int>* hint_order) {
  std::vector<int> order = hint_order ? *hint_order : min_fill_order(g);
  int width = fill_in_width(g, order);
  return {TreewidthWitness::Kind::upper, width, analyze_ordering(g, std::move(order))};
}

Graph complete_to_maximal_kdegenerate(const Graph& g, int k) {
  DegeneracyResult dr = degeneracy(g);
  if (dr.value > k) {
    throw InputError("degeneracy " + std::to_string(dr.value) + " exceeds k=" + std::to_string(k));
  }
  int n = g.order();
  BitMatrix m = BitMatrix::adjacency(g);
  std::vector<std::pair<int, int>> edges = g.edges();
  const std::vector<int>& order = dr.ordering.order;
  for (int p = 0; p < n; ++p) {
    int v = order[p];
    int have = 0;
    for (int q = 0; q < p; ++q)
      if (m.get(v, order[q])) ++have;
    int want = std::min(k, p);
    for (int q = 0; q < p && have < want; ++q) {
      int u = order[q];
      if (!m.get(v, u)) {
        m.set(v, u);
        m.set(u, v);
        edges.emplace_back(u, v);
        ++have;
      }
    }
  }
  return Graph(n, edges);
}

KTreeCompletion complete_to_ktree(const Graph& g, int k, const std::vector<int>* hint_order) {
  int n = g.order();
  std::vector<int> order;
  if (hint_order) {
    order = *hint_order;
    if (fill_in_width(g, order) > k) {
      throw InputError("hint ordering has fill-in width above k=" + std::to_string(k));
    }
  } else if (n <= kTreewidthExactLimit) {
    TreewidthWitness tw = treewidth_exact(g);
    if (tw.value > k)
      throw InputError("treewidth " + std::to_string(tw.value) + " exceeds k=" + std::to_string(k));
    order = tw.ordering.order;
  } else {
    TreewidthWitness tw = treewidth_upper(g);
    if (tw.value > k) {
      throw InputError("no width-" + std::to_string(k) +
                       " ordering found (greedy fill-in width " + std::to_string(tw.value) + ")");
    }
    order = tw.ordering.order;
  }

  // Chordal completion of g along the order, as explicit back-neighborhoods.
  BitMatrix fill = BitMatrix::adjacency(g);
  {
    std::vector<char> alive(n, 1);
    for (int p = n - 1; p >= 0; --p) {
      int v = order[p];
      std::vector<int> nbrs;
      for (int u = 0; u < n; ++u)
        if (alive[u] && u != v && fill.get(v, u)) nbrs.push_back(u);
      for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j) {
          fill.set(nbrs[i], nbrs[j]);
          fill.set(nbrs[j], nbrs[i]);
        }
      alive[v] = 0;
    }
  }

  // Grow the k-tree left to right: prefix vertices form cliques; each later
  // vertex attaches to a k-clique extending its fill back-neighborhood.
  BitMatrix kt(n);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[order[p]] = p;
  auto connect = [&](int u, int v) {
    kt.set(u, v);
    kt.set(v, u);
    edges.emplace_back(u, v);
  };
  for (int p = 0; p < n; ++p) {
    int v = order[p];
    if (p <= k) {
      for (int q = 0; q < p; ++q) connect(order[q], v);
      continue;
    }
    std::vector<int> base;
    for (int q = 0; q < p; ++q)
      if (fill.get(v, order[q])) base.push_back(order[q]);
    // extend to a k-clique of the k-tree built so far
    while (static_cast<int>(base.size()) < k) {
      int pick = -1;
      for (int u = 0; u < n && pick == -1; ++u) {
        if (pos[u] >= p) continue;
        bool in_base = std::find(base.begin(), base.end(), u) != base.end();
        if (in_base) continue;
        bool adj_all = true;
        for (int b : base)
          if (!kt.get(u, b)) {
            adj_all = false;
            break;
          }
        if (adj_all) pick = u;
      }
      if (pick == -1) {
        throw InternalError("k-tree completion stalled; offending graph: " + to_dot(g));
      }
      base.push_back(pick);
    }
    for (int b : base) connect(b, v);
  }

  KTreeCompletion out{Graph(n, edges), analyze_ordering(Graph(n, edges), order)};
  for (int p = 0; p < n; ++p) {
    int v = out.ordering.order[p];
    if (out.ordering.back_degree[v] != std::min(k, p) || !out.ordering.back_clique[v]) {
      throw InternalError("k-tree completion postcondition failed at position " +
                          std::to_string(p));
    }
  }
  return out;
}

bool is_ktree(const Graph& g, int k) {
  // peel degree-k simplicial vertices down to a clique
  int n = g.order();
  if (n <= k + 1) {
    return static_cast<long long>(g.size()) == static_cast<long long>(n) * (n - 1) / 2;
  }
  BitMatrix m = BitMatrix::adjacency(g);
  std::vector<int> deg(n);
  std::vector<char> alive(n, 1);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int remaining = n;
  while (remaining > k + 1) {
    int found = -1;
    for (int v = 0; v < n && found == -1; ++v) {
      if (!alive[v] || deg[v] != k) continue;
      std::vector<int> nbrs;
      for (int u = 0; u < n; ++u)
        if (alive[u] && u != v && m.get(v, u)) nbrs.push_back(u);
      bool clique = true;
      for (size_t i = 0; i < nbrs.size() && clique; ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
          if (!m.get(nbrs[i], nbrs[j])) {
            clique = false;
            break;
          }
      if (clique) found = v;
    }
    if (found == -1) return false;
    alive[found] = 0;
    --remaining;
    for (int u = 0; u < n; ++u)
      if (alive[u] && m.get(found, u)) --deg[u];
  }
  for (int u = 0; u < n; ++u)
    if (alive[u] && deg[u] != k) return false;
  return true;
}

std::vector<MainLemmaVertex> main_lemma_candidates(const Graph& g, int k) {
  std::vector<MainLemmaVertex> out;
  for (int v = 0; v < g.order(); ++v) {
    int l = g.degree(v) - k;
    if (l < 1) continue;
    std::vector<int> ks;
    for (int u : g.neighbors(v))
      if (g.degree(u) == k) ks.push_back(u);
    if (static_cast<int>(ks.size()) == l) out.push_back({false, v, l, std::move(ks)});
  }
  return out;
}

MainLemmaVertex find_main_lemma_vertex(const Graph& g, int k) {
  int max_deg = 0;
  for (int v = 0; v < g.order(); ++v) max_deg = std::max(max_deg, g.degree(v));
  if (max_deg <= k) return {true, -1, 0, {}};
  std::vector<MainLemmaVertex> cands = main_lemma_candidates(g, k);
  if (cands.empty()) {
    throw InternalError(
        "no vertex with exactly l = d(v)-k neighbors of degree k; graph: " + to_dot(g));
  }
  return cands.front();
}

}  // namespace fvslab
