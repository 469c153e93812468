#include "fvslab/fvs.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace fvslab {

namespace {

using Clock = std::chrono::steady_clock;

struct Limits {
  std::optional<Clock::time_point> stop_at;
  uint64_t node_limit = 0;
  uint64_t nodes = 0;
  bool out_of_time = false;

  explicit Limits(const SolveOptions& opt) {
    if (opt.deadline) stop_at = Clock::now() + *opt.deadline;
    node_limit = opt.node_limit;
  }
  // returns false when the search should stop
  bool tick() {
    ++nodes;
    if (node_limit && nodes > node_limit) out_of_time = true;
    if (stop_at && (nodes & 0x3ff) == 0 && Clock::now() > *stop_at) out_of_time = true;
    return !out_of_time;
  }
};

int bit_count(uint64_t m) { return std::popcount(m); }

// ---------------------------------------------------------------- directed

struct MaskDigraph {
  int n;
  std::vector<uint64_t> out, in;

  explicit MaskDigraph(const Digraph& d) : n(d.order()), out(n, 0), in(n, 0) {
    for (auto [u, v] : d.arcs()) {
      out[u] |= 1ull << v;
      in[v] |= 1ull << u;
    }
  }

  uint64_t reduce(uint64_t alive) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (uint64_t m = alive; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if ((out[v] & alive) == 0 || (in[v] & alive) == 0) {
          alive &= ~(1ull << v);
          changed = true;
        }
      }
    }
    return alive;
  }

  // Shortest directed cycle inside `alive`; empty when acyclic.
  std::vector<int> shortest_cycle(uint64_t alive) const {
    std::vector<int> best;
    int best_len = n + 1;
    std::vector<int> dist(n), par(n), queue;
    for (uint64_t m = alive; m;) {
      int s = std::countr_zero(m);
      m &= m - 1;
      std::fill(dist.begin(), dist.end(), -1);
      queue.clear();
      queue.push_back(s);
      dist[s] = 0;
      par[s] = -1;
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        if (dist[u] + 1 >= best_len) break;
        for (uint64_t o = out[u] & alive; o;) {
          int w = std::countr_zero(o);
          o &= o - 1;
          if (w == s) {
            int len = dist[u] + 1;
            if (len < best_len) {
              best_len = len;
              best.clear();
              for (int x = u; x != -1; x = par[x]) best.push_back(x);
              std::reverse(best.begin(), best.end());
            }
            continue;
          }
          if (dist[w] == -1) {
            dist[w] = dist[u] + 1;
            par[w] = u;
            queue.push_back(w);
          }
        }
      }
      if (best_len == 2) break;  // cannot happen in oriented digraphs, but cheap
    }
    return best;
  }

  int packing_lower_bound(uint64_t alive) const {
    int count = 0;
    uint64_t work = reduce(alive);
    while (work) {
      std::vector<int> cyc = shortest_cycle(work);
      if (cyc.empty()) break;
      for (int v : cyc) work &= ~(1ull << v);
      work = reduce(work);
      ++count;
    }
    return count;
  }
};

struct DirectedSolver {
  const MaskDigraph& g;
  Limits& limits;
  std::optional<int> budget;
  int best_size;
  uint64_t best_set = 0;
  bool found = false;
  std::vector<int> chosen;

  DirectedSolver(const MaskDigraph& g_, Limits& l, const SolveOptions& opt)
      : g(g_), limits(l), budget(opt.budget), best_size(g_.n + 1) {}

  void seed_greedy(uint64_t alive) {
    uint64_t f = 0;
    alive = g.reduce(alive);
    while (alive) {
      std::vector<int> cyc = g.shortest_cycle(alive);
      int pick = cyc[0];
      int pick_deg = -1;
      for (int v : cyc) {
        int deg = bit_count(g.out[v] & alive) + bit_count(g.in[v] & alive);
        if (deg > pick_deg) {
          pick = v;
          pick_deg = deg;
        }
      }
      f |= 1ull << pick;
      alive = g.reduce(alive & ~(1ull << pick));
    }
    best_size = bit_count(f);
    best_set = f;
    found = true;
  }

  void run(uint64_t alive, uint64_t excluded) {
    if (!limits.tick()) return;
    alive = g.reduce(alive);
    if (!alive) {
      if (static_cast<int>(chosen.size()) < best_size) {
        best_size = static_cast<int>(chosen.size());
        best_set = 0;
        for (int v : chosen) best_set |= 1ull << v;
        found = true;
      }
      return;
    }
    int lb = static_cast<int>(chosen.size()) + g.packing_lower_bound(alive);
    if (lb >= best_size) return;
    if (budget && lb > *budget) return;
    std::vector<int> cyc = g.shortest_cycle(alive);
    for (int v : cyc) {
      if (excluded & (1ull << v)) continue;
      chosen.push_back(v);
      run(alive & ~(1ull << v), excluded);
      chosen.pop_back();
      excluded |= 1ull << v;
      if (limits.out_of_time) return;
    }
  }
};

// -------------------------------------------------------------- undirected

struct MaskGraph {
  int n;
  std::vector<uint64_t> adj;

  explicit MaskGraph(const Graph& g) : n(g.order()), adj(n, 0) {
    for (auto [u, v] : g.edges()) {
      adj[u] |= 1ull << v;
      adj[v] |= 1ull << u;
    }
  }

  uint64_t reduce(uint64_t alive) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (uint64_t m = alive; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (bit_count(adj[v] & alive) <= 1) {
          alive &= ~(1ull << v);
          changed = true;
        }
      }
    }
    return alive;
  }

  std::vector<int> shortest_cycle(uint64_t alive) const {
    std::vector<int> best;
    int best_len = n + 1;
    std::vector<int> dist(n), par(n), queue;
    for (uint64_t m = alive; m;) {
      int s = std::countr_zero(m);
      m &= m - 1;
      std::fill(dist.begin(), dist.end(), -1);
      queue.clear();
      queue.push_back(s);
      dist[s] = 0;
      par[s] = -1;
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        if (2 * dist[u] + 1 >= best_len) break;
        for (uint64_t o = adj[u] & alive; o;) {
          int w = std::countr_zero(o);
          o &= o - 1;
          if (w == par[u]) continue;
          if (dist[w] == -1) {
            dist[w] = dist[u] + 1;
            par[w] = u;
            queue.push_back(w);
          } else {
            // close a cycle through u and w; trim the common ancestor tail
            std::vector<int> cu, cw;
            for (int x = u; x != -1; x = par[x]) cu.push_back(x);
            for (int x = w; x != -1; x = par[x]) cw.push_back(x);
            std::reverse(cu.begin(), cu.end());
            std::reverse(cw.begin(), cw.end());
            size_t common = 0;
            while (common + 1 < cu.size() && common + 1 < cw.size() &&
                   cu[common + 1] == cw[common + 1])
              ++common;
            std::vector<int> cyc(cu.begin() + common, cu.end());
            for (size_t i = cw.size(); i-- > common + 1;) cyc.push_back(cw[i]);
            if (static_cast<int>(cyc.size()) < best_len) {
              best_len = static_cast<int>(cyc.size());
              best = cyc;
            }
          }
        }
      }
      if (best_len == 3) break;
    }
    return best;
  }

  int packing_lower_bound(uint64_t alive) const {
    int count = 0;
    uint64_t work = reduce(alive);
    while (work) {
      std::vector<int> cyc = shortest_cycle(work);
      if (cyc.empty()) break;
      for (int v : cyc) work &= ~(1ull << v);
      work = reduce(work);
      ++count;
    }
    return count;
  }
};

struct UndirectedSolver {
  const MaskGraph& g;
  Limits& limits;
  std::optional<int> budget;
  int best_size;
  uint64_t best_set = 0;
  bool found = false;
  std::vector<int> chosen;

  UndirectedSolver(const MaskGraph& g_, Limits& l, const SolveOptions& opt)
      : g(g_), limits(l), budget(opt.budget), best_size(g_.n + 1) {}

  void seed_greedy(uint64_t alive) {
    uint64_t f = 0;
    alive = g.reduce(alive);
    while (alive) {
      std::vector<int> cyc = g.shortest_cycle(alive);
      int pick = cyc[0];
      int pick_deg = -1;
      for (int v : cyc) {
        int deg = bit_count(g.adj[v] & alive);
        if (deg > pick_deg) {
          pick = v;
          pick_deg = deg;
        }
      }
      f |= 1ull << pick;
      alive = g.reduce(alive & ~(1ull << pick));
    }
    best_size = bit_count(f);
    best_set = f;
    found = true;
  }

  void run(uint64_t alive, uint64_t excluded) {
    if (!limits.tick()) return;
    alive = g.reduce(alive);
    if (!alive) {
      if (static_cast<int>(chosen.size()) < best_size) {
        best_size = static_cast<int>(chosen.size());
        best_set = 0;
        for (int v : chosen) best_set |= 1ull << v;
        found = true;
      }
      return;
    }
    int lb = static_cast<int>(chosen.size()) + g.packing_lower_bound(alive);
    if (lb >= best_size) return;
    if (budget && lb > *budget) return;
    std::vector<int> cyc = g.shortest_cycle(alive);
    for (int v : cyc) {
      if (excluded & (1ull << v)) continue;
      chosen.push_back(v);
      run(alive & ~(1ull << v), excluded);
      chosen.pop_back();
      excluded |= 1ull << v;
      if (limits.out_of_time) return;
    }
  }
};

template <typename G>
void check_solver_size(const G& g) {
  if (g.order() > kSolverMaxVertices) {
    throw InputError("exact solver limited to " + std::to_string(kSolverMaxVertices) +
                     " vertices (n=" + std::to_string(g.order()) + ")");
  }
}

std::vector<int> mask_to_vertices(uint64_t m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

template <typename G>
void attach_residual_witness(const G& g, FvsCertificate& cert) {
  std::vector<int> keep;
  std::vector<char> in_f(g.order(), 0);
  for (int v : cert.vertices) in_f[v] = 1;
  for (int v = 0; v < g.order(); ++v)
    if (!in_f[v]) keep.push_back(v);
  auto sub = induced_subgraph(g, keep);
  Acyclicity a = is_acyclic(sub.graph);
  if (!a.acyclic) throw InternalError("solver produced a non-acyclic residual");
  if constexpr (std::is_same_v<G, Digraph>) {
    cert.topo_order.clear();
    for (int v : a.topo_order) cert.topo_order.push_back(sub.old_id[v]);
  } else {
    cert.forest_parent.assign(g.order(), -2);
    for (size_t i = 0; i < sub.old_id.size(); ++i) {
      int p = a.forest_parent[i];
      cert.forest_parent[sub.old_id[i]] = p == -1 ? -1 : sub.old_id[p];
    }
  }
}

}  // namespace

FvsCertificate min_fvs(const Digraph& d, const SolveOptions& opt) {
  check_solver_size(d);
  MaskDigraph mg(d);
  Limits limits(opt);
  DirectedSolver solver(mg, limits, opt);
  uint64_t full = d.order() == 64 ? ~0ull : (1ull << d.order()) - 1;
  solver.seed_greedy(full);
  solver.run(full, 0);

  FvsCertificate cert;
  cert.vertices = mask_to_vertices(solver.best_set);
  cert.nodes = limits.nodes;
  if (limits.out_of_time) {
    cert.status = SolveStatus::timeout;
    cert.optimal = false;
  } else if (opt.budget && solver.best_size > *opt.budget) {
    cert.status = SolveStatus::budget_exceeded;
    cert.optimal = false;
  } else {
    cert.status = SolveStatus::optimal;
    cert.optimal = true;
  }
  attach_residual_witness(d, cert);
  return cert;
}

FvsCertificate min_fvs(const Graph& g, const SolveOptions& opt) {
  check_solver_size(g);
  MaskGraph mg(g);
  Limits limits(opt);
  UndirectedSolver solver(mg, limits, opt);
  uint64_t full = g.order() == 64 ? ~0ull : (1ull << g.order()) - 1;
  solver.seed_greedy(full);
  solver.run(full, 0);

  FvsCertificate cert;
  cert.vertices = mask_to_vertices(solver.best_set);
  cert.nodes = limits.nodes;
  if (limits.out_of_time) {
    cert.status = SolveStatus::timeout;
    cert.optimal = false;
  } else if (opt.budget && solver.best_size > *opt.budget) {
    cert.status = SolveStatus::budget_exceeded;
    cert.optimal = false;
  } else {
    cert.status = SolveStatus::optimal;
    cert.optimal = true;
  }
  attach_residual_witness(g, cert);
  return cert;
}

std::vector<int> max_acyclic_set(const Digraph& d, const SolveOptions& opt) {
  FvsCertificate cert = min_fvs(d, opt);
  std::vector<char> in_f(d.order(), 0);
  for (int v : cert.vertices) in_f[v] = 1;
  std::vector<int> out;
  for (int v = 0; v < d.order(); ++v)
    if (!in_f[v]) out.push_back(v);
  return out;
}

int max_transitive_subset(const Digraph& t) {
  int n = t.order();
  if (n > 20) throw InputError("max_transitive_subset limited to 20 vertices");
  std::vector<uint32_t> out_row(n, 0);
  for (auto [u, v] : t.arcs()) out_row[u] |= 1u << v;
  auto transitive = [&](uint32_t s) {
    // a sub-tournament is transitive iff its internal out-degrees are distinct
    uint32_t seen = 0;
    for (uint32_t m = s; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      int d = std::popcount(out_row[v] & s);
      if (seen & (1u << d)) return false;
      seen |= 1u << d;
    }
    return true;
  };
  for (int size = n; size >= 1; --size) {
    // iterate size-subsets
    uint32_t s = (1u << size) - 1;
    uint32_t limit = 1u << n;
    while (s < limit) {
      if (transitive(s)) return size;
      uint32_t c = s & -s, r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
      if (c == 0) break;
    }
  }
  return 0;
}

namespace {

// Is the sub-tournament on `s` acyclic? (out-degrees within s all distinct)
bool subset_transitive(const std::vector<uint32_t>& out_row, uint32_t s) {
  uint32_t seen = 0;
  for (uint32_t m = s; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    int d = std::popcount(out_row[v] & s);
    if (seen & (1u << d)) return false;
    seen |= 1u << d;
  }
  return true;
}

bool has_transitive_of_size(const std::vector<uint32_t>& out_row, int n, int size) {
  if (size <= 1) return n >= size;
  uint32_t s = (1u << size) - 1;
  uint32_t limit = 1u << n;
  while (s < limit) {
    if (subset_transitive(out_row, s)) return true;
    uint32_t c = s & -s, r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return false;
}

int eval_max_transitive(const std::vector<uint32_t>& out_row, int n, int upper_start) {
  for (int size = std::min(upper_start, n); size >= 1; --size)
    if (has_transitive_of_size(out_row, n, size)) return size;
  return 0;
}

Digraph tournament_from_rows(const std::vector<uint32_t>& out_row, int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && ((out_row[u] >> v) & 1)) arcs.emplace_back(u, v);
  return Digraph(n, arcs);
}

}  // namespace

TournamentA tournament_a(int n, uint64_t seed, uint64_t iterations) {
  if (n < 1) throw InputError("tournament order must be positive");
  if (n == 1) return {1, 1, true, Digraph(1)};

  if (n <= 7) {
    // Exhaustive up to relabeling: fix vertex 0 to have maximum out-degree d
    // with out-neighborhood {1..d}; enumerate the rest and filter.
    int best = n;
    std::vector<uint32_t> best_rows;
    std::vector<uint32_t> rows(n);
    int pairs = (n - 1) * (n - 2) / 2;
    for (int d = (n - 1 + 1) / 2; d <= n - 1; ++d) {
      for (uint64_t bits = 0; bits < (1ull << pairs); ++bits) {
        std::fill(rows.begin(), rows.end(), 0u);
        for (int v = 1; v <= d; ++v) rows[0] |= 1u << v;
        for (int v = d + 1; v < n; ++v) rows[v] |= 1u << 0;
        int idx = 0;
        for (int u = 1; u < n; ++u)
          for (int v = u + 1; v < n; ++v, ++idx) {
            if ((bits >> idx) & 1)
              rows[u] |= 1u << v;
            else
              rows[v] |= 1u << u;
          }
        bool max_ok = true;
        for (int v = 1; v < n && max_ok; ++v)
          if (std::popcount(rows[v]) > d) max_ok = false;
        if (!max_ok) continue;
        if (has_transitive_of_size(rows, n, best)) continue;
        int m = eval_max_transitive(rows, n, best - 1);
        if (m < best) {
          best = m;
          best_rows = rows;
        }
      }
    }
    if (best_rows.empty()) {
      // every tournament reaches `best`; pick the transitive one as witness
      std::fill(rows.begin(), rows.end(), 0u);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) rows[u] |= 1u << v;
      best_rows = rows;
    }
    return {n, best, true, tournament_from_rows(best_rows, n)};
  }

  if (n > 16) throw InputError("tournament_a stochastic search limited to n <= 16");

  // Seeded hill climbing over arc flips, minimizing the largest transitive
  // subset. Upper bound on a(n) only.
  std::mt19937_64 rng(seed);
  std::vector<uint32_t> rows(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (rng() & 1)
        rows[u] |= 1u << v;
      else
        rows[v] |= 1u << u;
    }
  int cur = eval_max_transitive(rows, n, n);
  std::vector<uint32_t> best_rows = rows;
  int best = cur;
  for (uint64_t it = 0; it < iterations; ++it) {
    int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % n);
    if (u == v) continue;
    if (!((rows[u] >> v) & 1)) std::swap(u, v);
    rows[u] &= ~(1u << v);
    rows[v] |= 1u << u;
    int m = eval_max_transitive(rows, n, best + 1);
    if (m <= cur) {
      cur = m;
      if (m < best) {
        best = m;
        best_rows = rows;
      }
    } else {
      rows[v] &= ~(1u << u);  // revert
      rows[u] |= 1u << v;
    }
  }
  return {n, best, false, tournament_from_rows(best_rows, n)};
}

namespace {

template <typename G>
BadSetReport bad_set_report_impl(const G& g, std::span<const int> R, const SolveOptions& opt) {
  for (int v : R) {
    if (v < 0 || v >= g.order()) throw InputError("R contains out-of-range id");
  }
  BadSetReport rep;
  rep.R.assign(R.begin(), R.end());
  std::sort(rep.R.begin(), rep.R.end());
  if (std::adjacent_find(rep.R.begin(), rep.R.end()) != rep.R.end()) {
    throw InputError("R contains duplicates");
  }
  rep.f = min_fvs(g, opt).size();
  rep.f_minus_r = min_fvs(remove_vertices(g, rep.R).graph, opt).size();
  rep.f_forced = static_cast<int>(rep.R.size()) + rep.f_minus_r;
  rep.is_bad = rep.f_forced > rep.f;
  rep.is_minimal_bad = rep.is_bad;
  for (size_t i = 0; i < rep.R.size(); ++i) {
    std::vector<int> sub;
    for (size_t j = 0; j < rep.R.size(); ++j)
      if (j != i) sub.push_back(rep.R[j]);
    int fi = min_fvs(remove_vertices(g, sub).graph, opt).size();
    rep.f_codim.push_back(fi);
    if (static_cast<int>(sub.size()) + fi != rep.f) rep.is_minimal_bad = false;
  }
  return rep;
}

template <typename G>
std::vector<int> find_minimum_bad_set_impl(const G& g, const SolveOptions& opt) {
  int n = g.order();
  int f = min_fvs(g, opt).size();
  for (int size = 1; size <= n; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      int fr = min_fvs(remove_vertices(g, idx).graph, opt).size();
      if (size + fr > f) return idx;
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw InternalError("no bad set found; graph: " + to_dot(g));
}

}  // namespace

BadSetReport bad_set_report(const Digraph& d, std::span<const int> R, const SolveOptions& opt) {
  return bad_set_report_impl(d, R, opt);
}

BadSetReport bad_set_report(const Graph& g, std::span<const int> R, const SolveOptions& opt) {
  return bad_set_report_impl(g, R, opt);
}

std::vector<int> find_minimum_bad_set(const Digraph& d, const SolveOptions& opt) {
  return find_minimum_bad_set_impl(d, opt);
}

std::vector<int> find_minimum_bad_set(const Graph& g, const SolveOptions& opt) {
  return find_minimum_bad_set_impl(g, opt);
}

}  // namespace fvslab
