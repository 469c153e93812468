#include "fvslab/constructions.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

#include "fvslab/bounds.hpp"
#include "fvslab/codec.hpp"

namespace fvslab {

namespace {

template <typename G>
void certify_block_impl(Block<G>& b, const SolveOptions& opt) {
  if (!b.f) b.f = min_fvs(b.graph, opt).size();
  if (!b.r_bad || !b.r_minimal) {
    BadSetReport rep = bad_set_report(b.graph, b.R, opt);
    b.r_bad = rep.is_bad;
    b.r_minimal = rep.is_minimal_bad;
  }
  if (!b.deg_rl) b.deg_rl = rl_degeneracy(b.graph, b.R, b.r_prime).value;
}

template <typename G>
std::vector<std::pair<int, int>> links_of(const G& g) {
  if constexpr (std::is_same_v<G, Graph>)
    return g.edges();
  else
    return g.arcs();
}

template <typename G>
Glued<G> glue_substitution_impl(const G& d0, const std::vector<GluePart<G>>& parts) {
  if (static_cast<int>(parts.size()) != d0.order()) {
    throw InputError("need exactly one part per vertex of the pattern graph");
  }
  Glued<G> out;
  int n = 0;
  for (const auto& p : parts) {
    if (p.R.empty()) throw InputError("every part needs a nonempty R");
    for (int v : p.R)
      if (v < 0 || v >= p.graph.order()) throw InputError("part R contains out-of-range id");
    out.part_offset.push_back(n);
    n += p.graph.order();
  }
  std::vector<std::pair<int, int>> links;
  for (size_t i = 0; i < parts.size(); ++i) {
    for (auto [u, v] : links_of(parts[i].graph))
      links.emplace_back(u + out.part_offset[i], v + out.part_offset[i]);
  }
  for (auto [i, j] : links_of(d0)) {
    for (int u : parts[i].R)
      for (int v : parts[j].R)
        links.emplace_back(u + out.part_offset[i], v + out.part_offset[j]);
  }
  out.graph = G(n, links);  // an antiparallel pair here means d0 was not oriented
  return out;
}

template <typename G>
FamilyMember<G> iterate_block_impl(const Block<G>& block, int index) {
  const G& d = block.graph;
  int n = d.order();
  if (index < 0) throw InputError("family index must be nonnegative");
  if (block.R.empty()) throw InputError("block needs a nonempty R");
  if (block.r_prime < 0 || block.r_prime >= n) throw InputError("r' out of range");
  for (int v : block.R) {
    if (v < 0 || v >= n) throw InputError("R contains out-of-range id");
    if (v == block.r_prime) throw InputError("r' must not lie in R");
  }

  int f_block = block.f ? *block.f : min_fvs(d).size();

  // wiring of r' and the copy with r' deleted
  auto copy_sub = remove_vertices(d, std::vector<int>{block.r_prime});
  std::vector<std::pair<int, int>> copy_links;
  std::vector<std::pair<int, bool>> wiring;  // (copy-local id, arc points into copy)
  for (auto [u, v] : links_of(d)) {
    if (u == block.r_prime)
      wiring.emplace_back(copy_sub.new_id[v], true);
    else if (v == block.r_prime)
      wiring.emplace_back(copy_sub.new_id[u], false);
    else
      copy_links.emplace_back(copy_sub.new_id[u], copy_sub.new_id[v]);
  }
  std::vector<int> copy_r;
  for (int v : block.R) copy_r.push_back(copy_sub.new_id[v]);

  FamilyMember<G> member;
  member.index = index;
  member.copy_offset.push_back(0);
  std::vector<std::pair<int, int>> links = links_of(d);
  std::vector<int> cur_r = block.R;
  int cur_n = n;
  for (int step = 1; step <= index; ++step) {
    int offset = cur_n;
    member.copy_offset.push_back(offset);
    for (auto [u, v] : copy_links) links.emplace_back(u + offset, v + offset);
    for (int r : cur_r) {
      for (auto [v, into_copy] : wiring) {
        if (into_copy)
          links.emplace_back(r, v + offset);
        else
          links.emplace_back(v + offset, r);
      }
    }
    cur_r.clear();
    for (int v : copy_r) cur_r.push_back(v + offset);
    cur_n += n - 1;
  }
  member.graph = G(cur_n, links);
  member.bad_set = cur_r;
  member.n_formula = static_cast<long long>(n) + static_cast<long long>(index) * (n - 1);
  member.f_formula = static_cast<long long>(index + 1) * f_block;
  member.f_claim =
      block.r_minimal && *block.r_minimal ? ClaimKind::exact : ClaimKind::lower_bound;
  DegeneracyResult dr = degeneracy(member.graph);
  member.degeneracy_value = dr.value;
  member.degeneracy_witness = std::move(dr.ordering);
  member.ratio = Rat(member.f_formula, member.n_formula);
  if (member.graph.order() != member.n_formula) {
    throw InternalError("iterate_block order mismatch with the n formula");
  }
  return member;
}

}  // namespace

void certify_block(Block<Graph>& b, const SolveOptions& opt) { certify_block_impl(b, opt); }
void certify_block(Block<Digraph>& b, const SolveOptions& opt) { certify_block_impl(b, opt); }

Glued<Graph> glue_substitution(const Graph& d0, const std::vector<GluePart<Graph>>& parts) {
  return glue_substitution_impl(d0, parts);
}

Glued<Digraph> glue_substitution(const Digraph& d0, const std::vector<GluePart<Digraph>>& parts) {
  return glue_substitution_impl(d0, parts);
}

FamilyMember<Graph> iterate_block(const Block<Graph>& block, int i) {
  return iterate_block_impl(block, i);
}

FamilyMember<Digraph> iterate_block(const Block<Digraph>& block, int i) {
  return iterate_block_impl(block, i);
}

FamilyMember<Graph> even_deg_block(int k) {
  if (k < 2 || k % 2 != 0) throw InputError("k must be even and at least 2");
  int ell = k / 2;
  int base = ell * (k + 1);  // the K_{ell+1} lives above the big cliques
  int n = base + ell + 1;
  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < ell; ++c) {
    for (int a = 0; a <= k; ++a)
      for (int b = a + 1; b <= k; ++b) edges.emplace_back(c * (k + 1) + a, c * (k + 1) + b);
  }
  for (int a = 0; a <= ell; ++a)
    for (int b = a + 1; b <= ell; ++b) edges.emplace_back(base + a, base + b);
  // grey: the first k vertices of clique c attach to small-clique vertex c
  for (int c = 0; c < ell; ++c)
    for (int a = 0; a < k; ++a) edges.emplace_back(c * (k + 1) + a, base + c);
  // blue: the last vertex of clique c attaches to small-clique vertices c+1..ell
  for (int c = 0; c < ell; ++c)
    for (int t = c + 1; t <= ell; ++t) edges.emplace_back(c * (k + 1) + k, base + t);

  FamilyMember<Graph> member;
  member.index = 0;
  member.graph = Graph(n, edges);
  member.n_formula = static_cast<long long>(k + 2) * k / 2 + 1;
  member.f_formula = static_cast<long long>(k) * k / 2;
  member.f_claim = ClaimKind::exact;
  DegeneracyResult dr = degeneracy(member.graph);
  member.degeneracy_value = dr.value;
  member.degeneracy_witness = std::move(dr.ordering);
  member.ratio = Rat(member.f_formula, member.n_formula);
  if (member.graph.order() != member.n_formula) {
    throw InternalError("even_deg_block order mismatch with the n formula");
  }
  return member;
}

namespace {

Block<Graph> lbdg_base_block(int k) {
  // K_{k+1} on 0..k and K_{k/2+2} on k+1..(3k+4)/2; vertices 0..k/2 attach
  // to k+1, vertices (k+2)/2..k attach to k+2.
  int n = (3 * k + 6) / 2;
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b) edges.emplace_back(a, b);
  for (int a = k + 1; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  for (int a = 0; a <= k / 2; ++a) edges.emplace_back(a, k + 1);
  for (int a = k / 2 + 1; a <= k; ++a) edges.emplace_back(a, k + 2);

  Block<Graph> block;
  block.graph = Graph(n, edges);
  for (int v = k + 3; v < n; ++v) block.R.push_back(v);
  block.r_prime = k + 1;
  block.f = (3 * k - 2) / 2;
  block.r_bad = true;
  block.r_minimal = true;
  return block;
}

}  // namespace

FamilyMember<Graph> lbdg_family(int k, int i) {
  if (k < 2 || k % 2 != 0) throw InputError("k must be even and at least 2");
  if (i < 0) throw InputError("family index must be nonnegative");
  FamilyMember<Graph> member = iterate_block(lbdg_base_block(k), i);
  member.n_formula = (3LL * k + 6) / 2 + static_cast<long long>(i) * (3 * k + 4) / 2;
  member.f_formula = static_cast<long long>(i + 1) * (3 * k - 2) / 2;
  member.f_claim = ClaimKind::exact;
  member.ratio = Rat(member.f_formula, member.n_formula);
  return member;
}

std::pair<Digraph, std::vector<int>> addedge_gadget(const Digraph& d, std::span<const int> R,
                                                    const SolveOptions& opt) {
  BadSetReport rep = bad_set_report(d, R, opt);
  if (!rep.is_minimal_bad) {
    throw InputError("addedge_gadget needs an inclusion-minimal bad set");
  }
  int n = d.order();
  std::vector<std::pair<int, int>> arcs = d.arcs();
  int r1 = n, r2 = n + 1;
  arcs.emplace_back(r1, r2);
  for (int v : R) {
    arcs.emplace_back(v, r1);
    arcs.emplace_back(r2, v);
  }
  return {Digraph(n + 2, arcs), {r1, r2}};
}

namespace {

// addedge without the solver check, for internal recursion where the bad set
// comes from the gluing structure rather than from certification.
Digraph addedge_raw(const Digraph& d, std::span<const int> R) {
  int n = d.order();
  std::vector<std::pair<int, int>> arcs = d.arcs();
  arcs.emplace_back(n, n + 1);
  for (int v : R) {
    arcs.emplace_back(v, n);
    arcs.emplace_back(n + 1, v);
  }
  return Digraph(n + 2, arcs);
}

bool is_tournament(const Digraph& d) {
  long long n = d.order();
  return d.size() == n * (n - 1) / 2;
}

}  // namespace

FamilyMember<Digraph> lbtw_family(int k, int i, const Digraph& tournament) {
  if (k < 2) throw InputError("k must be at least 2");
  if (tournament.order() != k) throw InputError("need a tournament on exactly k vertices");
  if (!is_tournament(tournament)) throw InputError("input digraph is not a tournament");
  if (i < 0) throw InputError("family index must be nonnegative");

  int f_t = min_fvs(tournament).size();
  std::vector<int> r_d = find_minimum_bad_set(tournament);
  auto [dprime, r_new] = addedge_gadget(tournament, r_d);

  std::vector<char> in_nr(dprime.order(), 0);
  for (int v : r_new) in_nr[v] = 1;
  for (int v : r_d) in_nr[v] = 1;
  int r_prime = -1;
  for (int v = 0; v < dprime.order() && r_prime == -1; ++v)
    if (!in_nr[v]) r_prime = v;
  if (r_prime == -1) throw InternalError("no vertex outside N[R] in the addedge gadget");

  Block<Digraph> block;
  block.graph = dprime;
  block.R = r_new;
  block.r_prime = r_prime;
  block.f = f_t + 1;
  block.r_bad = true;
  block.r_minimal = true;

  FamilyMember<Digraph> member = iterate_block(block, i);
  member.f_formula = static_cast<long long>(i + 1) * (k - 2 * floor_log2(k));
  member.f_claim = ClaimKind::lower_bound;
  member.ratio = Rat(member.f_formula, member.n_formula);

  // N[S]-last chordal ordering: peel each copy (r1, r2, then its tournament
  // remainder), newest copy first, ending with the base block.
  std::vector<int> removal;
  for (int copy = i; copy >= 1; --copy) {
    int off = member.copy_offset[copy];
    auto composed = [&](int old_id) {
      // copy holds dprime minus r_prime, reindexed densely
      return off + (old_id < r_prime ? old_id : old_id - 1);
    };
    removal.push_back(composed(k));      // r1
    removal.push_back(composed(k + 1));  // r2
    for (int v = 0; v < k; ++v)
      if (v != r_prime) removal.push_back(composed(v));
  }
  removal.push_back(k);      // r1 of the base copy
  removal.push_back(k + 1);  // r2
  for (int v = 0; v < k; ++v) removal.push_back(v);
  std::vector<int> order(removal.rbegin(), removal.rend());
  TreewidthWitness tw = treewidth_upper(underlying(member.graph), &order);
  if (tw.value > k) {
    throw InternalError("lbtw witness ordering exceeded width k; got " +
                        std::to_string(tw.value));
  }
  member.treewidth_witness = std::move(tw);
  return member;
}

FamilyMember<Digraph> lbtw2_family(int k, int l, int m, const Digraph& d, const Digraph& d0,
                                   int i) {
  if (m < 1) throw InputError("m must be at least 1");
  if (l < 0) throw InputError("l must be nonnegative");
  if (2 * m + l != k + 1) throw InputError("2m+l must equal k+1");
  if (d.order() != k + 1) throw InputError("need a tournament on k+1 vertices");
  if (d0.order() != l + m) throw InputError("the pattern tournament must have l+m vertices");
  if (!is_tournament(d) || !is_tournament(d0)) throw InputError("inputs must be tournaments");
  if (i < 1) throw InputError("family index starts at 1");

  int f_d = min_fvs(d).size();
  int f_d0 = min_fvs(d0).size();
  std::vector<int> r_d = find_minimum_bad_set(d);

  // Bad set of the pattern: prefer covering the single-vertex parts so the
  // induced bad set of the composition stays small.
  std::vector<int> r0 = find_minimum_bad_set(d0);
  {
    int want = static_cast<int>(r0.size());
    std::vector<int> best = r0;
    auto cost = [&](const std::vector<int>& s) {
      int c = 0;
      for (int v : s) c += v < m ? 2 : 1;
      return c;
    };
    std::vector<int> idx(want);
    for (int j = 0; j < want; ++j) idx[j] = j;
    while (true) {
      if (cost(idx) < cost(best)) {
        BadSetReport rep = bad_set_report(d0, idx);
        if (rep.is_minimal_bad) best = idx;
      }
      int j = want - 1;
      while (j >= 0 && idx[j] == d0.order() - want + j) --j;
      if (j < 0) break;
      ++idx[j];
      for (int t = j + 1; t < want; ++t) idx[t] = idx[t - 1] + 1;
    }
    r0 = best;
  }

  Digraph cur;
  std::vector<int> cur_r;
  long long n_formula = 0, f_formula = 0;
  for (int step = 1; step <= i; ++step) {
    std::vector<GluePart<Digraph>> parts;
    Digraph piece;
    std::vector<int> piece_r;
    if (step == 1) {
      auto [g, r] = addedge_gadget(d, r_d);
      piece = std::move(g);
      piece_r = std::move(r);
      n_formula = k + 1;
      f_formula = f_d;
    } else {
      piece = addedge_raw(cur, cur_r);
      piece_r = {cur.order(), cur.order() + 1};
    }
    for (int j = 0; j < m; ++j) parts.push_back({piece, piece_r});
    for (int j = 0; j < l; ++j) parts.push_back({Digraph(1), {0}});
    Glued<Digraph> glued = glue_substitution(d0, parts);
    cur = std::move(glued.graph);
    cur_r.clear();
    for (int v : r0) {
      for (int r : parts[v].R) cur_r.push_back(glued.part_offset[v] + r);
    }
    std::sort(cur_r.begin(), cur_r.end());
    n_formula = static_cast<long long>(m) * (n_formula + 2) + l;
    f_formula = static_cast<long long>(m) * (f_formula + 1) + f_d0;
  }

  FamilyMember<Digraph> member;
  member.index = i;
  member.graph = std::move(cur);
  member.bad_set = cur_r;
  member.n_formula = n_formula;
  member.f_formula = f_formula;
  member.f_claim = ClaimKind::lower_bound;
  DegeneracyResult dr = degeneracy(member.graph);
  member.degeneracy_value = dr.value;
  member.degeneracy_witness = std::move(dr.ordering);
  member.ratio = Rat(f_formula, n_formula);
  if (member.graph.order() != n_formula) {
    throw InternalError("lbtw2 order mismatch with the n formula");
  }
  TreewidthWitness tw = treewidth_upper(underlying(member.graph));
  if (tw.value > k && member.graph.order() <= kTreewidthExactLimit) {
    tw = treewidth_exact(underlying(member.graph));
  }
  if (tw.value > k) {
    throw InternalError("no width-k witness found for the lbtw2 member (got " +
                        std::to_string(tw.value) + ")");
  }
  member.treewidth_witness = std::move(tw);
  return member;
}

const std::vector<PublishedBlock>& builtin_blocks() {
  static const std::vector<PublishedBlock> blocks = [] {
    std::vector<PublishedBlock> out = {
        {"fig5a", "IWWc?gbBAGET?W_@`O", 10, 5, 4, 4, {8, 9}, 2, {0, 1}, {}},
        {"fig5b", "GDgJDW]@OI?o", 8, 4, 4, 5, {0, 1, 6}, 7, {0, 1, 6}, {}},
        {"fig5c", "K]OL@DhAtH[ccOGGMtCw`B?_Q", 12, 7, 6, 6, {1, 6, 8}, 10, {1, 6, 8}, {}},
        {"fig5d", "IQ_lhcpGUiM[OWy@\\?", 10, 6, 7, 8, {7, 8, 9}, 0, {6, 7, 8}, {}},
        {"fig5e", "JTc\\c\\_\\g\\g\\G\\G^GRGZG?", 11, 7, 9, 11, {0, 1, 4, 8}, 2, {0, 1, 4, 8}, {}},
    };
    for (PublishedBlock& b : out) b.graph = decode_digraph6(b.digraph6);
    return out;
  }();
  return blocks;
}

BlockSearchResult search_block(int n, int max_rldeg, uint64_t seed, uint64_t iterations) {
  if (n < 1 || n > kSolverMaxVertices) throw InputError("search order out of solver range");
  std::mt19937_64 rng(seed);

  struct State {
    std::vector<int8_t> pair;  // 0 none, 1 lo->hi, 2 hi->lo, indexed by pair
    std::vector<char> in_r;
    int r_prime = 0;
  };
  int npairs = n * (n - 1) / 2;
  auto to_digraph = [&](const State& s) {
    std::vector<std::pair<int, int>> arcs;
    int idx = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++idx) {
        if (s.pair[idx] == 1) arcs.emplace_back(u, v);
        if (s.pair[idx] == 2) arcs.emplace_back(v, u);
      }
    return Digraph(n, arcs);
  };

  // cutoff: candidates whose ratio cannot be accepted skip the (expensive)
  // badness certification entirely
  auto evaluate = [&](const State& s,
                      const Rat* cutoff) -> std::optional<std::pair<Rat, Block<Digraph>>> {
    std::vector<int> r;
    for (int v = 0; v < n; ++v)
      if (s.in_r[v]) r.push_back(v);
    if (r.empty() || s.in_r[s.r_prime]) return std::nullopt;
    Digraph d = to_digraph(s);
    RlDegeneracyResult rl = rl_degeneracy(d, r, s.r_prime);
    if (rl.value > max_rldeg) return std::nullopt;
    FvsCertificate cert = min_fvs(d);
    if (cert.size() < 1) return std::nullopt;
    Rat score(cert.size(), n - 1);
    if (cutoff && score < *cutoff) return std::nullopt;
    BadSetReport rep = bad_set_report(d, r);
    if (!rep.is_bad) return std::nullopt;
    Block<Digraph> b;
    b.graph = std::move(d);
    b.R = r;
    b.r_prime = s.r_prime;
    b.f = cert.size();
    b.r_bad = true;
    b.r_minimal = rep.is_minimal_bad;
    b.deg_rl = rl.value;
    return std::make_pair(score, std::move(b));
  };

  auto randomize = [&](State& s) {
    s.pair.assign(npairs, 0);
    s.in_r.assign(n, 0);
    if (n >= 2) {
      s.in_r[0] = s.in_r[1] = 1;
      s.r_prime = n - 1;
    } else {
      s.in_r[0] = 1;
      s.r_prime = 0;
    }
    for (int idx = 0; idx < npairs; ++idx) s.pair[idx] = static_cast<int8_t>(rng() % 3);
    if (s.in_r[s.r_prime]) s.in_r[s.r_prime] = 0;
  };

  State cur;
  randomize(cur);

  BlockSearchResult best;
  best.ratio = Rat(0);
  bool cur_valid = false;
  Rat cur_score(0);
  if (auto ev = evaluate(cur, nullptr)) {
    cur_valid = true;
    cur_score = ev->first;
    best.found = true;
    best.block = std::move(ev->second);
    best.ratio = ev->first;
  }

  const uint64_t restart_after = 4000;  // plateau length before reseeding
  uint64_t since_improvement = 0;
  for (uint64_t it = 0; it < iterations; ++it) {
    ++best.iterations;
    if (++since_improvement > restart_after) {
      randomize(cur);
      cur_valid = false;
      cur_score = Rat(0);
      since_improvement = 0;
    }
    State next = cur;
    switch (rng() % 6) {
      case 0:
      case 1: {
        int idx = static_cast<int>(rng() % npairs);
        next.pair[idx] = static_cast<int8_t>((next.pair[idx] + 1 + rng() % 2) % 3);
        break;
      }
      case 2:
      case 3: {  // double move for larger steps
        for (int rep = 0; rep < 2; ++rep) {
          int idx = static_cast<int>(rng() % npairs);
          next.pair[idx] = static_cast<int8_t>((next.pair[idx] + 1 + rng() % 2) % 3);
        }
        break;
      }
      case 4: {
        int v = static_cast<int>(rng() % n);
        if (v == next.r_prime) break;
        next.in_r[v] ^= 1;
        break;
      }
      default: {
        int v = static_cast<int>(rng() % n);
        if (next.in_r[v]) break;
        next.r_prime = v;
        break;
      }
    }
    auto ev = evaluate(next, cur_valid ? &cur_score : nullptr);
    if (ev) {
      cur = std::move(next);
      bool improved_cur = !cur_valid || cur_score < ev->first;
      cur_valid = true;
      cur_score = ev->first;
      if (!best.found || best.ratio < ev->first) {
        best.found = true;
        best.ratio = ev->first;
        best.block = std::move(ev->second);
        since_improvement = 0;
      } else if (improved_cur) {
        since_improvement = 0;
      }
    } else if (!cur_valid) {
      cur = std::move(next);  // random-walk until a feasible block appears
    }
  }
  return best;
}

namespace {

using nlohmann::json;

ConstructionOutput build_spec(const json& spec, const SolveOptions& opt);

std::vector<int> int_list(const json& j) {
  std::vector<int> out;
  for (const auto& x : j) out.push_back(x.get<int>());
  return out;
}

ConstructionOutput build_spec(const json& spec, const SolveOptions& opt) {
  if (!spec.is_object() || !spec.contains("op")) {
    throw InputError("construction spec nodes need an \"op\" field");
  }
  std::string op = spec["op"].get<std::string>();
  if (op == "digraph6") return {decode_digraph6(spec.at("s").get<std::string>()), "digraph6", {}};
  if (op == "graph6") return {decode_graph6(spec.at("s").get<std::string>()), "graph6", {}};
  if (op == "vertex") {
    bool directed = spec.value("directed", true);
    if (directed) return {Digraph(1), "vertex", {}};
    return {Graph(1), "vertex", {}};
  }
  if (op == "triangle") {
    return {Digraph(3, {{0, 1}, {1, 2}, {2, 0}}), "directed triangle", {}};
  }
  if (op == "addedge") {
    ConstructionOutput inner = build_spec(spec.at("inner"), opt);
    if (!std::holds_alternative<Digraph>(inner.graph)) {
      throw InputError("addedge applies to digraphs");
    }
    auto [g, r] = addedge_gadget(std::get<Digraph>(inner.graph), int_list(spec.at("R")), opt);
    (void)r;
    return {std::move(g), "addedge(" + inner.description + ")", {}};
  }
  if (op == "gen2") {
    ConstructionOutput d0 = build_spec(spec.at("d0"), opt);
    bool directed = std::holds_alternative<Digraph>(d0.graph);
    if (directed) {
      std::vector<GluePart<Digraph>> parts;
      for (const auto& pj : spec.at("parts")) {
        ConstructionOutput part = build_spec(pj.at("spec"), opt);
        if (!std::holds_alternative<Digraph>(part.graph))
          throw InputError("mixed directedness in gen2 parts");
        parts.push_back({std::get<Digraph>(part.graph), int_list(pj.at("R"))});
      }
      return {glue_substitution(std::get<Digraph>(d0.graph), parts).graph, "gen2", {}};
    }
    std::vector<GluePart<Graph>> parts;
    for (const auto& pj : spec.at("parts")) {
      ConstructionOutput part = build_spec(pj.at("spec"), opt);
      if (!std::holds_alternative<Graph>(part.graph))
        throw InputError("mixed directedness in gen2 parts");
      parts.push_back({std::get<Graph>(part.graph), int_list(pj.at("R"))});
    }
    return {glue_substitution(std::get<Graph>(d0.graph), parts).graph, "gen2", {}};
  }
  if (op == "gen") {
    const json& bj = spec.at("block");
    ConstructionOutput inner = build_spec(bj.at("spec"), opt);
    int index = spec.at("i").get<int>();
    if (std::holds_alternative<Digraph>(inner.graph)) {
      Block<Digraph> b;
      b.graph = std::get<Digraph>(inner.graph);
      b.R = int_list(bj.at("R"));
      b.r_prime = bj.at("r_prime").get<int>();
      return {iterate_block(b, index).graph, "gen", {}};
    }
    Block<Graph> b;
    b.graph = std::get<Graph>(inner.graph);
    b.R = int_list(bj.at("R"));
    b.r_prime = bj.at("r_prime").get<int>();
    return {iterate_block(b, index).graph, "gen", {}};
  }
  throw InputError("unknown construction op: " + op);
}

}  // namespace

ConstructionOutput run_construction_spec(const std::string& json_text, bool verify,
                                         const SolveOptions& opt) {
  json spec = json::parse(json_text);
  ConstructionOutput out = build_spec(spec, opt);
  if (verify) {
    if (std::holds_alternative<Digraph>(out.graph))
      out.f_exact = min_fvs(std::get<Digraph>(out.graph), opt).size();
    else
      out.f_exact = min_fvs(std::get<Graph>(out.graph), opt).size();
  }
  return out;
}

}  // namespace fvslab
