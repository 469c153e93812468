#include "fvslab/report.hpp"

#include <chrono>

namespace fvslab {

using nlohmann::json;

json to_json(const EliminationOrdering& eo) {
  return json{{"order", eo.order},
              {"width", eo.width()},
              {"chordal", eo.chordal()}};
}

json to_json(const TreewidthWitness& tw) {
  return json{{"kind", tw.kind == TreewidthWitness::Kind::exact ? "exact" : "upper"},
              {"value", tw.value},
              {"ordering", to_json(tw.ordering)}};
}

json to_json(const FvsCertificate& cert) {
  json j{{"size", cert.size()},
         {"vertices", cert.vertices},
         {"optimal", cert.optimal},
         {"nodes", cert.nodes}};
  switch (cert.status) {
    case SolveStatus::optimal: j["status"] = "optimal"; break;
    case SolveStatus::budget_exceeded: j["status"] = "budget_exceeded"; break;
    case SolveStatus::timeout: j["status"] = "timeout"; break;
  }
  if (!cert.topo_order.empty() || cert.forest_parent.empty())
    j["residual_topo_order"] = cert.topo_order;
  if (!cert.forest_parent.empty()) j["residual_forest_parent"] = cert.forest_parent;
  return j;
}

json to_json(const BadSetReport& rep) {
  return json{{"R", rep.R},
              {"is_bad", rep.is_bad},
              {"is_minimal_bad", rep.is_minimal_bad},
              {"f", rep.f},
              {"f_minus_R", rep.f_minus_r},
              {"f_forced", rep.f_forced},
              {"f_codim", rep.f_codim}};
}

json to_json(const StrictnessReport& rep) {
  return json{{"kind", rep.kind == StrictnessKind::even_degeneracy_undirected
                           ? "even_degeneracy_undirected"
                           : "odd_degeneracy_directed"},
              {"n", rep.n},
              {"f", rep.f},
              {"k", rep.k},
              {"margin", rep.margin},
              {"strict", rep.strict}};
}

namespace {

template <typename G>
json family_json(const FamilyMember<G>& m) {
  json j{{"index", m.index},
         {"n", m.graph.order()},
         {"n_formula", m.n_formula},
         {"f_formula", m.f_formula},
         {"f_claim", m.f_claim == ClaimKind::exact ? "exact" : "lower_bound"},
         {"ratio", m.ratio.str()},
         {"degeneracy", m.degeneracy_value},
         {"degeneracy_witness", to_json(m.degeneracy_witness)},
         {"bad_set", m.bad_set}};
  if (m.f_exact) j["f_exact"] = *m.f_exact;
  if (m.treewidth_witness) j["treewidth_witness"] = to_json(*m.treewidth_witness);
  return j;
}

}  // namespace

json to_json(const FamilyMember<Graph>& m) { return family_json(m); }
json to_json(const FamilyMember<Digraph>& m) { return family_json(m); }

json to_json(const PublishedBlock& b) {
  return json{{"name", b.name}, {"digraph6", b.digraph6}, {"claimed", {{"n", b.n},
              {"f", b.f}, {"deg", b.deg}, {"deg_RL", b.deg_rl}}},
              {"R", b.R}, {"r_prime", b.r_prime}};
}

json analyze_instance(const std::variant<Graph, Digraph>& instance, const std::string& source,
                      const std::string& format, const AnalyzeOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  json j{{"schema", kReportSchema}, {"source", source}, {"format", format}};
  bool directed = std::holds_alternative<Digraph>(instance);
  j["directed"] = directed;
  Graph u = directed ? underlying(std::get<Digraph>(instance)) : std::get<Graph>(instance);
  int n = u.order();
  j["n"] = n;
  j["m"] = directed ? std::get<Digraph>(instance).size() : u.size();

  DegeneracyResult dr = degeneracy(u);
  j["degeneracy"] = {{"value", dr.value}, {"witness", to_json(dr.ordering)}};

  TreewidthWitness tw =
      n <= kTreewidthExactLimit ? treewidth_exact(u) : treewidth_upper(u);
  j["treewidth"] = to_json(tw);

  if (opt.solve && n <= kSolverMaxVertices) {
    FvsCertificate cert = directed ? min_fvs(std::get<Digraph>(instance), opt.solver)
                                   : min_fvs(u, opt.solver);
    j["fvs"] = to_json(cert);

    json checks = json::array();
    auto add_check = [&](const std::string& name, const Rat& bound) {
      long long lhs = static_cast<long long>(cert.size()) * bound.den;
      long long rhs = bound.num * static_cast<long long>(n);
      checks.push_back({{"name", name},
                        {"bound", bound.str()},
                        {"margin", lhs - rhs},
                        {"pass", lhs <= rhs}});
    };
    int k = dr.value;
    if (k >= 1) {
      if (directed)
        add_check("directed_degeneracy_f<=(k-1)/(k+1)n", ratio_directed_degeneracy(k));
      else
        add_check(k % 2 ? "undirected_odd_degeneracy_f<=(k-1)/(k+1)n"
                        : "undirected_even_degeneracy_f<=k/(k+2)n",
                  ratio_undirected_degeneracy(k));
      int t = tw.value;
      if (directed && t >= 1) add_check("directed_treewidth_f<=k/(k+3)n", ratio_directed_treewidth(t));
      if (!directed && t >= 1)
        add_check("undirected_treewidth_f<=(k-1)/(k+1)n", ratio_undirected_treewidth(t));
    }
    j["checks"] = checks;
  }

  auto end = std::chrono::steady_clock::now();
  j["seconds"] = std::chrono::duration<double>(end - start).count();
  return j;
}

}  // namespace fvslab
