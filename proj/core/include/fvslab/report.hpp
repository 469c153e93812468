#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "fvslab/bounds.hpp"
#include "fvslab/constructions.hpp"
#include "fvslab/fvs.hpp"
#include "fvslab/orderings.hpp"

namespace fvslab {

inline constexpr int kReportSchema = 1;

nlohmann::json to_json(const EliminationOrdering& eo);
nlohmann::json to_json(const TreewidthWitness& tw);
nlohmann::json to_json(const FvsCertificate& cert);
nlohmann::json to_json(const BadSetReport& rep);
nlohmann::json to_json(const StrictnessReport& rep);
nlohmann::json to_json(const FamilyMember<Graph>& m);
nlohmann::json to_json(const FamilyMember<Digraph>& m);
nlohmann::json to_json(const PublishedBlock& b);

struct AnalyzeOptions {
  bool solve = true;
  SolveOptions solver;
};

// The full instance report: order, size, degeneracy and treewidth with
// witnesses, the exact FVS, the applicable formula bounds and their
// satisfaction, and timing. Everything is recomputed from the instance.
nlohmann::json analyze_instance(const std::variant<Graph, Digraph>& instance,
                                const std::string& source, const std::string& format,
                                const AnalyzeOptions& opt = {});

}  // namespace fvslab
