#pragma once

#include <nlohmann/json.hpp>

#include "limcone/conrep.hpp"
#include "limcone/matrixlie.hpp"

namespace limcone {

using json = nlohmann::ordered_json;

// Rationals travel as strings ("p" or "p/q") to avoid float loss.
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json weight_to_json(const Weight& w);

json system_to_json(const DirectSystemSpec& spec);
DirectSystemSpec system_from_json(const json& j);

json profinite_to_json(const ProfiniteWeight& mu);
ProfiniteWeight profinite_from_json(const json& j);

json tree_to_json(const TreeSet& tree);
TreeSet tree_from_json(const json& j);

// Measure specs: {"kind":"rec"} | {"kind":"point","path":[...],"tail_child":0}
// | {"kind":"explicit","mass":[[...],[...]]}.
CylinderMeasure measure_from_json(std::shared_ptr<const TreeSet> tree,
                                  const json& j);
json measure_to_json(const CylinderMeasure& mu);

StepSection section_from_json(const json& j);

TreePath path_from_json(const json& j);

json summands_to_json(const std::vector<IsotypicSummand>& summands);
json smooth_verdict_to_json(const SmoothVerdict& v);
json decomposition_to_json(const SmoothDecomposition& d);
json splitting_to_json(const SplittingReport& report);
json comparison_to_json(const TreeComparison& cmp);

json root_system_to_json(const RestrictedRootSystem& sys);

// Per-level matrixlie report: dimensions, root data, type.
json realization_report(const Realization& real, const RootDecomposition& decomp,
                        const EigenSplit& split);
json admissible_to_json(const AdmissibleVerdict& verdict);

}  // namespace limcone
