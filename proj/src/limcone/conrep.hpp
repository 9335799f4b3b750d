#pragma once

#include <memory>
#include <string>
#include <vector>

#include "limcone/measure.hpp"

namespace limcone {

// Model of a unitary conical representation: highest-weight support tree
// plus disintegration measure.  Hilbert-space vectors are never
// materialized; every report below is decided by exactly this data.
struct ConicalRepModel {
  std::shared_ptr<const TreeSet> tree;
  CylinderMeasure measure;
};

ConicalRepModel make_model(std::shared_ptr<const TreeSet> tree,
                           CylinderMeasure measure);

struct IsotypicSummand {
  Weight weight;
  Rational mass;  // squared norm of the conical vector's isotypic component
  int multiplicity = 1;
};

// Finite decomposition of the level-n restriction: one summand per node of
// Gamma_n, multiplicity one each.
std::vector<IsotypicSummand> restrict_to_level(const ConicalRepModel& rep,
                                               int level);

enum class MeasureClassFlag {
  IdenticalMeasures,
  SameAtoms,    // equal atom data; level masses differ
  AtomsDiffer,  // mutually singular by the null-set table
};

struct LevelCertificate {
  int level;
  std::vector<Weight> weights;  // common isotypic labels, sorted
};

struct TreeComparison {
  bool same_tree = false;
  int first_mismatch_level = 0;  // when !same_tree
  std::vector<LevelCertificate> certificate;
  MeasureClassFlag measure_class = MeasureClassFlag::IdenticalMeasures;
  std::string note;
};

// Level-by-level equality of the labeled trees; when equal, emits the
// per-level equivalence certificate and compares the measures' atom data.
TreeComparison same_tree(const ConicalRepModel& a, const ConicalRepModel& b);

// Sub-model generated by the conical vector f*v: tree restricted to the
// union of cylinders where f is nonzero, with inherited (not renormalized)
// masses; ancestor masses are recomputed as sums over kept children.
ConicalRepModel generated_subrep(const ConicalRepModel& rep,
                                 const StepSection& f);

struct SmoothReport {
  SmoothDecomposition decomposition;
  std::vector<int> blocks_per_level;  // finite isotypic block counts
};

SmoothReport smooth_report(const ConicalRepModel& rep);

}  // namespace limcone
