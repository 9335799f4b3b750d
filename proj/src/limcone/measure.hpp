#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "limcone/treeset.hpp"

namespace limcone {

// Mass behavior beyond the explicit depth: Uniform splits every node's mass
// equally among its rule children; Point continues the point-biased
// recursion along the distinguished path x.
struct MassTail {
  enum class Kind { Uniform, Point };
  Kind kind = Kind::Uniform;
  TreePath x;  // meaningful for Point
};

// Consistent assignment of nonnegative rationals to tree nodes; models a
// finite Borel measure of full support on Gamma via cylinder masses.
struct CylinderMeasure {
  std::shared_ptr<const TreeSet> tree;
  std::vector<std::vector<Rational>> mass;  // mass[level-1][index]
  MassTail tail;

  const Rational& at(NodeRef ref) const { return mass[ref.level - 1][ref.index]; }
  Rational total() const;
};

// Scalar function constant on the level-n cylinders; Gaussian rational
// values keep |f|^2 exact.
struct StepSection {
  int level = 1;
  std::vector<Gaussian> values;  // one per node of Gamma_level
};

// mu_rec: mass 1/#Gamma_1 at level one, then uniform among children.
CylinderMeasure build_rec_measure(std::shared_ptr<const TreeSet> tree);

// Point-biased measure mu_x: the level-1 x-node gets 3/4 (1 if it is the
// only node), other level-1 nodes share the rest uniformly; whenever the
// node on x splits, its x-child gets 1/2 + 1/2^(n+2) at level n+1 and the
// siblings share the remainder of the parent's mass; off-path nodes split
// uniformly.  Along x the cylinder masses decrease to the atom value 1/2.
CylinderMeasure build_point_measure(std::shared_ptr<const TreeSet> tree,
                                    const TreePath& x);

struct MeasureReport {
  bool ok = true;
  std::string what;
  std::optional<NodeRef> where;
};

// Additivity at every represented node, positivity (full support), finite
// total.
MeasureReport validate_measure(const CylinderMeasure& mu);

// Limit of the cylinder masses along the path (exact; the tail rules give
// eventually constant or geometric sequences).
Rational atom_mass(const CylinderMeasure& mu, const TreePath& path);

// ||w||^2 = sum over level-n nodes of |f(node)|^2 * mass(node).
Rational section_norm(const CylinderMeasure& mu, const StepSection& f);

// Refines f one level down by copying values to children (test helper for
// the Parseval bookkeeping).
StepSection refine_section(const TreeSet& tree, const StepSection& f);

// Level-n nodes where f is nonzero; the generated subrepresentation lives
// on the union of these cylinders.
std::vector<NodeRef> essential_support(const CylinderMeasure& mu,
                                       const StepSection& f);

// Builds the disintegration measure mu(Gamma^lambda) = ||w_lambda||^2 from
// conical-vector norms; rejects inputs violating additivity, positivity or
// the level-1 normalization with the violating node.
CylinderMeasure measure_from_norms(std::shared_ptr<const TreeSet> tree,
                                   std::vector<std::vector<Rational>> norms);

}  // namespace limcone
