#pragma once

#include <optional>
#include <string>
#include <vector>

#include "limcone/limits.hpp"
#include "limcone/rootsys.hpp"

namespace limcone {

// A node of a highest-weight tree: a dominant weight at the level's rank,
// linked to the node at the previous level it restricts to.
struct TreeNode {
  Weight weight;
  int parent = -1;  // -1 at level 1
};

// Behavior of the tree below its explicit depth: arity 1 is a chain (no
// further splitting, weights extended with zero-tail fundamental
// coefficients); arity k >= 2 is the full k-ary rule where child j appends
// (last coordinate + 2j) on the new coordinates.  These two families cover
// every construction used in the disintegration arguments while keeping
// isolation, atoms and smoothness decidable.
struct TailRule {
  int arity = 1;
  bool chain() const { return arity == 1; }
};

struct NodeRef {
  int level = 1;  // 1-based
  int index = 0;
  friend bool operator==(const NodeRef& a, const NodeRef& b) {
    return a.level == b.level && a.index == b.index;
  }
  friend bool operator<(const NodeRef& a, const NodeRef& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.index < b.index;
  }
};

// A path of the tree: node indices through the explicit depth; beyond it,
// the tail rule applies with a constant child choice (only meaningful for
// k-ary tails).
struct TreePath {
  std::vector<int> idx;
  int tail_child = 0;
  friend bool operator==(const TreePath& a, const TreePath& b) {
    return a.idx == b.idx && a.tail_child == b.tail_child;
  }
};

// Projective system of finite node sets with weight labels; models the
// highest-weight supports Gamma = lim<- Gamma_n.
class TreeSet {
public:
  // Validates all invariants (dominant weights, restriction-compatible
  // parents, no childless or orphan nodes, distinct weights per level,
  // k-ary tails require growing ranks) and returns the immutable tree.
  // Throws InvalidTree listing every violation.
  static TreeSet validate(DirectSystemSpec system,
                          std::vector<std::vector<TreeNode>> levels,
                          TailRule tail);

  const DirectSystemSpec& system() const { return system_; }
  const TailRule& tail() const { return tail_; }
  int depth() const { return static_cast<int>(levels_.size()); }
  int level_size(int level) const {
    return static_cast<int>(levels_[level - 1].size());
  }
  const TreeNode& node(NodeRef ref) const {
    return levels_[ref.level - 1][ref.index];
  }
  const std::vector<TreeNode>& level(int level) const {
    return levels_[level - 1];
  }
  const std::vector<int>& children(NodeRef ref) const {
    return children_[ref.level - 1][ref.index];
  }
  const RestrictedRootSystem& system_at(int level) const {
    return systems_[level - 1];
  }

  // Number of depth-D leaves under the node.
  long long leaf_count(NodeRef ref) const;
  // Paths through the node; std::nullopt means infinitely many.
  std::optional<long long> path_count(NodeRef ref) const;

  void check_ref(NodeRef ref) const;
  void check_path(const TreePath& path) const;

  // Weight of the node a path visits at the given level, evaluating the
  // tail rule beyond the explicit depth.
  Weight path_weight(const TreePath& path, int level) const;

  // All depth-D leaf paths in deterministic order (tail_child = 0).
  std::vector<TreePath> leaf_paths() const;

  friend bool operator==(const TreeSet& a, const TreeSet& b);

private:
  DirectSystemSpec system_;
  std::vector<std::vector<TreeNode>> levels_;
  TailRule tail_;
  std::vector<RestrictedRootSystem> systems_;
  std::vector<std::vector<std::vector<int>>> children_;
};

// Weight of the j-th rule child (0-based) of a weight at the next rank.
Weight tail_child_weight(const DirectSystemSpec& spec, const Weight& parent,
                         int from_level, int child);

// Subtree descriptor Gamma^lambda: all paths through a node.
struct Cylinder {
  NodeRef root;
  // members[i] = node indices at level root.level + i belonging to the
  // cylinder (members[0] = {root.index}).
  std::vector<std::vector<int>> members;
  std::optional<long long> paths;  // nullopt = infinitely many
};

Cylinder cylinder(const TreeSet& tree, NodeRef ref);

// True iff some cylinder along the path contains exactly one path.
bool is_isolated(const TreeSet& tree, const TreePath& path);

struct SplittingReport {
  // splits[level-1][index]: node has >= 2 children (tail rule applies at
  // the explicit depth).
  std::vector<std::vector<bool>> splits;
  struct PathEntry {
    TreePath path;
    std::optional<int> stabilization;  // nullopt = never stabilizes
  };
  std::vector<PathEntry> paths;  // per explicit leaf path
};

SplittingReport splitting_report(const TreeSet& tree);

struct SmoothDecomposition {
  bool smooth = false;
  std::vector<ProfiniteWeight> summands;  // one per path when smooth
  Rational bound;                         // sup of node norms when smooth
  // when not smooth: nodes with strictly increasing sup-norms
  struct WitnessNode {
    int level;
    Weight weight;
    Rational norm;
  };
  std::vector<WitnessNode> witness;
};

// Decomposes the attached highest-weight data into smooth summands when all
// node sup-norms are bounded; otherwise reports a witness of norm growth.
SmoothDecomposition decompose_smooth(const TreeSet& tree);

}  // namespace limcone
