#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "limcone/treeset.hpp"

namespace limcone::testing {

inline DirectSystemSpec c_system() {
  DirectSystemSpec spec;
  spec.dynkin = Dynkin::C;
  spec.prefix = {1};
  spec.step = 1;  // r_n = n
  return spec;
}

inline Weight cw(int rank, std::vector<long> cs) {
  std::vector<Rational> coords(cs.begin(), cs.end());
  return Weight(Dynkin::C, rank, std::move(coords));
}

// chain of constant fundamental coordinates: level-n weight (2,2,...,2)
inline std::shared_ptr<TreeSet> chain_tree(int depth) {
  std::vector<std::vector<TreeNode>> levels(depth);
  for (int n = 1; n <= depth; ++n) {
    std::vector<long> coords(n, 2);
    levels[n - 1].push_back(TreeNode{cw(n, coords), n == 1 ? -1 : 0});
  }
  return std::make_shared<TreeSet>(
      TreeSet::validate(c_system(), std::move(levels), TailRule{1}));
}

// level 1: {(2)}, level 2: {(2,2), (2,4)}, chain tail
inline std::shared_ptr<TreeSet> binary_then_chain() {
  std::vector<std::vector<TreeNode>> levels(2);
  levels[0].push_back(TreeNode{cw(1, {2}), -1});
  levels[1].push_back(TreeNode{cw(2, {2, 2}), 0});
  levels[1].push_back(TreeNode{cw(2, {2, 4}), 0});
  return std::make_shared<TreeSet>(
      TreeSet::validate(c_system(), std::move(levels), TailRule{1}));
}

// single explicit root (2), full binary tail rule
inline std::shared_ptr<TreeSet> full_binary() {
  std::vector<std::vector<TreeNode>> levels(1);
  levels[0].push_back(TreeNode{cw(1, {2}), -1});
  return std::make_shared<TreeSet>(
      TreeSet::validate(c_system(), std::move(levels), TailRule{2}));
}

// Enumerates all tree shapes of the given depth with 1..max_children
// children per node and the given number of roots; reports each shape as
// parent vectors per level (parents[0] is ignored).  Weights are assigned
// deterministically: root i gets (2i+2); child j of w appends
// (last + 2j).
inline void enumerate_trees(
    int depth, int max_children, int roots, int tail_arity,
    const std::function<void(std::shared_ptr<TreeSet>)>& visit) {
  std::vector<std::vector<TreeNode>> levels(depth);
  for (int i = 0; i < roots; ++i)
    levels[0].push_back(TreeNode{cw(1, {2 + 2 * i}), -1});

  std::function<void(int)> rec = [&](int level) {
    if (level == depth) {
      auto copy = levels;
      visit(std::make_shared<TreeSet>(
          TreeSet::validate(c_system(), std::move(copy), TailRule{tail_arity})));
      return;
    }
    const int width = static_cast<int>(levels[level - 1].size());
    std::vector<int> counts(width, 1);
    while (true) {
      levels[level].clear();
      for (int i = 0; i < width; ++i) {
        const Weight& parent = levels[level - 1][i].weight;
        for (int j = 0; j < counts[i]; ++j) {
          Weight w = parent.canonical();
          Rational last = w.coords.back();
          w.rank += 1;
          w.coords.push_back(last + 2 * j);
          levels[level].push_back(TreeNode{std::move(w), i});
        }
      }
      rec(level + 1);
      int pos = 0;
      while (pos < width && counts[pos] == max_children) counts[pos++] = 1;
      if (pos == width) break;
      ++counts[pos];
    }
    levels[level].clear();
  };
  rec(1);
}

}  // namespace limcone::testing
