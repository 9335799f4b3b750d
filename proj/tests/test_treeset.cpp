#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "limcone/errors.hpp"

using namespace limcone;
using namespace limcone::testing;

TEST_CASE("chain tree validates with one path") {
  auto tree = chain_tree(4);
  CHECK(tree->depth() == 4);
  CHECK(tree->leaf_paths().size() == 1);
  CHECK(*tree->path_count(NodeRef{1, 0}) == 1);
}

TEST_CASE("binary example validates with two paths") {
  auto tree = binary_then_chain();
  CHECK(tree->leaf_paths().size() == 2);
  // both level-2 weights restrict to (2) and are dominant
  for (const TreeNode& node : tree->level(2)) {
    CHECK(restrict_weight(node.weight, 1) == cw(1, {2}));
    CHECK(is_dominant_integral(tree->system_at(2), node.weight));
  }
}

TEST_CASE("invalid trees are rejected with diagnostics") {
  // (4,2) is not dominant for C (coordinates must be nondecreasing)
  std::vector<std::vector<TreeNode>> levels(2);
  levels[0].push_back(TreeNode{cw(1, {2}), -1});
  levels[1].push_back(TreeNode{cw(2, {4, 2}), 0});
  CHECK_THROWS_WITH_AS(
      TreeSet::validate(c_system(), std::move(levels), TailRule{1}),
      doctest::Contains("not dominant"), Error);

  // orphan parent index
  std::vector<std::vector<TreeNode>> levels2(2);
  levels2[0].push_back(TreeNode{cw(1, {2}), -1});
  levels2[1].push_back(TreeNode{cw(2, {2, 2}), 3});
  CHECK_THROWS_WITH_AS(
      TreeSet::validate(c_system(), std::move(levels2), TailRule{1}),
      doctest::Contains("orphan"), Error);

  // non-restricting child
  std::vector<std::vector<TreeNode>> levels3(2);
  levels3[0].push_back(TreeNode{cw(1, {2}), -1});
  levels3[1].push_back(TreeNode{cw(2, {4, 4}), 0});
  CHECK_THROWS_WITH_AS(
      TreeSet::validate(c_system(), std::move(levels3), TailRule{1}),
      doctest::Contains("restrict"), Error);

  // childless node at a non-leaf level
  std::vector<std::vector<TreeNode>> levels4(2);
  levels4[0].push_back(TreeNode{cw(1, {2}), -1});
  levels4[0].push_back(TreeNode{cw(1, {4}), -1});
  levels4[1].push_back(TreeNode{cw(2, {2, 2}), 0});
  CHECK_THROWS_WITH_AS(
      TreeSet::validate(c_system(), std::move(levels4), TailRule{1}),
      doctest::Contains("childless"), Error);

  // k-ary tails need growing ranks
  DirectSystemSpec bounded;
  bounded.dynkin = Dynkin::C;
  bounded.prefix = {1};
  bounded.step = 0;
  std::vector<std::vector<TreeNode>> levels5(1);
  levels5[0].push_back(TreeNode{cw(1, {2}), -1});
  CHECK_THROWS_AS(TreeSet::validate(bounded, std::move(levels5), TailRule{2}),
                  Error);
}

TEST_CASE("cylinders") {
  auto tree = binary_then_chain();
  Cylinder whole = cylinder(*tree, NodeRef{1, 0});
  CHECK(whole.members[0] == std::vector<int>{0});
  CHECK(whole.members[1] == std::vector<int>({0, 1}));
  CHECK(*whole.paths == 2);

  Cylinder sub = cylinder(*tree, NodeRef{2, 1});
  CHECK(*sub.paths == 1);

  auto chain = chain_tree(3);
  for (int n = 1; n <= 3; ++n)
    CHECK(*cylinder(*chain, NodeRef{n, 0}).paths == 1);

  CHECK_THROWS_AS(cylinder(*tree, NodeRef{2, 5}), Error);
}

TEST_CASE("isolation") {
  auto chain = chain_tree(3);
  CHECK(is_isolated(*chain, chain->leaf_paths()[0]));

  auto full = full_binary();
  TreePath p{{0}, 0};
  CHECK(!is_isolated(*full, p));
  TreePath q{{0}, 1};
  CHECK(!is_isolated(*full, q));

  auto binary = binary_then_chain();
  CHECK(is_isolated(*binary, TreePath{{0, 1}, 0}));
  CHECK_THROWS_AS(is_isolated(*binary, TreePath{{0, 7}, 0}), Error);
}

TEST_CASE("splitting report") {
  auto chain = chain_tree(3);
  SplittingReport r1 = splitting_report(*chain);
  for (const auto& level : r1.splits)
    for (bool s : level) CHECK(!s);
  REQUIRE(r1.paths.size() == 1);
  CHECK(*r1.paths[0].stabilization == 1);

  auto binary = binary_then_chain();
  SplittingReport r2 = splitting_report(*binary);
  CHECK(r2.splits[0][0]);       // root splits
  CHECK(!r2.splits[1][0]);
  CHECK(!r2.splits[1][1]);
  for (const auto& entry : r2.paths) CHECK(*entry.stabilization == 2);

  auto full = full_binary();
  SplittingReport r3 = splitting_report(*full);
  CHECK(r3.splits[0][0]);
  CHECK(!r3.paths[0].stabilization.has_value());
}

TEST_CASE("smooth decomposition of bounded trees") {
  auto binary = binary_then_chain();
  SmoothDecomposition d = decompose_smooth(*binary);
  REQUIRE(d.smooth);
  REQUIRE(d.summands.size() == 2);
  CHECK(d.summands[0].prefix == std::vector<long long>({1, 0}));
  CHECK(d.summands[1].prefix == std::vector<long long>({1, 1}));
  for (const ProfiniteWeight& mu : d.summands)
    CHECK(mu.tail == ProfiniteWeight::Tail::Zero);

  auto chain = chain_tree(3);
  SmoothDecomposition dc = decompose_smooth(*chain);
  REQUIRE(dc.smooth);
  REQUIRE(dc.summands.size() == 1);
  CHECK(dc.summands[0].prefix == std::vector<long long>({1, 0, 0}));
}

TEST_CASE("norm growth witness for rule trees") {
  auto full = full_binary();
  SmoothDecomposition d = decompose_smooth(*full);
  REQUIRE(!d.smooth);
  REQUIRE(d.witness.size() == 5);
  std::vector<long> expected{2, 4, 6, 8, 10};
  for (size_t i = 0; i < d.witness.size(); ++i)
    CHECK(d.witness[i].norm == expected[i]);
}

TEST_CASE("path counts add across children") {
  enumerate_trees(3, 3, 1, 1, [](std::shared_ptr<TreeSet> tree) {
    for (int n = 1; n < tree->depth(); ++n)
      for (int i = 0; i < tree->level_size(n); ++i) {
        long long total = 0;
        for (int c : tree->children(NodeRef{n, i}))
          total += *tree->path_count(NodeRef{n + 1, c});
        CHECK(total == *tree->path_count(NodeRef{n, i}));
      }
  });
}

TEST_CASE("isolation equivalence on sampled trees") {
  // isolated <=> finite stabilization, single children past it, and a
  // singleton cylinder at the stabilization level
  for (int tail : {1, 2}) {
    enumerate_trees(3, 2, 1, tail, [&](std::shared_ptr<TreeSet> tree) {
      SplittingReport report = splitting_report(*tree);
      for (const auto& entry : report.paths) {
        bool iso = is_isolated(*tree, entry.path);
        bool expected = false;
        if (entry.stabilization.has_value()) {
          int s = *entry.stabilization;
          bool singleton = s <= tree->depth() &&
                           tree->path_count(NodeRef{s, entry.path.idx[s - 1]})
                                   .value_or(2) == 1;
          expected = singleton;
        }
        CHECK(iso == expected);
      }
    });
  }
}

TEST_CASE("decompose_smooth returns exactly the path set") {
  enumerate_trees(3, 3, 2, 1, [](std::shared_ptr<TreeSet> tree) {
    SmoothDecomposition d = decompose_smooth(*tree);
    REQUIRE(d.smooth);
    auto paths = tree->leaf_paths();
    REQUIRE(d.summands.size() == paths.size());
    for (size_t i = 0; i < paths.size(); ++i) {
      const Weight leaf =
          tree->node(NodeRef{tree->depth(), paths[i].idx.back()}).weight;
      Weight rebuilt = from_fundamental_coords(
          tree->system_at(tree->depth()),
          std::vector<Rational>(d.summands[i].prefix.begin(),
                                d.summands[i].prefix.end()));
      CHECK(rebuilt == leaf);
    }
  });
}
