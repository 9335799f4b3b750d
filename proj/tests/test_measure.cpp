#include "doctest.h"
#include "helpers.hpp"
#include "limcone/errors.hpp"
#include "limcone/measure.hpp"

using namespace limcone;
using namespace limcone::testing;

TEST_CASE("recursively uniform measure") {
  auto chain = chain_tree(4);
  CylinderMeasure mu = build_rec_measure(chain);
  CHECK(validate_measure(mu).ok);
  for (int n = 1; n <= 4; ++n) CHECK(mu.at(NodeRef{n, 0}) == 1);

  auto binary = binary_then_chain();
  CylinderMeasure nu = build_rec_measure(binary);
  CHECK(nu.at(NodeRef{2, 0}) == Rational(1, 2));
  CHECK(nu.at(NodeRef{2, 1}) == Rational(1, 2));
  CHECK(nu.total() == 1);
}

TEST_CASE("full binary cylinder masses halve") {
  // depth-4 materialization of the one-root full binary tree
  std::vector<std::vector<TreeNode>> levels(4);
  levels[0].push_back(TreeNode{cw(1, {2}), -1});
  for (int n = 2; n <= 4; ++n)
    for (int p = 0; p < (1 << (n - 2)); ++p)
      for (int j = 0; j < 2; ++j) {
        Weight w = levels[n - 2][p].weight.canonical();
        Rational last = w.coords.back();
        w.rank += 1;
        w.coords.push_back(last + 2 * j);
        levels[n - 1].push_back(TreeNode{std::move(w), p});
      }
  auto tree = std::make_shared<TreeSet>(
      TreeSet::validate(c_system(), std::move(levels), TailRule{2}));
  CylinderMeasure mu = build_rec_measure(tree);
  CHECK(validate_measure(mu).ok);
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i < tree->level_size(n); ++i)
      CHECK(mu.at(NodeRef{n, i}) == Rational(1, 1LL << (n - 1)));
}

TEST_CASE("point measure masses") {
  auto binary = binary_then_chain();
  TreePath x{{0, 1}, 0};
  CylinderMeasure mu = build_point_measure(binary, x);
  CHECK(validate_measure(mu).ok);
  // single level-1 node: full mass; level-2 split: 5/8 for the x-child
  CHECK(mu.at(NodeRef{1, 0}) == 1);
  CHECK(mu.at(NodeRef{2, 1}) == Rational(5, 8));
  CHECK(mu.at(NodeRef{2, 0}) == Rational(3, 8));

  // two roots: 3/4 and 1/4
  std::vector<std::vector<TreeNode>> levels(1);
  levels[0].push_back(TreeNode{cw(1, {2}), -1});
  levels[0].push_back(TreeNode{cw(1, {4}), -1});
  auto two = std::make_shared<TreeSet>(
      TreeSet::validate(c_system(), std::move(levels), TailRule{2}));
  CylinderMeasure nu = build_point_measure(two, TreePath{{0}, 0});
  CHECK(nu.at(NodeRef{1, 0}) == Rational(3, 4));
  CHECK(nu.at(NodeRef{1, 1}) == Rational(1, 4));

  CHECK_THROWS_AS(build_point_measure(binary, TreePath{{0, 5}, 0}), Error);
}

TEST_CASE("point measure x-child rule at deeper splits") {
  // explicit depth-3 binary tree; x goes along the second children
  std::vector<std::vector<TreeNode>> levels(3);
  levels[0].push_back(TreeNode{cw(1, {2}), -1});
  for (int n = 2; n <= 3; ++n)
    for (int p = 0; p < (1 << (n - 2)); ++p)
      for (int j = 0; j < 2; ++j) {
        Weight w = levels[n - 2][p].weight.canonical();
        Rational last = w.coords.back();
        w.rank += 1;
        w.coords.push_back(last + 2 * j);
        levels[n - 1].push_back(TreeNode{std::move(w), p});
      }
  auto tree = std::make_shared<TreeSet>(
      TreeSet::validate(c_system(), std::move(levels), TailRule{2}));
  TreePath x{{0, 1, 3}, 0};
  CylinderMeasure mu = build_point_measure(tree, x);
  REQUIRE(validate_measure(mu).ok);
  CHECK(mu.at(NodeRef{1, 0}) == 1);
  CHECK(mu.at(NodeRef{2, 1}) == Rational(5, 8));   // 1/2 + 1/8
  CHECK(mu.at(NodeRef{3, 3}) == Rational(9, 16));  // 1/2 + 1/16
  CHECK(mu.at(NodeRef{3, 2}) == Rational(5, 8) - Rational(9, 16));
  // off-path node splits uniformly
  CHECK(mu.at(NodeRef{3, 0}) == Rational(3, 16));
  CHECK(mu.at(NodeRef{3, 1}) == Rational(3, 16));
}

TEST_CASE("validate_measure reports violations") {
  auto binary = binary_then_chain();
  CylinderMeasure mu = build_rec_measure(binary);
  mu.mass[1][0] = Rational(1, 3);
  MeasureReport report = validate_measure(mu);
  CHECK(!report.ok);
  REQUIRE(report.where.has_value());
  CHECK(report.where->level == 1);

  CylinderMeasure nu = build_rec_measure(binary);
  nu.mass[1][1] = 0;
  MeasureReport r2 = validate_measure(nu);
  CHECK(!r2.ok);
  CHECK(r2.what.find("positive") != std::string::npos);
}

TEST_CASE("atom masses") {
  // mu_rec on the full binary rule tree: every atom is 0
  auto full = full_binary();
  CylinderMeasure mu = build_rec_measure(full);
  CHECK(atom_mass(mu, TreePath{{0}, 0}) == 0);
  CHECK(atom_mass(mu, TreePath{{0}, 1}) == 0);

  // mu_rec on binary-then-chain: masses freeze at 1/2
  auto binary = binary_then_chain();
  CylinderMeasure nu = build_rec_measure(binary);
  CHECK(atom_mass(nu, TreePath{{0, 0}, 0}) == Rational(1, 2));
  CHECK(atom_mass(nu, TreePath{{0, 1}, 0}) == Rational(1, 2));

  // mu_x: atom exactly 1/2 at x, 0 elsewhere (non-isolated case)
  CylinderMeasure px = build_point_measure(full, TreePath{{0}, 0});
  CHECK(atom_mass(px, TreePath{{0}, 0}) == Rational(1, 2));
  CHECK(atom_mass(px, TreePath{{0}, 1}) == 0);
}

TEST_CASE("point measure atom matches unrolled masses") {
  // deepen the full binary tree explicitly and watch the x-masses decrease
  // toward 1/2: level-n mass 1/2 + 1/2^{n+1}
  std::vector<std::vector<TreeNode>> levels(5);
  levels[0].push_back(TreeNode{cw(1, {2}), -1});
  for (int n = 2; n <= 5; ++n)
    for (int p = 0; p < (1 << (n - 2)); ++p)
      for (int j = 0; j < 2; ++j) {
        Weight w = levels[n - 2][p].weight.canonical();
        Rational last = w.coords.back();
        w.rank += 1;
        w.coords.push_back(last + 2 * j);
        levels[n - 1].push_back(TreeNode{std::move(w), p});
      }
  auto tree = std::make_shared<TreeSet>(
      TreeSet::validate(c_system(), std::move(levels), TailRule{2}));
  TreePath x{{0, 0, 0, 0, 0}, 0};
  CylinderMeasure mu = build_point_measure(tree, x);
  REQUIRE(validate_measure(mu).ok);
  for (int n = 2; n <= 5; ++n)
    CHECK(mu.at(NodeRef{n, 0}) == Rational(1, 2) + Rational(1, 1LL << (n + 1)));
  CHECK(atom_mass(mu, x) == Rational(1, 2));
}

TEST_CASE("section norms") {
  auto binary = binary_then_chain();
  CylinderMeasure mu = build_rec_measure(binary);

  StepSection one{2, {Gaussian(1), Gaussian(1)}};
  CHECK(section_norm(mu, one) == 1);

  StepSection indicator{2, {Gaussian(0), Gaussian(1)}};
  CHECK(section_norm(mu, indicator) == mu.at(NodeRef{2, 1}));

  StepSection f{1, {Gaussian(2)}};
  CHECK(section_norm(mu, f) == 4);

  StepSection complex_f{2, {Gaussian(Rational(1), Rational(1)), Gaussian(0)}};
  CHECK(section_norm(mu, complex_f) == Rational(2) * Rational(1, 2));

  StepSection bad{2, {Gaussian(1)}};
  CHECK_THROWS_AS(section_norm(mu, bad), Error);

  // Parseval bookkeeping: refining a section preserves its norm
  StepSection refined = refine_section(*binary, f);
  CHECK(section_norm(mu, refined) == section_norm(mu, f));
}

TEST_CASE("essential support") {
  auto binary = binary_then_chain();
  CylinderMeasure mu = build_rec_measure(binary);
  StepSection one{1, {Gaussian(1)}};
  CHECK(essential_support(mu, one).size() == 1);
  StepSection ind{2, {Gaussian(0), Gaussian(3)}};
  auto supp = essential_support(mu, ind);
  REQUIRE(supp.size() == 1);
  CHECK(supp[0] == NodeRef{2, 1});
}

TEST_CASE("measure from norms") {
  auto binary = binary_then_chain();
  std::vector<std::vector<Rational>> norms{{1}, {Rational(3, 4), Rational(1, 4)}};
  CylinderMeasure mu = measure_from_norms(binary, norms);
  CHECK(validate_measure(mu).ok);
  CHECK(mu.at(NodeRef{2, 0}) == Rational(3, 4));

  // extraction round-trip
  CylinderMeasure rec = build_rec_measure(binary);
  CylinderMeasure back = measure_from_norms(binary, rec.mass);
  CHECK(back.mass == rec.mass);

  // level-1 norms must sum to 1
  std::vector<std::vector<Rational>> bad{{Rational(1, 2)},
                                         {Rational(1, 3), Rational(1, 6)}};
  CHECK_THROWS_AS(measure_from_norms(binary, bad), Error);

  // additivity violations carry the node location
  std::vector<std::vector<Rational>> bad2{{1}, {Rational(1, 2), Rational(1, 3)}};
  try {
    measure_from_norms(binary, bad2);
    FAIL("expected NotConsistent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotConsistent);
    CHECK(std::string(e.what()).find("level 1 node 0") != std::string::npos);
  }
}
