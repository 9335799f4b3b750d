#include "limcone/conrep.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "limcone/errors.hpp"

namespace limcone {

ConicalRepModel make_model(std::shared_ptr<const TreeSet> tree,
                           CylinderMeasure measure) {
  if (measure.tree.get() != tree.get())
    raise(ErrorKind::System, "measure does not live on the model's tree");
  MeasureReport report = validate_measure(measure);
  if (!report.ok) raise(ErrorKind::NotConsistent, report.what);
  return ConicalRepModel{std::move(tree), std::move(measure)};
}

std::vector<IsotypicSummand> restrict_to_level(const ConicalRepModel& rep,
                                               int level) {
  const TreeSet& tree = *rep.tree;
  if (level < 1 || level > tree.depth())
    raise(ErrorKind::Depth, "level exceeds represented depth");
  std::vector<IsotypicSummand> summands;
  for (int i = 0; i < tree.level_size(level); ++i)
    summands.push_back(IsotypicSummand{tree.level(level)[i].weight,
                                       rep.measure.mass[level - 1][i], 1});
  return summands;
}

namespace {

// Materializes tail levels so that two models can be compared at equal
// explicit depth.
ConicalRepModel deepen(const ConicalRepModel& rep, int target_depth) {
  const TreeSet& tree = *rep.tree;
  if (target_depth <= tree.depth()) return rep;
  std::vector<std::vector<TreeNode>> levels;
  for (int n = 1; n <= tree.depth(); ++n) levels.push_back(tree.level(n));
  std::vector<std::vector<Rational>> mass = rep.measure.mass;
  TreePath x = rep.measure.tail.x;
  const bool point = rep.measure.tail.kind == MassTail::Kind::Point;
  const int arity = tree.tail().arity;

  for (int n = tree.depth(); n < target_depth; ++n) {
    std::vector<TreeNode> next;
    std::vector<Rational> next_mass;
    int x_next = -1;
    for (size_t i = 0; i < levels[n - 1].size(); ++i) {
      const Weight& parent = levels[n - 1][i].weight;
      const Rational parent_mass = mass[n - 1][i];
      const bool on_path = point && static_cast<int>(i) == x.idx[n - 1];
      Rational target, share;
      if (on_path && arity >= 2) {
        target = Rational(1, 2) + Rational(1, 1LL << (n + 2));
        share = (parent_mass - target) / (arity - 1);
      } else {
        share = parent_mass / arity;
        target = share;
      }
      for (int j = 0; j < arity; ++j) {
        Weight w = tail_child_weight(tree.system(), parent, n, j);
        if (on_path && j == x.tail_child) x_next = static_cast<int>(next.size());
        next_mass.push_back(on_path ? (j == x.tail_child ? target : share)
                                    : share);
        next.push_back(TreeNode{std::move(w), static_cast<int>(i)});
      }
    }
    if (point) x.idx.push_back(x_next);
    levels.push_back(std::move(next));
    mass.push_back(std::move(next_mass));
  }

  auto deep = std::make_shared<TreeSet>(
      TreeSet::validate(tree.system(), std::move(levels), tree.tail()));
  CylinderMeasure mu;
  mu.tree = deep;
  mu.mass = std::move(mass);
  mu.tail.kind = rep.measure.tail.kind;
  if (point) mu.tail.x = x;
  return make_model(deep, std::move(mu));
}

std::vector<Weight> sorted_level_weights(const TreeSet& tree, int level) {
  std::vector<Weight> w;
  for (const TreeNode& node : tree.level(level)) w.push_back(node.weight);
  std::sort(w.begin(), w.end());
  return w;
}

// Atom data of a measure: weight-labeled paths with positive limit mass.
std::map<std::vector<Weight>, Rational> atom_table(const ConicalRepModel& rep) {
  std::map<std::vector<Weight>, Rational> atoms;
  const TreeSet& tree = *rep.tree;
  auto signature = [&](const TreePath& p) {
    std::vector<Weight> sig;
    for (int n = 1; n <= tree.depth(); ++n)
      sig.push_back(tree.node(NodeRef{n, p.idx[n - 1]}).weight);
    // one tail step disambiguates paths that agree through the depth
    sig.push_back(tree.path_weight(p, tree.depth() + 1));
    return sig;
  };
  if (tree.tail().chain()) {
    for (const TreePath& p : tree.leaf_paths())
      atoms[signature(p)] = atom_mass(rep.measure, p);
    return atoms;
  }
  if (rep.measure.tail.kind == MassTail::Kind::Point)
    atoms[signature(rep.measure.tail.x)] = Rational(1, 2);
  return atoms;
}

}  // namespace

TreeComparison same_tree(const ConicalRepModel& a, const ConicalRepModel& b) {
  const DirectSystemSpec& sa = a.tree->system();
  const DirectSystemSpec& sb = b.tree->system();
  if (sa.dynkin != sb.dynkin)
    raise(ErrorKind::System, "models live over different Dynkin types");
  const int depth = std::max(a.tree->depth(), b.tree->depth());
  for (int n = 1; n <= depth + 1; ++n)
    if (sa.rank_at(n) != sb.rank_at(n))
      raise(ErrorKind::System, "models live over different rank sequences");

  TreeComparison cmp;
  if (a.tree->tail().arity != b.tree->tail().arity) {
    cmp.same_tree = false;
    cmp.first_mismatch_level = std::min(a.tree->depth(), b.tree->depth()) + 1;
    cmp.note = "tail rules differ";
    return cmp;
  }
  ConicalRepModel da = deepen(a, depth);
  ConicalRepModel db = deepen(b, depth);

  cmp.same_tree = true;
  for (int n = 1; n <= depth; ++n) {
    std::vector<Weight> wa = sorted_level_weights(*da.tree, n);
    std::vector<Weight> wb = sorted_level_weights(*db.tree, n);
    if (wa != wb) {
      cmp.same_tree = false;
      cmp.first_mismatch_level = n;
      cmp.certificate.clear();
      return cmp;
    }
    cmp.certificate.push_back(LevelCertificate{n, std::move(wa)});
  }

  // Equal trees: compare measures.  Masses are matched through the sorted
  // weight labels (weights are distinct per level).
  bool identical = da.measure.tail.kind == db.measure.tail.kind;
  for (int n = 1; n <= depth && identical; ++n) {
    std::map<Weight, Rational> ma, mb;
    for (int i = 0; i < da.tree->level_size(n); ++i)
      ma[da.tree->level(n)[i].weight] = da.measure.mass[n - 1][i];
    for (int i = 0; i < db.tree->level_size(n); ++i)
      mb[db.tree->level(n)[i].weight] = db.measure.mass[n - 1][i];
    identical = (ma == mb);
  }
  if (identical && da.measure.tail.kind == MassTail::Kind::Point) {
    auto sig = [](const ConicalRepModel& m) {
      std::vector<Weight> s;
      for (int n = 1; n <= m.tree->depth(); ++n)
        s.push_back(m.tree->node(NodeRef{n, m.measure.tail.x.idx[n - 1]}).weight);
      s.push_back(m.tree->path_weight(m.measure.tail.x, m.tree->depth() + 1));
      return s;
    };
    identical = sig(da) == sig(db);
  }
  if (identical) {
    cmp.measure_class = MeasureClassFlag::IdenticalMeasures;
    cmp.note = "identical measures";
  } else if (atom_table(da) == atom_table(db)) {
    cmp.measure_class = MeasureClassFlag::SameAtoms;
    cmp.note = "same atom sets; level masses differ";
  } else {
    cmp.measure_class = MeasureClassFlag::AtomsDiffer;
    cmp.note =
        "same tree, inequivalent representations (atom sets differ; the "
        "measures are mutually singular)";
  }
  return cmp;
}

ConicalRepModel generated_subrep(const ConicalRepModel& rep,
                                 const StepSection& f) {
  const TreeSet& tree = *rep.tree;
  std::vector<NodeRef> support = essential_support(rep.measure, f);
  if (support.empty())
    raise(ErrorKind::ZeroVector, "section vanishes everywhere");

  const int depth = tree.depth();
  std::vector<std::set<int>> keep(depth);
  for (const NodeRef& ref : support) keep[ref.level - 1].insert(ref.index);
  // descendants
  for (int n = f.level; n < depth; ++n)
    for (int i : keep[n - 1])
      for (int c : tree.children(NodeRef{n, i})) keep[n].insert(c);
  // ancestors
  for (int n = f.level; n > 1; --n)
    for (int i : keep[n - 1]) keep[n - 2].insert(tree.node(NodeRef{n, i}).parent);

  std::vector<std::vector<int>> remap(depth);
  std::vector<std::vector<TreeNode>> levels(depth);
  std::vector<std::vector<Rational>> mass(depth);
  for (int n = 1; n <= depth; ++n) {
    remap[n - 1].assign(tree.level_size(n), -1);
    for (int i : keep[n - 1]) {
      TreeNode node = tree.node(NodeRef{n, i});
      if (n > 1) node.parent = remap[n - 2][node.parent];
      remap[n - 1][i] = static_cast<int>(levels[n - 1].size());
      levels[n - 1].push_back(std::move(node));
      mass[n - 1].push_back(rep.measure.mass[n - 1][i]);
    }
  }
  // Masses above the cut are the restricted measure: recompute as sums over
  // kept children (no renormalization).
  for (int n = f.level - 1; n >= 1; --n)
    for (int i : keep[n - 1]) {
      Rational sum = 0;
      for (int c : tree.children(NodeRef{n, i}))
        if (remap[n][c] >= 0) sum += mass[n][remap[n][c]];
      mass[n - 1][remap[n - 1][i]] = sum;
    }

  auto sub = std::make_shared<TreeSet>(
      TreeSet::validate(tree.system(), std::move(levels), tree.tail()));
  CylinderMeasure mu;
  mu.tree = sub;
  mu.mass = std::move(mass);
  mu.tail.kind = MassTail::Kind::Uniform;
  if (rep.measure.tail.kind == MassTail::Kind::Point) {
    const TreePath& x = rep.measure.tail.x;
    bool kept = true;
    TreePath nx;
    for (int n = 1; n <= depth && kept; ++n) {
      int r = remap[n - 1][x.idx[n - 1]];
      if (r < 0)
        kept = false;
      else
        nx.idx.push_back(r);
    }
    if (kept) {
      nx.tail_child = x.tail_child;
      mu.tail.kind = MassTail::Kind::Point;
      mu.tail.x = nx;
    }
  }
  return make_model(sub, std::move(mu));
}

SmoothReport smooth_report(const ConicalRepModel& rep) {
  SmoothReport report;
  report.decomposition = decompose_smooth(*rep.tree);
  for (int n = 1; n <= rep.tree->depth(); ++n)
    report.blocks_per_level.push_back(rep.tree->level_size(n));
  return report;
}

}  // namespace limcone
