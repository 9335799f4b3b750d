#include "limcone/measure.hpp"

#include <sstream>

#include "limcone/errors.hpp"

namespace limcone {

namespace {
std::string node_str(NodeRef ref) {
  std::ostringstream os;
  os << "level " << ref.level << " node " << ref.index;
  return os.str();
}
}  // namespace

Rational CylinderMeasure::total() const {
  Rational t = 0;
  for (const Rational& m : mass[0]) t += m;
  return t;
}

CylinderMeasure build_rec_measure(std::shared_ptr<const TreeSet> tree) {
  CylinderMeasure mu;
  mu.tree = tree;
  mu.tail.kind = MassTail::Kind::Uniform;
  const int depth = tree->depth();
  mu.mass.resize(depth);
  mu.mass[0].assign(tree->level_size(1), Rational(1) / tree->level_size(1));
  for (int n = 1; n < depth; ++n) {
    mu.mass[n].resize(tree->level_size(n + 1));
    for (int i = 0; i < tree->level_size(n); ++i) {
      const auto& kids = tree->children(NodeRef{n, i});
      Rational share = mu.mass[n - 1][i] / static_cast<long>(kids.size());
      for (int c : kids) mu.mass[n][c] = share;
    }
  }
  return mu;
}

CylinderMeasure build_point_measure(std::shared_ptr<const TreeSet> tree,
                                    const TreePath& x) {
  tree->check_path(x);
  CylinderMeasure mu;
  mu.tree = tree;
  mu.tail.kind = MassTail::Kind::Point;
  mu.tail.x = x;
  const int depth = tree->depth();
  mu.mass.resize(depth);

  const int n1 = tree->level_size(1);
  mu.mass[0].resize(n1);
  if (n1 == 1) {
    mu.mass[0][0] = 1;
  } else {
    for (int i = 0; i < n1; ++i)
      mu.mass[0][i] = (i == x.idx[0]) ? Rational(3, 4)
                                      : Rational(1, 4) / (n1 - 1);
  }

  for (int n = 1; n < depth; ++n) {
    mu.mass[n].resize(tree->level_size(n + 1));
    for (int i = 0; i < tree->level_size(n); ++i) {
      const auto& kids = tree->children(NodeRef{n, i});
      const Rational parent = mu.mass[n - 1][i];
      if (i == x.idx[n - 1] && kids.size() >= 2) {
        // x-child target 1/2 + 1/2^{n+2} at level n+1; strictly below the
        // parent's mass, so the sibling shares stay positive.
        Rational target = Rational(1, 2) + Rational(1, 1LL << (n + 2));
        Rational share = (parent - target) / static_cast<long>(kids.size() - 1);
        for (int c : kids)
          mu.mass[n][c] = (c == x.idx[n]) ? target : share;
      } else {
        Rational share = parent / static_cast<long>(kids.size());
        for (int c : kids) mu.mass[n][c] = share;
      }
    }
  }
  return mu;
}

MeasureReport validate_measure(const CylinderMeasure& mu) {
  MeasureReport report;
  const TreeSet& tree = *mu.tree;
  if (static_cast<int>(mu.mass.size()) != tree.depth()) {
    report.ok = false;
    report.what = "mass table depth does not match tree";
    return report;
  }
  for (int n = 1; n <= tree.depth(); ++n) {
    if (static_cast<int>(mu.mass[n - 1].size()) != tree.level_size(n)) {
      report.ok = false;
      report.what = "mass table width mismatch at level " + std::to_string(n);
      return report;
    }
    for (int i = 0; i < tree.level_size(n); ++i)
      if (mu.mass[n - 1][i] <= 0) {
        report.ok = false;
        report.where = NodeRef{n, i};
        report.what = node_str(*report.where) + ": mass not positive (full support fails)";
        return report;
      }
  }
  for (int n = 1; n < tree.depth(); ++n)
    for (int i = 0; i < tree.level_size(n); ++i) {
      Rational sum = 0;
      for (int c : tree.children(NodeRef{n, i})) sum += mu.mass[n][c];
      if (sum != mu.mass[n - 1][i]) {
        report.ok = false;
        report.where = NodeRef{n, i};
        report.what = node_str(*report.where) + ": children masses sum to " +
                      sum.str() + ", expected " + mu.mass[n - 1][i].str();
        return report;
      }
    }
  return report;
}

Rational atom_mass(const CylinderMeasure& mu, const TreePath& path) {
  const TreeSet& tree = *mu.tree;
  tree.check_path(path);
  const Rational leaf_mass = mu.mass[tree.depth() - 1][path.idx.back()];
  if (tree.tail().chain()) return leaf_mass;  // masses freeze along chains
  switch (mu.tail.kind) {
    case MassTail::Kind::Uniform:
      return Rational(0);  // uniform k-ary splitting: masses decay to zero
    case MassTail::Kind::Point:
      // Along x the masses decrease to exactly 1/2; any other path
      // eventually leaves x and decays to zero under uniform splitting.
      return (path == mu.tail.x) ? Rational(1, 2) : Rational(0);
  }
  raise(ErrorKind::Unsupported, "tail rule without computable atom masses");
}

Rational section_norm(const CylinderMeasure& mu, const StepSection& f) {
  const TreeSet& tree = *mu.tree;
  if (f.level < 1 || f.level > tree.depth())
    raise(ErrorKind::Shape, "section level not represented in the tree");
  if (static_cast<int>(f.values.size()) != tree.level_size(f.level))
    raise(ErrorKind::Shape, "section value count does not match level size");
  Rational total = 0;
  for (int i = 0; i < tree.level_size(f.level); ++i)
    total += f.values[i].norm2() * mu.mass[f.level - 1][i];
  return total;
}

StepSection refine_section(const TreeSet& tree, const StepSection& f) {
  if (f.level >= tree.depth())
    raise(ErrorKind::Depth, "cannot refine a section at the deepest level");
  StepSection g;
  g.level = f.level + 1;
  g.values.resize(tree.level_size(g.level));
  for (int i = 0; i < tree.level_size(f.level); ++i)
    for (int c : tree.children(NodeRef{f.level, i})) g.values[c] = f.values[i];
  return g;
}

std::vector<NodeRef> essential_support(const CylinderMeasure& mu,
                                       const StepSection& f) {
  const TreeSet& tree = *mu.tree;
  if (f.level < 1 || f.level > tree.depth())
    raise(ErrorKind::Shape, "section level not represented in the tree");
  if (static_cast<int>(f.values.size()) != tree.level_size(f.level))
    raise(ErrorKind::Shape, "section value count does not match level size");
  std::vector<NodeRef> support;
  for (int i = 0; i < tree.level_size(f.level); ++i)
    if (!f.values[i].is_zero()) support.push_back(NodeRef{f.level, i});
  return support;
}

CylinderMeasure measure_from_norms(std::shared_ptr<const TreeSet> tree,
                                   std::vector<std::vector<Rational>> norms) {
  const TreeSet& t = *tree;
  if (static_cast<int>(norms.size()) != t.depth())
    raise(ErrorKind::NotConsistent, "norm table depth does not match tree");
  for (int n = 1; n <= t.depth(); ++n)
    if (static_cast<int>(norms[n - 1].size()) != t.level_size(n))
      raise(ErrorKind::NotConsistent,
            "norm table width mismatch at level " + std::to_string(n));

  Rational level1 = 0;
  for (const Rational& m : norms[0]) level1 += m;
  if (level1 != 1)
    raise(ErrorKind::NotConsistent,
          "level 1: squared norms sum to " + level1.str() + ", expected 1");
  for (int n = 1; n <= t.depth(); ++n)
    for (int i = 0; i < t.level_size(n); ++i)
      if (norms[n - 1][i] <= 0)
        raise(ErrorKind::NotConsistent,
              node_str(NodeRef{n, i}) + ": squared norm must be positive");
  for (int n = 1; n < t.depth(); ++n)
    for (int i = 0; i < t.level_size(n); ++i) {
      Rational sum = 0;
      for (int c : t.children(NodeRef{n, i})) sum += norms[n][c];
      if (sum != norms[n - 1][i])
        raise(ErrorKind::NotConsistent,
              node_str(NodeRef{n, i}) + ": children norms sum to " + sum.str() +
                  ", expected " + norms[n - 1][i].str() +
                  " (input is not an orthogonal isotypic decomposition)");
    }

  CylinderMeasure mu;
  mu.tree = std::move(tree);
  mu.mass = std::move(norms);
  mu.tail.kind = MassTail::Kind::Uniform;
  return mu;
}

}  // namespace limcone
