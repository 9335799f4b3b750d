#include "limcone/treeset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "limcone/errors.hpp"

namespace limcone {

Weight tail_child_weight(const DirectSystemSpec& spec, const Weight& parent,
                         int from_level, int child) {
  const int r0 = spec.rank_at(from_level);
  const int r1 = spec.rank_at(from_level + 1);
  if (parent.rank != r0)
    raise(ErrorKind::Shape, "tail extension from wrong rank");
  Weight c = parent.canonical();
  Rational last = c.coords.back();
  Rational value = last + Rational(2 * child);
  Weight out(parent.dynkin, r1, c.coords);
  out.coords.resize(out.dim(), value);
  return out;
}

TreeSet TreeSet::validate(DirectSystemSpec system,
                          std::vector<std::vector<TreeNode>> levels,
                          TailRule tail) {
  std::vector<std::string> problems;
  system.validate();
  if (tail.arity < 1) problems.push_back("tail arity must be >= 1");
  if (levels.empty()) problems.push_back("tree has no levels");
  for (size_t l = 0; l < levels.size(); ++l)
    if (levels[l].empty()) {
      std::ostringstream os;
      os << "level " << l + 1 << " is empty";
      problems.push_back(os.str());
    }
  if (!problems.empty())
    raise(ErrorKind::InvalidTree, problems.front());

  const int depth = static_cast<int>(levels.size());
  std::vector<RestrictedRootSystem> systems;
  for (int n = 1; n <= depth; ++n)
    systems.push_back(build_system(system.dynkin, system.rank_at(n)));

  auto where = [](int level, int index) {
    std::ostringstream os;
    os << "level " << level << " node " << index;
    return os.str();
  };

  for (int n = 1; n <= depth; ++n) {
    std::set<Weight> seen;
    for (size_t i = 0; i < levels[n - 1].size(); ++i) {
      const TreeNode& node = levels[n - 1][i];
      const std::string loc = where(n, static_cast<int>(i));
      if (node.weight.dynkin != system.dynkin ||
          node.weight.rank != system.rank_at(n)) {
        problems.push_back(loc + ": weight shape mismatch");
        continue;
      }
      if (!is_dominant_integral(systems[n - 1], node.weight))
        problems.push_back(loc + ": weight " + to_string(node.weight) +
                           " is not dominant integral");
      if (!seen.insert(node.weight).second)
        problems.push_back(loc + ": duplicate weight at this level");
      if (n == 1) {
        if (node.parent != -1) problems.push_back(loc + ": level-1 node has a parent");
      } else {
        if (node.parent < 0 ||
            node.parent >= static_cast<int>(levels[n - 2].size())) {
          problems.push_back(loc + ": orphan node (bad parent index)");
        } else {
          const Weight restricted =
              restrict_weight(node.weight, system.rank_at(n - 1));
          if (restricted != levels[n - 2][node.parent].weight)
            problems.push_back(loc + ": weight does not restrict to its parent");
        }
      }
    }
  }

  // Paths never die: every node below the last level needs a child.
  std::vector<std::vector<std::vector<int>>> children(depth);
  for (int n = 1; n <= depth; ++n)
    children[n - 1].assign(levels[n - 1].size(), {});
  for (int n = 2; n <= depth; ++n)
    for (size_t i = 0; i < levels[n - 1].size(); ++i) {
      int p = levels[n - 1][i].parent;
      if (p >= 0 && p < static_cast<int>(levels[n - 2].size()))
        children[n - 2][p].push_back(static_cast<int>(i));
    }
  for (int n = 1; n < depth; ++n)
    for (size_t i = 0; i < levels[n - 1].size(); ++i)
      if (children[n - 1][i].empty())
        problems.push_back(where(n, static_cast<int>(i)) + ": childless node");

  if (tail.arity >= 2) {
    if (system.step <= 0 || system.rank_at(depth + 1) <= system.rank_at(depth))
      problems.push_back(
          "k-ary tail requires strictly growing ranks beyond the explicit depth");
  }

  if (!problems.empty()) {
    std::ostringstream os;
    os << "invalid tree (" << problems.size() << " violation(s)): ";
    for (size_t i = 0; i < problems.size(); ++i) {
      if (i) os << "; ";
      os << problems[i];
    }
    raise(ErrorKind::InvalidTree, os.str());
  }

  TreeSet t;
  t.system_ = std::move(system);
  t.levels_ = std::move(levels);
  t.tail_ = tail;
  t.systems_ = std::move(systems);
  t.children_ = std::move(children);
  return t;
}

void TreeSet::check_ref(NodeRef ref) const {
  if (ref.level < 1 || ref.level > depth() || ref.index < 0 ||
      ref.index >= level_size(ref.level)) {
    std::ostringstream os;
    os << "unknown node: level " << ref.level << " index " << ref.index;
    raise(ErrorKind::Node, os.str());
  }
}

void TreeSet::check_path(const TreePath& path) const {
  if (static_cast<int>(path.idx.size()) != depth())
    raise(ErrorKind::Path, "path length does not match tree depth");
  for (int n = 1; n <= depth(); ++n) {
    NodeRef ref{n, path.idx[n - 1]};
    check_ref(ref);
    if (n > 1 && node(ref).parent != path.idx[n - 2])
      raise(ErrorKind::Path, "path is not parent-consistent");
  }
  if (path.tail_child < 0 || path.tail_child >= tail_.arity)
    raise(ErrorKind::Path, "path tail child out of range for tail rule");
}

long long TreeSet::leaf_count(NodeRef ref) const {
  check_ref(ref);
  if (ref.level == depth()) return 1;
  long long total = 0;
  for (int c : children(ref)) total += leaf_count(NodeRef{ref.level + 1, c});
  return total;
}

std::optional<long long> TreeSet::path_count(NodeRef ref) const {
  check_ref(ref);
  if (!tail_.chain()) return std::nullopt;
  return leaf_count(ref);
}

Weight TreeSet::path_weight(const TreePath& path, int level) const {
  check_path(path);
  if (level <= depth()) return node(NodeRef{level, path.idx[level - 1]}).weight;
  Weight w = node(NodeRef{depth(), path.idx.back()}).weight;
  for (int n = depth(); n < level; ++n)
    w = tail_child_weight(system_, w, n, tail_.chain() ? 0 : path.tail_child);
  return w;
}

std::vector<TreePath> TreeSet::leaf_paths() const {
  std::vector<TreePath> result;
  std::vector<int> stack;
  auto rec = [&](auto&& self, NodeRef ref) -> void {
    stack.push_back(ref.index);
    if (ref.level == depth()) {
      result.push_back(TreePath{stack, 0});
    } else {
      for (int c : children(ref)) self(self, NodeRef{ref.level + 1, c});
    }
    stack.pop_back();
  };
  for (int i = 0; i < level_size(1); ++i) rec(rec, NodeRef{1, i});
  return result;
}

bool operator==(const TreeSet& a, const TreeSet& b) {
  if (a.system_.dynkin != b.system_.dynkin) return false;
  if (a.depth() != b.depth()) return false;
  if (a.tail_.arity != b.tail_.arity) return false;
  for (int n = 1; n <= a.depth(); ++n) {
    if (a.level_size(n) != b.level_size(n)) return false;
    for (int i = 0; i < a.level_size(n); ++i) {
      const TreeNode& x = a.level(n)[i];
      const TreeNode& y = b.level(n)[i];
      if (x.weight != y.weight || x.parent != y.parent) return false;
    }
  }
  return true;
}

Cylinder cylinder(const TreeSet& tree, NodeRef ref) {
  tree.check_ref(ref);
  Cylinder cyl;
  cyl.root = ref;
  cyl.members.push_back({ref.index});
  for (int n = ref.level; n < tree.depth(); ++n) {
    std::vector<int> next;
    for (int i : cyl.members.back())
      for (int c : tree.children(NodeRef{n, i})) next.push_back(c);
    std::sort(next.begin(), next.end());
    cyl.members.push_back(std::move(next));
  }
  cyl.paths = tree.path_count(ref);
  return cyl;
}

bool is_isolated(const TreeSet& tree, const TreePath& path) {
  tree.check_path(path);
  for (int n = 1; n <= tree.depth(); ++n) {
    auto count = tree.path_count(NodeRef{n, path.idx[n - 1]});
    if (count && *count == 1) return true;
  }
  return false;
}

SplittingReport splitting_report(const TreeSet& tree) {
  SplittingReport report;
  report.splits.resize(tree.depth());
  for (int n = 1; n <= tree.depth(); ++n) {
    report.splits[n - 1].resize(tree.level_size(n));
    for (int i = 0; i < tree.level_size(n); ++i) {
      bool splits = (n < tree.depth())
                        ? tree.children(NodeRef{n, i}).size() >= 2
                        : tree.tail().arity >= 2;
      report.splits[n - 1][i] = splits;
    }
  }
  for (const TreePath& path : tree.leaf_paths()) {
    SplittingReport::PathEntry entry;
    entry.path = path;
    if (!tree.tail().chain()) {
      entry.stabilization = std::nullopt;  // splits forever under the rule
    } else {
      int last_split = 0;
      for (int n = 1; n <= tree.depth(); ++n)
        if (report.splits[n - 1][path.idx[n - 1]]) last_split = n;
      entry.stabilization = last_split + (last_split ? 1 : 0);
      if (*entry.stabilization == 0) entry.stabilization = 1;
    }
    report.paths.push_back(std::move(entry));
  }
  return report;
}

SmoothDecomposition decompose_smooth(const TreeSet& tree) {
  SmoothDecomposition result;
  if (!tree.tail().chain()) {
    // The k-ary rule appends strictly larger coordinates along the top
    // child, so node sup-norms grow without bound.
    result.smooth = false;
    TreePath path;
    path.idx.resize(tree.depth());
    NodeRef ref{1, 0};
    path.idx[0] = 0;
    for (int n = 1; n < tree.depth(); ++n) {
      ref = NodeRef{n + 1, tree.children(ref)[0]};
      path.idx[n] = ref.index;
    }
    path.tail_child = tree.tail().arity - 1;
    Weight w = tree.node(NodeRef{tree.depth(), path.idx.back()}).weight;
    result.witness.push_back({tree.depth(), w, sup_norm(w)});
    for (int n = tree.depth(); n < tree.depth() + 4; ++n) {
      w = tail_child_weight(tree.system(), w, n, path.tail_child);
      result.witness.push_back({n + 1, w, sup_norm(w)});
    }
    return result;
  }
  result.smooth = true;
  Rational bound = 0;
  for (int n = 1; n <= tree.depth(); ++n)
    for (const TreeNode& node : tree.level(n)) {
      Rational s = sup_norm(node.weight);
      if (s > bound) bound = s;
    }
  result.bound = bound;
  for (const TreePath& path : tree.leaf_paths()) {
    const Weight& leaf = tree.node(NodeRef{tree.depth(), path.idx.back()}).weight;
    std::vector<Rational> coords =
        to_fundamental_coords(tree.system_at(tree.depth()), leaf);
    ProfiniteWeight mu;
    for (const Rational& c : coords) {
      if (denominator(c) != 1 || c < 0)
        raise(ErrorKind::RealizationBug, "leaf weight not dominant integral");
      mu.prefix.push_back(static_cast<long long>(numerator(c)));
    }
    mu.tail = ProfiniteWeight::Tail::Zero;
    result.summands.push_back(std::move(mu));
  }
  return result;
}

}  // namespace limcone
