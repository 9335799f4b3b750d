#include "limcone/json_io.hpp"

#include <string>

#include "limcone/errors.hpp"

namespace limcone {

json rational_to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  raise(ErrorKind::Parse, "expected a rational (integer or \"p/q\" string)");
}

json weight_to_json(const Weight& w) {
  const Weight c = w.canonical();
  json coords = json::array();
  for (const Rational& x : c.coords) coords.push_back(rational_to_json(x));
  return json{{"dynkin", std::string(1, dynkin_letter(w.dynkin))},
              {"rank", w.rank},
              {"coords", coords}};
}

json system_to_json(const DirectSystemSpec& spec) {
  json ranks{{"prefix", spec.prefix}};
  ranks["rule"] = spec.step == 0 ? "constant" : "step" + std::to_string(spec.step);
  json j{{"dynkin", std::string(1, dynkin_letter(spec.dynkin))}, {"ranks", ranks}};
  if (spec.table_row) j["table_row"] = *spec.table_row;
  return j;
}

DirectSystemSpec system_from_json(const json& j) {
  DirectSystemSpec spec;
  if (!j.is_object() || !j.contains("dynkin") || !j.contains("ranks"))
    raise(ErrorKind::Parse, "system spec needs \"dynkin\" and \"ranks\"");
  spec.dynkin = parse_dynkin(j.at("dynkin").get<std::string>());
  const json& ranks = j.at("ranks");
  if (ranks.is_array()) {
    spec.prefix = ranks.get<std::vector<int>>();
    spec.step = 0;
  } else {
    spec.prefix = ranks.at("prefix").get<std::vector<int>>();
    std::string rule = ranks.value("rule", "constant");
    if (rule == "constant") {
      spec.step = 0;
    } else if (rule.rfind("step", 0) == 0) {
      spec.step = std::stoi(rule.substr(4));
      if (spec.step <= 0) raise(ErrorKind::Parse, "step rule must be positive");
    } else {
      raise(ErrorKind::Parse, "unknown rank rule: " + rule);
    }
  }
  if (j.contains("table_row")) spec.table_row = j.at("table_row").get<std::string>();
  spec.validate();
  return spec;
}

json profinite_to_json(const ProfiniteWeight& mu) {
  json j{{"coeffs", mu.prefix}};
  switch (mu.tail) {
    case ProfiniteWeight::Tail::Zero: j["tail"] = "zero"; break;
    case ProfiniteWeight::Tail::Constant:
      j["tail"] = json{{"constant", mu.tail_c}};
      break;
    case ProfiniteWeight::Tail::Affine:
      j["tail"] = json{{"affine", {mu.affine_a, mu.affine_b}}};
      break;
  }
  return j;
}

ProfiniteWeight profinite_from_json(const json& j) {
  ProfiniteWeight mu;
  if (j.contains("coeffs")) mu.prefix = j.at("coeffs").get<std::vector<long long>>();
  if (!j.contains("tail") || j.at("tail") == "zero") {
    mu.tail = ProfiniteWeight::Tail::Zero;
  } else if (j.at("tail").is_object() && j.at("tail").contains("constant")) {
    mu.tail = ProfiniteWeight::Tail::Constant;
    mu.tail_c = j.at("tail").at("constant").get<long long>();
  } else if (j.at("tail").is_object() && j.at("tail").contains("affine")) {
    mu.tail = ProfiniteWeight::Tail::Affine;
    auto ab = j.at("tail").at("affine").get<std::vector<long long>>();
    if (ab.size() != 2) raise(ErrorKind::Parse, "affine tail needs [a,b]");
    mu.affine_a = ab[0];
    mu.affine_b = ab[1];
  } else {
    raise(ErrorKind::Parse,
          "tail must be \"zero\", {\"constant\":c} or {\"affine\":[a,b]}");
  }
  mu.validate();
  return mu;
}

json tree_to_json(const TreeSet& tree) {
  json levels = json::array();
  for (int n = 1; n <= tree.depth(); ++n) {
    json level = json::array();
    for (const TreeNode& node : tree.level(n)) {
      json coords = json::array();
      for (const Rational& x : node.weight.canonical().coords)
        coords.push_back(rational_to_json(x));
      json entry{{"w", coords}};
      entry["parent"] = node.parent < 0 ? json(nullptr) : json(node.parent);
      level.push_back(entry);
    }
    levels.push_back(level);
  }
  json tail = tree.tail().chain() ? json("chain") : json{{"arity", tree.tail().arity}};
  return json{{"system", system_to_json(tree.system())},
              {"levels", levels},
              {"tail", tail}};
}

TreeSet tree_from_json(const json& j) {
  if (!j.is_object() || !j.contains("system") || !j.contains("levels"))
    raise(ErrorKind::Parse, "tree spec needs \"system\" and \"levels\"");
  DirectSystemSpec spec = system_from_json(j.at("system"));
  std::vector<std::vector<TreeNode>> levels;
  int n = 0;
  for (const json& level : j.at("levels")) {
    ++n;
    std::vector<TreeNode> nodes;
    for (const json& entry : level) {
      TreeNode node;
      std::vector<Rational> coords;
      for (const json& c : entry.at("w")) coords.push_back(rational_from_json(c));
      node.weight = Weight(spec.dynkin, spec.rank_at(n), std::move(coords));
      const json& parent = entry.contains("parent") ? entry.at("parent") : json(nullptr);
      node.parent = parent.is_null() ? -1 : parent.get<int>();
      nodes.push_back(std::move(node));
    }
    levels.push_back(std::move(nodes));
  }
  TailRule tail;
  if (j.contains("tail")) {
    const json& t = j.at("tail");
    if (t.is_string() && t == "chain")
      tail.arity = 1;
    else if (t.is_object() && t.contains("arity"))
      tail.arity = t.at("arity").get<int>();
    else
      raise(ErrorKind::Parse, "tail must be \"chain\" or {\"arity\":k}");
  }
  return TreeSet::validate(std::move(spec), std::move(levels), tail);
}

CylinderMeasure measure_from_json(std::shared_ptr<const TreeSet> tree,
                                  const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    raise(ErrorKind::Parse, "measure spec needs \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rec") return build_rec_measure(std::move(tree));
  if (kind == "point") {
    TreePath x;
    x.idx = j.at("path").get<std::vector<int>>();
    x.tail_child = j.value("tail_child", 0);
    return build_point_measure(std::move(tree), x);
  }
  if (kind == "explicit") {
    CylinderMeasure mu;
    mu.tree = std::move(tree);
    for (const json& level : j.at("mass")) {
      std::vector<Rational> masses;
      for (const json& m : level) masses.push_back(rational_from_json(m));
      mu.mass.push_back(std::move(masses));
    }
    mu.tail.kind = MassTail::Kind::Uniform;
    MeasureReport report = validate_measure(mu);
    if (!report.ok) raise(ErrorKind::NotConsistent, report.what);
    return mu;
  }
  raise(ErrorKind::Parse, "measure kind must be rec, point or explicit");
}

json measure_to_json(const CylinderMeasure& mu) {
  json mass = json::array();
  for (const auto& level : mu.mass) {
    json l = json::array();
    for (const Rational& m : level) l.push_back(rational_to_json(m));
    mass.push_back(l);
  }
  json j{{"mass", mass}};
  if (mu.tail.kind == MassTail::Kind::Point) {
    j["tail"] = json{{"kind", "point"}, {"path", mu.tail.x.idx},
                     {"tail_child", mu.tail.x.tail_child}};
  } else {
    j["tail"] = json{{"kind", "uniform"}};
  }
  return j;
}

StepSection section_from_json(const json& j) {
  StepSection f;
  f.level = j.at("level").get<int>();
  for (const json& v : j.at("values")) {
    if (v.is_array()) {
      if (v.size() != 2) raise(ErrorKind::Parse, "complex value needs [re,im]");
      f.values.push_back(
          Gaussian(rational_from_json(v[0]), rational_from_json(v[1])));
    } else {
      f.values.push_back(Gaussian(rational_from_json(v)));
    }
  }
  return f;
}

TreePath path_from_json(const json& j) {
  TreePath p;
  if (j.is_array()) {
    p.idx = j.get<std::vector<int>>();
  } else {
    p.idx = j.at("idx").get<std::vector<int>>();
    p.tail_child = j.value("tail_child", 0);
  }
  return p;
}

json summands_to_json(const std::vector<IsotypicSummand>& summands) {
  json arr = json::array();
  for (const IsotypicSummand& s : summands)
    arr.push_back(json{{"weight", weight_to_json(s.weight)},
                       {"mass", rational_to_json(s.mass)},
                       {"multiplicity", s.multiplicity}});
  return arr;
}

json smooth_verdict_to_json(const SmoothVerdict& v) {
  json j{{"smooth", v.smooth}};
  if (v.smooth) {
    j["bound"] = rational_to_json(v.bound);
  } else {
    json w = json::array();
    for (const auto& [level, norm] : v.witness)
      w.push_back(json{{"level", level}, {"sup_norm", rational_to_json(norm)}});
    j["witness"] = w;
  }
  return j;
}

json decomposition_to_json(const SmoothDecomposition& d) {
  json j{{"smooth", d.smooth}};
  if (d.smooth) {
    j["bound"] = rational_to_json(d.bound);
    json arr = json::array();
    for (const ProfiniteWeight& mu : d.summands) arr.push_back(profinite_to_json(mu));
    j["summands"] = arr;
  } else {
    json w = json::array();
    for (const auto& node : d.witness)
      w.push_back(json{{"level", node.level},
                       {"weight", weight_to_json(node.weight)},
                       {"sup_norm", rational_to_json(node.norm)}});
    j["witness"] = w;
  }
  return j;
}

json splitting_to_json(const SplittingReport& report) {
  json nodes = json::array();
  for (size_t n = 0; n < report.splits.size(); ++n) {
    json level = json::array();
    for (bool s : report.splits[n]) level.push_back(s);
    nodes.push_back(level);
  }
  json paths = json::array();
  for (const auto& entry : report.paths) {
    json p{{"path", entry.path.idx}};
    p["stabilization"] =
        entry.stabilization ? json(*entry.stabilization) : json("infinite");
    paths.push_back(p);
  }
  return json{{"splits", nodes}, {"paths", paths}};
}

json comparison_to_json(const TreeComparison& cmp) {
  json j{{"same_tree", cmp.same_tree}};
  if (!cmp.same_tree) {
    j["first_mismatch_level"] = cmp.first_mismatch_level;
  } else {
    json cert = json::array();
    for (const LevelCertificate& c : cmp.certificate) {
      json weights = json::array();
      for (const Weight& w : c.weights) weights.push_back(weight_to_json(w));
      cert.push_back(json{{"level", c.level}, {"weights", weights}});
    }
    j["certificate"] = cert;
    switch (cmp.measure_class) {
      case MeasureClassFlag::IdenticalMeasures: j["measures"] = "identical"; break;
      case MeasureClassFlag::SameAtoms: j["measures"] = "same_atoms"; break;
      case MeasureClassFlag::AtomsDiffer: j["measures"] = "mutually_singular"; break;
    }
  }
  j["note"] = cmp.note;
  return j;
}

json root_system_to_json(const RestrictedRootSystem& sys) {
  auto weights = [](const std::vector<Weight>& list) {
    json arr = json::array();
    for (const Weight& w : list) arr.push_back(weight_to_json(w));
    return arr;
  };
  return json{{"dynkin", std::string(1, dynkin_letter(sys.dynkin))},
              {"rank", sys.rank},
              {"positive_roots", weights(sys.positive_roots)},
              {"simple_roots", weights(sys.simple_roots)},
              {"fundamental_weights", weights(sys.fundamental_weights)}};
}

json realization_report(const Realization& real, const RootDecomposition& decomp,
                        const EigenSplit& split) {
  json roots = json::array();
  for (const RootSpace& s : decomp.spaces) {
    json coords = json::array();
    for (const Rational& x : s.root) coords.push_back(rational_to_json(x));
    roots.push_back(json{{"root", coords}, {"multiplicity", s.multiplicity()}});
  }
  json j{{"row", row_name(real.row)},
         {"level", real.level},
         {"ambient", real.ambient},
         {"dim_u", real.dim_u()},
         {"dim_k", static_cast<int>(split.k_basis.size())},
         {"dim_p", static_cast<int>(split.p_basis.size())},
         {"dim_a", decomp.dim_a},
         {"dim_m", decomp.dim_m},
         {"roots", roots}};
  j["root_type"] = decomp.detected_type
                       ? json(std::string(1, dynkin_letter(*decomp.detected_type)) +
                              std::to_string(real.rank))
                       : json("unrecognized");
  return j;
}

json admissible_to_json(const AdmissibleVerdict& verdict) {
  json j{{"admissible", verdict.admissible}, {"detail", verdict.detail}};
  json cert = json::array();
  for (const std::string& line : verdict.certificate) cert.push_back(line);
  j["certificate"] = cert;
  return j;
}

}  // namespace limcone
