#include "limcone/limits.hpp"

#include <sstream>

#include "limcone/errors.hpp"

namespace limcone {

int DirectSystemSpec::rank_at(int level) const {
  if (level < 1) raise(ErrorKind::Rank, "levels are 1-based");
  const int len = static_cast<int>(prefix.size());
  if (level <= len) return prefix[level - 1];
  return prefix.back() + step * (level - len);
}

int DirectSystemSpec::level_with_rank(int r) const {
  for (int n = 1; n <= static_cast<int>(prefix.size()); ++n)
    if (rank_at(n) >= r) return n;
  if (step == 0) {
    if (prefix.back() >= r) return static_cast<int>(prefix.size());
    raise(ErrorKind::Rank, "rank never reached in bounded system");
  }
  int n = static_cast<int>(prefix.size());
  while (rank_at(n) < r) ++n;
  return n;
}

void DirectSystemSpec::validate() const {
  if (prefix.empty()) raise(ErrorKind::System, "empty rank prefix");
  if (prefix.front() < min_rank(dynkin))
    raise(ErrorKind::Rank, "initial rank below accepted minimum");
  for (size_t i = 1; i < prefix.size(); ++i)
    if (prefix[i] < prefix[i - 1])
      raise(ErrorKind::System, "rank sequence must be nondecreasing");
  if (step < 0) raise(ErrorKind::System, "negative rank step");
}

Weight restrict_weight(const Weight& w, int k) {
  if (k > w.rank) raise(ErrorKind::Rank, "restriction target exceeds rank");
  if (k < 1) raise(ErrorKind::Rank, "restriction target must be >= 1");
  if (k == w.rank) return w;
  const Weight c = w.canonical();
  const int d = (w.dynkin == Dynkin::A) ? k + 1 : k;
  return Weight(w.dynkin, k,
                std::vector<Rational>(c.coords.begin(), c.coords.begin() + d));
}

Rational sup_norm(const Weight& w) {
  const Weight c = w.canonical();
  Rational m = 0;
  for (const Rational& x : c.coords) {
    Rational a = x < 0 ? Rational(-x) : x;
    if (a > m) m = a;
  }
  return m;
}

long long ProfiniteWeight::coeff(int j) const {
  if (j < 1) raise(ErrorKind::Rank, "coefficient indices are 1-based");
  const int len = static_cast<int>(prefix.size());
  if (j <= len) return prefix[j - 1];
  switch (tail) {
    case Tail::Zero: return 0;
    case Tail::Constant: return tail_c;
    case Tail::Affine: return affine_a + affine_b * (j - len);
  }
  return 0;
}

bool ProfiniteWeight::finitely_supported() const {
  if (tail == Tail::Constant && tail_c != 0) return false;
  if (tail == Tail::Affine && (affine_a != 0 || affine_b != 0)) return false;
  return true;
}

void ProfiniteWeight::validate() const {
  for (long long c : prefix)
    if (c < 0) raise(ErrorKind::System, "negative fundamental coefficient");
  if ((tail == Tail::Constant && tail_c < 0) ||
      (tail == Tail::Affine && (affine_a < 0 || affine_b < 0)))
    raise(ErrorKind::System, "negative fundamental coefficient in tail");
}

Weight level_weight(const DirectSystemSpec& spec, const ProfiniteWeight& mu,
                    int level) {
  const int r = spec.rank_at(level);
  RestrictedRootSystem sys = build_system(spec.dynkin, r);
  std::vector<Rational> coords(r);
  for (int j = 1; j <= r; ++j) coords[j - 1] = mu.coeff(j);
  return from_fundamental_coords(sys, coords);
}

SmoothVerdict is_smooth_weight(const DirectSystemSpec& spec,
                               const ProfiniteWeight& mu) {
  mu.validate();
  SmoothVerdict v;
  const int probe_levels = 10;
  if (spec.bounded_rank()) {
    // dim a_infty < infty: every highest-weight representation is smooth.
    v.smooth = true;
    v.bound = sup_norm(level_weight(spec, mu, static_cast<int>(spec.prefix.size())));
    return v;
  }
  if (mu.finitely_supported()) {
    v.smooth = true;
    int support = 0;
    for (int j = static_cast<int>(mu.prefix.size()); j >= 1; --j)
      if (mu.coeff(j) != 0) {
        support = j;
        break;
      }
    // The restriction norms stabilize once r_n covers the support; take the
    // sup over the probe window as the witness bound.
    int stable = spec.level_with_rank(std::max(support, 1));
    Rational m = 0;
    for (int n = 1; n <= std::max(stable + 1, probe_levels); ++n) {
      Rational s = sup_norm(level_weight(spec, mu, n));
      if (s > m) m = s;
    }
    v.bound = m;
    return v;
  }
  v.smooth = false;
  Rational last(-1);
  for (int n = 1; n <= probe_levels; ++n) {
    Rational s = sup_norm(level_weight(spec, mu, n));
    if (s > last) {
      v.witness.emplace_back(n, s);
      last = s;
    }
  }
  return v;
}

LimitRankVerdict limit_rank(const DirectSystemSpec& spec) {
  spec.validate();
  LimitRankVerdict v;
  v.finite = spec.bounded_rank();
  if (v.finite) {
    v.rank = spec.stable_rank();
    v.spherical_conical = "spherical <=> conical";
  } else {
    v.spherical_conical =
        "no irreducible representation is both spherical and conical";
  }
  return v;
}

}  // namespace limcone
