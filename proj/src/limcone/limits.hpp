#pragma once

#include <optional>
#include <string>
#include <vector>

#include "limcone/rootsys.hpp"

namespace limcone {

// Propagated direct system of restricted root data: one Dynkin type at
// every level, ranks nondecreasing.  A finite prefix of ranks plus a tail
// rule ("constant" or "step<d>") describes the whole sequence.
struct DirectSystemSpec {
  Dynkin dynkin = Dynkin::C;
  std::vector<int> prefix;  // r_1 <= r_2 <= ...
  int step = 0;             // 0 = constant tail, d > 0 = r_{n+1} = r_n + d
  std::optional<std::string> table_row;

  int rank_at(int level) const;
  bool bounded_rank() const { return step == 0; }
  int stable_rank() const { return prefix.back(); }
  // First level at which the rank sequence has reached rank >= r (levels are
  // 1-based).  Requires r reachable.
  int level_with_rank(int r) const;
  void validate() const;
};

// Weight restriction a_n -> a_k: coordinate truncation (on the canonical
// representative for A-type).
Weight restrict_weight(const Weight& w, int k);

// ||lambda||_inf = max_i |lambda(e_i)| on the canonical representative.
Rational sup_norm(const Weight& w);

// Consistent family of dominant weights across all levels, encoded by
// fundamental-weight coefficients c_1, c_2, ... with a decidable tail.
struct ProfiniteWeight {
  enum class Tail { Zero, Constant, Affine };
  std::vector<long long> prefix;
  Tail tail = Tail::Zero;
  long long tail_c = 0;              // Constant tail value
  long long affine_a = 0, affine_b = 0;  // Affine tail: a + b*(j - len(prefix))

  long long coeff(int j) const;  // 1-based index
  bool finitely_supported() const;
  void validate() const;
};

// Level-n restriction sum_{j <= r_n} c_j xi_{n,j}.
Weight level_weight(const DirectSystemSpec& spec, const ProfiniteWeight& mu,
                    int level);

struct SmoothVerdict {
  bool smooth = false;
  Rational bound;  // witness bound M when smooth
  // when not smooth: (level, sup norm) samples with strictly increasing norms
  std::vector<std::pair<int, Rational>> witness;
};

// Smoothness of the highest-weight representation attached to mu: for
// unbounded-rank systems, smooth iff the coefficient tail is zero, with
// M = sup over levels of the restriction sup-norms; bounded-rank systems
// are always smooth.
SmoothVerdict is_smooth_weight(const DirectSystemSpec& spec,
                               const ProfiniteWeight& mu);

struct LimitRankVerdict {
  bool finite = false;
  int rank = 0;  // meaningful when finite
  std::string spherical_conical;
};

LimitRankVerdict limit_rank(const DirectSystemSpec& spec);

}  // namespace limcone
