#pragma once

#include <string>
#include <vector>

#include "limcone/rational.hpp"

namespace limcone {

// Classical Dynkin types of restricted root systems.  D is accepted from
// rank 2 and C from rank 1 even though the diagram tables start at r >= 4
// resp. r >= 3; the low-rank systems are kept as distinct labeled systems
// (C_2 and B_2 are isomorphic but not identified here).
enum class Dynkin { A, B, C, D };

char dynkin_letter(Dynkin d);
Dynkin parse_dynkin(const std::string& s);
int min_rank(Dynkin d);

// Exact functional on a_n in the e-basis.  A-type weights live in R^{r+1}
// and are equivalence classes modulo the all-ones vector; two A-type
// weights compare equal iff their difference is a constant vector.
struct Weight {
  Dynkin dynkin = Dynkin::A;
  int rank = 0;
  std::vector<Rational> coords;  // length rank, or rank+1 for A

  Weight() = default;
  Weight(Dynkin d, int r, std::vector<Rational> c);

  int dim() const { return dynkin == Dynkin::A ? rank + 1 : rank; }
  static Weight zero(Dynkin d, int r);

  // A-type: representative with first coordinate 0; identity otherwise.
  Weight canonical() const;

  friend bool operator==(const Weight& a, const Weight& b);
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b);
};

std::string to_string(const Weight& w);

// Standard Euclidean pairing on R^r (R^{r+1} for A).  Well-defined on
// A-type classes only when one side annihilates the all-ones vector, which
// holds for every root; callers pairing two general A-type weights get the
// canonical-representative pairing.
Rational inner(const Weight& a, const Weight& b);

// Classical root datum at finite rank with the increasing-coefficient
// conventions: positive roots are the indivisible set, simple roots are
// numbered with alpha_1 at the right end of the diagram, and fundamental
// weights satisfy <xi_i, alpha_j>/<alpha_j, alpha_j> = delta_ij.
struct RestrictedRootSystem {
  Dynkin dynkin;
  int rank;
  std::vector<Weight> positive_roots;
  std::vector<Weight> simple_roots;
  std::vector<Weight> fundamental_weights;
};

RestrictedRootSystem build_system(Dynkin dynkin, int rank);

// Cartan-Helgason dominance test: <lambda,alpha>/<alpha,alpha> is a
// nonnegative integer for every positive root.
bool is_dominant_integral(const RestrictedRootSystem& sys, const Weight& w);

// Coordinates of lambda in the fundamental-weight basis (exact; c_j =
// <lambda, alpha_j>/<alpha_j, alpha_j>), and the inverse.
std::vector<Rational> to_fundamental_coords(const RestrictedRootSystem& sys,
                                            const Weight& w);
Weight from_fundamental_coords(const RestrictedRootSystem& sys,
                               const std::vector<Rational>& coords);

}  // namespace limcone
