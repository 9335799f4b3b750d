#include "limcone/rootsys.hpp"

#include <sstream>

#include "limcone/errors.hpp"
#include "limcone/linalg.hpp"

namespace limcone {

char dynkin_letter(Dynkin d) {
  switch (d) {
    case Dynkin::A: return 'A';
    case Dynkin::B: return 'B';
    case Dynkin::C: return 'C';
    case Dynkin::D: return 'D';
  }
  return '?';
}

Dynkin parse_dynkin(const std::string& s) {
  if (s == "A") return Dynkin::A;
  if (s == "B") return Dynkin::B;
  if (s == "C") return Dynkin::C;
  if (s == "D") return Dynkin::D;
  raise(ErrorKind::Parse, "unknown Dynkin type: " + s);
}

int min_rank(Dynkin d) { return d == Dynkin::D ? 2 : 1; }

Weight::Weight(Dynkin d, int r, std::vector<Rational> c)
    : dynkin(d), rank(r), coords(std::move(c)) {
  if (static_cast<int>(coords.size()) != dim())
    raise(ErrorKind::Shape, "weight coordinate length mismatch");
}

Weight Weight::zero(Dynkin d, int r) {
  return Weight(d, r, std::vector<Rational>(d == Dynkin::A ? r + 1 : r));
}

Weight Weight::canonical() const {
  if (dynkin != Dynkin::A || coords.empty() || coords[0] == 0) return *this;
  Weight w = *this;
  Rational shift = w.coords[0];
  for (Rational& c : w.coords) c -= shift;
  return w;
}

bool operator==(const Weight& a, const Weight& b) {
  if (a.dynkin != b.dynkin || a.rank != b.rank) return false;
  if (a.dynkin != Dynkin::A) return a.coords == b.coords;
  return a.canonical().coords == b.canonical().coords;
}

bool operator<(const Weight& a, const Weight& b) {
  if (a.dynkin != b.dynkin) return a.dynkin < b.dynkin;
  if (a.rank != b.rank) return a.rank < b.rank;
  return a.canonical().coords < b.canonical().coords;
}

std::string to_string(const Weight& w) {
  const Weight c = w.canonical();
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.coords.size(); ++i) {
    if (i) os << ",";
    os << c.coords[i].str();
  }
  os << ")";
  return os.str();
}

Rational inner(const Weight& a, const Weight& b) {
  const Weight ca = a.canonical(), cb = b.canonical();
  if (ca.coords.size() != cb.coords.size())
    raise(ErrorKind::Shape, "inner product of mismatched weights");
  Rational s = 0;
  for (size_t i = 0; i < ca.coords.size(); ++i) s += ca.coords[i] * cb.coords[i];
  return s;
}

namespace {

Weight basis_vector(Dynkin d, int rank, int i, long coeff = 1) {
  Weight w = Weight::zero(d, rank);
  w.coords[i] = coeff;
  return w;
}

std::vector<Weight> positive_roots_of(Dynkin d, int r) {
  std::vector<Weight> roots;
  const int dim = (d == Dynkin::A) ? r + 1 : r;
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < j; ++i) {
      Weight ediff = Weight::zero(d, r);
      ediff.coords[j] = 1;
      ediff.coords[i] = -1;
      roots.push_back(ediff);  // e_j - e_i, i < j
      if (d == Dynkin::B || d == Dynkin::C || d == Dynkin::D) {
        Weight esum = Weight::zero(d, r);
        esum.coords[j] = 1;
        esum.coords[i] = 1;
        roots.push_back(esum);  // e_j + e_i
      }
    }
  }
  if (d == Dynkin::B)
    for (int i = 0; i < r; ++i) roots.push_back(basis_vector(d, r, i, 1));
  if (d == Dynkin::C)
    for (int i = 0; i < r; ++i) roots.push_back(basis_vector(d, r, i, 2));
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Weight> simple_roots_of(Dynkin d, int r) {
  std::vector<Weight> simple;
  switch (d) {
    case Dynkin::A:
      for (int j = 0; j < r; ++j) {
        Weight a = Weight::zero(d, r);
        a.coords[j + 1] = 1;
        a.coords[j] = -1;
        simple.push_back(a);  // alpha_j = e_{j+1} - e_j
      }
      break;
    case Dynkin::B:
    case Dynkin::C: {
      simple.push_back(basis_vector(d, r, 0, d == Dynkin::B ? 1 : 2));
      for (int j = 1; j < r; ++j) {
        Weight a = Weight::zero(d, r);
        a.coords[j] = 1;
        a.coords[j - 1] = -1;
        simple.push_back(a);
      }
      break;
    }
    case Dynkin::D: {
      Weight a1 = Weight::zero(d, r);
      a1.coords[0] = 1;
      a1.coords[1] = 1;
      simple.push_back(a1);  // alpha_1 = e_1 + e_2
      Weight a2 = Weight::zero(d, r);
      a2.coords[0] = -1;
      a2.coords[1] = 1;
      simple.push_back(a2);  // alpha_2 = e_2 - e_1
      for (int j = 2; j < r; ++j) {
        Weight a = Weight::zero(d, r);
        a.coords[j] = 1;
        a.coords[j - 1] = -1;
        simple.push_back(a);
      }
      break;
    }
  }
  return simple;
}

// Solves <xi_i, alpha_j> = delta_ij <alpha_j, alpha_j> exactly.  For A-type
// the unknown lives on the quotient; the representative with first
// coordinate 0 is computed.
std::vector<Weight> solve_fundamental_weights(
    Dynkin d, int r, const std::vector<Weight>& simple) {
  const int unknowns = r;  // A-type: coords 2..r+1 of the canonical rep
  std::vector<Weight> result;
  for (int i = 0; i < r; ++i) {
    Mat<Rational> m(r, unknowns);
    std::vector<Rational> rhs(r);
    for (int j = 0; j < r; ++j) {
      const Weight& a = simple[j];
      for (int u = 0; u < unknowns; ++u) {
        int coord = (d == Dynkin::A) ? u + 1 : u;
        m(j, u) = a.coords[coord];
      }
      rhs[j] = (i == j) ? inner(a, a) : Rational(0);
    }
    auto x = solve(m, rhs);
    if (!x) raise(ErrorKind::RealizationBug, "fundamental weight solve failed");
    Weight w = Weight::zero(d, r);
    for (int u = 0; u < unknowns; ++u)
      w.coords[(d == Dynkin::A) ? u + 1 : u] = (*x)[u];
    result.push_back(w);
  }
  return result;
}

}  // namespace

RestrictedRootSystem build_system(Dynkin dynkin, int rank) {
  if (rank < min_rank(dynkin)) {
    std::ostringstream os;
    os << "rank " << rank << " out of range for type " << dynkin_letter(dynkin);
    raise(ErrorKind::Rank, os.str());
  }
  RestrictedRootSystem sys;
  sys.dynkin = dynkin;
  sys.rank = rank;
  sys.positive_roots = positive_roots_of(dynkin, rank);
  sys.simple_roots = simple_roots_of(dynkin, rank);
  sys.fundamental_weights =
      solve_fundamental_weights(dynkin, rank, sys.simple_roots);
  return sys;
}

namespace {
void check_shape(const RestrictedRootSystem& sys, const Weight& w) {
  if (w.dynkin != sys.dynkin || w.rank != sys.rank)
    raise(ErrorKind::Shape, "weight does not match root system shape");
}
}  // namespace

bool is_dominant_integral(const RestrictedRootSystem& sys, const Weight& w) {
  check_shape(sys, w);
  for (const Weight& a : sys.positive_roots) {
    Rational q = inner(w, a) / inner(a, a);
    if (q < 0 || denominator(q) != 1) return false;
  }
  return true;
}

std::vector<Rational> to_fundamental_coords(const RestrictedRootSystem& sys,
                                            const Weight& w) {
  check_shape(sys, w);
  std::vector<Rational> c;
  c.reserve(sys.rank);
  for (const Weight& a : sys.simple_roots) c.push_back(inner(w, a) / inner(a, a));
  return c;
}

Weight from_fundamental_coords(const RestrictedRootSystem& sys,
                               const std::vector<Rational>& coords) {
  if (static_cast<int>(coords.size()) != sys.rank)
    raise(ErrorKind::Shape, "fundamental coordinate length mismatch");
  Weight w = Weight::zero(sys.dynkin, sys.rank);
  for (int i = 0; i < sys.rank; ++i)
    for (int u = 0; u < w.dim(); ++u)
      w.coords[u] += coords[i] * sys.fundamental_weights[i].coords[u];
  return w;
}

}  // namespace limcone
