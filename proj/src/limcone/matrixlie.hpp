#pragma once

#include <optional>
#include <string>
#include <vector>

#include "limcone/linalg.hpp"
#include "limcone/rootsys.hpp"

namespace limcone {

using GMat = Mat<Gaussian>;

// Rows of the table of classical direct systems of irreducible Riemannian
// symmetric spaces.
enum class RowId {
  R1,     // SL(n,C):      SU(n) x SU(n) / diag,        A_{n-1}
  R2,     // Spin(2n+1,C): so(2n+1) pairs,              B_n
  R3,     // Spin(2n,C):   so(2n) pairs,                D_n
  R4,     // Sp(n,C):      Sp(n) x Sp(n) / diag,        C_n
  R5_1,   // SU(p,n-p):    SU(n) / S(U(p) x U(n-p)),    C_p   (p = 2 here)
  R5_2,   // SU(n,n):      SU(2n) / S(U(n) x U(n)),     C_n
  R6_1,   // SO_0(p,n-p):  SO(n) / SO(p) x SO(n-p),     B_p   (p = 2 here)
  R6_2,   // SO_0(n,n):    SO(2n) / SO(n) x SO(n)
  R7_1,   // Sp(p,n-p):    Sp(n) / Sp(p) x Sp(n-p),     C_p   (p = 2 here)
  R7_2,   // Sp(n,n):      Sp(2n) / Sp(n) x Sp(n),      C_n
  R8,     // SL(n,R):      SU(n) / SO(n),               A_{n-1}
  R9,     // SL(n,H):      SU(2n) / Sp(n),              A_{n-1}
  R10_1,  // SO*(4n):      SO(4n) / U(2n),              C_n
  R10_2,  // SO*(2(2n+1)): SO(4n+2) / U(2n+1),          C_n
  R11,    // Sp(n,R):      Sp(n) / U(n),                C_n
};

const std::vector<RowId>& all_rows();
std::string row_name(RowId row);
RowId parse_row(const std::string& s);

// Smallest level (the table's n) at which the row is a nondegenerate
// symmetric space within this artifact's conventions.
int row_min_level(RowId row);
// Ambient complex matrix size at a level.
int row_ambient(RowId row, int level);
// Rank of the restricted root system at a level.
int row_rank(RowId row, int level);
// Dynkin type of the indivisible restricted roots expected at the level.
Dynkin row_expected_type(RowId row);

// Dimension cap for realizations (ambient size); the LIMCONE_DIM_CAP
// environment variable overrides the default of 24.
int dimension_cap();

// Exact matrix realization of u_n with involution data and the chosen
// maximal abelian subspace.  theta(X) = J * X * J^{-1}, with an entrywise
// complex conjugation applied first when conjugate_entries is set (rows 8
// and 9 use an outer involution).  basis_ia spans i*a_n inside the
// -1 eigenspace; avecs[j] records the a-coordinates of basis_ia[j], fixing
// the exact change of basis to the e-coordinate conventions.
struct Realization {
  RowId row;
  int level = 1;
  int ambient = 0;
  bool conjugate_entries = false;
  GMat J;
  std::vector<GMat> basis_u;
  std::vector<GMat> basis_ia;
  int rank = 0;
  std::vector<std::vector<Rational>> avecs;
  bool a_type_quotient = false;  // rows 1, 8, 9
  std::string picture;           // "standard" or "jtilde"

  GMat theta(const GMat& x) const;
  int dim_u() const { return static_cast<int>(basis_u.size()); }
};

// Builds the realization in the picture whose inclusions are the corner or
// middle-corner embeddings.
Realization realize(RowId row, int level);

// Alternate picture for rows 9, 10_1, 10_2 (the antidiagonal involution
// J-tilde) together with the interleaving permutation E_sigma relating the
// two pictures by J = E JTilde E^{-1}.
bool row_has_jtilde_picture(RowId row);
Realization realize_jtilde(RowId row, int level);
GMat e_sigma(int half);

// Structural verification: theta involutive Lie algebra automorphism on
// basis pairs, bracket closure of u, basis_ia commuting inside the -1
// eigenspace and complex-linearly independent basis.  Throws
// RealizationBug on failure.
void verify_realization(const Realization& real);

struct EigenSplit {
  std::vector<GMat> k_basis;
  std::vector<GMat> p_basis;
};

// Exact +1/-1 eigenspace split of theta, with the bracket relations
// [k,k] in k, [k,p] in p, [p,p] in k checked on basis pairs.
EigenSplit eigensplit(const Realization& real);

// m_n = Z_{k_n}(a_n) by exact nullspace.
std::vector<GMat> centralizer_m(const Realization& real);

struct RootSpace {
  std::vector<Rational> root;  // e-coordinates (canonical rep for A-type)
  std::vector<GMat> basis;     // complex basis of the root space
  int multiplicity() const { return static_cast<int>(basis.size()); }
};

struct RootDecomposition {
  std::vector<RootSpace> spaces;  // nonzero roots, deterministic order
  std::vector<GMat> zero_space;   // m + a (complexified)
  int dim_m = 0;
  int dim_a = 0;
  std::optional<Dynkin> detected_type;  // of the indivisible subsystem
};

// Simultaneous exact eigenspace decomposition of ad(a_n) on the
// complexification of u_n.
RootDecomposition restricted_root_decomposition(const Realization& real);

// Positive roots: last nonzero e-coordinate positive.
bool root_is_positive(const std::vector<Rational>& root);

struct MaximalAbelianVerdict {
  bool maximal = false;
  std::optional<GMat> witness;  // centralizer element outside a
};

// Verifies Z_{p_n}(a_n) = a_n.
MaximalAbelianVerdict check_maximal_abelian(const Realization& real);

enum class EmbedForm { FormOne, FormTwo, FormThree, Fail };
std::string embed_form_name(EmbedForm f);

struct EmbedVerdict {
  EmbedForm form = EmbedForm::Fail;
  std::optional<GMat> offending;  // basis element violating the containment
};

// Index map of the inclusion u_from -> u_to (complex indices).
std::vector<int> inclusion_map(RowId row, int from_level, int to_level);
// Embeds a level-from matrix into the level-to ambient along the map.
GMat include_matrix(RowId row, int from_level, int to_level, const GMat& x);

// Block containment of a_{n+1} relative to a_n: the core block must lie in
// a_n (FormOne for the middle-corner rows, FormTwo for the corner rows) or
// in a_n + C*Id (FormThree, the A-type rows), with zero off-blocks.
EmbedVerdict check_embedding_form(RowId row, int level);

struct AdmissibleVerdict {
  bool admissible = false;
  std::string detail;
  std::vector<std::string> certificate;
  std::optional<GMat> witness;
};

// Verifies m_k inside m_m under the row's inclusion, and that every
// level-k positive root space maps into the span of level-m positive root
// spaces (the n_k in n_m part), all by exact linear solves.
AdmissibleVerdict check_admissible(const Realization& rk, const Realization& rm,
                                   const RootDecomposition& dk,
                                   const RootDecomposition& dm);
AdmissibleVerdict check_admissible(RowId row, int k, int m);

}  // namespace limcone
