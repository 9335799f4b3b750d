#include <map>
#include <set>

#include "doctest.h"
#include "limcone/errors.hpp"
#include "limcone/matrixlie.hpp"

using namespace limcone;

namespace {
std::vector<Rational> rv(std::vector<long> v) {
  return std::vector<Rational>(v.begin(), v.end());
}
}  // namespace

TEST_CASE("row 8: su(n)/so(n)") {
  Realization real = realize(RowId::R8, 3);
  verify_realization(real);
  CHECK(real.dim_u() == 8);  // su(3)
  EigenSplit split = eigensplit(real);
  CHECK(split.k_basis.size() == 3);  // so(3)
  CHECK(split.p_basis.size() == 5);
  CHECK(real.rank == 2);
  CHECK(centralizer_m(real).empty());  // m = 0

  Realization r2 = realize(RowId::R8, 2);
  EigenSplit split2 = eigensplit(r2);
  CHECK(split2.k_basis.size() == 1);
  CHECK(split2.p_basis.size() == 2);
}

TEST_CASE("row 8 root decomposition is A_2 with multiplicity one") {
  Realization real = realize(RowId::R8, 3);
  RootDecomposition decomp = restricted_root_decomposition(real);
  CHECK(decomp.detected_type == Dynkin::A);
  CHECK(decomp.spaces.size() == 6);
  for (const RootSpace& s : decomp.spaces) CHECK(s.multiplicity() == 1);
  CHECK(decomp.dim_m == 0);
  CHECK(decomp.dim_a == 2);
}

TEST_CASE("row 1: pairs with diagonal torus centralizer") {
  Realization real = realize(RowId::R1, 3);
  verify_realization(real);
  CHECK(real.dim_u() == 16);  // su(3) + su(3)
  EigenSplit split = eigensplit(real);
  CHECK(split.k_basis.size() == 8);
  CHECK(split.p_basis.size() == 8);
  CHECK(centralizer_m(real).size() == 2);  // diagonal torus of su(3)

  RootDecomposition decomp = restricted_root_decomposition(realize(RowId::R1, 2));
  CHECK(decomp.detected_type == Dynkin::A);
  REQUIRE(decomp.spaces.size() == 2);  // A_1: +-(e_2 - e_1)
  for (const RootSpace& s : decomp.spaces) CHECK(s.multiplicity() == 2);
}

TEST_CASE("row 6_2: i p is the off-diagonal block") {
  Realization real = realize(RowId::R6_2, 2);
  verify_realization(real);
  CHECK(real.dim_u() == 6);  // so(4)
  EigenSplit split = eigensplit(real);
  CHECK(split.k_basis.size() == 2);
  CHECK(split.p_basis.size() == 4);
  // so(n,n) is split: the decomposition is D_2 with multiplicity one and
  // m = 0 (the table's B_n entry does not match its own realization)
  RootDecomposition decomp = restricted_root_decomposition(real);
  CHECK(decomp.detected_type == Dynkin::D);
  CHECK(decomp.dim_m == 0);
  for (const RootSpace& s : decomp.spaces) CHECK(s.multiplicity() == 1);
}

TEST_CASE("row 11: type C with trivial m") {
  Realization real = realize(RowId::R11, 2);
  verify_realization(real);
  RootDecomposition decomp = restricted_root_decomposition(real);
  CHECK(decomp.detected_type == Dynkin::C);
  CHECK(decomp.dim_m == 0);
  CHECK(decomp.dim_a == 2);
  // rank-nullity bookkeeping: root space dims + dim m + dim a = dim u
  int total = decomp.dim_m + decomp.dim_a;
  for (const RootSpace& s : decomp.spaces) total += s.multiplicity();
  CHECK(total == real.dim_u());
}

TEST_CASE("expected types and multiplicities across the table") {
  struct Expect {
    RowId row;
    int level;
    Dynkin type;
    int rank;
  };
  const std::vector<Expect> cases = {
      {RowId::R2, 2, Dynkin::B, 2},   {RowId::R3, 2, Dynkin::D, 2},
      {RowId::R4, 2, Dynkin::C, 2},   {RowId::R5_1, 4, Dynkin::C, 2},
      {RowId::R5_2, 2, Dynkin::C, 2}, {RowId::R6_1, 5, Dynkin::B, 2},
      {RowId::R7_1, 4, Dynkin::C, 2}, {RowId::R7_2, 2, Dynkin::C, 2},
      {RowId::R9, 3, Dynkin::A, 2},   {RowId::R10_1, 2, Dynkin::C, 2},
      {RowId::R10_2, 2, Dynkin::C, 2},
  };
  for (const Expect& e : cases) {
    CAPTURE(row_name(e.row));
    Realization real = realize(e.row, e.level);
    RootDecomposition decomp = restricted_root_decomposition(real);
    CHECK(real.rank == e.rank);
    CHECK(decomp.detected_type == e.type);
    int total = decomp.dim_m + decomp.dim_a;
    for (const RootSpace& s : decomp.spaces) total += s.multiplicity();
    CHECK(total == real.dim_u());
  }
}

TEST_CASE("row 9 multiplicities are four") {
  RootDecomposition decomp = restricted_root_decomposition(realize(RowId::R9, 2));
  REQUIRE(decomp.spaces.size() == 2);  // A_1
  for (const RootSpace& s : decomp.spaces) CHECK(s.multiplicity() == 4);
  CHECK(decomp.dim_m == 6);  // su(2) + su(2)
}

TEST_CASE("maximal abelian verdicts") {
  for (auto [row, level] : std::vector<std::pair<RowId, int>>{
           {RowId::R8, 3}, {RowId::R5_2, 2}, {RowId::R11, 2}, {RowId::R10_1, 2}}) {
    CAPTURE(row_name(row));
    CHECK(check_maximal_abelian(realize(row, level)).maximal);
  }
  // a deliberately shrunk a is rejected with a witness
  Realization small = realize(RowId::R8, 3);
  small.basis_ia.pop_back();
  small.avecs.pop_back();
  small.rank = 1;
  MaximalAbelianVerdict verdict = check_maximal_abelian(small);
  CHECK(!verdict.maximal);
  CHECK(verdict.witness.has_value());
}

TEST_CASE("theta with wrong J is rejected") {
  Realization real = realize(RowId::R5_2, 2);
  real.J(0, 0) = Gaussian(2);  // no longer an involution on u
  CHECK_THROWS_AS(verify_realization(real), Error);
}

TEST_CASE("jtilde picture agrees with the standard one") {
  for (auto [row, level] : std::vector<std::pair<RowId, int>>{
           {RowId::R9, 2}, {RowId::R10_1, 2}, {RowId::R10_2, 1}}) {
    CAPTURE(row_name(row));
    Realization std_pic = realize(row, level);
    Realization alt = realize_jtilde(row, level);
    verify_realization(alt);
    const int half = std_pic.ambient / 2;
    GMat e = e_sigma(half);
    CHECK(std_pic.J == e * alt.J * conj_transpose(e));
    RootDecomposition a = restricted_root_decomposition(std_pic);
    RootDecomposition b = restricted_root_decomposition(alt);
    REQUIRE(a.spaces.size() == b.spaces.size());
    for (size_t i = 0; i < a.spaces.size(); ++i) {
      CHECK(a.spaces[i].root == b.spaces[i].root);
      CHECK(a.spaces[i].multiplicity() == b.spaces[i].multiplicity());
    }
    CHECK(a.dim_m == b.dim_m);
  }
}

TEST_CASE("embedding forms") {
  CHECK(check_embedding_form(RowId::R5_2, 2).form == EmbedForm::FormOne);
  CHECK(check_embedding_form(RowId::R6_2, 2).form == EmbedForm::FormOne);
  CHECK(check_embedding_form(RowId::R7_2, 1).form == EmbedForm::FormOne);
  CHECK(check_embedding_form(RowId::R10_1, 2).form == EmbedForm::FormTwo);
  CHECK(check_embedding_form(RowId::R10_2, 1).form == EmbedForm::FormTwo);
  CHECK(check_embedding_form(RowId::R2, 1).form == EmbedForm::FormTwo);
  CHECK(check_embedding_form(RowId::R11, 2).form == EmbedForm::FormTwo);
  CHECK(check_embedding_form(RowId::R5_1, 4).form == EmbedForm::FormTwo);
  // the A-type rows carry a central shift: form two only up to C*Id
  CHECK(check_embedding_form(RowId::R9, 2).form == EmbedForm::FormThree);
  CHECK(check_embedding_form(RowId::R1, 2).form == EmbedForm::FormThree);
  CHECK(check_embedding_form(RowId::R8, 2).form == EmbedForm::FormThree);
}

TEST_CASE("admissibility verdicts") {
  AdmissibleVerdict v1 = check_admissible(RowId::R8, 2, 3);
  CHECK(v1.admissible);  // m = 0 trivially
  AdmissibleVerdict v2 = check_admissible(RowId::R1, 2, 3);
  CHECK(v2.admissible);  // diagonal torus inclusion
  AdmissibleVerdict v3 = check_admissible(RowId::R10_2, 1, 2);
  CHECK(v3.admissible);
  CHECK(!v3.certificate.empty());
}

TEST_CASE("dimension cap") {
  CHECK_THROWS_AS(realize(RowId::R2, 12), Error);
  CHECK_THROWS_AS(realize(RowId::R1, 1), Error);  // below the minimum level
}

TEST_CASE("inclusion maps embed u_k into u_m") {
  for (auto [row, level] : std::vector<std::pair<RowId, int>>{
           {RowId::R5_2, 1}, {RowId::R11, 1}, {RowId::R2, 1}, {RowId::R9, 2}}) {
    CAPTURE(row_name(row));
    Realization rk = realize(row, level);
    Realization rm = realize(row, level + 1);
    Span<Rational> um;
    std::vector<SparseVec<Rational>> flats;
    for (const GMat& x : rm.basis_u) {
      SparseVec<Rational> v;
      for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) {
          if (x(i, j).re != 0) v.emplace_back(2 * (i * x.cols() + j), x(i, j).re);
          if (x(i, j).im != 0) v.emplace_back(2 * (i * x.cols() + j) + 1, x(i, j).im);
        }
      um.insert(v);
    }
    for (const GMat& x : rk.basis_u) {
      GMat ix = include_matrix(row, level, level + 1, x);
      SparseVec<Rational> v;
      for (int i = 0; i < ix.rows(); ++i)
        for (int j = 0; j < ix.cols(); ++j) {
          if (ix(i, j).re != 0) v.emplace_back(2 * (i * ix.cols() + j), ix(i, j).re);
          if (ix(i, j).im != 0) v.emplace_back(2 * (i * ix.cols() + j) + 1, ix(i, j).im);
        }
      CHECK(um.contains(v));
    }
  }
}

TEST_CASE("row parsing") {
  CHECK(parse_row("5_1") == RowId::R5_1);
  CHECK(parse_row("10_2") == RowId::R10_2);
  CHECK(row_name(parse_row("11")) == "11");
  CHECK_THROWS_AS(parse_row("12"), Error);
  CHECK(all_rows().size() == 15);
}
