#include "doctest.h"
#include "limcone/linalg.hpp"

using namespace limcone;

TEST_CASE("exact solve and nullspace") {
  Mat<Rational> a(3, 3);
  a(0, 0) = 2; a(0, 1) = 1; a(0, 2) = 1;
  a(1, 0) = 1; a(1, 1) = 3; a(1, 2) = 2;
  a(2, 0) = 1; a(2, 1) = 0; a(2, 2) = 0;
  std::vector<Rational> b{Rational(4), Rational(5), Rational(6)};
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  for (int i = 0; i < 3; ++i) {
    Rational s = 0;
    for (int j = 0; j < 3; ++j) s += a(i, j) * (*x)[j];
    CHECK(s == b[i]);
  }

  Mat<Rational> singular(2, 3);
  singular(0, 0) = 1; singular(0, 1) = 2; singular(0, 2) = 3;
  singular(1, 0) = 2; singular(1, 1) = 4; singular(1, 2) = 6;
  auto basis = nullspace(singular);
  CHECK(basis.size() == 2);
  for (const auto& v : basis) {
    Rational s0 = v[0] + 2 * v[1] + 3 * v[2];
    CHECK(s0 == 0);
  }
  CHECK(rank_of(singular) == 1);
}

TEST_CASE("inconsistent system is detected") {
  Mat<Rational> a(2, 1);
  a(0, 0) = 1;
  a(1, 0) = 1;
  std::vector<Rational> b{Rational(1), Rational(2)};
  CHECK(!solve(a, b).has_value());
}

TEST_CASE("gaussian rational arithmetic") {
  Gaussian z(Rational(1), Rational(2));
  Gaussian w(Rational(0), Rational(-1));
  CHECK(to_string(z * w) == "2-1i");
  CHECK((z * z.conj()).re == z.norm2());
  CHECK((z / z) == Gaussian(1));
}

TEST_CASE("sparse span membership") {
  Span<Rational> span;
  std::vector<Rational> v1{1, 0, 2};
  std::vector<Rational> v2{0, 1, 1};
  std::vector<Rational> v3{1, 1, 3};  // v1 + v2
  CHECK(span.insert(sparsify(v1)));
  CHECK(span.insert(sparsify(v2)));
  CHECK(!span.insert(sparsify(v3)));
  CHECK(span.dim() == 2);
  CHECK(span.contains(sparsify(v3)));
  std::vector<Rational> out{0, 0, 1};
  CHECK(!span.contains(sparsify(out)));
}

TEST_CASE("matrix bracket") {
  Mat<Gaussian> x(2, 2), y(2, 2);
  x(0, 1) = Gaussian(1);
  y(1, 0) = Gaussian(1);
  Mat<Gaussian> h = bracket(x, y);
  CHECK(h(0, 0) == Gaussian(1));
  CHECK(h(1, 1) == Gaussian(Rational(-1)));
}
