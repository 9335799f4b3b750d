#include "limcone/matrixlie.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "limcone/errors.hpp"

namespace limcone {

namespace {

const Gaussian kI(Rational(0), Rational(1));

GMat zeros(int n) { return GMat(n, n); }

GMat swap_matrix(int half) {
  GMat j(2 * half, 2 * half);
  for (int i = 0; i < half; ++i) {
    j(i, half + i) = Gaussian(1);
    j(half + i, i) = Gaussian(1);
  }
  return j;
}

GMat signature_matrix(int plus, int minus) {
  GMat j(plus + minus, plus + minus);
  for (int i = 0; i < plus; ++i) j(i, i) = Gaussian(1);
  for (int i = 0; i < minus; ++i) j(plus + i, plus + i) = Gaussian(-1);
  return j;
}

// diag of 2x2 blocks [[0,-1],[1,0]].
GMat kblock_matrix(int blocks) {
  GMat j(2 * blocks, 2 * blocks);
  for (int b = 0; b < blocks; ++b) {
    j(2 * b, 2 * b + 1) = Gaussian(-1);
    j(2 * b + 1, 2 * b) = Gaussian(1);
  }
  return j;
}

// [[0, -I],[I, 0]].
GMat jtilde_matrix(int half) {
  GMat j(2 * half, 2 * half);
  for (int i = 0; i < half; ++i) {
    j(i, half + i) = Gaussian(-1);
    j(half + i, i) = Gaussian(1);
  }
  return j;
}

std::vector<GMat> su_basis(int d) {
  std::vector<GMat> basis;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      GMat x = zeros(d);
      x(a, b) = Gaussian(1);
      x(b, a) = Gaussian(-1);
      basis.push_back(x);
      GMat y = zeros(d);
      y(a, b) = kI;
      y(b, a) = kI;
      basis.push_back(y);
    }
  for (int a = 0; a + 1 < d; ++a) {
    GMat h = zeros(d);
    h(a, a) = kI;
    h(a + 1, a + 1) = -kI;
    basis.push_back(h);
  }
  return basis;
}

std::vector<GMat> so_basis(int d) {
  std::vector<GMat> basis;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      GMat x = zeros(d);
      x(a, b) = Gaussian(1);
      x(b, a) = Gaussian(-1);
      basis.push_back(x);
    }
  return basis;
}

// Quaternion units as 2x2 complex blocks.
struct QUnit {
  Gaussian e00, e01, e10, e11;
};
QUnit qunit(int kind) {
  switch (kind) {
    case 0: return {Gaussian(1), Gaussian(0), Gaussian(0), Gaussian(1)};   // 1
    case 1: return {kI, Gaussian(0), Gaussian(0), -kI};                    // i
    case 2: return {Gaussian(0), Gaussian(1), Gaussian(-1), Gaussian(0)};  // j
    default: return {Gaussian(0), kI, kI, Gaussian(0)};                    // k
  }
}

void put_qblock(GMat& m, int qa, int qb, const QUnit& u, int sign = 1) {
  Gaussian s(sign);
  m(2 * qa, 2 * qb) += s * u.e00;
  m(2 * qa, 2 * qb + 1) += s * u.e01;
  m(2 * qa + 1, 2 * qb) += s * u.e10;
  m(2 * qa + 1, 2 * qb + 1) += s * u.e11;
}

// sp(d) as d x d quaternion anti-hermitian matrices, entries as 2x2 blocks.
std::vector<GMat> sp_entry_basis(int d) {
  std::vector<GMat> basis;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (int kind = 0; kind < 4; ++kind) {
        GMat x = zeros(2 * d);
        put_qblock(x, a, b, qunit(kind));
        // conj(1) = 1, conj(i/j/k) = negative
        put_qblock(x, b, a, qunit(kind), kind == 0 ? -1 : 1);
        basis.push_back(x);
      }
  for (int a = 0; a < d; ++a)
    for (int kind = 1; kind < 4; ++kind) {
      GMat x = zeros(2 * d);
      put_qblock(x, a, a, qunit(kind));
      basis.push_back(x);
    }
  return basis;
}

// sp(d) in the global 2d x 2d form {(A B; -conj(B) conj(A))}.
std::vector<GMat> sp_global_basis(int d) {
  std::vector<GMat> basis;
  auto push_a = [&](int a, int b, Gaussian v) {
    // A anti-hermitian: entry v at (a,b), -conj(v) at (b,a); bottom-right
    // block carries conj(A).
    GMat x = zeros(2 * d);
    x(a, b) = v;
    x(d + a, d + b) = v.conj();
    if (a != b) {
      x(b, a) = -v.conj();
      x(d + b, d + a) = -v;
    }
    basis.push_back(x);
  };
  auto push_b = [&](int a, int b, Gaussian v) {
    // B symmetric: top-right B, bottom-left -conj(B).
    GMat x = zeros(2 * d);
    x(a, d + b) = v;
    x(b, d + a) = v;
    x(d + b, a) = -v.conj();
    x(d + a, b) = -v.conj();
    basis.push_back(x);
  };
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      push_a(a, b, Gaussian(1));
      push_a(a, b, kI);
    }
  for (int a = 0; a < d; ++a) push_a(a, a, kI);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      push_b(a, b, Gaussian(1));
      push_b(a, b, kI);
    }
  return basis;
}

// Pair layout u = l + l as block-diagonal matrices.
std::vector<GMat> pair_basis(const std::vector<GMat>& factor) {
  const int d = factor.front().rows();
  std::vector<GMat> basis;
  for (const GMat& x : factor) {
    GMat first(2 * d, 2 * d), second(2 * d, 2 * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        first(i, j) = x(i, j);
        second(d + i, d + j) = x(i, j);
      }
    basis.push_back(first);
    basis.push_back(second);
  }
  return basis;
}

GMat pair_matrix(const GMat& x, const GMat& y) {
  const int d = x.rows();
  GMat m(2 * d, 2 * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      m(i, j) = x(i, j);
      m(d + i, d + j) = y(i, j);
    }
  return m;
}

GMat scalar_matrix(int n, Gaussian v) {
  GMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = v;
  return m;
}

struct RowInfo {
  RowId id;
  const char* name;
  int min_level;
  Dynkin type;
  bool a_quotient;
  bool form_one_inclusion;  // middle-corner rows 5_2, 6_2, 7_2
};

const std::vector<RowInfo>& row_table() {
  static const std::vector<RowInfo> table = {
      {RowId::R1, "1", 2, Dynkin::A, true, false},
      {RowId::R2, "2", 1, Dynkin::B, false, false},
      {RowId::R3, "3", 2, Dynkin::D, false, false},
      {RowId::R4, "4", 1, Dynkin::C, false, false},
      {RowId::R5_1, "5_1", 4, Dynkin::C, false, false},
      {RowId::R5_2, "5_2", 1, Dynkin::C, false, true},
      {RowId::R6_1, "6_1", 5, Dynkin::B, false, false},
      {RowId::R6_2, "6_2", 2, Dynkin::D, false, true},
      {RowId::R7_1, "7_1", 4, Dynkin::C, false, false},
      {RowId::R7_2, "7_2", 1, Dynkin::C, false, true},
      {RowId::R8, "8", 2, Dynkin::A, true, false},
      {RowId::R9, "9", 2, Dynkin::A, true, false},
      {RowId::R10_1, "10_1", 1, Dynkin::C, false, false},
      {RowId::R10_2, "10_2", 1, Dynkin::C, false, false},
      {RowId::R11, "11", 1, Dynkin::C, false, false},
  };
  return table;
}

const RowInfo& info_of(RowId row) {
  for (const RowInfo& info : row_table())
    if (info.id == row) return info;
  raise(ErrorKind::Parse, "unknown table row");
}

}  // namespace

const std::vector<RowId>& all_rows() {
  static const std::vector<RowId> rows = [] {
    std::vector<RowId> r;
    for (const RowInfo& info : row_table()) r.push_back(info.id);
    return r;
  }();
  return rows;
}

std::string row_name(RowId row) { return info_of(row).name; }

RowId parse_row(const std::string& s) {
  for (const RowInfo& info : row_table())
    if (s == info.name) return info.id;
  raise(ErrorKind::Parse, "unknown table row: " + s);
}

int row_min_level(RowId row) { return info_of(row).min_level; }

int row_ambient(RowId row, int level) {
  switch (row) {
    case RowId::R1: return 2 * level;
    case RowId::R2: return 2 * (2 * level + 1);
    case RowId::R3: return 4 * level;
    case RowId::R4: return 4 * level;
    case RowId::R5_1: return level;
    case RowId::R5_2: return 2 * level;
    case RowId::R6_1: return level;
    case RowId::R6_2: return 2 * level;
    case RowId::R7_1: return 2 * level;
    case RowId::R7_2: return 4 * level;
    case RowId::R8: return level;
    case RowId::R9: return 2 * level;
    case RowId::R10_1: return 4 * level;
    case RowId::R10_2: return 4 * level + 2;
    case RowId::R11: return 2 * level;
  }
  return 0;
}

int row_rank(RowId row, int level) {
  switch (row) {
    case RowId::R1:
    case RowId::R8:
    case RowId::R9: return level - 1;
    case RowId::R5_1:
    case RowId::R6_1:
    case RowId::R7_1: return 2;
    default: return level;
  }
}

Dynkin row_expected_type(RowId row) { return info_of(row).type; }

int dimension_cap() {
  if (const char* env = std::getenv("LIMCONE_DIM_CAP")) {
    int cap = std::atoi(env);
    if (cap > 0) return cap;
  }
  return 24;
}

GMat Realization::theta(const GMat& x) const {
  GMat y = x;
  if (conjugate_entries) {
    for (int i = 0; i < y.rows(); ++i)
      for (int j = 0; j < y.cols(); ++j) y(i, j) = y(i, j).conj();
  }
  // every J here is unitary with entries in {0, +-1, +-i}: J^{-1} = J^*
  return J * y * conj_transpose(J);
}

namespace {

void check_level(RowId row, int level) {
  if (level < row_min_level(row)) {
    std::ostringstream os;
    os << "row " << row_name(row) << " starts at level " << row_min_level(row);
    raise(ErrorKind::Rank, os.str());
  }
  int n = row_ambient(row, level);
  if (n > dimension_cap()) {
    std::ostringstream os;
    os << "row " << row_name(row) << " level " << level << " ambient " << n
       << " exceeds cap " << dimension_cap();
    raise(ErrorKind::TooLarge, os.str());
  }
}

// a-basis plus coordinate vectors for the pair rows: H(f) = (h(f), -h(f)).
void pair_ia(Realization& real, int rank,
             const std::vector<std::vector<Rational>>& avecs,
             const std::function<GMat(const std::vector<Rational>&)>& h) {
  for (int j = 0; j < rank; ++j) {
    GMat hj = h(avecs[j]);
    GMat neg = Gaussian(Rational(-1)) * hj;
    real.basis_ia.push_back(pair_matrix(hj, neg));
  }
  real.avecs = avecs;
  real.rank = rank;
}

std::vector<std::vector<Rational>> unit_avecs(int rank) {
  std::vector<std::vector<Rational>> avecs(rank, std::vector<Rational>(rank));
  for (int j = 0; j < rank; ++j) avecs[j][j] = 1;
  return avecs;
}

// f_j = e_{j+1} - e_j on dim coordinates (A-type rows).
std::vector<std::vector<Rational>> difference_avecs(int dim) {
  std::vector<std::vector<Rational>> avecs(dim - 1, std::vector<Rational>(dim));
  for (int j = 0; j + 1 < dim; ++j) {
    avecs[j][j] = -1;
    avecs[j][j + 1] = 1;
  }
  return avecs;
}

GMat imag_diag(const std::vector<Rational>& a) {
  GMat m(static_cast<int>(a.size()), static_cast<int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i) m(i, i) = Gaussian(Rational(0), a[i]);
  return m;
}

// diag(0?, Jb(a_1), ..., Jb(a_r)) with Jb(x) = [[0,x],[-x,0]]; `offset` is
// 1 for odd orthogonal factors (the fixed coordinate sits first).
GMat jb_diag(int size, int offset, const std::vector<Rational>& a) {
  GMat m(size, size);
  for (size_t t = 0; t < a.size(); ++t) {
    int i = offset + 2 * static_cast<int>(t);
    m(i, i + 1) = Gaussian(a[t]);
    m(i + 1, i) = Gaussian(-a[t]);
  }
  return m;
}

GMat antidiag_corner(int half, int t) {
  // value 1 at (half-1-t, half+t), -1 transposed; the level-n antidiagonal
  // a-basis of the middle-corner rows.
  GMat m(2 * half, 2 * half);
  m(half - 1 - t, half + t) = Gaussian(1);
  m(half + t, half - 1 - t) = Gaussian(-1);
  return m;
}

GMat antidiag_corner_quat(int half, int t) {
  // same at the quaternion level: 2x2 identity blocks.
  GMat m(4 * half, 4 * half);
  int qa = half - 1 - t, qb = half + t;
  put_qblock(m, qa, qb, qunit(0));
  put_qblock(m, qb, qa, qunit(0), -1);
  return m;
}

}  // namespace

GMat e_sigma(int half) {
  GMat e(2 * half, 2 * half);
  for (int i = 0; i < half; ++i) {
    e(2 * i, i) = Gaussian(1);              // first half -> even positions
    e(2 * i + 1, half + i) = Gaussian(1);   // second half -> odd positions
  }
  return e;
}

bool row_has_jtilde_picture(RowId row) {
  return row == RowId::R9 || row == RowId::R10_1 || row == RowId::R10_2;
}

Realization realize(RowId row, int level) {
  check_level(row, level);
  Realization real;
  real.row = row;
  real.level = level;
  real.ambient = row_ambient(row, level);
  real.picture = "standard";
  real.a_type_quotient = info_of(row).a_quotient;
  const int n = level;

  switch (row) {
    case RowId::R1: {
      real.basis_u = pair_basis(su_basis(n));
      real.J = swap_matrix(n);
      pair_ia(real, n - 1, difference_avecs(n),
              [&](const std::vector<Rational>& f) { return imag_diag(f); });
      break;
    }
    case RowId::R2: {
      const int d = 2 * n + 1;
      real.basis_u = pair_basis(so_basis(d));
      real.J = swap_matrix(d);
      pair_ia(real, n, unit_avecs(n), [&](const std::vector<Rational>& f) {
        return jb_diag(d, 1, f);
      });
      break;
    }
    case RowId::R3: {
      const int d = 2 * n;
      real.basis_u = pair_basis(so_basis(d));
      real.J = swap_matrix(d);
      pair_ia(real, n, unit_avecs(n), [&](const std::vector<Rational>& f) {
        return jb_diag(d, 0, f);
      });
      break;
    }
    case RowId::R4: {
      const int d = 2 * n;  // complex size of one sp(n) factor
      real.basis_u = pair_basis(sp_entry_basis(n));
      real.J = swap_matrix(d);
      pair_ia(real, n, unit_avecs(n), [&](const std::vector<Rational>& f) {
        GMat h(d, d);
        for (size_t t = 0; t < f.size(); ++t) {
          h(2 * t, 2 * t) = Gaussian(Rational(0), f[t]);
          h(2 * t + 1, 2 * t + 1) = Gaussian(Rational(0), -f[t]);
        }
        return h;
      });
      break;
    }
    case RowId::R5_1: {
      const int p = 2, q = n - 2;
      real.basis_u = su_basis(n);
      real.J = signature_matrix(p, q);
      for (int t = 0; t < p; ++t) {
        GMat h(n, n);
        h(t, p + t) = Gaussian(1);
        h(p + t, t) = Gaussian(-1);
        real.basis_ia.push_back(h);
      }
      real.rank = p;
      real.avecs = unit_avecs(p);
      break;
    }
    case RowId::R5_2: {
      real.basis_u = su_basis(2 * n);
      real.J = signature_matrix(n, n);
      for (int t = 0; t < n; ++t) real.basis_ia.push_back(antidiag_corner(n, t));
      real.rank = n;
      real.avecs = unit_avecs(n);
      break;
    }
    case RowId::R6_1: {
      const int p = 2, q = n - 2;
      real.basis_u = so_basis(n);
      real.J = signature_matrix(p, q);
      for (int t = 0; t < p; ++t) {
        GMat h(n, n);
        h(t, p + t) = Gaussian(1);
        h(p + t, t) = Gaussian(-1);
        real.basis_ia.push_back(h);
      }
      real.rank = p;
      real.avecs = unit_avecs(p);
      break;
    }
    case RowId::R6_2: {
      real.basis_u = so_basis(2 * n);
      real.J = signature_matrix(n, n);
      for (int t = 0; t < n; ++t) real.basis_ia.push_back(antidiag_corner(n, t));
      real.rank = n;
      real.avecs = unit_avecs(n);
      break;
    }
    case RowId::R7_1: {
      const int p = 2, q = n - 2;
      real.basis_u = sp_entry_basis(n);
      real.J = signature_matrix(2 * p, 2 * q);
      for (int t = 0; t < p; ++t) {
        GMat h(2 * n, 2 * n);
        put_qblock(h, t, p + t, qunit(0));
        put_qblock(h, p + t, t, qunit(0), -1);
        real.basis_ia.push_back(h);
      }
      real.rank = p;
      real.avecs = unit_avecs(p);
      break;
    }
    case RowId::R7_2: {
      real.basis_u = sp_entry_basis(2 * n);
      real.J = signature_matrix(2 * n, 2 * n);
      for (int t = 0; t < n; ++t)
        real.basis_ia.push_back(antidiag_corner_quat(n, t));
      real.rank = n;
      real.avecs = unit_avecs(n);
      break;
    }
    case RowId::R8: {
      real.basis_u = su_basis(n);
      real.J = GMat::identity(n);
      real.conjugate_entries = true;
      auto avecs = difference_avecs(n);
      for (const auto& f : avecs) real.basis_ia.push_back(imag_diag(f));
      real.rank = n - 1;
      real.avecs = avecs;
      break;
    }
    case RowId::R9: {
      real.basis_u = su_basis(2 * n);
      real.J = kblock_matrix(n);
      real.conjugate_entries = true;
      auto avecs = difference_avecs(n);
      for (const auto& f : avecs) {
        std::vector<Rational> doubled(2 * n);
        for (int t = 0; t < n; ++t) doubled[2 * t] = doubled[2 * t + 1] = f[t];
        real.basis_ia.push_back(imag_diag(doubled));
      }
      real.rank = n - 1;
      real.avecs = avecs;
      break;
    }
    case RowId::R10_1:
    case RowId::R10_2: {
      Realization alt = realize_jtilde(row, level);
      const int half = real.ambient / 2;
      GMat e = e_sigma(half);
      GMat einv = conj_transpose(e);
      real.basis_u = alt.basis_u;  // same so(m), theta differs
      real.J = e * alt.J * einv;
      for (const GMat& h : alt.basis_ia)
        real.basis_ia.push_back(e * h * einv);
      real.rank = alt.rank;
      real.avecs = alt.avecs;
      break;
    }
    case RowId::R11: {
      real.basis_u = sp_global_basis(n);
      GMat j(2 * n, 2 * n);
      for (int i = 0; i < n; ++i) {
        j(i, i) = kI;
        j(n + i, n + i) = -kI;
      }
      real.J = j;
      for (int t = 0; t < n; ++t) {
        GMat h(2 * n, 2 * n);
        h(t, n + t) = Gaussian(1);
        h(n + t, t) = Gaussian(-1);
        real.basis_ia.push_back(h);
      }
      real.rank = n;
      real.avecs = unit_avecs(n);
      break;
    }
  }
  return real;
}

Realization realize_jtilde(RowId row, int level) {
  if (!row_has_jtilde_picture(row))
    raise(ErrorKind::Unsupported,
          "row " + row_name(row) + " has no J-tilde picture");
  check_level(row, level);
  Realization real;
  real.row = row;
  real.level = level;
  real.ambient = row_ambient(row, level);
  real.picture = "jtilde";
  real.a_type_quotient = info_of(row).a_quotient;
  const int n = level;

  if (row == RowId::R9) {
    real.basis_u = su_basis(2 * n);
    real.J = jtilde_matrix(n);
    real.conjugate_entries = true;
    auto avecs = difference_avecs(n);
    for (const auto& f : avecs) {
      std::vector<Rational> both(2 * n);
      for (int t = 0; t < n; ++t) both[t] = both[n + t] = f[t];
      real.basis_ia.push_back(imag_diag(both));
    }
    real.rank = n - 1;
    real.avecs = avecs;
    return real;
  }

  const int half = real.ambient / 2;  // 2n or 2n+1
  real.basis_u = so_basis(real.ambient);
  real.J = jtilde_matrix(half);
  const int offset = (row == RowId::R10_2) ? 1 : 0;
  for (int t = 0; t < n; ++t) {
    std::vector<Rational> f(n);
    f[t] = 1;
    GMat h(real.ambient, real.ambient);
    // +Jb blocks in the first half, -Jb in the second half
    int i = offset + 2 * t;
    h(i, i + 1) = Gaussian(1);
    h(i + 1, i) = Gaussian(-1);
    h(half + i, half + i + 1) = Gaussian(-1);
    h(half + i + 1, half + i) = Gaussian(1);
    real.basis_ia.push_back(h);
  }
  real.rank = n;
  real.avecs = unit_avecs(n);
  return real;
}

namespace {

SparseVec<Gaussian> flatten_complex(const GMat& m) {
  SparseVec<Gaussian> v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) v.emplace_back(i * m.cols() + j, m(i, j));
  return v;
}

SparseVec<Rational> flatten_real(const GMat& m) {
  SparseVec<Rational> v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Gaussian& z = m(i, j);
      int base = 2 * (i * m.cols() + j);
      if (z.re != 0) v.emplace_back(base, z.re);
      if (z.im != 0) v.emplace_back(base + 1, z.im);
    }
  return v;
}

template <class F>
Span<F> make_span(const std::vector<SparseVec<F>>& vecs) {
  Span<F> span;
  for (const auto& v : vecs) span.insert(v);
  return span;
}

Span<Rational> real_span_of(const std::vector<GMat>& mats) {
  Span<Rational> span;
  for (const GMat& m : mats) span.insert(flatten_real(m));
  return span;
}

// Kernel of the linear map c -> sum_j c_j vecs[j], by incremental
// elimination with combination tracking.
template <class F>
std::vector<std::vector<F>> kernel_of_vectors(
    const std::vector<SparseVec<F>>& vecs) {
  struct EchelonRow {
    SparseVec<F> v;
    std::vector<F> combo;
  };
  const int n = static_cast<int>(vecs.size());
  std::vector<EchelonRow> rows;
  std::vector<std::vector<F>> kernel;
  for (int j = 0; j < n; ++j) {
    SparseVec<F> v = vecs[j];
    std::vector<F> combo(n, F(0));
    combo[j] = F(1);
    for (const EchelonRow& r : rows) {
      if (v.empty()) break;
      auto it = std::lower_bound(
          v.begin(), v.end(), r.v.front().first,
          [](const std::pair<int, F>& p, int i) { return p.first < i; });
      if (it == v.end() || it->first != r.v.front().first) continue;
      F c = -(it->second) / r.v.front().second;
      axpy(v, c, r.v);
      for (int t = 0; t <= j; ++t)
        if (!is_zero(r.combo[t])) combo[t] = combo[t] + c * r.combo[t];
    }
    if (v.empty()) {
      kernel.push_back(std::move(combo));
    } else {
      rows.push_back(EchelonRow{std::move(v), std::move(combo)});
      std::sort(rows.begin(), rows.end(),
                [](const EchelonRow& a, const EchelonRow& b) {
                  return a.v.front().first < b.v.front().first;
                });
    }
  }
  return kernel;
}

GMat combine(const std::vector<GMat>& basis, const std::vector<Gaussian>& c) {
  GMat m(basis.front().rows(), basis.front().cols());
  for (size_t j = 0; j < basis.size(); ++j)
    if (!c[j].is_zero()) m = m + c[j] * basis[j];
  return m;
}

GMat combine_real(const std::vector<GMat>& basis,
                  const std::vector<Rational>& c) {
  GMat m(basis.front().rows(), basis.front().cols());
  for (size_t j = 0; j < basis.size(); ++j)
    if (c[j] != 0) m = m + Gaussian(c[j]) * basis[j];
  return m;
}

// Refines a subspace to the kernel of X -> [H, X] (real-linear version).
std::vector<GMat> real_bracket_kernel(const GMat& h,
                                      const std::vector<GMat>& basis) {
  std::vector<SparseVec<Rational>> images;
  images.reserve(basis.size());
  for (const GMat& x : basis) images.push_back(flatten_real(bracket(h, x)));
  std::vector<GMat> kernel;
  for (const auto& c : kernel_of_vectors(images))
    kernel.push_back(combine_real(basis, c));
  return kernel;
}

}  // namespace

void verify_realization(const Realization& real) {
  // complex-linear independence: the real basis of u is a C-basis of u_C
  Span<Gaussian> cspan;
  for (const GMat& x : real.basis_u)
    if (!cspan.insert(flatten_complex(x)))
      raise(ErrorKind::RealizationBug, "basis of u not C-independent");

  Span<Rational> uspan = real_span_of(real.basis_u);
  std::vector<GMat> theta_basis;
  for (const GMat& x : real.basis_u) {
    GMat tx = real.theta(x);
    if (!uspan.contains(flatten_real(tx)))
      raise(ErrorKind::RealizationBug, "theta does not preserve u");
    if (!(real.theta(tx) == x))
      raise(ErrorKind::RealizationBug, "theta is not involutive");
    theta_basis.push_back(std::move(tx));
  }
  // theta[X,Y] = [theta X, theta Y] and bracket closure, on basis pairs
  for (size_t i = 0; i < real.basis_u.size(); ++i)
    for (size_t j = i + 1; j < real.basis_u.size(); ++j) {
      GMat br = bracket(real.basis_u[i], real.basis_u[j]);
      if (!uspan.contains(flatten_real(br)))
        raise(ErrorKind::RealizationBug, "u not closed under bracket");
      if (!(real.theta(br) == bracket(theta_basis[i], theta_basis[j])))
        raise(ErrorKind::RealizationBug, "theta is not an automorphism");
    }
  // a-basis: inside u, in the -1 eigenspace, pairwise commuting
  for (const GMat& h : real.basis_ia) {
    if (!uspan.contains(flatten_real(h)))
      raise(ErrorKind::RealizationBug, "a-basis leaves u");
    if (!(real.theta(h) == Gaussian(Rational(-1)) * h))
      raise(ErrorKind::RealizationBug, "a-basis not in the -1 eigenspace");
  }
  for (size_t i = 0; i < real.basis_ia.size(); ++i)
    for (size_t j = i + 1; j < real.basis_ia.size(); ++j)
      if (!bracket(real.basis_ia[i], real.basis_ia[j]).is_zero_matrix())
        raise(ErrorKind::RealizationBug, "a-basis not commutative");
}

EigenSplit eigensplit(const Realization& real) {
  EigenSplit split;
  Span<Rational> kspan, pspan;
  const Gaussian half(Rational(1, 2));
  for (const GMat& x : real.basis_u) {
    GMat tx = real.theta(x);
    if (!(real.theta(tx) == x))
      raise(ErrorKind::RealizationBug, "theta not involutive on u");
    GMat xk = half * (x + tx);
    GMat xp = half * (x - tx);
    if (kspan.insert(flatten_real(xk))) split.k_basis.push_back(xk);
    if (pspan.insert(flatten_real(xp))) split.p_basis.push_back(xp);
  }
  if (split.k_basis.size() + split.p_basis.size() != real.basis_u.size())
    raise(ErrorKind::RealizationBug, "eigenspace dimensions do not sum to dim u");
  // bracket relations on basis pairs
  auto check = [](const Span<Rational>& target, const std::vector<GMat>& a,
                  const std::vector<GMat>& b, const char* what) {
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) {
        if (&a == &b && j <= i) continue;
        if (!target.contains(flatten_real(bracket(a[i], b[j]))))
          raise(ErrorKind::RealizationBug, what);
      }
  };
  check(kspan, split.k_basis, split.k_basis, "[k,k] not inside k");
  check(pspan, split.k_basis, split.p_basis, "[k,p] not inside p");
  check(kspan, split.p_basis, split.p_basis, "[p,p] not inside k");
  return split;
}

std::vector<GMat> centralizer_m(const Realization& real) {
  std::vector<GMat> current = eigensplit(real).k_basis;
  for (const GMat& h : real.basis_ia) {
    if (current.empty()) break;
    current = real_bracket_kernel(h, current);
  }
  return current;
}

bool root_is_positive(const std::vector<Rational>& root) {
  for (auto it = root.rbegin(); it != root.rend(); ++it)
    if (*it != 0) return *it > 0;
  return false;
}

namespace {

// e-coordinates of the root with values q_j on the a-basis: solve
// <v, avec_j> = q_j (with v_0 = 0 on the A-type quotient).
std::vector<Rational> root_coordinates(const Realization& real,
                                       const std::vector<Rational>& tuple) {
  const int dim = static_cast<int>(real.avecs.front().size());
  const int extra = real.a_type_quotient ? 1 : 0;
  Mat<Rational> m(real.rank + extra, dim);
  std::vector<Rational> rhs(real.rank + extra);
  for (int j = 0; j < real.rank; ++j) {
    for (int t = 0; t < dim; ++t) m(j, t) = real.avecs[j][t];
    rhs[j] = tuple[j];
  }
  if (extra) m(real.rank, 0) = 1;  // canonical representative
  auto v = solve(m, rhs);
  if (!v) raise(ErrorKind::RealizationBug, "root coordinate solve failed");
  return *v;
}

std::optional<Dynkin> detect_type(const Realization& real,
                                  const std::vector<RootSpace>& spaces) {
  std::vector<std::vector<Rational>> all;
  for (const RootSpace& s : spaces) all.push_back(s.root);
  auto is_root = [&](const std::vector<Rational>& r) {
    return std::find(all.begin(), all.end(), r) != all.end();
  };
  std::vector<std::vector<Rational>> indivisible_positive;
  for (const auto& r : all) {
    if (!root_is_positive(r)) continue;
    std::vector<Rational> twice(r);
    for (Rational& x : twice) x *= 2;
    if (!is_root(twice)) indivisible_positive.push_back(r);
  }
  const int dim = static_cast<int>(real.avecs.front().size());
  for (Dynkin type : {Dynkin::A, Dynkin::B, Dynkin::C, Dynkin::D}) {
    const int expected_dim = (type == Dynkin::A) ? real.rank + 1 : real.rank;
    if (expected_dim != dim || real.rank < min_rank(type)) continue;
    std::vector<Weight> mine;
    for (const auto& r : indivisible_positive)
      mine.push_back(Weight(type, real.rank, r).canonical());
    std::sort(mine.begin(), mine.end());
    std::vector<Weight> reference = build_system(type, real.rank).positive_roots;
    for (Weight& w : reference) w = w.canonical();
    std::sort(reference.begin(), reference.end());
    bool equal = mine.size() == reference.size();
    for (size_t i = 0; equal && i < mine.size(); ++i)
      equal = (mine[i] == reference[i]);
    if (equal) return type;
  }
  return std::nullopt;
}

}  // namespace

RootDecomposition restricted_root_decomposition(const Realization& real) {
  struct Piece {
    std::vector<Rational> tuple;
    std::vector<GMat> basis;
  };
  std::vector<Piece> pieces{{{}, real.basis_u}};
  for (int j = 0; j < real.rank; ++j) {
    const GMat& h = real.basis_ia[j];
    std::vector<Piece> next;
    for (Piece& piece : pieces) {
      size_t found = 0;
      for (int q = -4; q <= 4; ++q) {
        const Gaussian eig(Rational(0), Rational(q));
        std::vector<SparseVec<Gaussian>> images;
        images.reserve(piece.basis.size());
        for (const GMat& x : piece.basis)
          images.push_back(flatten_complex(bracket(h, x) - eig * x));
        auto kernel = kernel_of_vectors(images);
        if (kernel.empty()) continue;
        Piece sub;
        sub.tuple = piece.tuple;
        sub.tuple.push_back(q);
        for (const auto& c : kernel) sub.basis.push_back(combine(piece.basis, c));
        found += sub.basis.size();
        next.push_back(std::move(sub));
      }
      if (found != piece.basis.size())
        raise(ErrorKind::NotMaximalAbelian,
              "ad(a) is not simultaneously diagonalizable with small integer "
              "eigenvalues; wrong choice of a");
    }
    pieces = std::move(next);
  }

  RootDecomposition decomp;
  decomp.dim_a = real.rank;
  for (Piece& piece : pieces) {
    bool zero = true;
    for (const Rational& q : piece.tuple) zero = zero && q == 0;
    if (zero) {
      decomp.zero_space = std::move(piece.basis);
      continue;
    }
    RootSpace space;
    space.root = root_coordinates(real, piece.tuple);
    space.basis = std::move(piece.basis);
    decomp.spaces.push_back(std::move(space));
  }
  decomp.dim_m = static_cast<int>(decomp.zero_space.size()) - decomp.dim_a;
  if (decomp.dim_m < 0)
    raise(ErrorKind::NotMaximalAbelian, "zero eigenspace smaller than a");
  std::sort(decomp.spaces.begin(), decomp.spaces.end(),
            [](const RootSpace& a, const RootSpace& b) { return a.root < b.root; });
  decomp.detected_type = detect_type(real, decomp.spaces);
  return decomp;
}

MaximalAbelianVerdict check_maximal_abelian(const Realization& real) {
  MaximalAbelianVerdict verdict;
  std::vector<GMat> current = eigensplit(real).p_basis;
  for (const GMat& h : real.basis_ia) current = real_bracket_kernel(h, current);
  Span<Rational> aspan = real_span_of(real.basis_ia);
  for (const GMat& x : current)
    if (!aspan.contains(flatten_real(x))) {
      verdict.maximal = false;
      verdict.witness = x;
      return verdict;
    }
  verdict.maximal = current.size() == real.basis_ia.size();
  return verdict;
}

std::string embed_form_name(EmbedForm f) {
  switch (f) {
    case EmbedForm::FormOne: return "FormOne";
    case EmbedForm::FormTwo: return "FormTwo";
    case EmbedForm::FormThree: return "FormThree";
    case EmbedForm::Fail: return "Fail";
  }
  return "?";
}

std::vector<int> inclusion_map(RowId row, int from_level, int to_level) {
  if (from_level > to_level)
    raise(ErrorKind::Rank, "inclusion map requires from <= to");
  const int nf = row_ambient(row, from_level);
  const int nt = row_ambient(row, to_level);
  std::vector<int> map(nf);
  switch (row) {
    case RowId::R1:
    case RowId::R2:
    case RowId::R3:
    case RowId::R4:
    case RowId::R11: {
      const int bf = nf / 2, bt = nt / 2;
      for (int i = 0; i < nf; ++i) map[i] = (i < bf) ? i : i + (bt - bf);
      break;
    }
    case RowId::R5_2:
    case RowId::R6_2:
    case RowId::R7_2: {
      const int shift = (nt - nf) / 2;
      for (int i = 0; i < nf; ++i) map[i] = i + shift;
      break;
    }
    default:
      for (int i = 0; i < nf; ++i) map[i] = i;
  }
  return map;
}

GMat include_matrix(RowId row, int from_level, int to_level, const GMat& x) {
  const std::vector<int> map = inclusion_map(row, from_level, to_level);
  GMat y(row_ambient(row, to_level), row_ambient(row, to_level));
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (!x(i, j).is_zero()) y(map[i], map[j]) = x(i, j);
  return y;
}

namespace {

// Central direction of the embedded block for the A-type quotient rows.
std::optional<GMat> central_element(RowId row, int level) {
  switch (row) {
    case RowId::R1: {
      GMat id = scalar_matrix(level, kI);
      GMat neg = scalar_matrix(level, -kI);
      return pair_matrix(id, neg);
    }
    case RowId::R8: return scalar_matrix(level, kI);
    case RowId::R9: return scalar_matrix(2 * level, kI);
    default: return std::nullopt;
  }
}

}  // namespace

EmbedVerdict check_embedding_form(RowId row, int level) {
  Realization rn = realize(row, level);
  Realization rm = realize(row, level + 1);
  const std::vector<int> map = inclusion_map(row, level, level + 1);
  std::vector<bool> in_image(rm.ambient, false);
  for (int i : map) in_image[i] = true;

  Span<Rational> a_span = real_span_of(rn.basis_ia);
  Span<Rational> a_central = a_span;
  if (auto z = central_element(row, level)) a_central.insert(flatten_real(*z));

  EmbedVerdict verdict;
  bool needs_central = false;
  for (const GMat& h : rm.basis_ia) {
    // mixed image/non-image entries must vanish
    for (int i = 0; i < rm.ambient; ++i)
      for (int j = 0; j < rm.ambient; ++j)
        if (!h(i, j).is_zero() && in_image[i] != in_image[j]) {
          verdict.form = EmbedForm::Fail;
          verdict.offending = h;
          return verdict;
        }
    GMat core(rn.ambient, rn.ambient);
    for (int i = 0; i < rn.ambient; ++i)
      for (int j = 0; j < rn.ambient; ++j) core(i, j) = h(map[i], map[j]);
    if (a_span.contains(flatten_real(core))) continue;
    if (a_central.contains(flatten_real(core))) {
      needs_central = true;
      continue;
    }
    verdict.form = EmbedForm::Fail;
    verdict.offending = h;
    return verdict;
  }
  if (needs_central)
    verdict.form = EmbedForm::FormThree;
  else
    verdict.form = info_of(row).form_one_inclusion ? EmbedForm::FormOne
                                                   : EmbedForm::FormTwo;
  return verdict;
}

AdmissibleVerdict check_admissible(const Realization& rk, const Realization& rm,
                                   const RootDecomposition& dk,
                                   const RootDecomposition& dm) {
  if (rk.row != rm.row || rk.level > rm.level)
    raise(ErrorKind::Rank, "admissibility check requires k <= m on one row");
  AdmissibleVerdict verdict;
  std::vector<GMat> mk = centralizer_m(rk);
  std::vector<GMat> mm = centralizer_m(rm);
  Span<Rational> mm_span = real_span_of(mm);
  for (const GMat& x : mk) {
    GMat ix = include_matrix(rk.row, rk.level, rm.level, x);
    if (!mm_span.contains(flatten_real(ix))) {
      verdict.admissible = false;
      verdict.detail = "m_k is not contained in m_m";
      verdict.witness = x;
      return verdict;
    }
  }
  {
    std::ostringstream os;
    os << "m_" << rk.level << " (dim " << mk.size() << ") embeds into m_"
       << rm.level << " (dim " << mm.size() << ")";
    verdict.certificate.push_back(os.str());
  }

  Span<Gaussian> nm_span;
  for (const RootSpace& s : dm.spaces) {
    if (!root_is_positive(s.root)) continue;
    for (const GMat& x : s.basis) nm_span.insert(flatten_complex(x));
  }
  int checked_spaces = 0;
  for (const RootSpace& s : dk.spaces) {
    if (!root_is_positive(s.root)) continue;
    for (const GMat& x : s.basis) {
      GMat ix = include_matrix(rk.row, rk.level, rm.level, x);
      if (!nm_span.contains(flatten_complex(ix))) {
        verdict.admissible = false;
        verdict.detail = "a level-k positive root space leaves n_m";
        verdict.witness = x;
        return verdict;
      }
    }
    ++checked_spaces;
  }
  {
    std::ostringstream os;
    os << checked_spaces << " positive root spaces of level " << rk.level
       << " map into n_" << rm.level;
    verdict.certificate.push_back(os.str());
  }
  verdict.admissible = true;
  verdict.detail = "admissible";
  return verdict;
}

AdmissibleVerdict check_admissible(RowId row, int k, int m) {
  Realization rk = realize(row, k);
  Realization rm = realize(row, m);
  RootDecomposition dk = restricted_root_decomposition(rk);
  RootDecomposition dm = restricted_root_decomposition(rm);
  return check_admissible(rk, rm, dk, dm);
}

}  // namespace limcone
