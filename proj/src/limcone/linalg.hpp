#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "limcone/errors.hpp"
#include "limcone/rational.hpp"

namespace limcone {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Gaussian& z) { return z.is_zero(); }

// Dense exact matrix over a field F (Rational or Gaussian).
template <class F>
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  F& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const F& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  friend Mat operator+(const Mat& a, const Mat& b) {
    Mat c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    Mat c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
  }
  friend Mat operator*(const F& s, const Mat& a) {
    Mat c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = s * a.data_[i];
    return c;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const F& bkj = b(k, j);
          if (!is_zero(bkj)) c(i, j) += aik * bkj;
        }
      }
    return c;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero_matrix() const {
    for (const F& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

private:
  int rows_, cols_;
  std::vector<F> data_;
  F& at(int i, int j) { return data_[i * cols_ + j]; }
};

template <class F>
Mat<F> bracket(const Mat<F>& a, const Mat<F>& b) {
  return a * b - b * a;
}

inline Mat<Gaussian> conj_transpose(const Mat<Gaussian>& a) {
  Mat<Gaussian> t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j).conj();
  return t;
}

// Sparse vector: sorted (index, value) pairs with nonzero values.
template <class F>
using SparseVec = std::vector<std::pair<int, F>>;

template <class F>
SparseVec<F> sparsify(const std::vector<F>& dense) {
  SparseVec<F> s;
  for (int i = 0; i < static_cast<int>(dense.size()); ++i)
    if (!is_zero(dense[i])) s.emplace_back(i, dense[i]);
  return s;
}

template <class F>
void axpy(SparseVec<F>& x, const F& c, const SparseVec<F>& y) {
  // x += c*y, keeping x sorted and nonzero-only.
  SparseVec<F> out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      F v = c * y[j].second;
      if (!is_zero(v)) out.emplace_back(y[j].first, v);
      ++j;
    } else {
      F v = x[i].second + c * y[j].second;
      if (!is_zero(v)) out.emplace_back(x[i].first, v);
      ++i, ++j;
    }
  }
  x = std::move(out);
}

// Row-echelon span with sparse rows.  Supports incremental insertion,
// membership tests, and representation of a vector in the inserted basis.
template <class F>
class Span {
public:
  // Reduces v against the echelon rows; returns the residual.
  SparseVec<F> reduce(SparseVec<F> v) const {
    for (const Row& r : rows_) {
      if (v.empty()) break;
      const F* coef = find_coeff(v, r.pivot);
      if (coef) {
        F c = -(*coef) / r.vec.front().second;
        axpy(v, c, r.vec);
      }
    }
    return v;
  }

  bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

  // Inserts v if independent of the current span; returns true if inserted.
  bool insert(SparseVec<F> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Row r;
    r.pivot = v.front().first;
    r.vec = std::move(v);
    auto pos = std::lower_bound(
        rows_.begin(), rows_.end(), r,
        [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
    rows_.insert(pos, std::move(r));
    return true;
  }

  int dim() const { return static_cast<int>(rows_.size()); }

private:
  struct Row {
    int pivot;
    SparseVec<F> vec;
  };
  static const F* find_coeff(const SparseVec<F>& v, int idx) {
    auto it = std::lower_bound(
        v.begin(), v.end(), idx,
        [](const std::pair<int, F>& p, int i) { return p.first < i; });
    if (it != v.end() && it->first == idx) return &it->second;
    return nullptr;
  }
  std::vector<Row> rows_;
};

// Solves A x = b exactly (A column-independent not required); returns
// std::nullopt when inconsistent.  Gaussian elimination over the field.
template <class F>
std::optional<std::vector<F>> solve(Mat<F> a, std::vector<F> b) {
  const int m = a.rows(), n = a.cols();
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int sel = -1;
    for (int i = row; i < m; ++i)
      if (!is_zero(a(i, col))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row) {
      for (int j = col; j < n; ++j) std::swap(a(sel, j), a(row, j));
      std::swap(b[sel], b[row]);
    }
    for (int i = 0; i < m; ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      F c = a(i, col) / a(row, col);
      for (int j = col; j < n; ++j) a(i, j) = a(i, j) - c * a(row, j);
      b[i] = b[i] - c * b[row];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (int i = row; i < m; ++i)
    if (!is_zero(b[i])) return std::nullopt;
  std::vector<F> x(n, F(0));
  for (int i = 0; i < row; ++i) {
    int col = pivot_col_of_row[i];
    x[col] = b[i] / a(i, col);
  }
  return x;
}

// Nullspace basis of A, as coefficient vectors (length = cols).
template <class F>
std::vector<std::vector<F>> nullspace(Mat<F> a) {
  const int m = a.rows(), n = a.cols();
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot_col(n, false);
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int sel = -1;
    for (int i = row; i < m; ++i)
      if (!is_zero(a(i, col))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = col; j < n; ++j) std::swap(a(sel, j), a(row, j));
    for (int i = 0; i < m; ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      F c = a(i, col) / a(row, col);
      for (int j = col; j < n; ++j) a(i, j) = a(i, j) - c * a(row, j);
    }
    pivot_col_of_row.push_back(col);
    is_pivot_col[col] = true;
    ++row;
  }
  std::vector<std::vector<F>> basis;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot_col[free_col]) continue;
    std::vector<F> v(n, F(0));
    v[free_col] = F(1);
    for (int i = 0; i < row; ++i) {
      int pc = pivot_col_of_row[i];
      if (!is_zero(a(i, free_col))) v[pc] = -a(i, free_col) / a(i, pc);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
int rank_of(Mat<F> a) {
  int n = a.cols();
  return n - static_cast<int>(nullspace(std::move(a)).size());
}

}  // namespace limcone
