// matrix.hpp
//
// Dense exact linear algebra over a field context (see field.hpp).
// Everything here is plain Gaussian elimination; matrices at this project's
// scale are tiny (dims in the tens), so clarity wins over blocking tricks.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "tautri/field.hpp"

namespace tautri {

template <class F>
class Mat {
 public:
  using Elem = typename F::Elem;

  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols, Elem fill = Elem{})
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

  static Mat identity(const F& k, int n) {
    Mat m(n, n, k.zero());
    for (int i = 0; i < n; ++i) m.at(i, i) = k.one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Elem& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Elem& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero(const F& k) const {
    for (const auto& x : a_)
      if (!k.is_zero(x)) return false;
    return true;
  }

  bool equals(const F& k, const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
      if (!k.is_zero(k.sub(a_[i], o.a_[i]))) return false;
    return true;
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  std::vector<Elem> col(int c) const {
    std::vector<Elem> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
  }

 private:
  int rows_, cols_;
  std::vector<Elem> a_;
};

template <class F>
Mat<F> mat_mul(const F& k, const Mat<F>& a, const Mat<F>& b) {
  if (a.cols() != b.rows()) throw error("mat_mul: shape mismatch");
  Mat<F> c(a.rows(), b.cols(), k.zero());
  for (int i = 0; i < a.rows(); ++i)
    for (int l = 0; l < a.cols(); ++l) {
      const auto& ail = a.at(i, l);
      if (k.is_zero(ail)) continue;
      for (int j = 0; j < b.cols(); ++j)
        c.at(i, j) = k.add(c.at(i, j), k.mul(ail, b.at(l, j)));
    }
  return c;
}

template <class F>
Mat<F> mat_add(const F& k, const Mat<F>& a, const Mat<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw error("mat_add: shape mismatch");
  Mat<F> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = k.add(a.at(i, j), b.at(i, j));
  return c;
}

template <class F>
Mat<F> mat_scale(const F& k, const typename F::Elem& s, const Mat<F>& a) {
  Mat<F> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = k.mul(s, a.at(i, j));
  return c;
}

// [a | b] side by side
template <class F>
Mat<F> hstack(const Mat<F>& a, const Mat<F>& b) {
  if (a.rows() != b.rows()) throw error("hstack: row mismatch");
  Mat<F> c(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

// In-place reduced row echelon form; returns pivot column indices.
template <class F>
std::vector<int> rref(const F& k, Mat<F>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pr = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!k.is_zero(m.at(r, col))) { pr = r; break; }
    if (pr < 0) continue;
    if (pr != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pr, c), m.at(row, c));
    auto piv_inv = k.inv(m.at(row, col));
    for (int c = col; c < m.cols(); ++c) m.at(row, c) = k.mul(piv_inv, m.at(row, c));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || k.is_zero(m.at(r, col))) continue;
      auto f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c)
        m.at(r, c) = k.sub(m.at(r, c), k.mul(f, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
int rank(const F& k, Mat<F> m) {
  return static_cast<int>(rref(k, m).size());
}

// Columns spanning { x : m x = 0 }.
template <class F>
Mat<F> kernel_basis(const F& k, Mat<F> m) {
  const int n = m.cols();
  auto pivots = rref(k, m);
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat<F> ker(n, static_cast<int>(free_cols.size()), k.zero());
  for (size_t j = 0; j < free_cols.size(); ++j) {
    int fc = free_cols[j];
    ker.at(fc, static_cast<int>(j)) = k.one();
    for (size_t r = 0; r < pivots.size(); ++r)
      ker.at(pivots[r], static_cast<int>(j)) = k.neg(m.at(static_cast<int>(r), fc));
  }
  return ker;
}

// One solution of m x = b, if any.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const F& k, const Mat<F>& m,
                                                   const std::vector<typename F::Elem>& b) {
  Mat<F> aug(m.rows(), m.cols() + 1, k.zero());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  auto pivots = rref(k, aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<typename F::Elem> x(m.cols(), k.zero());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols());
  return x;
}

template <class F>
bool is_invertible(const F& k, const Mat<F>& m) {
  return m.rows() == m.cols() && rank(k, m) == m.rows();
}

template <class F>
Mat<F> inverse(const F& k, const Mat<F>& m) {
  if (m.rows() != m.cols()) throw error("inverse: not square");
  Mat<F> aug = hstack(m, Mat<F>::identity(k, m.rows()));
  auto pivots = rref(k, aug);
  if (static_cast<int>(pivots.size()) != m.rows() || (m.rows() > 0 && pivots.back() >= m.rows()))
    throw error("inverse: singular matrix");
  Mat<F> inv(m.rows(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.rows(); ++c) inv.at(r, c) = aug.at(r, m.rows() + c);
  return inv;
}

// ---------------------------------------------------------------------------
// Incremental echelon container: holds a row space in reduced form, supports
// residue computation and membership tests.  Rows are coordinate vectors over
// a fixed ambient dimension.

template <class F>
class RowSpace {
 public:
  using Vec = std::vector<typename F::Elem>;

  // pivot_from_back selects the greatest nonzero coordinate as pivot instead
  // of the least; used where the surviving (non-pivot) coordinates should be
  // the smallest representatives, e.g. path-algebra ideal reduction.
  explicit RowSpace(const F& k, int ambient, bool pivot_from_back = false)
      : k_(k), ambient_(ambient), from_back_(pivot_from_back) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return ambient_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivot_cols() const { return pivots_; }

  // Reduce v against current rows (does not insert).
  Vec residue(Vec v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      const auto& c = v[pivots_[i]];
      if (k_.is_zero(c)) continue;
      auto f = c;
      const Vec& row = rows_[i];
      for (int j = 0; j < ambient_; ++j)
        if (!k_.is_zero(row[j])) v[j] = k_.sub(v[j], k_.mul(f, row[j]));
    }
    return v;
  }

  bool contains(Vec v) const {
    v = residue(std::move(v));
    for (const auto& x : v)
      if (!k_.is_zero(x)) return false;
    return true;
  }

  // Insert v; returns true if it enlarged the space.
  bool insert(Vec v) {
    v = residue(std::move(v));
    int piv = find_pivot(v);
    if (piv < 0) return false;
    auto f = k_.inv(v[piv]);
    for (int j = 0; j < ambient_; ++j) v[j] = k_.mul(f, v[j]);
    // back-substitute into existing rows
    for (size_t i = 0; i < rows_.size(); ++i) {
      auto c = rows_[i][piv];
      if (k_.is_zero(c)) continue;
      for (int j = 0; j < ambient_; ++j)
        rows_[i][j] = k_.sub(rows_[i][j], k_.mul(c, v[j]));
    }
    // keep rows ordered by pivot column
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
  }

 private:
  int find_pivot(const Vec& v) const {
    if (from_back_) {
      for (int j = ambient_ - 1; j >= 0; --j)
        if (!k_.is_zero(v[j])) return j;
      return -1;
    }
    for (int j = 0; j < ambient_; ++j)
      if (!k_.is_zero(v[j])) return j;
    return -1;
  }

  F k_;
  int ambient_;
  bool from_back_ = false;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

// ---------------------------------------------------------------------------
// Small integer matrices: determinant via fraction-free elimination, used for
// g-matrix unimodularity checks.

inline long long int_det_bareiss(std::vector<std::vector<long long>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  long long prev = 1;
  int sign = 1;
  for (int kcol = 0; kcol < n - 1; ++kcol) {
    if (m[kcol][kcol] == 0) {
      int sw = -1;
      for (int r = kcol + 1; r < n; ++r)
        if (m[r][kcol] != 0) { sw = r; break; }
      if (sw < 0) return 0;
      std::swap(m[kcol], m[sw]);
      sign = -sign;
    }
    for (int i = kcol + 1; i < n; ++i)
      for (int j = kcol + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[kcol][kcol] - m[i][kcol] * m[kcol][j]) / prev;
    prev = m[kcol][kcol];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace tautri
