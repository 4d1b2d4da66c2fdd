#include "mckay/arith/linalg.hpp"

#include <stdexcept>

namespace mckay {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = CycloNum(1);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  Mat m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

Vec Mat::row(int i) const {
  return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

Vec Mat::col(int j) const {
  Vec v(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[static_cast<std::size_t>(i)] = (*this)(i, j);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

CycloNum Mat::trace() const {
  CycloNum t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Mat Mat::lift(int conductor) const {
  Mat r = *this;
  for (auto& v : r.a_) v = v.lift(conductor);
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  Mat c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const CycloNum& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        c(i, j) += x * b(k, j);
      }
    }
  return c;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (static_cast<std::size_t>(a.cols_) != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  Vec r(static_cast<std::size_t>(a.rows_));
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) {
      if (a(i, j).is_zero() || v[static_cast<std::size_t>(j)].is_zero()) continue;
      r[static_cast<std::size_t>(i)] += a(i, j) * v[static_cast<std::size_t>(j)];
    }
  return r;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

Mat& Mat::operator*=(const CycloNum& s) {
  for (auto& v : a_) v = v * s;
  return *this;
}

Echelon rref(Mat m) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (int j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const CycloNum inv = m(r, c).inv();
    for (int j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const CycloNum f = m(i, c);
      for (int j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Mat reduced(r, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) reduced(i, j) = std::move(m(i, j));
  return {std::move(reduced), std::move(pivots)};
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<Vec> nullspace(const Mat& m) {
  const Echelon e = rref(m);
  const int cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec v(static_cast<std::size_t>(cols));
    v[static_cast<std::size_t>(f)] = CycloNum(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[static_cast<std::size_t>(e.pivots[i])] = -e.reduced(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> row_basis(const std::vector<Vec>& rows, int cols) {
  if (rows.empty()) return {};
  const Echelon e = rref(Mat::from_rows(rows, cols));
  std::vector<Vec> out;
  for (int i = 0; i < e.reduced.rows(); ++i) out.push_back(e.reduced.row(i));
  return out;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  Mat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[static_cast<std::size_t>(i)];
  }
  const Echelon e = rref(aug);
  Vec x(static_cast<std::size_t>(m.cols()));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[static_cast<std::size_t>(e.pivots[i])] = e.reduced(static_cast<int>(i), m.cols());
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  const int n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = CycloNum(1);
  }
  const Echelon e = rref(aug);
  if (static_cast<int>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

CycloNum determinant(Mat m) {
  const int n = m.rows();
  CycloNum det(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return CycloNum(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const CycloNum inv = m(c, c).inv();
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const CycloNum f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace mckay
