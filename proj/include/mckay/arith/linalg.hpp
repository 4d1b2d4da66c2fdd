#pragma once

#include <optional>
#include <vector>

#include "mckay/arith/cyclotomic.hpp"

namespace mckay {

using Vec = std::vector<CycloNum>;

// Dense row-major matrix over cyclotomic fields.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}
  static Mat identity(int n);
  static Mat from_rows(const std::vector<Vec>& rows, int cols = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  CycloNum& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const CycloNum& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  Vec row(int i) const;
  Vec col(int j) const;

  Mat transpose() const;
  bool is_zero() const;
  CycloNum trace() const;
  Mat lift(int conductor) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  Mat& operator*=(const CycloNum& s);
  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<CycloNum> a_;
};

struct Echelon {
  Mat reduced;              // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column of each row
};

Echelon rref(Mat m);
int rank(const Mat& m);
// Basis of {x : m x = 0}, one vector per free column, with a 1 in that column.
std::vector<Vec> nullspace(const Mat& m);
// Reduced row echelon basis of the span of the given vectors.
std::vector<Vec> row_basis(const std::vector<Vec>& rows, int cols);
std::optional<Vec> solve(const Mat& m, const Vec& b);
std::optional<Mat> inverse(const Mat& m);
CycloNum determinant(Mat m);

bool is_zero(const Vec& v);

}  // namespace mckay
