#pragma once
/**
 * @file linalg.hpp
 * @brief Dense vectors, matrices and bilinear tensors over Q(lambda).
 *
 * Matrices act on column vectors; column j of a map is the image of basis j.
 */

#include <optional>
#include <string>
#include <vector>

#include "rbfam/scalar.hpp"

namespace rbfam {

using Vec = std::vector<Scalar>;

Vec zero_vec(size_t n);
Vec unit_vec(size_t n, size_t i);
bool is_zero(const Vec& v);
Vec& add_to(Vec& a, const Vec& b);
Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator*(const Scalar& c, Vec v);
std::string to_string(const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(size_t n);
  static Matrix from_columns(size_t rows, const std::vector<Vec>& cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Scalar& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Vec column(size_t j) const;
  void set_column(size_t j, const Vec& v);
  std::vector<Vec> columns() const;

  Vec apply(const Vec& v) const;
  bool is_zero() const;
  bool is_identity() const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Scalar> a_;
};

// Row-reduced echelon form. Pivot rule: scan columns left to right, take the
// first row at or below the current one with a nonzero entry in that column.
struct Rref {
  Matrix m;
  std::vector<size_t> pivots;
};
Rref rref(Matrix a);
size_t rank(const Matrix& a);
// Basis of the null space: one vector per free column, 1 at that column.
std::vector<Vec> kernel(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);
// Some x with a x = b, if one exists.
std::optional<Vec> solve(const Matrix& a, const Vec& b);
// Column spaces of a and b coincide.
bool same_column_space(const Matrix& a, const Matrix& b);
// Horizontal concatenation [a | b].
Matrix hcat(const Matrix& a, const Matrix& b);

// Bilinear map U x W -> Y given on bases: at(i,j,k) is the k-th coordinate
// of u_i * w_j.
class Bilinear {
 public:
  Bilinear() = default;
  Bilinear(size_t left, size_t right, size_t out)
      : l_(left), r_(right), o_(out), t_(left * right * out) {}

  size_t left_dim() const { return l_; }
  size_t right_dim() const { return r_; }
  size_t out_dim() const { return o_; }

  Scalar& at(size_t i, size_t j, size_t k) { return t_[(i * r_ + j) * o_ + k]; }
  const Scalar& at(size_t i, size_t j, size_t k) const { return t_[(i * r_ + j) * o_ + k]; }
  Vec on_basis(size_t i, size_t j) const;
  void set_on_basis(size_t i, size_t j, const Vec& v);
  Vec apply(const Vec& u, const Vec& w) const;
  bool is_zero() const;

  friend bool operator==(const Bilinear& a, const Bilinear& b) {
    return a.l_ == b.l_ && a.r_ == b.r_ && a.o_ == b.o_ && a.t_ == b.t_;
  }

 private:
  size_t l_ = 0, r_ = 0, o_ = 0;
  std::vector<Scalar> t_;
};

}  // namespace rbfam
