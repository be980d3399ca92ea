#include "rbfam/linalg.hpp"

#include "rbfam/errors.hpp"

namespace rbfam {

Vec zero_vec(size_t n) { return Vec(n); }

Vec unit_vec(size_t n, size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec& add_to(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch in addition");
  for (size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += b[i];
  return a;
}

Vec operator+(Vec a, const Vec& b) { return add_to(a, b); }

Vec operator-(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch in subtraction");
  for (size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] -= b[i];
  return a;
}

Vec operator*(const Scalar& c, Vec v) {
  if (c.is_one()) return v;
  for (auto& x : v)
    if (!x.is_zero()) x *= c;
  return v;
}

std::string to_string(const Vec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + "]";
}

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Vec Matrix::column(size_t j) const {
  Vec v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_column(size_t j, const Vec& v) {
  if (v.size() != rows_) throw ShapeError("column length mismatch");
  for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

std::vector<Vec> Matrix::columns() const {
  std::vector<Vec> out;
  for (size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw ShapeError("matrix/vector shape mismatch");
  Vec out(rows_);
  for (size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum shape mismatch");
  Matrix c = a;
  for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix difference shape mismatch");
  Matrix c = a;
  for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

Matrix operator*(const Scalar& c, Matrix m) {
  for (auto& x : m.a_) x *= c;
  return m;
}

Rref rref(Matrix a) {
  Rref out;
  size_t row = 0;
  for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    Scalar inv = a(row, col).inverse();
    for (size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      Scalar f = a(i, col);
      for (size_t j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.m = std::move(a);
  return out;
}

size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::vector<Vec> kernel(const Matrix& a) {
  Rref r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(a.cols());
    v[f] = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("inverse of a non-square matrix");
  size_t n = a.rows();
  Rref r = rref(hcat(a, Matrix::identity(n)));
  if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = r.m(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw ShapeError("solve: right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Rref r = rref(std::move(aug));
  Vec x(a.cols());
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == a.cols()) return std::nullopt;
    x[r.pivots[i]] = r.m(i, a.cols());
  }
  return x;
}

bool same_column_space(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) return false;
  size_t ra = rank(a);
  return ra == rank(b) && ra == rank(hcat(a, b));
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("hcat: row count mismatch");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

Vec Bilinear::on_basis(size_t i, size_t j) const {
  Vec v(o_);
  for (size_t k = 0; k < o_; ++k) v[k] = at(i, j, k);
  return v;
}

void Bilinear::set_on_basis(size_t i, size_t j, const Vec& v) {
  if (v.size() != o_) throw ShapeError("bilinear entry length mismatch");
  for (size_t k = 0; k < o_; ++k) at(i, j, k) = v[k];
}

Vec Bilinear::apply(const Vec& u, const Vec& w) const {
  if (u.size() != l_ || w.size() != r_) throw ShapeError("bilinear argument shape mismatch");
  Vec out(o_);
  for (size_t i = 0; i < l_; ++i) {
    if (u[i].is_zero()) continue;
    for (size_t j = 0; j < r_; ++j) {
      if (w[j].is_zero()) continue;
      Scalar c;
      bool have = false;
      for (size_t k = 0; k < o_; ++k) {
        const Scalar& t = at(i, j, k);
        if (t.is_zero()) continue;
        if (!have) {
          c = u[i] * w[j];
          have = true;
        }
        out[k] += c * t;
      }
    }
  }
  return out;
}

bool Bilinear::is_zero() const {
  for (const auto& x : t_)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace rbfam
