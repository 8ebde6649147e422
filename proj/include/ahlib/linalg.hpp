#pragma once

// Exact dense linear algebra over a Field: matrices, reduced row echelon form, kernels and
// subspaces in canonical (RREF) form.

#include <optional>
#include <string>
#include <vector>

#include "ahlib/poly.hpp"

namespace ahlib {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

inline Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = f.one();
  return v;
}

inline bool is_zero_vec(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

  static Matrix identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  static Matrix from_rows(const Field& f, const std::vector<Vec>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(f, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const { return Vec(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_)); }
  Vec column(std::size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  bool is_zero() const {
    for (const auto& c : a_)
      if (!c.is_zero()) return false;
    return true;
  }

  Matrix operator+(const Matrix& o) const {
    check_shape(o);
    Matrix m = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] += o.a_[k];
    return m;
  }
  Matrix operator-(const Matrix& o) const {
    check_shape(o);
    Matrix m = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] -= o.a_[k];
    return m;
  }
  Matrix operator*(const Scalar& s) const {
    Matrix m = *this;
    for (auto& c : m.a_) c *= s;
    return m;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch in product");
    Matrix m(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& aik = (*this)(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += aik * o(k, j);
      }
    }
    return m;
  }
  Vec operator*(const Vec& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
    Vec out = zero_vec(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Matrix pow(unsigned e) const {
    Matrix r = identity(field_, rows_);
    Matrix b = *this;
    while (e > 0) {
      if (e & 1U) r = r * b;
      b = b * b;
      e >>= 1U;
    }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? "; " : "";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? " " : "") + (*this)(i, j).to_string();
    }
    return s + "]";
  }

 private:
  void check_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  }

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> a_;
};

/// p(X) by Horner's rule.
inline Matrix evaluate(const Poly& p, const Matrix& x) {
  const std::size_t n = x.rows();
  Matrix acc(x.field(), n, n);
  const Matrix id = Matrix::identity(x.field(), n);
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + id * x.field().embed(c[i]);
  return acc;
}

struct Echelon {
  Matrix r;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form.
inline Echelon rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const Scalar inv = m(row, col).inv();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Scalar c = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= c * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Basis of {v : m v = 0}, one vector per free column.
inline std::vector<Vec> kernel(const Matrix& m) {
  const auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = unit_vec(m.field(), m.cols(), free);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of m v = b, if one exists.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto [r, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec v = zero_vec(m.field(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = r(i, m.cols());
  return v;
}

/// Subspace of F^n held as the nonzero rows of its reduced row echelon basis, so equal
/// subspaces have identical representations.
class Subspace {
 public:
  Subspace(Field f, std::size_t ambient) : field_(std::move(f)), n_(ambient) {}

  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors) {
    Subspace s(f, ambient);
    if (vectors.empty()) return s;
    auto [r, pivots] = rref(Matrix::from_rows(f, vectors));
    for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.push_back(r.row(i));
    s.pivots_ = std::move(pivots);
    return s;
  }
  static Subspace whole(const Field& f, std::size_t ambient) {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vec(f, ambient, i));
    return span(f, ambient, vs);
  }

  const Field& field() const { return field_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduce v against the echelon basis; zero iff v lies in the subspace.
  Vec reduce(Vec v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Scalar c = v[pivots_[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] -= c * basis_[i][j];
    }
    return v;
  }
  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }
  bool contains(const Subspace& o) const {
    for (const auto& v : o.basis_)
      if (!contains(v)) return false;
    return true;
  }

  Subspace operator+(const Subspace& o) const {
    std::vector<Vec> vs = basis_;
    vs.insert(vs.end(), o.basis_.begin(), o.basis_.end());
    return span(field_, n_, vs);
  }

  Subspace intersect(const Subspace& o) const {
    if (dim() == 0 || o.dim() == 0) return Subspace(field_, n_);
    // Columns: basis of this, then basis of o; kernel vectors give a.u = b.w.
    std::vector<Vec> cols = basis_;
    for (const auto& w : o.basis_) {
      Vec neg;
      for (const auto& c : w) neg.push_back(-c);
      cols.push_back(neg);
    }
    const auto ker = kernel(Matrix::from_columns(field_, n_, cols));
    std::vector<Vec> out;
    for (const auto& k : ker) {
      Vec v = zero_vec(field_, n_);
      for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = 0; j < n_; ++j) v[j] += k[i] * basis_[i][j];
      out.push_back(std::move(v));
    }
    return span(field_, n_, out);
  }

  bool is_invariant_under(const Matrix& m) const {
    for (const auto& v : basis_)
      if (!contains(m * v)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  /// Canonical text of the echelon basis; also a total order for sorting.
  std::string key() const {
    std::string s = std::to_string(dim()) + ":";
    for (const auto& v : basis_) {
      for (const auto& c : v) s += c.to_string() + ",";
      s += ";";
    }
    return s;
  }

 private:
  Field field_;
  std::size_t n_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace ahlib
