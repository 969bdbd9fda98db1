#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopf/field.hpp"

namespace hopf {

using Vec = std::vector<Scalar>;

inline Vec vec_zero(const FieldPtr& ctx, std::size_t n) { return Vec(n, Scalar::zero(ctx)); }

inline Vec basis_vec(const FieldPtr& ctx, std::size_t n, std::size_t i) {
  Vec v = vec_zero(ctx, n);
  v.at(i) = Scalar::one(ctx);
  return v;
}

inline bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec vec_add(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec vec_sub(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vec vec_scale(const Scalar& c, Vec a) {
  for (auto& x : a) x = c * x;
  return a;
}

/// Tensor of column vectors; the second factor varies fastest.
inline Vec vec_kron(const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec c(a.size() * b.size(), Scalar::zero(a[0].ctx()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i * b.size() + j] = a[i] * b[j];
  }
  return c;
}

inline std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

/// Dense exact matrix over a field context. Linear maps U -> V are stored as
/// dim(V) x dim(U) matrices acting on column vectors; all tensor index
/// conventions order composite bases with the second factor fastest.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr ctx, std::size_t rows, std::size_t cols)
      : ctx_(std::move(ctx)), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(ctx_)) {}

  static Matrix identity(const FieldPtr& ctx, std::size_t n) {
    Matrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ctx);
    return m;
  }

  static Matrix from_cols(const FieldPtr& ctx, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(ctx, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("column height mismatch");
      for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  const FieldPtr& ctx() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  Vec col(std::size_t j) const {
    Vec v = vec_zero(ctx_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }
  void set_col(std::size_t j, const Vec& v) {
    if (v.size() != rows_) throw std::invalid_argument("column height mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_shape(b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] += b.a_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_shape(b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] -= b.a_[k];
    return c;
  }

  Matrix scaled(const Scalar& c) const {
    Matrix m = *this;
    for (auto& x : m.a_) x = c * x;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.ctx_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Scalar& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          c.at(i, j) += aik * bkj;
        }
      }
    return c;
  }

  Vec apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
    Vec y = vec_zero(ctx_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (x[j].is_zero()) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Scalar& aij = at(i, j);
        if (!aij.is_zero()) y[i] += aij * x[j];
      }
    }
    return y;
  }

  Matrix transpose() const {
    Matrix t(ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

 private:
  void require_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  FieldPtr ctx_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

/// Kronecker product; index (i1*rowsB+i2, j1*colsB+j2), second factor fastest.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.ctx(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Scalar& x = a.at(i1, j1);
      if (x.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          const Scalar& y = b.at(i2, j2);
          if (!y.is_zero()) c.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * y;
        }
    }
  return c;
}

/// Apply (id_pre (x) op (x) id_post) to a vector of length pre*op.cols()*post
/// without materializing the Kronecker matrix.
inline Vec apply_slot(const Matrix& op, std::size_t pre, std::size_t post, const Vec& x) {
  std::size_t din = op.cols(), dout = op.rows();
  if (x.size() != pre * din * post) throw std::invalid_argument("apply_slot shape mismatch");
  Vec y = vec_zero(op.ctx(), pre * dout * post);
  for (std::size_t r = 0; r < dout; ++r)
    for (std::size_t k = 0; k < din; ++k) {
      const Scalar& c = op.at(r, k);
      if (c.is_zero()) continue;
      for (std::size_t a = 0; a < pre; ++a) {
        std::size_t xbase = (a * din + k) * post;
        std::size_t ybase = (a * dout + r) * post;
        for (std::size_t b = 0; b < post; ++b) {
          const Scalar& xv = x[xbase + b];
          if (!xv.is_zero()) y[ybase + b] += c * xv;
        }
      }
    }
  return y;
}

/// First column index at which two equally shaped matrices differ
/// (column count if they are equal).
inline std::size_t first_col_diff(const Matrix& a, const Matrix& b) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (a.at(i, j) != b.at(i, j)) return j;
  return a.cols();
}

/// Precompose a map t with (id_pre (x) op (x) id_post): the matrix of
/// t . (id (x) op (x) id), built row by row without materializing the
/// Kronecker factor. t must have pre*op.rows()*post columns.
inline Matrix compose_slot(const Matrix& t, const Matrix& op, std::size_t pre, std::size_t post) {
  std::size_t din = op.cols(), dout = op.rows();
  if (t.cols() != pre * dout * post) throw std::invalid_argument("compose_slot shape mismatch");
  Matrix r(t.ctx(), t.rows(), pre * din * post);
  for (std::size_t rr = 0; rr < dout; ++rr)
    for (std::size_t k = 0; k < din; ++k) {
      const Scalar& c = op.at(rr, k);
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t a = 0; a < pre; ++a) {
          std::size_t tbase = (a * dout + rr) * post;
          std::size_t rbase = (a * din + k) * post;
          for (std::size_t b = 0; b < post; ++b) {
            const Scalar& tv = t.at(i, tbase + b);
            if (!tv.is_zero()) r.at(i, rbase + b) += tv * c;
          }
        }
    }
  return r;
}

/// Assemble the matrix of a linear map from its action on basis vectors.
inline Matrix matrix_of(const FieldPtr& ctx, std::size_t rows, std::size_t cols,
                        const std::function<Vec(std::size_t)>& image_of_basis) {
  Matrix m(ctx, rows, cols);
  for (std::size_t j = 0; j < cols; ++j) m.set_col(j, image_of_basis(j));
  return m;
}

/// First basis column where two linear maps disagree, with both images.
struct MapDiff {
  std::size_t col;
  Vec lhs, rhs;
};

inline std::optional<MapDiff> maps_differ(const FieldPtr& ctx, std::size_t domain,
                                          const std::function<Vec(const Vec&)>& f,
                                          const std::function<Vec(const Vec&)>& g) {
  for (std::size_t j = 0; j < domain; ++j) {
    Vec e = basis_vec(ctx, domain, j);
    Vec a = f(e), b = g(e);
    if (a != b) return MapDiff{j, std::move(a), std::move(b)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exact elimination. Pivoting is deterministic: columns are scanned left to
// right, the pivot row is the first row (ascending) with a nonzero entry.
// ---------------------------------------------------------------------------

struct Rref {
  Matrix r;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Reduced row echelon form of a, applying the identical row operations to b
/// (b may have zero columns).
inline Rref rref_with(Matrix a, Matrix* b = nullptr) {
  std::size_t rows = a.rows(), cols = a.cols();
  Rref out;
  std::size_t r = 0;
  auto row_scale = [&](Matrix& m, std::size_t i, const Scalar& c) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) m.at(i, j) = c * m.at(i, j);
  };
  auto row_axpy = [&](Matrix& m, std::size_t dst, std::size_t src, const Scalar& c) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(src, j).is_zero()) m.at(dst, j) += c * m.at(src, j);
  };
  auto row_swap = [&](Matrix& m, std::size_t i1, std::size_t i2) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(i1, j), m.at(i2, j));
  };
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a.at(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      row_swap(a, p, r);
      if (b) row_swap(*b, p, r);
    }
    Scalar s = a.at(r, c).inv();
    if (!s.is_one()) {
      row_scale(a, r, s);
      if (b) row_scale(*b, r, s);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = -a.at(i, c);
      row_axpy(a, i, r, f);
      if (b) row_axpy(*b, i, r, f);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.r = std::move(a);
  return out;
}

inline Rref rref(const Matrix& a) { return rref_with(a); }

inline std::size_t rank(const Matrix& a) { return rref_with(a).rank; }

/// Nullspace basis in reduced column echelon form: one column per free index
/// (ascending), carrying 1 at its free coordinate and 0 at the other free
/// coordinates.
inline Matrix kernel(const Matrix& a) {
  Rref rr = rref_with(a);
  std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(a.ctx(), n, free_cols.size());
  for (std::size_t q = 0; q < free_cols.size(); ++q) {
    std::size_t f = free_cols[q];
    k.at(f, q) = Scalar::one(a.ctx());
    for (std::size_t t = 0; t < rr.pivot_cols.size(); ++t) k.at(rr.pivot_cols[t], q) = -rr.r.at(t, f);
  }
  return k;
}

/// Solve A X = B exactly; free variables are set to zero. Returns nullopt if
/// any right-hand column is inconsistent.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  Matrix rhs = b;
  Rref rr = rref_with(a, &rhs);
  for (std::size_t i = rr.rank; i < a.rows(); ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      if (!rhs.at(i, j).is_zero()) return std::nullopt;
  Matrix x(a.ctx(), a.cols(), b.cols());
  for (std::size_t t = 0; t < rr.pivot_cols.size(); ++t)
    for (std::size_t j = 0; j < rhs.cols(); ++j) x.at(rr.pivot_cols[t], j) = rhs.at(t, j);
  return x;
}

inline std::optional<Vec> solve_vec(const Matrix& a, const Vec& b) {
  Matrix bm = Matrix::from_cols(a.ctx(), b.size(), {b});
  auto x = solve(a, bm);
  if (!x) return std::nullopt;
  return x->col(0);
}

inline std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse requires a square matrix");
  return solve(a, Matrix::identity(a.ctx(), a.rows()));
}

inline Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix c(a.ctx(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix c(a.ctx(), a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) c.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) c.at(a.rows() + i, j) = b.at(i, j);
  }
  return c;
}

inline bool in_colspan(const Matrix& w, const Vec& v) { return solve_vec(w, v).has_value(); }

inline bool subspace_equal(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows()) return false;
  std::size_t ru = rank(u), rv = rank(v);
  return ru == rv && rank(hstack(u, v)) == ru;
}

}  // namespace hopf
