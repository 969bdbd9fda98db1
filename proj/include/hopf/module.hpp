#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/matrix.hpp"
#include "hopf/report.hpp"

namespace hopf {

/// Left module over a finite-dimensional algebra, by its action tensor.
/// action : dim x (adim*dim), (e_b . v_m) = sum_p action(p, b*dim+m) v_p.
struct AModule {
  std::size_t adim = 0;
  std::size_t dim = 0;
  Matrix action;

  /// Matrix of the action of the algebra element h.
  Matrix act(const Vec& h) const {
    Matrix m(action.ctx(), dim, dim);
    for (std::size_t b = 0; b < adim; ++b) {
      if (h[b].is_zero()) continue;
      for (std::size_t p = 0; p < dim; ++p)
        for (std::size_t q = 0; q < dim; ++q) {
          const Scalar& c = action.at(p, b * dim + q);
          if (!c.is_zero()) m.at(p, q) += h[b] * c;
        }
    }
    return m;
  }
  Matrix act_basis(std::size_t b) const {
    Matrix m(action.ctx(), dim, dim);
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t q = 0; q < dim; ++q) m.at(p, q) = action.at(p, b * dim + q);
    return m;
  }
};

inline VerificationReport check_module(const FinDimAlgebra& a, const AModule& m) {
  VerificationReport rep;
  if (m.adim != a.dim) {
    rep.add("module.shape", false, "acting algebra dimension mismatch");
    return rep;
  }
  bool assoc = true, unital = true;
  std::string wa, wu;
  for (std::size_t b1 = 0; b1 < a.dim && assoc; ++b1)
    for (std::size_t b2 = 0; b2 < a.dim && assoc; ++b2) {
      Matrix lhs = m.act(a.mult.col(b1 * a.dim + b2));
      Matrix rhs = m.act_basis(b1) * m.act_basis(b2);
      if (lhs != rhs) {
        assoc = false;
        wa = "(" + a.label(b1) + "*" + a.label(b2) + ") acts differently from composition";
      }
    }
  if (!m.act(a.unit).is_identity()) {
    unital = false;
    wu = "unit does not act as identity";
  }
  rep.add("module.associative_action", assoc, wa);
  rep.add("module.unital_action", unital, wu);
  return rep;
}

inline AModule regular_module(const FinDimHopf& h) { return {h.dim, h.dim, h.mult}; }

inline AModule trivial_module(const FinDimHopf& h, std::size_t n = 1) {
  AModule m;
  m.adim = h.dim;
  m.dim = n;
  m.action = Matrix(h.ctx, n, h.dim * n);
  for (std::size_t b = 0; b < h.dim; ++b)
    for (std::size_t q = 0; q < n; ++q) m.action.at(q, b * n + q) = h.counit.at(0, b);
  return m;
}

/// Tensor product of modules over a bialgebra, acting through Delta.
inline AModule tensor_module(const FinDimHopf& h, const AModule& m, const AModule& n) {
  AModule t;
  t.adim = h.dim;
  t.dim = m.dim * n.dim;
  t.action = Matrix(h.ctx, t.dim, h.dim * t.dim);
  for (std::size_t b = 0; b < h.dim; ++b) {
    Vec db = h.comult.col(b);
    for (std::size_t x = 0; x < h.dim; ++x)
      for (std::size_t y = 0; y < h.dim; ++y) {
        const Scalar& c = db[x * h.dim + y];
        if (c.is_zero()) continue;
        for (std::size_t p = 0; p < m.dim; ++p)
          for (std::size_t mm = 0; mm < m.dim; ++mm) {
            const Scalar& am = m.action.at(p, x * m.dim + mm);
            if (am.is_zero()) continue;
            for (std::size_t q = 0; q < n.dim; ++q)
              for (std::size_t nn = 0; nn < n.dim; ++nn) {
                const Scalar& an = n.action.at(q, y * n.dim + nn);
                if (an.is_zero()) continue;
                t.action.at(p * n.dim + q, b * t.dim + mm * n.dim + nn) += c * am * an;
              }
          }
      }
  }
  return t;
}

/// Invariants { v : h.v = eps(h) v for all h }.
inline Matrix invariants(const FinDimHopf& h, const AModule& m) {
  Matrix stack(h.ctx, 0, m.dim);
  for (std::size_t b = 0; b < h.dim; ++b) {
    Matrix cond = m.act_basis(b) - Matrix::identity(h.ctx, m.dim).scaled(h.counit.at(0, b));
    stack = (b == 0) ? cond : vstack(stack, cond);
  }
  return kernel(stack);
}

/// Whether the span of the given columns is stable under the whole action.
inline bool is_submodule(const AModule& m, const Matrix& w) {
  for (std::size_t b = 0; b < m.adim; ++b) {
    Matrix img = m.act_basis(b) * w;
    for (std::size_t j = 0; j < img.cols(); ++j)
      if (!in_colspan(w, img.col(j))) return false;
  }
  return true;
}

/// Smallest submodule containing v (v itself included; the algebra is unital).
inline Matrix cyclic_submodule(const AModule& m, const Vec& v) {
  std::vector<Vec> gens = {v};
  Matrix span = Matrix::from_cols(m.action.ctx(), m.dim, gens);
  if (vec_is_zero(v)) return Matrix(m.action.ctx(), m.dim, 0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t b = 0; b < m.adim; ++b) {
      Vec w = m.act_basis(b).apply(gens[i]);
      if (!vec_is_zero(w) && !in_colspan(span, w)) {
        gens.push_back(w);
        span = hstack(span, Matrix::from_cols(m.action.ctx(), m.dim, {w}));
      }
    }
  }
  // normalize to the canonical echelon basis of the span
  Matrix k = rref_with(span.transpose()).r;
  std::size_t r = rank(span);
  Matrix out(m.action.ctx(), m.dim, r);
  for (std::size_t t = 0; t < r; ++t)
    for (std::size_t i = 0; i < m.dim; ++i) out.at(i, t) = k.at(t, i);
  return out;
}

}  // namespace hopf
