#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/matrix.hpp"
#include "hopf/module.hpp"
#include "hopf/report.hpp"

namespace hopf {

/// Left-multiplication matrix by basis element b.
inline Matrix left_mult_matrix(const FinDimHopf& h, std::size_t b) {
  Matrix m(h.ctx, h.dim, h.dim);
  for (std::size_t p = 0; p < h.dim; ++p)
    for (std::size_t k = 0; k < h.dim; ++k) m.at(p, k) = h.mult.at(p, b * h.dim + k);
  return m;
}

inline Matrix right_mult_matrix(const FinDimHopf& h, std::size_t b) {
  Matrix m(h.ctx, h.dim, h.dim);
  for (std::size_t p = 0; p < h.dim; ++p)
    for (std::size_t k = 0; k < h.dim; ++k) m.at(p, k) = h.mult.at(p, k * h.dim + b);
  return m;
}

/// Space of left integrals in H: { t : h t = eps(h) t }, canonical kernel basis.
inline Matrix left_integrals_in(const FinDimHopf& h) {
  Matrix stack(h.ctx, 0, h.dim);
  for (std::size_t b = 0; b < h.dim; ++b) {
    Matrix cond = left_mult_matrix(h, b) - Matrix::identity(h.ctx, h.dim).scaled(h.counit.at(0, b));
    stack = (b == 0) ? cond : vstack(stack, cond);
  }
  return kernel(stack);
}

inline Matrix right_integrals_in(const FinDimHopf& h) {
  Matrix stack(h.ctx, 0, h.dim);
  for (std::size_t b = 0; b < h.dim; ++b) {
    Matrix cond = right_mult_matrix(h, b) - Matrix::identity(h.ctx, h.dim).scaled(h.counit.at(0, b));
    stack = (b == 0) ? cond : vstack(stack, cond);
  }
  return kernel(stack);
}

/// Space of left integrals on H: functionals lam (coefficient columns in the
/// dual basis) with f * lam = f(1) lam for all f, convolution meaning
/// (f*lam)(x) = sum f(x_1) lam(x_2).
inline Matrix left_integrals_on(const FinDimHopf& h) {
  std::size_t d = h.dim;
  Matrix stack(h.ctx, 0, d);
  for (std::size_t i = 0; i < d; ++i) {
    // (xi_i * lam)(e_k) = sum_c Delta(e_k)[(i,c)] lam_c
    Matrix cond(h.ctx, d, d);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t c = 0; c < d; ++c) cond.at(k, c) = h.comult.at(i * d + c, k);
    cond = cond - Matrix::identity(h.ctx, d).scaled(h.unit[i]);
    stack = (i == 0) ? cond : vstack(stack, cond);
  }
  return kernel(stack);
}

struct MaschkeVerdict {
  bool semisimple = false;
  Matrix integral_basis;          // dim x r
  std::optional<Scalar> eps_of_t; // eps of the first basis integral, if any
};

/// Semisimplicity by the counit-of-integral criterion.
inline MaschkeVerdict maschke_test(const FinDimHopf& h) {
  MaschkeVerdict v;
  v.integral_basis = left_integrals_in(h);
  if (v.integral_basis.cols() == 0) return v;
  Vec t = v.integral_basis.col(0);
  Scalar e = h.counit.apply(t)[0];
  v.eps_of_t = e;
  v.semisimple = !e.is_zero();
  return v;
}

/// Independent semisimplicity criterion for any finite-dimensional unital
/// algebra in characteristic zero: the trace form (x,y) -> tr(L_x L_y) is
/// nondegenerate iff the algebra is semisimple.
inline bool semisimple_trace_form(const FinDimAlgebra& a) {
  std::size_t d = a.dim;
  Matrix g(a.ctx, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Scalar acc = Scalar::zero(a.ctx);
      // tr(L_i L_j) = sum_{p,k} L_i(p,k) L_j(k,p)
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t k = 0; k < d; ++k) acc += a.mult.at(p, i * d + k) * a.mult.at(k, j * d + p);
      g.at(i, j) = acc;
    }
  return rank(g) == d;
}

/// Projection onto the span of w along the completion of its basis to a full
/// basis (completing with ascending standard basis vectors).
inline Matrix complement_projection(const Matrix& w) {
  const FieldPtr& ctx = w.ctx();
  std::size_t d = w.rows(), r = w.cols();
  if (rank(w) != r) throw std::invalid_argument("complement_projection: columns not independent");
  Matrix t = w;
  for (std::size_t i = 0; i < d && t.cols() < d; ++i) {
    Matrix cand = hstack(t, Matrix::from_cols(ctx, d, {basis_vec(ctx, d, i)}));
    if (rank(cand) == cand.cols()) t = cand;
  }
  auto tinv = inverse(t);
  Matrix diag(ctx, d, d);
  for (std::size_t i = 0; i < r; ++i) diag.at(i, i) = Scalar::one(ctx);
  return t * diag * *tinv;
}

struct ProjectionResult {
  Matrix mu;
  VerificationReport checks;
};

/// Averaged module projection onto a submodule W of M:
///   mu = sum act(z_1) . xi . act(S(z_2)),  z the eps-normalized left integral.
/// Requires H semisimple; xi defaults to a linear projection onto W.
inline ProjectionResult maschke_projection(const FinDimHopf& h, const AModule& m, const Matrix& w,
                                           std::optional<Matrix> xi = std::nullopt) {
  if (!h.has_antipode()) throw std::invalid_argument("maschke_projection: antipode required");
  MaschkeVerdict v = maschke_test(h);
  if (!v.semisimple)
    throw std::domain_error("maschke_projection: Hopf algebra is not semisimple (eps(integral) = 0)");
  Vec z = vec_scale(v.eps_of_t->inv(), v.integral_basis.col(0));
  Matrix proj = xi ? *xi : complement_projection(w);
  if (proj.rows() != m.dim || proj.cols() != m.dim)
    throw std::invalid_argument("maschke_projection: xi shape mismatch");

  Vec dz = h.comult.apply(z);
  Matrix mu(h.ctx, m.dim, m.dim);
  for (std::size_t a = 0; a < h.dim; ++a)
    for (std::size_t b = 0; b < h.dim; ++b) {
      const Scalar& c = dz[a * h.dim + b];
      if (c.is_zero()) continue;
      Matrix term = m.act(basis_vec(h.ctx, h.dim, a)) * proj * m.act(h.antipode.col(b));
      mu = mu + term.scaled(c);
    }

  ProjectionResult out{mu, {}};
  bool img = true;
  for (std::size_t j = 0; j < m.dim && img; ++j)
    if (!in_colspan(w, mu.col(j))) img = false;
  out.checks.add("projection.image_in_submodule", img);
  bool fixes = (mu * w == w);
  out.checks.add("projection.restricts_to_identity", fixes);
  out.checks.add("projection.idempotent", mu * mu == mu);
  bool linear = true;
  std::string wl;
  for (std::size_t b = 0; b < h.dim && linear; ++b) {
    Matrix ab = m.act_basis(b);
    if (mu * ab != ab * mu) {
      linear = false;
      wl = "does not commute with the action of " + h.label(b);
    }
  }
  out.checks.add("projection.module_map", linear, wl);
  return out;
}

}  // namespace hopf
