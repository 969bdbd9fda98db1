#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/integrals.hpp"
#include "hopf/matrix.hpp"
#include "hopf/module.hpp"
#include "hopf/report.hpp"

namespace hopf {

/// Left-left Yetter-Drinfeld module over a finite-dimensional Hopf algebra B.
///   action   : dim x (bdim*dim),   e_b . v_m         = sum_p action(p, b*dim+m) v_p
///   coaction : (bdim*dim) x dim,   phi(v_m)          = sum_{b,p} coaction(b*dim+p, m) f_b (x) v_p
struct YDModule {
  std::shared_ptr<const FinDimHopf> base;
  std::size_t dim = 0;
  Matrix action;
  Matrix coaction;
  std::vector<std::string> labels;

  std::size_t bdim() const { return base->dim; }
  const FieldPtr& ctx() const { return base->ctx; }
  std::string label(std::size_t i) const {
    return i < labels.size() && !labels[i].empty() ? labels[i] : "v" + std::to_string(i);
  }
  AModule as_module() const { return {base->dim, dim, action}; }
};

/// Comodule axioms for a coaction of B on an n-dimensional space.
inline VerificationReport check_comodule(const FinDimHopf& b, const Matrix& coaction, std::size_t n) {
  VerificationReport rep;
  std::size_t d = b.dim;
  bool coassoc = true, counital = true;
  std::string wa, wu;
  for (std::size_t m = 0; m < n; ++m) {
    Vec x = coaction.col(m);  // in B (x) M
    if (coassoc && apply_slot(b.comult, 1, n, x) != apply_slot(coaction, d, 1, x)) {
      coassoc = false;
      wa = "coassociativity fails on basis index " + std::to_string(m);
    }
    if (counital && apply_slot(b.counit, 1, n, x) != basis_vec(b.ctx, n, m)) {
      counital = false;
      wu = "counit law fails on basis index " + std::to_string(m);
    }
  }
  rep.add("comodule.coassociativity", coassoc, wa);
  rep.add("comodule.counital", counital, wu);
  return rep;
}

/// Full Yetter-Drinfeld verification: module, comodule, and compatibility
///   (b_1 . m)_(-1) b_2 (x) (b_1 . m)_(0)  =  b_1 m_(-1) (x) b_2 . m_(0).
inline VerificationReport yd_check(const YDModule& m) {
  VerificationReport rep;
  const FinDimHopf& b = *m.base;
  rep.merge(check_module(b.algebra(), m.as_module()));
  rep.merge(check_comodule(b, m.coaction, m.dim));
  std::size_t d = b.dim, n = m.dim;
  bool compat = true;
  std::string wc;
  for (std::size_t bb = 0; bb < d && compat; ++bb)
    for (std::size_t mm = 0; mm < n && compat; ++mm) {
      Vec db = b.comult.col(bb);
      Vec lhs = vec_zero(b.ctx, d * n), rhs = vec_zero(b.ctx, d * n);
      for (std::size_t c1 = 0; c1 < d; ++c1)
        for (std::size_t c2 = 0; c2 < d; ++c2) {
          const Scalar& c = db[c1 * d + c2];
          if (c.is_zero()) continue;
          // lhs: phi(c1 . m), then right-multiply the B leg by e_c2
          Vec w = m.coaction.apply(m.action.col(c1 * n + mm));
          w = apply_slot(right_mult_matrix(b, c2), 1, n, w);
          lhs = vec_add(lhs, vec_scale(c, w));
          // rhs: (L_c1 (x) act_c2) phi(m)
          Vec u = m.coaction.col(mm);
          u = apply_slot(left_mult_matrix(b, c1), 1, n, u);
          Matrix act2 = m.as_module().act_basis(c2);
          u = apply_slot(act2, d, 1, u);
          rhs = vec_add(rhs, vec_scale(c, u));
        }
      if (lhs != rhs) {
        compat = false;
        wc = "compatibility fails at (" + b.label(bb) + ", " + m.label(mm) + ")";
      }
    }
  rep.add("yd.compatibility", compat, wc);
  return rep;
}

/// Tensor product of YD modules: diagonal action, multiplied coaction.
inline YDModule yd_tensor(const YDModule& m, const YDModule& n) {
  YDModule t;
  t.base = m.base;
  t.dim = m.dim * n.dim;
  const FinDimHopf& b = *m.base;
  std::size_t d = b.dim;
  AModule tm = tensor_module(b, m.as_module(), n.as_module());
  t.action = tm.action;
  t.coaction = Matrix(b.ctx, d * t.dim, t.dim);
  for (std::size_t mm = 0; mm < m.dim; ++mm)
    for (std::size_t nn = 0; nn < n.dim; ++nn) {
      // phi(m (x) n) = m_(-1) n_(-1) (x) m_(0) (x) n_(0)
      for (std::size_t b1 = 0; b1 < d; ++b1)
        for (std::size_t p = 0; p < m.dim; ++p) {
          const Scalar& cm = m.coaction.at(b1 * m.dim + p, mm);
          if (cm.is_zero()) continue;
          for (std::size_t b2 = 0; b2 < d; ++b2)
            for (std::size_t q = 0; q < n.dim; ++q) {
              const Scalar& cn = n.coaction.at(b2 * n.dim + q, nn);
              if (cn.is_zero()) continue;
              Vec prod = b.mult.col(b1 * d + b2);
              for (std::size_t bb = 0; bb < d; ++bb) {
                if (prod[bb].is_zero()) continue;
                t.coaction.at(bb * t.dim + p * n.dim + q, mm * n.dim + nn) += cm * cn * prod[bb];
              }
            }
        }
    }
  t.labels.reserve(t.dim);
  for (std::size_t mm = 0; mm < m.dim; ++mm)
    for (std::size_t nn = 0; nn < n.dim; ++nn) t.labels.push_back(m.label(mm) + "(x)" + n.label(nn));
  return t;
}

/// Monoidal unit: the base field with trivial action and coaction.
inline YDModule yd_unit(const std::shared_ptr<const FinDimHopf>& base) {
  YDModule u;
  u.base = base;
  u.dim = 1;
  u.action = base->counit;  // 1 x (bdim*1)
  u.coaction = Matrix(base->ctx, base->dim, 1);
  for (std::size_t bb = 0; bb < base->dim; ++bb) u.coaction.at(bb, 0) = base->unit[bb];
  u.labels = {"1"};
  return u;
}

/// Braiding C(m (x) n) = m_(-1) . n (x) m_(0), a (dimN*dimM) x (dimM*dimN) matrix.
inline Matrix yd_braiding(const YDModule& m, const YDModule& n) {
  const FieldPtr& ctx = m.ctx();
  std::size_t d = m.bdim();
  Matrix c(ctx, n.dim * m.dim, m.dim * n.dim);
  for (std::size_t mm = 0; mm < m.dim; ++mm)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t p = 0; p < m.dim; ++p) {
        const Scalar& cm = m.coaction.at(b * m.dim + p, mm);
        if (cm.is_zero()) continue;
        for (std::size_t nn = 0; nn < n.dim; ++nn)
          for (std::size_t q = 0; q < n.dim; ++q) {
            const Scalar& an = n.action.at(q, b * n.dim + nn);
            if (!an.is_zero()) c.at(q * m.dim + p, mm * n.dim + nn) += cm * an;
          }
      }
  return c;
}

/// Witness (or nullopt) for f : M -> N commuting with action and coaction.
inline std::optional<std::string> yd_morphism_witness(const Matrix& f, const YDModule& m, const YDModule& n) {
  if (f.rows() != n.dim || f.cols() != m.dim) return "shape mismatch";
  const FinDimHopf& b = *m.base;
  for (std::size_t bb = 0; bb < b.dim; ++bb) {
    Matrix lhs = f * m.as_module().act_basis(bb);
    Matrix rhs = n.as_module().act_basis(bb) * f;
    if (lhs != rhs) {
      for (std::size_t j = 0; j < m.dim; ++j)
        if (lhs.col(j) != rhs.col(j))
          return "action of " + b.label(bb) + " on " + m.label(j) + ": f(b.v) = " +
                 elem_str(rhs.col(j), n.labels) + " but b.f(v) = " + elem_str(lhs.col(j), n.labels);
    }
  }
  for (std::size_t j = 0; j < m.dim; ++j) {
    Vec lhs = apply_slot(f, b.dim, 1, m.coaction.col(j));
    Vec rhs = n.coaction.apply(f.col(j));
    if (lhs != rhs) return "coaction on " + m.label(j) + " does not commute";
  }
  return std::nullopt;
}

inline bool is_yd_morphism(const Matrix& f, const YDModule& m, const YDModule& n) {
  return !yd_morphism_witness(f, m, n).has_value();
}

/// Left dual module on the dual basis:
///   (b . xi)(v) = xi(S(b) . v),  phi(xi) given by
///   sum xi_(-1) xi_(0)(v) = sum S^{-1}(v_(-1)) xi(v_(0)).
inline YDModule yd_dual(const YDModule& m) {
  const FinDimHopf& b = *m.base;
  if (!b.has_antipode()) throw std::invalid_argument("yd_dual: base antipode required");
  auto sinv = inverse(b.antipode);
  if (!sinv) throw std::domain_error("yd_dual: base antipode is not invertible");
  YDModule d;
  d.base = m.base;
  d.dim = m.dim;
  d.action = Matrix(b.ctx, m.dim, b.dim * m.dim);
  AModule mm = m.as_module();
  for (std::size_t bb = 0; bb < b.dim; ++bb) {
    Matrix sb = mm.act(b.antipode.col(bb));
    for (std::size_t i = 0; i < m.dim; ++i)
      for (std::size_t p = 0; p < m.dim; ++p) d.action.at(p, bb * m.dim + i) = sb.at(i, p);
  }
  d.coaction = Matrix(b.ctx, b.dim * m.dim, m.dim);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t c = 0; c < b.dim; ++c)
      for (std::size_t v = 0; v < m.dim; ++v) {
        const Scalar& cm = m.coaction.at(c * m.dim + i, v);
        if (cm.is_zero()) continue;
        for (std::size_t bb = 0; bb < b.dim; ++bb) {
          const Scalar& s = sinv->at(bb, c);
          if (!s.is_zero()) d.coaction.at(bb * m.dim + v, i) += s * cm;
        }
      }
  d.labels.reserve(m.dim);
  for (std::size_t i = 0; i < m.dim; ++i) d.labels.push_back(m.label(i) + "*");
  return d;
}

/// Evaluation M* (x) M -> k as a 1 x (dim*dim) matrix on the dual basis.
inline Matrix yd_eval(const YDModule& m) {
  Matrix e(m.ctx(), 1, m.dim * m.dim);
  for (std::size_t i = 0; i < m.dim; ++i) e.at(0, i * m.dim + i) = Scalar::one(m.ctx());
  return e;
}

// ---------------------------------------------------------------------------
// Quasitriangular structures
// ---------------------------------------------------------------------------

/// Verify (B, R): R invertible, R Delta(h) = Delta^op(h) R, and both hexagons
///   (Delta (x) id)(R) = R_13 R_23,  (id (x) Delta)(R) = R_13 R_12.
inline VerificationReport check_quasitriangular(const FinDimHopf& b, const Vec& r) {
  VerificationReport rep;
  std::size_t d = b.dim;
  FinDimAlgebra b2 = tensor_algebra(b.algebra(), b.algebra());
  FinDimAlgebra b3 = tensor_algebra(b.algebra(), b2);

  auto mul2 = [&](const Vec& x, const Vec& y) { return b2.mult.apply(vec_kron(x, y)); };
  auto mul3 = [&](const Vec& x, const Vec& y) { return b3.mult.apply(vec_kron(x, y)); };

  rep.add("quasitriangular.invertible", solve_vec(AModule{b2.dim, b2.dim, b2.mult}.act(r), b2.unit).has_value());

  bool inter = true;
  std::string wi;
  Matrix flip = flip_matrix(b.ctx, d, d);
  for (std::size_t h = 0; h < d && inter; ++h) {
    Vec dh = b.comult.col(h);
    Vec dop = flip.apply(dh);
    if (mul2(r, dh) != mul2(dop, r)) {
      inter = false;
      wi = "R Delta != Delta^op R on " + b.label(h);
    }
  }
  rep.add("quasitriangular.intertwines_comult", inter, wi);

  // embed R into triple tensors
  Vec r13 = vec_zero(b.ctx, d * d * d), r23 = r13, r12 = r13;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t c = 0; c < d; ++c) {
      const Scalar& v = r[a * d + c];
      if (v.is_zero()) continue;
      for (std::size_t u = 0; u < d; ++u) {
        if (!b.unit[u].is_zero()) {
          r13[(a * d + u) * d + c] += v * b.unit[u];
          r23[(u * d + a) * d + c] += v * b.unit[u];
          r12[(a * d + c) * d + u] += v * b.unit[u];
        }
      }
    }
  Vec dr_left = apply_slot(b.comult, 1, d, r);   // (Delta (x) id)(R)
  Vec dr_right = apply_slot(b.comult, d, 1, r);  // (id (x) Delta)(R)
  rep.add("quasitriangular.hexagon_left", dr_left == mul3(r13, r23));
  rep.add("quasitriangular.hexagon_right", dr_right == mul3(r13, r12));
  return rep;
}

/// Induced YD structure on a module over a quasitriangular base:
///   phi(v) = sum R^(2) (x) R^(1) . v.
inline YDModule yd_from_quasitriangular(const std::shared_ptr<const FinDimHopf>& base, const Vec& r,
                                        const AModule& m) {
  YDModule y;
  y.base = base;
  y.dim = m.dim;
  y.action = m.action;
  std::size_t d = base->dim;
  y.coaction = Matrix(base->ctx, d * m.dim, m.dim);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t bb = 0; bb < d; ++bb) {
      const Scalar& rv = r[a * d + bb];
      if (rv.is_zero()) continue;
      for (std::size_t mm = 0; mm < m.dim; ++mm)
        for (std::size_t p = 0; p < m.dim; ++p) {
          const Scalar& av = m.action.at(p, a * m.dim + mm);
          if (!av.is_zero()) y.coaction.at(bb * m.dim + p, mm) += rv * av;
        }
    }
  return y;
}

}  // namespace hopf
