#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopf/field.hpp"
#include "hopf/matrix.hpp"
#include "hopf/report.hpp"

namespace hopf {

// Structure constants convention, used throughout:
//   mult     : dim x dim^2,  (e_i e_j)            = sum_k mult(k, i*dim+j) e_k
//   unit     : dim,          1                    = sum_k unit[k] e_k
//   comult   : dim^2 x dim,  Delta(e_i)           = sum_{j,k} comult(j*dim+k, i) e_j (x) e_k
//   counit   : 1 x dim
//   antipode : dim x dim,    S(e_j)               = sum_i antipode(i, j) e_i
// Composite bases are always ordered with the second tensor factor fastest.

/// Finite-dimensional unital associative algebra by structure constants.
struct FinDimAlgebra {
  FieldPtr ctx;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  Matrix mult;
  Vec unit;

  std::string label(std::size_t i) const {
    return i < labels.size() && !labels[i].empty() ? labels[i] : "e" + std::to_string(i);
  }
};

/// Finite-dimensional coalgebra by structure constants.
struct FinDimCoalgebra {
  FieldPtr ctx;
  std::size_t dim = 0;
  Matrix comult;
  Matrix counit;
};

/// Finite-dimensional Hopf algebra (or bialgebra while the antipode is unset).
struct FinDimHopf {
  FieldPtr ctx;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  Matrix mult;
  Vec unit;
  Matrix comult;
  Matrix counit;
  Matrix antipode;  // 0x0 while absent

  bool has_antipode() const { return antipode.rows() == dim && antipode.cols() == dim && dim > 0; }
  std::string label(std::size_t i) const {
    return i < labels.size() && !labels[i].empty() ? labels[i] : "e" + std::to_string(i);
  }
  FinDimAlgebra algebra() const { return {ctx, dim, labels, mult, unit}; }
  FinDimCoalgebra coalgebra() const { return {ctx, dim, comult, counit}; }
};

inline FinDimHopf make_hopf(const FieldPtr& ctx, std::size_t dim) {
  FinDimHopf h;
  h.ctx = ctx;
  h.dim = dim;
  h.mult = Matrix(ctx, dim, dim * dim);
  h.unit = vec_zero(ctx, dim);
  h.comult = Matrix(ctx, dim * dim, dim);
  h.counit = Matrix(ctx, 1, dim);
  return h;
}

/// Pretty-print an element as a combination of labeled basis vectors.
inline std::string elem_str(const Vec& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string lbl = i < labels.size() && !labels[i].empty() ? labels[i] : "e" + std::to_string(i);
    std::string c = v[i].str();
    std::string term = (c == "1") ? lbl : (c == "-1") ? "-" + lbl : c + "*" + lbl;
    if (out.empty())
      out = term;
    else
      out += (term[0] == '-') ? term : "+" + term;
  }
  return out.empty() ? "0" : out;
}

/// Permutation matrix for the flip U (x) V -> V (x) U on spaces of the given dims.
inline Matrix flip_matrix(const FieldPtr& ctx, std::size_t du, std::size_t dv) {
  Matrix f(ctx, du * dv, du * dv);
  for (std::size_t a = 0; a < du; ++a)
    for (std::size_t b = 0; b < dv; ++b) f.at(b * du + a, a * dv + b) = Scalar::one(ctx);
  return f;
}

// ---------------------------------------------------------------------------
// Axiom checks. Every identity is evaluated column-by-column on tensor basis
// vectors through apply_slot, so no composite operator matrix is ever formed.
// ---------------------------------------------------------------------------

inline VerificationReport check_algebra(const FinDimAlgebra& a) {
  VerificationReport rep;
  std::size_t d = a.dim;
  bool assoc = true;
  std::string wit;
  for (std::size_t i = 0; i < d && assoc; ++i)
    for (std::size_t j = 0; j < d && assoc; ++j)
      for (std::size_t k = 0; k < d && assoc; ++k) {
        Vec ij = a.mult.col(i * d + j);
        Vec jk = a.mult.col(j * d + k);
        Vec lhs = a.mult.apply(vec_kron(ij, basis_vec(a.ctx, d, k)));
        Vec rhs = a.mult.apply(vec_kron(basis_vec(a.ctx, d, i), jk));
        if (lhs != rhs) {
          assoc = false;
          wit = "(" + a.label(i) + "," + a.label(j) + "," + a.label(k) + "): (xy)z=" +
                elem_str(lhs, a.labels) + " vs x(yz)=" + elem_str(rhs, a.labels);
        }
      }
  rep.add("algebra.associativity", assoc, wit);
  bool ul = true, ur = true;
  std::string wul, wur;
  for (std::size_t i = 0; i < d; ++i) {
    Vec e = basis_vec(a.ctx, d, i);
    if (ul && a.mult.apply(vec_kron(a.unit, e)) != e) {
      ul = false;
      wul = "1*" + a.label(i) + " != " + a.label(i);
    }
    if (ur && a.mult.apply(vec_kron(e, a.unit)) != e) {
      ur = false;
      wur = a.label(i) + "*1 != " + a.label(i);
    }
  }
  rep.add("algebra.unit_left", ul, wul);
  rep.add("algebra.unit_right", ur, wur);
  return rep;
}

inline VerificationReport check_coalgebra(const FinDimCoalgebra& c) {
  VerificationReport rep;
  std::size_t d = c.dim;
  bool coassoc = true, cl = true, cr = true;
  std::string wco, wcl, wcr;
  for (std::size_t i = 0; i < d; ++i) {
    Vec x = c.comult.col(i);
    if (coassoc && apply_slot(c.comult, 1, d, x) != apply_slot(c.comult, d, 1, x)) {
      coassoc = false;
      wco = "basis index " + std::to_string(i);
    }
    Vec e = basis_vec(c.ctx, d, i);
    if (cl && apply_slot(c.counit, 1, d, x) != e) {
      cl = false;
      wcl = "basis index " + std::to_string(i);
    }
    if (cr && apply_slot(c.counit, d, 1, x) != e) {
      cr = false;
      wcr = "basis index " + std::to_string(i);
    }
  }
  rep.add("coalgebra.coassociativity", coassoc, wco);
  rep.add("coalgebra.counit_left", cl, wcl);
  rep.add("coalgebra.counit_right", cr, wcr);
  return rep;
}

/// Bialgebra compatibility: Delta and eps are algebra maps (plain flip).
inline VerificationReport check_bialgebra_compat(const FinDimHopf& h) {
  VerificationReport rep;
  std::size_t d = h.dim;
  Matrix mid_flip = flip_matrix(h.ctx, d, d);
  bool dm = true, cm = true;
  std::string wdm, wcm;
  for (std::size_t i = 0; i < d && (dm || cm); ++i)
    for (std::size_t j = 0; j < d && (dm || cm); ++j) {
      Vec prod = h.mult.col(i * d + j);
      if (dm) {
        Vec lhs = h.comult.apply(prod);
        // (m (x) m)(id (x) flip (x) id)(Delta (x) Delta)
        Vec rhs = vec_kron(h.comult.col(i), h.comult.col(j));
        rhs = apply_slot(mid_flip, d, d, rhs);
        rhs = apply_slot(h.mult, 1, d * d, rhs);
        rhs = apply_slot(h.mult, d, 1, rhs);
        if (lhs != rhs) {
          dm = false;
          wdm = "Delta(" + h.label(i) + "*" + h.label(j) + ") mismatch";
        }
      }
      if (cm) {
        Scalar lhs = h.counit.apply(prod)[0];
        Scalar rhs = h.counit.at(0, i) * h.counit.at(0, j);
        if (lhs != rhs) {
          cm = false;
          wcm = "eps(" + h.label(i) + "*" + h.label(j) + ") mismatch";
        }
      }
    }
  rep.add("bialgebra.comult_multiplicative", dm, wdm);
  rep.add("bialgebra.counit_multiplicative", cm, wcm);
  rep.add("bialgebra.comult_unital", h.comult.apply(h.unit) == vec_kron(h.unit, h.unit));
  rep.add("bialgebra.counit_unital", h.counit.apply(h.unit)[0].is_one());
  return rep;
}

/// Both antipode laws for the stored antipode.
inline VerificationReport check_antipode_laws(const FinDimHopf& h) {
  VerificationReport rep;
  if (!h.has_antipode()) {
    rep.add("hopf.antipode_present", false, "no antipode stored");
    return rep;
  }
  std::size_t d = h.dim;
  bool left = true, right = true;
  std::string wl, wr;
  for (std::size_t i = 0; i < d; ++i) {
    Vec x = h.comult.col(i);
    Vec target = vec_scale(h.counit.at(0, i), h.unit);
    if (left && h.mult.apply(apply_slot(h.antipode, 1, d, x)) != target) {
      left = false;
      wl = "m(S (x) id)Delta fails on " + h.label(i);
    }
    if (right && h.mult.apply(apply_slot(h.antipode, d, 1, x)) != target) {
      right = false;
      wr = "m(id (x) S)Delta fails on " + h.label(i);
    }
  }
  rep.add("hopf.antipode_left", left, wl);
  rep.add("hopf.antipode_right", right, wr);
  return rep;
}

/// Full ordinary Hopf verification.
inline VerificationReport check_hopf(const FinDimHopf& h) {
  VerificationReport rep;
  rep.merge(check_algebra(h.algebra()));
  rep.merge(check_coalgebra(h.coalgebra()));
  rep.merge(check_bialgebra_compat(h));
  rep.merge(check_antipode_laws(h));
  return rep;
}

// ---------------------------------------------------------------------------
// Convolution and antipode solving
// ---------------------------------------------------------------------------

/// Convolution of endomorphisms f,g : H -> H, (f*g) = m (f (x) g) Delta.
inline Matrix convolution(const FinDimHopf& h, const Matrix& f, const Matrix& g) {
  return h.mult * kron(f, g) * h.comult;
}

/// Convolution of functionals (rows) f,g : H -> k, (f*g) = (f (x) g) Delta.
inline Matrix convolve_functionals(const FinDimHopf& h, const Matrix& f, const Matrix& g) {
  return kron(f, g) * h.comult;
}

/// Solve both antipode laws m(S (x) id)Delta = m(id (x) S)Delta = unit.eps as
/// one stacked linear system. Returns nullopt when no antipode exists.
inline std::optional<Matrix> compute_antipode(const FinDimHopf& h) {
  std::size_t d = h.dim;
  // unknowns u[(s,a)] = S(a -> s), equations indexed by (j, p)
  Matrix lhs(h.ctx, 2 * d * d, d * d);
  Matrix rhs(h.ctx, 2 * d * d, 1);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t p = 0; p < d; ++p) {
      rhs.at(j * d + p, 0) = h.unit[p] * h.counit.at(0, j);
      rhs.at(d * d + j * d + p, 0) = rhs.at(j * d + p, 0);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t s = 0; s < d; ++s) {
          Scalar accl = Scalar::zero(h.ctx), accr = Scalar::zero(h.ctx);
          for (std::size_t b = 0; b < d; ++b) {
            // left law: sum_b Delta(j)[(a,b)] mult(p, (s,b)) S(s,a)
            accl += h.comult.at(a * d + b, j) * h.mult.at(p, s * d + b);
            // right law: sum_b Delta(j)[(b,a)] mult(p, (b,s)) S(s,a)
            accr += h.comult.at(b * d + a, j) * h.mult.at(p, b * d + s);
          }
          lhs.at(j * d + p, s * d + a) += accl;
          lhs.at(d * d + j * d + p, s * d + a) += accr;
        }
    }
  auto sol = solve(lhs, rhs);
  if (!sol) return std::nullopt;
  Matrix s(h.ctx, d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t i = 0; i < d; ++i) s.at(i, a) = sol->at(i * d + a, 0);
  return s;
}

// ---------------------------------------------------------------------------
/// First violated condition for f : from -> to being a morphism of Hopf
/// algebras (bijectivity is not required and must be checked separately).
inline std::optional<std::string> hopf_morphism_witness(const Matrix& f, const FinDimHopf& from,
                                                        const FinDimHopf& to) {
  if (f.rows() != to.dim || f.cols() != from.dim) return "shape mismatch";
  if (f.apply(from.unit) != to.unit) return "does not preserve the unit";
  if (f * from.mult != to.mult * kron(f, f)) return "not multiplicative";
  if (kron(f, f) * from.comult != to.comult * f) return "not comultiplicative";
  if (to.counit * f != from.counit) return "does not preserve the counit";
  if (from.has_antipode() && to.has_antipode() && f * from.antipode != to.antipode * f)
    return "does not intertwine the antipodes";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Duals and tensor algebras
// ---------------------------------------------------------------------------

/// Plain linear-dual Hopf algebra on the dual basis: all tensors transpose.
inline FinDimHopf dual_hopf(const FinDimHopf& h) {
  FinDimHopf d;
  d.ctx = h.ctx;
  d.dim = h.dim;
  d.labels.reserve(h.dim);
  for (std::size_t i = 0; i < h.dim; ++i) d.labels.push_back(h.label(i) + "*");
  d.mult = h.comult.transpose();
  d.unit = vec_zero(h.ctx, h.dim);
  for (std::size_t i = 0; i < h.dim; ++i) d.unit[i] = h.counit.at(0, i);
  d.comult = h.mult.transpose();
  d.counit = Matrix(h.ctx, 1, h.dim);
  for (std::size_t i = 0; i < h.dim; ++i) d.counit.at(0, i) = h.unit[i];
  if (h.has_antipode()) d.antipode = h.antipode.transpose();
  return d;
}

/// Componentwise tensor-product algebra A (x) B (ordinary flip, no braiding).
inline FinDimAlgebra tensor_algebra(const FinDimAlgebra& a, const FinDimAlgebra& b) {
  FinDimAlgebra t;
  t.ctx = a.ctx;
  t.dim = a.dim * b.dim;
  t.labels.reserve(t.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) t.labels.push_back(a.label(i) + "(x)" + b.label(j));
  t.mult = Matrix(t.ctx, t.dim, t.dim * t.dim);
  for (std::size_t p = 0; p < a.dim; ++p)
    for (std::size_t q = 0; q < b.dim; ++q)
      for (std::size_t i1 = 0; i1 < a.dim; ++i1)
        for (std::size_t j1 = 0; j1 < b.dim; ++j1) {
          for (std::size_t i2 = 0; i2 < a.dim; ++i2) {
            const Scalar& x = a.mult.at(p, i1 * a.dim + i2);
            if (x.is_zero()) continue;
            for (std::size_t j2 = 0; j2 < b.dim; ++j2) {
              const Scalar& y = b.mult.at(q, j1 * b.dim + j2);
              if (y.is_zero()) continue;
              std::size_t u = i1 * b.dim + j1, v = i2 * b.dim + j2;
              t.mult.at(p * b.dim + q, u * t.dim + v) += x * y;
            }
          }
        }
  t.unit = vec_kron(a.unit, b.unit);
  return t;
}

}  // namespace hopf
