#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/braided.hpp"
#include "hopf/integrals.hpp"
#include "hopf/matrix.hpp"
#include "hopf/quasidual.hpp"
#include "hopf/report.hpp"
#include "hopf/ydmodule.hpp"

namespace hopf {

/// Radford biproduct H#B of a braided Hopf algebra H living in the category
/// of Yetter-Drinfeld modules over B. The carrier is H (x) B with the
/// B index fastest: (h_i # b_j) sits at i*db + j.
struct Biproduct {
  YDBraidedHopf h;
  FinDimHopf base;
  FinDimHopf result;
  std::size_t dh = 0, db = 0;

  std::size_t idx(std::size_t i, std::size_t j) const { return i * db + j; }
};

/// Assemble the biproduct structure constants:
///   (h # b)(h' # b') = sum h (b_1 . h') # b_2 b'
///   Delta(h # b)     = sum h_1 # (h_2)_(-1) b_1  (x)  (h_2)_(0) # b_2
/// and solve for the antipode. Throws if the result fails ordinary Hopf
/// verification, carrying the first failed check as the witness.
inline Biproduct bosonize(const YDBraidedHopf& h) {
  Biproduct bp;
  bp.h = h;
  bp.base = *h.object.base;
  bp.dh = h.dim();
  bp.db = bp.base.dim;
  std::size_t dh = bp.dh, db = bp.db, d = dh * db;
  const FieldPtr& ctx = h.ctx();
  const Matrix& act = h.object.action;      // dh x (db*dh)
  const Matrix& coact = h.object.coaction;  // (db*dh) x dh

  FinDimHopf r = make_hopf(ctx, d);
  r.labels.resize(d);
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t j = 0; j < db; ++j) r.labels[bp.idx(i, j)] = h.label(i) + "#" + bp.base.label(j);

  // multiplication
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < dh; ++k)
        for (std::size_t l = 0; l < db; ++l) {
          std::size_t col = bp.idx(i, j) * d + bp.idx(k, l);
          for (std::size_t j1 = 0; j1 < db; ++j1)
            for (std::size_t j2 = 0; j2 < db; ++j2) {
              const Scalar& cb = bp.base.comult.at(j1 * db + j2, j);
              if (cb.is_zero()) continue;
              for (std::size_t p = 0; p < dh; ++p) {
                const Scalar& av = act.at(p, j1 * dh + k);
                if (av.is_zero()) continue;
                Scalar c1 = cb * av;
                for (std::size_t rr = 0; rr < dh; ++rr) {
                  const Scalar& hm = h.mult.at(rr, i * dh + p);
                  if (hm.is_zero()) continue;
                  Scalar c2 = c1 * hm;
                  for (std::size_t s = 0; s < db; ++s) {
                    const Scalar& bm = bp.base.mult.at(s, j2 * db + l);
                    if (!bm.is_zero()) r.mult.at(bp.idx(rr, s), col) += c2 * bm;
                  }
                }
              }
            }
        }

  r.unit = vec_kron(h.unit, bp.base.unit);

  // comultiplication
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      std::size_t col = bp.idx(i, j);
      for (std::size_t c1 = 0; c1 < dh; ++c1)
        for (std::size_t c2 = 0; c2 < dh; ++c2) {
          const Scalar& hc = h.comult.at(c1 * dh + c2, i);
          if (hc.is_zero()) continue;
          for (std::size_t m = 0; m < db; ++m)
            for (std::size_t p = 0; p < dh; ++p) {
              const Scalar& cv = coact.at(m * dh + p, c2);
              if (cv.is_zero()) continue;
              Scalar c = hc * cv;
              for (std::size_t j1 = 0; j1 < db; ++j1)
                for (std::size_t j2 = 0; j2 < db; ++j2) {
                  const Scalar& cb = bp.base.comult.at(j1 * db + j2, j);
                  if (cb.is_zero()) continue;
                  Scalar cc = c * cb;
                  for (std::size_t s = 0; s < db; ++s) {
                    const Scalar& bm = bp.base.mult.at(s, m * db + j1);
                    if (!bm.is_zero())
                      r.comult.at(bp.idx(c1, s) * d + bp.idx(p, j2), col) += cc * bm;
                  }
                }
            }
        }
    }

  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t j = 0; j < db; ++j)
      r.counit.at(0, bp.idx(i, j)) = h.counit.at(0, i) * bp.base.counit.at(0, j);

  auto s = compute_antipode(r);
  if (!s) throw std::runtime_error("bosonize: the biproduct admits no antipode");
  r.antipode = *s;

  VerificationReport rep = check_hopf(r);
  if (!rep.all_pass())
    throw std::runtime_error("bosonize: the biproduct fails verification: " + rep.first_failure());
  bp.result = std::move(r);
  return bp;
}

/// Restriction of a functional on H#B along a fixed base element:
/// h |-> lambda(h (x) b). `zero` is set when the restriction vanishes.
struct RestrictedIntegral {
  Vec functional;
  bool zero = true;
};

/// Transfer an integral of (H#B)* down to H (lambda(id (x) b)). The input
/// must be a left integral of the dual algebra of the biproduct; the output
/// is checked against the convolution identity f * u = f(1) u afterwards by
/// restrict_integral_report.
inline RestrictedIntegral restrict_integral(const Biproduct& bp, const Vec& lambda, const Vec& b) {
  if (lambda.size() != bp.result.dim) throw std::invalid_argument("restrict_integral: functional size");
  if (b.size() != bp.db) throw std::invalid_argument("restrict_integral: base element size");
  RestrictedIntegral out;
  out.functional = vec_zero(bp.result.ctx, bp.dh);
  for (std::size_t i = 0; i < bp.dh; ++i)
    for (std::size_t j = 0; j < bp.db; ++j) out.functional[i] += lambda[bp.idx(i, j)] * b[j];
  for (const Scalar& v : out.functional)
    if (!v.is_zero()) out.zero = false;
  return out;
}

/// Verify the transfer: lambda is an integral on (H#B)*, and each nonzero
/// restriction along a base basis vector is an integral of the convolution
/// algebra on H*, nonzero for at least one choice of base element.
inline VerificationReport restrict_integral_report(const Biproduct& bp, const Vec& lambda) {
  VerificationReport rep;
  const FieldPtr& ctx = bp.result.ctx;
  Matrix duals = left_integrals_on(bp.result);
  rep.add("bosonization.lambda_is_dual_integral", in_colspan(duals, lambda));

  Matrix h_duals = left_integrals_on(bp.h.as_plain());
  bool some_nonzero = false, all_transfer = true;
  std::string wt;
  for (std::size_t j = 0; j < bp.db; ++j) {
    RestrictedIntegral u = restrict_integral(bp, lambda, basis_vec(ctx, bp.db, j));
    if (u.zero) continue;
    some_nonzero = true;
    if (!in_colspan(h_duals, u.functional)) {
      all_transfer = false;
      wt = "restriction along " + bp.base.label(j) + " is not an integral";
    }
  }
  rep.add("bosonization.some_restriction_nonzero", some_nonzero,
          some_nonzero ? "" : "lambda vanishes on every slice");
  rep.add("bosonization.restrictions_are_integrals", all_transfer, wt);
  return rep;
}

/// Whether the coaction of the YD object is trivial, v |-> 1_B (x) v.
/// On failure names the basis element carrying a nontrivial coaction leg.
inline std::optional<std::string> trivial_coaction_witness(const YDModule& o) {
  std::size_t db = o.bdim(), dm = o.dim;
  const Vec& bu = o.base->unit;
  for (std::size_t m = 0; m < dm; ++m)
    for (std::size_t b = 0; b < db; ++b)
      for (std::size_t p = 0; p < dm; ++p) {
        Scalar expect = (p == m) ? bu[b] : Scalar::zero(o.ctx());
        if (o.coaction.at(b * dm + p, m) != expect)
          return "coaction of " + o.label(m) + " is not trivial";
      }
  return std::nullopt;
}

/// For H with trivial coaction: dim of the integrals of the convolution
/// algebra on H* is 0 or 1, cross-checked through the biproduct: integrals
/// of (H#B)* form a space of dim <= 1, and u (x) v lies in it whenever u, v
/// are integrals on H* and B*.
inline VerificationReport integral_uniqueness_check(const YDBraidedHopf& h) {
  VerificationReport rep;
  auto w = trivial_coaction_witness(h.object);
  rep.add("uniqueness.trivial_coaction", !w.has_value(), w.value_or(""));
  if (w) return rep;

  Matrix h_duals = left_integrals_on(h.as_plain());
  rep.add("uniqueness.dim_dual_integrals_le_1", h_duals.cols() <= 1,
          "dimension " + std::to_string(h_duals.cols()));

  Biproduct bp = bosonize(h);
  Matrix hb_duals = left_integrals_on(bp.result);
  rep.add("uniqueness.biproduct_dual_integrals_dim_le_1", hb_duals.cols() <= 1,
          "dimension " + std::to_string(hb_duals.cols()));

  Matrix b_duals = left_integrals_on(bp.base);
  bool tensor_ok = true;
  for (std::size_t u = 0; u < h_duals.cols() && tensor_ok; ++u)
    for (std::size_t v = 0; v < b_duals.cols() && tensor_ok; ++v)
      tensor_ok = in_colspan(hb_duals, vec_kron(h_duals.col(u), b_duals.col(v)));
  rep.add("uniqueness.tensor_integral_in_biproduct", tensor_ok);
  return rep;
}

}  // namespace hopf
