#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopf/braided.hpp"
#include "hopf/diagonal.hpp"
#include "hopf/field.hpp"
#include "hopf/matrix.hpp"
#include "hopf/report.hpp"

namespace hopf {

/// Degree-capped model of a graded braided Hopf algebra with diagonal
/// braiding C(u (x) v) = q^(deg u * deg v) (v (x) u) on homogeneous vectors.
///
/// The homogeneous components of degrees 0..cap are flattened into a single
/// basis; `dims[t]` records the size of the degree-t slice and `degree[i]`
/// the degree of the i-th flattened basis vector. A component may be empty
/// (dims[t] = 0), which encodes that products landing in degree t are
/// genuinely zero.
///
/// Capped discipline: a product column (i, j) of `mult` carries meaning only
/// when degree[i] + degree[j] <= cap; columns outside that range are stored
/// as zero but make no claim. Every check below asserts an identity only
/// when each intermediate degree of the axiom instance stays in range, so
/// all reported equalities are exact statements about the underlying graded
/// object, not artifacts of the cap.
struct GradedBraidedHopf {
  Scalar q;
  std::vector<std::size_t> dims;    // component dimensions, degrees 0..cap
  std::vector<std::size_t> degree;  // degree of each flattened basis vector
  std::vector<std::string> labels;
  Matrix mult;      // D x D^2
  Vec unit;         // supported in degree 0
  Matrix comult;    // D^2 x D, degree-preserving in total degree
  Matrix counit;    // 1 x D, vanishing on positive degrees
  Matrix antipode;  // D x D, degree-preserving

  std::size_t cap() const { return dims.empty() ? 0 : dims.size() - 1; }
  std::size_t dim() const { return degree.size(); }
  const FieldPtr& ctx() const { return mult.ctx(); }
  bool in_range(std::size_t i, std::size_t j) const { return degree[i] + degree[j] <= cap(); }
  std::string label(std::size_t i) const {
    return i < labels.size() && !labels[i].empty() ? labels[i] : "e" + std::to_string(i);
  }
  /// Braiding coefficient for the homogeneous pair (i, j).
  Scalar braid_coeff(std::size_t i, std::size_t j) const {
    return q.pow(static_cast<long>(degree[i]) * static_cast<long>(degree[j]));
  }
};

/// The q-polynomial line capped at `cap`: basis {x^n}, deg x^n = n, with
/// x^i x^j = x^(i+j) whenever i + j <= cap. The coproduct is not postulated:
/// it is computed from Delta(x) = x (x) 1 + 1 (x) x by braided
/// multiplicativity, (a (x) b)(c (x) e) = q^(deg b * deg c) ac (x) be, and
/// the antipode is solved degree by degree from m(S (x) id)Delta = unit eps.
inline GradedBraidedHopf braided_line(const FieldPtr& ctx, const Scalar& q, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("braided_line: cap must be at least 1");
  if (q.is_zero()) throw std::invalid_argument("braided_line: q must be invertible");
  std::size_t d = cap + 1;
  GradedBraidedHopf h{q,
                      std::vector<std::size_t>(cap + 1, 1),
                      {},
                      {},
                      Matrix(ctx, d, d * d),
                      vec_zero(ctx, d),
                      Matrix(ctx, d * d, d),
                      Matrix(ctx, 1, d),
                      Matrix(ctx, d, d)};
  for (std::size_t n = 0; n <= cap; ++n) {
    h.degree.push_back(n);
    h.labels.push_back(n == 0 ? "1" : (n == 1 ? "x" : "x^" + std::to_string(n)));
  }
  h.unit[0] = Scalar::one(ctx);
  h.counit.at(0, 0) = Scalar::one(ctx);
  for (std::size_t i = 0; i <= cap; ++i)
    for (std::size_t j = 0; i + j <= cap; ++j) h.mult.at(i + j, i * d + j) = Scalar::one(ctx);

  Vec cur = vec_zero(ctx, d * d);
  cur[0] = Scalar::one(ctx);  // Delta(1) = 1 (x) 1
  h.comult.set_col(0, cur);
  for (std::size_t n = 1; n <= cap; ++n) {
    // right-multiply Delta(x^(n-1)) by Delta(x) = x (x) 1 + 1 (x) x
    Vec next = vec_zero(ctx, d * d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const Scalar& u = cur[a * d + b];
        if (u.is_zero()) continue;
        // (x^a (x) x^b)(x (x) 1): braiding moves x past x^b
        next[(a + 1) * d + b] += u * q.pow(static_cast<long>(b));
        // (x^a (x) x^b)(1 (x) x): no transposition
        next[a * d + (b + 1)] += u;
      }
    cur = next;
    h.comult.set_col(n, cur);
  }

  h.antipode.at(0, 0) = Scalar::one(ctx);
  for (std::size_t n = 1; n <= cap; ++n) {
    // sum_i Delta(x^n)[(i, n-i)] S(x^i) x^(n-i) = eps(x^n) 1 = 0; the i = n
    // term has coefficient 1, so it is determined by the lower degrees
    Scalar acc = Scalar::zero(ctx);
    for (std::size_t i = 0; i < n; ++i)
      acc += h.comult.at(i * d + (n - i), n) * h.antipode.at(i, i);
    h.antipode.at(n, n) = -acc;
  }
  return h;
}

/// The n-truncation k[x]/(x^n) at q = zeta_n, as a capped graded object with
/// an empty degree-n component: products of total degree n are in range and
/// genuinely zero. Throws if the coproduct of the line does not descend to
/// the quotient (the mixed degree-n coproduct coefficients must vanish).
inline GradedBraidedHopf nichols_graded(std::size_t n) {
  if (n < 2) throw std::invalid_argument("nichols_graded: n must be at least 2");
  // the quadratic root of unity is rational, so n = 2 stays over the primes
  FieldPtr ctx = (n == 2) ? field_rational() : field_cyclotomic(static_cast<unsigned>(n));
  Scalar q = (n == 2) ? -Scalar::one(ctx) : zeta(ctx);
  GradedBraidedHopf line = braided_line(ctx, q, n);
  std::size_t ld = n + 1;
  for (std::size_t i = 1; i < n; ++i)
    if (!line.comult.at(i * ld + (n - i), n).is_zero())
      throw std::domain_error(
          "nichols_graded: the coproduct does not descend to the degree-" + std::to_string(n) +
          " quotient (mixed coefficient at " + std::to_string(i) + " is nonzero)");

  GradedBraidedHopf h{q,
                      std::vector<std::size_t>(n + 1, 1),
                      {},
                      {},
                      Matrix(ctx, n, n * n),
                      vec_zero(ctx, n),
                      Matrix(ctx, n * n, n),
                      Matrix(ctx, 1, n),
                      Matrix(ctx, n, n)};
  h.dims[n] = 0;
  for (std::size_t t = 0; t < n; ++t) {
    h.degree.push_back(t);
    h.labels.push_back(line.labels[t]);
  }
  h.unit[0] = Scalar::one(ctx);
  h.counit.at(0, 0) = Scalar::one(ctx);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) h.mult.at(i + j, i * n + j) = Scalar::one(ctx);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t a = 0; a <= m; ++a)
      h.comult.at(a * n + (m - a), m) = line.comult.at(a * ld + (m - a), m);
    h.antipode.at(m, m) = line.antipode.at(m, m);
  }
  return h;
}

/// The truncation as a finite-dimensional braided Hopf algebra in the
/// diagonal backend (x^i x^j = 0 once i + j >= n). Fully verified on
/// construction; throws if any braided Hopf axiom fails.
inline DiagBraidedHopf truncated_nichols(std::size_t n) {
  GradedBraidedHopf g = nichols_graded(n);
  DiagBraidedHopf h;
  std::vector<long long> degs(n);
  for (std::size_t t = 0; t < n; ++t) degs[t] = static_cast<long long>(t);
  h.object = DiagObject{g.ctx(), g.q, degs};
  h.labels = g.labels;
  h.mult = g.mult;  // columns of total degree >= n are zero: the truncation
  h.unit = g.unit;
  h.comult = g.comult;
  h.counit = g.counit;
  h.antipode = g.antipode;
  auto rep = check_braided_hopf(h);
  if (!rep.all_pass())
    throw std::domain_error("truncated_nichols: verification failed: " + rep.first_failure());
  return h;
}

/// Braid equation for the diagonal degree braiding, verified exactly on
/// every basis vector of the triple tensor power. The braiding sends a
/// basis pair to its swap scaled by braid_coeff, so each side of the
/// equation is computed as three genuine swap steps on (index triple,
/// scalar) states; no d^3 x d^3 matrix is materialized.
inline bool graded_braid_equation_holds(const GradedBraidedHopf& h) {
  std::size_t d = h.dim();
  struct State {
    std::size_t a, b, c;
    Scalar s;
  };
  auto swap12 = [&](State t) {
    return State{t.b, t.a, t.c, t.s * h.braid_coeff(t.a, t.b)};
  };
  auto swap23 = [&](State t) {
    return State{t.a, t.c, t.b, t.s * h.braid_coeff(t.b, t.c)};
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        State start{i, j, k, Scalar::one(h.ctx())};
        State lhs = swap12(swap23(swap12(start)));
        State rhs = swap23(swap12(swap23(start)));
        if (lhs.a != rhs.a || lhs.b != rhs.b || lhs.c != rhs.c || lhs.s != rhs.s) return false;
      }
  return true;
}

/// Capped axiom suite. Every check quantifies only over axiom instances
/// whose intermediate degrees all stay within the cap.
inline VerificationReport check_graded(const GradedBraidedHopf& h) {
  VerificationReport rep;
  const FieldPtr& ctx = h.ctx();
  std::size_t d = h.dim(), cap = h.cap();

  bool prof = h.dims.size() == cap + 1 && h.degree.size() == d;
  if (prof) {
    std::vector<std::size_t> cnt(cap + 1, 0);
    for (std::size_t t : h.degree) {
      if (t > cap) {
        prof = false;
        break;
      }
      ++cnt[t];
    }
    for (std::size_t t = 0; t <= cap && prof; ++t) prof = (cnt[t] == h.dims[t]);
  }
  rep.add("graded.degree_profile", prof);
  if (!prof) return rep;

  bool u0 = true;
  for (std::size_t i = 0; i < d; ++i)
    if (!h.unit[i].is_zero() && h.degree[i] != 0) u0 = false;
  rep.add("graded.unit_in_degree_zero", u0);

  bool eps0 = true;
  std::string weps;
  for (std::size_t i = 0; i < d && eps0; ++i)
    if (h.degree[i] > 0 && !h.counit.at(0, i).is_zero()) {
      eps0 = false;
      weps = "eps(" + h.label(i) + ") is nonzero in positive degree";
    }
  rep.add("graded.counit_vanishes_in_positive_degree", eps0, weps);

  bool madd = true;
  std::string wm;
  for (std::size_t i = 0; i < d && madd; ++i)
    for (std::size_t j = 0; j < d && madd; ++j)
      for (std::size_t p = 0; p < d && madd; ++p) {
        if (h.mult.at(p, i * d + j).is_zero()) continue;
        if (!h.in_range(i, j)) {
          madd = false;
          wm = "out-of-range column (" + h.label(i) + ", " + h.label(j) + ") is populated";
        } else if (h.degree[p] != h.degree[i] + h.degree[j]) {
          madd = false;
          wm = h.label(i) + " " + h.label(j) + " has a component off its degree";
        }
      }
  rep.add("graded.mult_degree_additive", madd, wm);

  bool cdeg = true;
  std::string wc;
  for (std::size_t k = 0; k < d && cdeg; ++k)
    for (std::size_t i = 0; i < d && cdeg; ++i)
      for (std::size_t j = 0; j < d && cdeg; ++j)
        if (!h.comult.at(i * d + j, k).is_zero() &&
            h.degree[i] + h.degree[j] != h.degree[k]) {
          cdeg = false;
          wc = "Delta(" + h.label(k) + ") has a component off total degree";
        }
  rep.add("graded.comult_degree_preserving", cdeg, wc);

  bool sdeg = true;
  if (h.antipode.rows() == d)
    for (std::size_t k = 0; k < d && sdeg; ++k)
      for (std::size_t p = 0; p < d && sdeg; ++p)
        if (!h.antipode.at(p, k).is_zero() && h.degree[p] != h.degree[k]) sdeg = false;
  rep.add("graded.antipode_degree_preserving", sdeg);

  // associativity on triples whose total degree stays in range
  bool assoc = true;
  std::string wa;
  for (std::size_t i = 0; i < d && assoc; ++i)
    for (std::size_t j = 0; j < d && assoc; ++j) {
      if (!h.in_range(i, j)) continue;
      for (std::size_t k = 0; k < d && assoc; ++k) {
        if (h.degree[i] + h.degree[j] + h.degree[k] > cap) continue;
        Vec lhs = vec_zero(ctx, d), rhs = vec_zero(ctx, d);
        for (std::size_t m = 0; m < d; ++m) {
          const Scalar& u = h.mult.at(m, i * d + j);
          if (!u.is_zero())
            for (std::size_t p = 0; p < d; ++p) lhs[p] += u * h.mult.at(p, m * d + k);
          const Scalar& v = h.mult.at(m, j * d + k);
          if (!v.is_zero())
            for (std::size_t p = 0; p < d; ++p) rhs[p] += v * h.mult.at(p, i * d + m);
        }
        if (lhs != rhs) {
          assoc = false;
          wa = "(" + h.label(i) + " " + h.label(j) + ") " + h.label(k) + " != " + h.label(i) +
               " (" + h.label(j) + " " + h.label(k) + ")";
        }
      }
    }
  rep.add("graded.assoc_in_range", assoc, wa);

  bool unital = true;
  std::string wu;
  for (std::size_t j = 0; j < d && unital; ++j) {
    Vec l = vec_zero(ctx, d), r = vec_zero(ctx, d);
    for (std::size_t i = 0; i < d; ++i) {
      if (!h.unit[i].is_zero())
        for (std::size_t p = 0; p < d; ++p) {
          l[p] += h.unit[i] * h.mult.at(p, i * d + j);
          r[p] += h.unit[i] * h.mult.at(p, j * d + i);
        }
    }
    if (l != basis_vec(ctx, d, j) || r != basis_vec(ctx, d, j)) {
      unital = false;
      wu = "unit law fails on " + h.label(j);
    }
  }
  rep.add("graded.unit_laws", unital, wu);

  bool coassoc = true;
  std::string wca;
  for (std::size_t k = 0; k < d && coassoc; ++k) {
    Vec c = h.comult.col(k);
    if (apply_slot(h.comult, 1, d, c) != apply_slot(h.comult, d, 1, c)) {
      coassoc = false;
      wca = "coassociativity fails on " + h.label(k);
    }
  }
  rep.add("graded.coassoc", coassoc, wca);

  bool counital = true;
  std::string wcu;
  for (std::size_t k = 0; k < d && counital; ++k) {
    Vec c = h.comult.col(k);
    Vec l = vec_zero(ctx, d), r = vec_zero(ctx, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Scalar& u = c[i * d + j];
        if (u.is_zero()) continue;
        l[j] += h.counit.at(0, i) * u;
        r[i] += h.counit.at(0, j) * u;
      }
    if (l != basis_vec(ctx, d, k) || r != basis_vec(ctx, d, k)) {
      counital = false;
      wcu = "counit law fails on " + h.label(k);
    }
  }
  rep.add("graded.counit_laws", counital, wcu);

  // Delta(ab) = Delta(a) Delta(b) with the braiding between the middle legs,
  // for products in range; all intermediate degrees then stay in range
  bool compat = true;
  std::string wcp;
  for (std::size_t i = 0; i < d && compat; ++i)
    for (std::size_t j = 0; j < d && compat; ++j) {
      if (!h.in_range(i, j)) continue;
      Vec lhs = h.comult.apply(h.mult.col(i * d + j));
      Vec rhs = vec_zero(ctx, d * d);
      Vec u = h.comult.col(i), v = h.comult.col(j);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          const Scalar& ua = u[a * d + b];
          if (ua.is_zero()) continue;
          for (std::size_t c = 0; c < d; ++c)
            for (std::size_t e = 0; e < d; ++e) {
              const Scalar& vb = v[c * d + e];
              if (vb.is_zero()) continue;
              Scalar coeff = ua * vb * h.braid_coeff(b, c);
              for (std::size_t p = 0; p < d; ++p) {
                const Scalar& m1 = h.mult.at(p, a * d + c);
                if (m1.is_zero()) continue;
                for (std::size_t r = 0; r < d; ++r) {
                  const Scalar& m2 = h.mult.at(r, b * d + e);
                  if (!m2.is_zero()) rhs[p * d + r] += coeff * m1 * m2;
                }
              }
            }
        }
      if (lhs != rhs) {
        compat = false;
        wcp = "Delta(" + h.label(i) + " " + h.label(j) +
              ") differs from the braided product of coproducts";
      }
    }
  rep.add("graded.compat_in_range", compat, wcp);

  bool epsm = true;
  std::string wem;
  for (std::size_t i = 0; i < d && epsm; ++i)
    for (std::size_t j = 0; j < d && epsm; ++j) {
      if (!h.in_range(i, j)) continue;
      if (h.counit.apply(h.mult.col(i * d + j))[0] != h.counit.at(0, i) * h.counit.at(0, j)) {
        epsm = false;
        wem = "eps(" + h.label(i) + " " + h.label(j) + ") != eps eps";
      }
    }
  rep.add("graded.counit_mult_in_range", epsm, wem);
  rep.add("graded.comult_unit", h.comult.apply(h.unit) == vec_kron(h.unit, h.unit));
  rep.add("graded.counit_unit", h.counit.apply(h.unit)[0].is_one());

  if (h.antipode.rows() == d) {
    bool sl = true, sr = true;
    std::string wsl, wsr;
    for (std::size_t k = 0; k < d; ++k) {
      Vec c = h.comult.col(k);
      Vec accl = vec_zero(ctx, d), accr = vec_zero(ctx, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          const Scalar& u = c[i * d + j];
          if (u.is_zero()) continue;
          for (std::size_t m = 0; m < d; ++m) {
            const Scalar& si = h.antipode.at(m, i);
            if (!si.is_zero())
              for (std::size_t p = 0; p < d; ++p) accl[p] += u * si * h.mult.at(p, m * d + j);
            const Scalar& sj = h.antipode.at(m, j);
            if (!sj.is_zero())
              for (std::size_t p = 0; p < d; ++p) accr[p] += u * sj * h.mult.at(p, i * d + m);
          }
        }
      Vec want = vec_scale(h.counit.at(0, k), h.unit);
      if (sl && accl != want) {
        sl = false;
        wsl = "m(S (x) id)Delta fails on " + h.label(k);
      }
      if (sr && accr != want) {
        sr = false;
        wsr = "m(id (x) S)Delta fails on " + h.label(k);
      }
    }
    rep.add("graded.antipode_left", sl, wsl);
    rep.add("graded.antipode_right", sr, wsr);
  } else {
    rep.add("graded.antipode_present", false, "no antipode stored");
  }
  return rep;
}

namespace detail {
/// Homogeneous capped left-integral search shared by an algebra and its
/// graded dual: basis of { y : degree y <= cap - 1, and x_i y = eps(x_i) y
/// for every i with degree x_i + degree y <= cap }. The defining conditions
/// are degree-homogeneous, so the solution space is spanned by homogeneous
/// vectors and the search runs one degree slice at a time.
inline Matrix capped_left_integrals(const Matrix& mult, const Vec& eps,
                                    const std::vector<std::size_t>& degree, std::size_t cap) {
  const FieldPtr& ctx = mult.ctx();
  std::size_t d = degree.size();
  std::vector<Vec> found;
  for (std::size_t t = 0; t + 1 <= cap; ++t) {
    std::vector<std::size_t> slice;
    for (std::size_t m = 0; m < d; ++m)
      if (degree[m] == t) slice.push_back(m);
    if (slice.empty()) continue;
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < d; ++i)
      if (degree[i] + t <= cap) gens.push_back(i);
    Matrix rows(ctx, gens.size() * d, slice.size());
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      std::size_t i = gens[gi];
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t mj = 0; mj < slice.size(); ++mj) {
          Scalar v = mult.at(p, i * d + slice[mj]);
          if (p == slice[mj]) v -= eps[i];
          rows.at(gi * d + p, mj) = v;
        }
    }
    Matrix ker = kernel(rows);
    for (std::size_t c = 0; c < ker.cols(); ++c) {
      Vec y = vec_zero(ctx, d);
      for (std::size_t mj = 0; mj < slice.size(); ++mj) y[slice[mj]] = ker.at(mj, c);
      found.push_back(std::move(y));
    }
  }
  return Matrix::from_cols(ctx, d, found);
}
}  // namespace detail

/// Left integrals of the capped object that are certified within the cap:
/// candidates of degree <= cap - 1 annihilated (up to eps) by every
/// left multiplication that stays in range.
inline Matrix capped_integral_search(const GradedBraidedHopf& h) {
  Vec eps = vec_zero(h.ctx(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) eps[i] = h.counit.at(0, i);
  return detail::capped_left_integrals(h.mult, eps, h.degree, h.cap());
}

/// Degree-wise dual of a capped graded object. The dual basis xi_I pairs the
/// flattened basis x_I (pairing = identity), and carries two products:
///
///   mult:        the braided dual product, whose pairing law threads the
///                braiding between the dual legs and the coproduct legs,
///                giving (xi_I xi_J)(x_K) = q^(-deg I deg J) Delta(x_K)[(I,J)];
///   convolution: the plain transpose of the coproduct, with no braiding
///                factor, (xi_I * xi_J)(x_K) = Delta(x_K)[(I,J)].
///
/// Both are exposed because they answer different questions: `mult` is the
/// product under which the dual is the degree-capped analogue of the braided
/// quasi-dual (and the one integral searches use); `convolution` is the
/// classical dual-algebra product of the underlying coalgebra. They differ
/// exactly by the bicharacter.
struct GradedDual {
  Scalar q;
  std::size_t capv = 0;
  std::vector<std::size_t> degree;  // degree of xi_I = degree of x_I
  std::vector<std::string> labels;
  Matrix pairing;      // D x D, identity for the canonical dual basis
  Matrix mult;         // D x D^2, braided dual product (capped)
  Matrix convolution;  // D x D^2, plain transposed coproduct (capped)
  Vec unit;            // the counit of H in the dual basis
  Matrix lact;         // D x D^2: column (i, j) is x_i -> xi_j
  Matrix ract;         // D x D^2: column (j, i) is xi_j <- x_i

  std::size_t dim() const { return degree.size(); }
  std::size_t cap() const { return capv; }
};

inline GradedDual graded_dual(const GradedBraidedHopf& h) {
  const FieldPtr& ctx = h.ctx();
  std::size_t d = h.dim();
  GradedDual g{h.q,
               h.cap(),
               h.degree,
               {},
               Matrix::identity(ctx, d),
               Matrix(ctx, d, d * d),
               Matrix(ctx, d, d * d),
               vec_zero(ctx, d),
               Matrix(ctx, d, d * d),
               Matrix(ctx, d, d * d)};
  for (std::size_t i = 0; i < d; ++i) g.labels.push_back(h.label(i) + "*");
  for (std::size_t i = 0; i < d; ++i) g.unit[i] = h.counit.at(0, i);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (!h.in_range(i, j)) continue;
      Scalar tw = h.q.pow(-static_cast<long>(h.degree[i]) * static_cast<long>(h.degree[j]));
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& c = h.comult.at(i * d + j, k);
        if (c.is_zero()) continue;
        g.convolution.at(k, i * d + j) = c;
        g.mult.at(k, i * d + j) = tw * c;
      }
    }
  // (x_U -> xi_V)(x_T) = q^(deg U (deg T - deg V)) <xi_V, x_T x_U>: the hit
  // action transported through the braiding, degree slice by degree slice
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v) {
      long du = static_cast<long>(h.degree[u]), dv = static_cast<long>(h.degree[v]);
      for (std::size_t t = 0; t < d; ++t) {
        const Scalar& m = h.mult.at(v, t * d + u);
        if (m.is_zero()) continue;
        long dt = static_cast<long>(h.degree[t]);
        g.lact.at(t, u * d + v) = h.q.pow(du * (dt - dv)) * m;
      }
    }
  // xi <- h = lact(S (x) id) C^(-1): undo the braiding of the pair, apply
  // the antipode, then hit from the left; this is the composition that is an
  // honest right action (the left action alone composes only through the
  // double braiding)
  for (std::size_t v = 0; v < d; ++v)
    for (std::size_t u = 0; u < d; ++u) {
      long du = static_cast<long>(h.degree[u]), dv = static_cast<long>(h.degree[v]);
      Scalar unbraid = h.q.pow(du * dv);
      for (std::size_t w = 0; w < d; ++w) {
        const Scalar& s = h.antipode.at(w, u);
        if (s.is_zero()) continue;
        for (std::size_t t = 0; t < d; ++t) {
          const Scalar& l = g.lact.at(t, w * d + v);
          if (!l.is_zero()) g.ract.at(t, v * d + u) += unbraid * s * l;
        }
      }
    }
  return g;
}

/// Axioms of the graded dual, checked within the cap and independently of
/// the construction formulas: both products associative and unital, the
/// hit action a module action, and the two products related by the
/// bicharacter.
inline VerificationReport check_graded_dual(const GradedBraidedHopf& h, const GradedDual& g) {
  VerificationReport rep;
  const FieldPtr& ctx = h.ctx();
  std::size_t d = h.dim(), cap = h.cap();
  rep.add("gradeddual.pairing_dual_basis", g.pairing.is_identity());

  bool upc = true;
  for (std::size_t k = 0; k < d && upc; ++k) {
    Scalar acc = Scalar::zero(ctx);
    for (std::size_t i = 0; i < d; ++i) acc += g.unit[i] * g.pairing.at(i, k);
    if (acc != h.counit.at(0, k)) upc = false;
  }
  rep.add("gradeddual.unit_pairs_as_counit", upc);

  auto assoc_of = [&](const Matrix& prod, const char* name) {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < d && ok; ++i)
      for (std::size_t j = 0; j < d && ok; ++j) {
        if (g.degree[i] + g.degree[j] > cap) continue;
        for (std::size_t k = 0; k < d && ok; ++k) {
          if (g.degree[i] + g.degree[j] + g.degree[k] > cap) continue;
          Vec lhs = vec_zero(ctx, d), rhs = vec_zero(ctx, d);
          for (std::size_t m = 0; m < d; ++m) {
            const Scalar& u = prod.at(m, i * d + j);
            if (!u.is_zero())
              for (std::size_t p = 0; p < d; ++p) lhs[p] += u * prod.at(p, m * d + k);
            const Scalar& v = prod.at(m, j * d + k);
            if (!v.is_zero())
              for (std::size_t p = 0; p < d; ++p) rhs[p] += v * prod.at(p, i * d + m);
          }
          if (lhs != rhs) {
            ok = false;
            w = "associativity fails at (" + g.labels[i] + ", " + g.labels[j] + ", " +
                g.labels[k] + ")";
          }
        }
      }
    rep.add(std::string("gradeddual.") + name + "_associative_in_range", ok, w);
  };
  assoc_of(g.mult, "mult");
  assoc_of(g.convolution, "convolution");

  auto unital_of = [&](const Matrix& prod, const char* name) {
    bool ok = true;
    for (std::size_t j = 0; j < d && ok; ++j) {
      Vec l = vec_zero(ctx, d), r = vec_zero(ctx, d);
      for (std::size_t i = 0; i < d; ++i) {
        if (g.unit[i].is_zero()) continue;
        for (std::size_t p = 0; p < d; ++p) {
          l[p] += g.unit[i] * prod.at(p, i * d + j);
          r[p] += g.unit[i] * prod.at(p, j * d + i);
        }
      }
      if (l != basis_vec(ctx, d, j) || r != basis_vec(ctx, d, j)) ok = false;
    }
    rep.add(std::string("gradeddual.") + name + "_unital", ok);
  };
  unital_of(g.mult, "mult");
  unital_of(g.convolution, "convolution");

  bool rel = true;
  for (std::size_t i = 0; i < d && rel; ++i)
    for (std::size_t j = 0; j < d && rel; ++j) {
      Scalar tw = g.q.pow(-static_cast<long>(g.degree[i]) * static_cast<long>(g.degree[j]));
      for (std::size_t k = 0; k < d && rel; ++k)
        if (g.mult.at(k, i * d + j) != tw * g.convolution.at(k, i * d + j)) rel = false;
    }
  rep.add("gradeddual.products_differ_by_bicharacter", rel);

  bool lu = true;
  for (std::size_t v = 0; v < d && lu; ++v) {
    Vec acc = vec_zero(ctx, d);
    for (std::size_t u = 0; u < d; ++u)
      if (!h.unit[u].is_zero())
        for (std::size_t p = 0; p < d; ++p) acc[p] += h.unit[u] * g.lact.at(p, u * d + v);
    if (acc != basis_vec(ctx, d, v)) lu = false;
  }
  rep.add("gradeddual.lact_unital", lu);

  // the left action composes through the double braiding of the acting pair:
  // (x_U x_V) -> f = q^(-2 deg U deg V) x_U -> (x_V -> f) in range
  bool lm = true;
  std::string wlm;
  for (std::size_t u = 0; u < d && lm; ++u)
    for (std::size_t v = 0; v < d && lm; ++v) {
      if (!h.in_range(u, v)) continue;
      Scalar tw =
          g.q.pow(-2 * static_cast<long>(h.degree[u]) * static_cast<long>(h.degree[v]));
      for (std::size_t w = 0; w < d && lm; ++w) {
        Vec lhs = vec_zero(ctx, d), rhs = vec_zero(ctx, d);
        for (std::size_t m = 0; m < d; ++m) {
          const Scalar& pm = h.mult.at(m, u * d + v);
          if (!pm.is_zero())
            for (std::size_t p = 0; p < d; ++p) lhs[p] += pm * g.lact.at(p, m * d + w);
          const Scalar& im = g.lact.at(m, v * d + w);
          if (!im.is_zero())
            for (std::size_t p = 0; p < d; ++p) rhs[p] += tw * im * g.lact.at(p, u * d + m);
        }
        if (lhs != rhs) {
          lm = false;
          wlm = "twisted composition fails at (" + h.label(u) + ", " + h.label(v) + ", " +
                g.labels[w] + ")";
        }
      }
    }
  rep.add("gradeddual.lact_composes_through_double_braiding", lm, wlm);

  bool ru = true;
  for (std::size_t v = 0; v < d && ru; ++v) {
    Vec acc = vec_zero(ctx, d);
    for (std::size_t u = 0; u < d; ++u)
      if (!h.unit[u].is_zero())
        for (std::size_t p = 0; p < d; ++p) acc[p] += h.unit[u] * g.ract.at(p, v * d + u);
    if (acc != basis_vec(ctx, d, v)) ru = false;
  }
  rep.add("gradeddual.ract_unital", ru);

  // the right action is an honest action: f <- (x_U x_V) = (f <- x_U) <- x_V
  bool rm = true;
  std::string wrm;
  for (std::size_t u = 0; u < d && rm; ++u)
    for (std::size_t v = 0; v < d && rm; ++v) {
      if (!h.in_range(u, v)) continue;
      for (std::size_t w = 0; w < d && rm; ++w) {
        Vec lhs = vec_zero(ctx, d), rhs = vec_zero(ctx, d);
        for (std::size_t m = 0; m < d; ++m) {
          const Scalar& pm = h.mult.at(m, u * d + v);
          if (!pm.is_zero())
            for (std::size_t p = 0; p < d; ++p) lhs[p] += pm * g.ract.at(p, w * d + m);
          const Scalar& im = g.ract.at(m, w * d + u);
          if (!im.is_zero())
            for (std::size_t p = 0; p < d; ++p) rhs[p] += im * g.ract.at(p, m * d + v);
        }
        if (lhs != rhs) {
          rm = false;
          wrm = "right action fails at (" + g.labels[w] + ", " + h.label(u) + ", " +
                h.label(v) + ")";
        }
      }
    }
  rep.add("gradeddual.ract_right_module_law_in_range", rm, wrm);
  return rep;
}

/// Capped left integrals of the graded dual under its braided product.
inline Matrix dual_capped_integral_search(const GradedBraidedHopf& h, const GradedDual& g) {
  // eps of xi_I is its pairing with the unit of H
  Vec eps = vec_zero(h.ctx(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Scalar acc = Scalar::zero(h.ctx());
    for (std::size_t m = 0; m < g.dim(); ++m) acc += g.pairing.at(i, m) * h.unit[m];
    eps[i] = acc;
  }
  return detail::capped_left_integrals(g.mult, eps, g.degree, g.cap());
}

}  // namespace hopf
