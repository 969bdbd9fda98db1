#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/braided.hpp"
#include "hopf/field.hpp"
#include "hopf/graded.hpp"
#include "hopf/matrix.hpp"
#include "hopf/ydmodule.hpp"

namespace hopf {

// ---------------------------------------------------------------------------
// Reference constructors. Each builds its structure constants directly from
// the defining data (group law, generator relations, delta calculus), not by
// serializing a stored table, so they can be cross-checked against
// independently written enumerations in the tests.
// ---------------------------------------------------------------------------

/// Group algebra k[Z_n] on the group basis {1, g, ..., g^(n-1)}.
inline FinDimHopf group_algebra(const FieldPtr& ctx, std::size_t n) {
  if (n < 1) throw std::invalid_argument("group_algebra: n must be at least 1");
  FinDimHopf h = make_hopf(ctx, n);
  h.labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    h.labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h.mult.at((i + j) % n, i * n + j) = Scalar::one(ctx);
  h.unit[0] = Scalar::one(ctx);
  for (std::size_t i = 0; i < n; ++i) {
    h.comult.at(i * n + i, i) = Scalar::one(ctx);
    h.counit.at(0, i) = Scalar::one(ctx);
  }
  h.antipode = Matrix(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) h.antipode.at((n - i) % n, i) = Scalar::one(ctx);
  return h;
}

inline FinDimHopf group_algebra(std::size_t n) { return group_algebra(field_rational(), n); }

/// Function algebra on Z_n: the linear dual of k[Z_n] on the delta basis
/// {d0, ..., d(n-1)}, realized by transposing every structure tensor.
inline FinDimHopf dual_group_algebra(const FieldPtr& ctx, std::size_t n) {
  FinDimHopf h = dual_hopf(group_algebra(ctx, n));
  h.labels.clear();
  for (std::size_t i = 0; i < n; ++i) h.labels.push_back("d" + std::to_string(i));
  return h;
}

inline FinDimHopf dual_group_algebra(std::size_t n) {
  return dual_group_algebra(field_rational(), n);
}

/// Taft Hopf algebra of dimension n^2 at the distinguished primitive n-th
/// root of unity q: generators g (grouplike, g^n = 1) and x (x^n = 0,
/// x g = q g x, Delta(x) = x (x) 1 + g (x) x), basis g^a x^b at index b*n+a.
/// The coproduct of a basis monomial is expanded inside the tensor-square
/// algebra from the generator coproducts, and the antipode is solved from
/// both convolution laws rather than postulated.
inline FinDimHopf taft_algebra(std::size_t n) {
  if (n < 2) throw std::invalid_argument("taft_algebra: n must be at least 2");
  // the quadratic root of unity -1 is rational, so n = 2 needs no extension
  FieldPtr ctx = (n == 2) ? field_rational() : field_cyclotomic(static_cast<unsigned>(n));
  Scalar q = (n == 2) ? -Scalar::one(ctx) : zeta(ctx);
  std::size_t d = n * n;
  FinDimHopf h = make_hopf(ctx, d);
  auto idx = [n](std::size_t a, std::size_t b) { return b * n + a; };

  h.labels.resize(d);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      std::string lbl;
      if (a == 0 && b == 0) lbl = "1";
      if (a > 0) lbl += (a == 1) ? "g" : "g^" + std::to_string(a);
      if (b > 0) lbl += (b == 1) ? "x" : "x^" + std::to_string(b);
      h.labels[idx(a, b)] = lbl;
    }

  // (g^a1 x^b1)(g^a2 x^b2) = q^(b1 a2) g^(a1+a2) x^(b1+b2), zero past x^(n-1)
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t b1 = 0; b1 < n; ++b1)
      for (std::size_t a2 = 0; a2 < n; ++a2)
        for (std::size_t b2 = 0; b2 < n; ++b2) {
          if (b1 + b2 >= n) continue;
          h.mult.at(idx((a1 + a2) % n, b1 + b2), idx(a1, b1) * d + idx(a2, b2)) =
              q.pow(static_cast<long>(b1) * static_cast<long>(a2));
        }
  h.unit[idx(0, 0)] = Scalar::one(ctx);

  // right-multiply an element of H (x) H by e_p (x) e_r through `mult`
  auto mul_right = [&](const Vec& w, std::size_t p, std::size_t r) {
    Vec out = vec_zero(ctx, d * d);
    for (std::size_t u = 0; u < d; ++u)
      for (std::size_t v = 0; v < d; ++v) {
        const Scalar& c = w[u * d + v];
        if (c.is_zero()) continue;
        for (std::size_t uu = 0; uu < d; ++uu) {
          const Scalar& mu = h.mult.at(uu, u * d + p);
          if (mu.is_zero()) continue;
          for (std::size_t vv = 0; vv < d; ++vv) {
            const Scalar& mv = h.mult.at(vv, v * d + r);
            if (!mv.is_zero()) out[uu * d + vv] += c * mu * mv;
          }
        }
      }
    return out;
  };

  for (std::size_t a = 0; a < n; ++a) {
    // Delta(g^a) = g^a (x) g^a, then multiply in Delta(x) = x (x) 1 + g (x) x
    Vec cur = vec_zero(ctx, d * d);
    cur[idx(a, 0) * d + idx(a, 0)] = Scalar::one(ctx);
    h.comult.set_col(idx(a, 0), cur);
    for (std::size_t b = 1; b < n; ++b) {
      cur = vec_add(mul_right(cur, idx(0, 1), idx(0, 0)), mul_right(cur, idx(1, 0), idx(0, 1)));
      h.comult.set_col(idx(a, b), cur);
    }
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      h.counit.at(0, idx(a, b)) = (b == 0) ? Scalar::one(ctx) : Scalar::zero(ctx);

  auto s = compute_antipode(h);
  if (!s) throw std::domain_error("taft_algebra: no antipode exists for this data");
  h.antipode = *s;
  return h;
}

/// The 4-dimensional small quantum group: the n = 2 Taft algebra over Q.
inline FinDimHopf sweedler_h4() { return taft_algebra(2); }

/// The n-truncation of the q-line as a braided Hopf algebra in the
/// Yetter-Drinfeld category over k[Z_n]: carrier {1, x, ..., x^(n-1)} with
/// action g . x^i = q^i x^i and coaction x^i |-> g^i (x) x^i, which
/// reproduces the diagonal braiding q^(ij). Throws when the transplanted
/// structure fails braided verification over the YD backend.
inline YDBraidedHopf nichols_yd(std::size_t n) {
  DiagBraidedHopf t = truncated_nichols(n);
  const FieldPtr& ctx = t.ctx();
  const Scalar& q = t.object.q;
  auto base = std::make_shared<FinDimHopf>(group_algebra(ctx, n));

  YDModule obj;
  obj.base = base;
  obj.dim = n;
  obj.action = Matrix(ctx, n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      obj.action.at(i, a * n + i) = q.pow(static_cast<long>(a) * static_cast<long>(i));
  obj.coaction = Matrix(ctx, n * n, n);
  for (std::size_t i = 0; i < n; ++i) obj.coaction.at(i * n + i, i) = Scalar::one(ctx);
  obj.labels = t.labels;

  YDBraidedHopf h;
  h.object = std::move(obj);
  h.labels = t.labels;
  h.mult = t.mult;
  h.unit = t.unit;
  h.comult = t.comult;
  h.counit = t.counit;
  h.antipode = t.antipode;
  VerificationReport rep = check_braided_hopf(h);
  if (!rep.all_pass())
    throw std::domain_error("nichols_yd: verification failed: " + rep.first_failure());
  return h;
}

/// One-dimensional Yetter-Drinfeld module over k[Z_2]: g . v = -v and
/// v |-> g (x) v, whose self-braiding is the sign flip.
inline YDModule sign_yd_module() {
  auto base = std::make_shared<FinDimHopf>(group_algebra(2));
  const FieldPtr& ctx = base->ctx;
  YDModule m;
  m.base = base;
  m.dim = 1;
  m.action = Matrix(ctx, 1, 2);
  m.action.at(0, 0) = Scalar::one(ctx);
  m.action.at(0, 1) = -Scalar::one(ctx);
  m.coaction = Matrix(ctx, 2, 1);
  m.coaction.at(1, 0) = Scalar::one(ctx);
  m.labels = {"v"};
  return m;
}

/// A Hopf algebra together with a universal R-matrix, stored as an element
/// of the tensor square (second factor fastest).
struct QuasitriangularData {
  std::shared_ptr<const FinDimHopf> base;
  Vec r;
};

/// k[Z_2] with its nontrivial triangular structure
/// R = (1/2)(1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g).
inline QuasitriangularData quasitriangular_kz2() {
  QuasitriangularData qt;
  qt.base = std::make_shared<FinDimHopf>(group_algebra(2));
  const FieldPtr& ctx = qt.base->ctx;
  Scalar half = Scalar::from_rat(ctx, Rat(1, 2));
  qt.r = vec_zero(ctx, 4);
  qt.r[0] = half;
  qt.r[1] = half;
  qt.r[2] = half;
  qt.r[3] = -half;
  return qt;
}

// ---------------------------------------------------------------------------
// Registry: canonical example objects addressable by a textual key
//   family[:param[:param]]       e.g.  taft:3   braided_line:z3:9
// ---------------------------------------------------------------------------

enum class ZooKind { hopf, diagonal, yd, graded, ydmodule, quasitriangular };

inline std::string zoo_kind_name(ZooKind k) {
  switch (k) {
    case ZooKind::hopf: return "hopf";
    case ZooKind::diagonal: return "diagonal";
    case ZooKind::yd: return "yd";
    case ZooKind::graded: return "graded";
    case ZooKind::ydmodule: return "ydmodule";
    case ZooKind::quasitriangular: return "quasitriangular";
  }
  throw std::logic_error("zoo_kind_name: unreachable");
}

/// One constructed example. Exactly the member matching `kind` is engaged.
struct ZooObject {
  std::string name;      // canonical key
  std::string base_ref;  // for yd/ydmodule kinds: zoo reference of the base
  ZooKind kind = ZooKind::hopf;
  std::optional<FinDimHopf> hopf;
  std::optional<DiagBraidedHopf> diag;
  std::optional<YDBraidedHopf> ydh;
  std::optional<GradedBraidedHopf> graded;
  std::optional<YDModule> ydm;
  std::optional<QuasitriangularData> qt;

  const FieldPtr& ctx() const {
    switch (kind) {
      case ZooKind::hopf: return hopf->ctx;
      case ZooKind::diagonal: return diag->ctx();
      case ZooKind::yd: return ydh->ctx();
      case ZooKind::graded: return graded->ctx();
      case ZooKind::ydmodule: return ydm->ctx();
      case ZooKind::quasitriangular: return qt->base->ctx;
    }
    throw std::logic_error("ZooObject::ctx: unreachable");
  }
  std::size_t dim() const {
    switch (kind) {
      case ZooKind::hopf: return hopf->dim;
      case ZooKind::diagonal: return diag->dim();
      case ZooKind::yd: return ydh->dim();
      case ZooKind::graded: return graded->dim();
      case ZooKind::ydmodule: return ydm->dim;
      case ZooKind::quasitriangular: return qt->base->dim;
    }
    throw std::logic_error("ZooObject::dim: unreachable");
  }
};

namespace detail {

/// Parse a braiding-parameter token: a rational literal ("2", "-1", "3/2")
/// over Q, or "z<m>[^<k>]" for the k-th power of the primitive m-th root of
/// unity over the m-th cyclotomic field.
struct QToken {
  FieldPtr ctx;
  Scalar q;
  std::string canonical;
  QToken(FieldPtr c, Scalar s, std::string n)
      : ctx(std::move(c)), q(std::move(s)), canonical(std::move(n)) {}
};

inline QToken parse_q_token(const std::string& tok) {
  if (tok.empty()) throw std::invalid_argument("zoo: empty braiding parameter");
  if (tok[0] == 'z') {
    std::size_t i = 1;
    while (i < tok.size() && tok[i] >= '0' && tok[i] <= '9') ++i;
    if (i == 1) throw std::invalid_argument("zoo: malformed root-of-unity token '" + tok + "'");
    unsigned long m = std::stoul(tok.substr(1, i - 1));
    unsigned long k = 1;
    if (i < tok.size()) {
      if (tok[i] != '^' || i + 1 >= tok.size())
        throw std::invalid_argument("zoo: malformed root-of-unity token '" + tok + "'");
      for (std::size_t j = i + 1; j < tok.size(); ++j)
        if (tok[j] < '0' || tok[j] > '9')
          throw std::invalid_argument("zoo: malformed root-of-unity token '" + tok + "'");
      k = std::stoul(tok.substr(i + 1));
    }
    if (m == 0) throw std::invalid_argument("zoo: root-of-unity order must be positive");
    k %= m;
    FieldPtr ctx = field_cyclotomic(static_cast<unsigned>(m));
    Scalar q = zeta(ctx).pow(static_cast<long>(k));
    std::string name = "z" + std::to_string(m) + (k == 1 ? "" : "^" + std::to_string(k));
    return QToken{std::move(ctx), std::move(q), std::move(name)};
  }
  FieldPtr ctx = field_rational();
  Scalar q = parse_scalar(ctx, tok);
  std::string name = q.str();
  return QToken{std::move(ctx), std::move(q), std::move(name)};
}

inline std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= key.size(); ++i)
    if (i == key.size() || key[i] == ':') {
      parts.push_back(key.substr(start, i - start));
      start = i + 1;
    }
  return parts;
}

inline std::size_t parse_count(const std::string& family, const std::string& tok, std::size_t lo,
                               std::size_t hi) {
  if (tok.empty()) throw std::invalid_argument("zoo: " + family + ": missing numeric parameter");
  for (char c : tok)
    if (c < '0' || c > '9')
      throw std::invalid_argument("zoo: " + family + ": malformed numeric parameter '" + tok + "'");
  unsigned long v = std::stoul(tok);
  if (v < lo || v > hi)
    throw std::invalid_argument("zoo: " + family + ": parameter " + tok + " outside [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<std::size_t>(v);
}

}  // namespace detail

/// Build the example named by `key`. Throws std::invalid_argument for an
/// unknown family, a malformed parameter, or a wrong parameter count.
inline ZooObject zoo_build(const std::string& key) {
  auto parts = detail::split_key(key);
  const std::string& family = parts[0];
  auto want_params = [&](std::size_t n) {
    if (parts.size() != n + 1)
      throw std::invalid_argument("zoo: " + family + " takes " + std::to_string(n) +
                                  " parameter(s), got " + std::to_string(parts.size() - 1));
  };
  ZooObject z;
  if (family == "group_algebra") {
    want_params(1);
    std::size_t n = detail::parse_count(family, parts[1], 1, 64);
    z.kind = ZooKind::hopf;
    z.hopf = group_algebra(n);
    z.name = "group_algebra:" + std::to_string(n);
  } else if (family == "dual_group_algebra") {
    want_params(1);
    std::size_t n = detail::parse_count(family, parts[1], 1, 64);
    z.kind = ZooKind::hopf;
    z.hopf = dual_group_algebra(n);
    z.name = "dual_group_algebra:" + std::to_string(n);
  } else if (family == "sweedler_h4") {
    want_params(0);
    z.kind = ZooKind::hopf;
    z.hopf = sweedler_h4();
    z.name = "sweedler_h4";
  } else if (family == "taft") {
    want_params(1);
    std::size_t n = detail::parse_count(family, parts[1], 2, 8);
    z.kind = ZooKind::hopf;
    z.hopf = taft_algebra(n);
    z.name = "taft:" + std::to_string(n);
  } else if (family == "truncated_nichols") {
    want_params(1);
    std::size_t n = detail::parse_count(family, parts[1], 2, 8);
    z.kind = ZooKind::diagonal;
    z.diag = truncated_nichols(n);
    z.name = "truncated_nichols:" + std::to_string(n);
  } else if (family == "nichols_yd") {
    want_params(1);
    std::size_t n = detail::parse_count(family, parts[1], 2, 8);
    z.kind = ZooKind::yd;
    z.ydh = nichols_yd(n);
    z.name = "nichols_yd:" + std::to_string(n);
    z.base_ref = "zoo:group_algebra:" + std::to_string(n);
  } else if (family == "nichols_graded") {
    want_params(1);
    std::size_t n = detail::parse_count(family, parts[1], 2, 8);
    z.kind = ZooKind::graded;
    z.graded = nichols_graded(n);
    z.name = "nichols_graded:" + std::to_string(n);
  } else if (family == "braided_line") {
    want_params(2);
    detail::QToken qt = detail::parse_q_token(parts[1]);
    std::size_t cap = detail::parse_count(family, parts[2], 1, 64);
    z.kind = ZooKind::graded;
    z.graded = braided_line(qt.ctx, qt.q, cap);
    z.name = "braided_line:" + qt.canonical + ":" + std::to_string(cap);
  } else if (family == "sign_yd_module") {
    want_params(0);
    z.kind = ZooKind::ydmodule;
    z.ydm = sign_yd_module();
    z.name = "sign_yd_module";
    z.base_ref = "zoo:group_algebra:2";
  } else if (family == "quasitriangular_kz2") {
    want_params(0);
    z.kind = ZooKind::quasitriangular;
    z.qt = quasitriangular_kz2();
    z.name = "quasitriangular_kz2";
  } else {
    throw std::invalid_argument("zoo: unknown family '" + family + "'");
  }
  return z;
}

struct ZooEntry {
  std::string name;
  std::string summary;
};

/// The canonical instances: every key here builds with zoo_build.
inline std::vector<ZooEntry> zoo_list() {
  std::vector<ZooEntry> out;
  for (std::size_t n = 1; n <= 6; ++n)
    out.push_back({"group_algebra:" + std::to_string(n),
                   "group algebra k[Z_" + std::to_string(n) + "] over Q, dim " + std::to_string(n)});
  for (std::size_t n = 1; n <= 6; ++n)
    out.push_back({"dual_group_algebra:" + std::to_string(n),
                   "function algebra on Z_" + std::to_string(n) + " over Q, dim " + std::to_string(n)});
  out.push_back({"sweedler_h4", "4-dimensional small quantum group over Q"});
  out.push_back({"taft:3", "Taft algebra at a primitive cube root of unity, dim 9"});
  for (std::size_t n = 2; n <= 4; ++n)
    out.push_back({"truncated_nichols:" + std::to_string(n),
                   "rank-one Nichols algebra k[x]/(x^" + std::to_string(n) +
                       ") with diagonal braiding, dim " + std::to_string(n)});
  for (std::size_t n = 2; n <= 4; ++n)
    out.push_back({"nichols_yd:" + std::to_string(n),
                   "the same truncation as a Yetter-Drinfeld object over k[Z_" + std::to_string(n) +
                       "], dim " + std::to_string(n)});
  for (std::size_t n = 2; n <= 4; ++n)
    out.push_back({"nichols_graded:" + std::to_string(n),
                   "the degree-capped truncation with an empty top component, cap " +
                       std::to_string(n)});
  out.push_back({"braided_line:2:20", "capped polynomial line at q = 2 over Q, degrees 0..20"});
  out.push_back({"braided_line:1:20", "capped polynomial line at q = 1 over Q, degrees 0..20"});
  out.push_back({"braided_line:-1:8", "capped polynomial line at q = -1 over Q, degrees 0..8"});
  out.push_back(
      {"braided_line:z3:9", "capped polynomial line at a primitive cube root of unity, degrees 0..9"});
  out.push_back({"sign_yd_module", "1-dimensional sign module in the YD category over k[Z_2]"});
  out.push_back({"quasitriangular_kz2", "k[Z_2] with its nontrivial triangular R-matrix"});
  return out;
}

}  // namespace hopf
