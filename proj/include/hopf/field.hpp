#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopf {

using Rat = mpq_class;

/// Thrown when two scalars (or structures) over different field contexts are combined.
struct FieldMismatch : std::runtime_error {
  FieldMismatch() : std::runtime_error("field context mismatch") {}
};

inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// Strict parser for "p", "-p", "p/q" with nonzero q. Rejects anything else.
inline Rat parse_rational(const std::string& s) {
  auto bad = [&]() -> Rat { throw std::invalid_argument("invalid rational literal: '" + s + "'"); };
  if (s.empty()) return bad();
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == num_begin) return bad();
  if (i < s.size()) {
    if (s[i] != '/') return bad();
    ++i;
    std::size_t den_begin = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == den_begin || i != s.size()) return bad();
    if (s.substr(den_begin) == std::string(s.size() - den_begin, '0')) return bad();
  }
  Rat r(s);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Dense polynomials over Q, ascending coefficient order. Internal helpers for
// cyclotomic field construction and inversion.
// ---------------------------------------------------------------------------

using Poly = std::vector<Rat>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_deg(const Poly& p) {
  for (std::size_t i = p.size(); i > 0; --i)
    if (p[i - 1] != 0) return static_cast<int>(i - 1);
  return -1;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  poly_trim(c);
  return c;
}

inline Poly poly_sub(Poly a, const Poly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}

/// Euclidean division a = q*b + r over Q, deg r < deg b. b must be nonzero.
inline void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  int db = poly_deg(b);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  poly_trim(a);
  q.assign(a.size() > static_cast<std::size_t>(db) ? a.size() - db : 0, Rat(0));
  const Rat& lead = b[static_cast<std::size_t>(db)];
  while (poly_deg(a) >= db) {
    int da = poly_deg(a);
    Rat c = a[static_cast<std::size_t>(da)] / lead;
    q[static_cast<std::size_t>(da - db)] = c;
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(da - db + i)] -= c * b[static_cast<std::size_t>(i)];
    poly_trim(a);
  }
  r = a;
}

/// n-th cyclotomic polynomial by recursive division of t^n - 1 by all proper Phi_d.
inline Poly cyclotomic_poly(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic conductor must be positive");
  if (n == 1) return Poly{Rat(-1), Rat(1)};
  Poly num(n + 1, Rat(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    Poly q, r;
    poly_divmod(num, cyclotomic_poly(d), q, r);
    if (poly_deg(r) >= 0) throw std::logic_error("cyclotomic division left a remainder");
    num = q;
  }
  return num;
}

// ---------------------------------------------------------------------------
// Field contexts
// ---------------------------------------------------------------------------

/// Ambient exact field: Q, or the cyclotomic field Q[z]/Phi_n(z).
struct FieldCtx {
  enum class Kind { rational, cyclotomic };

  Kind kind = Kind::rational;
  unsigned conductor = 0;  // n for cyclotomic, 0 for rational
  Poly modulus;            // Phi_n, monic; empty for rational
  // power_reduction[k] = coefficients of z^(degree+k) reduced mod Phi_n
  std::vector<Poly> power_reduction;

  std::size_t degree() const {
    return kind == Kind::rational ? 1 : modulus.size() - 1;
  }
  bool same(const FieldCtx& o) const { return kind == o.kind && conductor == o.conductor; }
  std::string name() const {
    return kind == Kind::rational ? "rational" : "cyclotomic " + std::to_string(conductor);
  }
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

inline FieldPtr field_rational() {
  auto ctx = std::make_shared<FieldCtx>();
  ctx->kind = FieldCtx::Kind::rational;
  return ctx;
}

inline FieldPtr field_cyclotomic(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic conductor must be positive");
  auto ctx = std::make_shared<FieldCtx>();
  ctx->kind = FieldCtx::Kind::cyclotomic;
  ctx->conductor = n;
  ctx->modulus = cyclotomic_poly(n);
  std::size_t d = ctx->modulus.size() - 1;
  if (d >= 2) {
    // z^d mod Phi = -(low part of Phi); each further power shifts and re-reduces.
    Poly cur(d, Rat(0));
    for (std::size_t i = 0; i < d; ++i) cur[i] = -ctx->modulus[i];
    ctx->power_reduction.push_back(cur);
    for (std::size_t k = 1; k + 1 < d; ++k) {
      Poly next(d, Rat(0));
      Rat top = cur[d - 1];
      for (std::size_t i = d - 1; i > 0; --i) next[i] = cur[i - 1];
      if (top != 0)
        for (std::size_t i = 0; i < d; ++i) next[i] += top * ctx->power_reduction[0][i];
      ctx->power_reduction.push_back(next);
      cur = next;
    }
  } else {
    // degree-1 extension: z is rational (Phi_1: z=1, Phi_2: z=-1)
    ctx->power_reduction.clear();
  }
  return ctx;
}

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

/// Element of the ambient field, stored as coefficients in the power basis of z.
/// Immutable value type; all arithmetic is exact.
class Scalar {
 public:
  Scalar() = default;
  Scalar(FieldPtr ctx, std::vector<Rat> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (c_.size() != ctx_->degree()) throw std::invalid_argument("scalar coefficient length mismatch");
  }

  static Scalar zero(const FieldPtr& ctx) { return Scalar(ctx, std::vector<Rat>(ctx->degree(), Rat(0))); }
  static Scalar one(const FieldPtr& ctx) { return from_rat(ctx, Rat(1)); }
  static Scalar from_rat(const FieldPtr& ctx, const Rat& r) {
    std::vector<Rat> c(ctx->degree(), Rat(0));
    c[0] = r;
    return Scalar(ctx, std::move(c));
  }
  static Scalar from_int(const FieldPtr& ctx, long v) { return from_rat(ctx, Rat(v)); }

  const FieldPtr& ctx() const { return ctx_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  /// The rational value when the scalar lies in Q; throws otherwise.
  Rat rat_value() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) throw std::domain_error("scalar is not rational");
    return c_[0];
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    a.require_same(b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    a.require_same(b);
    std::vector<Rat> c(a.c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return Scalar(a.ctx_, std::move(c));
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    a.require_same(b);
    std::vector<Rat> c(a.c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
    return Scalar(a.ctx_, std::move(c));
  }
  friend Scalar operator-(const Scalar& a) {
    std::vector<Rat> c(a.c_);
    for (auto& x : c) x = -x;
    return Scalar(a.ctx_, std::move(c));
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    a.require_same(b);
    std::size_t d = a.ctx_->degree();
    if (d == 1) {
      std::vector<Rat> c{a.c_[0] * b.c_[0]};
      return Scalar(a.ctx_, std::move(c));
    }
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (b.c_[j] == 0) continue;
        prod[i + j] += a.c_[i] * b.c_[j];
      }
    }
    std::vector<Rat> c(prod.begin(), prod.begin() + static_cast<long>(d));
    for (std::size_t k = d; k < prod.size(); ++k) {
      if (prod[k] == 0) continue;
      const Poly& red = a.ctx_->power_reduction[k - d];
      for (std::size_t i = 0; i < d; ++i) c[i] += prod[k] * red[i];
    }
    return Scalar(a.ctx_, std::move(c));
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Multiplicative inverse via the extended Euclidean algorithm mod Phi_n.
  Scalar inv() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (ctx_->degree() == 1) {
      std::vector<Rat> c{Rat(1) / c_[0]};
      return Scalar(ctx_, std::move(c));
    }
    Poly r0 = ctx_->modulus, r1(c_.begin(), c_.end());
    poly_trim(r1);
    Poly s0{}, s1{Rat(1)};
    while (poly_deg(r1) > 0) {
      Poly q, r;
      poly_divmod(r0, r1, q, r);
      Poly s2 = poly_sub(s0, poly_mul(q, s1));
      r0 = r1;
      r1 = r;
      s0 = s1;
      s1 = s2;
    }
    if (poly_deg(r1) != 0) throw std::domain_error("scalar not invertible (modulus not coprime)");
    Rat g = r1[0];
    std::vector<Rat> c(ctx_->degree(), Rat(0));
    for (std::size_t i = 0; i < s1.size() && i < c.size(); ++i) c[i] = s1[i] / g;
    return Scalar(ctx_, std::move(c));
  }

  /// Integer power; negative exponents invert first.
  Scalar pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar acc = Scalar::one(ctx_), base = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u) {
      if (u & 1UL) acc = acc * base;
      base = base * base;
      u >>= 1;
    }
    return acc;
  }

  /// Canonical text form: a rational, or a polynomial in z such as "1/2-3*z+z^2".
  std::string str() const {
    if (ctx_->degree() == 1) return c_[0].get_str();
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      Rat a = c_[k];
      bool neg = sgn(a) < 0;
      Rat mag = neg ? Rat(-a) : a;
      std::string term;
      if (k == 0) {
        term = mag.get_str();
      } else {
        std::string zp = (k == 1) ? "z" : "z^" + std::to_string(k);
        term = (mag == 1) ? zp : mag.get_str() + "*" + zp;
      }
      if (out.empty())
        out = (neg ? "-" : "") + term;
      else
        out += (neg ? "-" : "+") + term;
    }
    return out.empty() ? "0" : out;
  }

 private:
  void require_same(const Scalar& o) const {
    if (!ctx_->same(*o.ctx_)) throw FieldMismatch();
  }

  FieldPtr ctx_;
  std::vector<Rat> c_;
};

/// The distinguished primitive n-th root of unity z of a cyclotomic context.
inline Scalar zeta(const FieldPtr& ctx) {
  if (ctx->kind != FieldCtx::Kind::cyclotomic)
    throw std::domain_error("zeta requires a cyclotomic field context");
  std::size_t d = ctx->degree();
  std::vector<Rat> c(d, Rat(0));
  if (d == 1) {
    // Phi_1: z = 1, Phi_2: z = -1
    c[0] = (ctx->conductor == 1) ? Rat(1) : Rat(-1);
  } else {
    c[1] = 1;
  }
  return Scalar(ctx, std::move(c));
}

/// Parse a scalar literal: a rational, or a sign-separated polynomial in z
/// ("z", "-z^2", "3/2*z", "1/2-3*z+z^2"). Powers are reduced mod Phi_n.
inline Scalar parse_scalar(const FieldPtr& ctx, const std::string& s) {
  auto bad = [&](const std::string& why) -> Scalar {
    throw std::invalid_argument("invalid scalar literal '" + s + "': " + why);
  };
  if (s.empty()) return bad("empty");
  // split into signed terms at top level
  Scalar acc = Scalar::zero(ctx);
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = (s[i] == '-');
      ++i;
      if (i >= s.size()) return bad("dangling sign");
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) return bad("empty term");
    // term := rational | [rational ['*']] z ['^' digits]
    Rat coeff(1);
    unsigned long power = 0;
    std::size_t zpos = term.find('z');
    if (zpos == std::string::npos) {
      coeff = parse_rational(term);
    } else {
      std::string pre = term.substr(0, zpos);
      std::string post = term.substr(zpos + 1);
      if (!pre.empty()) {
        if (pre.back() == '*') pre.pop_back();
        if (!pre.empty()) coeff = parse_rational(pre);
      }
      if (post.empty()) {
        power = 1;
      } else {
        if (post[0] != '^' || post.size() < 2) return bad("malformed power");
        for (std::size_t k = 1; k < post.size(); ++k)
          if (post[k] < '0' || post[k] > '9') return bad("malformed exponent");
        power = std::stoul(post.substr(1));
        if (power > 100000) return bad("exponent too large");
      }
      if (ctx->kind != FieldCtx::Kind::cyclotomic) return bad("'z' requires a cyclotomic field");
    }
    Scalar t = Scalar::from_rat(ctx, coeff);
    if (power > 0) t = t * zeta(ctx).pow(static_cast<long>(power));
    acc = neg ? acc - t : acc + t;
    any = true;
    i = j;
  }
  if (!any) return bad("no terms");
  return acc;
}

}  // namespace hopf
