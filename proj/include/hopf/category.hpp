#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "hopf/diagonal.hpp"
#include "hopf/ydmodule.hpp"

namespace hopf {

// Backend policies with a common static interface, used by the templated
// braided-Hopf machinery:
//   Object, dim, ctx, tensor, unit, dual, braiding, morphism_witness,
//   object_check, subobject, describe.
// Morphism data is always a plain Matrix; only the objects differ.

/// Yetter-Drinfeld backend: objects are YD modules over a fixed base.
struct YDCat {
  using Object = YDModule;

  static std::size_t dim(const Object& o) { return o.dim; }
  static const FieldPtr& ctx(const Object& o) { return o.ctx(); }
  static Object tensor(const Object& a, const Object& b) { return yd_tensor(a, b); }
  static Object unit(const Object& like) { return yd_unit(like.base); }
  static Object dual(const Object& o) { return yd_dual(o); }
  static Matrix braiding(const Object& a, const Object& b) { return yd_braiding(a, b); }
  static std::optional<std::string> morphism_witness(const Matrix& f, const Object& from,
                                                     const Object& to) {
    return yd_morphism_witness(f, from, to);
  }
  static VerificationReport object_check(const Object& o) { return yd_check(o); }

  /// Restrict the YD structure to the column span of w; the span must be
  /// closed under the base action and coaction.
  static std::optional<Object> subobject(const Object& o, const Matrix& w, std::string* why) {
    const FinDimHopf& b = *o.base;
    std::size_t r = w.cols();
    Object s;
    s.base = o.base;
    s.dim = r;
    s.action = Matrix(o.ctx(), r, b.dim * r);
    for (std::size_t bb = 0; bb < b.dim; ++bb) {
      auto x = solve(w, o.as_module().act_basis(bb) * w);
      if (!x) {
        if (why) *why = "span not closed under the action of " + b.label(bb);
        return std::nullopt;
      }
      for (std::size_t p = 0; p < r; ++p)
        for (std::size_t j = 0; j < r; ++j) s.action.at(p, bb * r + j) = x->at(p, j);
    }
    Matrix wb(o.ctx(), b.dim * o.dim, b.dim * r);  // id_B (x) w
    for (std::size_t bb = 0; bb < b.dim; ++bb)
      for (std::size_t i = 0; i < o.dim; ++i)
        for (std::size_t j = 0; j < r; ++j) wb.at(bb * o.dim + i, bb * r + j) = w.at(i, j);
    auto y = solve(wb, o.coaction * w);
    if (!y) {
      if (why) *why = "span not closed under the coaction";
      return std::nullopt;
    }
    s.coaction = *y;
    return s;
  }

  static std::string describe(const Object& o) {
    return "yd(dim " + std::to_string(o.dim) + ", base dim " + std::to_string(o.bdim()) + ")";
  }
};

/// Diagonal backend: graded spaces braided through a bicharacter value q.
struct DiagCat {
  using Object = DiagObject;

  static std::size_t dim(const Object& o) { return o.dim(); }
  static const FieldPtr& ctx(const Object& o) { return o.ctx; }
  static Object tensor(const Object& a, const Object& b) { return diag_tensor(a, b); }
  static Object unit(const Object& like) { return diag_unit(like); }
  static Object dual(const Object& o) { return diag_dual(o); }
  static Matrix braiding(const Object& a, const Object& b) { return diag_braiding(a, b); }
  static std::optional<std::string> morphism_witness(const Matrix& f, const Object& from,
                                                     const Object& to) {
    return diag_morphism_witness(f, from, to);
  }
  static VerificationReport object_check(const Object&) { return {}; }

  /// Columns of w must be homogeneous; degrees carry over.
  static std::optional<Object> subobject(const Object& o, const Matrix& w, std::string* why) {
    Object s{o.ctx, o.q, {}};
    for (std::size_t j = 0; j < w.cols(); ++j) {
      std::optional<long long> deg;
      for (std::size_t i = 0; i < w.rows(); ++i) {
        if (w.at(i, j).is_zero()) continue;
        if (!deg)
          deg = o.degrees[i];
        else if (*deg != o.degrees[i]) {
          if (why) *why = "column " + std::to_string(j) + " is not homogeneous";
          return std::nullopt;
        }
      }
      s.degrees.push_back(deg.value_or(0));
    }
    return s;
  }

  static std::string describe(const Object& o) {
    std::string s = "graded(q = " + o.q.str() + ", degrees";
    for (long long d : o.degrees) s += " " + std::to_string(d);
    return s + ")";
  }
};

}  // namespace hopf
