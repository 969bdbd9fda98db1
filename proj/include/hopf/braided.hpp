#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/category.hpp"
#include "hopf/integrals.hpp"
#include "hopf/matrix.hpp"
#include "hopf/report.hpp"

namespace hopf {

/// Hopf algebra object inside a backend category. The carrier is a category
/// object; the structure maps use the same layout as FinDimHopf. The braiding
/// of the category replaces the flip in the bialgebra compatibility law.
template <class Cat>
struct BraidedHopfAlg {
  typename Cat::Object object;
  std::vector<std::string> labels;
  Matrix mult;      // d x d^2
  Vec unit;         // d
  Matrix comult;    // d^2 x d
  Matrix counit;    // 1 x d
  Matrix antipode;  // d x d, 0x0 while absent

  std::size_t dim() const { return Cat::dim(object); }
  const FieldPtr& ctx() const { return Cat::ctx(object); }
  bool has_antipode() const { return antipode.rows() == dim() && dim() > 0; }
  std::string label(std::size_t i) const {
    return i < labels.size() && !labels[i].empty() ? labels[i] : "e" + std::to_string(i);
  }
  Matrix braiding() const { return Cat::braiding(object, object); }

  /// Forget the braiding: the same structure constants as a plain carrier.
  /// Valid for algebra/module/integral computations, which never braid;
  /// NOT a Hopf algebra in general (the compatibility law differs).
  FinDimHopf as_plain() const { return {ctx(), dim(), labels, mult, unit, comult, counit, antipode}; }
};

using DiagBraidedHopf = BraidedHopfAlg<DiagCat>;
using YDBraidedHopf = BraidedHopfAlg<YDCat>;

/// Any ordinary Hopf algebra is a braided one in the trivial diagonal
/// category (every degree zero, braiding = flip).
inline DiagBraidedHopf to_braided_trivial(const FinDimHopf& h) {
  DiagBraidedHopf b;
  b.object = DiagObject{h.ctx, Scalar::one(h.ctx), std::vector<long long>(h.dim, 0)};
  b.labels = h.labels;
  b.mult = h.mult;
  b.unit = h.unit;
  b.comult = h.comult;
  b.counit = h.counit;
  b.antipode = h.antipode;
  return b;
}

/// Ordinary Hopf algebra viewed in the YD category over `base` with trivial
/// action (through the counit) and trivial coaction (unit tensor identity).
inline YDBraidedHopf to_braided_yd_trivial(const FinDimHopf& h,
                                           const std::shared_ptr<const FinDimHopf>& base) {
  YDBraidedHopf b;
  YDModule obj;
  obj.base = base;
  obj.dim = h.dim;
  obj.action = trivial_module(*base, h.dim).action;
  obj.coaction = Matrix(h.ctx, base->dim * h.dim, h.dim);
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t bb = 0; bb < base->dim; ++bb)
      obj.coaction.at(bb * h.dim + i, i) = base->unit[bb];
  obj.labels = h.labels;
  b.object = std::move(obj);
  b.labels = h.labels;
  b.mult = h.mult;
  b.unit = h.unit;
  b.comult = h.comult;
  b.counit = h.counit;
  b.antipode = h.antipode;
  return b;
}

template <class Cat>
inline bool check_symmetric(const BraidedHopfAlg<Cat>& h) {
  Matrix c = h.braiding();
  return (c * c).is_identity();
}

/// Braid (Yang-Baxter) equation for c acting on the cube of a d-dim object:
/// (c x 1)(1 x c)(c x 1) = (1 x c)(c x 1)(1 x c).
inline bool braid_equation_holds(const Matrix& c, std::size_t d) {
  for (std::size_t t = 0; t < d * d * d; ++t) {
    Vec x = basis_vec(c.ctx(), d * d * d, t);
    Vec l = apply_slot(c, 1, d, apply_slot(c, d, 1, apply_slot(c, 1, d, x)));
    Vec r = apply_slot(c, d, 1, apply_slot(c, 1, d, apply_slot(c, d, 1, x)));
    if (l != r) return false;
  }
  return true;
}

/// Full braided-bialgebra verification: the carrier is a valid object, every
/// structure map is a category morphism, algebra/coalgebra axioms hold, the
/// compatibility law runs through the braiding, and the antipode satisfies
/// both convolution laws.
template <class Cat>
inline VerificationReport check_braided_hopf(const BraidedHopfAlg<Cat>& h) {
  VerificationReport rep;
  std::size_t d = h.dim();
  rep.merge(Cat::object_check(h.object), "object.");

  auto hh = Cat::tensor(h.object, h.object);
  auto one = Cat::unit(h.object);
  auto morph = [&](const char* name, const Matrix& f, const typename Cat::Object& from,
                   const typename Cat::Object& to) {
    auto w = Cat::morphism_witness(f, from, to);
    rep.add(std::string("morphism.") + name, !w.has_value(), w.value_or(""));
  };
  morph("mult", h.mult, hh, h.object);
  Matrix unit_map(h.ctx(), d, 1);
  unit_map.set_col(0, h.unit);
  morph("unit", unit_map, one, h.object);
  morph("comult", h.comult, h.object, hh);
  morph("counit", h.counit, h.object, one);
  if (h.has_antipode()) morph("antipode", h.antipode, h.object, h.object);

  FinDimHopf plain = h.as_plain();
  rep.merge(check_algebra(plain.algebra()));
  rep.merge(check_coalgebra(plain.coalgebra()));

  Matrix c = h.braiding();
  bool compat = true;
  std::string wc;
  for (std::size_t i = 0; i < d && compat; ++i)
    for (std::size_t j = 0; j < d && compat; ++j) {
      Vec lhs = h.comult.apply(h.mult.col(i * d + j));
      Vec x = vec_kron(h.comult.col(i), h.comult.col(j));
      x = apply_slot(c, d, d, x);
      x = apply_slot(h.mult, 1, d * d, x);
      x = apply_slot(h.mult, d, 1, x);
      if (lhs != x) {
        compat = false;
        wc = "Delta(" + h.label(i) + " " + h.label(j) + ") differs from the braided product of coproducts";
      }
    }
  rep.add("compat.comult_mult_braided", compat, wc);

  bool eps_mult = true;
  std::string we;
  for (std::size_t i = 0; i < d && eps_mult; ++i)
    for (std::size_t j = 0; j < d && eps_mult; ++j)
      if (h.counit.apply(h.mult.col(i * d + j))[0] != h.counit.at(0, i) * h.counit.at(0, j)) {
        eps_mult = false;
        we = "eps(" + h.label(i) + " " + h.label(j) + ") != eps eps";
      }
  rep.add("compat.counit_mult", eps_mult, we);
  rep.add("compat.comult_unit", h.comult.apply(h.unit) == vec_kron(h.unit, h.unit));
  rep.add("compat.counit_unit", h.counit.apply(h.unit)[0].is_one());

  rep.add("braiding.braid_equation", braid_equation_holds(c, d));

  if (h.has_antipode())
    rep.merge(check_antipode_laws(plain));
  else
    rep.add("hopf.antipode_present", false, "no antipode stored");
  return rep;
}

/// Left/right integrals in H: braiding-free, so the plain kernel applies.
template <class Cat>
inline Matrix braided_left_integrals(const BraidedHopfAlg<Cat>& h) {
  return left_integrals_in(h.as_plain());
}

template <class Cat>
inline Matrix braided_right_integrals(const BraidedHopfAlg<Cat>& h) {
  return right_integrals_in(h.as_plain());
}

/// Maschke verdict for a braided Hopf algebra: semisimplicity of the
/// underlying ordinary algebra is equivalent to eps(integral) != 0, with no
/// symmetry requirement on the braiding.
template <class Cat>
inline MaschkeVerdict braided_maschke(const BraidedHopfAlg<Cat>& h) {
  return maschke_test(h.as_plain());
}

}  // namespace hopf
