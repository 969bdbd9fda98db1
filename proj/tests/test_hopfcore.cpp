#include <catch2/catch_amalgamated.hpp>

#include "hopf/algebra.hpp"
#include "hopf/integrals.hpp"
#include "hopf/module.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

Matrix row(const FieldPtr& ctx, std::vector<long> entries) {
  Matrix m(ctx, 1, entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j) m.at(0, j) = Scalar::from_int(ctx, entries[j]);
  return m;
}

Vec colv(const FieldPtr& ctx, std::vector<long> entries) {
  Vec v = vec_zero(ctx, entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j) v[j] = Scalar::from_int(ctx, entries[j]);
  return v;
}

Matrix unit_eps(const FinDimHopf& h) {
  Matrix u = Matrix::from_cols(h.ctx, h.dim, {h.unit});
  return u * h.counit;
}

}  // namespace

TEST_CASE("reference hopf algebras pass full verification", "[hopfcore]") {
  auto q = field_rational();
  for (unsigned n : {2u, 3u, 6u}) {
    auto rep = check_hopf(oracle::group_hopf_by_table(q, n));
    INFO(rep.summary());
    CHECK(rep.all_pass());
  }
  auto rep4 = check_hopf(oracle::sweedler_by_rewriting(q));
  INFO(rep4.summary());
  CHECK(rep4.all_pass());

  auto c3 = field_cyclotomic(3);
  auto t3 = oracle::taft_by_rewriting(c3, zeta(c3), 3);
  auto rept = check_hopf(t3);
  INFO(rept.summary());
  CHECK(rept.all_pass());

  auto repd = check_hopf(oracle::dual_group_hopf_by_table(q, 4));
  INFO(repd.summary());
  CHECK(repd.all_pass());
}

TEST_CASE("corrupted structure constants produce witnesses", "[hopfcore]") {
  auto q = field_rational();
  auto h = oracle::sweedler_by_rewriting(q);
  // overwrite x*g := +gx (instead of -gx)
  std::size_t ix = 2, ig = 1, igx = 3;
  h.mult.at(igx, ix * h.dim + ig) = Scalar::one(q);
  auto rep = check_algebra(h.algebra());
  CHECK_FALSE(rep.all_pass());
  REQUIRE_FALSE(rep.checks[0].pass);
  CHECK(rep.checks[0].name == "algebra.associativity");
  CHECK(rep.checks[0].detail.find("(g,x,g)") != std::string::npos);

  auto h2 = oracle::group_hopf_by_table(q, 3);
  h2.unit = colv(q, {0, 1, 0});
  CHECK_FALSE(check_algebra(h2.algebra()).all_pass());

  auto h3 = oracle::sweedler_by_rewriting(q);
  // drop the g (x) x term of Delta(x)
  h3.comult.at(1 * h3.dim + 2, 2) = Scalar::zero(q);
  auto rep3 = check_coalgebra(h3.coalgebra());
  CHECK_FALSE(rep3.all_pass());
}

TEST_CASE("convolution algebra", "[hopfcore]") {
  auto q = field_rational();
  auto h = oracle::sweedler_by_rewriting(q);
  Matrix id = Matrix::identity(q, h.dim);

  CHECK(convolution(h, id, h.antipode) == unit_eps(h));
  CHECK(convolution(h, h.antipode, id) == unit_eps(h));

  oracle::Lcg rng(0x5eed0201);
  for (int t = 0; t < 6; ++t) {
    Matrix f = oracle::rand_matrix(rng, q, h.dim, h.dim);
    Matrix g = oracle::rand_matrix(rng, q, h.dim, h.dim);
    Matrix k = oracle::rand_matrix(rng, q, h.dim, h.dim);
    CHECK(convolution(h, convolution(h, f, g), k) == convolution(h, f, convolution(h, g, k)));
    CHECK(convolution(h, f, unit_eps(h)) == f);
    CHECK(convolution(h, unit_eps(h), f) == f);
  }
}

TEST_CASE("convolution of characters on the order-two group algebra", "[hopfcore]") {
  auto q = field_rational();
  auto h = oracle::group_hopf_by_table(q, 2);
  Matrix sign = row(q, {1, -1});
  Matrix triv = row(q, {1, 1});
  CHECK(convolve_functionals(h, sign, sign) == triv);
  CHECK(convolve_functionals(h, sign, triv) == sign);
  CHECK(convolve_functionals(h, triv, triv) == triv);
}

TEST_CASE("antipode solving", "[hopfcore]") {
  auto q = field_rational();
  auto h4 = oracle::sweedler_by_rewriting(q);
  FinDimHopf cand = h4;
  cand.antipode = Matrix();
  auto s = compute_antipode(cand);
  REQUIRE(s.has_value());
  CHECK(*s == h4.antipode);
  // pinned values: S(g) = g, S(x) = -gx
  CHECK(s->col(1) == colv(q, {0, 1, 0, 0}));
  CHECK(s->col(2) == colv(q, {0, 0, 0, -1}));

  auto gz = oracle::group_hopf_by_table(q, 5);
  FinDimHopf gcand = gz;
  gcand.antipode = Matrix();
  auto sg = compute_antipode(gcand);
  REQUIRE(sg.has_value());
  for (std::size_t k = 0; k < 5; ++k) CHECK(sg->col(k) == basis_vec(q, 5, (5 - k) % 5));

  auto c3 = field_cyclotomic(3);
  auto t3 = oracle::taft_by_rewriting(c3, zeta(c3), 3);
  FinDimHopf tcand = t3;
  tcand.antipode = Matrix();
  auto st = compute_antipode(tcand);
  REQUIRE(st.has_value());
  CHECK(*st == t3.antipode);
}

TEST_CASE("bialgebras without antipode are rejected", "[hopfcore]") {
  auto q = field_rational();
  auto mb = oracle::monoid_bialgebra(q);
  CHECK(check_algebra(mb.algebra()).all_pass());
  CHECK(check_coalgebra(mb.coalgebra()).all_pass());
  CHECK(check_bialgebra_compat(mb).all_pass());
  CHECK_FALSE(compute_antipode(mb).has_value());
}

TEST_CASE("antipode law check rejects corrupted antipode", "[hopfcore]") {
  auto q = field_rational();
  auto h = oracle::sweedler_by_rewriting(q);
  CHECK(check_antipode_laws(h).all_pass());
  h.antipode.at(3, 2) = Scalar::one(q);  // S(x) := +gx
  CHECK_FALSE(check_antipode_laws(h).all_pass());
}

TEST_CASE("dual hopf algebra", "[hopfcore]") {
  auto q = field_rational();
  for (unsigned n : {2u, 4u}) {
    auto g = oracle::group_hopf_by_table(q, n);
    auto d = dual_hopf(g);
    auto expect = oracle::dual_group_hopf_by_table(q, n);
    CHECK(d.mult == expect.mult);
    CHECK(d.unit == expect.unit);
    CHECK(d.comult == expect.comult);
    CHECK(d.counit == expect.counit);
    CHECK(d.antipode == expect.antipode);
    CHECK(check_hopf(d).all_pass());
  }
  auto h4 = oracle::sweedler_by_rewriting(q);
  auto dd = dual_hopf(dual_hopf(h4));
  CHECK(dd.mult == h4.mult);
  CHECK(dd.comult == h4.comult);
  CHECK(check_hopf(dual_hopf(h4)).all_pass());
}

TEST_CASE("left and right integrals in", "[hopfcore]") {
  auto q = field_rational();
  auto g2 = oracle::group_hopf_by_table(q, 2);
  Matrix i2 = left_integrals_in(g2);
  REQUIRE(i2.cols() == 1);
  CHECK(subspace_equal(i2, Matrix::from_cols(q, 2, {colv(q, {1, 1})})));

  auto g6 = oracle::group_hopf_by_table(q, 6);
  Matrix i6 = left_integrals_in(g6);
  REQUIRE(i6.cols() == 1);
  CHECK(subspace_equal(i6, Matrix::from_cols(q, 6, {colv(q, {1, 1, 1, 1, 1, 1})})));

  auto h4 = oracle::sweedler_by_rewriting(q);
  Matrix i4 = left_integrals_in(h4);
  REQUIRE(i4.cols() == 1);
  CHECK(subspace_equal(i4, Matrix::from_cols(q, 4, {colv(q, {0, 0, 1, 1})})));  // x + gx
  Matrix r4 = right_integrals_in(h4);
  REQUIRE(r4.cols() == 1);
  CHECK(subspace_equal(r4, Matrix::from_cols(q, 4, {colv(q, {0, 0, 1, -1})})));  // x - gx
  CHECK_FALSE(subspace_equal(i4, r4));

  auto c3 = field_cyclotomic(3);
  auto t3 = oracle::taft_by_rewriting(c3, zeta(c3), 3);
  Matrix it = left_integrals_in(t3);
  REQUIRE(it.cols() == 1);
  // (1 + g + g^2) x^2 at indices 2*3+a
  Vec expect = vec_zero(c3, 9);
  expect[6] = expect[7] = expect[8] = Scalar::one(c3);
  CHECK(subspace_equal(it, Matrix::from_cols(c3, 9, {expect})));
  CHECK(t3.counit.apply(it.col(0))[0].is_zero());
}

TEST_CASE("left integrals on", "[hopfcore]") {
  auto q = field_rational();
  auto g2 = oracle::group_hopf_by_table(q, 2);
  Matrix on2 = left_integrals_on(g2);
  REQUIRE(on2.cols() == 1);
  CHECK(subspace_equal(on2, Matrix::from_cols(q, 2, {colv(q, {1, 0})})));  // delta at identity

  auto h4 = oracle::sweedler_by_rewriting(q);
  Matrix on4 = left_integrals_on(h4);
  REQUIRE(on4.cols() == 1);
  Matrix lam = on4.transpose();
  for (std::size_t i = 0; i < 4; ++i) {
    Matrix f(q, 1, 4);
    f.at(0, i) = Scalar::one(q);
    CHECK(convolve_functionals(h4, f, lam) == lam.scaled(h4.unit[i]));
  }
}

TEST_CASE("maschke criterion against the trace-form oracle", "[hopfcore]") {
  auto q = field_rational();
  for (unsigned n : {2u, 3u, 4u, 6u}) {
    auto g = oracle::group_hopf_by_table(q, n);
    auto v = maschke_test(g);
    CHECK(v.semisimple);
    REQUIRE(v.eps_of_t.has_value());
    CHECK_FALSE(v.eps_of_t->is_zero());
    CHECK(semisimple_trace_form(g.algebra()) == v.semisimple);
    auto d = dual_hopf(g);
    CHECK(maschke_test(d).semisimple == semisimple_trace_form(d.algebra()));
  }
  auto h4 = oracle::sweedler_by_rewriting(q);
  auto v4 = maschke_test(h4);
  CHECK_FALSE(v4.semisimple);
  REQUIRE(v4.eps_of_t.has_value());
  CHECK(v4.eps_of_t->is_zero());
  CHECK_FALSE(semisimple_trace_form(h4.algebra()));

  auto c3 = field_cyclotomic(3);
  auto t3 = oracle::taft_by_rewriting(c3, zeta(c3), 3);
  CHECK_FALSE(maschke_test(t3).semisimple);
  CHECK_FALSE(semisimple_trace_form(t3.algebra()));
}

TEST_CASE("trace-form oracle on plain algebras", "[hopfcore]") {
  auto q = field_rational();
  // k[x]/(x^2): nilpotents, not semisimple
  FinDimAlgebra nil;
  nil.ctx = q;
  nil.dim = 2;
  nil.labels = {"1", "x"};
  nil.mult = Matrix(q, 2, 4);
  nil.mult.at(0, 0) = Scalar::one(q);
  nil.mult.at(1, 1) = Scalar::one(q);
  nil.mult.at(1, 2) = Scalar::one(q);
  nil.unit = colv(q, {1, 0});
  CHECK(check_algebra(nil).all_pass());
  CHECK_FALSE(semisimple_trace_form(nil));

  // k x k: split idempotents, semisimple
  FinDimAlgebra split;
  split.ctx = q;
  split.dim = 2;
  split.mult = Matrix(q, 2, 4);
  split.mult.at(0, 0) = Scalar::one(q);
  split.mult.at(1, 3) = Scalar::one(q);
  split.unit = colv(q, {1, 1});
  CHECK(check_algebra(split).all_pass());
  CHECK(semisimple_trace_form(split));
}

TEST_CASE("module machinery", "[hopfcore]") {
  auto q = field_rational();
  auto h4 = oracle::sweedler_by_rewriting(q);
  CHECK(check_module(h4.algebra(), regular_module(h4)).all_pass());
  CHECK(check_module(h4.algebra(), trivial_module(h4, 2)).all_pass());

  auto g3 = oracle::group_hopf_by_table(q, 3);
  auto t = tensor_module(g3, regular_module(g3), regular_module(g3));
  CHECK(check_module(g3.algebra(), t).all_pass());

  auto g2 = oracle::group_hopf_by_table(q, 2);
  CHECK(subspace_equal(invariants(g2, regular_module(g2)), left_integrals_in(g2)));
  auto t22 = tensor_module(g2, regular_module(g2), regular_module(g2));
  Matrix inv22 = invariants(g2, t22);
  CHECK(inv22.cols() == 2);

  AModule reg2 = regular_module(g2);
  CHECK(is_submodule(reg2, left_integrals_in(g2)));
  CHECK_FALSE(is_submodule(reg2, Matrix::from_cols(q, 2, {colv(q, {1, 0})})));
  Matrix cyc = cyclic_submodule(reg2, colv(q, {1, 1}));
  CHECK(cyc.cols() == 1);
  Matrix full = cyclic_submodule(reg2, colv(q, {1, 0}));
  CHECK(full.cols() == 2);
  CHECK(cyclic_submodule(reg2, vec_zero(q, 2)).cols() == 0);
}

TEST_CASE("maschke projections on semisimple instances", "[hopfcore]") {
  auto q = field_rational();
  auto g2 = oracle::group_hopf_by_table(q, 2);
  AModule reg = regular_module(g2);

  // submodule = span of the integral
  auto p1 = maschke_projection(g2, reg, left_integrals_in(g2));
  INFO(p1.checks.summary());
  CHECK(p1.checks.all_pass());

  // full module: projection is the identity
  auto p2 = maschke_projection(g2, reg, Matrix::identity(q, 2));
  CHECK(p2.checks.all_pass());
  CHECK(p2.mu.is_identity());

  // zero submodule edge case
  auto p0 = maschke_projection(g2, reg, Matrix(q, 2, 0));
  CHECK(p0.checks.all_pass());
  CHECK(p0.mu.is_zero());

  // tensor module with a cyclic submodule
  auto g3 = oracle::group_hopf_by_table(q, 3);
  AModule t33 = tensor_module(g3, regular_module(g3), regular_module(g3));
  Vec v = vec_zero(q, 9);
  v[0] = Scalar::one(q);
  v[5] = Scalar::one(q);  // e_(1,2)
  Matrix w = cyclic_submodule(t33, v);
  REQUIRE(is_submodule(t33, w));
  auto p3 = maschke_projection(g3, t33, w);
  INFO(p3.checks.summary());
  CHECK(p3.checks.all_pass());

  // averaging over a non-submodule must be caught by the checks
  Matrix notsub = Matrix::from_cols(q, 2, {colv(q, {1, 0})});
  auto pbad = maschke_projection(g2, reg, notsub);
  CHECK_FALSE(pbad.checks.all_pass());

  // non-semisimple input is rejected
  auto h4 = oracle::sweedler_by_rewriting(q);
  CHECK_THROWS_AS(maschke_projection(h4, regular_module(h4), left_integrals_in(h4)), std::domain_error);
}
