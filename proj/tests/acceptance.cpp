// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
//
// Each criterion is verified with exact arithmetic; no tolerances anywhere.
// The checks are phrased against the public library surface and the zoo of
// built-in examples, so a regression in any module shows up as a FAIL line.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hopf/runner.hpp"

using namespace hopf;

namespace {

struct Gate {
  int failures = 0;
  std::chrono::steady_clock::time_point mark = std::chrono::steady_clock::now();

  void line(int num, const std::string& what, bool pass, const std::string& detail = "") {
    auto now = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(now - mark).count();
    mark = now;
    std::string suffix = (!pass && !detail.empty()) ? " [" + detail + "]" : "";
    std::printf("%s criterion-%d: %s%s (%.1fs)\n", pass ? "PASS" : "FAIL", num, what.c_str(),
                suffix.c_str(), secs);
    std::fflush(stdout);
    if (!pass) ++failures;
  }
};

/// Finite-dimensional zoo members: the kinds carrying a d x d^2 product.
std::vector<std::string> finite_keys() {
  std::vector<std::string> out;
  for (const ZooEntry& e : zoo_list()) {
    ZooObject z = zoo_build(e.name);
    if (z.kind == ZooKind::hopf || z.kind == ZooKind::diagonal || z.kind == ZooKind::yd)
      out.push_back(e.name);
  }
  return out;
}

FinDimHopf plain_of(const ZooObject& z) {
  if (z.kind == ZooKind::hopf) return *z.hopf;
  if (z.kind == ZooKind::diagonal) return z.diag->as_plain();
  return z.ydh->as_plain();
}

bool starts_with(const std::string& s, const char* p) { return s.rfind(p, 0) == 0; }

bool has_passing(const VerificationReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c.pass;
  return false;
}

// ---------------------------------------------------------------------------

void criterion_1(Gate& g) {
  bool ok = true;
  std::string detail;
  for (const ZooEntry& e : zoo_list()) {
    ZooObject z = zoo_build(e.name);
    RunReport r = run_report(z, e.name, "", {"axioms"});
    if (!r.all_pass) {
      ok = false;
      for (const RunSuite& s : r.suites)
        for (const RunCheck& c : s.checks)
          if (!c.pass && detail.empty()) detail = e.name + ": " + c.name;
    }
  }
  g.line(1, "every zoo member passes its full axiom battery with exact equality", ok, detail);
}

void criterion_2(Gate& g) {
  bool ok = true;
  std::string detail;
  for (const std::string& key : finite_keys()) {
    ZooObject z = zoo_build(key);
    FinDimHopf h = plain_of(z);
    MaschkeVerdict v = maschke_test(h);
    bool trace = semisimple_trace_form(h.algebra());
    bool expect_ss = starts_with(key, "group_algebra") || starts_with(key, "dual_group_algebra");
    if (v.semisimple != trace) {
      ok = false;
      detail = key + ": counit criterion disagrees with the trace form";
    } else if (v.semisimple != expect_ss) {
      ok = false;
      detail = key + ": unexpected semisimplicity verdict";
    }
  }
  g.line(2, "eps(integral) != 0 matches trace-form nondegeneracy on every finite member", ok,
         detail);
}

void criterion_3(Gate& g) {
  bool ok = true;
  std::string detail;
  std::size_t members = 0;
  for (const std::string& key : finite_keys()) {
    ZooObject z = zoo_build(key);
    FinDimHopf h = plain_of(z);
    if (!maschke_test(h).semisimple) continue;
    ++members;
    const FieldPtr& ctx = h.ctx;
    std::size_t d = h.dim;

    struct Instance {
      AModule m;
      Matrix w;
      const char* tag;
    };
    std::vector<Instance> instances;
    AModule reg = regular_module(h);
    instances.push_back({reg, invariants(h, reg), "regular/invariants"});
    Vec v = basis_vec(ctx, d, 0);
    if (d >= 2) v = vec_add(v, vec_scale(-Scalar::one(ctx), basis_vec(ctx, d, 1)));
    instances.push_back({reg, cyclic_submodule(reg, v), "regular/cyclic"});
    AModule triv = trivial_module(h, 2);
    instances.push_back(
        {triv, Matrix::from_cols(ctx, 2, {basis_vec(ctx, 2, 0)}), "trivial/line"});

    for (const Instance& inst : instances) {
      if (inst.w.cols() == 0) {
        ok = false;
        detail = key + " " + inst.tag + ": empty submodule";
        continue;
      }
      if (!is_submodule(inst.m, inst.w)) {
        ok = false;
        detail = key + " " + inst.tag + ": not a submodule";
        continue;
      }
      ProjectionResult pr = maschke_projection(h, inst.m, inst.w);
      if (!pr.checks.all_pass()) {
        ok = false;
        detail = key + " " + inst.tag + ": " + pr.checks.first_failure();
      }
    }
  }
  if (members == 0) {
    ok = false;
    detail = "no semisimple members found";
  }
  g.line(3,
         "averaged projections work on three (module, submodule) instances per semisimple member",
         ok, detail);
}

void criterion_4(Gate& g) {
  bool ok = true;
  std::string detail;
  auto run = [&](const std::string& tag, const auto& braided) {
    auto qd = build_quasidual(braided);
    VerificationReport rep = check_hopf_module(qd);
    if (!rep.all_pass()) {
      ok = false;
      if (detail.empty()) detail = tag + ": " + rep.first_failure();
      return;
    }
    // the symmetric-braiding identities must actually have been exercised
    if (!has_passing(rep, "hopfmodule.compatibility") ||
        !has_passing(rep, "hopfmodule.product_action_exchange")) {
      ok = false;
      if (detail.empty()) detail = tag + ": symmetric-braiding identities were not run";
    }
  };
  run("sweedler_h4", to_braided_trivial(*zoo_build("sweedler_h4").hopf));
  run("truncated_nichols:2", *zoo_build("truncated_nichols:2").diag);
  for (std::size_t n = 1; n <= 6; ++n)
    run("group_algebra:" + std::to_string(n),
        to_braided_trivial(*zoo_build("group_algebra:" + std::to_string(n)).hopf));
  g.line(4, "Hopf-module axioms and the compatibility identity hold exactly on the dual for "
            "symmetric-braiding members",
         ok, detail);
}

void criterion_5(Gate& g) {
  bool ok = true;
  std::string detail;
  static const char* needed[] = {"structure.phi_bijective", "structure.phi_module_map",
                                 "structure.phi_comodule_map",
                                 "structure.coinvariants_equal_integrals",
                                 "structure.dimension_identity"};
  auto run = [&](const std::string& tag, const auto& braided) {
    auto qd = build_quasidual(braided);
    StructureTheoremResult st = structure_theorem(qd);
    if (!st.report.all_pass()) {
      ok = false;
      if (detail.empty()) detail = tag + ": " + st.report.first_failure();
      return;
    }
    for (const char* name : needed)
      if (!has_passing(st.report, name)) {
        ok = false;
        if (detail.empty()) detail = tag + ": check " + std::string(name) + " missing";
      }
  };
  for (const std::string& key : finite_keys()) {
    ZooObject z = zoo_build(key);
    if (z.kind == ZooKind::hopf)
      run(key, to_braided_trivial(*z.hopf));
    else if (z.kind == ZooKind::diagonal)
      run(key, *z.diag);
    else
      run(key, *z.ydh);
  }
  g.line(5, "the dual decomposes as integrals tensor the algebra on every finite member", ok,
         detail);
}

void criterion_6(Gate& g) {
  bool ok = true;
  std::string detail;
  auto fail = [&](const std::string& d) {
    ok = false;
    if (detail.empty()) detail = d;
  };

  // YD module instances: duals, evaluation, braid equation
  std::vector<std::pair<std::string, YDModule>> instances;
  for (std::size_t n = 2; n <= 4; ++n) {
    std::string key = "nichols_yd:" + std::to_string(n);
    instances.emplace_back(key, zoo_build(key).ydh->object);
  }
  instances.emplace_back("sign_yd_module", *zoo_build("sign_yd_module").ydm);
  {
    ZooObject qt = zoo_build("quasitriangular_kz2");
    instances.emplace_back("induced_regular",
                           yd_from_quasitriangular(qt.qt->base, qt.qt->r,
                                                   regular_module(*qt.qt->base)));
  }
  for (const auto& [tag, m] : instances) {
    YDModule dual = yd_dual(m);
    if (!yd_check(dual).all_pass()) fail(tag + ": dual fails the compatibility axioms");
    if (!is_yd_morphism(yd_eval(m), yd_tensor(dual, m), yd_unit(m.base)))
      fail(tag + ": evaluation is not a category morphism");
    if (!braid_equation_holds(yd_braiding(m, m), m.dim)) fail(tag + ": braid equation");
  }

  // the dual action maps are category morphisms whenever the base antipode
  // is an involution (true for every group-algebra base here)
  for (std::size_t n = 2; n <= 4; ++n) {
    std::string key = "nichols_yd:" + std::to_string(n);
    ZooObject z = zoo_build(key);
    if (!pointing_morphism_expected(z.ydh->object)) {
      fail(key + ": base antipode unexpectedly not an involution");
      continue;
    }
    auto qd = build_quasidual(*z.ydh);
    VerificationReport rep = check_quasidual(qd);
    if (!has_passing(rep, "quasidual.lact_morphism") ||
        !has_passing(rep, "quasidual.ract_morphism"))
      fail(key + ": dual action maps are not category morphisms");
  }

  // braid equation for the diagonal and graded braidings as well
  for (std::size_t n = 2; n <= 4; ++n) {
    ZooObject z = zoo_build("truncated_nichols:" + std::to_string(n));
    if (!braid_equation_holds(z.diag->braiding(), z.diag->dim()))
      fail("truncated_nichols braiding fails the braid equation");
  }
  for (const ZooEntry& e : zoo_list()) {
    ZooObject z = zoo_build(e.name);
    if (z.kind != ZooKind::graded) continue;
    if (!graded_braid_equation_holds(*z.graded)) fail(e.name + ": braid equation");
  }
  g.line(6, "duals, evaluation, and dual actions are verified category morphisms and every "
            "braiding satisfies the braid equation",
         ok, detail);
}

void criterion_7(Gate& g, const Biproduct& bp2) {
  bool ok = true;
  std::string detail;
  Matrix duals = left_integrals_on(bp2.result);
  if (duals.cols() != 1) {
    ok = false;
    detail = "biproduct dual integral space has dimension " + std::to_string(duals.cols());
  } else {
    VerificationReport rep = restrict_integral_report(bp2, duals.col(0));
    if (!rep.all_pass()) {
      ok = false;
      detail = rep.first_failure();
    }
    // the nonzero restriction spans the independently computed integrals on
    // the dual of the braided factor
    Matrix h_duals = left_integrals_on(bp2.h.as_plain());
    bool spanned = false;
    for (std::size_t j = 0; j < bp2.db && !spanned; ++j) {
      RestrictedIntegral u =
          restrict_integral(bp2, duals.col(0), basis_vec(bp2.result.ctx, bp2.db, j));
      if (u.zero) continue;
      Matrix span = Matrix::from_cols(bp2.result.ctx, bp2.dh, {u.functional});
      if (subspace_equal(span, h_duals)) spanned = true;
    }
    if (!spanned) {
      ok = false;
      if (detail.empty()) detail = "no restriction spans the dual integrals of the factor";
    }
  }
  g.line(7, "the biproduct integral restricts to a nonzero integral spanning the dual integrals "
            "of the braided factor",
         ok, detail);
}

void criterion_8(Gate& g, const std::vector<std::pair<std::string, const Biproduct*>>& bps) {
  bool ok = true;
  std::string detail;
  auto fail = [&](const std::string& d) {
    ok = false;
    if (detail.empty()) detail = d;
  };

  // trivial-coaction instances: uniqueness of the dual integral
  ZooObject kz2 = zoo_build("group_algebra:2");
  auto base2 = std::make_shared<FinDimHopf>(*kz2.hopf);
  for (const char* key : {"sweedler_h4", "group_algebra:3", "group_algebra:4",
                          "dual_group_algebra:3"}) {
    ZooObject z = zoo_build(key);
    YDBraidedHopf triv = to_braided_yd_trivial(*z.hopf, base2);
    Matrix lo = left_integrals_on(triv.as_plain());
    if (lo.cols() > 1) fail(std::string(key) + ": dual integral dimension " +
                            std::to_string(lo.cols()));
    VerificationReport rep = integral_uniqueness_check(triv);
    if (!rep.all_pass()) fail(std::string(key) + ": " + rep.first_failure());
  }

  // every biproduct built: dual integral space of dimension at most one
  for (const auto& [tag, bp] : bps) {
    Matrix lo = left_integrals_on(bp->result);
    if (lo.cols() > 1)
      fail(tag + ": biproduct dual integral dimension " + std::to_string(lo.cols()));
  }
  g.line(8, "dual integral spaces have dimension at most one under the trivial-coaction "
            "precondition and on every biproduct",
         ok, detail);
}

void criterion_9(Gate& g) {
  bool ok = true;
  std::string detail;
  auto fail = [&](const std::string& d) {
    ok = false;
    if (detail.empty()) detail = d;
  };
  FieldPtr q_ctx = field_rational();
  Scalar two = Scalar::from_rat(q_ctx, Rat(2));
  if (capped_integral_search(braided_line(q_ctx, two, 20)).cols() != 0)
    fail("q = 2 line: unexpected capped integral");
  if (capped_integral_search(braided_line(q_ctx, Scalar::one(q_ctx), 20)).cols() != 0)
    fail("q = 1 line: unexpected capped integral");
  for (std::size_t n = 2; n <= 4; ++n) {
    GradedBraidedHopf gn = nichols_graded(n);
    Matrix found = capped_integral_search(gn);
    Matrix expect =
        Matrix::from_cols(gn.ctx(), gn.dim(), {basis_vec(gn.ctx(), gn.dim(), n - 1)});
    if (found.cols() != 1 || !subspace_equal(found, expect)) {
      fail("truncation n = " + std::to_string(n) + ": integrals differ from the top power");
      continue;
    }
    if (!gn.counit.at(0, n - 1).is_zero())
      fail("truncation n = " + std::to_string(n) + ": counit of the integral is nonzero");
    FinDimHopf plain = truncated_nichols(n).as_plain();
    if (maschke_test(plain).semisimple || semisimple_trace_form(plain.algebra()))
      fail("truncation n = " + std::to_string(n) + ": unexpectedly semisimple");
  }
  g.line(9, "capped searches find no integral on the free lines and exactly the top power with "
            "vanishing counit on the truncations",
         ok, detail);
}

void criterion_10(Gate& g) {
  bool ok = true;
  std::string detail;
  for (const ZooEntry& e : zoo_list()) {
    ZooObject z1 = zoo_build(e.name);
    std::string d1 = fnv1a64_hex(dump_spec(z1));
    std::string r1 = report_text_without_timing(run_report(z1, e.name, d1, all_suites()));
    ZooObject z2 = zoo_build(e.name);
    std::string d2 = fnv1a64_hex(dump_spec(z2));
    std::string r2 = report_text_without_timing(run_report(z2, e.name, d2, all_suites()));
    if (r1 != r2) {
      ok = false;
      detail = e.name + ": reports differ";
      break;
    }
  }
  g.line(10, "re-running the full suite produces byte-identical reports modulo timing", ok,
         detail);
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  Gate g;

  criterion_1(g);
  criterion_2(g);
  criterion_3(g);
  criterion_4(g);
  criterion_5(g);
  criterion_6(g);

  // biproducts shared by criteria 7 and 8
  Biproduct bp2 = bosonize(*zoo_build("nichols_yd:2").ydh);
  Biproduct bp3 = bosonize(*zoo_build("nichols_yd:3").ydh);
  Biproduct bp4 = bosonize(*zoo_build("nichols_yd:4").ydh);
  criterion_7(g, bp2);
  criterion_8(g, {{"nichols_yd:2", &bp2}, {"nichols_yd:3", &bp3}, {"nichols_yd:4", &bp4}});
  criterion_9(g);
  criterion_10(g);

  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s: 10 criteria, %d failed, %.1f seconds\n", g.failures == 0 ? "PASS" : "FAIL",
              g.failures, secs);
  return g.failures == 0 ? 0 : 1;
}
