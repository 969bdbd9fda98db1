#pragma once

#include <chrono>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hopf/bosonization.hpp"
#include "hopf/graded.hpp"
#include "hopf/integrals.hpp"
#include "hopf/quasidual.hpp"
#include "hopf/specfile.hpp"
#include "hopf/zoo.hpp"

namespace hopf {

inline constexpr const char* hopfcheck_version = "1.0.0";

// ---------------------------------------------------------------------------
// Suite runner: executes named batteries of checks against one object and
// collects a deterministic report. Everything except the elapsed_ms fields
// is a pure function of the input bytes; elapsed_ms carries the wall time of
// the computation batch that produced the check.
// ---------------------------------------------------------------------------

struct RunCheck {
  std::string name;
  bool pass = false;
  std::string witness;
  double elapsed_ms = 0.0;
};

struct RunSuite {
  std::string name;
  bool applicable = true;
  std::string note;
  std::vector<RunCheck> checks;
  std::vector<std::pair<std::string, std::string>> objects;  // exact strings

  void add(std::string n, bool pass, std::string witness, double ms) {
    checks.push_back({std::move(n), pass, std::move(witness), ms});
  }
  void merge(const VerificationReport& rep, double ms, const std::string& prefix = "") {
    for (const auto& c : rep.checks) checks.push_back({prefix + c.name, c.pass, c.detail, ms});
  }
  void object(std::string n, std::string value) {
    objects.emplace_back(std::move(n), std::move(value));
  }
};

struct RunReport {
  std::string tool = "hopfcheck";
  std::string version = hopfcheck_version;
  std::string input;
  std::string input_digest;
  std::string name;
  std::string field;
  std::string kind;
  std::size_t dim = 0;
  std::vector<RunSuite> suites;
  std::size_t checks_total = 0;
  std::size_t checks_failed = 0;
  bool all_pass = true;
};

inline const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names = {"axioms",    "quasidual", "hopfmodule",
                                                 "structure", "integrals", "maschke",
                                                 "bosonization", "graded"};
  return names;
}

inline bool suite_known(const std::string& s) {
  for (const auto& n : all_suites())
    if (n == s) return true;
  return false;
}

inline bool suite_applicable(const std::string& s, ZooKind k) {
  const bool finite_braided = (k == ZooKind::hopf || k == ZooKind::diagonal || k == ZooKind::yd);
  if (s == "axioms") return true;
  if (s == "quasidual" || s == "hopfmodule" || s == "structure") return finite_braided;
  if (s == "integrals") return finite_braided || k == ZooKind::graded || k == ZooKind::quasitriangular;
  if (s == "maschke") return finite_braided || k == ZooKind::quasitriangular;
  if (s == "bosonization") return k == ZooKind::yd;
  if (s == "graded") return k == ZooKind::graded;
  return false;
}

/// Exact linear combination of labeled basis vectors, e.g. "(1)*1 + (-1/2)*gx".
inline std::string lincomb_str(const std::vector<std::string>& labels, const Vec& v,
                               const char* fallback = "e", bool starred = false) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string lbl = (i < labels.size() && !labels[i].empty())
                          ? labels[i]
                          : std::string(fallback) + std::to_string(i);
    if (starred) lbl += "*";
    out += "(" + v[i].str() + ")*" + lbl;
  }
  return out.empty() ? "0" : out;
}

/// Semicolon-joined exact column list, "{v1; v2}" or "{}" when empty.
inline std::string basis_str(const std::vector<std::string>& labels, const Matrix& w,
                             bool starred = false) {
  std::string out = "{";
  for (std::size_t c = 0; c < w.cols(); ++c) {
    if (c) out += "; ";
    out += lincomb_str(labels, w.col(c), "e", starred);
  }
  return out + "}";
}

namespace runnerdetail {

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

inline void axioms_ydmodule(RunSuite& s, const YDModule& m) {
  Stopwatch w1;
  VerificationReport rep = yd_check(m);
  s.merge(rep, w1.ms());

  Stopwatch w2;
  bool braid = braid_equation_holds(yd_braiding(m, m), m.dim);
  s.add("axioms.braid_equation", braid, "", w2.ms());

  Stopwatch w3;
  YDModule dual = yd_dual(m);
  s.merge(yd_check(dual), w3.ms(), "dual.");

  Stopwatch w4;
  bool ev_ok = is_yd_morphism(yd_eval(m), yd_tensor(dual, m), yd_unit(m.base));
  s.add("axioms.evaluation_is_morphism", ev_ok, "", w4.ms());
}

inline void suite_axioms(RunSuite& s, const ZooObject& z) {
  switch (z.kind) {
    case ZooKind::hopf: {
      Stopwatch w;
      VerificationReport rep = check_hopf(*z.hopf);
      s.merge(rep, w.ms());
      break;
    }
    case ZooKind::diagonal: {
      Stopwatch w;
      VerificationReport rep = check_braided_hopf(*z.diag);
      s.merge(rep, w.ms());
      Stopwatch w2;
      bool braid = braid_equation_holds(z.diag->braiding(), z.diag->dim());
      s.add("axioms.braid_equation", braid, "", w2.ms());
      break;
    }
    case ZooKind::yd: {
      Stopwatch w1;
      s.merge(yd_check(z.ydh->object), w1.ms(), "object.");
      Stopwatch w2;
      VerificationReport rep = check_braided_hopf(*z.ydh);
      s.merge(rep, w2.ms());
      Stopwatch w3;
      bool braid = braid_equation_holds(z.ydh->braiding(), z.ydh->dim());
      s.add("axioms.braid_equation", braid, "", w3.ms());
      break;
    }
    case ZooKind::graded: {
      Stopwatch w;
      VerificationReport rep = check_graded(*z.graded);
      s.merge(rep, w.ms());
      break;
    }
    case ZooKind::ydmodule:
      axioms_ydmodule(s, *z.ydm);
      break;
    case ZooKind::quasitriangular: {
      Stopwatch w1;
      s.merge(check_hopf(*z.qt->base), w1.ms(), "base.");
      Stopwatch w2;
      VerificationReport rep = check_quasitriangular(*z.qt->base, z.qt->r);
      s.merge(rep, w2.ms());
      Stopwatch w3;
      YDModule induced = yd_from_quasitriangular(z.qt->base, z.qt->r, regular_module(*z.qt->base));
      s.merge(yd_check(induced), w3.ms(), "induced_regular.");
      break;
    }
  }
}

template <class Cat>
void run_quasidual(RunSuite& s, const BraidedHopfAlg<Cat>& h) {
  Stopwatch w;
  QuasiDual<Cat> qd = build_quasidual(h);
  VerificationReport rep = check_quasidual(qd);
  s.merge(rep, w.ms());
}

template <class Cat>
void run_hopfmodule(RunSuite& s, const BraidedHopfAlg<Cat>& h) {
  Stopwatch w;
  QuasiDual<Cat> qd = build_quasidual(h);
  VerificationReport rep = check_hopf_module(qd);
  s.merge(rep, w.ms());
}

template <class Cat>
void run_structure(RunSuite& s, const BraidedHopfAlg<Cat>& h) {
  Stopwatch w;
  QuasiDual<Cat> qd = build_quasidual(h);
  StructureTheoremResult st = structure_theorem(qd);
  double ms = w.ms();
  s.merge(st.report, ms);
  s.object("coinvariant_basis", basis_str(h.labels, st.coinvariants, true));
  s.object("integral_basis", basis_str(h.labels, st.integrals, true));
}

template <class F>
void dispatch_braided(const ZooObject& z, F&& f) {
  if (z.kind == ZooKind::hopf)
    f(to_braided_trivial(*z.hopf));
  else if (z.kind == ZooKind::diagonal)
    f(*z.diag);
  else
    f(*z.ydh);
}

/// The plain structure-constant carrier used for integral and trace-form
/// computations, which never invoke the braiding.
inline FinDimHopf plain_carrier(const ZooObject& z) {
  switch (z.kind) {
    case ZooKind::hopf: return *z.hopf;
    case ZooKind::diagonal: return z.diag->as_plain();
    case ZooKind::yd: return z.ydh->as_plain();
    case ZooKind::quasitriangular: return *z.qt->base;
    default: throw std::logic_error("plain_carrier: kind has no finite carrier");
  }
}

inline void suite_integrals(RunSuite& s, const ZooObject& z) {
  if (z.kind == ZooKind::graded) {
    const GradedBraidedHopf& g = *z.graded;
    Stopwatch w1;
    Matrix capped = capped_integral_search(g);
    s.add("integrals.capped_left_search_recorded", true,
          "dimension " + std::to_string(capped.cols()), w1.ms());
    s.object("capped_left_integrals", basis_str(g.labels, capped));
    Stopwatch w2;
    GradedDual gd = graded_dual(g);
    Matrix dual_capped = dual_capped_integral_search(g, gd);
    s.add("integrals.dual_capped_left_search_recorded", true,
          "dimension " + std::to_string(dual_capped.cols()), w2.ms());
    s.object("dual_capped_left_integrals", basis_str(gd.labels, dual_capped));
    return;
  }
  FinDimHopf h = plain_carrier(z);
  Stopwatch w;
  Matrix li = left_integrals_in(h);
  Matrix ri = right_integrals_in(h);
  Matrix lo = left_integrals_on(h);
  double ms = w.ms();
  s.add("integrals.left_space_dimension_1", li.cols() == 1,
        "dimension " + std::to_string(li.cols()), ms);
  s.add("integrals.right_space_dimension_1", ri.cols() == 1,
        "dimension " + std::to_string(ri.cols()), ms);
  s.add("integrals.dual_left_space_dimension_1", lo.cols() == 1,
        "dimension " + std::to_string(lo.cols()), ms);
  s.object("left_integrals_in", basis_str(h.labels, li));
  s.object("right_integrals_in", basis_str(h.labels, ri));
  s.object("left_integrals_on", basis_str(h.labels, lo, true));
}

inline void suite_maschke(RunSuite& s, const ZooObject& z) {
  FinDimHopf h = plain_carrier(z);
  Stopwatch w;
  MaschkeVerdict v = maschke_test(h);
  bool trace = semisimple_trace_form(h.algebra());
  double ms = w.ms();
  s.add("maschke.counit_criterion_matches_trace_form", v.semisimple == trace,
        std::string("counit criterion: ") + (v.semisimple ? "semisimple" : "not semisimple") +
            ", trace form: " + (trace ? "nondegenerate" : "degenerate"),
        ms);
  s.object("semisimple", v.semisimple ? "true" : "false");
  s.object("eps_of_integral", v.eps_of_t ? v.eps_of_t->str() : "(no integral)");
  if (!v.semisimple) return;
  if (z.kind != ZooKind::hopf && z.kind != ZooKind::quasitriangular) return;
  Stopwatch w2;
  AModule m = regular_module(h);
  Matrix inv = invariants(h, m);
  bool sub = is_submodule(m, inv);
  s.add("maschke.invariants_form_submodule", sub, "dimension " + std::to_string(inv.cols()),
        w2.ms());
  if (!sub || inv.cols() == 0) return;
  Stopwatch w3;
  ProjectionResult pr = maschke_projection(h, m, inv);
  s.merge(pr.checks, w3.ms());
}

inline void suite_bosonization(RunSuite& s, const ZooObject& z) {
  const YDBraidedHopf& h = *z.ydh;
  Stopwatch w1;
  // bosonize runs the full ordinary-Hopf battery on the result internally
  // and throws with the first failed check; reaching the next line is the
  // verification.
  Biproduct bp = bosonize(h);
  s.add("bosonization.biproduct_hopf_verified", true,
        "dimension " + std::to_string(bp.result.dim), w1.ms());

  Stopwatch w2;
  Matrix lo = left_integrals_on(bp.result);
  s.add("bosonization.biproduct_dual_integrals_dim_le_1", lo.cols() <= 1,
        "dimension " + std::to_string(lo.cols()), w2.ms());
  if (lo.cols() == 1) {
    Stopwatch w3;
    VerificationReport rep = restrict_integral_report(bp, lo.col(0));
    s.merge(rep, w3.ms());
    s.object("biproduct_dual_integral", lincomb_str(bp.result.labels, lo.col(0), "e", true));
  }
  if (!trivial_coaction_witness(h.object)) {
    Stopwatch w4;
    VerificationReport rep = integral_uniqueness_check(h);
    s.merge(rep, w4.ms());
  }
}

inline void suite_graded(RunSuite& s, const ZooObject& z) {
  const GradedBraidedHopf& g = *z.graded;
  Stopwatch w;
  GradedDual gd = graded_dual(g);
  VerificationReport rep = check_graded_dual(g, gd);
  s.merge(rep, w.ms());
}

inline void run_suite(RunSuite& s, const ZooObject& z) {
  if (s.name == "axioms")
    suite_axioms(s, z);
  else if (s.name == "quasidual")
    dispatch_braided(z, [&](const auto& h) { run_quasidual(s, h); });
  else if (s.name == "hopfmodule")
    dispatch_braided(z, [&](const auto& h) { run_hopfmodule(s, h); });
  else if (s.name == "structure")
    dispatch_braided(z, [&](const auto& h) { run_structure(s, h); });
  else if (s.name == "integrals")
    suite_integrals(s, z);
  else if (s.name == "maschke")
    suite_maschke(s, z);
  else if (s.name == "bosonization")
    suite_bosonization(s, z);
  else if (s.name == "graded")
    suite_graded(s, z);
}

}  // namespace runnerdetail

/// Run the selected suites against one object. Unknown suite names throw;
/// suites that do not apply to the object's kind are reported as
/// `applicable: false` with zero checks. An empty selection yields a report
/// with zero checks.
inline RunReport run_report(const ZooObject& z, const std::string& input,
                            const std::string& digest, const std::vector<std::string>& suites) {
  RunReport r;
  r.input = input;
  r.input_digest = digest;
  r.name = z.name;
  r.field = z.ctx()->name();
  r.kind = zoo_kind_name(z.kind);
  r.dim = z.dim();
  for (const std::string& name : suites) {
    if (!suite_known(name)) throw std::invalid_argument("unknown suite '" + name + "'");
    RunSuite s;
    s.name = name;
    if (!suite_applicable(name, z.kind)) {
      s.applicable = false;
      s.note = "not applicable to kind '" + r.kind + "'";
    } else {
      try {
        runnerdetail::run_suite(s, z);
      } catch (const std::exception& e) {
        // A suite that cannot even set up its objects (e.g. the dual pairing
        // of a non-Hopf input) reports that as a failed check instead of
        // aborting the remaining suites.
        s.add(name + ".prerequisites", false, e.what(), 0.0);
      }
    }
    r.suites.push_back(std::move(s));
  }
  for (const RunSuite& s : r.suites) {
    r.checks_total += s.checks.size();
    for (const RunCheck& c : s.checks)
      if (!c.pass) ++r.checks_failed;
  }
  r.all_pass = (r.checks_failed == 0);
  return r;
}

inline nlohmann::ordered_json report_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["tool"] = r.tool;
  j["version"] = r.version;
  j["input"] = r.input;
  j["input_digest"] = r.input_digest;
  j["name"] = r.name;
  j["field"] = r.field;
  j["kind"] = r.kind;
  j["dim"] = r.dim;
  j["suites"] = nlohmann::ordered_json::array();
  for (const RunSuite& s : r.suites) {
    nlohmann::ordered_json js;
    js["name"] = s.name;
    js["applicable"] = s.applicable;
    if (!s.note.empty()) js["note"] = s.note;
    js["checks"] = nlohmann::ordered_json::array();
    for (const RunCheck& c : s.checks) {
      nlohmann::ordered_json jc;
      jc["name"] = c.name;
      jc["pass"] = c.pass;
      jc["witness"] = c.witness;
      jc["elapsed_ms"] = c.elapsed_ms;
      js["checks"].push_back(std::move(jc));
    }
    js["objects"] = nlohmann::ordered_json(nlohmann::ordered_json::value_t::object);
    for (const auto& [k, val] : s.objects) js["objects"][k] = val;
    j["suites"].push_back(std::move(js));
  }
  j["checks_total"] = r.checks_total;
  j["checks_failed"] = r.checks_failed;
  j["all_pass"] = r.all_pass;
  return j;
}

inline std::string report_text(const RunReport& r) { return report_json(r).dump(2) + "\n"; }

/// The same serialization with every elapsed_ms zeroed: two runs over the
/// same input bytes and suite selection produce byte-identical output.
inline std::string report_text_without_timing(const RunReport& r) {
  RunReport copy = r;
  for (RunSuite& s : copy.suites)
    for (RunCheck& c : s.checks) c.elapsed_ms = 0.0;
  return report_text(copy);
}

}  // namespace hopf
