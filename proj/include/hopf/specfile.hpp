#pragma once

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopf/zoo.hpp"

namespace hopf {

// ---------------------------------------------------------------------------
// Line-oriented exact structure-constant files ("hopfspec 1").
//
// A file is a sequence of key lines; blank lines and lines starting with '#'
// are ignored. The first kept line must be `hopfspec 1`. Header keys
// (name, field, kind, dim, q, cap, base) may appear at most once each and in
// any order; entry keys add one tensor coefficient per line, each coordinate
// at most once, values as exact scalar literals. All entry keys read inputs
// first, then outputs, then the value:
//   unit k v                    1        += v e_k
//   mult i j k v                e_i e_j  += v e_k
//   comult i j k v              Delta(e_i) += v e_j (x) e_k
//   counit i v                  eps(e_i) = v
//   antipode i j v              S(e_i)   += v e_j
//   degree i d                  deg e_i = d          (diagonal, graded)
//   action b m p v              e_b . v_m += v v_p   (yd, ydmodule)
//   coaction m b p v            phi(v_m) += v f_b (x) v_p
//   rmat i j v                  R += v e_i (x) e_j   (quasitriangular)
//   label i text...             basis label (rest of line, may contain spaces)
// Unknown keys, out-of-range indices, malformed values, duplicate header
// keys, duplicate coordinates, and keys not admitted by the declared kind
// are all rejected with the offending line number.
// ---------------------------------------------------------------------------

struct SpecError : std::runtime_error {
  std::size_t line;  // 1-based; 0 for file-level problems
  SpecError(std::size_t ln, const std::string& msg)
      : std::runtime_error(ln ? "spec error at line " + std::to_string(ln) + ": " + msg
                              : "spec error: " + msg),
        line(ln) {}
};

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string fnv1a64_hex(const std::string& s) {
  std::uint64_t h = fnv1a64(s);
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

namespace specdetail {

inline void emit_labels(std::string& out, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!labels[i].empty()) out += "label " + std::to_string(i) + " " + labels[i] + "\n";
}

inline void emit_unit(std::string& out, const Vec& u) {
  for (std::size_t k = 0; k < u.size(); ++k)
    if (!u[k].is_zero()) out += "unit " + std::to_string(k) + " " + u[k].str() + "\n";
}

inline void emit_mult(std::string& out, const Matrix& m, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& v = m.at(k, i * d + j);
        if (!v.is_zero())
          out += "mult " + std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(k) +
                 " " + v.str() + "\n";
      }
}

inline void emit_comult(std::string& out, const Matrix& m, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& v = m.at(j * d + k, i);
        if (!v.is_zero())
          out += "comult " + std::to_string(i) + " " + std::to_string(j) + " " +
                 std::to_string(k) + " " + v.str() + "\n";
      }
}

inline void emit_counit(std::string& out, const Matrix& m, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i) {
    const Scalar& v = m.at(0, i);
    if (!v.is_zero()) out += "counit " + std::to_string(i) + " " + v.str() + "\n";
  }
}

inline void emit_antipode(std::string& out, const Matrix& m, std::size_t d) {
  if (m.rows() != d) return;  // absent
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Scalar& v = m.at(j, i);
      if (!v.is_zero())
        out += "antipode " + std::to_string(i) + " " + std::to_string(j) + " " + v.str() + "\n";
    }
}

inline void emit_hopf_core(std::string& out, const std::vector<std::string>& labels,
                           const Matrix& mult, const Vec& unit, const Matrix& comult,
                           const Matrix& counit, const Matrix& antipode, std::size_t d) {
  emit_labels(out, labels);
  emit_unit(out, unit);
  emit_mult(out, mult, d);
  emit_comult(out, comult, d);
  emit_counit(out, counit, d);
  emit_antipode(out, antipode, d);
}

inline void emit_action(std::string& out, const Matrix& act, std::size_t bdim, std::size_t d) {
  for (std::size_t b = 0; b < bdim; ++b)
    for (std::size_t m = 0; m < d; ++m)
      for (std::size_t p = 0; p < d; ++p) {
        const Scalar& v = act.at(p, b * d + m);
        if (!v.is_zero())
          out += "action " + std::to_string(b) + " " + std::to_string(m) + " " +
                 std::to_string(p) + " " + v.str() + "\n";
      }
}

inline void emit_coaction(std::string& out, const Matrix& coact, std::size_t bdim, std::size_t d) {
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t b = 0; b < bdim; ++b)
      for (std::size_t p = 0; p < d; ++p) {
        const Scalar& v = coact.at(b * d + p, m);
        if (!v.is_zero())
          out += "coaction " + std::to_string(m) + " " + std::to_string(b) + " " +
                 std::to_string(p) + " " + v.str() + "\n";
      }
}

}  // namespace specdetail

/// Canonical text form of a zoo object. Deterministic: fixed key order,
/// ascending indices, zero entries skipped, values via Scalar::str().
inline std::string dump_spec(const ZooObject& z) {
  using namespace specdetail;
  std::string out = "hopfspec 1\n";
  if (!z.name.empty()) out += "name " + z.name + "\n";
  out += "field " + z.ctx()->name() + "\n";
  out += "kind " + zoo_kind_name(z.kind) + "\n";
  out += "dim " + std::to_string(z.dim()) + "\n";
  std::size_t d = z.dim();
  switch (z.kind) {
    case ZooKind::hopf: {
      const FinDimHopf& h = *z.hopf;
      emit_hopf_core(out, h.labels, h.mult, h.unit, h.comult, h.counit, h.antipode, d);
      break;
    }
    case ZooKind::diagonal: {
      const DiagBraidedHopf& h = *z.diag;
      out += "q " + h.object.q.str() + "\n";
      for (std::size_t i = 0; i < d; ++i)
        out += "degree " + std::to_string(i) + " " + std::to_string(h.object.degrees[i]) + "\n";
      emit_hopf_core(out, h.labels, h.mult, h.unit, h.comult, h.counit, h.antipode, d);
      break;
    }
    case ZooKind::graded: {
      const GradedBraidedHopf& h = *z.graded;
      out += "q " + h.q.str() + "\n";
      out += "cap " + std::to_string(h.cap()) + "\n";
      for (std::size_t i = 0; i < d; ++i)
        out += "degree " + std::to_string(i) + " " + std::to_string(h.degree[i]) + "\n";
      emit_hopf_core(out, h.labels, h.mult, h.unit, h.comult, h.counit, h.antipode, d);
      break;
    }
    case ZooKind::yd: {
      if (z.base_ref.empty())
        throw std::invalid_argument("dump_spec: yd object has no base reference");
      const YDBraidedHopf& h = *z.ydh;
      out += "base " + z.base_ref + "\n";
      emit_hopf_core(out, h.labels, h.mult, h.unit, h.comult, h.counit, h.antipode, d);
      emit_action(out, h.object.action, h.object.bdim(), d);
      emit_coaction(out, h.object.coaction, h.object.bdim(), d);
      break;
    }
    case ZooKind::ydmodule: {
      if (z.base_ref.empty())
        throw std::invalid_argument("dump_spec: ydmodule object has no base reference");
      const YDModule& m = *z.ydm;
      out += "base " + z.base_ref + "\n";
      emit_labels(out, m.labels);
      emit_action(out, m.action, m.bdim(), d);
      emit_coaction(out, m.coaction, m.bdim(), d);
      break;
    }
    case ZooKind::quasitriangular: {
      const QuasitriangularData& qt = *z.qt;
      const FinDimHopf& h = *qt.base;
      emit_hopf_core(out, h.labels, h.mult, h.unit, h.comult, h.counit, h.antipode, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          const Scalar& v = qt.r[i * d + j];
          if (!v.is_zero())
            out += "rmat " + std::to_string(i) + " " + std::to_string(j) + " " + v.str() + "\n";
        }
      break;
    }
  }
  return out;
}

namespace specdetail {

struct Line {
  std::size_t no;  // 1-based line number in the original text
  std::vector<std::string> tok;
  std::string rest;  // remainder after the second token, for label lines
};

inline std::vector<Line> keep_lines(const std::string& text) {
  std::vector<Line> out;
  std::size_t no = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string raw = text.substr(start, end - start);
    ++no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    bool blank = raw.find_first_not_of(" \t") == std::string::npos;
    if (!blank && raw[0] != '#') {
      Line ln{no, {}, ""};
      std::istringstream ss(raw);
      std::string t;
      while (ss >> t) ln.tok.push_back(t);
      // rest-of-line after the second whitespace-separated token
      if (ln.tok.size() >= 2) {
        std::size_t p = raw.find(ln.tok[0]);
        p = raw.find_first_not_of(" \t", p + ln.tok[0].size());
        p = raw.find_first_not_of(" \t", p + ln.tok[1].size());
        if (p != std::string::npos) ln.rest = raw.substr(p);
      }
      out.push_back(std::move(ln));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

inline std::size_t parse_index(const Line& ln, const std::string& tok, std::size_t bound,
                               const char* what) {
  if (tok.empty()) throw SpecError(ln.no, std::string(what) + ": empty index");
  for (char c : tok)
    if (c < '0' || c > '9')
      throw SpecError(ln.no, std::string(what) + ": malformed index '" + tok + "'");
  unsigned long v = 0;
  try {
    v = std::stoul(tok);
  } catch (const std::exception&) {
    throw SpecError(ln.no, std::string(what) + ": index '" + tok + "' out of range");
  }
  if (v >= bound)
    throw SpecError(ln.no, std::string(what) + ": index " + tok + " out of range for bound " +
                               std::to_string(bound));
  return static_cast<std::size_t>(v);
}

inline Scalar parse_value(const Line& ln, const FieldPtr& ctx, const std::string& tok) {
  try {
    return parse_scalar(ctx, tok);
  } catch (const std::exception& e) {
    throw SpecError(ln.no, e.what());
  }
}

inline void expect_args(const Line& ln, std::size_t n) {
  if (ln.tok.size() != n + 1)
    throw SpecError(ln.no, "'" + ln.tok[0] + "' takes " + std::to_string(n) + " fields, got " +
                               std::to_string(ln.tok.size() - 1));
}

/// Duplicate-coordinate guard for one sparse tensor.
struct Seen {
  std::set<std::uint64_t> s;
  void mark(const Line& ln, std::uint64_t key) {
    if (!s.insert(key).second) throw SpecError(ln.no, "duplicate entry for '" + ln.tok[0] + "'");
  }
};

inline std::shared_ptr<const FinDimHopf> resolve_base(const FieldPtr& ctx, const std::string& ref,
                                                      std::size_t line_no) {
  const std::string prefix = "zoo:";
  if (ref.rfind(prefix, 0) != 0)
    throw SpecError(line_no, "base must be a zoo reference like zoo:group_algebra:2");
  auto parts = detail::split_key(ref.substr(prefix.size()));
  try {
    if (parts.size() == 2 && parts[0] == "group_algebra")
      return std::make_shared<FinDimHopf>(
          group_algebra(ctx, detail::parse_count(parts[0], parts[1], 1, 64)));
    if (parts.size() == 2 && parts[0] == "dual_group_algebra")
      return std::make_shared<FinDimHopf>(
          dual_group_algebra(ctx, detail::parse_count(parts[0], parts[1], 1, 64)));
  } catch (const std::invalid_argument& e) {
    throw SpecError(line_no, e.what());
  }
  throw SpecError(line_no, "unsupported base reference '" + ref + "'");
}

}  // namespace specdetail

/// Parse a hopfspec document into a constructed object. Shape-level
/// invariants (key admissibility, index ranges, value syntax, duplicate
/// freedom) are enforced here; axiom-level verification is a separate step.
inline ZooObject parse_spec_text(const std::string& text) {
  using namespace specdetail;
  std::vector<Line> lines = keep_lines(text);
  if (lines.empty()) throw SpecError(0, "empty document");
  if (lines[0].tok.size() != 2 || lines[0].tok[0] != "hopfspec" || lines[0].tok[1] != "1")
    throw SpecError(lines[0].no, "first line must be 'hopfspec 1'");

  // --- header pass ---
  struct Header {
    std::string value;
    std::size_t line_no = 0;
    bool set = false;
  };
  Header name, field, kind, dim, qtok, cap, base;
  auto grab = [&](Header& h, const Line& ln, const std::string& value) {
    if (h.set) throw SpecError(ln.no, "duplicate key '" + ln.tok[0] + "'");
    h = {value, ln.no, true};
  };
  static const std::set<std::string> entry_keys = {"label", "unit",   "mult",     "comult",
                                                   "counit", "antipode", "degree", "action",
                                                   "coaction", "rmat"};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    const std::string& k = ln.tok[0];
    if (k == "name") {
      expect_args(ln, 1);
      grab(name, ln, ln.tok[1]);
    } else if (k == "field") {
      if (ln.tok.size() == 2 && ln.tok[1] == "rational")
        grab(field, ln, "rational");
      else if (ln.tok.size() == 3 && ln.tok[1] == "cyclotomic")
        grab(field, ln, ln.tok[2]);
      else
        throw SpecError(ln.no, "field must be 'rational' or 'cyclotomic <n>'");
    } else if (k == "kind") {
      expect_args(ln, 1);
      grab(kind, ln, ln.tok[1]);
    } else if (k == "dim") {
      expect_args(ln, 1);
      grab(dim, ln, ln.tok[1]);
    } else if (k == "q") {
      expect_args(ln, 1);
      grab(qtok, ln, ln.tok[1]);
    } else if (k == "cap") {
      expect_args(ln, 1);
      grab(cap, ln, ln.tok[1]);
    } else if (k == "base") {
      expect_args(ln, 1);
      grab(base, ln, ln.tok[1]);
    } else if (entry_keys.count(k) == 0) {
      throw SpecError(ln.no, "unknown key '" + k + "'");
    }
  }
  if (!field.set) throw SpecError(0, "missing required key 'field'");
  if (!kind.set) throw SpecError(0, "missing required key 'kind'");
  if (!dim.set) throw SpecError(0, "missing required key 'dim'");

  FieldPtr ctx;
  if (field.value == "rational") {
    ctx = field_rational();
  } else {
    for (char c : field.value)
      if (c < '0' || c > '9')
        throw SpecError(field.line_no, "malformed cyclotomic conductor '" + field.value + "'");
    unsigned long n = std::stoul(field.value);
    if (n == 0 || n > 1000) throw SpecError(field.line_no, "cyclotomic conductor out of range");
    ctx = field_cyclotomic(static_cast<unsigned>(n));
  }

  ZooKind zk;
  if (kind.value == "hopf")
    zk = ZooKind::hopf;
  else if (kind.value == "diagonal")
    zk = ZooKind::diagonal;
  else if (kind.value == "yd")
    zk = ZooKind::yd;
  else if (kind.value == "graded")
    zk = ZooKind::graded;
  else if (kind.value == "ydmodule")
    zk = ZooKind::ydmodule;
  else if (kind.value == "quasitriangular")
    zk = ZooKind::quasitriangular;
  else
    throw SpecError(kind.line_no, "unknown kind '" + kind.value + "'");

  Line dim_ln{dim.line_no, {"dim", dim.value}, ""};
  std::size_t d = parse_index(dim_ln, dim.value, 4097, "dim");
  if (d == 0) throw SpecError(dim.line_no, "dim must be positive");

  bool wants_q = (zk == ZooKind::diagonal || zk == ZooKind::graded);
  bool wants_cap = (zk == ZooKind::graded);
  bool wants_base = (zk == ZooKind::yd || zk == ZooKind::ydmodule);
  if (wants_q && !qtok.set) throw SpecError(0, "kind '" + kind.value + "' requires key 'q'");
  if (!wants_q && qtok.set) throw SpecError(qtok.line_no, "key 'q' not allowed for kind '" + kind.value + "'");
  if (wants_cap && !cap.set) throw SpecError(0, "kind 'graded' requires key 'cap'");
  if (!wants_cap && cap.set) throw SpecError(cap.line_no, "key 'cap' not allowed for kind '" + kind.value + "'");
  if (wants_base && !base.set) throw SpecError(0, "kind '" + kind.value + "' requires key 'base'");
  if (!wants_base && base.set) throw SpecError(base.line_no, "key 'base' not allowed for kind '" + kind.value + "'");

  Scalar q = Scalar::zero(ctx);
  if (qtok.set) {
    Line qline{qtok.line_no, {"q", qtok.value}, ""};
    q = parse_value(qline, ctx, qtok.value);
    if (q.is_zero()) throw SpecError(qtok.line_no, "q must be invertible");
  }
  std::size_t capv = 0;
  if (cap.set) {
    Line cline{cap.line_no, {"cap", cap.value}, ""};
    capv = parse_index(cline, cap.value, 4097, "cap");
    if (capv == 0) throw SpecError(cap.line_no, "cap must be at least 1");
  }
  std::shared_ptr<const FinDimHopf> base_hopf;
  if (base.set) base_hopf = specdetail::resolve_base(ctx, base.value, base.line_no);
  std::size_t bdim = base_hopf ? base_hopf->dim : 0;

  // --- entry pass ---
  bool carrier_hopf = (zk != ZooKind::ydmodule);
  bool carrier_yd = (zk == ZooKind::yd || zk == ZooKind::ydmodule);
  bool carrier_degrees = (zk == ZooKind::diagonal || zk == ZooKind::graded);
  bool carrier_rmat = (zk == ZooKind::quasitriangular);

  std::vector<std::string> labels(d);
  Matrix mult(ctx, d, d * d), comult(ctx, d * d, d), counit(ctx, 1, d);
  Vec unit = vec_zero(ctx, d);
  Matrix antipode(ctx, 0, 0);
  bool any_antipode = false;
  std::vector<long long> degrees(d, 0);
  Matrix action(ctx, d, bdim * d), coaction(ctx, bdim * d, d);
  Vec rvec = vec_zero(ctx, d * d);
  Seen s_label, s_unit, s_mult, s_comult, s_counit, s_antipode, s_degree, s_action, s_coaction,
      s_rmat;

  auto forbid = [&](const Line& ln, bool allowed) {
    if (!allowed)
      throw SpecError(ln.no, "key '" + ln.tok[0] + "' not allowed for kind '" + kind.value + "'");
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    const std::string& k = ln.tok[0];
    if (entry_keys.count(k) == 0) continue;  // header keys, handled above
    if (k == "label") {
      if (ln.tok.size() < 3) throw SpecError(ln.no, "'label' takes an index and a text");
      std::size_t idx = parse_index(ln, ln.tok[1], d, "label");
      s_label.mark(ln, idx);
      labels[idx] = ln.rest;
    } else if (k == "unit") {
      forbid(ln, carrier_hopf);
      expect_args(ln, 2);
      std::size_t kk = parse_index(ln, ln.tok[1], d, "unit");
      s_unit.mark(ln, kk);
      unit[kk] = parse_value(ln, ctx, ln.tok[2]);
    } else if (k == "mult") {
      forbid(ln, carrier_hopf);
      expect_args(ln, 4);
      std::size_t ii = parse_index(ln, ln.tok[1], d, "mult");
      std::size_t jj = parse_index(ln, ln.tok[2], d, "mult");
      std::size_t kk = parse_index(ln, ln.tok[3], d, "mult");
      s_mult.mark(ln, (ii * d + jj) * d + kk);
      mult.at(kk, ii * d + jj) = parse_value(ln, ctx, ln.tok[4]);
    } else if (k == "comult") {
      forbid(ln, carrier_hopf);
      expect_args(ln, 4);
      std::size_t ii = parse_index(ln, ln.tok[1], d, "comult");
      std::size_t jj = parse_index(ln, ln.tok[2], d, "comult");
      std::size_t kk = parse_index(ln, ln.tok[3], d, "comult");
      s_comult.mark(ln, (ii * d + jj) * d + kk);
      comult.at(jj * d + kk, ii) = parse_value(ln, ctx, ln.tok[4]);
    } else if (k == "counit") {
      forbid(ln, carrier_hopf);
      expect_args(ln, 2);
      std::size_t ii = parse_index(ln, ln.tok[1], d, "counit");
      s_counit.mark(ln, ii);
      counit.at(0, ii) = parse_value(ln, ctx, ln.tok[2]);
    } else if (k == "antipode") {
      forbid(ln, carrier_hopf);
      expect_args(ln, 3);
      if (!any_antipode) {
        antipode = Matrix(ctx, d, d);
        any_antipode = true;
      }
      std::size_t ii = parse_index(ln, ln.tok[1], d, "antipode");
      std::size_t jj = parse_index(ln, ln.tok[2], d, "antipode");
      s_antipode.mark(ln, ii * d + jj);
      antipode.at(jj, ii) = parse_value(ln, ctx, ln.tok[3]);
    } else if (k == "degree") {
      forbid(ln, carrier_degrees);
      expect_args(ln, 2);
      std::size_t ii = parse_index(ln, ln.tok[1], d, "degree");
      s_degree.mark(ln, ii);
      const std::string& t = ln.tok[2];
      bool neg = !t.empty() && t[0] == '-';
      std::string mag = neg ? t.substr(1) : t;
      if (mag.empty()) throw SpecError(ln.no, "malformed degree '" + t + "'");
      for (char c : mag)
        if (c < '0' || c > '9') throw SpecError(ln.no, "malformed degree '" + t + "'");
      long long v = std::stoll(mag);
      degrees[ii] = neg ? -v : v;
      if (zk == ZooKind::graded && (neg || static_cast<std::size_t>(v) > capv))
        throw SpecError(ln.no, "graded degree must lie in 0..cap");
    } else if (k == "action") {
      forbid(ln, carrier_yd);
      expect_args(ln, 4);
      std::size_t bb = parse_index(ln, ln.tok[1], bdim, "action");
      std::size_t mm = parse_index(ln, ln.tok[2], d, "action");
      std::size_t pp = parse_index(ln, ln.tok[3], d, "action");
      s_action.mark(ln, (bb * d + mm) * d + pp);
      action.at(pp, bb * d + mm) = parse_value(ln, ctx, ln.tok[4]);
    } else if (k == "coaction") {
      forbid(ln, carrier_yd);
      expect_args(ln, 4);
      std::size_t mm = parse_index(ln, ln.tok[1], d, "coaction");
      std::size_t bb = parse_index(ln, ln.tok[2], bdim, "coaction");
      std::size_t pp = parse_index(ln, ln.tok[3], d, "coaction");
      s_coaction.mark(ln, (mm * bdim + bb) * d + pp);
      coaction.at(bb * d + pp, mm) = parse_value(ln, ctx, ln.tok[4]);
    } else if (k == "rmat") {
      forbid(ln, carrier_rmat);
      expect_args(ln, 3);
      std::size_t ii = parse_index(ln, ln.tok[1], d, "rmat");
      std::size_t jj = parse_index(ln, ln.tok[2], d, "rmat");
      s_rmat.mark(ln, ii * d + jj);
      rvec[ii * d + jj] = parse_value(ln, ctx, ln.tok[3]);
    }
  }

  // --- assembly ---
  ZooObject z;
  z.kind = zk;
  if (name.set) z.name = name.value;
  if (base.set) z.base_ref = base.value;
  switch (zk) {
    case ZooKind::hopf: {
      FinDimHopf h{ctx, d, labels, mult, unit, comult, counit, antipode};
      z.hopf = std::move(h);
      break;
    }
    case ZooKind::diagonal: {
      DiagBraidedHopf h;
      h.object = DiagObject{ctx, q, degrees};
      h.labels = labels;
      h.mult = mult;
      h.unit = unit;
      h.comult = comult;
      h.counit = counit;
      h.antipode = antipode;
      z.diag = std::move(h);
      break;
    }
    case ZooKind::graded: {
      GradedBraidedHopf h;
      h.q = q;
      h.dims.assign(capv + 1, 0);
      h.degree.reserve(d);
      for (long long deg : degrees) {
        h.degree.push_back(static_cast<std::size_t>(deg));
        ++h.dims[static_cast<std::size_t>(deg)];
      }
      h.labels = labels;
      h.mult = mult;
      h.unit = unit;
      h.comult = comult;
      h.counit = counit;
      h.antipode = any_antipode ? antipode : Matrix(ctx, 0, 0);
      z.graded = std::move(h);
      break;
    }
    case ZooKind::yd: {
      YDModule obj;
      obj.base = base_hopf;
      obj.dim = d;
      obj.action = action;
      obj.coaction = coaction;
      obj.labels = labels;
      YDBraidedHopf h;
      h.object = std::move(obj);
      h.labels = labels;
      h.mult = mult;
      h.unit = unit;
      h.comult = comult;
      h.counit = counit;
      h.antipode = antipode;
      z.ydh = std::move(h);
      break;
    }
    case ZooKind::ydmodule: {
      YDModule m;
      m.base = base_hopf;
      m.dim = d;
      m.action = action;
      m.coaction = coaction;
      m.labels = labels;
      z.ydm = std::move(m);
      break;
    }
    case ZooKind::quasitriangular: {
      auto h = std::make_shared<FinDimHopf>();
      h->ctx = ctx;
      h->dim = d;
      h->labels = labels;
      h->mult = mult;
      h->unit = unit;
      h->comult = comult;
      h->counit = counit;
      h->antipode = antipode;
      z.qt = QuasitriangularData{std::move(h), rvec};
      break;
    }
  }
  return z;
}

inline ZooObject parse_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError(0, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str());
}

}  // namespace hopf
