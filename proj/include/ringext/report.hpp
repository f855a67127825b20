#pragma once

// Input-file parsing, analysis pipelines and deterministic report
// serialization for the CLI.  The machine-readable body is a versioned
// line-oriented document; the human rendering is derived from the same
// report data.  Nothing time-dependent is ever written into the body.

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ringext/bicoring.hpp"
#include "ringext/classify.hpp"
#include "ringext/endos.hpp"
#include "ringext/fixtures.hpp"

namespace ringext {

// --------------------------------------------------------------------------
// input format

struct ParsedInput {
  enum class Kind { kBuiltin, kGroup, kExplicit } kind = Kind::kBuiltin;
  std::string name;
  Extension ext;
  D2Hints hints;
};

namespace io_detail {

inline input_error at_line(int line, const std::string& msg) {
  return input_error("line " + std::to_string(line) + ": " + msg);
}

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

inline long long parse_int(const std::string& t, int line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size())
    throw at_line(line, "expected integer, got '" + t + "'");
  return v;
}

inline Scalar parse_scalar(const std::string& t, int line) {
  auto s = Scalar::parse(t);
  if (!s) throw at_line(line, "malformed scalar '" + t + "'");
  return *s;
}

}  // namespace io_detail

inline ParsedInput parse_extension_spec(const std::string& text) {
  using io_detail::at_line;
  using io_detail::parse_int;
  using io_detail::parse_scalar;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;

  std::string kind, name = "unnamed";
  int dim_a = -1, dim_b = -1, degree = -1;
  std::optional<Vec> unit_a, unit_b;
  std::vector<std::tuple<int, int, int, Scalar>> sc_a, sc_b;
  std::vector<Vec> iota_rows;
  std::vector<Perm> gens_g, gens_h;
  std::string fixture;
  bool header_seen = false;

  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto toks = io_detail::tokens_of(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    if (!header_seen) {
      if (key != "ringext" || toks.size() != 2 || toks[1] != "1")
        throw at_line(lineno, "expected header 'ringext 1'");
      header_seen = true;
      continue;
    }
    auto need = [&](size_t k) {
      if (toks.size() != k)
        throw at_line(lineno, "wrong number of fields for '" + key + "'");
    };
    if (key == "kind") {
      need(2);
      kind = toks[1];
    } else if (key == "name") {
      need(2);
      name = toks[1];
    } else if (key == "fixture") {
      need(2);
      fixture = toks[1];
    } else if (key == "degree") {
      need(2);
      degree = (int)parse_int(toks[1], lineno);
    } else if (key == "gen_g" || key == "gen_h") {
      Perm p;
      for (size_t i = 1; i < toks.size(); ++i)
        p.push_back((int)parse_int(toks[i], lineno));
      if (degree < 0) throw at_line(lineno, "degree must come before generators");
      if (!perm_valid(p, degree))
        throw at_line(lineno, "not a permutation of 0.." + std::to_string(degree - 1));
      (key == "gen_g" ? gens_g : gens_h).push_back(std::move(p));
    } else if (key == "dimA") {
      need(2);
      dim_a = (int)parse_int(toks[1], lineno);
    } else if (key == "dimB") {
      need(2);
      dim_b = (int)parse_int(toks[1], lineno);
    } else if (key == "unitA" || key == "unitB") {
      Vec u;
      for (size_t i = 1; i < toks.size(); ++i)
        u.push_back(parse_scalar(toks[i], lineno));
      (key == "unitA" ? unit_a : unit_b) = std::move(u);
    } else if (key == "scA" || key == "scB") {
      need(5);
      int i = (int)parse_int(toks[1], lineno), j = (int)parse_int(toks[2], lineno),
          k = (int)parse_int(toks[3], lineno);
      auto& dst = key == "scA" ? sc_a : sc_b;
      dst.emplace_back(i, j, k, parse_scalar(toks[4], lineno));
    } else if (key == "iota") {
      Vec row;
      for (size_t i = 1; i < toks.size(); ++i)
        row.push_back(parse_scalar(toks[i], lineno));
      iota_rows.push_back(std::move(row));
    } else {
      throw at_line(lineno, "unknown key '" + key + "'");
    }
  }
  if (!header_seen) throw input_error("empty input: expected 'ringext 1' header");

  ParsedInput out;
  out.name = name;
  if (kind == "builtin") {
    if (fixture.empty()) throw input_error("builtin input needs 'fixture E1..E6'");
    Fixture f = make_fixture(fixture);
    out.kind = ParsedInput::Kind::kBuiltin;
    out.name = f.name;
    out.ext = std::move(f.ext);
    out.hints = std::move(f.hints);
    return out;
  }
  if (kind == "group") {
    if (degree < 1) throw input_error("group input needs a positive degree");
    PermGroup g = closure(degree, gens_g);
    PermGroup h = closure(degree, gens_h);
    SubgroupExtension se = subgroup_extension(g, h);
    out.kind = ParsedInput::Kind::kGroup;
    out.ext = std::move(se.ext);
    out.hints = std::move(se.hints);
    return out;
  }
  if (kind == "explicit") {
    if (dim_a < 1 || dim_b < 1) throw input_error("explicit input needs dimA/dimB");
    if (!unit_a || (int)unit_a->size() != dim_a)
      throw input_error("unitA must have dimA entries");
    if (!unit_b || (int)unit_b->size() != dim_b)
      throw input_error("unitB must have dimB entries");
    std::vector<Scalar> sa((size_t)dim_a * dim_a * dim_a),
        sb((size_t)dim_b * dim_b * dim_b);
    for (auto& [i, j, k, v] : sc_a) {
      if (i < 0 || j < 0 || k < 0 || i >= dim_a || j >= dim_a || k >= dim_a)
        throw input_error("scA index out of range");
      sa[((size_t)i * dim_a + j) * dim_a + k] = v;
    }
    for (auto& [i, j, k, v] : sc_b) {
      if (i < 0 || j < 0 || k < 0 || i >= dim_b || j >= dim_b || k >= dim_b)
        throw input_error("scB index out of range");
      sb[((size_t)i * dim_b + j) * dim_b + k] = v;
    }
    if ((int)iota_rows.size() != dim_a)
      throw input_error("iota needs dimA rows");
    Mat iota(dim_a, dim_b);
    for (int r = 0; r < dim_a; ++r) {
      if ((int)iota_rows[r].size() != dim_b)
        throw input_error("iota row has wrong length");
      for (int c = 0; c < dim_b; ++c) iota.at(r, c) = iota_rows[r][c];
    }
    Algebra A(dim_a, std::move(sa), *unit_a);
    Algebra B(dim_b, std::move(sb), *unit_b);
    ValidationReport va = validate_algebra(A);
    if (!va.ok()) {
      const auto& iss = va.issues[0];
      throw input_error("algebra A invalid at triple (" + std::to_string(iss.i) +
                        "," + std::to_string(iss.j) + "," + std::to_string(iss.k) +
                        ")");
    }
    ValidationReport vb = validate_algebra(B);
    if (!vb.ok()) {
      const auto& iss = vb.issues[0];
      throw input_error("algebra B invalid at triple (" + std::to_string(iss.i) +
                        "," + std::to_string(iss.j) + "," + std::to_string(iss.k) +
                        ")");
    }
    out.kind = ParsedInput::Kind::kExplicit;
    out.ext = make_extension(B, A, make_morphism(B, A, std::move(iota)));
    return out;
  }
  throw input_error("unknown kind '" + kind + "' (builtin|group|explicit)");
}

// --------------------------------------------------------------------------
// analysis report

struct AnalyzeReport {
  std::string input_name;
  int dim_a = 0, dim_b = 0, dim_r = 0, dim_q = 0, dim_t = 0, dim_s = 0, dim_e = 0;
  PropertyReport props;
  bool balanced = false;
  bool gamma_bijective = false;
  // present when right D2:
  std::optional<CheckRecord> coring_checks;  // bialgebroid + coring + coaction
  std::optional<CheckRecord> galois_checks;
  std::optional<CoinvariantsResult> coinv;
  std::optional<IntegralsResult> ints;
  std::vector<std::pair<std::string, bool>> witness_recheck;  // --check-witness
};

inline AnalyzeReport analyze(const ParsedInput& in) {
  AnalyzeReport rep;
  rep.input_name = in.name;
  const Extension& ext = in.ext;
  rep.dim_a = ext.dimA();
  rep.dim_b = ext.dimB();
  rep.dim_r = ext.R.dim();
  TensorSquare ts = build_tensor_square(ext);
  rep.dim_q = ts.dim();
  rep.dim_t = ts.Tspace.dim();
  Subspace s_space = s_subspace(ext);
  rep.dim_s = s_space.dim();
  rep.dim_e = e_subspace(ext).dim();
  rep.props = full_report(ext, in.hints);
  rep.balanced = balanced_check(ext, compute_E(ext));
  TRing tr = t_ring(ts);
  rep.gamma_bijective = gamma_map(ts, tr).bijective;
  if (rep.props.d2.right) {
    TBialgebroid bia = build_t_bialgebroid(ext, ts, tr, *rep.props.d2.right);
    Coring c = build_coring(ext, ts, tr, bia);
    GaloisRecord g = galois_check(ext, ts, c);
    CheckRecord all = bia.checks;
    for (auto& item : c.checks.items) all.items.push_back(item);
    CheckRecord coa = coaction_checks(ext, ts, tr, bia, c);
    for (auto& item : coa.items) all.items.push_back(item);
    rep.coring_checks = std::move(all);
    rep.galois_checks = g.checks;
    rep.coinv = coinvariants(ext, tr, c);
    if (rep.props.frob)
      rep.ints = integrals(ext, ts, tr, s_space, *rep.props.frob);
  }
  return rep;
}

// --------------------------------------------------------------------------
// serialization

namespace io_detail {

inline void emit_vec(std::ostringstream& os, const std::string& tag, const Vec& v) {
  os << tag;
  for (const Scalar& x : v) os << ' ' << x.str_pq();
  os << '\n';
}

inline void emit_mat(std::ostringstream& os, const std::string& head, const Mat& m) {
  os << head << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (int r = 0; r < m.rows(); ++r) emit_vec(os, "row", m.row(r));
}

}  // namespace io_detail

inline std::string yn(bool b) { return b ? "yes" : "no"; }

inline std::string serialize_machine(const AnalyzeReport& rep) {
  std::ostringstream os;
  os << "ringext-report 1\n";
  os << "command analyze\n";
  os << "input " << rep.input_name << '\n';
  os << "dim-a " << rep.dim_a << "\ndim-b " << rep.dim_b << "\ndim-r "
     << rep.dim_r << "\ndim-q " << rep.dim_q << "\ndim-t " << rep.dim_t
     << "\ndim-s " << rep.dim_s << "\ndim-e " << rep.dim_e << '\n';
  const PropertyReport& p = rep.props;
  os << "property split " << tri_str(p.split) << '\n';
  if (p.split_p) io_detail::emit_mat(os, "witness-matrix split", *p.split_p);
  os << "property separable " << tri_str(p.separable) << '\n';
  if (p.sep_e) io_detail::emit_vec(os, "witness-vector separable", *p.sep_e);
  os << "property hseparable " << tri_str(p.hseparable) << '\n';
  if (p.hsep) {
    os << "witness-hsep " << p.hsep->pairs.size() << '\n';
    for (const auto& [e, r] : p.hsep->pairs) {
      io_detail::emit_vec(os, "pair-e", e);
      io_detail::emit_vec(os, "pair-r", r);
    }
  }
  os << "property centrally-projective " << tri_str(p.centrally_projective) << '\n';
  if (p.cp) {
    os << "witness-cp " << p.cp->terms.size() << '\n';
    for (const auto& [w, v] : p.cp->terms) {
      io_detail::emit_vec(os, "term-r", w);
      io_detail::emit_mat(os, "term-v", v);
    }
  }
  auto emit_qb = [&os](const char* tag, const D2Side& side) {
    os << tag << ' ' << side.terms.size() << '\n';
    for (const auto& [t, s] : side.terms) {
      io_detail::emit_vec(os, "term-t", t);
      io_detail::emit_mat(os, "term-s", s);
    }
  };
  os << "property d2-left " << tri_str(p.d2_left) << '\n';
  if (p.d2.left) emit_qb("quasibase-left", *p.d2.left);
  os << "property d2-right " << tri_str(p.d2_right) << '\n';
  if (p.d2.right) emit_qb("quasibase-right", *p.d2.right);
  os << "property frobenius " << tri_str(p.frobenius) << '\n';
  if (p.frob) {
    io_detail::emit_mat(os, "witness-matrix frobenius-e", p.frob->E);
    os << "frobenius-dual-bases " << p.frob->xs.size() << '\n';
    for (size_t i = 0; i < p.frob->xs.size(); ++i) {
      io_detail::emit_vec(os, "dual-x", p.frob->xs[i]);
      io_detail::emit_vec(os, "dual-y", p.frob->ys[i]);
    }
  }
  os << "balanced " << yn(rep.balanced) << '\n';
  os << "gamma-bijective " << yn(rep.gamma_bijective) << '\n';
  for (const auto& imp : p.implications)
    os << "implication " << imp.name << " premise " << yn(imp.premise)
       << " conclusion " << yn(imp.conclusion) << " consistent "
       << yn(imp.consistent()) << '\n';
  if (p.split_d2_dual)
    os << "split-d2-dual-basis terms " << p.split_d2_dual->xs.size()
       << " verified " << yn(p.split_d2_dual->verified) << '\n';
  if (p.split_p && p.sep_e && p.d2.left && p.d2.right)
    os << "note biseparable-d2-extensions-are-qf\n";
  if (rep.coring_checks) {
    os << "coring-verification\n";
    for (const auto& [item, ok] : rep.coring_checks->items)
      os << "item " << item << ' ' << (ok ? "pass" : "fail") << '\n';
    for (const auto& [item, ok] : rep.galois_checks->items)
      os << "item " << item << ' ' << (ok ? "pass" : "fail") << '\n';
    os << "coinvariants equals-iota-b " << yn(rep.coinv->equals_iota_b)
       << " excess " << rep.coinv->excess_dim << '\n';
  } else {
    os << "coring-verification not-d2\n";
  }
  if (rep.ints) {
    os << "integrals t0-in-t " << yn(rep.ints->t0_in_t) << " law "
       << yn(rep.ints->integral_law) << " z-invertible "
       << yn(rep.ints->z_invertible) << " z-inverse-central "
       << yn(rep.ints->z_inverse_central) << " k "
       << (rep.ints->k ? rep.ints->k->str_pq() : std::string("absent"))
       << " e-integral " << yn(rep.ints->e_integral) << '\n';
  }
  for (const auto& [what, ok] : rep.witness_recheck)
    os << "witness-check " << what << ' ' << (ok ? "pass" : "fail") << '\n';
  os << "end-report\n";
  return os.str();
}

inline std::string render_human(const AnalyzeReport& rep) {
  std::ostringstream os;
  os << "extension " << rep.input_name << "\n";
  os << "  dims: A=" << rep.dim_a << " B=" << rep.dim_b << " R=" << rep.dim_r
     << " A(x)BA=" << rep.dim_q << " T=" << rep.dim_t << " S=" << rep.dim_s
     << " End(A_B)=" << rep.dim_e << "\n";
  const PropertyReport& p = rep.props;
  os << "  split:                " << tri_str(p.split) << "\n";
  os << "  separable:            " << tri_str(p.separable) << "\n";
  os << "  H-separable:          " << tri_str(p.hseparable) << "\n";
  os << "  centrally projective: " << tri_str(p.centrally_projective) << "\n";
  os << "  depth two:            left " << tri_str(p.d2_left) << ", right "
     << tri_str(p.d2_right) << "\n";
  os << "  Frobenius:            " << tri_str(p.frobenius) << "\n";
  os << "  balanced:             " << yn(rep.balanced) << "\n";
  os << "  gamma bijective:      " << yn(rep.gamma_bijective) << "\n";
  for (const auto& imp : p.implications)
    os << "  implication " << imp.name << ": "
       << (imp.consistent() ? "consistent" : "VIOLATED") << "\n";
  if (rep.coring_checks) {
    bool all = rep.coring_checks->all_pass() && rep.galois_checks->all_pass();
    os << "  coring verification:  " << (all ? "all axioms pass" : "FAILURES")
       << "\n";
    for (const auto& [item, ok] : rep.coring_checks->items)
      if (!ok) os << "    FAIL " << item << "\n";
    for (const auto& [item, ok] : rep.galois_checks->items)
      if (!ok) os << "    FAIL " << item << "\n";
    os << "  coinvariants = iota(B): " << yn(rep.coinv->equals_iota_b) << "\n";
  } else {
    os << "  coring verification:  skipped (not right D2)\n";
  }
  if (rep.ints)
    os << "  integrals: t0 law " << yn(rep.ints->integral_law) << ", k "
       << (rep.ints->k ? rep.ints->k->str_pq() : std::string("absent")) << "\n";
  for (const auto& [what, ok] : rep.witness_recheck)
    os << "  witness recheck " << what << ": " << (ok ? "pass" : "FAIL") << "\n";
  return os.str();
}

// --------------------------------------------------------------------------
// witness re-verification from the serialized document (--check-witness)

namespace io_detail {

struct LineReader {
  std::vector<std::string> lines;
  size_t pos = 0;
  explicit LineReader(const std::string& text) {
    std::istringstream is(text);
    std::string l;
    while (std::getline(is, l)) lines.push_back(l);
  }
  bool done() const { return pos >= lines.size(); }
  const std::string& peek() const { return lines[pos]; }
  std::string next() { return lines[pos++]; }
};

inline Vec parse_row(const std::string& line, size_t skip_tokens) {
  auto toks = tokens_of(line);
  Vec v;
  for (size_t i = skip_tokens; i < toks.size(); ++i) {
    auto s = Scalar::parse(toks[i]);
    if (!s) throw input_error("bad scalar in report: " + toks[i]);
    v.push_back(*s);
  }
  return v;
}

inline Mat parse_mat(LineReader& r, const std::string& head_line) {
  auto toks = tokens_of(head_line);
  int rows = (int)std::stoll(toks[toks.size() - 2]);
  int cols = (int)std::stoll(toks[toks.size() - 1]);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    Vec row = parse_row(r.next(), 1);
    if ((int)row.size() != cols) throw input_error("bad matrix row in report");
    m.set_row(i, row);
  }
  return m;
}

}  // namespace io_detail

// Parses the witnesses back out of a serialized machine report and verifies
// each against its defining identity on the given extension.
inline std::vector<std::pair<std::string, bool>> recheck_witnesses(
    const std::string& machine_body, const Extension& ext) {
  using namespace io_detail;
  TensorSquare ts = build_tensor_square(ext);
  Subspace s_space = s_subspace(ext);
  std::vector<std::pair<std::string, bool>> out;
  LineReader r(machine_body);
  while (!r.done()) {
    std::string line = r.next();
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] == "witness-matrix" && toks[1] == "split") {
      Mat p = parse_mat(r, line);
      bool ok = true;
      for (int b = 0; b < ext.dimB(); ++b)
        if (p.apply(ext.iota_col(b)) != ext.B.basis(b)) ok = false;
      for (int b = 0; b < ext.dimB() && ok; ++b)
        for (int i = 0; i < ext.dimA(); ++i) {
          Vec lhs = p.apply(ext.A.mul(ext.iota_col(b), ext.A.basis(i)));
          Vec rhs = ext.B.mul(ext.B.basis(b), p.apply(ext.A.basis(i)));
          if (lhs != rhs) ok = false;
          Vec lhs2 = p.apply(ext.A.mul(ext.A.basis(i), ext.iota_col(b)));
          Vec rhs2 = ext.B.mul(p.apply(ext.A.basis(i)), ext.B.basis(b));
          if (lhs2 != rhs2) ok = false;
        }
      out.emplace_back("split", ok);
    } else if (toks[0] == "witness-vector" && toks[1] == "separable") {
      Vec e = parse_row(line, 2);
      bool ok = ts.mu_of(e) == ext.A.unit();
      for (int i = 0; i < ext.dimA() && ok; ++i)
        if (ts.q_left(ext.A.basis(i), e) != ts.q_right(ext.A.basis(i), e))
          ok = false;
      out.emplace_back("separable", ok);
    } else if (toks[0] == "quasibase-left" || toks[0] == "quasibase-right") {
      bool left = toks[0] == "quasibase-left";
      int terms = (int)std::stoll(toks[1]);
      D2Side side;
      for (int k = 0; k < terms; ++k) {
        Vec t = parse_row(r.next(), 1);
        Mat s = parse_mat(r, r.next());
        side.terms.emplace_back(t, s);
      }
      bool ok = detail::verify_quasibase(ts, left, side.terms);
      for (const auto& [t, s] : side.terms) {
        if (!ts.Tspace.contains(t)) ok = false;
        if (!s_space.contains(s.vectorized())) ok = false;
      }
      out.emplace_back(toks[0], ok);
    } else if (toks[0] == "witness-matrix" && toks[1] == "frobenius-e") {
      Mat E = parse_mat(r, line);
      // dual bases follow
      std::string head = r.next();
      auto htoks = tokens_of(head);
      int terms = (int)std::stoll(htoks[1]);
      std::vector<Vec> xs, ys;
      for (int i = 0; i < terms; ++i) {
        xs.push_back(parse_row(r.next(), 1));
        ys.push_back(parse_row(r.next(), 1));
      }
      bool ok = true;
      for (int j = 0; j < ext.dimA() && ok; ++j) {
        Vec acc1(ext.dimA()), acc2(ext.dimA());
        for (int i = 0; i < terms; ++i) {
          vec_axpy(acc1, Scalar(1),
                   ext.A.mul(xs[i], ext.iota_of(E.apply(
                                        ext.A.mul(ys[i], ext.A.basis(j))))));
          vec_axpy(acc2, Scalar(1),
                   ext.A.mul(ext.iota_of(E.apply(ext.A.mul(ext.A.basis(j), xs[i]))),
                             ys[i]));
        }
        if (acc1 != ext.A.basis(j) || acc2 != ext.A.basis(j)) ok = false;
      }
      out.emplace_back("frobenius", ok);
    } else if (toks[0] == "witness-hsep") {
      int terms = (int)std::stoll(toks[1]);
      std::vector<std::pair<Vec, Vec>> pairs;
      for (int k = 0; k < terms; ++k) {
        Vec e = parse_row(r.next(), 1);
        Vec rr = parse_row(r.next(), 1);
        pairs.emplace_back(e, rr);
      }
      bool ok = true;
      for (int i = 0; i < ext.dimA() && ok; ++i) {
        Vec acc(ts.dim());
        for (auto& [e, rv] : pairs)
          vec_axpy(acc, Scalar(1),
                   ts.q_right(ext.A.mul(ext.A.basis(i), rv), e));
        if (acc != ts.project(TensorSquare::kron(ext.A.basis(i), ext.A.unit())))
          ok = false;
      }
      out.emplace_back("hseparable", ok);
    } else if (toks[0] == "witness-cp") {
      int terms = (int)std::stoll(toks[1]);
      std::vector<std::pair<Vec, Mat>> tlist;
      for (int k = 0; k < terms; ++k) {
        Vec w = parse_row(r.next(), 1);
        Mat v = parse_mat(r, r.next());
        tlist.emplace_back(w, v);
      }
      bool ok = true;
      for (int i = 0; i < ext.dimA(); ++i) {
        Vec acc(ext.dimA());
        for (auto& [w, v] : tlist)
          vec_axpy(acc, Scalar(1),
                   ext.A.mul(ext.iota_of(v.apply(ext.A.basis(i))), w));
        if (acc != ext.A.basis(i)) ok = false;
      }
      out.emplace_back("centrally-projective", ok);
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// group sweep

struct SweepRow {
  std::string group;
  int group_order = 0, subgroup_order = 0, subgroup_index = 0;
  std::string subgroup_elems;
  bool normal = false, d2_left = false, d2_right = false, hsep = false;
  bool hopf_normal = false, bplus = false;
  bool agree_d2_normal() const {
    return (d2_left && d2_right) == normal && d2_left == d2_right;
  }
  bool agree_hsep_proper() const {
    // H-separable iff H = G at group-algebra scale
    return hsep == (subgroup_order == group_order);
  }
  bool agree_hopf() const { return hopf_normal == normal && bplus == normal; }
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool all_agree = true;
};

inline SweepResult sweep_groups(int max_order) {
  if (max_order < 1 || max_order > 12)
    throw input_error("max-order must be between 1 and 12");
  SweepResult res;
  for (const CatalogGroup& cg : catalog_groups()) {
    PermGroup g = closure(cg.degree, cg.gens);
    if (g.order() > max_order) continue;
    HopfData hopf = hopf_on_group_algebra(g);
    std::vector<PermGroup> subs = all_subgroups(g);
    int index = 0;
    for (const PermGroup& h : subs) {
      SubgroupExtension se = subgroup_extension(g, h);
      TensorSquare ts = build_tensor_square(se.ext);
      Subspace s_space = s_subspace(se.ext);
      D2Result d2 = check_d2(ts, s_space, se.hints);
      bool hsep = check_hseparable(ts).has_value();
      SweepRow row;
      row.group = cg.name;
      row.group_order = g.order();
      row.subgroup_order = h.order();
      row.subgroup_index = index++;
      {
        std::ostringstream os;
        for (size_t e = 0; e < h.elements.size(); ++e) {
          if (e) os << ';';
          for (size_t i = 0; i < h.elements[e].size(); ++i) {
            if (i) os << '.';
            os << h.elements[e][i];
          }
        }
        row.subgroup_elems = os.str();
      }
      row.normal = se.normal;
      row.d2_left = d2.left.has_value();
      row.d2_right = d2.right.has_value();
      row.hsep = hsep;
      row.hopf_normal = hopf_normal_check(hopf, se.ext.iota);
      row.bplus = bplus_criterion(hopf, se.ext.iota);
      if (!row.agree_d2_normal() || !row.agree_hsep_proper() || !row.agree_hopf())
        res.all_agree = false;
      res.rows.push_back(std::move(row));
    }
  }
  return res;
}

inline std::string serialize_sweep_machine(const SweepResult& res, int max_order) {
  std::ostringstream os;
  os << "ringext-report 1\ncommand sweep-groups\nmax-order " << max_order << '\n';
  for (const SweepRow& r : res.rows) {
    os << "pair group " << r.group << " order " << r.group_order
       << " subgroup-index " << r.subgroup_index << " subgroup-order "
       << r.subgroup_order << " normal " << yn(r.normal) << " d2-left "
       << yn(r.d2_left) << " d2-right " << yn(r.d2_right) << " hsep "
       << yn(r.hsep) << " hopf-normal " << yn(r.hopf_normal) << " bplus "
       << yn(r.bplus) << " agree-d2-normal " << yn(r.agree_d2_normal())
       << " agree-hsep-proper " << yn(r.agree_hsep_proper()) << " agree-hopf "
       << yn(r.agree_hopf()) << '\n';
    if (!r.agree_d2_normal() || !r.agree_hsep_proper() || !r.agree_hopf())
      os << "disagreement group " << r.group << " subgroup " << r.subgroup_elems
         << '\n';
  }
  os << "summary pairs " << res.rows.size() << " all-agree "
     << yn(res.all_agree) << '\n';
  os << "end-report\n";
  return os.str();
}

inline std::string render_sweep_human(const SweepResult& res, int max_order) {
  std::ostringstream os;
  os << "group sweep up to order " << max_order << "\n";
  os << "  group      |G| idx |H| normal d2    hsep hopf\n";
  for (const SweepRow& r : res.rows) {
    os << "  " << r.group;
    for (size_t p = r.group.size(); p < 10; ++p) os << ' ';
    os << ' ' << r.group_order << "   " << r.subgroup_index << "   "
       << r.subgroup_order << "   " << (r.normal ? "yes " : "no  ")
       << (r.d2_left && r.d2_right ? "yes  " : "no   ")
       << (r.hsep ? "yes " : "no  ") << (r.hopf_normal ? "yes" : "no");
    if (!r.agree_d2_normal() || !r.agree_hsep_proper() || !r.agree_hopf())
      os << "  DISAGREEMENT subgroup=" << r.subgroup_elems;
    os << "\n";
  }
  os << "  pairs: " << res.rows.size() << ", all agreements hold: "
     << yn(res.all_agree) << "\n";
  return os.str();
}

// --------------------------------------------------------------------------
// coring-only verification (verify-coring command)

struct CoringVerifyReport {
  std::string input_name;
  bool is_d2 = false;
  CheckRecord items;
  bool coinv_equals = false;
  int coinv_excess = 0;
  bool balanced = false;
};

inline CoringVerifyReport verify_coring(const ParsedInput& in) {
  CoringVerifyReport rep;
  rep.input_name = in.name;
  TensorSquare ts = build_tensor_square(in.ext);
  Subspace s_space = s_subspace(in.ext);
  D2Result d2 = check_d2(ts, s_space, in.hints);
  if (!d2.right || !d2.left) return rep;
  rep.is_d2 = true;
  TRing tr = t_ring(ts);
  TBialgebroid bia = build_t_bialgebroid(in.ext, ts, tr, *d2.right);
  Coring c = build_coring(in.ext, ts, tr, bia);
  rep.items = bia.checks;
  for (auto& item : c.checks.items) rep.items.items.push_back(item);
  GaloisRecord g = galois_check(in.ext, ts, c);
  for (auto& item : g.checks.items) rep.items.items.push_back(item);
  CheckRecord coa = coaction_checks(in.ext, ts, tr, bia, c);
  for (auto& item : coa.items) rep.items.items.push_back(item);
  CoinvariantsResult ci = coinvariants(in.ext, tr, c);
  rep.coinv_equals = ci.equals_iota_b;
  rep.coinv_excess = ci.excess_dim;
  rep.balanced = balanced_check(in.ext, compute_E(in.ext));
  return rep;
}

inline std::string serialize_coring_machine(const CoringVerifyReport& rep) {
  std::ostringstream os;
  os << "ringext-report 1\ncommand verify-coring\ninput " << rep.input_name
     << '\n';
  if (!rep.is_d2) {
    os << "outcome not-d2\nend-report\n";
    return os.str();
  }
  os << "outcome d2\n";
  for (const auto& [item, ok] : rep.items.items)
    os << "item " << item << ' ' << (ok ? "pass" : "fail") << '\n';
  os << "balanced " << yn(rep.balanced) << '\n';
  os << "coinvariants equals-iota-b " << yn(rep.coinv_equals) << " excess "
     << rep.coinv_excess << '\n';
  os << "end-report\n";
  return os.str();
}

inline std::string render_coring_human(const CoringVerifyReport& rep) {
  std::ostringstream os;
  os << "coring verification for " << rep.input_name << "\n";
  if (!rep.is_d2) {
    os << "  not depth two: nothing to verify\n";
    return os.str();
  }
  for (const auto& [item, ok] : rep.items.items)
    os << "  " << (ok ? "pass " : "FAIL ") << item << "\n";
  os << "  balanced: " << yn(rep.balanced) << "\n";
  os << "  coinvariants = iota(B): " << yn(rep.coinv_equals) << " (excess "
     << rep.coinv_excess << ")\n";
  return os.str();
}

inline std::string catalog_text() {
  std::ostringstream os;
  os << "builtin fixtures:\n";
  for (const std::string& name : fixture_names()) {
    Fixture f = make_fixture(name);
    os << "  " << name << ": " << f.description << " (dim A = " << f.ext.dimA()
       << ", dim B = " << f.ext.dimB() << ")\n";
  }
  return os.str();
}

}  // namespace ringext
