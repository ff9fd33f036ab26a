// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
#include "cy4/cy4.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <new>
#include <optional>
#include <sstream>

#include "cy4/io.hpp"
#include "cy4/lie.hpp"
#include "cy4/quiver.hpp"
#include "cy4/rep.hpp"
#include "cy4/series.hpp"
#include "cy4/suites.hpp"
#include "cy4/toy.hpp"

struct cy4_quiver {
  cy4::QuiverWithPotential q;
  mutable std::optional<cy4::CY4Quiver> completed;  // lazily built; handles are not shared across threads

  const cy4::CY4Quiver& complete() const {
    if (!completed) completed = cy4::cy4_complete(q.quiver, q.potential);
    return *completed;
  }
};

namespace {

using json = nlohmann::json;
using namespace cy4;

thread_local std::string g_last_error;

// Library failure carrying an already-rendered report: the status is nonzero
// but the output is still delivered.
struct Outcome {
  std::string text;
  cy4_status status = CY4_OK;
};

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

cy4_status to_status(ErrorKind k) { return static_cast<cy4_status>(exit_code(k)); }

template <class F>
cy4_status guard(F&& f) {
  g_last_error.clear();
  try {
    return f();
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CY4_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CY4_INPUT_ERROR;
  }
}

// Runs a producer that returns an Outcome and hands its text to *out.
template <class F>
cy4_status produce(char** out, F&& f) {
  if (!out) {
    g_last_error = "null output pointer";
    return CY4_INPUT_ERROR;
  }
  *out = nullptr;
  return guard([&]() -> cy4_status {
    Outcome o = f();
    *out = dup(o.text);
    if (o.status != CY4_OK && g_last_error.empty()) g_last_error = "check failed";
    return o.status;
  });
}

std::string need_str(const char* s, const char* what) {
  if (!s) fail(ErrorKind::input, std::string(what) + " is required");
  return s;
}

const cy4_quiver& need_q(const cy4_quiver* q) {
  if (!q) fail(ErrorKind::input, "null quiver handle");
  return *q;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json series_json(const LaurentSeries& s) {
  json terms = json::array();
  for (const auto& [e, c] : s.z_terms())
    if (!c.is_zero()) terms.push_back({{"z", e}, {"coeff", c.str()}});
  json j{{"regime", to_string(s.regime())}, {"terms", terms}};
  if (!s.exact()) j["known_below_z_exponent"] = s.regime() == Regime::local ? s.prec() : -s.prec();
  return j;
}

json lie_json(const LieExpr& e) {
  json terms = json::array();
  for (const auto& [w, c] : e.terms()) terms.push_back({{"bracket", lyndon_bracket_string(w)}, {"coeff", to_string(c)}});
  return terms;
}

json qseries_json(const QSeries& s) {
  json j = json::object();
  for (int n = 0; n <= s.order; ++n) j[std::to_string(n)] = lie_json(s.at(n));
  return j;
}

Outcome dga_report(const CY4Quiver& c, cy4_format fmt) {
  const CyclicElement mb = master_bracket(c.quiver, c.potential);
  const DgaReport r = verify_dga(c);
  Outcome o;
  o.status = mb.is_zero() && r.ok ? CY4_OK : CY4_MATH_FAIL;
  if (fmt == CY4_FORMAT_JSON) {
    json j{{"master_equation", mb.is_zero()}, {"master_bracket", format(mb)}, {"d_squared_zero", r.ok}};
    if (!r.ok) j["witness"] = {{"generator", r.generator}, {"reason", r.reason}, {"value", format(r.value)}};
    o.text = dump(j);
  } else {
    std::ostringstream os;
    os << "master equation: " << (mb.is_zero() ? "ok" : "FAIL {H,H} = " + format(mb)) << "\n";
    os << "d^2 = 0: " << (r.ok ? "ok" : "FAIL at " + r.generator + " (" + r.reason + "): " + format(r.value)) << "\n";
    o.text = os.str();
  }
  return o;
}

}  // namespace

extern "C" {

const char* cy4_version(void) { return "1.0.0"; }
const char* cy4_last_error(void) { return g_last_error.c_str(); }
void cy4_string_free(char* s) { std::free(s); }

// ------------------------------------------------------------------ quivers

cy4_status cy4_quiver_parse(const char* json_text, cy4_quiver** out) {
  if (!out) return CY4_INPUT_ERROR;
  *out = nullptr;
  return guard([&] {
    auto h = std::make_unique<cy4_quiver>();
    h->q = parse_quiver_json(need_str(json_text, "quiver text"));
    *out = h.release();
    return CY4_OK;
  });
}

cy4_status cy4_quiver_load(const char* path, cy4_quiver** out) {
  if (!out) return CY4_INPUT_ERROR;
  *out = nullptr;
  return guard([&] {
    const std::string p = need_str(path, "quiver path");
    auto h = std::make_unique<cy4_quiver>();
    try {
      h->q = parse_quiver_json(read_text_file(p));
    } catch (const Error& e) {
      throw Error(e.kind(), p + ": " + e.what());
    }
    *out = h.release();
    return CY4_OK;
  });
}

cy4_status cy4_quiver_builtin(const char* name, cy4_quiver** out) {
  if (!out) return CY4_INPUT_ERROR;
  *out = nullptr;
  return guard([&] {
    const std::string n = need_str(name, "fixture name");
    auto h = std::make_unique<cy4_quiver>();
    if (n == "example") {
      h->q = example_quiver();
    } else if (n == "c4") {
      h->q = c4_quiver();
    } else if (n == "point") {
      h->q = point_quiver();
    } else {
      fail(ErrorKind::input, "unknown fixture \"" + n + "\"");
    }
    *out = h.release();
    return CY4_OK;
  });
}

void cy4_quiver_free(cy4_quiver* q) { delete q; }

cy4_status cy4_quiver_emit(const cy4_quiver* q, char** out) {
  return produce(out, [&] { return Outcome{emit_quiver_json(need_q(q).q)}; });
}

cy4_status cy4_quiver_edge_count(const cy4_quiver* q, int* edges) {
  return guard([&] {
    if (!edges) fail(ErrorKind::input, "null output pointer");
    *edges = static_cast<int>(need_q(q).q.quiver.edges().size());
    return CY4_OK;
  });
}

cy4_status cy4_quiver_check_master(const cy4_quiver* q, cy4_format fmt, char** out) {
  return produce(out, [&] {
    const cy4_quiver& h = need_q(q);
    // Report the obstruction instead of failing inside the completion.
    CY4Quiver c = cy4_complete_unchecked(h.q.quiver, h.q.potential);
    return dga_report(c, fmt);
  });
}

cy4_status cy4_quiver_complete(const cy4_quiver* q, char** out) {
  return produce(out, [&] {
    const cy4_quiver& h = need_q(q);
    return Outcome{emit_completed_json(h.q, h.complete())};
  });
}

cy4_status cy4_quiver_diff(const cy4_quiver* q, const char* generator, cy4_format fmt, char** out) {
  return produce(out, [&] {
    const std::string g = need_str(generator, "generator");
    const AlgebraElement& d = differential(need_q(q).complete(), g);
    if (fmt == CY4_FORMAT_JSON) return Outcome{dump({{"generator", g}, {"d", format(d)}})};
    return Outcome{"d(" + g + ") = " + format(d) + "\n"};
  });
}

cy4_status cy4_quiver_graft(const cy4_quiver* q, const char* frame, int r, int l, cy4_format fmt, char** out) {
  return produce(out, [&] {
    const std::string f = need_str(frame, "frame");
    Frame fr;
    if (f == "js") {
      fr = {Frame::Kind::js, 2, 0};
    } else if (f == "flag") {
      fr = {Frame::Kind::flag, r, 0};
    } else if (f == "ms") {
      fr = {Frame::Kind::ms, r, l};
    } else {
      fail(ErrorKind::input, "unknown frame \"" + f + "\" (js, flag, ms)");
    }
    const CY4Quiver g = graft(need_q(q).complete(), fr);
    Outcome check = dga_report(g, fmt);
    if (fmt == CY4_FORMAT_JSON) {
      json j = json::parse(emit_completed_json(QuiverWithPotential{g.base, g.potential}, g));
      j["checks"] = json::parse(check.text);
      return Outcome{dump(j), check.status};
    }
    std::ostringstream os;
    os << "generators:\n";
    for (const Edge& e : g.quiver.edges())
      os << "  " << e.name << ": " << e.tail << " -> " << e.head << " degree " << e.degree << "\n";
    os << "potential: " << format(g.potential) << "\n" << check.text;
    return Outcome{os.str(), check.status};
  });
}

// ---------------------------------------------------------- representations

cy4_status cy4_rep_ext(const cy4_quiver* q, const char* rep_path, cy4_format fmt, char** out) {
  return produce(out, [&] {
    const CY4Quiver& c = need_q(q).complete();
    const std::string p = need_str(rep_path, "representation path");
    Representation r;
    try {
      r = parse_rep_json(read_text_file(p), c);
    } catch (const Error& e) {
      throw Error(e.kind(), p + ": " + e.what());
    }
    const ExtComplex x = ext_complex(c, r);
    const auto ext = ext_dims(x);
    const bool d2 = delta_squared_zero(x);
    long long ec = 0;
    for (size_t i = 0; i < 5; ++i) ec += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(x.dim[i]);
    const long long chi = euler_form(c, r.dims, r.dims);
    Outcome o;
    o.status = d2 && ec == chi ? CY4_OK : CY4_MATH_FAIL;
    if (fmt == CY4_FORMAT_JSON) {
      o.text = dump({{"complex_dims", x.dim}, {"ext_dims", ext}, {"delta_squared_zero", d2}, {"euler_characteristic", ec},
                     {"chi", chi}});
    } else {
      std::ostringstream os;
      os << "C^i dims:";
      for (size_t d : x.dim) os << " " << d;
      os << "\nExt^i dims:";
      for (size_t d : ext) os << " " << d;
      os << "\ndelta^2 = 0: " << (d2 ? "yes" : "NO") << "\neuler characteristic: " << ec << "\nchi(d,d): " << chi
         << "\n";
      o.text = os.str();
    }
    return o;
  });
}

cy4_status cy4_rep_fixed_points(int n, const char* emit, int max_n, cy4_format fmt, char** out) {
  return produce(out, [&] {
    const std::string mode = need_str(emit, "emit mode");
    if (mode != "counts" && mode != "reps") fail(ErrorKind::input, "emit must be counts or reps");
    if (n < 1) fail(ErrorKind::input, "n must be positive");
    if (mode == "counts") {
      json counts = json::object();
      std::ostringstream os;
      for (int k = 1; k <= n; ++k) {
        const size_t c = monomial_fixed_points(k, max_n).size();
        counts[std::to_string(k)] = c;
        os << "n=" << k << ": " << c << "\n";
      }
      return Outcome{fmt == CY4_FORMAT_JSON ? dump(counts) : os.str()};
    }
    json list = json::array();
    std::ostringstream os;
    for (const Staircase& s : monomial_fixed_points(n, max_n)) {
      json cells = json::array();
      os << "staircase";
      for (const Cell& c : s) {
        cells.push_back(c);
        os << " (" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << ")";
      }
      os << "\n";
      list.push_back({{"cells", cells}, {"representation", json::parse(emit_rep_json(fixed_point_representation(s)))}});
    }
    return Outcome{fmt == CY4_FORMAT_JSON ? dump(list) : os.str()};
  });
}

cy4_status cy4_euler(const cy4_quiver* q, const char* d, const char* e, long long* chi) {
  return guard([&] {
    if (!chi) fail(ErrorKind::input, "null output pointer");
    const CY4Quiver& c = need_q(q).complete();
    *chi = euler_form(c, parse_dim_list(need_str(d, "d"), c), parse_dim_list(need_str(e, "e"), c));
    return CY4_OK;
  });
}

// -------------------------------------------------------------------- signs

cy4_status cy4_signs_verify(const char* suite, int max_rank, uint64_t seed, cy4_format fmt, char** out) {
  return produce(out, [&] {
    SuiteOptions opt;
    opt.max_rank = max_rank;
    opt.seed = seed;
    const RunReport r = run_sign_checks(need_str(suite, "suite"), opt);
    return Outcome{fmt == CY4_FORMAT_JSON ? report_json(r) : report_text(r), r.ok() ? CY4_OK : CY4_MATH_FAIL};
  });
}

// ------------------------------------------------------------------- series

namespace {
void check_order(int order) {
  if (order < 1 || order > 64) fail(ErrorKind::input, "order must lie in 1..64");
}
}  // namespace

cy4_status cy4_series_expand(const char* expr, const char* regime, int order, cy4_format fmt, char** out) {
  return produce(out, [&] {
    check_order(order);
    const Regime reg = parse_regime(need_str(regime, "regime"));
    const LaurentSeries s = parse_series_expr(need_str(expr, "expression"), reg, order);
    if (fmt == CY4_FORMAT_JSON) {
      json j = series_json(s);
      j["order"] = order;
      return Outcome{dump(j)};
    }
    return Outcome{s.str()};
  });
}

cy4_status cy4_series_sqrt_euler(const char* spec_path, int order, cy4_format fmt, char** out) {
  return produce(out, [&] {
    check_order(order);
    const SqrtEulerSpec s = parse_sqrt_euler_json(read_text_file(need_str(spec_path, "spec path")));
    const SqrtEulerReport r = sqrt_euler_check(s.t_ge, s.t_le, s.e_ge, s.regime, order);
    const cy4_status st = r.ok ? CY4_OK : CY4_MATH_FAIL;
    if (fmt == CY4_FORMAT_JSON)
      return Outcome{dump({{"lhs", series_json(r.lhs)}, {"rhs", series_json(r.rhs)}, {"ok", r.ok}, {"order", order}}),
                     st};
    return Outcome{"lhs:\n" + r.lhs.str() + "rhs:\n" + r.rhs.str() + "ok: " + (r.ok ? "true" : "false") + "\n", st};
  });
}

cy4_status cy4_series_global_residue(const char* theta_path, int order, cy4_format fmt, char** out) {
  return produce(out, [&] {
    check_order(order);
    const EqKClass theta = parse_kclass_json(read_text_file(need_str(theta_path, "theta path")));
    const GlobalResidueReport r = global_residue_check(theta, order);
    const cy4_status st = r.ok ? CY4_OK : CY4_MATH_FAIL;
    if (fmt == CY4_FORMAT_JSON) return Outcome{dump({{"residue", r.residue.str()}, {"vanishes", r.ok}}), st};
    return Outcome{"residue: " + r.residue.str() + "\nvanishes: " + (r.ok ? "true" : "false") + "\n", st};
  });
}

// ------------------------------------------------------------ wall-crossing

cy4_status cy4_wc_js(const char* alpha, const char* classes_path, cy4_format fmt, char** out) {
  return produce(out, [&] {
    const ClassVec a = parse_class_list(need_str(alpha, "alpha"));
    const ClassTable t = parse_classes_json(read_text_file(need_str(classes_path, "classes path")));
    ClassValues m;
    for (const auto& [c, info] : t) m[c] = LieExpr::letter(info.name);
    const LieExpr e = js_rhs(a, m, t);
    if (fmt == CY4_FORMAT_JSON) return Outcome{dump({{"alpha", a}, {"rhs", lie_json(e)}})};
    return Outcome{e.str() + "\n"};
  });
}

cy4_status cy4_wc_invert(const char* alpha, const char* classes_path, const char* variant, cy4_format fmt,
                         char** out) {
  return produce(out, [&] {
    const ClassVec a = parse_class_list(need_str(alpha, "alpha"));
    const ClassTable t = parse_classes_json(read_text_file(need_str(classes_path, "classes path")));
    const std::string v = variant ? variant : "corrected";
    InvertVariant iv;
    if (v == "corrected") {
      iv = InvertVariant::corrected;
    } else if (v == "as-printed") {
      iv = InvertVariant::as_printed;
    } else {
      fail(ErrorKind::input, "variant must be corrected or as-printed");
    }
    const ClassValues m = invert_js(t, a, iv);
    json j = json::object();
    std::ostringstream os;
    for (const auto& [c, e] : m) {
      j[class_string(c)] = lie_json(e);
      os << "M" << class_string(c) << " = " << e.str() << "\n";
    }
    return Outcome{fmt == CY4_FORMAT_JSON ? dump(j) : os.str()};
  });
}

cy4_status cy4_wc_dtpt(int order, cy4_format fmt, char** out) {
  return produce(out, [&] {
    if (order < 0 || order > 8) fail(ErrorKind::input, "order must lie in 0..8");
    const QSeries s = dt_from_pt(order);
    return Outcome{fmt == CY4_FORMAT_JSON ? dump(qseries_json(s)) : s.str()};
  });
}

cy4_status cy4_wc_hilb(int order, cy4_format fmt, char** out) {
  return produce(out, [&] {
    if (order < 0 || order > 8) fail(ErrorKind::input, "order must lie in 0..8");
    const QSeries s = hilb_series(order);
    return Outcome{fmt == CY4_FORMAT_JSON ? dump(qseries_json(s)) : s.str()};
  });
}

// ---------------------------------------------------------------------- toy

cy4_status cy4_toy_pushforward(int r, const char* expr, cy4_format fmt, char** out) {
  return produce(out, [&] {
    if (r < 1 || r > 16) fail(ErrorKind::input, "rank must lie in 1..16");
    const Poly x = parse_class_expr(need_str(expr, "expression"));
    const Poly p = proj_pushforward(r, x);
    if (fmt == CY4_FORMAT_JSON)
      return Outcome{dump({{"r", r}, {"normal_form", proj_normal_form(r, x).str()}, {"pushforward", p.str()}})};
    return Outcome{p.str() + "\n"};
  });
}

cy4_status cy4_toy_bracket_check(int r, int a, cy4_format fmt, char** out) {
  return produce(out, [&] {
    const BracketPushdownReport rep = bracket_pushdown_check(r, a);
    const cy4_status st = rep.ok() ? CY4_OK : CY4_MATH_FAIL;
    if (fmt == CY4_FORMAT_JSON)
      return Outcome{dump({{"r", r},
                           {"a", a},
                           {"expected", rep.expected.str()},
                           {"geometric", rep.geometric.str()},
                           {"step2", rep.step2.str()},
                           {"step3", rep.step3.str()},
                           {"tangent_matches", rep.tangent_matches},
                           {"tail_below_minus_one", rep.tail_below_minus_one},
                           {"ok", rep.ok()}}),
                     st};
    std::ostringstream os;
    os << "expected: " << rep.expected.str() << "\ngeometric: " << rep.geometric.str()
       << "\nstep 2 residue: " << rep.step2.str() << "\nstep 3 residue: " << rep.step3.str()
       << "\npulled-back tangent class matches: " << (rep.tangent_matches ? "yes" : "no")
       << "\nintegrands differ below z^-1: " << (rep.tail_below_minus_one ? "yes" : "no")
       << "\nok: " << (rep.ok() ? "true" : "false") << "\n";
    return Outcome{os.str(), st};
  });
}

cy4_status cy4_toy_flag_residues(const char* spec_path, cy4_format fmt, char** out) {
  return produce(out, [&] {
    const FlagLocusSpec s = parse_flag_spec_json(read_text_file(need_str(spec_path, "spec path")));
    const FlagResidueReport r = fixed_locus_residues(s);
    if (fmt == CY4_FORMAT_JSON)
      return Outcome{dump({{"locus1", {{"sign", r.sign1}, {"residue", r.locus1.str()}}},
                           {"locus2", {{"sign", r.sign2}, {"residue", r.locus2.str()}}},
                           {"locus3", {{"epsilon", s.epsilon}, {"residue", r.locus3.str()}}},
                           {"total", r.total.str()}})};
    return Outcome{r.str()};
  });
}

// ------------------------------------------------------------------- verify

cy4_status cy4_verify(const char* suite, uint64_t seed, int order, int max_n, const char* fixture_dir,
                      cy4_format fmt, char** out, double* elapsed_ms) {
  return produce(out, [&] {
    check_order(order);
    SuiteOptions opt;
    opt.seed = seed;
    opt.order = order;
    opt.max_n = max_n;
    if (fixture_dir) opt.fixture_dir = fixture_dir;
    const RunReport r = run_suite(need_str(suite, "suite"), opt);
    if (elapsed_ms) *elapsed_ms = r.elapsed_ms;
    return Outcome{fmt == CY4_FORMAT_JSON ? report_json(r) : report_text(r), r.ok() ? CY4_OK : CY4_MATH_FAIL};
  });
}

}  // extern "C"
