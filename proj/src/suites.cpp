// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
#include "cy4/suites.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "cy4/io.hpp"
#include "cy4/lie.hpp"
#include "cy4/quiver.hpp"
#include "cy4/rep.hpp"
#include "cy4/series.hpp"
#include "cy4/signs.hpp"
#include "cy4/toy.hpp"

namespace cy4 {

bool RunReport::ok() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

// Collects checks; a thrown library error fails the check with its message,
// except resource errors, which abort the suite.
class Collector {
 public:
  explicit Collector(RunReport& r) : r_(r) {}
  void check(const std::string& id, const std::function<bool(std::string&)>& f) {
    CheckResult c{id, false, {}};
    try {
      c.pass = f(c.witness);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::resource) throw;
      c.pass = false;
      c.witness = e.what();
    }
    r_.checks.push_back(std::move(c));
  }
  void order(int n) {
    if (std::find(r_.orders.begin(), r_.orders.end(), n) == r_.orders.end()) r_.orders.push_back(n);
  }

 private:
  RunReport& r_;
};

CY4Quiver complete(const QuiverWithPotential& q) { return cy4_complete(q.quiver, q.potential); }

AlgebraElement el(std::initializer_list<std::pair<std::vector<std::string>, int>> terms) {
  AlgebraElement a;
  for (const auto& [p, c] : terms) a.add(Path::of(p), c);
  return a;
}

struct Fixtures {
  QuiverWithPotential example, c4, point;
};

Fixtures load_fixtures(const SuiteOptions& opt) {
  if (opt.fixture_dir.empty()) return {example_quiver(), c4_quiver(), point_quiver()};
  namespace fs = std::filesystem;
  auto load = [&](const char* name) {
    const fs::path p = fs::path(opt.fixture_dir) / name;
    if (!fs::exists(p)) fail(ErrorKind::input, "missing fixture " + p.string());
    return parse_quiver_json(read_text_file(p.string()));
  };
  return {load("example.json"), load("c4.json"), load("point.json")};
}

std::string gen_witness(const DgaReport& r) { return r.ok ? "" : r.generator + ": " + r.reason + " " + format(r.value); }

// ---------------------------------------------------------------- quiver

void quiver_suite(Collector& c, const SuiteOptions& opt) {
  const Fixtures fx = load_fixtures(opt);
  const std::vector<std::pair<std::string, const QuiverWithPotential*>> named{
      {"example", &fx.example}, {"c4", &fx.c4}, {"point", &fx.point}};
  std::map<std::string, CY4Quiver> done;
  for (const auto& [name, q] : named) {
    c.check("master-equation/" + name, [&](std::string& w) {
      const CyclicElement mb = master_bracket(doubled(q->quiver), q->potential);
      w = format(mb);
      return mb.is_zero();
    });
    c.check("d-squared/" + name, [&](std::string& w) {
      done.emplace(name, complete(*q));
      const DgaReport r = verify_dga(done.at(name));
      w = gen_witness(r);
      return r.ok;
    });
  }
  c.check("worked/example", [&](std::string& w) {
    const CY4Quiver& x = done.at("example");
    const bool a = differential(x, "rho1") == el({{{"e4", "e1"}, -1}});
    const bool b = differential(x, "rho1*") == el({{{"e2", "e3"}, 1}});
    const bool d = differential(x, "e1*") == el({{{"rho1*", "e4"}, 1}, {{"e2", "rho2*"}, -1}});
    w = "d(rho1) = " + format(differential(x, "rho1")) + "; d(rho1*) = " + format(differential(x, "rho1*")) +
        "; d(e1*) = " + format(differential(x, "e1*"));
    return a && b && d;
  });
  c.check("worked/c4", [&](std::string& w) {
    const CY4Quiver& x = done.at("c4");
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        const std::string xi = "x" + std::to_string(i), xj = "x" + std::to_string(j);
        const std::string g = "c" + std::to_string(i) + std::to_string(j);
        // [x_i, x_j] = x_i∘x_j - x_j∘x_i, paths in application order
        if (differential(x, g) != el({{{xj, xi}, 1}, {{xi, xj}, -1}})) {
          w = g + ": " + format(differential(x, g));
          return false;
        }
      }
    return true;
  });
  const std::vector<std::pair<std::string, Frame>> frames{{"js", {Frame::Kind::js, 2, 0}},
                                                          {"flag3", {Frame::Kind::flag, 3, 0}},
                                                          {"flag4", {Frame::Kind::flag, 4, 0}},
                                                          {"flag5", {Frame::Kind::flag, 5, 0}},
                                                          {"ms4-2", {Frame::Kind::ms, 4, 2}}};
  for (const char* base : {"example", "c4"})
    for (const auto& [fname, f] : frames)
      c.check(std::string("graft/") + base + "/" + fname, [&, base](std::string& w) {
        const CY4Quiver g = graft(done.at(base), f);
        const DgaReport r = verify_dga(g);
        const CyclicElement mb = master_bracket(g.quiver, g.potential);
        w = gen_witness(r) + (mb.is_zero() ? "" : " {H,H} = " + format(mb));
        return r.ok && mb.is_zero();
      });
  for (const auto& [name, q] : named) {
    if (q->potential.is_zero()) continue;
    c.check("term-deletion-detected/" + name, [&](std::string& w) {
      for (const auto& [p, k] : q->potential.terms()) {
        CyclicElement h = q->potential;
        h.add(doubled(q->quiver), p, -k);
        const bool master_breaks = !master_bracket(doubled(q->quiver), h).is_zero();
        const bool d2_breaks = !verify_dga(cy4_complete_unchecked(q->quiver, h)).ok;
        if (!master_breaks && !d2_breaks) {
          w = "deleting " + format_path(p) + " went unnoticed";
          return false;
        }
      }
      return true;
    });
  }
}

// ----------------------------------------------------------------- signs

void signs_suite(Collector& c, const SuiteOptions& opt, const std::string& which) {
  const bool all = which == "all";
  const size_t mr = static_cast<size_t>(opt.max_rank);
  if (all || which == "pentagon") {
    for (size_t u = 0; u <= mr; ++u)
      for (size_t v = 0; v <= mr; ++v)
        c.check("pentagon/" + std::to_string(u) + "," + std::to_string(v), [&](std::string& w) {
          const PentagonReport p = verify_pentagon(u, v, opt.seed + 31 * u + v);
          w = to_string(p.path_a) + " vs " + to_string(p.path_b);
          return p.ok();
        });
    for (size_t u = 0; u <= mr; ++u)
      for (size_t v = 0; v <= mr; ++v)
        c.check("swap-compatibility/" + std::to_string(u) + "," + std::to_string(v), [&](std::string& w) {
          const Q s = swap_compatibility(u, v, opt.seed + 7 * u + v);
          w = to_string(s);
          return s == 1;
        });
  }
  if (all || which == "double-dual") {
    for (int d = -3; d <= 3; ++d)
      c.check("double-dual/degree" + std::to_string(d), [&](std::string& w) {
        const GaussQ g = double_dual_discrepancy(LineExpr::prim("L", d));
        w = to_string(g);
        return g == GaussQ(d % 2 == 0 ? 1 : -1);
      });
    for (size_t n = 0; n <= mr; ++n)
      c.check("dual-orientation/rank" + std::to_string(n), [&](std::string& w) {
        const GaussQ a = compare_dual(n), b = compare_dual_random(n, opt.seed + n);
        w = to_string(a) + ", " + to_string(b);
        const GaussQ want(n % 2 == 0 ? 1 : -1);
        return a == want && b == want;
      });
  }
  if (all || which == "ot-compare") {
    const size_t ot = std::min<size_t>(mr, 3);  // capped at rank 3
    for (size_t t = 0; t <= ot; ++t)
      for (size_t l = 0; l <= ot; ++l)
        for (size_t e = 0; e <= ot; ++e)
          c.check("ot-compare/" + std::to_string(t) + "," + std::to_string(l) + "," + std::to_string(e),
                  [&](std::string& w) {
                    const GaussQ g = ot_comparison(t, l, e);
                    w = to_string(g);
                    return g == GaussQ((e + l) % 2 == 0 ? 1 : -1);
                  });
  }
}

// ---------------------------------------------------------------- series

RatFun lam_power(const LinearForm& l, int e) {
  if (e >= 0) {
    RatFun r(1);
    for (int i = 0; i < e; ++i) r = r * RatFun(l.poly());
    return r;
  }
  return RatFun::inverse_form(l, -e);
}

// C(-k, n) = (-1)^n C(k+n-1, n)
Q neg_binomial(int k, int n) { return (n % 2 == 0 ? 1 : -1) * binomial(k + n - 1, n); }

void series_suite(Collector& c, const SuiteOptions& opt) {
  const int order = std::max(opt.order, 2);
  c.order(order);
  const LinearForm l1{{{"l1", 1}}};
  for (Regime reg : {Regime::local, Regime::global})
    for (int k = 1; k <= 4; ++k)
      c.check(std::string("explicit-expansion/") + to_string(reg) + "/k" + std::to_string(k), [&](std::string& w) {
        const LaurentSeries s = expand_power(RatFun(l1.poly()), k, reg, order);
        for (int n = 0; n < order; ++n) {
          const int ze = reg == Regime::local ? n : -k - n;
          const RatFun want = lam_power(l1, reg == Regime::local ? -k - n : n) * RatFun(neg_binomial(k, n));
          if (!(s.z_coeff(ze) == want)) {
            w = "z^" + std::to_string(ze) + ": " + s.z_coeff(ze).str() + " expected " + want.str();
            return false;
          }
        }
        return true;
      });
  std::mt19937_64 rng(opt.seed);
  auto rnd_root = [&](int lo, int hi) { return static_cast<int>(lo + static_cast<int>(rng() % (hi - lo + 1))); };
  auto random_class = [&](int rank) {
    EqKClass k;
    for (int i = 0; i < rank; ++i) k.push_back(EqTerm{1, 1, {}, 1, {Poly(rnd_root(1, 6))}});
    return k;
  };
  for (int trial = 0; trial < 6; ++trial) {
    const EqKClass tg = random_class(rnd_root(0, 3)), tl = random_class(rnd_root(0, 3)), eg = random_class(rnd_root(0, 3));
    c.order(8);
    for (Regime reg : {Regime::local, Regime::global})
      c.check("sqrt-euler/" + std::string(to_string(reg)) + "/" + std::to_string(trial), [&](std::string& w) {
        const SqrtEulerReport r = sqrt_euler_check(tg, tl, eg, reg, 8);
        if (!r.ok) w = r.lhs.str() + " vs " + r.rhs.str();
        return r.ok;
      });
  }
  c.check("local-residue-vanishes", [&](std::string& w) {
    for (int trial = 0; trial < 10; ++trial) {
      LaurentSeries s = LaurentSeries::constant(RatFun(1), Regime::local);
      for (int f = 0; f < 3; ++f) {
        std::map<std::string, long> coeff{{"l1", rnd_root(1, 3)}, {"l2", rnd_root(-2, 2)}};
        const LinearForm lf = normalize_linear(LinearForm{coeff}.poly()).second;
        s = s * expand_power(RatFun(lf.poly()), rnd_root(1, 3), Regime::local, order);
      }
      if (!residue(s).is_zero()) {
        w = residue(s).str();
        return false;
      }
    }
    return true;
  });
  c.check("global-residue/single-weight", [&](std::string& w) {
    const GlobalResidueReport r = global_residue_check({EqTerm{1, 1, {{"l1", 1}}, 1, {}}}, order);
    w = r.residue.str();
    return !r.ok;
  });
  c.check("global-residue/self-dual-pair", [&](std::string& w) {
    const GlobalResidueReport r =
        global_residue_check({EqTerm{1, 1, {{"l1", 1}}, 1, {}}, EqTerm{1, 1, {{"l1", -1}}, 1, {}}}, order);
    w = r.residue.str();
    return r.ok;
  });
  c.check("localization-collapse", [&](std::string& w) {
    const EqKClass n{EqTerm{1, 1, {}, 1, {Poly::nil("b")}}};
    const RatFun r = residue(localize("A", n, Regime::global, order, order).series);
    w = r.str();
    return r == RatFun(Poly::sym("A"));
  });
}

// -------------------------------------------------------------------- wc

ClassTable generators(int max_rank, const std::vector<long>& chis) {
  ClassTable t;
  for (long a = 0; a <= max_rank; ++a)
    for (long b = 0; a + b <= max_rank; ++b)
      for (long d = 0; a + b + d <= max_rank; ++d) {
        if (a + b + d == 0) continue;
        const ClassVec v{a, b, d};
        t[v] = ClassInfo{"X" + class_string(v), a + b + d, a * chis[0] + b * chis[1] + d * chis[2], 0};
      }
  return t;
}

void wc_suite(Collector& c, const SuiteOptions& opt) {
  for (const auto& chis : std::vector<std::vector<long>>{{1, 2, 3}, {2, 2, 5}, {1, 1, 1}}) {
    const std::string tag = std::to_string(chis[0]) + std::to_string(chis[1]) + std::to_string(chis[2]);
    c.check("js-round-trip/chi" + tag, [&](std::string& w) {
      const ClassTable t = generators(4, chis);
      const ClassValues m = invert_js(t, {4, 0, 0});
      for (const auto& [a, info] : t) {
        const LieExpr got = omega_transform(js_rhs(a, m, t), t);
        if (!(got == LieExpr::letter(info.name).scaled(info.chi))) {
          w = class_string(a) + ": " + got.str();
          return false;
        }
      }
      return true;
    });
  }
  c.check("dt-pt-inversion", [&](std::string& w) {
    const QSeries pt = wc_invert(letter_series("M", 1, 4), dt_from_pt(4), 4);
    for (int n = 0; n <= 4; ++n)
      if (!(pt.at(n) == LieExpr::letter("PT" + std::to_string(n)))) {
        w = pt.str();
        return false;
      }
    return true;
  });
  c.check("hilb-inversion", [&](std::string& w) {
    const QSeries back = wc_invert(letter_series("M", 1, 4), hilb_series(4), 4);
    w = back.str();
    if (!(back.at(0) == LieExpr::letter(kP))) return false;
    for (int n = 1; n <= 4; ++n)
      if (!back.at(n).is_zero()) return false;
    return true;
  });
  c.check("epsilon-cocycle-and-symmetry", [&](std::string& w) {
    const std::vector<std::vector<long>> chi{{2, 1, -3}, {1, 0, 4}, {-3, 4, -2}};
    const EpsilonSystem e = EpsilonSystem::from_pairing(chi);
    std::mt19937_64 rng(opt.seed);
    auto rnd = [&] {
      ClassVec v(3);
      for (auto& x : v) x = static_cast<long>(rng() % 11) - 5;
      return v;
    };
    for (int i = 0; i < 1000; ++i) {
      const ClassVec a = rnd(), b = rnd(), d = rnd();
      if (!e.cocycle_check(a, b, d) || !e.symmetry_check(a, b, chi)) {
        w = class_string(a) + " " + class_string(b) + " " + class_string(d);
        return false;
      }
    }
    return true;
  });
  c.check("flag-weights", [&](std::string& w) {
    const LieExpr a = LieExpr::letter("O1"), b = LieExpr::letter("O2");
    const LieExpr got = flag_wc_rhs({FlagTerm{a, b, 1, 2}}, 3);
    w = got.str();
    return got == bracket(a, b).scaled(Q(1, 3));
  });
}

// ------------------------------------------------------------------- toy

void toy_suite(Collector& c, const SuiteOptions&) {
  for (int r = 1; r <= 4; ++r)
    c.check("segre-pushforward/r" + std::to_string(r), [&](std::string& w) {
      const auto s = segre(r, 3);
      Poly h(1);
      for (int i = 0; i < r - 1; ++i) h = h * hyperplane();
      for (int j = 0; j <= 3; ++j, h = h * hyperplane())
        if (!(proj_pushforward(r, h) == s[j])) {
          w = "j=" + std::to_string(j) + ": " + proj_pushforward(r, h).str();
          return false;
        }
      return true;
    });
  for (int r = 2; r <= 5; ++r)
    c.check("euler-relative-tangent/r" + std::to_string(r), [&](std::string& w) {
      const Poly p = proj_pushforward(r, euler_relative_tangent(r));
      w = p.str();
      return p == Poly(r);
    });
  for (int r = 1; r <= 4; ++r)
    for (int a : {0, 2})
      c.check("bracket-pushdown/r" + std::to_string(r) + "/a" + std::to_string(a), [&](std::string& w) {
        const BracketPushdownReport rep = bracket_pushdown_check(r, a);
        w = rep.step2.str();
        return rep.ok();
      });
  c.check("flag-residues/rank1", [&](std::string& w) {
    FlagLocusSpec s;
    s.n1 = {EqTerm{1, 1, {}, 1, {Poly::nil("b")}}};
    s.n2 = {EqTerm{1, 1, {}, 1, {Poly::nil("b2")}}};
    s.theta = {EqTerm{1, 1, {}, 1, {Poly::nil("theta")}}};
    const FlagResidueReport r = fixed_locus_residues(s);
    w = r.str();
    return r.locus1 == RatFun(Poly::sym("A")) && r.locus2 == RatFun(-Poly::sym("A'")) &&
           r.locus3.has_unit_part();
  });
  c.check("flag-residues/self-dual-cancels", [&](std::string& w) {
    const FlagResidueReport r = fixed_locus_residues(self_dual_toy());
    w = r.str();
    return r.total.is_zero();
  });
}

// ------------------------------------------------------------------- rep

void rep_suite(Collector& c, const SuiteOptions& opt) {
  const CY4Quiver ex = complete(example_quiver());
  const CY4Quiver c4 = complete(c4_quiver());
  const CY4Quiver pt = complete(point_quiver());
  const CY4Quiver js = graft(c4, {Frame::Kind::js, 2, 0});
  std::mt19937_64 rng(opt.seed);
  c.check("euler-symmetric-even", [&](std::string& w) {
    for (const CY4Quiver* q : {&ex, &c4, &js})
      for (int t = 0; t < 20; ++t) {
        DimVector d, e;
        for (const auto& v : q->quiver.vertices()) {
          d[v] = static_cast<int>(rng() % 6);
          e[v] = static_cast<int>(rng() % 6);
        }
        if (euler_form(*q, d, e) != euler_form(*q, e, d) || euler_form(*q, d, d) % 2 != 0) {
          w = "asymmetric or odd pairing";
          return false;
        }
      }
    return true;
  });
  c.check("euler-c4-vanishes", [&](std::string& w) {
    for (int d = 0; d <= 5; ++d)
      for (int e = 0; e <= 5; ++e)
        if (euler_form(c4, {{"0", d}}, {{"0", e}}) != 0) {
          w = std::to_string(d) + "," + std::to_string(e);
          return false;
        }
    return true;
  });
  c.check("euler-point", [&](std::string& w) {
    const std::string v = pt.quiver.vertices().front();
    for (int d = 0; d <= 5; ++d)
      for (int e = 0; e <= 5; ++e)
        if (euler_form(pt, {{v, d}}, {{v, e}}) != 2 * d * e) {
          w = std::to_string(d) + "," + std::to_string(e);
          return false;
        }
    return true;
  });
  c.check("ext-complex-random", [&](std::string& w) {
    for (int t = 0; t < 10; ++t) {
      const size_t n = 1 + rng() % 3;
      Matrix a(n, n);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a(i, j) = static_cast<int>(rng() % 7) - 3;
      Representation r;
      r.dims = {{"0", static_cast<int>(n)}};
      Matrix p = Matrix::identity(n);
      for (int i = 1; i <= 4; ++i, p = p * a) r.m["x" + std::to_string(i)] = p;
      const ExtComplex x = ext_complex(c4, r);
      long long ec = 0;
      for (size_t i = 0; i < 5; ++i) ec += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(x.dim[i]);
      if (!delta_squared_zero(x) || ec != euler_form(c4, r.dims, r.dims)) {
        w = "dimension " + std::to_string(n);
        return false;
      }
    }
    return true;
  });
  c.check("hilb1-tangent", [&](std::string& w) {
    const auto d = ext_dims(ext_complex(js, fixed_point_representation(monomial_fixed_points(1).at(0))));
    w = std::to_string(d[1]);
    return d[1] == 4;
  });
  const long long expected[] = {1, 4, 10, 26, 59, 140, 307, 684};
  for (int n = 1; n <= std::min(opt.max_n, 8); ++n)
    c.check("fixed-point-count/n" + std::to_string(n), [&](std::string& w) {
      const size_t k = monomial_fixed_points(n, opt.max_n).size();
      w = std::to_string(k);
      return static_cast<long long>(k) == expected[n - 1];
    });
  for (int n = 1; n <= std::min(opt.max_n, 4); ++n)
    c.check("serre-symmetry/n" + std::to_string(n), [&](std::string& w) {
      for (const Staircase& s : monomial_fixed_points(n, opt.max_n)) {
        const auto d = ext_dims(ext_complex(js, fixed_point_representation(s)));
        for (size_t i = 0; i < 5; ++i)
          if (d[i] != d[4 - i]) {
            w = "Ext^" + std::to_string(i) + " mismatch";
            return false;
          }
      }
      return true;
    });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "quiver", "signs", "series", "wc", "toy", "rep"};
  return names;
}

RunReport run_suite(const std::string& name, const SuiteOptions& opt) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    fail(ErrorKind::input, "unknown suite \"" + name + "\"");
  const auto t0 = std::chrono::steady_clock::now();
  RunReport r;
  r.suite = name;
  Collector c(r);
  const bool all = name == "all";
  if (all || name == "quiver") quiver_suite(c, opt);
  if (all || name == "signs") signs_suite(c, opt, "all");
  if (all || name == "series") series_suite(c, opt);
  if (all || name == "wc") wc_suite(c, opt);
  if (all || name == "toy") toy_suite(c, opt);
  if (all || name == "rep") rep_suite(c, opt);
  std::sort(r.orders.begin(), r.orders.end());
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

RunReport run_sign_checks(const std::string& which, const SuiteOptions& opt) {
  if (which != "all" && which != "pentagon" && which != "double-dual" && which != "ot-compare")
    fail(ErrorKind::input, "unknown sign suite \"" + which + "\"");
  if (opt.max_rank < 0 || opt.max_rank > 6) fail(ErrorKind::input, "max rank must lie in 0..6");
  const auto t0 = std::chrono::steady_clock::now();
  RunReport r;
  r.suite = "signs/" + which;
  Collector c(r);
  signs_suite(c, opt, which);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string report_text(const RunReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << "\n";
  for (const CheckResult& c : r.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.id;
    if (!c.pass && !c.witness.empty()) os << "  witness: " << c.witness;
    os << "\n";
  }
  if (!r.orders.empty()) {
    os << "orders";
    for (int o : r.orders) os << " " << o;
    os << "\n";
  }
  const size_t passed = static_cast<size_t>(std::count_if(r.checks.begin(), r.checks.end(), [](auto& c) { return c.pass; }));
  os << passed << "/" << r.checks.size() << " checks passed\n";
  return os.str();
}

std::string report_json(const RunReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back({{"id", c.id}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}});
  nlohmann::json j{{"suite", r.suite}, {"checks", checks}, {"orders", r.orders}, {"ok", r.ok()}};
  return j.dump(2) + "\n";
}

}  // namespace cy4
