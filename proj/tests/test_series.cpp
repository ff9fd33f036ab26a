// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cy4/series.hpp"

#include "oracles.hpp"

using namespace cy4;
using namespace oracles;

namespace {

RatFun lam(const char* n) { return RatFun(Poly::lam(n)); }
RatFun nil(const char* n) { return RatFun(Poly::nil(n)); }

EqTerm line(std::map<std::string, int> w, std::vector<Poly> roots = {}, int mult = 1, int nz = 1) {
  EqTerm t;
  t.mult = mult;
  t.n_z = nz;
  t.lam = std::move(w);
  t.rank = roots.empty() ? 1 : static_cast<int>(roots.size());
  t.roots = std::move(roots);
  return t;
}

}  // namespace

TEST_CASE("rational functions in the torus weights") {
  RatFun a = lam("l1").inverse(4), b = lam("l2").inverse(4);
  RatFun s = a + b;
  CHECK(s == (lam("l1") + lam("l2")) * a * b);
  CHECK(((lam("l1") + lam("l2")) * s.inverse(4)) == lam("l1") * lam("l2"));
  CHECK((lam("l1") * a).str() == "1");
  CHECK(RatFun(Poly::lam("l1").scaled(2) + Poly::lam("l2").scaled(4)).inverse(2).str() == "1/2/(l1 + 2*l2)");
  std::map<std::string, Q> at{{"l1", 3}, {"l2", -5}};
  CHECK(s.evaluate(at) == Q(1, 3) + Q(-1, 5));
  CHECK_THROWS_AS(RatFun(Poly::lam("l1") * Poly::lam("l1") + Poly::lam("l2") * Poly::lam("l2")).inverse(2), Error);
  CHECK_THROWS_AS(nil("a").inverse(3), Error);
  // (l1 + a)^{-1} with a nilpotent of order 2
  RatFun inv = (lam("l1") + nil("a")).inverse(2);
  CHECK(inv == lam("l1").inverse(2) - nil("a") * lam("l1").inverse(2) * lam("l1").inverse(2) +
                   nil("a") * nil("a") * lam("l1").inverse(2) * lam("l1").inverse(2) * lam("l1").inverse(2));
  CHECK(((lam("l1") + nil("a")) * inv).truncated(2) == RatFun(1));
}

TEST_CASE("explicit expansion, local regime") {
  auto s = expand_power(lam("l1"), 1, Regime::local, 10);
  for (int i = 0; i <= 10; ++i) {
    RatFun want = RatFun::inverse_form(LinearForm{{{"l1", 1}}}, i + 1) * RatFun(i % 2 == 0 ? 1 : -1);
    CHECK(s.z_coeff(i) == want);
  }
  CHECK_THROWS_AS(s.z_coeff(11), Error);
  auto s2 = expand_power(lam("l1"), 2, Regime::local, 10);
  CHECK(s2.z_coeff(1) == RatFun::inverse_form(LinearForm{{{"l1", 1}}}, 3) * RatFun(-2));
  CHECK_THROWS_AS(expand_power(lam("l1"), 0, Regime::local), Error);
}

TEST_CASE("explicit expansion, global regime") {
  auto s = expand_power(lam("l1"), 1, Regime::global, 10);
  CHECK(s.z_coeff(0).is_zero());
  for (int i = 0; i <= 10; ++i) {
    Poly p(i % 2 == 0 ? 1 : -1);
    for (int j = 0; j < i; ++j) p = p * Poly::lam("l1");
    CHECK(s.z_coeff(-1 - i) == RatFun(p));
  }
}

TEST_CASE("expansions agree with numeric long division") {
  const RatFun forms[] = {lam("l1"), lam("l1") + lam("l2") * RatFun(2), lam("l2") * RatFun(-3)};
  const std::map<std::string, Q> points[] = {{{"l1", 3}, {"l2", 5}}, {{"l1", Q(-2, 7)}, {"l2", 1}}};
  for (const auto& f : forms)
    for (const auto& at : points)
      for (int k = 1; k <= 4; ++k) {
        const Q q = f.evaluate(at);
        const int n = 10;
        auto base = binomial_poly(q, k);
        // local: 1/(q+z)^k as a power series in z
        auto loc = long_divide(base, n + 1);
        auto sl = expand_power(f, k, Regime::local, n);
        for (int i = 0; i <= n; ++i) CHECK(sl.z_coeff(i).evaluate(at) == loc[i]);
        // global: z^{-k}/(1 + q/z)^k, long division in 1/z
        std::vector<Q> rev(base.rbegin(), base.rend());
        auto glo = long_divide(rev, n + 1);
        auto sg = expand_power(f, k, Regime::global, n);
        for (int i = 0; i <= n; ++i) CHECK(sg.z_coeff(-k - i).evaluate(at) == glo[i]);
      }
}

TEST_CASE("regime consistency: multiplying back gives 1") {
  for (Regime r : {Regime::local, Regime::global})
    for (int k = 1; k <= 4; ++k) {
      RatFun l = lam("l1") - lam("l3");
      auto s = expand_power(l, k, r, 9) * LaurentSeries::linear(1, l, r).pow(k);
      CHECK(s.agrees_with(LaurentSeries::constant(1, r)));
      CHECK(s.prec() >= (r == Regime::local ? 10 : 10 - k));
    }
}

TEST_CASE("residues") {
  CHECK(residue(LaurentSeries::z_power(-1, Regime::local)) == RatFun(1));
  CHECK(residue(LaurentSeries::z_power(-1, Regime::global)) == RatFun(1));
  CHECK(residue(expand_power(lam("l1"), 1, Regime::global)) == RatFun(1));
  CHECK(residue(expand_power(lam("l1"), 1, Regime::local)).is_zero());
  // local residues of pure-λ poles vanish
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    LaurentSeries s = LaurentSeries::constant(1, Regime::local);
    for (int f = 0; f < 3; ++f) {
      RatFun l = lam("l1") * RatFun(static_cast<int>(rng() % 3) + 1) + lam("l2") * RatFun(static_cast<int>(rng() % 5) - 2);
      s = s * expand_power(l, static_cast<int>(rng() % 3) + 1, Regime::local, 6);
    }
    CHECK(residue(s).is_zero());
  }
}

TEST_CASE("total Chern series") {
  CHECK(total_chern({}, Regime::local).agrees_with(LaurentSeries::constant(1, Regime::local)));
  EqTerm t = line({}, {Poly::nil("a"), Poly::nil("b")});
  auto s = total_chern({t}, Regime::local);
  CHECK(s.exact());
  CHECK(s.z_coeff(2) == RatFun(1));
  CHECK(s.z_coeff(1) == nil("a") + nil("b"));
  CHECK(s.z_coeff(0) == nil("a") * nil("b"));
  for (Regime r : {Regime::local, Regime::global}) {
    auto inv = total_chern({line({}, {Poly(Q(3))}, -1)}, r, 8);
    CHECK((inv * LaurentSeries::linear(1, 3, r)).agrees_with(LaurentSeries::constant(1, r)));
  }
  CHECK_THROWS_AS(total_chern({line({}, {Poly::nil("a")}, -1, 0)}, Regime::local), Error);
}

TEST_CASE("Whitney sum formula on random classes") {
  std::mt19937_64 rng(11);
  auto random_class = [&]() {
    EqKClass k;
    int terms = static_cast<int>(rng() % 3) + 1;
    for (int i = 0; i < terms; ++i) {
      // Either a λ-weight with nilpotent roots or integer roots alone.
      std::map<std::string, int> w;
      const bool weighted = rng() % 2;
      if (weighted) w["l1"] = static_cast<int>(rng() % 3) + 1;
      int rank = static_cast<int>(rng() % 2) + 1;
      std::vector<Poly> roots;
      for (int j = 0; j < rank; ++j)
        roots.push_back(weighted ? Poly::nil(j == 0 ? "a" : "b") : Poly(Q(static_cast<int>(rng() % 7) + 1)));
      k.push_back(line(w, roots, rng() % 3 == 0 ? -1 : 1));
    }
    return k;
  };
  for (Regime r : {Regime::local, Regime::global})
    for (int trial = 0; trial < 15; ++trial) {
      auto a = random_class(), b = random_class();
      EqKClass ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      CHECK(total_chern(ab, r, 8, 3).agrees_with(total_chern(a, r, 8, 3) * total_chern(b, r, 8, 3)));
    }
}

TEST_CASE("square-root Euler identity") {
  for (Regime r : {Regime::local, Regime::global}) {
    auto e = sqrt_euler_check({}, {}, {}, r);
    CHECK(e.ok);
    CHECK(e.lhs.agrees_with(LaurentSeries::constant(1, r)));
    auto one = sqrt_euler_check({line({}, {Poly::nil("a")})}, {}, {}, r);
    CHECK(one.ok);
    CHECK(one.lhs.agrees_with(LaurentSeries::linear(1, nil("a"), r)));
  }
  std::mt19937_64 rng(23);
  auto random_class = [&](int max_terms) {
    EqKClass k;
    int terms = static_cast<int>(rng() % (max_terms + 1));
    for (int i = 0; i < terms; ++i) {
      int rank = static_cast<int>(rng() % 3) + 1;
      std::vector<Poly> roots;
      for (int j = 0; j < rank; ++j) roots.push_back(Poly(Q(static_cast<int>(rng() % 9) + 1)));
      k.push_back(line({}, roots));
    }
    return k;
  };
  for (Regime r : {Regime::local, Regime::global})
    for (int trial = 0; trial < 20; ++trial) {
      auto rep = sqrt_euler_check(random_class(2), random_class(2), random_class(1), r, 8);
      CHECK(rep.ok);
    }
  // With λ-weights and nilpotent roots as well.
  auto mixed = sqrt_euler_check({line({{"l1", 1}}, {Poly::nil("a")})}, {line({{"l2", 1}}, {Poly::nil("b")})},
                                {line({{"l1", 1}, {"l2", 1}})}, Regime::global, 6);
  CHECK(mixed.ok);
}

TEST_CASE("localization") {
  for (Regime r : {Regime::local, Regime::global}) {
    auto z = localize("A", {}, r);
    CHECK(z.token == "A");
    CHECK(z.series.agrees_with(LaurentSeries::constant(RatFun(Poly::sym("A")), r)));
    auto one = localize("A", {line({}, {Poly::nil("c")})}, r, 8, 4);
    auto want = LaurentSeries::linear(1, nil("c"), r, 4).inverse(8).scaled(RatFun(Poly::sym("A")));
    CHECK(one.series.agrees_with(want));
    // [z⁻¹]{A/(z(1 + B/z))} = A for nilpotent B
    for (int bound = 1; bound <= 4; ++bound) {
      auto loc = localize("A", {line({}, {Poly::nil("B")})}, r, 8, bound);
      CHECK(residue(loc.series) == RatFun(Poly::sym("A")));
    }
  }
  CHECK_THROWS_AS(localize("A", {line({}, {}, 1, 0)}, Regime::local), Error);
}

TEST_CASE("general localization with the positivity split") {
  EqKClass n{line({{"l1", 1}}, {}, 1, 0), line({{"l2", 1}}, {}, 1, 0), line({{"l1", -1}}, {}, 1, 0)};
  RatFun r = localize_general("A", n);
  CHECK(r == RatFun(Poly::sym("A")) * lam("l1").inverse(1) * lam("l2").inverse(1));
  CHECK(is_positive_weight({{"l1", 0}, {"l2", 1}}));
  CHECK_FALSE(is_positive_weight({{"l1", -1}, {"l2", 5}}));
  CHECK(positive_part(n).size() == 2);
  CHECK_THROWS_AS(localize_general("A", {line({}, {}, 1, 0)}), Error);
  CHECK_THROWS_AS(localize_general("A", {line({{"l1", 1}})}), Error);
  // nilpotent roots expand around the weight
  RatFun g = localize_general("", {line({{"l1", 1}}, {Poly::nil("c")}, 1, 0)}, 2);
  CHECK((g * (lam("l1") + nil("c"))).truncated(2) == RatFun(1));
}

TEST_CASE("global residue predicate") {
  auto single = global_residue_check({line({{"l1", 1}})});
  CHECK_FALSE(single.ok);
  CHECK(single.residue == RatFun(1));
  CHECK(global_residue_check({line({{"l1", 1}}), line({{"l1", -1}})}).ok);
  CHECK(global_residue_check({}).ok);
  CHECK_THROWS_AS(global_residue_check({line({})}), Error);
}

TEST_CASE("nilpotent leading terms expand finitely") {
  auto s = LaurentSeries::linear(1, nil("a"), Regime::local, 3).inverse(6);
  CHECK(s.z_coeff(-1) == RatFun(1));
  CHECK(s.z_coeff(-2) == -nil("a"));
  CHECK(s.z_coeff(-3) == nil("a") * nil("a"));
  CHECK(s.z_coeff(-4) == -(nil("a") * nil("a") * nil("a")));
  CHECK(s.z_coeff(-5).is_zero());
  CHECK((s * LaurentSeries::linear(1, nil("a"), Regime::local, 3)).agrees_with(LaurentSeries::constant(1, Regime::local)));
}

TEST_CASE("expression parsing") {
  auto p = parse_series_expr("(l1+z)^-2", Regime::local, 10);
  CHECK(p.agrees_with(expand_power(lam("l1"), 2, Regime::local, 10)));
  auto q = parse_series_expr("(z - 2*l2)*(l1+z)^-1", Regime::global, 6);
  CHECK(q.agrees_with(LaurentSeries::linear(1, lam("l2") * RatFun(-2), Regime::global) *
                      expand_power(lam("l1"), 1, Regime::global, 6)));
  CHECK(parse_linear("2*l1 - a + 3/2") == Poly::lam("l1").scaled(2) - Poly::nil("a") + Poly(Q(3, 2)));
  CHECK_THROWS_AS(parse_series_expr("(l1+z", Regime::local), Error);
  CHECK_THROWS_AS(parse_series_expr("", Regime::local), Error);
  CHECK_THROWS_AS(parse_linear("z+1"), Error);
  CHECK_THROWS_AS(parse_regime("middle"), Error);
}
