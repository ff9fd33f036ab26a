// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cy4/quiver.hpp"

#include "oracles.hpp"

using namespace cy4;
using namespace oracles;

namespace {

AlgebraElement el(std::initializer_list<std::pair<std::vector<std::string>, int>> terms) {
  AlgebraElement a;
  for (const auto& [p, c] : terms) a.add(Path::of(p), c);
  return a;
}

CY4Quiver complete(const QuiverWithPotential& q) { return cy4_complete(q.quiver, q.potential); }

}  // namespace

TEST_CASE("compose follows the q-first convention") {
  auto ex = example_quiver();
  GradedQuiver q = doubled(ex.quiver);
  CHECK(compose(q, Path::of({"e1"}), Path::of({"e4"})) == el({{{"e4", "e1"}, 1}}));
  CHECK(compose(q, Path::of({"e4"}), Path::of({"e1"})).is_zero());
  CHECK(compose(q, Path::lazy("1"), Path::lazy("1")) == AlgebraElement(Path::lazy("1"), 1));
  CHECK(compose(q, Path::lazy("2"), Path::of({"e1"})) == el({{{"e1"}, 1}}));
  CHECK_THROWS_AS(compose(q, Path::of({"nope"}), Path::lazy("1")), Error);
}

TEST_CASE("worked differentials on the example quiver") {
  auto c = complete(example_quiver());
  CHECK(differential(c, "rho1") == el({{{"e4", "e1"}, -1}}));
  CHECK(differential(c, "rho1*") == el({{{"e2", "e3"}, 1}}));
  CHECK(differential(c, "e1*") == el({{{"rho1*", "e4"}, 1}, {{"e2", "rho2*"}, -1}}));
  CHECK(format(differential(c, "rho1")) == "-1 * e4;e1");
  CHECK(c.quiver.edges().size() == 16);
  CHECK(c.quiver.edge("e1*").degree == -2);
  CHECK(c.quiver.edge("rho2*").degree == -1);
  CHECK(c.quiver.edge("o_3").degree == -3);
  CHECK(circular_derivative(c.quiver, c.potential, "o_1").is_zero());
}

TEST_CASE("C4 quiver: d(c_ab) = [x_a, x_b]") {
  auto c = complete(c4_quiver());
  CHECK(c.quiver.edges().size() == 15);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}) {
    std::string xa = "x" + std::to_string(a), xb = "x" + std::to_string(b);
    // [x_a, x_b] = x_a∘x_b - x_b∘x_a
    CHECK(differential(c, "c" + std::to_string(a) + std::to_string(b)) == el({{{xb, xa}, 1}, {{xa, xb}, -1}}));
  }
  CHECK(circular_derivative(c.quiver, c.potential, "c34") == el({{{"x2", "x1"}, 1}, {{"x1", "x2"}, -1}}));
}

TEST_CASE("master equation and d^2 = 0") {
  for (auto fx : {example_quiver(), c4_quiver(), point_quiver()}) {
    GradedQuiver qbar = doubled(fx.quiver);
    CHECK(master_bracket(qbar, fx.potential).is_zero());
    auto c = complete(fx);
    CHECK(verify_dga(c).ok);
    CHECK(oracle_d_squared_zero(c, nullptr));
  }
  auto p = complete(point_quiver());
  REQUIRE(p.quiver.edges().size() == 1);
  CHECK(differential(p, "o_0").is_zero());
}

TEST_CASE("deleting a superpotential term is detected") {
  for (auto fx : {example_quiver(), c4_quiver()}) {
    GradedQuiver qbar = doubled(fx.quiver);
    for (const auto& [w, coeff] : fx.potential.terms()) {
      CyclicElement h;
      for (const auto& [w2, c2] : fx.potential.terms())
        if (w2 != w) h.add(qbar, w2, c2);
      auto c = cy4_complete_unchecked(fx.quiver, h);
      const bool mb = master_bracket(qbar, h).is_zero();
      const DgaReport r = verify_dga(c);
      std::string witness;
      const bool oracle = oracle_d_squared_zero(c, &witness);
      CHECK_FALSE((mb && r.ok));
      CHECK(oracle == r.ok);
      if (!r.ok) CHECK_FALSE(r.value.is_zero());
      CHECK_THROWS_AS(cy4_complete(fx.quiver, h), Error);
    }
  }
}

TEST_CASE("grafted quivers stay CY4") {
  for (auto fx : {example_quiver(), c4_quiver(), point_quiver()}) {
    auto c = complete(fx);
    std::vector<Frame> frames = {{Frame::Kind::js, 2, 0}};
    for (int r = 3; r <= 5; ++r) frames.push_back({Frame::Kind::flag, r, 0});
    frames.push_back({Frame::Kind::ms, 4, 2});
    frames.push_back({Frame::Kind::ms, 3, 2});
    for (const Frame& f : frames) {
      auto g = graft(c, f);
      CHECK(verify_dga(g).ok);
      CHECK(master_bracket(doubled(g.base), g.potential).is_zero());
    }
  }
  auto js = graft(complete(c4_quiver()), {Frame::Kind::js, 2, 0});
  CHECK(js.quiver.has_vertex("inf"));
  CHECK(js.quiver.edge("j_0").degree == 0);
  CHECK(js.quiver.edge("j_0*").degree == -2);
  CHECK(js.quiver.edge("j_0*").tail == "0");
  CHECK(js.potential == c4_quiver().potential);

  auto ms = graft(complete(example_quiver()), {Frame::Kind::ms, 4, 2});
  CHECK(differential(ms, "rho0") == el({{{"g1", "g0"}, 1}}));
  CHECK(ms.quiver.edge("gm1").tail == "f1");
  CHECK(ms.quiver.edge("gm1").head == "f0");

  auto flag2 = graft(complete(point_quiver()), {Frame::Kind::flag, 2, 0});
  CHECK(flag2.quiver.vertices().size() == 2);
  CHECK(flag2.quiver.has_vertex("inf"));
  CHECK(flag2.quiver.has_edge("j_0"));

  CHECK_THROWS_AS(graft(complete(point_quiver()), {Frame::Kind::ms, 3, 3}), Error);
  CHECK_THROWS_AS(graft(complete(point_quiver()), {Frame::Kind::ms, 2, 1}), Error);
  CHECK_THROWS_AS(graft(complete(point_quiver()), {Frame::Kind::flag, 1, 0}), Error);
}

TEST_CASE("pairing validation") {
  GradedQuiver q;
  q.add_vertex("a");
  q.add_vertex("b");
  CHECK_THROWS_AS(q.add_edge({"x", "a", "c", 0}), Error);
  CHECK_THROWS_AS(q.add_edge({"x", "a", "b", -4}), Error);
  q.add_edge({"x", "a", "b", 0});
  q.add_edge({"y", "a", "b", 0});
  q.declare_dual("x", "y", 1);
  CHECK_THROWS_AS(doubled(q), Error);  // endpoints and degrees incompatible

  GradedQuiver r;
  r.add_vertex("a");
  r.add_edge({"t", "a", "a", -3});
  CHECK_THROWS_AS(doubled(r), Error);
}

TEST_CASE("property: rotation normalization carries the Koszul sign") {
  // Random closed words on the C4 quiver (one vertex, degrees 0 and -1).
  auto fx = c4_quiver();
  GradedQuiver q = doubled(fx.quiver);
  std::vector<std::string> names;
  for (const Edge& e : q.edges()) names.push_back(e.name);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    auto word = [&](int n) {
      std::vector<std::string> w;
      for (int i = 0; i < n; ++i) w.push_back(names[rng() % names.size()]);
      return Path::of(w);
    };
    Path p = word(1 + static_cast<int>(rng() % 3));
    Path r = word(1 + static_cast<int>(rng() % 3));
    // p∘r and r∘p as closed words
    CyclicElement a, b;
    const AlgebraElement pr = compose(q, p, r), rp = compose(q, r, p);
    for (const auto& [path, c] : pr.terms()) a.add(q, path, c);
    int s = (q.degree(p) * q.degree(r)) % 2 == 0 ? 1 : -1;
    for (const auto& [path, c] : rp.terms()) b.add(q, path, c * s);
    CHECK(a == b);

    // idempotence of canonical form
    auto [k, sign] = canonical_rotation(q, p);
    if (sign != 0) {
      auto [k2, sign2] = canonical_rotation(q, k);
      CHECK(k2 == k);
      CHECK(sign2 == 1);
    }
  }
}

TEST_CASE("property: circular derivative degree and completion invariants") {
  for (auto fx : {example_quiver(), c4_quiver()}) {
    auto c = complete(fx);
    for (const Edge& e : c.quiver.edges()) {
      const AlgebraElement de = circular_derivative(c.quiver, c.potential, e.name);
      for (const auto& [p, k] : de.terms())
        CHECK(c.quiver.degree(p) == -1 - e.degree);
      if (e.kind != EdgeKind::loop) {
        auto d = c.quiver.dual(e.name);
        REQUIRE(d);
        CHECK(e.degree + c.quiver.edge(d->edge).degree == -2);
      }
    }
  }
}

TEST_CASE("determinism of formatting") {
  auto a = complete(example_quiver());
  auto b = complete(example_quiver());
  for (const Edge& e : a.quiver.edges()) CHECK(format(differential(a, e.name)) == format(differential(b, e.name)));
}
