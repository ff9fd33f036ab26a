// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "cy4/rep.hpp"

#include "oracles.hpp"

using namespace cy4;
using namespace oracles;

namespace {

CY4Quiver complete(const QuiverWithPotential& q) { return cy4_complete(q.quiver, q.potential); }
CY4Quiver c4_js() { return graft(complete(c4_quiver()), {Frame::Kind::js, 2, 0}); }

}  // namespace

TEST_CASE("rank agrees with Gauss-Jordan") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    size_t r = 1 + rng() % 6, c = 1 + rng() % 6, k = rng() % 4;
    // low-rank products make the comparison non-trivial
    Matrix m = random_matrix(rng, r, k) * random_matrix(rng, k, c);
    if (k == 0) m = Matrix(r, c);
    CHECK(rank(m) == oracle_rank(m));
    CHECK(rank(m) <= k);
  }
  CHECK(rank(Matrix::identity(4)) == 4);
  CHECK(rank(Matrix(3, 0)) == 0);
}

TEST_CASE("euler forms") {
  auto pt = complete(point_quiver());
  for (int d = 0; d <= 4; ++d)
    for (int e = 0; e <= 4; ++e) CHECK(euler_form(pt, {{"0", d}}, {{"0", e}}) == 2 * d * e);
  auto c4 = complete(c4_quiver());
  for (int d = 0; d <= 5; ++d)
    for (int e = 0; e <= 5; ++e) CHECK(euler_form(c4, {{"0", d}}, {{"0", e}}) == 0);
  auto ex = complete(example_quiver());
  CHECK(euler_form(ex, {{"1", 1}}, {}) == 0);
  CHECK_THROWS_AS(euler_form(ex, {{"9", 1}}, {}), Error);
}

TEST_CASE("property: euler form symmetric and even") {
  std::mt19937 rng(5);
  std::vector<CY4Quiver> qs = {complete(example_quiver()), complete(c4_quiver()), complete(point_quiver()), c4_js(),
                               graft(complete(example_quiver()), {Frame::Kind::ms, 4, 2}),
                               graft(complete(point_quiver()), {Frame::Kind::flag, 4, 0})};
  for (const auto& c : qs)
    for (int t = 0; t < 50; ++t) {
      DimVector d, e;
      for (const auto& v : c.quiver.vertices()) {
        d[v] = static_cast<int>(rng() % 6);
        e[v] = static_cast<int>(rng() % 6);
      }
      CHECK(euler_form(c, d, e) == euler_form(c, e, d));
      CHECK(euler_form(c, d, d) % 2 == 0);
    }
}

TEST_CASE("chi_k") {
  CHECK(chi_k(1, 1, 0, 0, 0) == 2);
  CHECK(chi_k(0, 0, 7, 3, 4) == 7);
  CHECK(chi_k(1, 0, 7, 3, 4) == 7 - 4);
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    long long d = rng() % 4, e = rng() % 4, cab = static_cast<long long>(rng() % 20) - 10, a = rng() % 9, b = rng() % 9;
    // symmetric χ gives a symmetric χ_k
    CHECK(chi_k(d, e, cab, a, b) - chi_k(e, d, cab, b, a) == 0);
  }
}

TEST_CASE("ext complex of the zero representation") {
  auto c = complete(c4_quiver());
  Representation r;
  r.dims = {{"0", 2}};
  for (int i = 1; i <= 4; ++i) r.m["x" + std::to_string(i)] = Matrix(2, 2);
  auto x = ext_complex(c, r);
  CHECK(delta_squared_zero(x));
  for (const auto& d : x.delta) CHECK(d.is_zero());
  auto dims = ext_dims(x);
  for (size_t i = 0; i < 5; ++i) CHECK(dims[i] == x.dim[i]);
}

TEST_CASE("Hilb^1 tangent space") {
  auto c = c4_js();
  auto pts = monomial_fixed_points(1);
  REQUIRE(pts.size() == 1);
  auto x = ext_complex(c, fixed_point_representation(pts[0]));
  auto d = ext_dims(x);
  CHECK(d[0] == 1);
  CHECK(d[1] == 4);
  CHECK(d[2] == 6);
  CHECK(d[3] == 4);
  CHECK(d[4] == 1);
}

TEST_CASE("property: delta^2 = 0 and Euler characteristic on random representations") {
  std::mt19937 rng(17);
  auto c4 = complete(c4_quiver());
  auto js = c4_js();
  auto ex = complete(example_quiver());
  for (int t = 0; t < 30; ++t) {
    const size_t n = 1 + rng() % 3;
    // X_i polynomials in one matrix commute, so every relation holds.
    Matrix a = random_matrix(rng, n, n);
    Representation r;
    r.dims = {{"0", static_cast<int>(n)}};
    Matrix pw = Matrix::identity(n);
    std::vector<Matrix> powers;
    for (int k = 0; k < 3; ++k, pw = pw * a) powers.push_back(pw);
    for (int i = 1; i <= 4; ++i) {
      Matrix x(n, n);
      for (const auto& p : powers) x = x + p.scaled(Q(static_cast<int>(rng() % 5) - 2));
      r.m["x" + std::to_string(i)] = x;
    }
    auto xc = ext_complex(c4, r);
    CHECK(delta_squared_zero(xc));
    long long ec = 0;
    for (size_t i = 0; i < 5; ++i) ec += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(xc.dim[i]);
    CHECK(ec == euler_form(c4, r.dims, r.dims));
    auto dims = ext_dims(xc);
    long long eh = 0;
    for (size_t i = 0; i < 5; ++i) eh += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(dims[i]);
    CHECK(eh == ec);

    Representation rj = r;
    const int dinf = static_cast<int>(rng() % 2);
    rj.dims["inf"] = dinf;
    rj.m["j_0"] = random_matrix(rng, n, static_cast<size_t>(dinf));
    auto xj = ext_complex(js, rj);
    CHECK(delta_squared_zero(xj));
    long long ej = 0;
    for (size_t i = 0; i < 5; ++i) ej += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(xj.dim[i]);
    CHECK(ej == euler_form(js, rj.dims, rj.dims));

    // Example quiver with e1 = e3 = 0 satisfies e1∘e4 = e3∘e2 = ... = 0.
    Representation re;
    for (const char* v : {"1", "2", "3", "4"}) re.dims[v] = 1 + static_cast<int>(rng() % 3);
    auto shape = [&](const std::string& e) {
      const Edge& ed = ex.quiver.edge(e);
      return std::pair<size_t, size_t>(re.dims[ed.head], re.dims[ed.tail]);
    };
    for (const char* e : {"e1", "e3"}) re.m[e] = Matrix(shape(e).first, shape(e).second);
    for (const char* e : {"e2", "e4"}) re.m[e] = random_matrix(rng, shape(e).first, shape(e).second);
    auto xe = ext_complex(ex, re);
    CHECK(delta_squared_zero(xe));
    long long ee = 0;
    for (size_t i = 0; i < 5; ++i) ee += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(xe.dim[i]);
    CHECK(ee == euler_form(ex, re.dims, re.dims));
  }
}

TEST_CASE("relations are enforced") {
  auto c4 = complete(c4_quiver());
  Representation r;
  r.dims = {{"0", 2}};
  Matrix a(2, 2), b(2, 2);
  a(0, 1) = 1;
  b(1, 0) = 1;
  r.m = {{"x1", a}, {"x2", b}, {"x3", Matrix(2, 2)}, {"x4", Matrix(2, 2)}};
  CHECK_THROWS_AS(ext_complex(c4, r), Error);
  r.m["x2"] = Matrix(3, 2);
  CHECK_THROWS_AS(ext_complex(c4, r), Error);
}

TEST_CASE("fixed point counts against the height-array oracle") {
  const long long expected[] = {1, 4, 10, 26, 59, 140};
  for (int n = 1; n <= 6; ++n) {
    auto pts = monomial_fixed_points(n);
    CHECK(static_cast<long long>(pts.size()) == oracle_solid_partitions(n));
    CHECK(static_cast<long long>(pts.size()) == expected[n - 1]);
  }
  CHECK_THROWS_AS(monomial_fixed_points(9), Error);
  try {
    monomial_fixed_points(9);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::resource);
  }
}

TEST_CASE("fixed points: cyclic, commuting, Serre-symmetric") {
  auto js = c4_js();
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : monomial_fixed_points(n)) {
      Representation r = fixed_point_representation(s);
      std::vector<Matrix> xs;
      for (int i = 1; i <= 4; ++i) xs.push_back(r.m.at("x" + std::to_string(i)));
      CHECK(is_cyclic(xs, r.m.at("j_0")));
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) CHECK((xs[i] * xs[j] - xs[j] * xs[i]).is_zero());
      auto d = ext_dims(ext_complex(js, r));
      for (size_t i = 0; i < 5; ++i) CHECK(d[i] == d[4 - i]);
      CHECK(d[0] == 1);
    }
}

TEST_CASE("is_cyclic") {
  CHECK(is_cyclic({}, Matrix(0, 1)));
  std::vector<Matrix> xs(4, Matrix(2, 2));
  xs[0](1, 0) = 1;
  Matrix v(2, 1);
  CHECK_FALSE(is_cyclic(xs, v));
  v(0, 0) = 1;
  CHECK(is_cyclic(xs, v));
  Matrix w(2, 1);
  w(1, 0) = 1;
  CHECK_FALSE(is_cyclic(xs, w));
}

TEST_CASE("phases") {
  StabilityData s{{Q(1), Q(2)}, {Q(1, 2)}, {1, 1}};
  CHECK(phase(s, {3}, {0, 0}).infinite);
  CHECK(phase(s, {0}, {1, 1}) == Phase{false, Q(3, 2)});
  CHECK(phase(s, {2}, {1, 0}) == Phase{false, Q(2)});
  StabilityData z{{Q(0)}, {Q(0)}, {1}};
  CHECK(phase(z, {0}, {1}) == Phase{false, Q(0)});
  StabilityData bad{{Q(0)}, {}, {0}};
  CHECK_THROWS_AS(phase(bad, {}, {1}), Error);
  CHECK(Phase{false, Q(100)} < Phase{true, 0});
  CHECK(c4_tilde_phase(Q(1), 1, 0).infinite);
  CHECK(c4_tilde_phase(Q(2), 1, 3) == Phase{false, Q(1, 2)});
  CHECK(c4_tilde_phase(Q(2), 1, 3) > c4_tilde_phase(Q(2), 1, 4));
  check_mu({Q(1, 2), Q(1, 4), Q(-1, 2)}, true);
  CHECK_THROWS_AS(check_mu({Q(1, 4), Q(1, 2)}, false), Error);
  CHECK_THROWS_AS(check_mu({Q(1, 2), Q(1, 2)}, true), Error);
}
