// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
#include "cy4/rep.hpp"

#include <algorithm>
#include <set>

namespace cy4 {

int dim_at(const DimVector& d, const std::string& v) {
  auto it = d.find(v);
  return it == d.end() ? 0 : it->second;
}

void check_dims(const CY4Quiver& c, const DimVector& d) {
  for (const auto& [v, n] : d) {
    if (!c.quiver.has_vertex(v)) fail(ErrorKind::input, "dimension vector names unknown vertex \"" + v + "\"");
    if (n < 0) fail(ErrorKind::input, "negative dimension at vertex \"" + v + "\"");
  }
}

long long euler_form(const CY4Quiver& c, const DimVector& d, const DimVector& e) {
  check_dims(c, d);
  check_dims(c, e);
  long long chi = 0;
  for (const auto& v : c.quiver.vertices()) chi += 1LL * dim_at(d, v) * dim_at(e, v);
  for (const Edge& f : c.quiver.edges()) {
    const long long t = 1LL * dim_at(d, f.tail) * dim_at(e, f.head);
    chi += ((1 + f.degree) % 2 == 0) ? t : -t;
  }
  return chi;
}

long long chi_k(long long d, long long e, long long chi_ab, long long chi_alpha_k, long long chi_beta_k) {
  return chi_ab - d * chi_beta_k - e * chi_alpha_k + 2 * d * e;
}

Matrix evaluate_path(const CY4Quiver& c, const Representation& r, const Path& p) {
  if (p.is_lazy()) return Matrix::identity(static_cast<size_t>(dim_at(r.dims, p.vertex)));
  Matrix acc = Matrix::identity(static_cast<size_t>(dim_at(r.dims, c.quiver.edge(p.edges.front()).tail)));
  for (const auto& e : p.edges) {
    auto it = r.m.find(e);
    if (it == r.m.end()) fail(ErrorKind::input, "no matrix for edge \"" + e + "\"");
    acc = it->second * acc;
  }
  return acc;
}

void check_representation(const CY4Quiver& c, const Representation& r) {
  check_dims(c, r.dims);
  for (const auto& [name, m] : r.m) {
    const Edge& e = c.quiver.edge(name);
    if (e.degree != 0) fail(ErrorKind::input, "matrix supplied for edge \"" + name + "\" of nonzero degree");
    if (m.rows() != static_cast<size_t>(dim_at(r.dims, e.head)) || m.cols() != static_cast<size_t>(dim_at(r.dims, e.tail)))
      fail(ErrorKind::input, "matrix for \"" + name + "\" has the wrong shape");
  }
  for (const Edge& e : c.quiver.edges())
    if (e.degree == 0 && !r.m.count(e.name)) fail(ErrorKind::input, "missing matrix for edge \"" + e.name + "\"");
  for (const Edge& f : c.quiver.edges()) {
    if (f.degree != -1) continue;
    const size_t h = static_cast<size_t>(dim_at(r.dims, f.head)), t = static_cast<size_t>(dim_at(r.dims, f.tail));
    Matrix sum(h, t);
    for (const auto& [p, coeff] : differential(c, f.name).terms()) sum = sum + evaluate_path(c, r, p).scaled(coeff);
    if (!sum.is_zero()) fail(ErrorKind::math, "representation violates the relation d(" + f.name + ") = 0");
  }
}

namespace {

struct Layout {
  std::vector<size_t> offset;
  size_t total = 0;
};

Layout layout(const std::vector<std::pair<size_t, size_t>>& shapes) {
  Layout l;
  for (auto [h, t] : shapes) {
    l.offset.push_back(l.total);
    l.total += h * t;
  }
  return l;
}

// Adds the linear map X ↦ c·A X B (X of shape h_g x t_g, row-major) into delta.
void add_sandwich(Matrix& delta, size_t row0, size_t col0, const Matrix& a, const Matrix& b, const Q& c) {
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (size_t l = 0; l < b.rows(); ++l)
        for (size_t j = 0; j < b.cols(); ++j) {
          if (b(l, j) == 0) continue;
          delta(row0 + i * b.cols() + j, col0 + k * b.rows() + l) += c * a(i, k) * b(l, j);
        }
    }
}

}  // namespace

ExtComplex ext_complex(const CY4Quiver& c, const Representation& r) {
  check_representation(c, r);
  const GradedQuiver& q = c.quiver;
  ExtComplex x;
  std::array<std::vector<std::pair<size_t, size_t>>, 5> shapes;
  for (const auto& v : q.vertices()) {
    x.blocks[0].push_back(v);
    const size_t n = static_cast<size_t>(dim_at(r.dims, v));
    shapes[0].emplace_back(n, n);
  }
  for (const Edge& f : q.edges()) {
    const int i = 1 - f.degree;
    x.blocks[static_cast<size_t>(i)].push_back(f.name);
    shapes[static_cast<size_t>(i)].emplace_back(dim_at(r.dims, f.head), dim_at(r.dims, f.tail));
  }
  std::array<Layout, 5> lay;
  for (size_t i = 0; i < 5; ++i) {
    lay[i] = layout(shapes[i]);
    x.dim[i] = lay[i].total;
  }
  for (size_t i = 0; i < 4; ++i) x.delta[i] = Matrix(x.dim[i + 1], x.dim[i]);

  std::map<std::string, size_t> vidx;
  for (size_t k = 0; k < x.blocks[0].size(); ++k) vidx[x.blocks[0][k]] = k;
  // δ⁰(φ)_e = φ_h m_e - m_e φ_t
  for (size_t k = 0; k < x.blocks[1].size(); ++k) {
    const Edge& e = q.edge(x.blocks[1][k]);
    const Matrix& m = r.m.at(e.name);
    const size_t hv = vidx[e.head], tv = vidx[e.tail];
    add_sandwich(x.delta[0], lay[1].offset[k], lay[0].offset[hv], Matrix::identity(m.rows()), m, 1);
    add_sandwich(x.delta[0], lay[1].offset[k], lay[0].offset[tv], m, Matrix::identity(m.cols()), -1);
  }
  // Higher δ: linearize d(f) at m in each occurrence of a single non-degree-0 edge g.
  for (size_t i = 1; i < 4; ++i) {
    std::map<std::string, size_t> gidx;
    for (size_t k = 0; k < x.blocks[i].size(); ++k) gidx[x.blocks[i][k]] = k;
    for (size_t k = 0; k < x.blocks[i + 1].size(); ++k) {
      const std::string& f = x.blocks[i + 1][k];
      for (const auto& [p, coeff] : differential(c, f).terms()) {
        const auto& w = p.edges;
        for (size_t pos = 0; pos < w.size(); ++pos) {
          auto g = gidx.find(w[pos]);
          if (g == gidx.end()) continue;
          bool rest_degree_zero = true;
          for (size_t j = 0; j < w.size(); ++j)
            if (j != pos && q.edge(w[j]).degree != 0) rest_degree_zero = false;
          if (!rest_degree_zero) continue;
          const Edge& ge = q.edge(w[pos]);
          Path after = pos + 1 == w.size() ? Path::lazy(ge.head) : Path::of({w.begin() + static_cast<long>(pos) + 1, w.end()});
          Path before = pos == 0 ? Path::lazy(ge.tail) : Path::of({w.begin(), w.begin() + static_cast<long>(pos)});
          add_sandwich(x.delta[i], lay[i + 1].offset[k], lay[i].offset[g->second], evaluate_path(c, r, after),
                       evaluate_path(c, r, before), coeff);
        }
      }
    }
  }
  return x;
}

std::array<size_t, 5> ext_dims(const ExtComplex& x) {
  std::array<size_t, 4> rk{};
  for (size_t i = 0; i < 4; ++i) rk[i] = rank(x.delta[i]);
  std::array<size_t, 5> out{};
  for (size_t i = 0; i < 5; ++i) out[i] = x.dim[i] - (i < 4 ? rk[i] : 0) - (i > 0 ? rk[i - 1] : 0);
  return out;
}

bool delta_squared_zero(const ExtComplex& x) {
  for (size_t i = 0; i + 1 < 4; ++i)
    if (!(x.delta[i + 1] * x.delta[i]).is_zero()) return false;
  return true;
}

// ------------------------------------------------------------------ phases

std::strong_ordering Phase::operator<=>(const Phase& o) const {
  if (infinite || o.infinite) return static_cast<int>(infinite) <=> static_cast<int>(o.infinite);
  int c = cmp(value, o.value);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string to_string(const Phase& p) { return p.infinite ? "inf" : to_string(p.value); }

void check_mu(const std::vector<Q>& mu, bool has_v0) {
  const size_t n = mu.size() - (has_v0 ? 1 : 0);
  if (has_v0 && mu.empty()) fail(ErrorKind::input, "missing mu_0");
  Q prev = 1;
  for (size_t i = 0; i < n; ++i) {
    if (!(mu[i] < prev) || !(mu[i] > 0)) fail(ErrorKind::input, "mu must satisfy 1 > mu_1 > ... > mu_{r-1} > 0");
    prev = mu[i];
  }
  if (has_v0 && !(mu.back() < 0 && mu.back() > -1)) fail(ErrorKind::input, "mu_0 must lie in (-1, 0)");
}

Phase phase(const StabilityData& s, const std::vector<long long>& framing, const std::vector<long long>& alpha) {
  if (alpha.size() != s.lambda.size() || alpha.size() != s.rk.size() || framing.size() != s.mu.size())
    fail(ErrorKind::input, "class or framing vector has the wrong length");
  bool zero = std::all_of(alpha.begin(), alpha.end(), [](long long a) { return a == 0; });
  if (zero) return Phase{true, 0};
  Q num = 0;
  long long rk = 0;
  for (size_t i = 0; i < alpha.size(); ++i) {
    num += s.lambda[i] * Q(static_cast<long>(alpha[i]));
    rk += s.rk[i] * alpha[i];
  }
  for (size_t i = 0; i < framing.size(); ++i) num += s.mu[i] * Q(static_cast<long>(framing[i]));
  if (rk <= 0) fail(ErrorKind::input, "rank of a nonzero class must be positive");
  return Phase{false, num / Q(static_cast<long>(rk))};
}

Phase c4_tilde_phase(const Q& t, long long d_inf, long long d0) {
  if (d0 == 0) return Phase{true, 0};
  return Phase{false, t * Q(static_cast<long>(d_inf)) / Q(static_cast<long>(d_inf + d0))};
}

bool is_cyclic(const std::vector<Matrix>& x, const Matrix& v) {
  const size_t n = v.rows();
  if (n == 0) return true;
  for (const Matrix& m : x)
    if (m.rows() != n || m.cols() != n) fail(ErrorKind::input, "operators must be square of the vector's size");
  // Grow a spanning set breadth-first; stop once the span is saturated.
  std::vector<Matrix> basis;
  auto span_rank = [&](const std::vector<Matrix>& vs) {
    Matrix a(vs.size(), n);
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = 0; j < n; ++j) a(i, j) = vs[i](j, 0);
    return rank(a);
  };
  std::vector<Matrix> frontier{v};
  size_t r = 0;
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const Matrix& w : frontier) {
      basis.push_back(w);
      size_t nr = span_rank(basis);
      if (nr == r) {
        basis.pop_back();
        continue;
      }
      r = nr;
      for (const Matrix& m : x) next.push_back(m * w);
    }
    frontier = std::move(next);
  }
  return r == n;
}

// ------------------------------------------------------------- fixed points

std::vector<Staircase> monomial_fixed_points(int n, int max_n) {
  if (n < 0) fail(ErrorKind::input, "n must be nonnegative");
  if (n > max_n) fail(ErrorKind::resource, "n = " + std::to_string(n) + " exceeds the bound " + std::to_string(max_n));
  std::set<Staircase> level;
  level.insert(Staircase{});
  for (int k = 0; k < n; ++k) {
    std::set<Staircase> next;
    for (const Staircase& s : level) {
      std::set<Cell> cells(s.begin(), s.end());
      std::set<Cell> candidates;
      if (s.empty()) candidates.insert(Cell{0, 0, 0, 0});
      for (const Cell& c : s)
        for (int i = 0; i < 4; ++i) {
          Cell d = c;
          ++d[static_cast<size_t>(i)];
          candidates.insert(d);
        }
      for (const Cell& d : candidates) {
        if (cells.count(d)) continue;
        bool addable = true;
        for (int i = 0; i < 4 && addable; ++i) {
          if (d[static_cast<size_t>(i)] == 0) continue;
          Cell e = d;
          --e[static_cast<size_t>(i)];
          addable = cells.count(e) > 0;
        }
        if (!addable) continue;
        Staircase t = s;
        t.push_back(d);
        std::sort(t.begin(), t.end());
        next.insert(std::move(t));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

Representation fixed_point_representation(const Staircase& s) {
  Representation r;
  const size_t n = s.size();
  r.dims = {{"inf", 1}, {"0", static_cast<int>(n)}};
  std::map<Cell, size_t> idx;
  for (size_t i = 0; i < n; ++i) idx[s[i]] = i;
  for (int v = 0; v < 4; ++v) {
    Matrix x(n, n);
    for (size_t i = 0; i < n; ++i) {
      Cell c = s[i];
      ++c[static_cast<size_t>(v)];
      auto it = idx.find(c);
      if (it != idx.end()) x(it->second, i) = 1;
    }
    r.m["x" + std::to_string(v + 1)] = x;
  }
  Matrix j(n, 1);
  auto one = idx.find(Cell{0, 0, 0, 0});
  if (one != idx.end()) j(one->second, 0) = 1;
  r.m["j_0"] = j;
  return r;
}

}  // namespace cy4
