// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
//
// Independent reference computations shared by the unit tests and the
// acceptance runner. None of these call the library routine they check.
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cy4/lie.hpp"
#include "cy4/linalg.hpp"
#include "cy4/quiver.hpp"
#include "cy4/series.hpp"
#include "cy4/toy.hpp"

namespace oracles {

using namespace cy4;

// Independent d² oracle: words as plain vectors, Leibniz written out from scratch.
using Word = std::vector<std::string>;
inline std::map<Word, Q> oracle_d(const CY4Quiver& c, const std::map<Word, Q>& x) {
  std::map<Word, Q> out;
  for (const auto& [w, coeff] : x) {
    for (size_t i = 0; i < w.size(); ++i) {
      int after = 0;
      for (size_t j = i + 1; j < w.size(); ++j) after += c.quiver.edge(w[j]).degree;
      Q s = (after % 2 == 0) ? coeff : Q(-coeff);
      for (const auto& [p, dc] : c.d.at(w[i]).terms()) {
        Word nw(w.begin(), w.begin() + static_cast<long>(i));
        nw.insert(nw.end(), p.edges.begin(), p.edges.end());
        nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 1, w.end());
        out[nw] += s * dc;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline bool oracle_d_squared_zero(const CY4Quiver& c, std::string* witness) {
  for (const Edge& e : c.quiver.edges()) {
    std::map<Word, Q> x;
    for (const auto& [p, k] : c.d.at(e.name).terms()) x[p.edges] += k;
    if (!oracle_d(c, x).empty()) {
      if (witness) *witness = e.name;
      return false;
    }
  }
  return true;
}


// Plain Gauss-Jordan over Q; independent of the Bareiss path.
inline size_t oracle_rank(Matrix m) {
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Q f = m(i, c) / m(r, c);
      for (size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

inline Matrix random_matrix(std::mt19937& rng, size_t r, size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> u(lo, hi);
  Matrix m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m(i, j) = Q(u(rng), 1 + static_cast<int>(rng() % 2));
  return m;
}

// Solid partitions as 3D arrays of heights, nonincreasing along each axis.
inline long long oracle_solid_partitions(int n) {
  std::vector<std::array<int, 3>> pos;
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n; ++j)
      for (int k = 0; i + j + k < n; ++k) pos.push_back({i, j, k});
  std::sort(pos.begin(), pos.end());
  std::map<std::array<int, 3>, int> h;
  auto height = [&](int i, int j, int k) -> int {
    if (i < 0 || j < 0 || k < 0) return n;
    auto it = h.find({i, j, k});
    return it == h.end() ? 0 : it->second;
  };
  std::function<long long(size_t, int)> go = [&](size_t idx, int left) -> long long {
    if (left == 0) return 1;
    if (idx == pos.size()) return 0;
    auto [i, j, k] = pos[idx];
    int cap = std::min({height(i - 1, j, k), height(i, j - 1, k), height(i, j, k - 1), left});
    long long total = 0;
    for (int v = 0; v <= cap; ++v) {
      h[{i, j, k}] = v;
      total += go(idx + 1, left - v);
    }
    h.erase({i, j, k});
    return total;
  };
  return go(0, n);
}


// Leibniz-formula determinant; independent of the elimination in det().
inline Q leibniz_det(const Matrix& m) {
  const size_t n = m.rows();
  std::vector<size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Q total = 0;
  do {
    int sign = 1;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) sign = -sign;
    Q term = sign;
    for (size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}


// Power-series long division over Q: b with a·b = 1 mod t^n, a[0] != 0.
inline std::vector<Q> long_divide(const std::vector<Q>& a, int n) {
  std::vector<Q> b(n);
  for (int k = 0; k < n; ++k) {
    Q acc = k == 0 ? Q(1) : Q(0);
    for (int i = 1; i <= k && i < static_cast<int>(a.size()); ++i) acc -= a[i] * b[k - i];
    b[k] = acc / a[0];
  }
  return b;
}

// Coefficients of (q + t)^k.
inline std::vector<Q> binomial_poly(const Q& q, int k) {
  std::vector<Q> p{1};
  for (int j = 0; j < k; ++j) {
    std::vector<Q> r(p.size() + 1);
    for (size_t i = 0; i < p.size(); ++i) {
      r[i] += p[i] * q;
      r[i + 1] += p[i];
    }
    p = r;
  }
  return p;
}


inline ClassTable generator_table(int max_rank, const std::vector<long>& chis) {
  // Classes n = (n_1,n_2,n_3) with 1 <= Σn <= max_rank, χ additive.
  ClassTable t;
  for (long a = 0; a <= max_rank; ++a)
    for (long b = 0; a + b <= max_rank; ++b)
      for (long c = 0; a + b + c <= max_rank; ++c) {
        if (a + b + c == 0) continue;
        ClassVec v{a, b, c};
        t[v] = ClassInfo{"X" + class_string(v), a + b + c, a * chis[0] + b * chis[1] + c * chis[2], 0};
      }
  return t;
}


inline Poly pw(const Poly& x, int e) {
  Poly r(1);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

inline std::vector<long> distinct_roots(int r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  std::set<long> s;
  while (static_cast<int>(s.size()) < r) s.insert(d(rng));
  std::vector<long> v(s.begin(), s.end());
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

// c_k = e_k(a)
inline std::map<std::string, Q> chern_values(const std::vector<long>& a) {
  std::vector<Q> e(a.size() + 1);
  e[0] = 1;
  for (long x : a)
    for (size_t k = a.size(); k >= 1; --k) e[k] += e[k - 1] * x;
  std::map<std::string, Q> out;
  for (size_t k = 1; k <= a.size(); ++k) out["c" + std::to_string(k)] = e[k];
  return out;
}

// Splitting principle: p_*(f) = Σ_i f(h = -a_i) / Π_{j≠i}(a_j - a_i).
inline Q oracle_pushforward(const Poly& f, const std::vector<long>& a) {
  auto at = chern_values(a);
  Q sum = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    at["h"] = Q(-a[i]);
    Q den = 1;
    for (size_t j = 0; j < a.size(); ++j)
      if (j != i) den *= Q(a[j] - a[i]);
    sum += f.evaluate(at) / den;
  }
  return sum;
}

// All monomials h^e Π c_i^{k_i} of degree <= top.
inline std::vector<Poly> monomials(int r, int top) {
  std::vector<Poly> out;
  std::vector<Poly> base{Poly(1)};
  for (int i = 1; i <= r; ++i) {
    std::vector<Poly> next;
    for (const Poly& m : base)
      for (int k = 0; i * k <= top; ++k) next.push_back(m * pw(chern_class(i), k));
    base = next;
  }
  for (const Poly& m : base)
    for (int e = 0; e <= top; ++e) {
      Poly t = m * pw(hyperplane(), e);
      if (class_degree(t.terms().begin()->first) <= top) out.push_back(t);
    }
  return out;
}


// Matrix representation: letters -> random 3x3 matrices; Lie words evaluated by
// recursive commutators along a split computed here (rightmost Lyndon suffix).
struct MatRep {
  std::map<std::string, Matrix> m;
  explicit MatRep(std::uint64_t seed, const std::vector<std::string>& letters) {
    std::mt19937_64 rng(seed);
    for (const auto& l : letters) {
      Matrix a(3, 3);
      for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) a(i, j) = static_cast<int>(rng() % 7) - 3;
      m.emplace(l, a);
    }
  }
  Matrix word(const Word& w) const {
    if (w.size() == 1) return m.at(w[0]);
    for (size_t i = 1; i < w.size(); ++i) {
      Word v(w.begin() + static_cast<long>(i), w.end());
      if (is_lyndon(v)) {
        Matrix a = word(Word(w.begin(), w.begin() + static_cast<long>(i))), b = word(v);
        return a * b - b * a;
      }
    }
    throw std::logic_error("no Lyndon split of a Lyndon word");
  }
  Matrix eval(const LieExpr& e) const {
    Matrix r(3, 3);
    for (const auto& [w, c] : e.terms()) r = r + word(w).scaled(c);
    return r;
  }
};


// Matrix power series in q, coefficients 0..order.
using MatSeries = std::vector<Matrix>;

inline MatSeries mat_series_mul(const MatSeries& a, const MatSeries& b) {
  MatSeries r(a.size(), Matrix(3, 3));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; i + j < a.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

// exp(s) for s with zero constant term, by the truncated exponential sum.
inline MatSeries mat_series_exp(const MatSeries& s) {
  const size_t n = s.size();
  MatSeries r(n, Matrix(3, 3)), pw(n, Matrix(3, 3));
  r[0] = pw[0] = Matrix::identity(3);
  Q fact = 1;
  for (size_t k = 1; k < n; ++k) {
    pw = mat_series_mul(pw, s);
    fact *= Q(static_cast<long>(k));
    for (size_t i = 0; i < n; ++i) r[i] = r[i] + pw[i].scaled(Q(1) / fact);
  }
  return r;
}

// Ad_{exp(g)}(s) = exp(g) s exp(-g), evaluated in the matrix representation.
inline MatSeries oracle_adjoint(const MatSeries& g, const MatSeries& s) {
  MatSeries neg(g.size(), Matrix(3, 3));
  for (size_t i = 0; i < g.size(); ++i) neg[i] = g[i].scaled(Q(-1));
  return mat_series_mul(mat_series_mul(mat_series_exp(g), s), mat_series_exp(neg));
}

}  // namespace oracles
