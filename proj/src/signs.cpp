// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
#include "cy4/signs.hpp"

#include <random>

namespace cy4 {

// ------------------------------------------------------------------ GaussQ

GaussQ operator+(const GaussQ& a, const GaussQ& b) { return {a.re + b.re, a.im + b.im}; }
GaussQ operator-(const GaussQ& a, const GaussQ& b) { return {a.re - b.re, a.im - b.im}; }
GaussQ operator*(const GaussQ& a, const GaussQ& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussQ operator/(const GaussQ& a, const GaussQ& b) {
  Q n = b.re * b.re + b.im * b.im;
  if (n == 0) fail(ErrorKind::singular, "division by zero in Q(i)");
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

GaussQ pow(const GaussQ& a, int n) {
  if (n < 0) return GaussQ(1) / pow(a, -n);
  GaussQ r(1);
  for (int k = 0; k < n; ++k) r = r * a;
  return r;
}

std::string to_string(const GaussQ& z) {
  if (z.im == 0) return to_string(z.re);
  std::string im = to_string(z.im) + "*i";
  if (z.re == 0) return im;
  return to_string(z.re) + (z.im > 0 ? "+" : "") + im;
}

int wedge_reversal_sign(long long r) { return ((r * (r - 1) / 2) % 2 == 0) ? 1 : -1; }

// --------------------------------------------------------------- LineExpr

LineExpr LineExpr::prim(std::string label, int degree) {
  LineExpr l;
  l.kind_ = Kind::prim;
  l.label_ = std::move(label);
  l.degree_ = degree;
  return l;
}

LineExpr LineExpr::trivial(int rank) {
  LineExpr l;
  l.kind_ = Kind::trivial;
  l.degree_ = rank;
  return l;
}

LineExpr LineExpr::dual() const {
  LineExpr l;
  l.kind_ = Kind::dual;
  l.kids_.push_back(std::make_shared<const LineExpr>(*this));
  return l;
}

LineExpr LineExpr::operator*(const LineExpr& o) const {
  LineExpr l;
  l.kind_ = Kind::tensor;
  l.kids_.push_back(std::make_shared<const LineExpr>(*this));
  l.kids_.push_back(std::make_shared<const LineExpr>(o));
  return l;
}

int LineExpr::degree() const {
  switch (kind_) {
    case Kind::prim:
    case Kind::trivial: return degree_;
    case Kind::dual: return -kids_[0]->degree();
    case Kind::tensor: return kids_[0]->degree() + kids_[1]->degree();
  }
  return 0;
}

std::string LineExpr::str() const {
  switch (kind_) {
    case Kind::prim: return label_;
    case Kind::trivial: return "C_" + std::to_string(degree_);
    case Kind::dual: return "(" + kids_[0]->str() + ")*";
    case Kind::tensor: return kids_[0]->str() + " " + kids_[1]->str();
  }
  return {};
}

bool LineExpr::operator==(const LineExpr& o) const {
  if (kind_ != o.kind_ || label_ != o.label_ || degree_ != o.degree_ || kids_.size() != o.kids_.size()) return false;
  for (size_t i = 0; i < kids_.size(); ++i)
    if (!(*kids_[i] == *o.kids_[i])) return false;
  return true;
}

// ------------------------------------------------------------------ LineIso

namespace {
int koszul(long long a, long long b) { return ((a * b) % 2 == 0) ? 1 : -1; }
}  // namespace

LineIso identity_iso(const LineExpr& l) { return {l, l, GaussQ(1)}; }
LineIso sigma(const LineExpr& a, const LineExpr& b) { return {a * b, b * a, GaussQ(koszul(a.degree(), b.degree()))}; }
LineIso pairing(const LineExpr& l) { return {l * l.dual(), LineExpr::trivial(0), GaussQ(1)}; }
LineIso double_dual(const LineExpr& l) { return {l.dual().dual(), l, GaussQ(1)}; }
LineIso delta(const LineExpr& a, const LineExpr& b) { return {(a * b).dual(), b.dual() * a.dual(), GaussQ(1)}; }
LineIso inverse(const LineIso& f) {
  if (f.scalar.is_zero()) fail(ErrorKind::singular, "zero scalar is not an isomorphism");
  return {f.target, f.source, GaussQ(1) / f.scalar};
}
LineIso dual(const LineIso& f) { return {f.target.dual(), f.source.dual(), f.scalar}; }
LineIso tensor(const LineIso& f, const LineIso& g) {
  return {f.source * g.source, f.target * g.target, f.scalar * g.scalar};
}

LineIso compose(const LineIso& g, const LineIso& f) {
  if (!(f.target == g.source))
    fail(ErrorKind::structural, "non-composable isomorphisms: " + f.target.str() + " vs " + g.source.str());
  return {f.source, g.target, g.scalar * f.scalar};
}

GaussQ eval(const std::vector<LineIso>& chain) {
  if (chain.empty()) return GaussQ(1);
  LineIso acc = chain.front();
  for (size_t i = 1; i < chain.size(); ++i) acc = compose(chain[i], acc);
  return acc.scalar;
}

GaussQ double_dual_discrepancy(const LineExpr& l) {
  const LineExpr ld = l.dual();
  GaussQ a = eval({tensor(double_dual(l), identity_iso(ld)), pairing(l)});
  GaussQ b = eval({sigma(ld.dual(), ld), pairing(ld)});
  return a / b;
}

// ----------------------------------------------------- concrete determinants

namespace {

Matrix random_invertible(size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> u(-3, 3);
  for (;;) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m(i, j) = u(rng);
    if (det(m) != 0) return m;
  }
}

Matrix col_block(const Matrix& m, size_t c0, size_t c1) { return transpose(row_block(transpose(m), c0, c1)); }

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

}  // namespace

ExactSequence random_sequence(size_t k, size_t l, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m = random_invertible(k + l, rng);
  Matrix minv = inverse(m);
  Matrix n = random_invertible(l, rng);
  ExactSequence s;
  s.i = col_block(m, 0, k);
  s.p = n * row_block(minv, k, k + l);
  s.lifts = col_block(m, k, k + l) * inverse(n);
  return s;
}

ExactSequence swapped_split(const ExactSequence& s) {
  Matrix q = row_block(inverse(hstack(s.i, s.lifts)), 0, s.rk_u());
  return {s.lifts, q, s.i};
}

ExactSequence dual_sequence(const ExactSequence& s) {
  Matrix top = row_block(inverse(hstack(s.i, s.lifts)), 0, s.rk_u());
  return {transpose(s.p), transpose(s.i), transpose(top)};
}

Q epsilon_scalar(const ExactSequence& s) {
  if (!(s.p * s.i).is_zero() || !(s.p * s.lifts == Matrix::identity(s.rk_v())))
    fail(ErrorKind::structural, "sequence is not exact with the given lifts");
  Q d = det(hstack(s.i, s.lifts));
  if (d == 0) fail(ErrorKind::structural, "sequence is not exact");
  return Q(1) / d;
}

Q d_scalar(size_t rank) { return wedge_reversal_sign(static_cast<long long>(rank)); }

PentagonReport verify_pentagon(size_t k, size_t l, std::uint64_t seed) {
  const ExactSequence s = random_sequence(k, l, seed);
  const ExactSequence sd = dual_sequence(s);
  const int ik = static_cast<int>(k), il = static_cast<int>(l);
  const LineExpr du = LineExpr::prim("det(U)", ik), dv = LineExpr::prim("det(V)", il),
                 dw = LineExpr::prim("det(W)", ik + il);
  const LineExpr dus = LineExpr::prim("det(U*)", ik), dvs = LineExpr::prim("det(V*)", il),
                 dws = LineExpr::prim("det(W*)", ik + il);
  const LineIso d_u{dus, du.dual(), GaussQ(d_scalar(k))};
  const LineIso d_v{dvs, dv.dual(), GaussQ(d_scalar(l))};
  const LineIso d_w{dws, dw.dual(), GaussQ(d_scalar(k + l))};
  const LineIso eps{dw, du * dv, GaussQ(epsilon_scalar(s))};
  const LineIso eps_dual{dws, dvs * dus, GaussQ(epsilon_scalar(sd))};

  PentagonReport r;
  r.path_a = eval({tensor(d_v, d_u), inverse(delta(du, dv)), dual(eps)}).re;
  r.path_b = eval({inverse(eps_dual), d_w}).re;
  return r;
}

Q swap_compatibility(size_t k, size_t l, std::uint64_t seed) {
  const ExactSequence s = random_sequence(k, l, seed);
  const ExactSequence t = swapped_split(s);
  const LineExpr du = LineExpr::prim("det(U)", static_cast<int>(k)), dv = LineExpr::prim("det(V)", static_cast<int>(l));
  const LineExpr dw = LineExpr::prim("det(W)", static_cast<int>(k + l));
  const LineIso e_uv{dw, du * dv, GaussQ(epsilon_scalar(s))};
  const LineIso e_vu{dw, dv * du, GaussQ(epsilon_scalar(t))};
  return (eval({e_vu}) / eval({e_uv, sigma(du, dv)})).re;
}

// ------------------------------------------------------------ orientations

bool satisfies_orientation_condition(const Orientation& o) { return o.x * o.x * GaussQ(det(o.gram)) == GaussQ(1); }

Orientation induced_orientation(const Matrix& gram, const Matrix& iso) {
  const size_t n = iso.cols();
  if (gram.rows() != 2 * n || gram.cols() != 2 * n || iso.rows() != 2 * n)
    fail(ErrorKind::input, "isotropic subspace must have half the rank");
  if (!(transpose(iso) * gram * iso).is_zero()) fail(ErrorKind::structural, "subspace is not isotropic");
  // p(e)(v) = q(e, i v) identifies E/V with V*.
  Matrix p = transpose(iso) * gram;
  Matrix lifts = transpose(p) * inverse(p * transpose(p));
  Q d = det(hstack(iso, lifts));
  if (d == 0) fail(ErrorKind::structural, "degenerate pairing");
  GaussQ x = pow(GaussQ(0, -1), static_cast<int>(n)) * GaussQ(wedge_reversal_sign(static_cast<long long>(n)) * d);
  return {gram, x};
}

Matrix hyperbolic_gram(size_t n) {
  Matrix g(2 * n, 2 * n);
  for (size_t i = 0; i < n; ++i) g(i, n + i) = g(n + i, i) = 1;
  return g;
}

Orientation orientation_product(const Orientation& a, const Orientation& b) {
  return {block_diag(a.gram, b.gram), a.x * b.x};
}

GaussQ compare_dual(size_t n) {
  const Matrix g = hyperbolic_gram(n);
  const Matrix id = Matrix::identity(2 * n);
  const Orientation ov = induced_orientation(g, col_block(id, 0, n));
  const Orientation ovs = induced_orientation(g, col_block(id, n, 2 * n));
  return ovs.x / ov.x;
}

GaussQ compare_dual_random(size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Matrix m = random_invertible(2 * n, rng);
  const Matrix minv = inverse(m);
  const Matrix g = transpose(m) * hyperbolic_gram(n) * m;
  const Matrix id = Matrix::identity(2 * n);
  const Orientation ov = induced_orientation(g, minv * col_block(id, 0, n));
  const Orientation ovs = induced_orientation(g, minv * col_block(id, n, 2 * n));
  if (!satisfies_orientation_condition(ov) || !satisfies_orientation_condition(ovs))
    fail(ErrorKind::math, "induced orientation violates the orientation condition");
  return ovs.x / ov.x;
}

bool dual_orientation_identity(const Orientation& o) {
  const GaussQ s(wedge_reversal_sign(static_cast<long long>(o.gram.rows())));
  // (o*)^{-1} read through C ≅ C*, against d_E∘det(i_q)∘o
  return s / o.x == s * GaussQ(det(o.gram)) * o.x;
}

GaussQ ot_comparison(size_t t_ge, size_t t_le, size_t e_ge) {
  const Matrix g = block_diag(block_diag(hyperbolic_gram(t_ge), hyperbolic_gram(e_ge)), hyperbolic_gram(t_le));
  const size_t n = t_ge + e_ge + t_le;
  const Matrix id = Matrix::identity(2 * n);
  const size_t b2 = 2 * t_ge, b3 = 2 * t_ge + 2 * e_ge;
  auto cols = [&](std::vector<std::pair<size_t, size_t>> ranges) {
    Matrix m(2 * n, 0);
    for (auto [a, b] : ranges) m = hstack(m, col_block(id, a, b));
    return m;
  };
  // ours: T≥, (E≥)*, (T≤)*; the OT isotropic: T≥, T≤, E≥
  const Matrix ours = cols({{0, t_ge}, {b2 + e_ge, b3}, {b3 + t_le, 2 * n}});
  const Matrix ot = cols({{0, t_ge}, {b3, b3 + t_le}, {b2, b2 + e_ge}});
  return induced_orientation(g, ours).x / induced_orientation(g, ot).x;
}

}  // namespace cy4
