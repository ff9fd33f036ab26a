// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
#include "cy4/toy.hpp"

#include <cctype>
#include <sstream>

#include "cy4/signs.hpp"

namespace cy4 {

Poly chern_class(int i) {
  if (i < 0) return Poly();
  if (i == 0) return Poly(1);
  return Poly::sym("c" + std::to_string(i));
}
Poly hyperplane() { return Poly::sym("h"); }
Poly tau_var() { return Poly::sym("tau"); }
Poly z_var() { return Poly::sym("z"); }

int class_degree(const Mono& m) {
  int d = 0;
  for (const auto& [name, e] : m.sym) {
    if (name == "h" || name == "tau" || name == "z") {
      d += e;
    } else if (name.size() > 1 && name[0] == 'c' &&
               name.find_first_not_of("0123456789", 1) == std::string::npos) {
      d += std::stoi(name.substr(1)) * e;
    }
  }
  return d;
}

Poly truncate_degree(const Poly& p, int top) {
  Poly r;
  for (const auto& [m, c] : p.terms())
    if (class_degree(m) <= top) r.add(m, c);
  return r;
}

std::vector<Poly> segre(int rank, int top) {
  if (rank < 0 || top < 0) fail(ErrorKind::input, "segre needs rank >= 0 and truncation >= 0");
  std::vector<Poly> s(top + 1);
  s[0] = Poly(1);
  for (int k = 1; k <= top; ++k)
    for (int i = 1; i <= std::min(k, rank); ++i) s[k] = s[k] - chern_class(i) * s[k - i];
  return s;
}

namespace {

// h-exponent -> coefficient free of h
std::map<int, Poly> split_h(const Poly& x) {
  std::map<int, Poly> g;
  for (const auto& [m, c] : x.terms()) {
    Mono rest = m;
    int e = 0;
    if (auto it = rest.sym.find("h"); it != rest.sym.end()) {
      e = it->second;
      rest.sym.erase(it);
    }
    g[e].add(rest, c);
  }
  return g;
}

Poly power(const Poly& x, int e) {
  Poly r(1);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

void check_rank(int r) {
  if (r < 1) fail(ErrorKind::input, "projective bundle rank must be >= 1");
}

}  // namespace

Poly proj_normal_form(int r, const Poly& x) {
  check_rank(r);
  std::map<int, Poly> g = split_h(x);
  // Each step lowers the top h-degree, so the rewriting terminates.
  while (!g.empty() && g.rbegin()->first >= r) {
    const int k = g.rbegin()->first;
    const Poly a = g.rbegin()->second;
    g.erase(k);
    for (int i = 1; i <= r; ++i) g[k - i] = g[k - i] - chern_class(i) * a;
  }
  Poly out;
  for (const auto& [e, c] : g) out += c * power(hyperplane(), e);
  return out;
}

Poly proj_pushforward(int r, const Poly& x) {
  const auto g = split_h(proj_normal_form(r, x));
  auto it = g.find(r - 1);
  return it == g.end() ? Poly() : it->second;
}

Poly euler_relative_tangent(int r) {
  check_rank(r);
  Poly e;
  for (int k = 0; k < r; ++k) e += chern_class(k).scaled(Q(r - k)) * power(hyperplane(), r - 1 - k);
  return e;
}

std::string to_string(const PSeriesVector& v) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, c] : v) {
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*p^" << j;
  }
  if (first) os << "0";
  return os.str();
}

PSeriesVector ezt_convolve(const Poly& v, int top) {
  PSeriesVector out;
  for (int j = 0; j <= top; ++j) out[j] = power(z_var(), j) * v;
  return out;
}

PSeriesVector cap_tau(const PSeriesVector& p, const std::vector<Poly>& f) {
  PSeriesVector out;
  for (const auto& [i, c] : p) {
    if (i < 0) fail(ErrorKind::input, "negative p-exponent");
    for (int n = 0; n < static_cast<int>(f.size()) && n <= i; ++n) {
      const Poly t = c * f[n];
      if (!t.is_zero()) out[i - n] += t;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

LaurentSeries z_poly_to_series(const Poly& p, int nil_bound) {
  LaurentSeries s(Regime::global, nil_bound);
  for (const auto& [m, c] : p.terms()) {
    Mono rest = m;
    int e = 0;
    if (auto it = rest.sym.find("z"); it != rest.sym.end()) {
      e = it->second;
      rest.sym.erase(it);
    }
    Poly coeff;
    coeff.add(rest, c);
    s = s + LaurentSeries::z_power(e, Regime::global, nil_bound).scaled(RatFun(coeff));
  }
  return s;
}

// ------------------------------------------------------ bracket pushdown

bool BracketPushdownReport::ok() const {
  return tangent_matches && tail_below_minus_one && geometric == expected && step2 == expected &&
         step3 == expected;
}

BracketPushdownReport bracket_pushdown_check(int r, int a) {
  if (r < 1 || r > 4) fail(ErrorKind::input, "bracket pushdown check needs 1 <= r <= 4");
  if (a % 2 != 0) fail(ErrorKind::input, "bracket pushdown check models even degrees only");
  BracketPushdownReport rep;
  rep.r = r;
  rep.a = a;
  const Poly v = Poly::sym("v");
  const int sign = (a * r) % 2 == 0 ? 1 : -1;
  rep.expected = v.scaled(Q(sign * r));

  // Geometric side: the JS fiber is P^{r-1}; cap with e(T_π) and push down.
  rep.geometric = (proj_pushforward(r, euler_relative_tangent(r)) * v).scaled(Q(sign));

  // Pulled back along the action map, h becomes τ and e(T_π) becomes
  // c_{r-1} of the lines τ + a_i, i.e. d/dτ(τ^r c_{1/τ}(V)).
  std::vector<Poly> f(r);
  for (int n = 0; n < r; ++n) f[n] = chern_class(r - 1 - n).scaled(Q(n + 1));
  Poly f_tau;
  for (int n = 0; n < r; ++n) f_tau += f[n] * power(tau_var(), n);
  Poly pulled;
  const Poly et = euler_relative_tangent(r);
  for (const auto& [m, c] : et.terms()) {
    Mono mm = m;
    if (auto it = mm.sym.find("h"); it != mm.sym.end()) {
      mm.sym["tau"] = it->second;
      mm.sym.erase(it);
    }
    pulled.add(mm, c);
  }
  rep.tangent_matches = pulled == f_tau;

  // Step (2): e^{zT} v capped with f(τ), projected to p^0 (T-translates die
  // after the pushdown), divided by z^r c_{1/z}(V).
  const int order = r + 4;
  const PSeriesVector capped = cap_tau(ezt_convolve(v, order + r), f);
  const Poly y0 = capped.count(0) ? capped.at(0) : Poly();
  Poly denom_poly;
  for (int i = 0; i <= r; ++i) denom_poly += chern_class(i) * power(z_var(), r - i);
  const LaurentSeries denom_inv = z_poly_to_series(denom_poly).inverse(order);
  const LaurentSeries integrand2 = z_poly_to_series(y0) * denom_inv;
  rep.step2 = residue(integrand2).num().scaled(Q(sign));

  // Step (3): the closed form χ z^{χ-1} c_{1/z}(V) / (z^χ c_{1/z}(V)), where the
  // numerator is (χ/z)·z^χ c_{1/z}(V).
  const LaurentSeries integrand3 = z_poly_to_series(denom_poly * v.scaled(Q(r))) *
                                   LaurentSeries::z_power(-1, Regime::global) * denom_inv;
  rep.step3 = residue(integrand3).num().scaled(Q(sign));

  // The two integrands differ by d/dz log c_{1/z}(V), which only has z^{≤-2}.
  const LaurentSeries diff = integrand2 - integrand3;
  rep.tail_below_minus_one = true;
  for (const auto& [e, c] : diff.z_terms())
    if (e >= -1 && !c.is_zero()) rep.tail_below_minus_one = false;
  return rep;
}

// ------------------------------------------------------ fixed loci

std::string translate_token(const std::string& a, int j) {
  if (j == 0) return a;
  return "(T^" + std::to_string(j) + " " + a + ")";
}

std::string FlagResidueReport::str() const {
  std::ostringstream os;
  os << "locus1 sign " << sign1 << " residue " << locus1.str() << "\n";
  os << "locus2 sign " << sign2 << " residue " << locus2.str() << "\n";
  os << "locus3 residue " << locus3.str() << "\n";
  os << "total " << total.str() << "\n";
  return os.str();
}

FlagResidueReport fixed_locus_residues(const FlagLocusSpec& spec) {
  if (spec.order < 1) fail(ErrorKind::input, "order must be positive");
  if (spec.epsilon != 1 && spec.epsilon != -1) fail(ErrorKind::input, "epsilon must be +1 or -1");
  for (const EqKClass* k : {&spec.n1, &spec.n2})
    if (has_zero_weight(*k)) fail(ErrorKind::input, "normal bundle has a weight-zero summand");
  const int nb = spec.order;
  FlagResidueReport rep;

  // Loci 1 and 2 sit on opposite sides; their positive halves are dual, so the
  // orientations compare by o_{V*}/o_V = (-1)^{Rk V}.
  rep.sign1 = 1;
  const GaussQ s2 = compare_dual(static_cast<size_t>(total_rank(spec.n2)));
  rep.sign2 = s2.re > 0 ? 1 : -1;
  const int ord = 2 * nb + total_rank(spec.n1) + total_rank(spec.n2) + 2;
  rep.locus1 = residue(localize(spec.a, spec.n1, Regime::global, ord, nb).series) * RatFun(rep.sign1);
  rep.locus2 = residue(localize(spec.a_prime, spec.n2, Regime::global, ord, nb).series) * RatFun(rep.sign2);

  // Locus 3: (e^{zT} ⊗ id)(A1 ⊠ A2) / (z^{Rk Θ} c_{1/z}(Θ)), translations on the first slot only.
  const int rk = total_rank(spec.theta);
  const int top = spec.project_translations ? 0 : nb + std::max(rk, 0) + 1;
  Poly x;
  for (int j = 0; j <= top; ++j)
    x += power(z_var(), j) * Poly::sym(translate_token(spec.a1, j)) * Poly::sym(spec.a2);
  EqKClass inv = spec.theta;
  for (auto& t : inv) t.mult = -t.mult;
  const LaurentSeries d = total_chern(inv, Regime::global, top + std::abs(rk) + 4, nb);
  rep.locus3 = residue(z_poly_to_series(x, nb) * d) * RatFun(spec.epsilon);
  rep.total = rep.locus1 + rep.locus2 + rep.locus3;
  return rep;
}

FlagLocusSpec self_dual_toy() {
  FlagLocusSpec s;
  s.a = "A";
  s.a_prime = "A";
  const Poly b = Poly::nil("b");
  const Poly th = Poly::nil("theta");
  s.n1 = {EqTerm{1, 1, {}, 1, {b}}};
  s.n2 = {EqTerm{1, 1, {}, 1, {-b}}};
  s.theta = {EqTerm{1, 1, {}, 1, {th}}, EqTerm{1, 1, {}, 1, {-th}}};
  s.project_translations = true;
  return s;
}

}  // namespace cy4

namespace cy4 {

namespace {

class ClassExprParser {
 public:
  explicit ClassExprParser(const std::string& s) : s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (i_ != s_.size()) error("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::input, "class expression \"" + s_ + "\": " + msg + " at offset " + std::to_string(i_));
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  Poly expr() {
    Poly p = eat('-') ? -term() : term();
    for (;;) {
      if (eat('+')) {
        p = p + term();
      } else if (eat('-')) {
        p = p - term();
      } else {
        return p;
      }
    }
  }
  Poly term() {
    Poly p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }
  Poly factor() {
    Poly b = base();
    if (eat('^')) {
      skip();
      const size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) error("expected a nonnegative integer exponent");
      const int e = std::stoi(s_.substr(start, i_ - start));
      if (e > 64) error("exponent too large");
      Poly r(1);
      for (int k = 0; k < e; ++k) r = r * b;
      return r;
    }
    return b;
  }
  Poly base() {
    skip();
    if (i_ >= s_.size()) error("unexpected end");
    if (eat('(')) {
      Poly p = expr();
      if (!eat(')')) error("expected ')'");
      return p;
    }
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const size_t start = i_;
      while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '/')) ++i_;
      return Poly(parse_rational(s_.substr(start, i_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      return Poly::sym(s_.substr(start, i_ - start));
    }
    error("unexpected character");
  }

  const std::string& s_;
  size_t i_ = 0;
};

}  // namespace

Poly parse_class_expr(const std::string& s) { return ClassExprParser(s).parse(); }

}  // namespace cy4
