// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
#include "cy4/series.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace cy4 {

namespace {

void merge_into(std::map<std::string, int>& a, const std::map<std::string, int>& b) {
  for (const auto& [k, v] : b) {
    int& e = a[k];
    e += v;
    if (e == 0) a.erase(k);
  }
}

int total(const std::map<std::string, int>& m) {
  int d = 0;
  for (const auto& [k, v] : m) d += v;
  return d;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r = a;
  merge_into(r.lam, b.lam);
  merge_into(r.nil, b.nil);
  merge_into(r.sym, b.sym);
  return r;
}

void append_factors(std::ostringstream& os, const std::map<std::string, int>& m, bool& first) {
  for (const auto& [k, v] : m) {
    if (!first) os << '*';
    first = false;
    os << k;
    if (v != 1) os << '^' << v;
  }
}

// Exact quotient p / L, or false when L does not divide p.
bool divide_exact(const Poly& p, const LinearForm& l, Poly& q) {
  const std::string& v = l.coeff.begin()->first;
  const Q lead(l.coeff.begin()->second);
  const Poly lp = l.poly();
  Poly r = p;
  q = Poly();
  while (!r.is_zero()) {
    const Mono* best = nullptr;
    Q bc;
    int bd = -1;
    for (const auto& [m, c] : r.terms()) {
      auto it = m.lam.find(v);
      int d = it == m.lam.end() ? 0 : it->second;
      if (d > bd) bd = d, best = &m, bc = c;
    }
    if (bd == 0) return false;
    Mono m2 = *best;
    if (--m2.lam[v] == 0) m2.lam.erase(v);
    Poly step;
    step.add(m2, bc / lead);
    q += step;
    r = r - step * lp;
  }
  return true;
}

int sat_add(int a, int b) {
  if (a == kExact || b == kExact) return kExact;
  return a + b;
}

}  // namespace

// ------------------------------------------------------------------- Poly

int Mono::nil_degree() const { return total(nil); }
int Mono::lam_degree() const { return total(lam); }

Poly::Poly(const Q& c) {
  if (c != 0) t_[Mono{}] = c;
}

Poly Poly::lam(const std::string& name) {
  Poly p;
  Mono m;
  m.lam[name] = 1;
  p.t_[m] = 1;
  return p;
}

Poly Poly::nil(const std::string& name) {
  Poly p;
  Mono m;
  m.nil[name] = 1;
  p.t_[m] = 1;
  return p;
}

Poly Poly::sym(const std::string& name) {
  Poly p;
  Mono m;
  m.sym[name] = 1;
  p.t_[m] = 1;
  return p;
}

void Poly::add(const Mono& m, const Q& c) {
  if (c == 0) return;
  Q& x = t_[m];
  x += c;
  if (x == 0) t_.erase(m);
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.t_) r.add(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [a, x] : t_)
    for (const auto& [b, y] : o.t_) r.add(mono_mul(a, b), x * y);
  return r;
}

Poly Poly::scaled(const Q& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, x] : t_) r.t_[m] = x * c;
  return r;
}

Poly Poly::truncated(int nil_bound) const {
  Poly r;
  for (const auto& [m, c] : t_)
    if (m.nil_degree() <= nil_bound) r.t_[m] = c;
  return r;
}

Poly Poly::root_free() const {
  Poly r;
  for (const auto& [m, c] : t_)
    if (m.nil.empty()) r.t_[m] = c;
  return r;
}

int Poly::max_nil_degree() const {
  int d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, m.nil_degree());
  return d;
}

bool Poly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{}); }

Q Poly::constant_term() const {
  auto it = t_.find(Mono{});
  return it == t_.end() ? Q(0) : it->second;
}

Q Poly::evaluate(const std::map<std::string, Q>& at) const {
  Poly s = substitute(at);
  if (!s.is_constant()) fail(ErrorKind::input, "evaluation leaves free variables in " + s.str());
  return s.constant_term();
}

Poly Poly::substitute(const std::map<std::string, Q>& at) const {
  Poly r;
  for (const auto& [m, c] : t_) {
    Mono rest;
    Q f = c;
    auto apply = [&](const std::map<std::string, int>& src, std::map<std::string, int>& dst) {
      for (const auto& [k, e] : src) {
        auto it = at.find(k);
        if (it == at.end()) {
          dst[k] = e;
          continue;
        }
        Q p = 1;
        for (int i = 0; i < e; ++i) p *= it->second;
        f *= p;
      }
    };
    apply(m.lam, rest.lam);
    apply(m.nil, rest.nil);
    apply(m.sym, rest.sym);
    r.add(rest, f);
  }
  return r;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [m, c] : t_) {
    Q a = c;
    if (first_term) {
      if (a < 0) os << '-', a = -a;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first_term = false;
    bool first = true;
    if (a != 1 || m == Mono{}) {
      os << to_string(a);
      first = false;
    }
    append_factors(os, m.lam, first);
    append_factors(os, m.nil, first);
    append_factors(os, m.sym, first);
  }
  return os.str();
}

// ------------------------------------------------------------- LinearForm

Poly LinearForm::poly() const {
  Poly p;
  for (const auto& [k, c] : coeff) p += Poly::lam(k).scaled(Q(c));
  return p;
}

std::string LinearForm::str() const { return poly().str(); }

std::pair<Q, LinearForm> normalize_linear(const Poly& p) {
  if (p.is_zero()) fail(ErrorKind::singular, "zero is not a linear form");
  std::map<std::string, Q> co;
  for (const auto& [m, c] : p.terms()) {
    if (!m.nil.empty() || !m.sym.empty() || m.lam.size() != 1 || m.lam.begin()->second != 1)
      fail(ErrorKind::shape, "not a linear form in the torus weights: " + p.str());
    co[m.lam.begin()->first] = c;
  }
  // scale to a primitive integer vector
  mpz_class l = 1, g = 0;
  for (const auto& [k, c] : co) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [k, c] : co) {
    mpz_class n = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Q scale = Q(g) / Q(l);
  if (co.begin()->second < 0) scale = -scale;
  LinearForm f;
  for (const auto& [k, c] : co) {
    Q v = c / scale;
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) fail(ErrorKind::resource, "linear form coefficient too large");
    f.coeff[k] = v.get_num().get_si();
  }
  return {scale, f};
}

// ----------------------------------------------------------------- RatFun

RatFun RatFun::inverse_form(const LinearForm& l, int power) {
  RatFun r(1);
  if (power > 0) r.den_[l] = power;
  for (int i = 0; i < -power; ++i) r.num_ = r.num_ * l.poly();
  return r;
}

void RatFun::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    Poly q;
    while (it->second > 0 && divide_exact(num_, it->first, q)) {
      num_ = q;
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

RatFun RatFun::operator+(const RatFun& o) const {
  std::map<LinearForm, int> d = den_;
  for (const auto& [l, e] : o.den_) d[l] = std::max(d[l], e);
  auto lift = [&](const RatFun& x) {
    Poly n = x.num_;
    for (const auto& [l, e] : d) {
      auto it = x.den_.find(l);
      int have = it == x.den_.end() ? 0 : it->second;
      for (int i = have; i < e; ++i) n = n * l.poly();
    }
    return n;
  };
  RatFun r;
  r.num_ = lift(*this) + lift(o);
  r.den_ = std::move(d);
  r.cancel();
  return r;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
  RatFun r;
  r.num_ = num_ * o.num_;
  if (r.num_.is_zero()) return r;
  r.den_ = den_;
  for (const auto& [l, e] : o.den_) r.den_[l] += e;
  r.cancel();
  return r;
}

RatFun RatFun::truncated(int nil_bound) const {
  RatFun r = *this;
  r.num_ = num_.truncated(nil_bound);
  r.cancel();
  return r;
}

RatFun RatFun::inverse(int nil_bound) const {
  Poly n0 = num_.root_free();
  if (n0.is_zero()) fail(ErrorKind::singular, "coefficient " + str() + " is not invertible");
  // n0 = c · Π L^f, coordinate forms first, then at most one leftover linear form.
  RatFun unit_inv(1);
  for (;;) {
    bool peeled = false;
    std::map<std::string, bool> vars;
    for (const auto& [m, c] : n0.terms())
      for (const auto& [k, e] : m.lam) vars[k] = true;
    for (const auto& [k, _] : vars) {
      LinearForm l;
      l.coeff[k] = 1;
      Poly q;
      if (divide_exact(n0, l, q)) {
        n0 = q;
        unit_inv = unit_inv * inverse_form(l);
        peeled = true;
        break;
      }
    }
    if (!peeled) break;
  }
  if (n0.is_constant()) {
    unit_inv = unit_inv * RatFun(Q(Q(1) / n0.constant_term()));
  } else {
    bool linear = true;
    for (const auto& [m, c] : n0.terms())
      if (!m.sym.empty() || m.lam_degree() != 1) linear = false;
    if (!linear) fail(ErrorKind::singular, "coefficient " + str() + " does not factor into linear forms");
    auto [c, l] = normalize_linear(n0);
    unit_inv = unit_inv * RatFun(Q(Q(1) / c)) * inverse_form(l);
  }
  // this = (n0_full + nil) / D, so this⁻¹ = D · u⁻¹ · Σ (−nil·u⁻¹)^j
  Poly dpoly(1);
  for (const auto& [l, e] : den_)
    for (int i = 0; i < e; ++i) dpoly = dpoly * l.poly();
  RatFun x = (RatFun(num_ - num_.root_free()) * unit_inv).truncated(nil_bound);
  RatFun sum(1), term(1);
  for (int j = 1; j <= nil_bound; ++j) {
    term = (term * -x).truncated(nil_bound);
    if (term.is_zero()) break;
    sum = sum + term;
  }
  return (RatFun(dpoly) * unit_inv * sum).truncated(nil_bound);
}

Q RatFun::evaluate(const std::map<std::string, Q>& at) const {
  Q d = 1;
  for (const auto& [l, e] : den_) {
    Q v = l.poly().evaluate(at);
    if (v == 0) fail(ErrorKind::singular, "denominator " + l.str() + " vanishes at the evaluation point");
    for (int i = 0; i < e; ++i) d *= v;
  }
  return num_.evaluate(at) / d;
}

RatFun RatFun::substitute(const std::map<std::string, Q>& at) const {
  RatFun r(num_.substitute(at));
  for (const auto& [l, e] : den_) {
    Poly v = l.poly().substitute(at);
    if (v.is_zero()) fail(ErrorKind::singular, "denominator " + l.str() + " vanishes under substitution");
    RatFun f;
    if (v.is_constant()) {
      f = RatFun(Q(Q(1) / v.constant_term()));
    } else {
      auto [c, nl] = normalize_linear(v);
      f = RatFun(Q(Q(1) / c)) * inverse_form(nl);
    }
    for (int i = 0; i < e; ++i) r = r * f;
  }
  return r;
}

std::string RatFun::str() const {
  if (den_.empty()) return num_.str();
  std::string n = num_.str();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::ostringstream os;
  os << n << '/';
  bool first = true;
  for (const auto& [l, e] : den_) {
    if (!first) os << '*';
    first = false;
    os << '(' << l.str() << ')';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

// ------------------------------------------------------------ LaurentSeries

const char* to_string(Regime r) { return r == Regime::local ? "local" : "global"; }

Regime parse_regime(const std::string& s) {
  if (s == "local") return Regime::local;
  if (s == "global") return Regime::global;
  fail(ErrorKind::input, "unknown regime '" + s + "' (expected local or global)");
}

LaurentSeries LaurentSeries::constant(const RatFun& c, Regime r, int nil_bound) {
  LaurentSeries s(r, nil_bound);
  s.add_term(0, c.truncated(nil_bound));
  return s;
}

LaurentSeries LaurentSeries::linear(int n_z, const RatFun& shift, Regime r, int nil_bound) {
  LaurentSeries s(r, nil_bound);
  s.add_term(r == Regime::local ? 1 : -1, RatFun(n_z));
  s.add_term(0, shift.truncated(nil_bound));
  return s;
}

LaurentSeries LaurentSeries::z_power(int e, Regime r, int nil_bound) {
  LaurentSeries s(r, nil_bound);
  s.add_term(r == Regime::local ? e : -e, RatFun(1));
  return s;
}

void LaurentSeries::add_term(int e, const RatFun& c) {
  if (e >= prec_ || c.is_zero()) return;
  auto it = c_.find(e);
  if (it == c_.end()) {
    c_.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) c_.erase(it);
}

void LaurentSeries::check_compatible(const LaurentSeries& o) const {
  if (regime_ != o.regime_) fail(ErrorKind::shape, "series from different expansion regimes");
}

std::map<int, RatFun> LaurentSeries::z_terms() const {
  std::map<int, RatFun> r;
  for (const auto& [e, c] : c_) r.emplace(regime_ == Regime::local ? e : -e, c);
  return r;
}

int LaurentSeries::valuation() const { return c_.empty() ? prec_ : c_.begin()->first; }

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  check_compatible(o);
  LaurentSeries r(regime_, std::min(nil_bound_, o.nil_bound_));
  r.prec_ = std::min(prec_, o.prec_);
  for (const auto& [e, c] : c_) r.add_term(e, c);
  for (const auto& [e, c] : o.c_) r.add_term(e, c);
  return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + o.scaled(RatFun(-1)); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  check_compatible(o);
  LaurentSeries r(regime_, std::min(nil_bound_, o.nil_bound_));
  r.prec_ = std::min(sat_add(valuation(), o.prec_), sat_add(o.valuation(), prec_));
  for (const auto& [a, x] : c_)
    for (const auto& [b, y] : o.c_) {
      if (a + b >= r.prec_) break;
      r.add_term(a + b, (x * y).truncated(r.nil_bound_));
    }
  return r;
}

LaurentSeries LaurentSeries::scaled(const RatFun& c) const {
  LaurentSeries r(regime_, nil_bound_);
  r.prec_ = prec_;
  for (const auto& [e, x] : c_) r.add_term(e, (x * c).truncated(nil_bound_));
  return r;
}

LaurentSeries LaurentSeries::truncated(int p) const {
  LaurentSeries r = *this;
  r.prec_ = std::min(prec_, p);
  for (auto it = r.c_.lower_bound(r.prec_); it != r.c_.end();) it = r.c_.erase(it);
  return r;
}

LaurentSeries LaurentSeries::inverse(int order) const {
  if (order < 0) fail(ErrorKind::input, "negative truncation order");
  auto unit = std::find_if(c_.begin(), c_.end(), [](const auto& t) { return t.second.has_unit_part(); });
  if (unit == c_.end()) fail(ErrorKind::singular, "series has no invertible leading term");
  const int v = unit->first;
  if (unit != c_.begin()) {
    // Nilpotent terms below the unit: 1/(U+N) = U⁻¹ Σ_j (−N U⁻¹)^j, finite.
    LaurentSeries nl(regime_, nil_bound_), u(regime_, nil_bound_);
    u.prec_ = prec_;
    for (const auto& [e, c] : c_) (e < v ? nl : u).add_term(e, c);
    const int vn = nl.valuation();
    LaurentSeries ui = u.inverse(order + (v - vn) * nil_bound_);
    LaurentSeries x = (nl * ui).scaled(RatFun(-1));
    LaurentSeries sum = constant(RatFun(1), regime_, nil_bound_), term = sum;
    for (int j = 1; j <= nil_bound_; ++j) {
      term = term * x;
      if (term.c_.empty()) break;
      sum = sum + term;
    }
    LaurentSeries r = ui * sum;
    int val = r.valuation();
    return r.truncated(sat_add(val, order));
  }
  const RatFun cinv = unit->second.inverse(nil_bound_);
  // K coefficients are determined by the known part of the input.
  const int K = prec_ == kExact ? order + 1 : std::min(order + 1, prec_ - v);
  // (S·c⁻¹·u^{-v}) = 1 + Σ_{k≥1} t_k u^k; recurrence b_k = −Σ t_i b_{k−i}.
  std::vector<RatFun> t(K), b(K);
  for (const auto& [e, c] : c_)
    if (e - v < K) t[e - v] = (c * cinv).truncated(nil_bound_);
  b[0] = RatFun(1);
  for (int k = 1; k < K; ++k) {
    RatFun acc;
    for (int i = 1; i <= k; ++i)
      if (!t[i].is_zero() && !b[k - i].is_zero()) acc = acc + (t[i] * b[k - i]).truncated(nil_bound_);
    b[k] = -acc;
  }
  LaurentSeries r(regime_, nil_bound_);
  r.prec_ = -v + K;
  for (int k = 0; k < K; ++k)
    if (!b[k].is_zero()) r.add_term(-v + k, (b[k] * cinv).truncated(nil_bound_));
  return r;
}

LaurentSeries LaurentSeries::pow(int k, int order) const {
  if (k < 0) return inverse(order).pow(-k, order);
  LaurentSeries r = constant(RatFun(1), regime_, nil_bound_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

RatFun LaurentSeries::z_coeff(int e) const {
  int u = regime_ == Regime::local ? e : -e;
  if (u >= prec_)
    fail(ErrorKind::shape, "coefficient of z^" + std::to_string(e) + " lies beyond the truncation order");
  auto it = c_.find(u);
  return it == c_.end() ? RatFun() : it->second;
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const {
  if (regime_ != o.regime_) return false;
  const int p = std::min(prec_, o.prec_);
  LaurentSeries a = truncated(p), b = o.truncated(p);
  if (a.c_.size() != b.c_.size()) return false;
  for (auto i = a.c_.begin(), j = b.c_.begin(); i != a.c_.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  return true;
}

std::string LaurentSeries::str() const {
  std::ostringstream os;
  for (const auto& [e, c] : z_terms()) os << "z^" << e << ": " << c.str() << '\n';
  if (c_.empty()) os << "0\n";
  if (!exact()) os << "O(z^" << (regime_ == Regime::local ? prec_ : -prec_) << ")\n";
  return os.str();
}

RatFun residue(const LaurentSeries& s) { return s.z_coeff(-1); }

// --------------------------------------------------------- K-classes

std::vector<std::pair<int, RatFun>> chern_roots(const EqTerm& t) {
  if (t.rank < 1) fail(ErrorKind::input, "K-class term of rank < 1");
  if (!t.roots.empty() && static_cast<int>(t.roots.size()) != t.rank)
    fail(ErrorKind::input, "root list length differs from the rank");
  Poly w;
  for (const auto& [k, n] : t.lam) w += Poly::lam(k).scaled(Q(n));
  std::vector<std::pair<int, RatFun>> r;
  for (int i = 0; i < t.rank; ++i) r.emplace_back(t.n_z, RatFun(t.roots.empty() ? w : w + t.roots[i]));
  return r;
}

int total_rank(const EqKClass& k) {
  int r = 0;
  for (const auto& t : k) r += t.mult * t.rank;
  return r;
}

bool has_zero_weight(const EqKClass& k) {
  for (const auto& t : k) {
    if (t.mult == 0 || t.n_z != 0) continue;
    bool zero = true;
    for (const auto& [name, n] : t.lam)
      if (n != 0) zero = false;
    if (zero) return true;
  }
  return false;
}

LaurentSeries total_chern(const EqKClass& k, Regime r, int order, int nil_bound) {
  LaurentSeries s = LaurentSeries::constant(RatFun(1), r, nil_bound);
  for (const auto& t : k)
    for (const auto& [nz, x] : chern_roots(t)) {
      LaurentSeries f = LaurentSeries::linear(nz, x, r, nil_bound);
      s = s * f.pow(t.mult, order);
    }
  return s;
}

LaurentSeries expand_power(const RatFun& lambda, int k, Regime r, int order) {
  if (k < 1) fail(ErrorKind::input, "expand_power needs k >= 1");
  return LaurentSeries::linear(1, lambda, r).inverse(order).pow(k, order);
}

Localized localize(const std::string& token, const EqKClass& n_ge, Regime r, int order, int nil_bound) {
  if (has_zero_weight(n_ge)) fail(ErrorKind::structural, "normal bundle has a weight-zero summand");
  EqKClass inv = n_ge;
  for (auto& t : inv) t.mult = -t.mult;
  return {token, total_chern(inv, r, order, nil_bound).scaled(RatFun(Poly::sym(token)))};
}

bool is_positive_weight(const std::map<std::string, int>& lam) {
  for (const auto& [k, n] : lam)
    if (n != 0) return n > 0;
  return false;
}

EqKClass positive_part(const EqKClass& n) {
  EqKClass r;
  for (const auto& t : n) {
    if (t.n_z != 0) fail(ErrorKind::input, "general localization takes classes without z-weight");
    bool zero = std::all_of(t.lam.begin(), t.lam.end(), [](const auto& p) { return p.second == 0; });
    if (zero) fail(ErrorKind::structural, "normal bundle has a weight-zero summand");
    if (is_positive_weight(t.lam)) r.push_back(t);
  }
  return r;
}

RatFun localize_general(const std::string& token, const EqKClass& n, int nil_bound) {
  RatFun r = token.empty() ? RatFun(1) : RatFun(Poly::sym(token));
  for (const auto& t : positive_part(n))
    for (const auto& [nz, x] : chern_roots(t)) {
      RatFun f = t.mult > 0 ? x.inverse(nil_bound) : x;
      for (int i = 0; i < std::abs(t.mult); ++i) r = (r * f).truncated(nil_bound);
    }
  return r;
}

SqrtEulerReport sqrt_euler_check(const EqKClass& t_ge, const EqKClass& t_le, const EqKClass& e_ge, Regime r,
                                 int order) {
  // Left side: moving Euler classes with T≤ carrying weight t⁻¹.
  auto euler = [&](const EqKClass& k, int nz, int sign_mult) {
    LaurentSeries s = LaurentSeries::constant(RatFun(1), r, order);
    for (const auto& t : k)
      for (const auto& [ignored, x] : chern_roots(t))
        s = s * LaurentSeries::linear(nz, x, r, order).pow(sign_mult * t.mult, order);
    return s;
  };
  SqrtEulerReport rep;
  const int sign = total_rank(t_le) % 2 == 0 ? 1 : -1;
  rep.lhs = (euler(t_ge, 1, 1) * euler(t_le, -1, 1) * euler(e_ge, 1, -1)).scaled(RatFun(sign));
  // Right side: one total Chern series of T≥ + (T≤)* − E≥.
  EqKClass k = t_ge;
  for (EqTerm t : t_le) {
    for (auto& [name, n] : t.lam) n = -n;
    for (auto& x : t.roots) x = -x;
    t.n_z = 1;
    k.push_back(t);
  }
  for (EqTerm t : e_ge) {
    t.mult = -t.mult;
    k.push_back(t);
  }
  rep.rhs = total_chern(k, r, order, order);
  rep.ok = rep.lhs.agrees_with(rep.rhs);
  return rep;
}

GlobalResidueReport global_residue_check(const EqKClass& theta, int order) {
  for (const auto& t : theta)
    if (std::all_of(t.lam.begin(), t.lam.end(), [](const auto& p) { return p.second == 0; }))
      fail(ErrorKind::input, "global residue check needs nonzero torus weights");
  EqKClass inv = theta;
  for (auto& t : inv) t.mult = -t.mult;
  GlobalResidueReport rep;
  rep.residue = residue(total_chern(inv, Regime::global, order));
  rep.ok = rep.residue.is_zero();
  return rep;
}

// ---------------------------------------------------------------- parsing

namespace {

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  [[noreturn]] void error(const std::string& what) {
    fail(ErrorKind::input, "parse error at offset " + std::to_string(i_) + " in '" + s_ + "': " + what);
  }
  Q number() {
    skip();
    size_t j = i_;
    while (j < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[j])) || s_[j] == '/')) ++j;
    if (j == i_) error("expected a number");
    Q q = parse_rational(s_.substr(i_, j - i_));
    i_ = j;
    return q;
  }
  std::string name() {
    skip();
    size_t j = i_;
    while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
    if (j == i_) error("expected a name");
    std::string n = s_.substr(i_, j - i_);
    i_ = j;
    return n;
  }
  long integer() {
    bool neg = eat('-');
    if (!neg) eat('+');
    Q q = number();
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) error("expected an integer");
    return neg ? -q.get_num().get_si() : q.get_num().get_si();
  }

 private:
  const std::string& s_;
  size_t i_ = 0;
};

bool is_lambda_name(const std::string& n) {
  return n.size() > 1 && n[0] == 'l' &&
         std::all_of(n.begin() + 1, n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Affine expression up to a closing ')' or end; z is collected separately.
Poly parse_affine(Lexer& lx, bool allow_z, long& z_coeff) {
  Poly p;
  z_coeff = 0;
  bool first = true;
  while (!lx.done() && lx.peek() != ')') {
    int sign = 1;
    if (lx.eat('-')) sign = -1;
    else if (!lx.eat('+') && !first) lx.error("expected + or -");
    first = false;
    Q c = 1;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      c = lx.number();
      if (!lx.eat('*')) {
        p += Poly(Q(c * sign));
        continue;
      }
    }
    std::string n = lx.name();
    if (n == "z") {
      if (!allow_z) lx.error("z is not allowed here");
      if (c.get_den() != 1) lx.error("z needs an integer coefficient");
      z_coeff += sign * c.get_num().get_si();
    } else {
      p += (is_lambda_name(n) ? Poly::lam(n) : Poly::nil(n)).scaled(Q(c * sign));
    }
  }
  return p;
}

}  // namespace

Poly parse_linear(const std::string& s) {
  Lexer lx(s);
  long zc = 0;
  Poly p = parse_affine(lx, false, zc);
  if (!lx.done()) lx.error("trailing input");
  return p;
}

LaurentSeries parse_series_expr(const std::string& s, Regime r, int order) {
  Lexer lx(s);
  LaurentSeries out = LaurentSeries::constant(RatFun(1), r);
  if (lx.done()) lx.error("empty expression");
  for (;;) {
    long zc = 0;
    Poly p;
    if (lx.eat('(')) {
      p = parse_affine(lx, true, zc);
      if (!lx.eat(')')) lx.error("expected ')'");
    } else {
      std::string n = lx.name();
      if (n == "z") zc = 1;
      else p = is_lambda_name(n) ? Poly::lam(n) : Poly::nil(n);
    }
    long k = 1;
    if (lx.eat('^')) k = lx.integer();
    out = out * LaurentSeries::linear(static_cast<int>(zc), RatFun(p), r).pow(static_cast<int>(k), order);
    if (lx.done()) break;
    if (!lx.eat('*')) lx.error("expected '*'");
  }
  return out;
}

}  // namespace cy4
