// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
//
// Truncated Laurent series in z with coefficients in Q(λ)[roots][symbols].
//
// Coefficients are Poly / Π L_j^{e_j} where each L_j is a normalized linear
// form in the λ variables. Root variables are nilpotent: monomials of total
// root degree above the configured bound vanish. Symbol variables are plain
// commuting indeterminates (opaque classes).
//
// Local regime expands in u = z, global in u = 1/z. Every series records the
// first u-exponent it does not know (prec); terms below it are exact.
#pragma once

#include <climits>
#include <map>
#include <string>
#include <vector>

#include "cy4/common.hpp"

namespace cy4 {

struct Mono {
  std::map<std::string, int> lam, nil, sym;
  auto operator<=>(const Mono&) const = default;
  int nil_degree() const;
  int lam_degree() const;
};

class Poly {
 public:
  Poly() = default;
  Poly(const Q& c);  // NOLINT: constants convert implicitly
  Poly(int c) : Poly(Q(c)) {}
  static Poly lam(const std::string& name);
  static Poly nil(const std::string& name);
  static Poly sym(const std::string& name);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Q& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }

  bool is_zero() const { return t_.empty(); }
  bool operator==(const Poly&) const = default;
  const std::map<Mono, Q>& terms() const { return t_; }
  void add(const Mono& m, const Q& c);

  Poly truncated(int nil_bound) const;
  Poly root_free() const;
  int max_nil_degree() const;
  bool is_constant() const;
  Q constant_term() const;
  Q evaluate(const std::map<std::string, Q>& at) const;
  // Substitutes only the listed variables.
  Poly substitute(const std::map<std::string, Q>& at) const;
  std::string str() const;

 private:
  std::map<Mono, Q> t_;
};

// Primitive integer form in λ, first nonzero coefficient (alphabetical) positive.
struct LinearForm {
  std::map<std::string, long> coeff;
  auto operator<=>(const LinearForm&) const = default;
  Poly poly() const;
  std::string str() const;
};
// p = c·L with L normalized; fails unless p is a nonzero homogeneous linear λ-polynomial.
std::pair<Q, LinearForm> normalize_linear(const Poly& p);

class RatFun {
 public:
  RatFun() = default;
  RatFun(const Poly& p) : num_(p) {}  // NOLINT
  RatFun(const Q& c) : num_(c) {}     // NOLINT
  RatFun(int c) : num_(Q(c)) {}       // NOLINT
  static RatFun inverse_form(const LinearForm& l, int power = 1);

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator-() const;
  RatFun operator*(const RatFun& o) const;
  RatFun truncated(int nil_bound) const;
  // Requires the root-free numerator to be a constant or a linear form.
  RatFun inverse(int nil_bound) const;

  bool is_zero() const { return num_.is_zero(); }
  bool operator==(const RatFun& o) const { return (*this - o).is_zero(); }
  const Poly& num() const { return num_; }
  const std::map<LinearForm, int>& den() const { return den_; }
  bool has_unit_part() const { return !num_.root_free().is_zero(); }
  Q evaluate(const std::map<std::string, Q>& at) const;
  RatFun substitute(const std::map<std::string, Q>& at) const;
  std::string str() const;

 private:
  void cancel();
  Poly num_;
  std::map<LinearForm, int> den_;  // exponents > 0
};

enum class Regime { local, global };
const char* to_string(Regime r);
Regime parse_regime(const std::string& s);

constexpr int kExact = INT_MAX;
constexpr int kDefaultOrder = 12;

class LaurentSeries {
 public:
  LaurentSeries(Regime r = Regime::local, int nil_bound = kDefaultOrder) : regime_(r), nil_bound_(nil_bound) {}
  static LaurentSeries constant(const RatFun& c, Regime r, int nil_bound = kDefaultOrder);
  // n_z·z + shift, exact.
  static LaurentSeries linear(int n_z, const RatFun& shift, Regime r, int nil_bound = kDefaultOrder);
  static LaurentSeries z_power(int e, Regime r, int nil_bound = kDefaultOrder);

  Regime regime() const { return regime_; }
  int nil_bound() const { return nil_bound_; }
  int prec() const { return prec_; }  // first unknown u-exponent
  bool exact() const { return prec_ == kExact; }
  // u-exponent -> coefficient
  const std::map<int, RatFun>& u_terms() const { return c_; }
  // z-exponent -> coefficient, sorted by z-exponent
  std::map<int, RatFun> z_terms() const;
  int valuation() const;  // lowest u-exponent with nonzero coefficient; prec if none

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries scaled(const RatFun& c) const;
  // Relative order: the result is exact for N u-steps past its valuation.
  LaurentSeries inverse(int order = kDefaultOrder) const;
  LaurentSeries pow(int k, int order = kDefaultOrder) const;
  LaurentSeries truncated(int prec) const;

  // Coefficient of z^e; fails if e lies beyond the known precision.
  RatFun z_coeff(int e) const;
  // Equal on every u-exponent both know, and both know up to at least min_prec.
  bool agrees_with(const LaurentSeries& o) const;
  std::string str() const;

 private:
  void check_compatible(const LaurentSeries& o) const;
  void add_term(int e, const RatFun& c);
  Regime regime_;
  int nil_bound_;
  std::map<int, RatFun> c_;
  int prec_ = kExact;
};

RatFun residue(const LaurentSeries& s);

// One summand of an equivariant K-class: mult copies of a rank-`rank` bundle of
// character e^{n_z z + Σ n_i λ_i} with Chern roots `roots` (empty = all zero).
struct EqTerm {
  int mult = 1;
  int n_z = 1;
  std::map<std::string, int> lam;
  int rank = 1;
  std::vector<Poly> roots;
};
using EqKClass = std::vector<EqTerm>;

// Equivariant first Chern classes n_z z + λ·n + root_j of the term's lines.
std::vector<std::pair<int, RatFun>> chern_roots(const EqTerm& t);
int total_rank(const EqKClass& k);
bool has_zero_weight(const EqKClass& k);

// z^{Rk} c_{1/z}(K): Π(n_z z + λ + x) over positive summands, inverted over negative ones.
LaurentSeries total_chern(const EqKClass& k, Regime r, int order = kDefaultOrder, int nil_bound = kDefaultOrder);
// (λ + z)^{-k}
LaurentSeries expand_power(const RatFun& lambda, int k, Regime r, int order = kDefaultOrder);

struct Localized {
  std::string token;
  LaurentSeries series;
};
// token / (z^{Rk} c_{1/z}(N≥))
Localized localize(const std::string& token, const EqKClass& n_ge, Regime r, int order = kDefaultOrder,
                   int nil_bound = kDefaultOrder);
// Alphabetical positivity: the first nonzero λ-coefficient decides the sign.
bool is_positive_weight(const std::map<std::string, int>& lam);
EqKClass positive_part(const EqKClass& n);
// token / e_T(N>) after the positivity split; N> carries no z-weight. An empty
// token stands for the unit class.
RatFun localize_general(const std::string& token, const EqKClass& n, int nil_bound = kDefaultOrder);

struct SqrtEulerReport {
  LaurentSeries lhs, rhs;
  bool ok = false;
};
// (-1)^{Rk T≤} e(tT≥) e(t⁻¹T≤) / e(tE≥) against Π(z+x)_{T≥} Π(z-x)_{T≤} / Π(z+x)_{E≥}.
SqrtEulerReport sqrt_euler_check(const EqKClass& t_ge, const EqKClass& t_le, const EqKClass& e_ge, Regime r,
                                 int order = 8);

struct GlobalResidueReport {
  RatFun residue;
  bool ok = false;
};
GlobalResidueReport global_residue_check(const EqKClass& theta, int order = kDefaultOrder);

// Linear expressions such as "2*l1 - a + 3/2": names l<digits> are λ variables,
// "z" is rejected, every other identifier is a nilpotent root.
Poly parse_linear(const std::string& s);
// Products of factors "(lin)^k" or "(lin)" where lin may contain z with an
// integer coefficient, e.g. "(l1+z)^-2*(z-l2)".
LaurentSeries parse_series_expr(const std::string& s, Regime r, int order = kDefaultOrder);

}  // namespace cy4
