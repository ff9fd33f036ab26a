// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
//
// Free Lie algebra over Q on named letters in Lyndon normal form, plus the
// wall-crossing combinatorics built on it.
//
// Letters compare by name except that "P" is the largest letter; so a bracket
// with P innermost, such as [X_a,[X_b,P]], is a Lyndon word.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cy4/common.hpp"

namespace cy4 {

inline const std::string kP = "P";

bool letter_less(const std::string& a, const std::string& b);
using Word = std::vector<std::string>;
struct WordLess {
  bool operator()(const Word& a, const Word& b) const;
};
using AssocPoly = std::map<Word, Q, WordLess>;

bool is_lyndon(const Word& w);
// Standard bracketing of a Lyndon word, expanded in the free associative algebra.
AssocPoly lyndon_expand(const Word& w);
std::string lyndon_bracket_string(const Word& w);

class LieExpr {
 public:
  LieExpr() = default;
  static LieExpr letter(const std::string& name);
  // Requires a Lie polynomial; fails with a shape error otherwise.
  static LieExpr from_assoc(const AssocPoly& p);

  LieExpr operator+(const LieExpr& o) const;
  LieExpr operator-(const LieExpr& o) const;
  LieExpr scaled(const Q& c) const;
  bool is_zero() const { return c_.empty(); }
  bool operator==(const LieExpr&) const = default;

  // Lyndon word -> coefficient
  const std::map<Word, Q, WordLess>& terms() const { return c_; }
  AssocPoly to_assoc() const;
  // "1/2 [X_a,X_b] + -1 [X_a,P]" in Lyndon order; "0" when empty.
  std::string str() const;

 private:
  std::map<Word, Q, WordLess> c_;
};

LieExpr bracket(const LieExpr& a, const LieExpr& b);
// [a_n,[...[a_2,a_1]...]] for the list a_1..a_n
LieExpr right_nested(const std::vector<LieExpr>& inner_first);

// ------------------------------------------------------------- ε signs

using ClassVec = std::vector<long>;
std::string class_string(const ClassVec& a);  // "(2,3)"

// ε_{α,β} = (-1)^{b(α,β)} for a mod-2 form b.
struct EpsilonSystem {
  std::vector<std::vector<int>> b;
  // Upper-strict choice b_ij = χ_ij for i < j; needs even χ_ii.
  static EpsilonSystem from_pairing(const std::vector<std::vector<long>>& chi);
  int epsilon(const ClassVec& a, const ClassVec& c) const;
  bool cocycle_check(const ClassVec& a, const ClassVec& c, const ClassVec& d) const;
  // ε_{α,β} = (-1)^{χ(α,β)} ε_{β,α}
  bool symmetry_check(const ClassVec& a, const ClassVec& c, const std::vector<std::vector<long>>& chi) const;
};

// ---------------------------------------------------------- class tables

struct ClassInfo {
  std::string name;  // letter used for Ω_α
  long rk = 1;       // additive rank, positive on effective classes
  long chi = 1;      // χ(α(k)), positive
  Q phase = 0;
};
using ClassTable = std::map<ClassVec, ClassInfo>;
using ClassValues = std::map<ClassVec, LieExpr>;

// Ordered tuples α_1..α_n of table classes with the phase of α summing to α.
std::vector<std::vector<ClassVec>> ordered_decompositions(const ClassVec& alpha, const ClassTable& table,
                                                          bool same_phase = true);

// Σ (1/n!) [M_{α_n},...[M_{α_1}, P]...]; α = 0 gives P.
LieExpr js_rhs(const ClassVec& alpha, const ClassValues& m, const ClassTable& table);
// [v, P] -> χ(v)·v applied to the innermost bracket; bare P -> 0.
LieExpr omega_transform(const LieExpr& e, const ClassTable& table);

enum class InvertVariant {
  corrected,  // Ω_α − (1/χ(α)) Σ_{n≥2} ...: satisfies the round trip
  as_printed  // Ω_α − Σ_{n≥2} ...: reproduces the displayed two-term formula
};
// ⟨M_β⟩ for every table class of rank ≤ rk(α) reachable from α, by induction on rank.
ClassValues invert_js(const ClassTable& table, const ClassVec& alpha, InvertVariant v = InvertVariant::corrected);
// Ω-generators as single letters.
LieExpr omega_letter(const ClassTable& table, const ClassVec& a);

// ------------------------------------------------------------- q-series

struct QSeries {
  int order = 4;  // coefficients known for n <= order
  std::map<int, LieExpr> c;
  LieExpr at(int n) const;
  std::string str() const;
};

// exp(Σ_n ad(G_n) q^n) T through q^order
QSeries exp_adjoint(const QSeries& g, const QSeries& t, int order);
QSeries wc_invert(const QSeries& g, const QSeries& s, int order);
// Generators M_n for n ≥ 1 and PT_n for n ≥ 0 as letters.
QSeries letter_series(const std::string& stem, int from, int order);
QSeries dt_from_pt(int order);
QSeries hilb_series(int order);

struct FlagTerm {
  LieExpr omega1, omega2;
  long chi1 = 1, chi2 = 1;
};
// Σ_j C(χ, χ_1^j)^{-1} [Ω_1^j, Ω_2^j]
LieExpr flag_wc_rhs(const std::vector<FlagTerm>& terms, long chi_alpha);

Q binomial(long n, long k);

}  // namespace cy4
