// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
//
// Miniature intersection theory: projective bundles over a base with Chern
// classes c1..cr, the BG_m cap calculus on classes p^j, and the fixed-locus
// residues of a toy master space.
//
// Classes are Poly values in symbol variables: "c<i>" (Chern classes of V),
// "h" (hyperplane class), "tau", "z", and opaque homology tokens.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "cy4/series.hpp"

namespace cy4 {

Poly chern_class(int i);  // c_0 = 1, c_i = 0 for i < 0
Poly hyperplane();
Poly tau_var();
Poly z_var();

// Polynomial expressions such as "h^4 - 2*c1*h + 1/2"; every identifier is a symbol.
Poly parse_class_expr(const std::string& s);

// Homogeneous degree with c_i in degree i and h, tau, z in degree 1; other symbols 0.
int class_degree(const Mono& m);
Poly truncate_degree(const Poly& p, int top);

// s_0..s_top with s(V)·c(V) = 1 for a rank-r bundle.
std::vector<Poly> segre(int rank, int top);

// Reduce with h^r = -Σ c_i h^{r-i} to h-degree < r.
Poly proj_normal_form(int r, const Poly& x);
// p_*(h^{r-1+j}) = s_j(V); p_*(h^k) = 0 for k < r-1.
Poly proj_pushforward(int r, const Poly& x);
// e(T_π) for 0 -> O -> V⊗O(1) -> T_π -> 0: Σ_k (r-k) c_k h^{r-1-k}.
Poly euler_relative_tangent(int r);

// Σ_j coefficient_j ⊗ p^j
using PSeriesVector = std::map<int, Poly>;
std::string to_string(const PSeriesVector& v);
// Σ_{j ≤ top} z^j p^j ⊗ v
PSeriesVector ezt_convolve(const Poly& v, int top);
// p^i ∩ τ^n = p^{i-n} (zero for n > i); f lists the τ-coefficients.
PSeriesVector cap_tau(const PSeriesVector& p, const std::vector<Poly>& f);

// Converts a Poly in z (other variables as coefficients) to a global-regime series.
LaurentSeries z_poly_to_series(const Poly& p, int nil_bound = kDefaultOrder);

struct BracketPushdownReport {
  int r = 0, a = 0;
  Poly expected;         // (-1)^{aχ} χ v
  Poly geometric;        // projective-bundle pushforward of e(T_π)
  Poly step2;            // residue through the cap calculus
  Poly step3;            // residue of the closed form
  bool tangent_matches;  // e(T_π) at h = τ equals d/dτ(τ^r c_{1/τ}(V))
  bool tail_below_minus_one;
  bool ok() const;
};
// χ = r; degree a must be even.
BracketPushdownReport bracket_pushdown_check(int r, int a);

struct FlagLocusSpec {
  std::string a = "A", a_prime = "A'";  // tokens for the loci e_{-1} = 0 and e_0 = 0
  EqKClass n1;                          // positive half of the first normal bundle
  EqKClass n2;                          // positive half of the second normal bundle
  std::string a1 = "A1", a2 = "A2";     // factors on the sum locus
  EqKClass theta;                       // Θ on the sum locus
  int epsilon = 1;
  bool project_translations = false;    // drop T^j A1 for j ≥ 1
  int order = 8;
};

struct FlagResidueReport {
  int sign1 = 1, sign2 = -1;
  RatFun locus1, locus2, locus3, total;
  std::string str() const;
};
FlagResidueReport fixed_locus_residues(const FlagLocusSpec& spec);
// Token for T^j A / j!: "A" for j = 0.
std::string translate_token(const std::string& a, int j);
// Loci with dual normal weights, A' = A and Θ = L ⊕ L^∨ on translation-free classes.
FlagLocusSpec self_dual_toy();

}  // namespace cy4
