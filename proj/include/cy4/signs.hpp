// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
//
// Graded determinant lines as formal expressions, generator isomorphisms as
// scalars relative to canonical bases, and the concrete determinant model
// (exact sequences in Q^n) used to certify the sign identities.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cy4/common.hpp"
#include "cy4/linalg.hpp"

namespace cy4 {

// Gaussian rational re + im*i.
struct GaussQ {
  Q re, im;
  GaussQ() = default;
  GaussQ(Q r, Q i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussQ(int r) : re(r), im(0) {}
  static GaussQ i_unit() { return GaussQ(0, 1); }
  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const GaussQ&) const = default;
};
GaussQ operator+(const GaussQ& a, const GaussQ& b);
GaussQ operator-(const GaussQ& a, const GaussQ& b);
GaussQ operator*(const GaussQ& a, const GaussQ& b);
GaussQ operator/(const GaussQ& a, const GaussQ& b);
GaussQ pow(const GaussQ& a, int n);
// "p/q+r/s*i"
std::string to_string(const GaussQ& z);

// (-1)^{r(r-1)/2}
int wedge_reversal_sign(long long r);

// ------------------------------------------------------------- line words

class LineExpr {
 public:
  enum class Kind { prim, dual, tensor, trivial };

  static LineExpr prim(std::string label, int degree);
  static LineExpr trivial(int rank = 0);
  LineExpr dual() const;
  LineExpr operator*(const LineExpr& o) const;  // tensor product, left factor first

  Kind kind() const { return kind_; }
  int degree() const;
  const LineExpr& child(size_t i) const { return *kids_.at(i); }
  std::string str() const;
  bool operator==(const LineExpr& o) const;

 private:
  Kind kind_ = Kind::trivial;
  std::string label_;
  int degree_ = 0;  // prim degree or trivial rank
  std::vector<std::shared_ptr<const LineExpr>> kids_;
};

// An isomorphism source -> target, multiplying canonical basis elements by scalar.
struct LineIso {
  LineExpr source, target;
  GaussQ scalar{1};
};

LineIso identity_iso(const LineExpr& l);
LineIso sigma(const LineExpr& a, const LineExpr& b);    // ab -> ba, (-1)^{|a||b|}
LineIso pairing(const LineExpr& l);                     // l l* -> trivial
LineIso double_dual(const LineExpr& l);                 // (l*)* -> l
LineIso delta(const LineExpr& a, const LineExpr& b);    // (ab)* -> b* a*
LineIso inverse(const LineIso& f);
LineIso dual(const LineIso& f);                         // target* -> source*, same scalar
LineIso tensor(const LineIso& f, const LineIso& g);
// g∘f; throws a structural error unless f.target == g.source.
LineIso compose(const LineIso& g, const LineIso& f);
// Applies the chain first element first.
GaussQ eval(const std::vector<LineIso>& chain);

// Discrepancy of p_L∘(◊⊗id) against p_{L*}∘σ.
GaussQ double_dual_discrepancy(const LineExpr& l);

// ----------------------------------------------------- concrete determinants

// 0 -> U -(i)-> W -(p)-> V -> 0 inside W = Q^{k+l}; lifts satisfy p·lifts = 1.
struct ExactSequence {
  Matrix i, p, lifts;
  size_t rk_u() const { return i.cols(); }
  size_t rk_v() const { return p.rows(); }
};

// Random sequence with rk U = k, rk V = l; deterministic in seed.
ExactSequence random_sequence(size_t k, size_t l, std::uint64_t seed);
// Split sequence for U and V in the reverse role, sharing W.
ExactSequence swapped_split(const ExactSequence& s);
// 0 -> V* -(pᵀ)-> W* -(iᵀ)-> U* -> 0
ExactSequence dual_sequence(const ExactSequence& s);

// Scalar of ε: det W -> det U det V.
Q epsilon_scalar(const ExactSequence& s);
// Scalar of d_V: det(V*) -> det(V)*.
Q d_scalar(size_t rank);

struct PentagonReport {
  Q path_a, path_b;
  bool ok() const { return path_a == path_b; }
};
PentagonReport verify_pentagon(size_t rk_u, size_t rk_v, std::uint64_t seed);
// ε_{V,U} / (σ ε_{U,V}) on a random split sequence; 1 when the identity holds.
Q swap_compatibility(size_t rk_u, size_t rk_v, std::uint64_t seed);

// ---------------------------------------------------------- orientations

// An orthogonal space Q^{2n} with Gram matrix and a chosen orientation scalar
// o(1) = x·e_1∧...∧e_{2n}.
struct Orientation {
  Matrix gram;
  GaussQ x;
};

// x² det(Gram) = 1
bool satisfies_orientation_condition(const Orientation& o);
// Induced orientation for the maximal isotropic subspace spanned by the columns of iso.
Orientation induced_orientation(const Matrix& gram, const Matrix& iso);
// Hyperbolic V ⊕ V*, rank V = n, with V = first block.
Matrix hyperbolic_gram(size_t n);
Orientation orientation_product(const Orientation& a, const Orientation& b);
// o_{V*} / o_V on the hyperbolic space of rank 2n.
GaussQ compare_dual(size_t n);
// Same comparison after a random change of basis.
GaussQ compare_dual_random(size_t n, std::uint64_t seed);
// (o*)^{-1} = det(i_q)∘o as scalars.
bool dual_orientation_identity(const Orientation& o);
// o_{N≥} / o_{N≥_OT} on T≥⊕T≥* ⊕ E≥⊕E≥* ⊕ T≤⊕T≤*.
GaussQ ot_comparison(size_t rk_t_ge, size_t rk_t_le, size_t rk_e_ge);

}  // namespace cy4
