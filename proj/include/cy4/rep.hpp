// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
//
// Representations of completed quivers, Euler forms, deformation complexes,
// stability phases and the monomial fixed points of Hilb^n(C^4).
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cy4/linalg.hpp"
#include "cy4/quiver.hpp"

namespace cy4 {

using DimVector = std::map<std::string, int>;

// A degree-0 representation: one d_head x d_tail matrix per degree-0 edge.
struct Representation {
  DimVector dims;
  std::map<std::string, Matrix> m;
};

int dim_at(const DimVector& d, const std::string& v);
void check_dims(const CY4Quiver& c, const DimVector& d);

// χ(d,e) = Σ_v d_v e_v + Σ_f (-1)^{1+|f|} d_{t(f)} e_{h(f)} over completed edges.
long long euler_form(const CY4Quiver& c, const DimVector& d, const DimVector& e);

// χ_k((d,α),(e,β)) = χ(α,β) - d χ(β(k)) - e χ(α(k)) + 2de
long long chi_k(long long d, long long e, long long chi_ab, long long chi_alpha_k, long long chi_beta_k);

// Shapes checked; every degree -1 relation d(f) must evaluate to zero.
void check_representation(const CY4Quiver& c, const Representation& r);
// Matrix of a path of degree-0 edges; lazy paths give the identity.
Matrix evaluate_path(const CY4Quiver& c, const Representation& r, const Path& p);

struct ExtComplex {
  // Blocks of C^i: vertex names for i = 0, edge names of degree 1-i otherwise.
  std::array<std::vector<std::string>, 5> blocks;
  std::array<size_t, 5> dim{};
  std::array<Matrix, 4> delta;  // delta[i]: C^i -> C^{i+1}
};

ExtComplex ext_complex(const CY4Quiver& c, const Representation& r);
std::array<size_t, 5> ext_dims(const ExtComplex& x);
bool delta_squared_zero(const ExtComplex& x);

// Extended rationals: a value or the formal top element.
struct Phase {
  bool infinite = false;
  Q value;
  bool operator==(const Phase&) const = default;
  std::strong_ordering operator<=>(const Phase& o) const;
};
std::string to_string(const Phase& p);

// λ and rk are linear in the class coordinates; μ̄ pairs with the framing dimensions.
struct StabilityData {
  std::vector<Q> lambda;
  std::vector<Q> mu;
  std::vector<long long> rk;
};
// μ̄ = (μ_1,...,μ_{r-1}[, μ_0]) with 1 > μ_1 > ... > μ_{r-1} > 0 > μ_0 > -1.
void check_mu(const std::vector<Q>& mu, bool has_v0);
Phase phase(const StabilityData& s, const std::vector<long long>& framing, const std::vector<long long>& alpha);
// The μ_t family on the JS-framed C4 quiver, with rk(d_inf, d_0) = d_inf + d_0.
Phase c4_tilde_phase(const Q& t, long long d_inf, long long d0);

// Krylov closure of v under the X_i spans the whole space.
bool is_cyclic(const std::vector<Matrix>& x, const Matrix& v);

using Cell = std::array<int, 4>;
using Staircase = std::vector<Cell>;  // sorted exponent vectors of the standard monomials

// All colength-n monomial ideals in four variables, sorted.
std::vector<Staircase> monomial_fixed_points(int n, int max_n = 8);
// Multiplication operators on the quotient and v = class of 1, as a
// representation of the JS-grafted C4 quiver (vertices "inf" and "0").
Representation fixed_point_representation(const Staircase& s);

}  // namespace cy4
