// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
//
// Graded quivers, path algebras, cyclic superpotentials and CY4 completions.
//
// Convention: a Path lists its edges in application order (first applied first).
// p∘q means "q then p" and is nonzero only when tail(p) == head(q).
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cy4/common.hpp"

namespace cy4 {

enum class EdgeKind { original, dual, loop };

struct Edge {
  std::string name;
  std::string tail;
  std::string head;
  int degree = 0;
  EdgeKind kind = EdgeKind::original;
};

// e* = sign * edge
struct DualRef {
  std::string edge;
  int sign = 1;
  bool operator==(const DualRef&) const = default;
};

struct Path {
  std::vector<std::string> edges;  // application order
  std::string vertex;              // set only for the lazy path l_v

  static Path lazy(std::string v) { return Path{{}, std::move(v)}; }
  static Path of(std::vector<std::string> e) { return Path{std::move(e), {}}; }
  bool is_lazy() const { return edges.empty(); }
  auto operator<=>(const Path&) const = default;
};

class GradedQuiver {
 public:
  void add_vertex(const std::string& v);
  void add_edge(const Edge& e);
  // Declares e* = sign * target. The target may name an edge not yet present;
  // doubled() then creates it.
  void declare_dual(const std::string& e, const std::string& target, int sign);

  bool has_vertex(const std::string& v) const;
  bool has_edge(const std::string& e) const;
  const Edge& edge(const std::string& name) const;
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::map<std::string, DualRef>& declared_duals() const { return declared_; }

  // Dual of an edge in a doubled quiver (after pairing has been resolved).
  std::optional<DualRef> dual(const std::string& e) const;
  void set_pair(const std::string& a, const std::string& b, int sign);

  int degree(const Path& p) const;
  std::string tail(const Path& p) const;
  std::string head(const Path& p) const;
  // Throws unless every edge exists and consecutive edges compose.
  void check_path(const Path& p) const;

  // Each dual pair once, primary side first. Self-paired loops appear as (e, e).
  std::vector<std::pair<std::string, DualRef>> pairs() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, size_t> index_;
  std::map<std::string, DualRef> declared_;
  std::map<std::string, DualRef> dual_;
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(const Path& p, const Q& c) { add(p, c); }

  void add(const Path& p, const Q& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement operator-() const;
  AlgebraElement scaled(const Q& c) const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<Path, Q>& terms() const { return terms_; }
  bool operator==(const AlgebraElement&) const = default;

 private:
  std::map<Path, Q> terms_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);

// Keys are canonical rotations of closed paths.
class CyclicElement {
 public:
  // Adds c times the cyclic class of the closed path p (rotated to canonical form).
  void add(const GradedQuiver& q, const Path& p, const Q& c);
  bool is_zero() const { return terms_.empty(); }
  const std::map<Path, Q>& terms() const { return terms_; }
  bool operator==(const CyclicElement&) const = default;

 private:
  std::map<Path, Q> terms_;
};

// Canonical rotation of a closed path and the Koszul sign carrying p to it.
// Sign 0 means the cyclic word equals its own negative, hence vanishes.
std::pair<Path, int> canonical_rotation(const GradedQuiver& q, const Path& p);

// p∘q
AlgebraElement compose(const GradedQuiver& q, const Path& p, const Path& r);
// a∘b, bilinear extension of compose
AlgebraElement multiply(const GradedQuiver& q, const AlgebraElement& a, const AlgebraElement& b);
// Image in the cyclic quotient; open paths map to zero.
CyclicElement cyclic_projection(const GradedQuiver& q, const AlgebraElement& a);

AlgebraElement circular_derivative(const GradedQuiver& q, const CyclicElement& h, const std::string& f);
// ∂H/∂(sign*edge)
AlgebraElement circular_derivative(const GradedQuiver& q, const CyclicElement& h, const DualRef& f);

// Doubled quiver: the input's original edges plus resolved duals.
GradedQuiver doubled(const GradedQuiver& base);

// Σ over dual pairs of ∂H/∂e·∂H/∂e*, self-paired loops contributing (∂H/∂e)².
AlgebraElement master_bracket_path(const GradedQuiver& qbar, const CyclicElement& h);
CyclicElement master_bracket(const GradedQuiver& qbar, const CyclicElement& h);

// Throws unless every word of h is a closed path of degree -1 on q.
void check_superpotential(const GradedQuiver& q, const CyclicElement& h);

struct CY4Quiver {
  GradedQuiver base;       // the supplied Q together with its declared pairing
  GradedQuiver quiver;     // completed quiver: duals and one o-loop per vertex
  CyclicElement potential;
  std::map<std::string, AlgebraElement> d;  // generator -> differential
};

std::string loop_name(const std::string& vertex);

CY4Quiver cy4_complete(const GradedQuiver& base, const CyclicElement& h);
// Same construction without the master-equation gate; used to build counterexamples.
CY4Quiver cy4_complete_unchecked(const GradedQuiver& base, const CyclicElement& h);

const AlgebraElement& differential(const CY4Quiver& c, const std::string& generator);
AlgebraElement d_extend(const CY4Quiver& c, const AlgebraElement& a);

struct DgaReport {
  bool ok = true;
  std::string generator;  // first offending generator when !ok
  AlgebraElement value;   // its d² (or the degree defect)
  std::string reason;
};
DgaReport verify_dga(const CY4Quiver& c);

struct Frame {
  enum class Kind { js, flag, ms };
  Kind kind = Kind::js;
  int r = 2;
  int l = 0;
};
CY4Quiver graft(const CY4Quiver& c, const Frame& frame);

// Worked fixtures.
struct QuiverWithPotential {
  GradedQuiver quiver;
  CyclicElement potential;
};
QuiverWithPotential example_quiver();
QuiverWithPotential c4_quiver();
QuiverWithPotential point_quiver();

std::string format_path(const Path& p);
std::string format(const AlgebraElement& a);
std::string format(const CyclicElement& c);

}  // namespace cy4
