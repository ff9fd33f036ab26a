// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
#include "cy4/quiver.hpp"

#include <algorithm>
#include <set>

namespace cy4 {

namespace {

int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

int degree_of(const GradedQuiver& q, const std::vector<std::string>& edges, size_t b, size_t e) {
  int d = 0;
  for (size_t i = b; i < e; ++i) d += q.edge(edges[i]).degree;
  return d;
}

}  // namespace

// ---------------------------------------------------------------- GradedQuiver

void GradedQuiver::add_vertex(const std::string& v) {
  if (v.empty()) fail(ErrorKind::input, "empty vertex name");
  if (has_vertex(v)) fail(ErrorKind::input, "duplicate vertex \"" + v + "\"");
  vertices_.push_back(v);
}

void GradedQuiver::add_edge(const Edge& e) {
  if (e.name.empty() || e.name.find(';') != std::string::npos || e.name[0] == '-')
    fail(ErrorKind::input, "invalid edge name \"" + e.name + "\"");
  if (has_edge(e.name)) fail(ErrorKind::input, "duplicate edge \"" + e.name + "\"");
  if (!has_vertex(e.tail)) fail(ErrorKind::input, "edge \"" + e.name + "\": unknown tail vertex \"" + e.tail + "\"");
  if (!has_vertex(e.head)) fail(ErrorKind::input, "edge \"" + e.name + "\": unknown head vertex \"" + e.head + "\"");
  if (e.degree > 0 || e.degree < -3)
    fail(ErrorKind::input, "edge \"" + e.name + "\": degree " + std::to_string(e.degree) + " outside {0,-1,-2,-3}");
  index_[e.name] = edges_.size();
  edges_.push_back(e);
}

void GradedQuiver::declare_dual(const std::string& e, const std::string& target, int sign) {
  if (sign != 1 && sign != -1) fail(ErrorKind::input, "pairing sign must be +1 or -1");
  if (target.empty()) fail(ErrorKind::input, "empty dual name for \"" + e + "\"");
  if (declared_.count(e)) fail(ErrorKind::structural, "edge \"" + e + "\" paired twice");
  declared_[e] = DualRef{target, sign};
}

bool GradedQuiver::has_vertex(const std::string& v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool GradedQuiver::has_edge(const std::string& e) const { return index_.count(e) > 0; }

const Edge& GradedQuiver::edge(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail(ErrorKind::input, "unknown edge \"" + name + "\"");
  return edges_[it->second];
}

std::optional<DualRef> GradedQuiver::dual(const std::string& e) const {
  auto it = dual_.find(e);
  if (it == dual_.end()) return std::nullopt;
  return it->second;
}

void GradedQuiver::set_pair(const std::string& a, const std::string& b, int sign) {
  const Edge& ea = edge(a);
  const Edge& eb = edge(b);
  if (ea.degree + eb.degree != -2)
    fail(ErrorKind::structural, "pairing " + a + " <-> " + b + " is not degree-compatible (degrees must sum to -2)");
  if (ea.tail != eb.head || ea.head != eb.tail)
    fail(ErrorKind::structural, "pairing " + a + " <-> " + b + " does not reverse endpoints");
  if (a == b && sign != 1) fail(ErrorKind::structural, "self-paired loop " + a + " must have sign +1");
  for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
    auto it = dual_.find(x);
    if (it != dual_.end() && !(it->second == DualRef{y, sign}))
      fail(ErrorKind::structural, "pairing of " + x + " is not an involution");
    dual_[x] = DualRef{y, sign};
  }
}

int GradedQuiver::degree(const Path& p) const { return degree_of(*this, p.edges, 0, p.edges.size()); }

std::string GradedQuiver::tail(const Path& p) const { return p.is_lazy() ? p.vertex : edge(p.edges.front()).tail; }

std::string GradedQuiver::head(const Path& p) const { return p.is_lazy() ? p.vertex : edge(p.edges.back()).head; }

void GradedQuiver::check_path(const Path& p) const {
  if (p.is_lazy()) {
    if (!has_vertex(p.vertex)) fail(ErrorKind::input, "lazy path at unknown vertex \"" + p.vertex + "\"");
    return;
  }
  for (size_t i = 0; i < p.edges.size(); ++i) {
    const Edge& e = edge(p.edges[i]);
    if (i > 0 && edge(p.edges[i - 1]).head != e.tail)
      fail(ErrorKind::input, "path " + format_path(p) + " is not composable at " + e.name);
  }
}

std::vector<std::pair<std::string, DualRef>> GradedQuiver::pairs() const {
  std::vector<std::pair<std::string, DualRef>> out;
  std::set<std::string> seen;
  for (const Edge& e : edges_) {
    if (e.kind != EdgeKind::original) continue;
    auto d = dual(e.name);
    if (!d || seen.count(e.name)) continue;
    seen.insert(e.name);
    seen.insert(d->edge);
    out.emplace_back(e.name, *d);
  }
  return out;
}

// ------------------------------------------------------------- AlgebraElement

void AlgebraElement::add(const Path& p, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const { return scaled(-1); }

AlgebraElement AlgebraElement::scaled(const Q& c) const {
  AlgebraElement out;
  if (c == 0) return out;
  for (const auto& [p, x] : terms_) out.terms_.emplace(p, x * c);
  return out;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

// -------------------------------------------------------------- cyclic words

std::pair<Path, int> canonical_rotation(const GradedQuiver& q, const Path& p) {
  if (p.is_lazy()) return {p, 1};
  q.check_path(p);
  if (q.head(p) != q.tail(p)) fail(ErrorKind::input, "cyclic word " + format_path(p) + " is not closed");
  const int total = q.degree(p);
  std::vector<std::string> w = p.edges;
  std::vector<std::string> best = w;
  int best_sign = 1;
  int sign = 1;
  bool vanishes = false;
  for (size_t k = 1; k < w.size(); ++k) {
    // Moving the first-applied edge a to the end turns P∘a into a∘P.
    const int da = q.edge(w.front()).degree;
    sign *= parity_sign(static_cast<long long>(da) * (total - da));
    std::rotate(w.begin(), w.begin() + 1, w.end());
    if (w < best) {
      best = w;
      best_sign = sign;
      vanishes = false;
    } else if (w == best && sign != best_sign) {
      vanishes = true;
    }
  }
  // A periodic word can also coincide with the starting rotation.
  if (!vanishes && best == p.edges && best_sign != 1) vanishes = true;
  return {Path::of(best), vanishes ? 0 : best_sign};
}

void CyclicElement::add(const GradedQuiver& q, const Path& p, const Q& c) {
  if (c == 0) return;
  auto [key, sign] = canonical_rotation(q, p);
  if (sign == 0) return;
  Q v = c * sign;
  auto [it, inserted] = terms_.emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement compose(const GradedQuiver& q, const Path& p, const Path& r) {
  q.check_path(p);
  q.check_path(r);
  if (q.tail(p) != q.head(r)) return {};
  if (r.is_lazy()) return AlgebraElement(p, 1);
  if (p.is_lazy()) return AlgebraElement(r, 1);
  std::vector<std::string> e = r.edges;
  e.insert(e.end(), p.edges.begin(), p.edges.end());
  return AlgebraElement(Path::of(std::move(e)), 1);
}

AlgebraElement multiply(const GradedQuiver& q, const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [p, cp] : a.terms())
    for (const auto& [r, cr] : b.terms()) {
      AlgebraElement t = compose(q, p, r);
      for (const auto& [path, c] : t.terms()) out.add(path, c * cp * cr);
    }
  return out;
}

CyclicElement cyclic_projection(const GradedQuiver& q, const AlgebraElement& a) {
  CyclicElement out;
  for (const auto& [p, c] : a.terms())
    if (q.head(p) == q.tail(p)) out.add(q, p, c);
  return out;
}

AlgebraElement circular_derivative(const GradedQuiver& q, const CyclicElement& h, const std::string& f) {
  const Edge& fe = q.edge(f);
  AlgebraElement out;
  for (const auto& [word, c] : h.terms()) {
    const auto& w = word.edges;
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] != f) continue;
      // word = r∘f∘q with q = w[0..i) applied first; contributes ± q∘r.
      const int dq = degree_of(q, w, 0, i);
      const int dr = degree_of(q, w, i + 1, w.size());
      const int sign = parity_sign(static_cast<long long>(dr) * (fe.degree + dq));
      std::vector<std::string> e(w.begin() + static_cast<long>(i) + 1, w.end());
      e.insert(e.end(), w.begin(), w.begin() + static_cast<long>(i));
      Path p = e.empty() ? Path::lazy(fe.head) : Path::of(std::move(e));
      out.add(p, c * sign);
    }
  }
  return out;
}

AlgebraElement circular_derivative(const GradedQuiver& q, const CyclicElement& h, const DualRef& f) {
  return circular_derivative(q, h, f.edge).scaled(f.sign);
}

// ------------------------------------------------------------ doubling/master

GradedQuiver doubled(const GradedQuiver& base) {
  GradedQuiver out;
  for (const auto& v : base.vertices()) out.add_vertex(v);
  for (const Edge& e : base.edges()) {
    if (e.degree < -2)
      fail(ErrorKind::input, "edge \"" + e.name + "\": supplied edges must have degree 0, -1 or -2");
    Edge copy = e;
    copy.kind = EdgeKind::original;
    out.add_edge(copy);
  }
  const auto& decl = base.declared_duals();
  for (const auto& [name, ref] : decl)
    if (!base.has_edge(name)) fail(ErrorKind::input, "pairing names unknown edge \"" + name + "\"");

  for (const Edge& e : base.edges()) {
    if (out.dual(e.name)) continue;
    auto it = decl.find(e.name);
    if (it != decl.end()) {
      const DualRef& ref = it->second;
      if (base.has_edge(ref.edge)) {
        auto back = decl.find(ref.edge);
        if (back != decl.end() && !(back->second == DualRef{e.name, ref.sign}))
          fail(ErrorKind::structural, "pairing is not involutive on " + e.name + " / " + ref.edge);
        out.set_pair(e.name, ref.edge, ref.sign);
      } else {
        out.add_edge(Edge{ref.edge, e.head, e.tail, -2 - e.degree, EdgeKind::dual});
        out.set_pair(e.name, ref.edge, ref.sign);
      }
      continue;
    }
    if (e.degree == -1 && e.tail == e.head) {
      out.set_pair(e.name, e.name, 1);
    } else {
      const std::string dn = e.name + "*";
      if (out.has_edge(dn)) fail(ErrorKind::structural, "fresh dual name \"" + dn + "\" already in use");
      out.add_edge(Edge{dn, e.head, e.tail, -2 - e.degree, EdgeKind::dual});
      out.set_pair(e.name, dn, 1);
    }
  }
  return out;
}

void check_superpotential(const GradedQuiver& q, const CyclicElement& h) {
  for (const auto& [w, c] : h.terms()) {
    q.check_path(w);
    if (w.is_lazy()) fail(ErrorKind::input, "superpotential contains a lazy path");
    if (q.head(w) != q.tail(w)) fail(ErrorKind::input, "superpotential word " + format_path(w) + " is not closed");
    if (q.degree(w) != -1)
      fail(ErrorKind::input, "superpotential word " + format_path(w) + " has degree " + std::to_string(q.degree(w)) + ", expected -1");
  }
}

AlgebraElement master_bracket_path(const GradedQuiver& qbar, const CyclicElement& h) {
  AlgebraElement out;
  for (const Edge& e : qbar.edges())
    if (e.kind == EdgeKind::original && !qbar.dual(e.name))
      fail(ErrorKind::structural, "edge \"" + e.name + "\" has no dual");
  for (const auto& [e, ref] : qbar.pairs()) {
    AlgebraElement de = circular_derivative(qbar, h, e);
    AlgebraElement dd = circular_derivative(qbar, h, ref);
    out += multiply(qbar, de, dd);
  }
  return out;
}

CyclicElement master_bracket(const GradedQuiver& qbar, const CyclicElement& h) {
  return cyclic_projection(qbar, master_bracket_path(qbar, h));
}

// --------------------------------------------------------------- completion

std::string loop_name(const std::string& vertex) { return "o_" + vertex; }

CY4Quiver cy4_complete_unchecked(const GradedQuiver& base, const CyclicElement& h) {
  CY4Quiver c;
  c.base = base;
  c.potential = h;
  GradedQuiver q = doubled(base);
  check_superpotential(q, h);
  for (const auto& v : q.vertices()) {
    const std::string o = loop_name(v);
    if (q.has_edge(o)) fail(ErrorKind::structural, "loop name \"" + o + "\" already in use");
    q.add_edge(Edge{o, v, v, -3, EdgeKind::loop});
  }
  for (const Edge& e : q.edges()) c.d[e.name] = AlgebraElement{};

  std::map<std::string, AlgebraElement> dloop;
  for (const auto& [e, ref] : q.pairs()) {
    const Edge& ee = q.edge(e);
    if (ref.edge == e) {
      c.d[e] = circular_derivative(q, h, e);
      dloop[ee.tail].add(Path::of({e, e}), 1);
      continue;
    }
    const Edge& fe = q.edge(ref.edge);
    c.d[e] = circular_derivative(q, h, ref);
    c.d[ref.edge] = circular_derivative(q, h, e).scaled(ref.sign * parity_sign(ee.degree + 1));
    // [e,e*] = s (e∘f - (-1)^{|e||f|} f∘e), split by the vertex each product closes at.
    dloop[ee.head].add(Path::of({ref.edge, e}), ref.sign);
    dloop[ee.tail].add(Path::of({e, ref.edge}), -ref.sign * parity_sign(static_cast<long long>(ee.degree) * fe.degree));
  }
  for (const auto& v : q.vertices()) c.d[loop_name(v)] = dloop[v];
  c.quiver = std::move(q);
  return c;
}

CY4Quiver cy4_complete(const GradedQuiver& base, const CyclicElement& h) {
  GradedQuiver qbar = doubled(base);
  check_superpotential(qbar, h);
  CyclicElement mb = master_bracket(qbar, h);
  if (!mb.is_zero()) fail(ErrorKind::math, "master equation fails: {H,H} = " + format(mb));
  return cy4_complete_unchecked(base, h);
}

const AlgebraElement& differential(const CY4Quiver& c, const std::string& g) {
  auto it = c.d.find(g);
  if (it == c.d.end()) fail(ErrorKind::input, "unknown generator \"" + g + "\"");
  return it->second;
}

AlgebraElement d_extend(const CY4Quiver& c, const AlgebraElement& a) {
  const GradedQuiver& q = c.quiver;
  AlgebraElement out;
  for (const auto& [p, coeff] : a.terms()) {
    if (p.is_lazy()) continue;
    const auto& w = p.edges;
    for (size_t i = 0; i < w.size(); ++i) {
      const AlgebraElement& dg = differential(c, w[i]);
      if (dg.is_zero()) continue;
      // Leibniz: the sign counts the degrees of everything applied after w[i].
      const int sign = parity_sign(degree_of(q, w, i + 1, w.size()));
      const Edge& e = q.edge(w[i]);
      Path left = i + 1 == w.size() ? Path::lazy(e.head) : Path::of({w.begin() + static_cast<long>(i) + 1, w.end()});
      Path right = i == 0 ? Path::lazy(e.tail) : Path::of({w.begin(), w.begin() + static_cast<long>(i)});
      AlgebraElement t = multiply(q, AlgebraElement(left, 1), multiply(q, dg, AlgebraElement(right, 1)));
      out += t.scaled(coeff * sign);
    }
  }
  return out;
}

DgaReport verify_dga(const CY4Quiver& c) {
  DgaReport r;
  for (const Edge& e : c.quiver.edges()) {
    const AlgebraElement& dg = differential(c, e.name);
    for (const auto& [p, coeff] : dg.terms()) {
      if (c.quiver.degree(p) != e.degree + 1 || c.quiver.tail(p) != e.tail || c.quiver.head(p) != e.head) {
        r.ok = false;
        r.generator = e.name;
        r.value = dg;
        r.reason = "d does not raise degree by one or moves endpoints";
        return r;
      }
    }
    AlgebraElement dd = d_extend(c, dg);
    if (!dd.is_zero()) {
      r.ok = false;
      r.generator = e.name;
      r.value = dd;
      r.reason = "d^2 != 0";
      return r;
    }
  }
  return r;
}

// -------------------------------------------------------------------- graft

CY4Quiver graft(const CY4Quiver& c, const Frame& frame) {
  const bool ms = frame.kind == Frame::Kind::ms;
  const int r = frame.kind == Frame::Kind::js ? 2 : frame.r;
  if (ms && (r < 3 || frame.l < 2 || frame.l > r - 1))
    fail(ErrorKind::input, "MS(r,l) requires r >= 3 and 2 <= l <= r-1");
  if (!ms && r < 2) fail(ErrorKind::input, "Flag(r) requires r >= 2");

  GradedQuiver base = c.base;
  const std::vector<std::string> targets = c.base.vertices();
  auto vname = [&](int i) { return r == 2 && i == 1 ? std::string("inf") : "f" + std::to_string(i); };
  for (int i = 1; i <= r - 1; ++i) base.add_vertex(vname(i));
  for (int i = 1; i <= r - 2; ++i) base.add_edge(Edge{"g" + std::to_string(i), vname(i), vname(i + 1), 0});
  const std::string cross = vname(r - 1);
  for (const auto& v : targets) base.add_edge(Edge{"j_" + v, cross, v, 0});

  CyclicElement h = c.potential;
  if (ms) {
    const int l = frame.l;
    base.add_vertex("f0");
    base.add_edge(Edge{"gm1", vname(1), "f0", 0});
    base.add_edge(Edge{"g0", vname(l), "f0", 0});
    base.add_edge(Edge{"rho0", vname(l - 1), "f0", -1});
    GradedQuiver qbar = doubled(base);
    h.add(qbar, Path::of({"g" + std::to_string(l - 1), "g0", "rho0*"}), 1);
  }
  return cy4_complete(base, h);
}

// ----------------------------------------------------------------- fixtures

QuiverWithPotential example_quiver() {
  QuiverWithPotential out;
  GradedQuiver& q = out.quiver;
  for (const char* v : {"1", "2", "3", "4"}) q.add_vertex(v);
  q.add_edge({"e1", "1", "2", 0});
  q.add_edge({"e2", "2", "3", 0});
  q.add_edge({"e3", "3", "4", 0});
  q.add_edge({"e4", "4", "1", 0});
  q.add_edge({"rho1", "4", "2", -1});
  q.add_edge({"rho2", "1", "3", -1});
  GradedQuiver qbar = doubled(q);
  out.potential.add(qbar, Path::of({"e1", "e2", "rho2*"}), 1);
  out.potential.add(qbar, Path::of({"e2", "e3", "rho1"}), 1);
  out.potential.add(qbar, Path::of({"e3", "e4", "rho2"}), 1);
  out.potential.add(qbar, Path::of({"e4", "e1", "rho1*"}), -1);
  return out;
}

namespace {
int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}
}  // namespace

QuiverWithPotential c4_quiver() {
  QuiverWithPotential out;
  GradedQuiver& q = out.quiver;
  q.add_vertex("0");
  for (int i = 1; i <= 4; ++i) q.add_edge({"x" + std::to_string(i), "0", "0", 0});
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) q.add_edge({"c" + std::to_string(i) + std::to_string(j), "0", "0", -1});
  // c*_{σ1σ2} = sgn(σ) c_{σ3σ4}
  q.declare_dual("c12", "c34", 1);
  q.declare_dual("c34", "c12", 1);
  q.declare_dual("c13", "c24", -1);
  q.declare_dual("c24", "c13", -1);
  q.declare_dual("c14", "c23", 1);
  q.declare_dual("c23", "c14", 1);
  GradedQuiver qbar = doubled(q);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      std::vector<int> rest;
      for (int k = 1; k <= 4; ++k)
        if (k != i && k != j) rest.push_back(k);
      const int s = perm_sign({i, j, rest[0], rest[1]});
      const std::string c = "c" + std::to_string(i) + std::to_string(j);
      const std::string xk = "x" + std::to_string(rest[0]);
      const std::string xl = "x" + std::to_string(rest[1]);
      // c∘(x_k∘x_l - x_l∘x_k)
      out.potential.add(qbar, Path::of({xl, xk, c}), s);
      out.potential.add(qbar, Path::of({xk, xl, c}), -s);
    }
  return out;
}

QuiverWithPotential point_quiver() {
  QuiverWithPotential out;
  out.quiver.add_vertex("0");
  return out;
}

// ------------------------------------------------------------------ format

std::string format_path(const Path& p) {
  if (p.is_lazy()) return "l_" + p.vertex;
  std::string s;
  for (size_t i = 0; i < p.edges.size(); ++i) {
    if (i) s += ';';
    s += p.edges[i];
  }
  return s;
}

namespace {
template <class M>
std::string format_terms(const M& terms) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, c] : terms) {
    if (!first) s += " + ";
    first = false;
    s += to_string(c) + " * " + format_path(p);
  }
  return s;
}
}  // namespace

std::string format(const AlgebraElement& a) { return format_terms(a.terms()); }
std::string format(const CyclicElement& c) { return format_terms(c.terms()); }

}  // namespace cy4
