// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
#include "cy4/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace cy4 {

using json = nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  fail(ErrorKind::input, (path.empty() ? std::string("<root>") : path) + ": " + msg);
}

// Runs f, prefixing any library error with the field path.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string& path, size_t i) { return path + "[" + std::to_string(i) + "]"; }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::input, std::string("malformed JSON: ") + e.what());
  }
}

const json& need(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(join(path, key), "missing field");
  return *it;
}

const json* maybe(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

long long as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<long long>();
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) bad(path, "expected true or false");
  return j.get<bool>();
}

Q as_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Q(j.get<long>());
  if (!j.is_string()) bad(path, "expected an exact rational string \"p/q\"");
  return at_path(path, [&] { return parse_rational(j.get<std::string>()); });
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

const json& as_object(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const char* kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::original: return "original";
    case EdgeKind::dual: return "dual";
    case EdgeKind::loop: return "loop";
  }
  return "original";
}

json quiver_to_json(const QuiverWithPotential& q) {
  json out = json::object();
  out["vertices"] = q.quiver.vertices();
  json edges = json::array();
  for (const Edge& e : q.quiver.edges())
    edges.push_back({{"name", e.name}, {"tail", e.tail}, {"head", e.head}, {"degree", e.degree}});
  out["edges"] = edges;
  json pairing = json::object();
  for (const auto& [e, ref] : q.quiver.declared_duals()) pairing[e] = (ref.sign < 0 ? "-" : "") + ref.edge;
  out["pairing"] = pairing;
  json pot = json::array();
  for (const auto& [p, c] : q.potential.terms()) pot.push_back({{"coeff", to_string(c)}, {"path", p.edges}});
  out["superpotential"] = pot;
  return out;
}

EqKClass kclass_from_json(const json& j, const std::string& path) {
  EqKClass k;
  as_array(j, path);
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string p = index(path, i);
    const json& t = as_object(j[i], p);
    EqTerm term;
    if (auto* m = maybe(t, "mult", p)) term.mult = static_cast<int>(as_int(*m, join(p, "mult")));
    if (auto* z = maybe(t, "n_z", p)) term.n_z = static_cast<int>(as_int(*z, join(p, "n_z")));
    if (auto* l = maybe(t, "lambda", p)) {
      const std::string lp = join(p, "lambda");
      for (const auto& [name, n] : as_object(*l, lp).items()) {
        if (name.size() < 2 || name[0] != 'l' || name.find_first_not_of("0123456789", 1) != std::string::npos)
          bad(join(lp, name), "torus weights are named l<digits>");
        term.lam[name] = static_cast<int>(as_int(n, join(lp, name)));
      }
    }
    if (auto* r = maybe(t, "rank", p)) term.rank = static_cast<int>(as_int(*r, join(p, "rank")));
    if (auto* roots = maybe(t, "roots", p)) {
      const std::string rp = join(p, "roots");
      as_array(*roots, rp);
      for (size_t q = 0; q < roots->size(); ++q) {
        const std::string s = as_string((*roots)[q], index(rp, q));
        term.roots.push_back(at_path(index(rp, q), [&] { return parse_linear(s); }));
      }
      if (!maybe(t, "rank", p)) term.rank = static_cast<int>(term.roots.size());
    }
    if (term.mult == 0) bad(join(p, "mult"), "multiplicity must be nonzero");
    at_path(p, [&] { return chern_roots(term); });
    k.push_back(std::move(term));
  }
  return k;
}

json kclass_to_json(const EqKClass& k) {
  json a = json::array();
  for (const EqTerm& t : k) {
    json roots = json::array();
    for (const Poly& r : t.roots) roots.push_back(r.str());
    a.push_back({{"mult", t.mult}, {"n_z", t.n_z}, {"lambda", t.lam}, {"rank", t.rank}, {"roots", roots}});
  }
  return a;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::input, "cannot open file \"" + path + "\"");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// ------------------------------------------------------------- quivers

QuiverWithPotential parse_quiver_json(const std::string& text) {
  const json j = parse_json(text);
  as_object(j, "");
  QuiverWithPotential out;
  GradedQuiver& q = out.quiver;
  const json empty = json::array();
  const json* vp = maybe(j, "vertices", "");
  const json& vs = as_array(vp ? *vp : empty, "vertices");
  for (size_t i = 0; i < vs.size(); ++i) {
    const std::string p = index("vertices", i);
    const std::string v = as_string(vs[i], p);
    at_path(p, [&] { q.add_vertex(v); });
  }
  if (const json* es = maybe(j, "edges", "")) {
    as_array(*es, "edges");
    for (size_t i = 0; i < es->size(); ++i) {
      const std::string p = index("edges", i);
      const json& e = as_object((*es)[i], p);
      Edge edge;
      edge.name = as_string(need(e, "name", p), join(p, "name"));
      edge.tail = as_string(need(e, "tail", p), join(p, "tail"));
      edge.head = as_string(need(e, "head", p), join(p, "head"));
      const long long deg = as_int(need(e, "degree", p), join(p, "degree"));
      if (deg < -2 || deg > 0) bad(join(p, "degree"), "degree " + std::to_string(deg) + " outside {0,-1,-2}");
      edge.degree = static_cast<int>(deg);
      if (!q.has_vertex(edge.tail)) bad(join(p, "tail"), "unknown vertex \"" + edge.tail + "\"");
      if (!q.has_vertex(edge.head)) bad(join(p, "head"), "unknown vertex \"" + edge.head + "\"");
      at_path(p, [&] { q.add_edge(edge); });
    }
  }
  if (const json* pr = maybe(j, "pairing", "")) {
    for (const auto& [e, target] : as_object(*pr, "pairing").items()) {
      const std::string p = join("pairing", e);
      std::string t = as_string(target, p);
      int sign = 1;
      if (!t.empty() && t[0] == '-') {
        sign = -1;
        t = t.substr(1);
      }
      if (!q.has_edge(e)) bad(p, "unknown edge \"" + e + "\"");
      at_path(p, [&] { q.declare_dual(e, t, sign); });
    }
  }
  const GradedQuiver qbar = at_path("pairing", [&] { return doubled(q); });
  if (const json* sp = maybe(j, "superpotential", "")) {
    as_array(*sp, "superpotential");
    for (size_t i = 0; i < sp->size(); ++i) {
      const std::string p = index("superpotential", i);
      const json& t = as_object((*sp)[i], p);
      const Q c = as_rational(need(t, "coeff", p), join(p, "coeff"));
      const json& path = as_array(need(t, "path", p), join(p, "path"));
      std::vector<std::string> edges;
      for (size_t k = 0; k < path.size(); ++k) {
        const std::string name = as_string(path[k], index(join(p, "path"), k));
        if (!qbar.has_edge(name)) bad(index(join(p, "path"), k), "unknown edge \"" + name + "\"");
        edges.push_back(name);
      }
      if (edges.empty()) bad(join(p, "path"), "empty path");
      at_path(p, [&] { out.potential.add(qbar, Path::of(edges), c); });
    }
  }
  at_path("superpotential", [&] { check_superpotential(qbar, out.potential); });
  return out;
}

std::string emit_quiver_json(const QuiverWithPotential& q) { return dump(quiver_to_json(q)); }

std::string emit_completed_json(const QuiverWithPotential& q, const CY4Quiver& c) {
  json out = quiver_to_json(q);
  json edges = json::array();
  for (const Edge& e : c.quiver.edges())
    edges.push_back(
        {{"name", e.name}, {"tail", e.tail}, {"head", e.head}, {"degree", e.degree}, {"kind", kind_name(e.kind)}});
  json d = json::object();
  for (const auto& [g, x] : c.d) d[g] = format(x);
  out["completed"] = {{"edges", edges}, {"differentials", d}, {"potential", format(c.potential)}};
  return dump(out);
}

// ------------------------------------------------------ representations

Representation parse_rep_json(const std::string& text, const CY4Quiver& c) {
  const json j = parse_json(text);
  as_object(j, "");
  Representation r;
  for (const auto& [v, n] : as_object(need(j, "dims", ""), "dims").items()) {
    const std::string p = join("dims", v);
    if (!c.quiver.has_vertex(v)) bad(p, "unknown vertex \"" + v + "\"");
    const long long d = as_int(n, p);
    if (d < 0) bad(p, "negative dimension");
    r.dims[v] = static_cast<int>(d);
  }
  if (const json* ms = maybe(j, "matrices", "")) {
    for (const auto& [e, m] : as_object(*ms, "matrices").items()) {
      const std::string p = join("matrices", e);
      if (!c.quiver.has_edge(e)) bad(p, "unknown edge \"" + e + "\"");
      const Edge& edge = c.quiver.edge(e);
      if (edge.degree != 0) bad(p, "only degree-0 edges carry matrices");
      const size_t rows = static_cast<size_t>(dim_at(r.dims, edge.head));
      const size_t cols = static_cast<size_t>(dim_at(r.dims, edge.tail));
      as_array(m, p);
      if (m.size() != rows) bad(p, "expected " + std::to_string(rows) + " rows (dimension at head)");
      Matrix a(rows, cols);
      for (size_t i = 0; i < rows; ++i) {
        const std::string rp = index(p, i);
        as_array(m[i], rp);
        if (m[i].size() != cols) bad(rp, "expected " + std::to_string(cols) + " entries (dimension at tail)");
        for (size_t k = 0; k < cols; ++k) a(i, k) = as_rational(m[i][k], index(rp, k));
      }
      r.m[e] = a;
    }
  }
  for (const Edge& e : c.quiver.edges())
    if (e.degree == 0 && !r.m.count(e.name))
      r.m[e.name] = Matrix(static_cast<size_t>(dim_at(r.dims, e.head)), static_cast<size_t>(dim_at(r.dims, e.tail)));
  at_path("matrices", [&] { check_representation(c, r); });
  return r;
}

std::string emit_rep_json(const Representation& r) {
  json ms = json::object();
  for (const auto& [e, m] : r.m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
      rows.push_back(row);
    }
    ms[e] = rows;
  }
  return dump({{"dims", r.dims}, {"matrices", ms}});
}

namespace {
std::vector<long> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      fail(ErrorKind::input, what + ": malformed integer \"" + item + "\"");
    }
  }
  if (out.empty()) fail(ErrorKind::input, what + ": empty list");
  return out;
}
}  // namespace

DimVector parse_dim_list(const std::string& s, const CY4Quiver& c) {
  const auto v = parse_int_list(s, "dimension vector");
  const auto& vs = c.quiver.vertices();
  if (v.size() != vs.size())
    fail(ErrorKind::input, "dimension vector has " + std::to_string(v.size()) + " entries, quiver has " +
                               std::to_string(vs.size()) + " vertices");
  DimVector d;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) fail(ErrorKind::input, "dimension vector: negative entry at vertex " + vs[i]);
    d[vs[i]] = static_cast<int>(v[i]);
  }
  return d;
}

ClassVec parse_class_list(const std::string& s) { return parse_int_list(s, "class"); }

// ------------------------------------------------------------ K-classes

EqKClass parse_kclass_json(const std::string& text) { return kclass_from_json(parse_json(text), ""); }
std::string emit_kclass_json(const EqKClass& k) { return dump(kclass_to_json(k)); }

SqrtEulerSpec parse_sqrt_euler_json(const std::string& text) {
  const json j = parse_json(text);
  SqrtEulerSpec s;
  as_object(j, "");
  if (auto* x = maybe(j, "t_ge", "")) s.t_ge = kclass_from_json(*x, "t_ge");
  if (auto* x = maybe(j, "t_le", "")) s.t_le = kclass_from_json(*x, "t_le");
  if (auto* x = maybe(j, "e_ge", "")) s.e_ge = kclass_from_json(*x, "e_ge");
  if (auto* x = maybe(j, "regime", "")) {
    const std::string r = as_string(*x, "regime");
    s.regime = at_path("regime", [&] { return parse_regime(r); });
  }
  return s;
}

// ------------------------------------------------------------- classes

ClassTable parse_classes_json(const std::string& text) {
  const json j = parse_json(text);
  const json& cs = as_array(need(j, "classes", ""), "classes");
  ClassTable t;
  size_t dim = 0;
  for (size_t i = 0; i < cs.size(); ++i) {
    const std::string p = index("classes", i);
    const json& c = as_object(cs[i], p);
    const json& v = as_array(need(c, "class", p), join(p, "class"));
    ClassVec a;
    for (size_t k = 0; k < v.size(); ++k) a.push_back(static_cast<long>(as_int(v[k], index(join(p, "class"), k))));
    if (a.empty()) bad(join(p, "class"), "empty class vector");
    if (i == 0) dim = a.size();
    if (a.size() != dim) bad(join(p, "class"), "class vectors must share one length");
    if (t.count(a)) bad(join(p, "class"), "duplicate class " + class_string(a));
    ClassInfo info;
    info.name = as_string(need(c, "name", p), join(p, "name"));
    if (info.name.empty() || info.name == kP) bad(join(p, "name"), "name must be nonempty and differ from P");
    if (auto* x = maybe(c, "rk", p)) info.rk = static_cast<long>(as_int(*x, join(p, "rk")));
    if (auto* x = maybe(c, "chi", p)) info.chi = static_cast<long>(as_int(*x, join(p, "chi")));
    if (auto* x = maybe(c, "phase", p)) info.phase = as_rational(*x, join(p, "phase"));
    if (info.chi <= 0) bad(join(p, "chi"), "chi must be positive");
    t[a] = info;
  }
  return t;
}

std::string emit_classes_json(const ClassTable& t) {
  json cs = json::array();
  for (const auto& [a, info] : t)
    cs.push_back(
        {{"class", a}, {"name", info.name}, {"rk", info.rk}, {"chi", info.chi}, {"phase", to_string(info.phase)}});
  return dump({{"classes", cs}});
}

// ------------------------------------------------------------ flag loci

FlagLocusSpec parse_flag_spec_json(const std::string& text) {
  const json j = parse_json(text);
  as_object(j, "");
  FlagLocusSpec s;
  auto str = [&](const char* key, std::string& dst) {
    if (auto* x = maybe(j, key, "")) dst = as_string(*x, key);
    if (dst.empty()) bad(key, "token must be nonempty");
  };
  str("A", s.a);
  str("A_prime", s.a_prime);
  str("A1", s.a1);
  str("A2", s.a2);
  s.n1 = kclass_from_json(need(j, "N1", ""), "N1");
  s.n2 = kclass_from_json(need(j, "N2", ""), "N2");
  if (auto* x = maybe(j, "theta", "")) s.theta = kclass_from_json(*x, "theta");
  if (auto* x = maybe(j, "epsilon", "")) {
    const long long e = as_int(*x, "epsilon");
    if (e != 1 && e != -1) bad("epsilon", "must be 1 or -1");
    s.epsilon = static_cast<int>(e);
  }
  if (auto* x = maybe(j, "project_translations", "")) s.project_translations = as_bool(*x, "project_translations");
  if (auto* x = maybe(j, "order", "")) {
    const long long o = as_int(*x, "order");
    if (o < 1 || o > 64) bad("order", "must lie in 1..64");
    s.order = static_cast<int>(o);
  }
  return s;
}

std::string emit_flag_spec_json(const FlagLocusSpec& s) {
  return dump({{"A", s.a},
               {"A_prime", s.a_prime},
               {"A1", s.a1},
               {"A2", s.a2},
               {"N1", kclass_to_json(s.n1)},
               {"N2", kclass_to_json(s.n2)},
               {"theta", kclass_to_json(s.theta)},
               {"epsilon", s.epsilon},
               {"project_translations", s.project_translations},
               {"order", s.order}});
}

}  // namespace cy4
