// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
#include "cy4/lie.hpp"

#include <algorithm>
#include <sstream>

namespace cy4 {

bool letter_less(const std::string& a, const std::string& b) {
  if (a == b) return false;
  if (a == kP) return false;
  if (b == kP) return true;
  return a < b;
}

bool WordLess::operator()(const Word& a, const Word& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), letter_less);
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  WordLess less;
  for (size_t i = 1; i < w.size(); ++i) {
    Word rot(w.begin() + static_cast<long>(i), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(i));
    if (!less(w, rot)) return false;
  }
  return true;
}

namespace {

// w = uv with v the longest proper Lyndon suffix.
size_t standard_split(const Word& w) {
  for (size_t i = 1; i < w.size(); ++i)
    if (is_lyndon(Word(w.begin() + static_cast<long>(i), w.end()))) return i;
  fail(ErrorKind::shape, "word has no standard factorization");
}

AssocPoly assoc_mul(const AssocPoly& a, const AssocPoly& b) {
  AssocPoly r;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      Q& c = r[w];
      c += x * y;
      if (c == 0) r.erase(w);
    }
  return r;
}

void assoc_add(AssocPoly& a, const AssocPoly& b, const Q& s) {
  for (const auto& [w, c] : b) {
    Q& x = a[w];
    x += c * s;
    if (x == 0) a.erase(w);
  }
}

AssocPoly commutator(const AssocPoly& a, const AssocPoly& b) {
  AssocPoly r = assoc_mul(a, b);
  assoc_add(r, assoc_mul(b, a), -1);
  return r;
}

}  // namespace

AssocPoly lyndon_expand(const Word& w) {
  if (!is_lyndon(w)) fail(ErrorKind::shape, "not a Lyndon word");
  if (w.size() == 1) return AssocPoly{{w, Q(1)}};
  size_t i = standard_split(w);
  return commutator(lyndon_expand(Word(w.begin(), w.begin() + static_cast<long>(i))),
                    lyndon_expand(Word(w.begin() + static_cast<long>(i), w.end())));
}

std::string lyndon_bracket_string(const Word& w) {
  if (w.size() == 1) return w[0];
  size_t i = standard_split(w);
  return "[" + lyndon_bracket_string(Word(w.begin(), w.begin() + static_cast<long>(i))) + "," +
         lyndon_bracket_string(Word(w.begin() + static_cast<long>(i), w.end())) + "]";
}

// ----------------------------------------------------------------- LieExpr

LieExpr LieExpr::letter(const std::string& name) {
  LieExpr e;
  e.c_[Word{name}] = 1;
  return e;
}

LieExpr LieExpr::from_assoc(const AssocPoly& p) {
  // The least word of a Lie polynomial is Lyndon and carries its coefficient.
  AssocPoly rest = p;
  LieExpr e;
  while (!rest.empty()) {
    const auto& [w, c] = *rest.begin();
    if (!is_lyndon(w)) fail(ErrorKind::shape, "associative polynomial is not a Lie element");
    Word lw = w;
    Q lc = c;
    e.c_[lw] = lc;
    assoc_add(rest, lyndon_expand(lw), -lc);
  }
  return e;
}

LieExpr LieExpr::operator+(const LieExpr& o) const {
  LieExpr r = *this;
  for (const auto& [w, c] : o.c_) {
    Q& x = r.c_[w];
    x += c;
    if (x == 0) r.c_.erase(w);
  }
  return r;
}

LieExpr LieExpr::operator-(const LieExpr& o) const { return *this + o.scaled(-1); }

LieExpr LieExpr::scaled(const Q& c) const {
  LieExpr r;
  if (c == 0) return r;
  for (const auto& [w, x] : c_) r.c_[w] = x * c;
  return r;
}

AssocPoly LieExpr::to_assoc() const {
  AssocPoly r;
  for (const auto& [w, c] : c_) assoc_add(r, lyndon_expand(w), c);
  return r;
}

std::string LieExpr::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << ' ' << lyndon_bracket_string(w);
  }
  return os.str();
}

LieExpr bracket(const LieExpr& a, const LieExpr& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LieExpr::from_assoc(commutator(a.to_assoc(), b.to_assoc()));
}

LieExpr right_nested(const std::vector<LieExpr>& inner_first) {
  if (inner_first.empty()) return {};
  AssocPoly acc = inner_first[0].to_assoc();
  for (size_t i = 1; i < inner_first.size(); ++i) acc = commutator(inner_first[i].to_assoc(), acc);
  return LieExpr::from_assoc(acc);
}

// ------------------------------------------------------------------ ε signs

std::string class_string(const ClassVec& a) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

EpsilonSystem EpsilonSystem::from_pairing(const std::vector<std::vector<long>>& chi) {
  const size_t n = chi.size();
  EpsilonSystem e;
  e.b.assign(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    if (chi[i].size() != n) fail(ErrorKind::input, "pairing matrix is not square");
    if (chi[i][i] % 2 != 0) fail(ErrorKind::input, "pairing has odd diagonal entry " + std::to_string(i));
    for (size_t j = i + 1; j < n; ++j) e.b[i][j] = static_cast<int>(((chi[i][j] % 2) + 2) % 2);
  }
  return e;
}

int EpsilonSystem::epsilon(const ClassVec& a, const ClassVec& c) const {
  if (a.size() != b.size() || c.size() != b.size()) fail(ErrorKind::input, "class has the wrong lattice rank");
  long s = 0;
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      if (b[i][j]) s += (a[i] % 2) * (c[j] % 2);
  return s % 2 == 0 ? 1 : -1;
}

bool EpsilonSystem::cocycle_check(const ClassVec& a, const ClassVec& c, const ClassVec& d) const {
  ClassVec ac(a.size()), cd(a.size());
  for (size_t i = 0; i < a.size(); ++i) ac[i] = a[i] + c[i], cd[i] = c[i] + d[i];
  ClassVec zero(a.size(), 0);
  return epsilon(a, c) * epsilon(ac, d) == epsilon(c, d) * epsilon(a, cd) && epsilon(a, zero) == 1 &&
         epsilon(zero, a) == 1;
}

bool EpsilonSystem::symmetry_check(const ClassVec& a, const ClassVec& c,
                                   const std::vector<std::vector<long>>& chi) const {
  long x = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) x += a[i] * chi[i][j] * c[j];
  const int s = x % 2 == 0 ? 1 : -1;
  return epsilon(a, c) == s * epsilon(c, a);
}

// ------------------------------------------------------------ JS formula

namespace {

const ClassInfo& info(const ClassTable& t, const ClassVec& a) {
  auto it = t.find(a);
  if (it == t.end()) fail(ErrorKind::input, "class " + class_string(a) + " is not in the class table");
  return it->second;
}

void decompose(const ClassVec& rest, long rest_rk, const ClassTable& table, const Q* phase, std::vector<ClassVec>& cur,
               std::vector<std::vector<ClassVec>>& out) {
  if (std::all_of(rest.begin(), rest.end(), [](long x) { return x == 0; })) {
    if (rest_rk != 0) fail(ErrorKind::input, "rank is not additive on the class table");
    out.push_back(cur);
    return;
  }
  if (rest_rk <= 0) return;
  for (const auto& [c, ci] : table) {
    if (ci.rk > rest_rk) continue;
    if (phase && ci.phase != *phase) continue;
    ClassVec r = rest;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= c[i];
    cur.push_back(c);
    decompose(r, rest_rk - ci.rk, table, phase, cur, out);
    cur.pop_back();
  }
}

Q factorial(int n) {
  Q f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<std::vector<ClassVec>> ordered_decompositions(const ClassVec& alpha, const ClassTable& table,
                                                          bool same_phase) {
  for (const auto& [c, ci] : table) {
    if (c.size() != alpha.size()) fail(ErrorKind::input, "class table mixes lattice ranks");
    if (ci.rk <= 0)
      fail(ErrorKind::resource, "class " + class_string(c) + " has non-positive rank; decompositions are unbounded");
  }
  std::vector<std::vector<ClassVec>> out;
  std::vector<ClassVec> cur;
  const bool zero = std::all_of(alpha.begin(), alpha.end(), [](long x) { return x == 0; });
  if (zero) return {{}};
  const ClassInfo& ai = info(table, alpha);
  decompose(alpha, ai.rk, table, same_phase ? &ai.phase : nullptr, cur, out);
  return out;
}

LieExpr js_rhs(const ClassVec& alpha, const ClassValues& m, const ClassTable& table) {
  LieExpr total;
  for (const auto& tuple : ordered_decompositions(alpha, table)) {
    std::vector<LieExpr> parts{LieExpr::letter(kP)};
    bool skip = false;
    for (const auto& a : tuple) {
      auto it = m.find(a);
      if (it == m.end() || it->second.is_zero()) {
        skip = true;
        break;
      }
      parts.push_back(it->second);
    }
    if (skip) continue;
    total = total + right_nested(parts).scaled(Q(Q(1) / factorial(static_cast<int>(tuple.size()))));
  }
  return total;
}

LieExpr omega_transform(const LieExpr& e, const ClassTable& table) {
  std::map<std::string, long> chi_of;
  for (const auto& [c, ci] : table) chi_of[ci.name] = ci.chi;
  // e = ad(u)P with u read off from the words ending in P; then
  // φ(w·x) = χ(x)·ad(w)(x), which is χ(v)·v on Lie elements v.
  AssocPoly out;
  for (const auto& [w, c] : e.to_assoc()) {
    long np = std::count(w.begin(), w.end(), kP);
    if (np != 1) fail(ErrorKind::shape, "omega_transform needs expressions linear in P");
    if (w.back() != kP) continue;
    if (w.size() == 1) continue;  // bare P pushes forward to 0
    const std::string& x = w[w.size() - 2];
    auto it = chi_of.find(x);
    if (it == chi_of.end()) fail(ErrorKind::input, "letter " + x + " has no class in the table");
    AssocPoly acc{{Word{x}, Q(1)}};
    for (size_t i = w.size() - 2; i-- > 0;) acc = commutator(AssocPoly{{Word{w[i]}, Q(1)}}, acc);
    assoc_add(out, acc, c * it->second);
  }
  return LieExpr::from_assoc(out);
}

LieExpr omega_letter(const ClassTable& table, const ClassVec& a) { return LieExpr::letter(info(table, a).name); }

ClassValues invert_js(const ClassTable& table, const ClassVec& alpha, InvertVariant v) {
  // Process classes by increasing rank so every summand is already known.
  std::vector<std::pair<long, ClassVec>> order;
  for (const auto& [c, ci] : table) order.emplace_back(ci.rk, c);
  std::sort(order.begin(), order.end());
  const long top = info(table, alpha).rk;
  ClassValues m;
  for (const auto& [rk, c] : order) {
    if (rk > top) break;
    const ClassInfo& ci = table.at(c);
    LieExpr corr;
    for (const auto& tuple : ordered_decompositions(c, table)) {
      if (tuple.size() < 2) continue;
      std::vector<LieExpr> parts;
      for (const auto& a : tuple) parts.push_back(m.at(a));
      Q w = Q(info(table, tuple[0]).chi) / factorial(static_cast<int>(tuple.size()));
      corr = corr + right_nested(parts).scaled(w);
    }
    if (v == InvertVariant::corrected) corr = corr.scaled(Q(Q(1) / Q(ci.chi)));
    m[c] = LieExpr::letter(ci.name) - corr;
  }
  return m;
}

// ----------------------------------------------------------------- q-series

LieExpr QSeries::at(int n) const {
  auto it = c.find(n);
  return it == c.end() ? LieExpr() : it->second;
}

std::string QSeries::str() const {
  std::ostringstream os;
  for (int n = 0; n <= order; ++n) os << "q^" << n << ": " << at(n).str() << '\n';
  return os.str();
}

QSeries exp_adjoint(const QSeries& g, const QSeries& t, int order) {
  if (order < 0) fail(ErrorKind::input, "negative truncation order");
  QSeries sum{order, {}}, term{order, {}};
  for (const auto& [n, x] : t.c)
    if (n <= order) term.c[n] = x;
  sum = term;
  for (int k = 1; k <= order; ++k) {
    QSeries next{order, {}};
    for (const auto& [n, gn] : g.c) {
      if (n < 1) fail(ErrorKind::input, "generator series must start at q^1");
      for (const auto& [m, x] : term.c) {
        if (n + m > order) continue;
        LieExpr b = bracket(gn, x).scaled(Q(1, k));
        next.c[n + m] = next.at(n + m) + b;
      }
    }
    term = next;
    for (const auto& [n, x] : term.c) sum.c[n] = sum.at(n) + x;
  }
  for (auto it = sum.c.begin(); it != sum.c.end();) it = it->second.is_zero() ? sum.c.erase(it) : std::next(it);
  return sum;
}

QSeries wc_invert(const QSeries& g, const QSeries& s, int order) {
  QSeries neg = g;
  for (auto& [n, x] : neg.c) x = x.scaled(-1);
  return exp_adjoint(neg, s, order);
}

QSeries letter_series(const std::string& stem, int from, int order) {
  QSeries s{order, {}};
  for (int n = from; n <= order; ++n) s.c[n] = LieExpr::letter(stem + std::to_string(n));
  return s;
}

QSeries dt_from_pt(int order) { return exp_adjoint(letter_series("M", 1, order), letter_series("PT", 0, order), order); }

QSeries hilb_series(int order) {
  QSeries p{order, {{0, LieExpr::letter(kP)}}};
  return exp_adjoint(letter_series("M", 1, order), p, order);
}

Q binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Q r = 1;
  for (long i = 1; i <= k; ++i) r = r * Q(n - k + i) / Q(i);
  return r;
}

LieExpr flag_wc_rhs(const std::vector<FlagTerm>& terms, long chi_alpha) {
  LieExpr r;
  for (const auto& t : terms) {
    if (t.chi1 + t.chi2 != chi_alpha) fail(ErrorKind::input, "χ is not additive for a flag term");
    if (t.chi1 < 1 || t.chi2 < 1) fail(ErrorKind::input, "flag term needs positive χ values");
    r = r + bracket(t.omega1, t.omega2).scaled(Q(Q(1) / binomial(chi_alpha, t.chi1)));
  }
  return r;
}

}  // namespace cy4
