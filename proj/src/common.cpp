// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
#include "cy4/common.hpp"

#include <cctype>

namespace cy4 {

Q parse_rational(const std::string& raw) {
  size_t b = 0, e = raw.size();
  while (b < e && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
  std::string s = raw.substr(b, e - b);
  auto digits = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false))
    fail(ErrorKind::input, "malformed rational \"" + raw + "\"");
  if (num[0] == '+') num = num.substr(1);
  mpz_class n(num), d(den);
  if (d == 0) fail(ErrorKind::input, "zero denominator in \"" + raw + "\"");
  Q q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

}  // namespace cy4
