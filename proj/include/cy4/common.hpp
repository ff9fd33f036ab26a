// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cy4 {

using Q = mpq_class;

enum class ErrorKind {
  input,       // malformed or out-of-range input
  structural,  // inconsistent quiver / pairing / chain data
  singular,    // non-invertible series or coefficient
  shape,       // expression of the wrong form for an operation
  resource,    // configured bound exceeded
  math,        // a mathematical precondition failed (e.g. master equation)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

// Exit code contract: 0 pass, 1 math failure, 2 input error, 3 resource bound.
inline int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::resource: return 3;
    case ErrorKind::math: return 1;
    default: return 2;
  }
}

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
Q parse_rational(const std::string& s);
std::string to_string(const Q& q);

}  // namespace cy4
