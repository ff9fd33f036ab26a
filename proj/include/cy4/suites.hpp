// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
//
// Self-check suites behind `cy4 verify`. Every suite lists its checks in a
// fixed order; the report payload never contains timing.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cy4 {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string witness;
};

struct RunReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::vector<int> orders;  // series truncation orders used, sorted
  double elapsed_ms = 0;    // reported on a separate channel
  bool ok() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  int order = 12;
  int max_n = 6;            // fixed-point enumeration bound
  int max_rank = 4;         // sign suites
  std::string fixture_dir;  // empty: use the built-in fixtures
};

const std::vector<std::string>& suite_names();  // all, quiver, signs, series, wc, toy, rep
// Unknown names are input errors.
RunReport run_suite(const std::string& name, const SuiteOptions& opt);
// Sign checks restricted to pentagon | double-dual | ot-compare | all.
RunReport run_sign_checks(const std::string& which, const SuiteOptions& opt);

std::string report_text(const RunReport& r);
std::string report_json(const RunReport& r);

}  // namespace cy4
