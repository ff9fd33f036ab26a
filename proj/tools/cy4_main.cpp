// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
//
// Command-line front end. Talks to the library only through the C API.
#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>

#include "cy4/cy4.h"

namespace {

struct Globals {
  int order = -1;  // -1: per-command default
  uint64_t seed = 1;
  std::string format = "text";
  cy4_format fmt() const { return format == "json" ? CY4_FORMAT_JSON : CY4_FORMAT_TEXT; }
  int order_or(int fallback) const { return order < 0 ? fallback : order; }
};

using QuiverPtr = std::unique_ptr<cy4_quiver, void (*)(cy4_quiver*)>;

int report_error(cy4_status st) {
  std::cerr << "cy4: " << cy4_last_error() << "\n";
  return st;
}

// Prints a library-produced report; a failing check still prints its report.
int emit(cy4_status st, char* out, const std::string& path = "") {
  if (out) {
    if (path.empty()) {
      std::fputs(out, stdout);
    } else {
      std::ofstream f(path, std::ios::binary);
      f << out;
      if (!f) {
        cy4_string_free(out);
        std::cerr << "cy4: cannot write " << path << "\n";
        return CY4_INPUT_ERROR;
      }
    }
    cy4_string_free(out);
  }
  if (st != CY4_OK) std::cerr << "cy4: " << cy4_last_error() << "\n";
  return st;
}

QuiverPtr load(const std::string& path, int& status) {
  cy4_quiver* q = nullptr;
  status = cy4_quiver_load(path.c_str(), &q);
  if (status != CY4_OK) report_error(static_cast<cy4_status>(status));
  return QuiverPtr(q, cy4_quiver_free);
}

int max_n_from_env() {
  const char* v = std::getenv("CY4_MAX_N");
  if (!v || !*v) return 8;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1 || n > 64) {
    std::cerr << "cy4: CY4_MAX_N must be an integer in 1..64\n";
    return -1;
  }
  return static_cast<int>(n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for CY4 dg-quivers, localization series and wall-crossing", "cy4"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--order", g.order, "series truncation order");
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.set_version_flag("--version", std::string(cy4_version()));

  std::function<int()> action;
  auto bind = [&](CLI::App* sub, std::function<int()> f) { sub->callback([&action, f] { action = f; }); };

  // quiver
  auto* quiver = app.add_subcommand("quiver", "graded quivers with superpotential")->require_subcommand(1);
  std::string qfile, out_path, generator, frame;
  int frame_r = 0, frame_l = 0;
  {
    auto* s = quiver->add_subcommand("check-master", "master equation and d^2 = 0");
    s->add_option("file", qfile)->required();
    bind(s, [&] {
      int st;
      auto q = load(qfile, st);
      if (!q) return st;
      char* out = nullptr;
      const cy4_status r = cy4_quiver_check_master(q.get(), g.fmt(), &out);
      return emit(r, out);
    });
  }
  {
    auto* s = quiver->add_subcommand("complete", "CY4 completion with differentials (JSON)");
    s->add_option("file", qfile)->required();
    s->add_option("-o,--output", out_path, "output file (default stdout)");
    bind(s, [&] {
      int st;
      auto q = load(qfile, st);
      if (!q) return st;
      char* out = nullptr;
      const cy4_status r = cy4_quiver_complete(q.get(), &out);
      return emit(r, out, out_path);
    });
  }
  {
    auto* s = quiver->add_subcommand("diff", "differential of one generator");
    s->add_option("file", qfile)->required();
    s->add_option("--generator", generator)->required();
    bind(s, [&] {
      int st;
      auto q = load(qfile, st);
      if (!q) return st;
      char* out = nullptr;
      const cy4_status r = cy4_quiver_diff(q.get(), generator.c_str(), g.fmt(), &out);
      return emit(r, out);
    });
  }
  {
    auto* s = quiver->add_subcommand("graft", "attach a framing chain");
    s->add_option("file", qfile)->required();
    s->add_option("--frame", frame)->required()->check(CLI::IsMember({"js", "flag", "ms"}));
    s->add_option("--r", frame_r);
    s->add_option("--l", frame_l);
    bind(s, [&] {
      int st;
      auto q = load(qfile, st);
      if (!q) return st;
      char* out = nullptr;
      const cy4_status r = cy4_quiver_graft(q.get(), frame.c_str(), frame_r, frame_l, g.fmt(), &out);
      return emit(r, out);
    });
  }

  // rep
  auto* rep = app.add_subcommand("rep", "representations")->require_subcommand(1);
  std::string rep_file, emit_mode = "counts";
  int n = 0;
  {
    auto* s = rep->add_subcommand("ext", "deformation complex at a representation");
    s->add_option("--quiver", qfile)->required();
    s->add_option("--rep", rep_file)->required();
    bind(s, [&] {
      int st;
      auto q = load(qfile, st);
      if (!q) return st;
      char* out = nullptr;
      const cy4_status r = cy4_rep_ext(q.get(), rep_file.c_str(), g.fmt(), &out);
      return emit(r, out);
    });
  }
  {
    auto* s = rep->add_subcommand("fixed-points", "torus-fixed points of the C^4 quiver");
    s->add_option("--n", n)->required();
    s->add_option("--emit", emit_mode)->check(CLI::IsMember({"counts", "reps"}));
    bind(s, [&] {
      const int max_n = max_n_from_env();
      if (max_n < 0) return static_cast<int>(CY4_INPUT_ERROR);
      char* out = nullptr;
      const cy4_status r = cy4_rep_fixed_points(n, emit_mode.c_str(), max_n, g.fmt(), &out);
      return emit(r, out);
    });
  }
  std::string dvec, evec;
  {
    auto* s = app.add_subcommand("euler", "Euler form chi(d, e) on the CY4 completion");
    s->add_option("--quiver", qfile)->required();
    s->add_option("--d", dvec)->required();
    s->add_option("--e", evec)->required();
    bind(s, [&] {
      int st;
      auto q = load(qfile, st);
      if (!q) return st;
      long long chi = 0;
      const cy4_status r = cy4_euler(q.get(), dvec.c_str(), evec.c_str(), &chi);
      if (r != CY4_OK) return report_error(r);
      if (g.fmt() == CY4_FORMAT_JSON) {
        std::printf("{\n  \"chi\": %lld\n}\n", chi);
      } else {
        std::printf("%lld\n", chi);
      }
      return 0;
    });
  }

  // signs
  std::string suite = "all";
  int max_rank = 4;
  {
    auto* signs = app.add_subcommand("signs", "orientation sign calculus")->require_subcommand(1);
    auto* s = signs->add_subcommand("verify", "run sign checks");
    s->add_option("--suite", suite)->check(CLI::IsMember({"pentagon", "double-dual", "ot-compare", "all"}));
    s->add_option("--max-rank", max_rank)->check(CLI::Range(0, 6));
    bind(s, [&] {
      char* out = nullptr;
      const cy4_status r = cy4_signs_verify(suite.c_str(), max_rank, g.seed, g.fmt(), &out);
      return emit(r, out);
    });
  }

  // series
  std::string expr, regime = "local", spec_file;
  {
    auto* series = app.add_subcommand("series", "equivariant localization series")->require_subcommand(1);
    auto* s = series->add_subcommand("expand", "expand a product of powers of linear forms");
    s->add_option("--expr", expr)->required();
    s->add_option("--regime", regime)->check(CLI::IsMember({"local", "global"}));
    bind(s, [&] {
      char* out = nullptr;
      const cy4_status r = cy4_series_expand(expr.c_str(), regime.c_str(), g.order_or(10), g.fmt(), &out);
      return emit(r, out);
    });
    s = series->add_subcommand("sqrt-euler", "square-root Euler class identity");
    s->add_option("--spec", spec_file)->required();
    bind(s, [&] {
      char* out = nullptr;
      const cy4_status r = cy4_series_sqrt_euler(spec_file.c_str(), g.order_or(8), g.fmt(), &out);
      return emit(r, out);
    });
    s = series->add_subcommand("global-residue", "residue predicate for a global approach");
    s->add_option("--theta", spec_file)->required();
    bind(s, [&] {
      char* out = nullptr;
      const cy4_status r = cy4_series_global_residue(spec_file.c_str(), g.order_or(8), g.fmt(), &out);
      return emit(r, out);
    });
  }

  // wc
  std::string alpha, classes, variant = "corrected";
  {
    auto* wc = app.add_subcommand("wc", "Lie-algebraic wall-crossing")->require_subcommand(1);
    auto* s = wc->add_subcommand("js", "right-hand side of the Joyce-Song formula");
    s->add_option("--alpha", alpha)->required();
    s->add_option("--classes", classes)->required();
    bind(s, [&] {
      char* out = nullptr;
      const cy4_status r = cy4_wc_js(alpha.c_str(), classes.c_str(), g.fmt(), &out);
      return emit(r, out);
    });
    s = wc->add_subcommand("invert", "solve for the invariants below alpha");
    s->add_option("--alpha", alpha)->required();
    s->add_option("--classes", classes)->required();
    s->add_option("--variant", variant)->check(CLI::IsMember({"corrected", "as-printed"}));
    bind(s, [&] {
      char* out = nullptr;
      const cy4_status r = cy4_wc_invert(alpha.c_str(), classes.c_str(), variant.c_str(), g.fmt(), &out);
      return emit(r, out);
    });
    s = wc->add_subcommand("dtpt", "DT/PT exponential, inverted");
    bind(s, [&] {
      char* out = nullptr;
      const cy4_status r = cy4_wc_dtpt(g.order_or(4), g.fmt(), &out);
      return emit(r, out);
    });
    s = wc->add_subcommand("hilb", "Hilbert-scheme exponential, inverted");
    bind(s, [&] {
      char* out = nullptr;
      const cy4_status r = cy4_wc_hilb(g.order_or(4), g.fmt(), &out);
      return emit(r, out);
    });
  }

  // toy
  int rank = 0, a = 0;
  {
    auto* toy = app.add_subcommand("toy", "projective-bundle and residue toy models")->require_subcommand(1);
    auto* s = toy->add_subcommand("pushforward", "pushforward along P(V) -> point");
    s->add_option("--r", rank)->required();
    s->add_option("--expr", expr)->required();
    bind(s, [&] {
      char* out = nullptr;
      const cy4_status r = cy4_toy_pushforward(rank, expr.c_str(), g.fmt(), &out);
      return emit(r, out);
    });
    s = toy->add_subcommand("bracket-check", "bracket pushdown identity");
    s->add_option("--r", rank)->required();
    s->add_option("--a", a);
    bind(s, [&] {
      char* out = nullptr;
      const cy4_status r = cy4_toy_bracket_check(rank, a, g.fmt(), &out);
      return emit(r, out);
    });
    s = toy->add_subcommand("flag-residues", "fixed-locus residues of the flag master space");
    s->add_option("--spec", spec_file)->required();
    bind(s, [&] {
      char* out = nullptr;
      const cy4_status r = cy4_toy_flag_residues(spec_file.c_str(), g.fmt(), &out);
      return emit(r, out);
    });
  }

  // verify
  std::string fixtures;
  {
    auto* s = app.add_subcommand("verify", "run a self-check suite");
    s->add_option("--suite", suite, "all, quiver, signs, series, wc, toy or rep")->required();
    s->add_option("--fixtures", fixtures, "directory with example.json, c4.json, point.json");
    bind(s, [&] {
      const int max_n = max_n_from_env();
      if (max_n < 0) return static_cast<int>(CY4_INPUT_ERROR);
      char* out = nullptr;
      double ms = 0;
      const cy4_status st = cy4_verify(suite.c_str(), g.seed, g.order_or(12), std::min(max_n, 6),
                                       fixtures.empty() ? nullptr : fixtures.c_str(), g.fmt(), &out, &ms);
      if (out) std::fprintf(stderr, "elapsed: %.1f ms\n", ms);
      return emit(st, out);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return CY4_INPUT_ERROR;
  }
  return action ? action() : static_cast<int>(CY4_INPUT_ERROR);
}
