// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
//
// JSON file forms. Every number crossing a file boundary is an exact rational
// string. Parse errors are input errors whose message starts with the field
// path, e.g. "edges[2].degree: ...".
#pragma once

#include <string>

#include "cy4/lie.hpp"
#include "cy4/quiver.hpp"
#include "cy4/rep.hpp"
#include "cy4/series.hpp"
#include "cy4/toy.hpp"

namespace cy4 {

std::string read_text_file(const std::string& path);

// {"vertices":[...], "edges":[{"name","tail","head","degree"}],
//  "pairing":{"e":"f" | "-f"}, "superpotential":[{"coeff","path":[...]}]}
QuiverWithPotential parse_quiver_json(const std::string& text);
std::string emit_quiver_json(const QuiverWithPotential& q);
// The input form plus a "completed" section listing generators and differentials.
std::string emit_completed_json(const QuiverWithPotential& q, const CY4Quiver& c);

// {"dims":{"v":n}, "matrices":{"e":[["p/q",...],...]}}; absent degree-0 edges are zero.
Representation parse_rep_json(const std::string& text, const CY4Quiver& c);
std::string emit_rep_json(const Representation& r);

// "1,2,0" in the vertex order of the quiver.
DimVector parse_dim_list(const std::string& s, const CY4Quiver& c);
ClassVec parse_class_list(const std::string& s);

// [{"mult":1, "n_z":1, "lambda":{"l1":1}, "rank":1, "roots":["b"]}, ...]
EqKClass parse_kclass_json(const std::string& text);
std::string emit_kclass_json(const EqKClass& k);

struct SqrtEulerSpec {
  EqKClass t_ge, t_le, e_ge;
  Regime regime = Regime::local;
};
// {"t_ge":K, "t_le":K, "e_ge":K, "regime":"local"|"global"}
SqrtEulerSpec parse_sqrt_euler_json(const std::string& text);

// {"classes":[{"class":[1,0], "name":"X_a", "rk":1, "chi":2, "phase":"1/2"}]}
ClassTable parse_classes_json(const std::string& text);
std::string emit_classes_json(const ClassTable& t);

// {"A","A_prime","N1","N2","A1","A2","theta","epsilon","project_translations","order"}
FlagLocusSpec parse_flag_spec_json(const std::string& text);
std::string emit_flag_spec_json(const FlagLocusSpec& s);

}  // namespace cy4
