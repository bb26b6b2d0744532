#include "cremona/manifest.hpp"

#include <map>

#include "cremona/error.hpp"

namespace cremona {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "PAPER";
    case Provenance::Derived: return "DERIVED";
    case Provenance::Trivial: return "TRIVIAL";
  }
  return "?";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "PAPER") return Provenance::Paper;
  if (s == "DERIVED") return Provenance::Derived;
  if (s == "TRIVIAL") return Provenance::Trivial;
  throw Error(ErrorKind::MalformedSpec, "unknown provenance '" + s + "'");
}

nlohmann::json to_json(const CheckSpec& c) {
  nlohmann::json j;
  j["name"] = c.name;
  j["op"] = c.op;
  j["args"] = c.args;
  j["expected"] = c.expected;
  if (!c.select.empty()) j["select"] = c.select;
  j["provenance"] = to_string(c.provenance);
  j["anchor"] = c.anchor;
  if (!c.recheck) j["recheck"] = false;
  return j;
}

CheckSpec check_from_json(const nlohmann::json& j) {
  try {
    CheckSpec c;
    c.name = j.at("name").get<std::string>();
    c.op = j.at("op").get<std::string>();
    c.args = j.value("args", nlohmann::json::object());
    c.expected = j.at("expected");
    if (j.contains("select")) c.select = j.at("select").get<std::vector<std::string>>();
    c.provenance = provenance_from_string(j.value("provenance", std::string("DERIVED")));
    c.anchor = j.value("anchor", std::string());
    c.recheck = j.value("recheck", true);
    if (c.provenance == Provenance::Paper && c.anchor.empty())
      throw Error(ErrorKind::MalformedSpec, "check '" + c.name + "' lacks an anchor");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, e.what());
  }
}

nlohmann::json to_json(const Manifest& m) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : m.checks) j.push_back(to_json(c));
  return j;
}

Manifest manifest_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::MalformedSpec, "manifest must be an array");
  Manifest m;
  for (const auto& c : j) m.checks.push_back(check_from_json(c));
  return m;
}

namespace {

// Manifests are data: one JSON array per example.
const std::map<std::string, const char*>& manifest_sources() {
  static const std::map<std::string, const char*> sources = {
      {"matrix", R"J([
  {"name": "bilinear identity", "op": "bilinear_identity", "expected": true, "provenance": "TRIVIAL"},
  {"name": "base locus smooth", "op": "smooth", "args": {"locus": "X", "codim": 2},
   "expected": "Smooth", "provenance": "DERIVED"},
  {"name": "ESB relation for the shape", "op": "esb_shape", "expected": true, "provenance": "DERIVED"},
  {"name": "Hilbert polynomial matches Hilbert-Burch", "op": "hp_matches_resolution",
   "expected": true, "provenance": "DERIVED"}
])J"},

      {"segre_p5", R"J([
  {"name": "bilinear identity", "op": "bilinear_identity", "expected": true, "provenance": "TRIVIAL"},
  {"name": "minors by hand expansion", "op": "minors_match",
   "args": {"forms": ["x1*x5-x2*x4", "-x0*x5+x2*x3", "x0*x4-x1*x3"]},
   "expected": true, "provenance": "DERIVED"},
  {"name": "printed flip matrix", "op": "flip_matches",
   "args": {"rows": [["x0", "x1", "x2", "0", "0", "0"], ["0", "0", "0", "x0", "x1", "x2"]],
            "columns": [0, 1, 2, 3, 4, 5]},
   "expected": true, "provenance": "PAPER", "anchor": "Segre: the 2x6 flip matrix"},
  {"name": "image of (1:0:0:0:1:0)", "op": "eval", "args": {"point": [1, 0, 0, 0, 1, 0]},
   "expected": "(0:0:1)", "provenance": "DERIVED"},
  {"name": "rank one point is a base point", "op": "eval", "args": {"point": [1, 0, 0, 2, 0, 0]},
   "expected": "BasePoint", "provenance": "TRIVIAL"},
  {"name": "Segre threefold smooth", "op": "smooth", "args": {"locus": "X", "codim": 2},
   "expected": "Smooth", "provenance": "DERIVED"},
  {"name": "Segre threefold Hilbert data", "op": "hilbert", "args": {"locus": "X"},
   "expected": {"dim": 3, "degree": 3, "genus": 0}, "provenance": "DERIVED"},
  {"name": "fiber over (1:0:0)", "op": "fiber", "args": {"point": [1, 0, 0]},
   "expected": {"rank": 2, "dim": 3, "equations": [[1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0]],
                "intersection": {"dim": 2, "degree": 2}},
   "provenance": "DERIVED"},
  {"name": "every fiber over P2(F3) is a P3 meeting X1 in a quadric", "op": "all_target_fibers",
   "args": {"prime": 3},
   "expected": {"targets": 13, "fiber_dims": [3], "intersections": [{"dim": 2, "degree": 2}],
                "round_trip": true},
   "provenance": "PAPER", "anchor": "Segre: every fiber is a P3 cutting X1 along a quadric surface",
   "recheck": false},
  {"name": "generic fiber dimension", "op": "birationality", "args": {"trials": 10},
   "expected": {"kind": "FiberDim", "dim": 3},
   "provenance": "PAPER", "anchor": "Segre: every fiber is a P3"},
  {"name": "no target of rank one", "op": "stratum", "args": {"rank": 1}, "select": ["dim"],
   "expected": {"dim": -1}, "provenance": "DERIVED"}
])J"},

      {"todd_room", R"J([
  {"name": "bilinear identity", "op": "bilinear_identity", "expected": true, "provenance": "TRIVIAL"},
  {"name": "printed flip matrix", "op": "flip_matches",
   "args": {"rows": [["-2*x0-x2-2*x3", "0", "x1-x2+x4", "x3", "x0+x1"],
                     ["-x1", "-2*x0+x1-x3", "-x2", "2*x2+x4", "x0-x3"],
                     ["x1", "x3", "-2*x1+x3+x4", "-2*x2", "2*x0+x2"],
                     ["-x0+x2", "2*x1+x3", "-x1", "-x0+x3+x4", "-x2"]],
            "columns": [1, 2, 3, 4, 0]},
   "expected": true, "provenance": "PAPER", "anchor": "Todd-Room: printed matrix B(y)"},
  {"name": "X1 smooth", "op": "smooth", "args": {"locus": "X", "codim": 2},
   "expected": "Smooth", "provenance": "PAPER", "anchor": "Todd-Room: X1 is smooth"},
  {"name": "X1 Hilbert data", "op": "hilbert", "args": {"locus": "X"},
   "expected": {"dim": 2, "degree": 10, "genus": 11},
   "provenance": "PAPER", "anchor": "Todd-Room: surface of degree 10 and genus 11"},
  {"name": "Hilbert-Burch invariants", "op": "hilbert_burch", "args": {"m": 4, "n": 4},
   "expected": {"degree": 10, "genus": 11},
   "provenance": "PAPER", "anchor": "Todd-Room: surface of degree 10 and genus 11"},
  {"name": "Hilbert polynomial matches Hilbert-Burch", "op": "hp_matches_resolution",
   "expected": true, "provenance": "DERIVED"},
  {"name": "quartics through X1", "op": "h0", "args": {"locus": "X", "d": 4}, "expected": 5,
   "provenance": "PAPER", "anchor": "homaloidal system: n+1 forms of degree d1 through X1"},
  {"name": "no cubics through X1", "op": "h0", "args": {"locus": "X", "d": 3}, "expected": 0,
   "provenance": "PAPER", "anchor": "homaloidal system: nothing in degree d1-1"},
  {"name": "quartics through X1 by interpolation", "op": "h0_sampled",
   "args": {"locus": "X", "d": 4}, "expected": 5, "provenance": "DERIVED"},
  {"name": "rank <= 2 locus is one point", "op": "stratum", "args": {"rank": 2},
   "select": ["dim", "geometric_points", "rational_points"],
   "expected": {"dim": 0, "geometric_points": 1, "rational_points": ["(0:0:0:0:1)"]},
   "provenance": "PAPER", "anchor": "Todd-Room: Sing(X2) is the point (0:0:0:0:1)"},
  {"name": "rank <= 2 points over extensions", "op": "stratum_extension_counts",
   "args": {"rank": 2, "e_max": 3}, "expected": [1, 1, 1],
   "provenance": "PAPER", "anchor": "Todd-Room: Sing(X2) is the point (0:0:0:0:1)"},
  {"name": "fiber over (0:0:0:0:1)", "op": "fiber", "args": {"point": [0, 0, 0, 0, 1]},
   "expected": {"rank": 2, "dim": 2, "equations": [[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]],
                "intersection": {"dim": 1, "degree": 4}},
   "provenance": "PAPER", "anchor": "Todd-Room: the fiber is the plane x3=x4=0 meeting X1 in a quartic"},
  {"name": "plane quartic is smooth", "op": "fiber_intersection_smooth",
   "args": {"point": [0, 0, 0, 0, 1]}, "expected": "Smooth",
   "provenance": "PAPER", "anchor": "Todd-Room: smooth plane quartic curve"},
  {"name": "the plane maps to (0:0:0:0:1)", "op": "eval_on",
   "args": {"equations": [[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]], "trials": 5},
   "expected": ["(0:0:0:0:1)"],
   "provenance": "PAPER", "anchor": "Todd-Room: the plane x3=x4=0 is the fiber over (0:0:0:0:1)"},
  {"name": "plane points are exceptional", "op": "exceptional_on",
   "args": {"equations": [[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]], "trials": 5}, "expected": [true],
   "provenance": "PAPER", "anchor": "Todd-Room: the plane x3=x4=0 is the fiber over (0:0:0:0:1)"},
  {"name": "random points are rarely exceptional", "op": "exceptional_sample",
   "args": {"samples": 100, "min_false": 80}, "expected": true, "provenance": "DERIVED"},
  {"name": "generic fiber is a point", "op": "generic_fiber", "args": {"trials": 10},
   "select": ["fiber_dims"], "expected": {"fiber_dims": [0]},
   "provenance": "PAPER", "anchor": "special Cremona transformation of type (n,n)"},
  {"name": "birationality", "op": "birationality", "args": {"trials": 10},
   "expected": {"kind": "BirationalEvidence"},
   "provenance": "PAPER", "anchor": "Todd-Room: Cremona transformation of type (4,4)"},
  {"name": "ESB degree of the inverse", "op": "esb_d2", "args": {"n": 4, "d1": 4, "r1": 2},
   "expected": 4, "provenance": "PAPER", "anchor": "Todd-Room: type (4,4)"},
  {"name": "ESB dimension of the inverse base locus", "op": "esb_r2",
   "args": {"n": 4, "d1": 4, "d2": 4}, "expected": 2,
   "provenance": "PAPER", "anchor": "Todd-Room: X2 is a surface"},
  {"name": "contraction profile", "op": "profile",
   "args": {"n": 4, "m": 4, "d1": 4, "d2": 4, "r1": 2, "r2": 2}, "expected": true,
   "provenance": "DERIVED"},
  {"name": "secant hypersurface degree", "op": "secant_degree", "args": {"d1": 4, "d2": 4},
   "expected": 15, "provenance": "PAPER", "anchor": "secant variety of degree d1 d2 - 1"},
  {"name": "class of E2", "op": "class_flip", "args": {"d1": 4, "d2": 4},
   "select": ["E2"], "expected": {"E2": [15, -4]},
   "provenance": "PAPER", "anchor": "class flip E2 = (d1 d2 - 1) H1 - d2 E1"},
  {"name": "residual degree of the linked curve", "op": "liaison",
   "args": {"d": 4, "e": 4, "known": 11}, "expected": 5,
   "provenance": "PAPER", "anchor": "Todd-Room: the residual has degree 5"},
  {"name": "11 as h^2 + t", "op": "square_plus_t", "args": {"b": 11}, "expected": [[2, 7], [3, 2]],
   "provenance": "PAPER", "anchor": "Todd-Room: 11 = h^2 + t with h=2, t=7"}
])J"},

      {"bordiga_random", R"J([
  {"name": "bilinear identity", "op": "bilinear_identity", "expected": true, "provenance": "TRIVIAL"},
  {"name": "X1 smooth", "op": "smooth", "args": {"locus": "X", "codim": 2},
   "expected": "Smooth", "provenance": "DERIVED"},
  {"name": "Bordiga Hilbert data", "op": "hilbert", "args": {"locus": "X"},
   "expected": {"dim": 2, "degree": 6, "genus": 3},
   "provenance": "PAPER", "anchor": "Bordiga: degree 6 and genus 3"},
  {"name": "Hilbert-Burch invariants", "op": "hilbert_burch", "args": {"m": 4, "n": 3},
   "expected": {"degree": 6, "genus": 3},
   "provenance": "PAPER", "anchor": "Bordiga: degree 6 and genus 3"},
  {"name": "Hilbert polynomial matches Hilbert-Burch", "op": "hp_matches_resolution",
   "expected": true, "provenance": "DERIVED"},
  {"name": "cubics through X1", "op": "h0", "args": {"locus": "X", "d": 3}, "expected": 4,
   "provenance": "DERIVED"},
  {"name": "generic fiber is a trisecant line", "op": "generic_fiber", "args": {"trials": 10},
   "expected": {"fiber_dims": [1], "intersection_lengths": [3]},
   "provenance": "PAPER", "anchor": "Bordiga: one apparent triple point"},
  {"name": "generic fiber dimension", "op": "birationality", "args": {"trials": 10},
   "expected": {"kind": "FiberDim", "dim": 1},
   "provenance": "PAPER", "anchor": "Bordiga: conic bundle over P3"},
  {"name": "rank <= 2 locus has degree 10", "op": "stratum", "args": {"rank": 2},
   "select": ["dim", "degree"], "expected": {"dim": 0, "degree": 10},
   "provenance": "PAPER", "anchor": "Bordiga: exactly 10 two-dimensional fibers"},
  {"name": "rank <= 2 locus has 10 distinct points", "op": "stratum", "args": {"rank": 2},
   "select": ["geometric_points"], "expected": {"geometric_points": 10},
   "provenance": "PAPER", "anchor": "Bordiga: exactly 10 two-dimensional fibers"},
  {"name": "extension counts agree with residue degrees", "op": "stratum_extension_check",
   "args": {"rank": 2, "e_max": 2}, "expected": true, "provenance": "DERIVED"}
])J"},

      {"quinto_p5_plane", R"J([
  {"name": "bilinear identity", "op": "bilinear_identity", "expected": true, "provenance": "TRIVIAL"},
  {"name": "X1 smooth", "op": "smooth", "args": {"locus": "X", "codim": 2},
   "expected": "Smooth", "provenance": "PAPER", "anchor": "P5 examples: smooth threefold X1"},
  {"name": "fiber over (0:0:0:0:0:1) is a plane", "op": "fiber", "args": {"point": [0, 0, 0, 0, 0, 1]},
   "select": ["rank", "dim", "equations"],
   "expected": {"rank": 3, "dim": 2, "equations": [[0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]]},
   "provenance": "PAPER", "anchor": "P5 examples: the plane x3=x4=x5=0 maps to (0:0:0:0:0:1)"},
  {"name": "unique rank-deficient target", "op": "stratum", "args": {"rank": 3},
   "select": ["dim", "geometric_points", "rational_points"],
   "expected": {"dim": 0, "geometric_points": 1, "rational_points": ["(0:0:0:0:0:1)"]},
   "provenance": "PAPER", "anchor": "P5 examples: the only singular point of X2"},
  {"name": "rank-deficient targets over extensions", "op": "stratum_extension_counts",
   "args": {"rank": 3, "e_max": 2}, "expected": [1, 1],
   "provenance": "PAPER", "anchor": "P5 examples: the only singular point of X2"},
  {"name": "X1 Hilbert data", "op": "hilbert", "args": {"locus": "X"},
   "expected": {"dim": 3, "degree": 15, "genus": 26},
   "provenance": "PAPER", "anchor": "P5 examples: threefold of degree 15 and genus 26"},
  {"name": "Hilbert-Burch invariants", "op": "hilbert_burch", "args": {"m": 5, "n": 5},
   "expected": {"degree": 15, "genus": 26},
   "provenance": "PAPER", "anchor": "P5 examples: threefold of degree 15 and genus 26"},
  {"name": "rank <= 4 locus is X2", "op": "stratum", "args": {"rank": 4},
   "select": ["dim", "degree"], "expected": {"dim": 3, "degree": 15}, "provenance": "DERIVED"},
  {"name": "secant hypersurface degree", "op": "secant_degree", "args": {"d1": 5, "d2": 5},
   "expected": 24, "provenance": "PAPER", "anchor": "P5 examples: secant hypersurface of degree 24"},
  {"name": "ESB degree of the inverse", "op": "esb_d2", "args": {"n": 5, "d1": 5, "r1": 3},
   "expected": 5, "provenance": "PAPER", "anchor": "special Cremona transformation of type (n,n)"}
])J"},

      {"quinto_p5_solid", R"J([
  {"name": "bilinear identity", "op": "bilinear_identity", "expected": true, "provenance": "TRIVIAL"},
  {"name": "X1 smooth", "op": "smooth", "args": {"locus": "X", "codim": 2},
   "expected": "Smooth", "provenance": "PAPER", "anchor": "P5 examples: smooth threefold X1"},
  {"name": "fiber over (0:0:0:0:0:1) is a P3", "op": "fiber", "args": {"point": [0, 0, 0, 0, 0, 1]},
   "select": ["rank", "dim", "equations"],
   "expected": {"rank": 2, "dim": 3, "equations": [[0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]]},
   "provenance": "PAPER", "anchor": "P5 examples: isolated exceptional fiber x4=x5=0 of dimension 3"},
  {"name": "unique rank-deficient target", "op": "stratum", "args": {"rank": 3},
   "select": ["dim", "geometric_points", "rational_points"],
   "expected": {"dim": 0, "geometric_points": 1, "rational_points": ["(0:0:0:0:0:1)"]},
   "provenance": "PAPER", "anchor": "P5 examples: the only singular point of X2"},
  {"name": "rank-deficient targets over extensions", "op": "stratum_extension_counts",
   "args": {"rank": 3, "e_max": 2}, "expected": [1, 1],
   "provenance": "PAPER", "anchor": "P5 examples: the only singular point of X2"},
  {"name": "X1 Hilbert data", "op": "hilbert", "args": {"locus": "X"},
   "expected": {"dim": 3, "degree": 15, "genus": 26},
   "provenance": "PAPER", "anchor": "P5 examples: threefold of degree 15 and genus 26"},
  {"name": "Hilbert-Burch invariants", "op": "hilbert_burch", "args": {"m": 5, "n": 5},
   "expected": {"degree": 15, "genus": 26},
   "provenance": "PAPER", "anchor": "P5 examples: threefold of degree 15 and genus 26"},
  {"name": "secant hypersurface degree", "op": "secant_degree", "args": {"d1": 5, "d2": 5},
   "expected": 24, "provenance": "PAPER", "anchor": "P5 examples: secant hypersurface of degree 24"},
  {"name": "ESB degree of the inverse", "op": "esb_d2", "args": {"n": 5, "d1": 5, "r1": 3},
   "expected": 5, "provenance": "PAPER", "anchor": "special Cremona transformation of type (n,n)"}
])J"},

      {"conic_p5_general", R"J([
  {"name": "bilinear identity", "op": "bilinear_identity", "expected": true, "provenance": "TRIVIAL"},
  {"name": "printed flip matrix", "op": "flip_matches",
   "args": {"rows": [["x0+x4", "-x1", "-x3+x4", "x0+x2", "x2+x4", "x1-x3"],
                     ["x0+x3", "-x1", "x3+x4", "-x2", "x0+x2+x4", "-x0+x1+x2"],
                     ["x2+x3", "-x0+x1", "-x1+x4", "-x1+x3", "x0-x4", "-x0-x2"],
                     ["-x1+x4", "x1-x2-x3", "x0", "x0+x3", "x2-x4", "-x0+x2"]],
            "columns": [1, 2, 3, 4, 5, 0]},
   "expected": true, "provenance": "PAPER", "anchor": "conic bundle: printed matrix B(y)"},
  {"name": "X1 smooth", "op": "smooth", "args": {"locus": "X", "codim": 2},
   "expected": "Smooth", "provenance": "DERIVED"},
  {"name": "X1 Hilbert data", "op": "hilbert", "args": {"locus": "X"},
   "expected": {"dim": 3, "degree": 10, "genus": 11}, "provenance": "DERIVED"},
  {"name": "Hilbert-Burch invariants", "op": "hilbert_burch", "args": {"m": 5, "n": 4},
   "expected": {"degree": 10, "genus": 11},
   "provenance": "PAPER", "anchor": "degree 10 and genus 11 with one apparent quadruple point"},
  {"name": "generic fiber is a 4-secant line", "op": "generic_fiber", "args": {"trials": 10},
   "expected": {"fiber_dims": [1], "intersection_lengths": [4]},
   "provenance": "PAPER", "anchor": "conic bundle: general fiber is a 4-secant line"},
  {"name": "rank <= 3 curve", "op": "stratum", "args": {"rank": 3},
   "select": ["dim", "degree", "genus"], "expected": {"dim": 1, "degree": 20, "genus": 26},
   "provenance": "PAPER", "anchor": "conic bundle: smooth curve C of degree 20 and genus 26"},
  {"name": "rank <= 3 curve smooth", "op": "smooth", "args": {"locus": "stratum", "rank": 3, "codim": 3},
   "expected": "Smooth",
   "provenance": "PAPER", "anchor": "conic bundle: smooth curve C of degree 20 and genus 26"}
])J"},

      {"conic_p5_special", R"J([
  {"name": "bilinear identity", "op": "bilinear_identity", "expected": true, "provenance": "TRIVIAL"},
  {"name": "X1 smooth", "op": "smooth", "args": {"locus": "X", "codim": 2},
   "expected": "Smooth", "provenance": "PAPER", "anchor": "conic bundle: matrix defining a smooth threefold"},
  {"name": "rank <= 3 curve", "op": "stratum", "args": {"rank": 3},
   "select": ["dim", "degree", "genus"], "expected": {"dim": 1, "degree": 20, "genus": 26},
   "provenance": "PAPER", "anchor": "conic bundle: curve C of degree 20 and genus 26"},
  {"name": "rational singular points of the curve", "op": "singular_points",
   "args": {"locus": "stratum", "rank": 3, "codim": 3}, "select": ["rational_singular"],
   "expected": {"rational_singular": ["(0:0:0:0:1)"]},
   "provenance": "PAPER", "anchor": "conic bundle: C has exactly one singular point at (0:0:0:0:1)",
   "recheck": false},
  {"name": "geometric singular points of the curve", "op": "singular_points",
   "args": {"locus": "stratum", "rank": 3, "codim": 3}, "select": ["geometric"],
   "expected": {"geometric": 3}, "provenance": "DERIVED"},
  {"name": "fiber over (0:0:0:0:1) is a P3", "op": "fiber", "args": {"point": [0, 0, 0, 0, 1]},
   "expected": {"rank": 2, "dim": 3, "equations": [[0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]],
                "intersection": {"dim": 2, "degree": 4}},
   "provenance": "PAPER", "anchor": "conic bundle: the fibre over (0:0:0:0:1) is a P3"},
  {"name": "hyperplane slice contains a plane quartic", "op": "plane_quartic_slice",
   "args": {"point": [0, 0, 0, 0, 1], "trials": 3},
   "expected": {"curve_dim": 1, "curve_degree": 4, "span_dim": 2, "in_slice": true},
   "provenance": "PAPER", "anchor": "hyperplane sections contain a plane quartic curve"}
])J"},

      {"del_pezzo_cubic", R"J([
  {"name": "quadrics through the del Pezzo surface", "op": "h0", "args": {"locus": "X", "d": 2},
   "expected": 5, "provenance": "PAPER", "anchor": "del Pezzo quintic: ideal generated by 5 quadrics"},
  {"name": "ideal generated by quadrics", "op": "generated_in_degree", "args": {"locus": "X", "d": 2},
   "expected": true, "provenance": "PAPER", "anchor": "del Pezzo quintic: ideal generated by 5 quadrics"},
  {"name": "del Pezzo Hilbert data", "op": "hilbert", "args": {"locus": "X"},
   "select": ["dim", "degree"], "expected": {"dim": 2, "degree": 5},
   "provenance": "PAPER", "anchor": "del Pezzo quintic surface residual to the plane"},
  {"name": "del Pezzo sectional genus", "op": "hilbert", "args": {"locus": "X"},
   "select": ["genus"], "expected": {"genus": 1}, "provenance": "DERIVED"},
  {"name": "del Pezzo surface smooth", "op": "smooth", "args": {"locus": "X", "codim": 3},
   "expected": "Smooth", "provenance": "DERIVED"},
  {"name": "cubic Y smooth", "op": "smooth", "args": {"locus": "Y", "codim": 1},
   "expected": "Smooth", "provenance": "PAPER", "anchor": "the cubic Y is non-singular"},
  {"name": "Y contains X", "op": "contains", "args": {"locus": "X", "forms": "Y"},
   "expected": true, "provenance": "TRIVIAL"},
  {"name": "construction within the reseed budget", "op": "attempts_within", "args": {"max": 50},
   "expected": true, "provenance": "DERIVED"},
  {"name": "ruling planes on Y", "op": "ruling_planes", "args": {"locus": "Y"},
   "expected": {"count": 1, "degenerate": false}, "provenance": "DERIVED"},
  {"name": "ruling planes on cubics of the pencil family", "op": "ruling_planes_bound",
   "args": {"trials": 20, "bound": 2}, "expected": true,
   "provenance": "PAPER", "anchor": "at most two planes of type (1,0)"},
  {"name": "cubic through the whole Segre", "op": "ruling_planes_degenerate",
   "expected": {"count": 3, "degenerate": true}, "provenance": "TRIVIAL"},
  {"name": "quadric system dominates P4 from Y", "op": "image_dim",
   "args": {"locus": "Y", "samples": 5}, "expected": 4, "provenance": "DERIVED"},
  {"name": "resolution of Z", "op": "resolution",
   "args": {"ambient": 4, "modules": [[[4, 6]], [[5, 6]], [[6, 1]]]},
   "expected": {"dim": 2, "degree": 9, "genus": 8},
   "provenance": "PAPER", "anchor": "Z: normal surface of degree 9 and sectional genus 8"},
  {"name": "quartics vanishing on Z", "op": "esb_hypersurface_d2", "args": {"n": 2, "d1": 2, "r1": 2},
   "expected": 4, "provenance": "PAPER", "anchor": "inverse given by quartics through Z (d2 = 4)"},
  {"name": "secant hypersurface of degree 7", "op": "class_flip", "args": {"d1": 2, "d2": 4},
   "select": ["E2"], "expected": {"E2": [7, -4]},
   "provenance": "PAPER", "anchor": "secant hypersurface of degree d1 d2 - 1 = 7"},
  {"name": "liaison degree of Z", "op": "liaison", "args": {"d": 4, "e": 4, "known": 7},
   "expected": 9, "provenance": "PAPER", "anchor": "deg Z = 4*4 - 7 = 9"},
  {"name": "10 as h^2 + t", "op": "square_plus_t", "args": {"b": 10}, "expected": [[2, 6], [3, 1]],
   "provenance": "PAPER", "anchor": "10 = h^2 + t with h=2, t=6"}
])J"},

      {"semple_tyrrell", R"J([
  {"name": "quadrics through the octic", "op": "h0", "args": {"locus": "X", "d": 2}, "expected": 7,
   "provenance": "PAPER", "anchor": "octic surface cut out by 7 quadrics"},
  {"name": "quadrics through the octic by interpolation", "op": "h0_sampled",
   "args": {"locus": "X", "d": 2}, "expected": 7, "provenance": "DERIVED"},
  {"name": "octic surface", "op": "hilbert", "args": {"locus": "X"}, "select": ["dim", "degree"],
   "expected": {"dim": 2, "degree": 8},
   "provenance": "PAPER", "anchor": "octic surface in P6"},
  {"name": "octic surface smooth", "op": "smooth", "args": {"locus": "X", "codim": 4},
   "expected": "Smooth", "provenance": "DERIVED"},
  {"name": "cone over the Segre threefold", "op": "hilbert", "args": {"locus": "cone"},
   "select": ["dim", "degree"], "expected": {"dim": 4, "degree": 3}, "provenance": "DERIVED"},
  {"name": "ESB type", "op": "esb_d2", "args": {"n": 6, "d1": 2, "r1": 2}, "expected": 4,
   "provenance": "PAPER", "anchor": "special Cremona transformation of type (2,4)"},
  {"name": "quadric surface fibers on the cone", "op": "fiber_dim_on",
   "args": {"locus": "cone", "count": 10}, "expected": [2],
   "provenance": "PAPER", "anchor": "cone W contracted with quadric surface fibers"},
  {"name": "cone contracted onto a surface", "op": "image_dim",
   "args": {"locus": "cone", "samples": 10}, "expected": 2,
   "provenance": "PAPER", "anchor": "cone W contracted onto a smooth quadric surface"},
  {"name": "generic fiber is a point", "op": "fiber_dim_on",
   "args": {"locus": "ambient", "count": 10}, "expected": [0], "provenance": "DERIVED"},
  {"name": "degenerate residuation rejected", "op": "divisor12_degenerate",
   "expected": "ConstructionFailed", "provenance": "TRIVIAL"}
])J"},

      {"p7_threefold", R"J([
  {"name": "quadrics through the threefold", "op": "h0", "args": {"locus": "X", "d": 2}, "expected": 7,
   "provenance": "PAPER", "anchor": "threefold ideal generated by 7 quadrics"},
  {"name": "threefold of degree 8", "op": "hilbert", "args": {"locus": "X"},
   "select": ["dim", "degree"], "expected": {"dim": 3, "degree": 8},
   "provenance": "PAPER", "anchor": "threefold of degree 8 in P7"},
  {"name": "threefold smooth", "op": "smooth", "args": {"locus": "X", "codim": 4},
   "expected": "Smooth", "provenance": "DERIVED"},
  {"name": "cone with vertex a line", "op": "hilbert", "args": {"locus": "cone"},
   "select": ["dim", "degree"], "expected": {"dim": 5, "degree": 3}, "provenance": "DERIVED"},
  {"name": "general fiber is a line", "op": "fiber_dim_on",
   "args": {"locus": "ambient", "count": 20}, "expected": [1],
   "provenance": "PAPER", "anchor": "general fiber is a line"},
  {"name": "general fiber is a secant line", "op": "secant_lengths", "args": {"count": 20},
   "expected": {"lengths": [2], "contracted": [true]},
   "provenance": "PAPER", "anchor": "general fiber is a secant line"},
  {"name": "three-dimensional fibers over the cone", "op": "fiber_dim_on",
   "args": {"locus": "cone", "count": 10}, "expected": [3],
   "provenance": "PAPER", "anchor": "points of M have three-dimensional quadric fibers"},
  {"name": "self-intersection of the blown-up quartics", "op": "blowup_selfint",
   "args": {"deg_y": 3, "deg_c": 8, "genus_c": 3}, "expected": 12,
   "provenance": "PAPER", "anchor": "48 - 64 + 28 = 12"},
  {"name": "linked fourfold of degree 13", "op": "liaison", "args": {"d": 5, "e": 5, "known": 12},
   "expected": 13, "provenance": "PAPER", "anchor": "Z in P6 is a fourfold of degree 13"}
])J"},
  };
  return sources;
}

}  // namespace

Manifest default_manifest(const std::string& id) {
  const auto& sources = manifest_sources();
  const auto it = sources.find(id);
  if (it == sources.end()) throw Error(ErrorKind::UnknownId, "no manifest for '" + id + "'");
  return manifest_from_json(nlohmann::json::parse(it->second));
}

}  // namespace cremona
