#include "cremona/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "cremona/invariants.hpp"

namespace cremona::cli {

using nlohmann::json;

PolyMatrix matrix_from_json(const json& j, std::uint32_t p) {
  try {
    const int m = j.at("m").get<int>();
    const int n = j.at("n").get<int>();
    const auto rows = j.at("rows").get<std::vector<std::vector<std::vector<long long>>>>();
    if (m < 1 || n < 1) throw Error(ErrorKind::MalformedSpec, "m and n must be positive");
    if (static_cast<int>(rows.size()) != n + 1)
      throw Error(ErrorKind::MalformedSpec, "expected n+1 = " + std::to_string(n + 1) + " rows");
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n)
        throw Error(ErrorKind::MalformedSpec, "expected n = " + std::to_string(n) + " columns");
      for (const auto& entry : row)
        if (static_cast<int>(entry.size()) != m + 1)
          throw Error(ErrorKind::MalformedSpec, "linear forms need m+1 coefficients");
    }
    return PolyMatrix::from_linear_data(Ring{p, m + 1, MonoOrder::Grevlex}, rows);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, e.what());
  }
}

Point parse_point(const std::string& text, std::uint32_t p, int nvars) {
  std::vector<long long> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad coordinate '" + item + "'");
    }
  }
  if (static_cast<int>(coords.size()) != nvars)
    throw Error(ErrorKind::Arity, "point has " + std::to_string(coords.size()) +
                                      " coordinates, expected " + std::to_string(nvars));
  const PrimeField f(p);
  std::vector<std::uint32_t> x;
  for (long long c : coords) x.push_back(f.from_int(c));
  if (std::all_of(x.begin(), x.end(), [](std::uint32_t c) { return c == 0; }))
    throw Error(ErrorKind::Parse, "point '" + text + "' vanishes mod " + std::to_string(p));
  return make_point(f, std::move(x));
}

namespace {

// Rows that no gallery manifest carries.
const char* kExtraRelations = R"J([
  {"name": "no inverse for a negative bracket", "op": "esb_d2", "args": {"n": 4, "d1": 5, "r1": 0},
   "expected": null, "provenance": "TRIVIAL"},
  {"name": "hypersurface relation, zero bracket", "op": "esb_hypersurface_d2",
   "args": {"n": 2, "d1": 1, "r1": 0}, "expected": null, "provenance": "TRIVIAL"},
  {"name": "hypersurface relation, negative bracket", "op": "esb_hypersurface_d2",
   "args": {"n": 2, "d1": 2, "r1": 1}, "expected": null, "provenance": "TRIVIAL"},
  {"name": "class flip (2,2)", "op": "class_flip", "args": {"d1": 2, "d2": 2},
   "expected": {"H2": [2, -1], "E2": [3, -2]}, "provenance": "DERIVED"},
  {"name": "no secant hypersurface for an isomorphism", "op": "secant_degree",
   "args": {"d1": 1, "d2": 1}, "expected": 0, "provenance": "TRIVIAL"},
  {"name": "empty resolution gives the ambient space", "op": "resolution",
   "args": {"ambient": 3, "modules": []}, "expected": {"dim": 3, "degree": 1, "genus": 0},
   "provenance": "TRIVIAL"},
  {"name": "4 as h^2 + t", "op": "square_plus_t", "args": {"b": 4}, "expected": [[2, 0]],
   "provenance": "TRIVIAL"},
  {"name": "no blow-up", "op": "blowup_selfint", "args": {"deg_y": 3, "deg_c": 0, "genus_c": 0},
   "expected": 48, "provenance": "TRIVIAL"}
])J";

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::IncompleteBasis:
    case ErrorKind::InsufficientPoints:
      return Budget;
    case ErrorKind::Parse:
    case ErrorKind::Arity:
    case ErrorKind::MalformedSpec:
    case ErrorKind::UnknownId:
    case ErrorKind::InvalidField:
    case ErrorKind::Range:
      return Usage;
    default:
      return Failed;
  }
}

void emit(const json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::Parse, "cannot write " + path);
  f << text;
}

const DetMap& detmap_of(const ExampleInstance& inst, std::optional<DetMap>& slot) {
  if (!inst.matrix)
    throw Error(ErrorKind::MalformedSpec, inst.id + " is a form system, not a determinantal map");
  if (!slot) slot = DetMap::build(*inst.matrix);
  return *slot;
}

json stratum_json(const DetMap& map, int r, const RunConfig& cfg, const ::cremona::Budget& budget) {
  Rng rng(cfg.seed);
  const auto st = rank_stratum(map, r, rng, budget);
  const PrimeField f(map.target_ring().p);
  json j{{"rank", r}, {"dim", st.hilbert->projective_dimension}};
  if (st.hilbert->projective_dimension >= 0) j["degree"] = st.hilbert->degree;
  if (st.hilbert->sectional_genus) j["genus"] = *st.hilbert->sectional_genus;
  json pts = json::array();
  if (st.points) {
    j["geometric_points"] = st.points->geometric_points;
    std::vector<Point> sorted = st.points->rational_points;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& x : sorted) pts.push_back(point_to_string(f, x));
    j["points"] = pts;
  } else if (st.hilbert->projective_dimension < 0) {
    j["points"] = pts;
  } else {
    // positive dimensional: report the singular points when they are finite
    const int codim = map.target_dim() - st.hilbert->projective_dimension;
    try {
      const auto sl = singular_points(st.ideal, codim, rng, budget);
      for (const auto& x : sl.singular) pts.push_back(point_to_string(f, x));
      j["smooth"] = sl.candidates.geometric_points == 0;
      j["singular_points"] = pts;
      j["geometric_singular_points"] = sl.candidates.geometric_points;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Shape) throw;
      j["singular_points"] = "positive dimensional";
    }
  }
  return j;
}

std::string table_text(const json& rows) {
  // columns sized to their widest cell
  std::vector<std::vector<std::string>> cells = {{"relation", "inputs", "value", "ok", "source", "anchor"}};
  for (const auto& r : rows)
    cells.push_back({r["relation"].get<std::string>(), r["inputs"].dump(), r["value"].dump(),
                     r["match"].get<bool>() ? "yes" : "NO", r["provenance"].get<std::string>(),
                     r["anchor"].get<std::string>()});
  std::vector<std::size_t> width(6, 0);
  for (const auto& row : cells)
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      line += row[k];
      if (k + 1 < row.size()) line += std::string(width[k] - row[k].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

}  // namespace

json relation_table() {
  std::vector<CheckSpec> specs;
  std::set<std::pair<std::string, std::string>> seen;
  auto add = [&](const CheckSpec& c) {
    if (!is_arithmetic_op(c.op)) return;
    if (seen.insert({c.op, c.args.dump()}).second) specs.push_back(c);
  };
  for (const auto& id : example_ids())
    for (const auto& c : default_manifest(id).checks) add(c);
  for (const auto& c : manifest_from_json(json::parse(kExtraRelations)).checks) add(c);

  const ExampleInstance none;
  const RunConfig cfg;
  json rows = json::array();
  for (const auto& c : specs) {
    const auto r = run_check(none, c, cfg);
    rows.push_back({{"relation", c.op},
                    {"name", c.name},
                    {"inputs", c.args},
                    {"value", r.actual},
                    {"expected", c.expected},
                    {"match", r.status == CheckStatus::Pass},
                    {"provenance", to_string(c.provenance)},
                    {"anchor", c.anchor}});
  }
  return rows;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Determinantal Cremona maps over finite fields", "cremona"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string output;
  long long gb_pairs = cfg.gb_pair_budget;
  std::uint64_t enum_budget = cfg.enumeration_budget;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--prime", cfg.prime, "working prime")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--trials", cfg.trials, "override per-check trial counts (0 keeps them)");
    sub->add_option("--extension-bound", cfg.extension_bound, "largest extension degree")
        ->capture_default_str();
    sub->add_option("--gb-pairs", gb_pairs, "S-pair budget per Groebner run")
        ->envname("CREMONA_GB_PAIRS")
        ->capture_default_str();
    sub->add_option("--enum-budget", enum_budget, "largest exhaustively scanned point set")
        ->envname("CREMONA_ENUM_BUDGET")
        ->capture_default_str();
    sub->add_option("--recheck-prime", cfg.recheck_prime, "second prime for paper facts, 0 disables")
        ->capture_default_str();
    sub->add_flag("--deterministic", cfg.deterministic, "zero all timings");
    sub->add_option("--output,-o", output, "write the JSON here instead of stdout");
  };

  auto* list = app.add_subcommand("list", "list the gallery examples");

  std::string id, matrix_file;
  auto* verify = app.add_subcommand("verify", "run the check manifest of an example or a matrix");
  verify->add_option("example", id, "example id");
  verify->add_option("--matrix", matrix_file, "matrix JSON file {m, n, rows}");
  common(verify);

  bool table = false;
  auto* relations = app.add_subcommand("relations", "numerical relation table");
  relations->add_flag("--table", table, "aligned text instead of JSON");

  std::string point;
  auto* fib = app.add_subcommand("fiber", "fiber of the map over a target point");
  fib->add_option("example", id, "example id")->required();
  fib->add_option("--point", point, "colon separated coordinates, e.g. 0:0:1")->required();
  common(fib);

  int rank = 0;
  auto* strat = app.add_subcommand("stratify", "rank stratum of the flip matrix");
  strat->add_option("example", id, "example id")->required();
  strat->add_option("--rank", rank, "rank bound r")->required();
  common(strat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return Usage;
  }

  try {
    cfg.gb_pair_budget = gb_pairs;
    cfg.enumeration_budget = enum_budget;
    cfg.validate();
    ::cremona::Budget budget;
    budget.max_pairs = static_cast<std::size_t>(cfg.gb_pair_budget);

    if (*list) {
      for (const auto& e : example_ids()) out << e << "\n";
      return Ok;
    }
    if (*relations) {
      const json rows = relation_table();
      if (table)
        out << table_text(rows);
      else
        out << rows.dump(2) << "\n";
      for (const auto& r : rows)
        if (!r["match"].get<bool>()) return Failed;
      return Ok;
    }
    if (*verify) {
      if (id.empty() == matrix_file.empty()) {
        err << "verify needs exactly one of an example id or --matrix\n";
        return Usage;
      }
      ExampleInstance inst;
      if (!matrix_file.empty()) {
        std::ifstream f(matrix_file);
        if (!f) throw Error(ErrorKind::Parse, "cannot read " + matrix_file);
        json j;
        try {
          j = json::parse(f);
        } catch (const json::exception& e) {
          throw Error(ErrorKind::Parse, e.what());
        }
        inst = matrix_example("matrix", matrix_from_json(j, cfg.prime));
        inst.seed = cfg.seed;
      } else {
        inst = build_example(id, cfg.prime, cfg.seed);
      }
      const Report report = verify_manifest(inst, cfg);
      emit(report.to_json(), output, out);
      return report.exit_code();
    }

    const ExampleInstance inst = build_example(id, cfg.prime, cfg.seed);
    std::optional<DetMap> slot;
    const DetMap& map = detmap_of(inst, slot);
    if (*fib) {
      const Point y = parse_point(point, cfg.prime, map.target_ring().nvars);
      const auto fr = fiber(map, y, budget);
      if (!fr.intersection_hilbert)
        throw Error(ErrorKind::BudgetExceeded, "Groebner budget exhausted on the fiber");
      json j = fiber_to_json(fr, cfg.prime);
      j["target"] = point_to_string(PrimeField(cfg.prime), fr.target);
      json forms = json::array();
      for (const auto& l : fr.fiber.equation_forms(map.source_ring())) forms.push_back(l.to_string());
      j["forms"] = forms;
      emit(j, output, out);
      return Ok;
    }
    if (*strat) {
      if (rank < 1 || rank >= map.target_dim())
        throw Error(ErrorKind::Range, "rank must lie in [1, n-1]");
      emit(stratum_json(map, rank, cfg, budget), output, out);
      return Ok;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_for(e.kind());
  }
  return Usage;
}

}  // namespace cremona::cli
