#include "cremona/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "cremona/hilbert.hpp"
#include "cremona/invariants.hpp"

namespace cremona {

using nlohmann::json;

void RunConfig::validate() const {
  if (!is_prime(prime)) throw Error(ErrorKind::InvalidField, "prime must be prime");
  if (recheck_prime != 0 && !is_prime(recheck_prime))
    throw Error(ErrorKind::InvalidField, "recheck prime must be prime");
  if (extension_bound < 1 || extension_bound > 4)
    throw Error(ErrorKind::Range, "extension bound must lie in [1, 4]");
  if (gb_pair_budget <= 0 || enumeration_budget == 0 || trials < 0)
    throw Error(ErrorKind::Range, "budgets must be positive");
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Unknown: return "unknown";
  }
  return "?";
}

bool Report::pass() const {
  for (const auto& c : checks)
    if (c.status != CheckStatus::Pass) return false;
  return true;
}

bool Report::any_unknown() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Unknown) return true;
  return false;
}

int Report::exit_code() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return 1;
  return any_unknown() ? 2 : 0;
}

json Report::to_json() const {
  json j;
  j["example"] = example;
  j["prime"] = prime;
  j["seed"] = seed;
  j["checks"] = json::array();
  for (const auto& c : checks) {
    json r;
    r["name"] = c.spec.name;
    r["expected"] = c.spec.expected;
    r["actual"] = c.actual;
    r["pass"] = c.status == CheckStatus::Pass;
    r["status"] = to_string(c.status);
    r["provenance"] = to_string(c.spec.provenance);
    r["anchor"] = c.spec.anchor;
    r["millis"] = c.millis;
    if (!c.note.empty()) r["note"] = c.note;
    if (c.recheck_actual) r["recheck"] = {{"prime", c.recheck_prime}, {"actual", *c.recheck_actual}};
    j["checks"].push_back(std::move(r));
  }
  if (!warnings.empty()) j["warnings"] = warnings;
  j["pass"] = pass();
  return j;
}

namespace {

struct Ctx {
  const ExampleInstance& inst;
  const RunConfig& cfg;
  Rng rng;
  Budget budget;
  std::string note;
  std::optional<DetMap> map_;

  std::uint32_t p() const { return inst.prime; }
  PrimeField field() const { return PrimeField(inst.prime); }

  const DetMap& map() {
    if (!inst.matrix) throw Error(ErrorKind::MalformedSpec, "check needs a matrix instance");
    if (!map_) map_ = DetMap::build(*inst.matrix);
    return *map_;
  }
  const SystemMap& system() const {
    if (!inst.system) throw Error(ErrorKind::MalformedSpec, "check needs a form system");
    return *inst.system;
  }
  int trials(const json& args, const char* key, int fallback) const {
    if (cfg.trials > 0) return cfg.trials;
    return args.value(key, fallback);
  }
  Ideal locus(const json& args) {
    const std::string name = args.at("locus").get<std::string>();
    if (name == "stratum") {
      const int r = args.at("rank").get<int>();
      return Ideal(map().target_ring(), minors(map().B(), r + 1));
    }
    if (name == "X" && inst.matrix) return map().base_ideal();
    const auto it = inst.loci.find(name);
    if (it == inst.loci.end()) throw Error(ErrorKind::MalformedSpec, "unknown locus '" + name + "'");
    return it->second;
  }
  Point point(const json& v, int nvars) const {
    const auto coords = v.get<std::vector<long long>>();
    if (static_cast<int>(coords.size()) != nvars)
      throw Error(ErrorKind::Arity, "point has " + std::to_string(coords.size()) +
                                        " coordinates, expected " + std::to_string(nvars));
    const PrimeField f = field();
    std::vector<std::uint32_t> x;
    for (long long c : coords) x.push_back(f.from_int(c));
    return make_point(f, std::move(x));
  }
  std::string str(const Point& x) const { return point_to_string(field(), x); }
};

json hilbert_json(const HilbertData& h) {
  json j{{"dim", h.projective_dimension}, {"degree", h.degree}};
  if (h.sectional_genus) j["genus"] = *h.sectional_genus;
  return j;
}

HilbertData hilbert_of(const Ideal& ideal, const Budget& budget) {
  GroebnerOptions opt;
  opt.budget = budget;
  const auto gb = groebner_basis(ideal, opt);
  if (!gb.complete) throw Error(ErrorKind::BudgetExceeded, "Groebner budget exhausted");
  return hilbert_data(gb);
}

json signed_rows(const Matrix<std::uint32_t>& m, std::uint32_t p) {
  const PrimeField f(p);
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(f.to_signed(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json fiber_json(const FiberReport& fr, std::uint32_t p) {
  json j{{"rank", fr.rank}, {"dim", fr.fiber.dim()}, {"equations", signed_rows(fr.fiber.equations, p)}};
  if (fr.intersection_hilbert)
    j["intersection"] = {{"dim", fr.intersection_hilbert->projective_dimension},
                         {"degree", fr.intersection_hilbert->degree}};
  return j;
}

std::string verdict_string(Ctx& c, const SmoothnessVerdict& v) {
  if (v.kind == Smoothness::Unknown) throw Error(ErrorKind::BudgetExceeded, v.detail);
  c.note = v.detail;
  if (v.witness) c.note += " at " + c.str(*v.witness);
  return to_string(v.kind);
}

// Random point of a linear subspace off the base locus, as (point, image).
std::optional<std::pair<Point, Point>> point_on(Ctx& c, const LinearSubspace& s,
                                                const std::vector<Poly>& forms) {
  const PrimeField f = c.field();
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<std::uint32_t> x(s.ambient + 1, 0);
    for (const auto& b : s.basis) {
      const auto lambda = f.random(c.rng);
      for (int k = 0; k <= s.ambient; ++k) x[k] = f.add(x[k], f.mul(lambda, b[k]));
    }
    if (is_zero_vector(f, x)) continue;
    const Point pt = make_point(f, x);
    try {
      return std::make_pair(pt, eval(forms, pt));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BasePoint) throw;
    }
  }
  return std::nullopt;
}

LinearSubspace subspace_arg(Ctx& c, const json& args, int ambient) {
  return subspace_from_equations(c.p(), ambient,
                                 args.at("equations").get<std::vector<std::vector<long long>>>());
}

// Points of V(I) (or of the ambient space) off the base locus of the system.
std::vector<Point> sample_off_base(Ctx& c, const json& args, int count) {
  const auto& sys = c.system();
  const std::string name = args.at("locus").get<std::string>();
  std::vector<Point> out;
  if (name == "ambient") {
    for (int guard = 0; static_cast<int>(out.size()) < count && guard < 20 * count; ++guard) {
      const Point x = random_point(c.p(), sys.source_dim(), c.rng);
      try {
        eval(sys, x);
        out.push_back(x);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BasePoint) throw;
      }
    }
  } else {
    const Ideal ideal = c.locus(args);
    for (const auto& x : sample_points(ideal, 2 * count, c.rng, c.budget)) {
      if (static_cast<int>(out.size()) >= count) break;
      try {
        eval(sys, x);
        out.push_back(x);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BasePoint) throw;
      }
    }
  }
  if (static_cast<int>(out.size()) < count)
    throw Error(ErrorKind::InsufficientPoints, "could not sample enough points off the base locus");
  return out;
}

using Op = std::function<json(Ctx&, const json&)>;

json ruling_planes_json(const PlaneCount& pc) {
  return {{"count", pc.count}, {"degenerate", pc.degenerate}};
}

const std::map<std::string, Op>& registry() {
  static const std::map<std::string, Op> ops = {
      // arithmetic
      {"esb_d2",
       [](Ctx&, const json& a) -> json {
         const auto r = esb_cremona_d2(a.at("n"), a.at("d1"), a.at("r1"));
         return r ? json(*r) : json(nullptr);
       }},
      {"esb_r2",
       [](Ctx&, const json& a) -> json {
         const auto r = esb_cremona_r2(a.at("n"), a.at("d1"), a.at("d2"));
         return r ? json(*r) : json(nullptr);
       }},
      {"esb_hypersurface_d2",
       [](Ctx&, const json& a) -> json {
         const auto r = esb_hypersurface_d2(a.at("n"), a.at("d1"), a.at("r1"));
         return r ? json(*r) : json(nullptr);
       }},
      {"profile",
       [](Ctx&, const json& a) -> json {
         ContractionProfile pr{a.at("n"), a.at("m"), a.at("d1"), a.at("d2"), a.at("r1"), a.at("r2"), true};
         return pr.relations_hold();
       }},
      {"class_flip",
       [](Ctx&, const json& a) -> json {
         const auto cf = class_flip(a.at("d1"), a.at("d2"));
         return {{"H2", {cf.h2.a, cf.h2.b}}, {"E2", {cf.e2.a, cf.e2.b}}};
       }},
      {"secant_degree",
       [](Ctx&, const json& a) -> json { return secant_hypersurface_degree(a.at("d1"), a.at("d2")); }},
      {"hilbert_burch",
       [](Ctx&, const json& a) -> json {
         const auto h = hilbert_burch_hp(a.at("m"), a.at("n"));
         return {{"degree", h.degree}, {"genus", h.sectional_genus.value_or(0)}};
       }},
      {"resolution",
       [](Ctx&, const json& a) -> json {
         ResolutionSpec spec;
         spec.ambient = a.at("ambient");
         for (const auto& module : a.at("modules")) {
           std::vector<std::pair<int, int>> terms;
           for (const auto& t : module) terms.emplace_back(t.at(0), t.at(1));
           spec.modules.push_back(std::move(terms));
         }
         return hilbert_json(resolution_hp(spec));
       }},
      {"liaison",
       [](Ctx&, const json& a) -> json { return liaison_degree(a.at("d"), a.at("e"), a.at("known")); }},
      {"square_plus_t",
       [](Ctx&, const json& a) -> json {
         json out = json::array();
         for (const auto& [h, t] : square_plus_t(a.at("b"))) out.push_back({h, t});
         return out;
       }},
      {"blowup_selfint",
       [](Ctx&, const json& a) -> json {
         return blowup_quartic_selfint(a.at("deg_y"), a.at("deg_c"), a.at("genus_c"));
       }},

      // determinantal maps
      {"bilinear_identity",
       [](Ctx& c, const json&) -> json { return bilinear_identity_holds(c.map().A(), c.map().B()); }},
      {"minors_match",
       [](Ctx& c, const json& a) -> json {
         const auto& mins = c.map().minors();
         const auto forms = a.at("forms").get<std::vector<std::string>>();
         if (forms.size() != mins.size()) return false;
         for (std::size_t i = 0; i < forms.size(); ++i)
           if (!(parse_poly(c.map().source_ring(), forms[i]) == mins[i])) return false;
         return true;
       }},
      {"flip_matches",
       [](Ctx& c, const json& a) -> json {
         const auto& b = c.map().B();
         const auto rows = a.at("rows").get<MatrixText>();
         const auto cols = a.at("columns").get<std::vector<int>>();
         if (static_cast<int>(rows.size()) != b.rows()) return false;
         for (int i = 0; i < b.rows(); ++i) {
           if (rows[i].size() != cols.size() || static_cast<int>(cols.size()) != b.cols()) return false;
           for (int j = 0; j < b.cols(); ++j)
             if (!(parse_poly(c.map().target_ring(), rows[i][j]) == b(i, cols[j]))) return false;
         }
         return true;
       }},
      {"eval",
       [](Ctx& c, const json& a) -> json {
         const auto& map = c.map();
         try {
           return c.str(eval(map, c.point(a.at("point"), map.source_ring().nvars)));
         } catch (const Error& e) {
           if (e.kind() == ErrorKind::BasePoint) return "BasePoint";
           throw;
         }
       }},
      {"fiber",
       [](Ctx& c, const json& a) -> json {
         const auto& map = c.map();
         const auto fr = fiber(map, c.point(a.at("point"), map.target_ring().nvars), c.budget);
         if (!fr.intersection_hilbert)
           throw Error(ErrorKind::BudgetExceeded, "Groebner budget exhausted on the fiber");
         return fiber_json(fr, c.p());
       }},
      {"fiber_intersection_smooth",
       [](Ctx& c, const json& a) -> json {
         const auto& map = c.map();
         const auto fr = fiber(map, c.point(a.at("point"), map.target_ring().nvars), c.budget);
         return verdict_string(c, smoothness_certificate(minimalize(fr.intersection, c.budget), 1,
                                                         c.rng, c.budget));
       }},
      {"all_target_fibers",
       [](Ctx& c, const json& a) -> json {
         const std::uint32_t q = a.value("prime", c.p());
         const PrimeField f(q);
         const Ring ring{q, c.map().source_ring().nvars, MonoOrder::Grevlex};
         const DetMap map = DetMap::build(matrix_from_text(ring, matrix_to_text(c.map().A())));
         std::set<int> dims;
         std::set<json> meets;
         bool round_trip = true;
         long long targets = 0;
         PointEnumerator<PrimeField> ys(f, map.target_dim(), c.cfg.enumeration_budget);
         Point y;
         while (ys.next(y)) {
           ++targets;
           const auto fr = fiber(map, y, c.budget);
           if (!fr.intersection_hilbert) throw Error(ErrorKind::BudgetExceeded, "fiber Groebner budget");
           dims.insert(fr.fiber.dim());
           meets.insert(json{{"dim", fr.intersection_hilbert->projective_dimension},
                             {"degree", fr.intersection_hilbert->degree}});
           // every rational fiber point off X1 maps back to y
           PointEnumerator<PrimeField> us(f, fr.fiber.dim(), c.cfg.enumeration_budget);
           Point u;
           while (us.next(u)) {
             std::vector<std::uint32_t> x(map.source_dim() + 1, 0);
             for (std::size_t j = 0; j < fr.fiber.basis.size(); ++j)
               for (int k = 0; k <= map.source_dim(); ++k)
                 x[k] = f.add(x[k], f.mul(u.x[j], fr.fiber.basis[j][k]));
             try {
               if (!(eval(map, make_point(f, x)) == y)) round_trip = false;
             } catch (const Error& e) {
               if (e.kind() != ErrorKind::BasePoint) throw;
             }
           }
         }
         return {{"targets", targets}, {"fiber_dims", dims}, {"intersections", meets},
                 {"round_trip", round_trip}};
       }},
      {"generic_fiber",
       [](Ctx& c, const json& a) -> json {
         const auto& map = c.map();
         const int trials = c.trials(a, "trials", 10);
         std::set<int> dims, lengths;
         int done = 0;
         for (int guard = 0; done < trials && guard < 20 * trials; ++guard) {
           const Point x = random_point(c.p(), map.source_dim(), c.rng);
           Point y;
           try {
             y = eval(map, x);
           } catch (const Error& e) {
             if (e.kind() != ErrorKind::BasePoint) throw;
             continue;
           }
           const auto fr = fiber(map, y, c.budget);
           dims.insert(fr.fiber.dim());
           if (fr.fiber.dim() >= 1) {
             if (!fr.intersection_hilbert) throw Error(ErrorKind::BudgetExceeded, "fiber Groebner budget");
             lengths.insert(static_cast<int>(fr.intersection_hilbert->degree));
           }
           ++done;
         }
         c.note = std::to_string(done) + " fibers";
         return {{"fiber_dims", dims}, {"intersection_lengths", lengths}};
       }},
      {"birationality",
       [](Ctx& c, const json& a) -> json {
         const auto v = birationality_probe(c.map(), c.trials(a, "trials", 10), c.rng);
         c.note = std::to_string(v.trials) + " trials over F_" + std::to_string(v.prime);
         switch (v.kind) {
           case BirationalityVerdict::BirationalEvidence: return {{"kind", "BirationalEvidence"}};
           case BirationalityVerdict::FiberDim: return {{"kind", "FiberDim"}, {"dim", v.fiber_dim}};
           default: return {{"kind", "Inconclusive"}};
         }
       }},
      {"eval_on",
       [](Ctx& c, const json& a) -> json {
         const auto& map = c.map();
         const auto s = subspace_arg(c, a, map.source_dim());
         std::set<std::string> images;
         for (int t = 0; t < c.trials(a, "trials", 5); ++t)
           if (const auto pr = point_on(c, s, map.minors())) images.insert(c.str(pr->second));
         return images;
       }},
      {"exceptional_on",
       [](Ctx& c, const json& a) -> json {
         const auto& map = c.map();
         const auto s = subspace_arg(c, a, map.source_dim());
         std::set<bool> seen;
         for (int t = 0; t < c.trials(a, "trials", 5); ++t)
           if (const auto pr = point_on(c, s, map.minors()))
             seen.insert(exceptional_membership(map, pr->first));
         return seen;
       }},
      {"exceptional_sample",
       [](Ctx& c, const json& a) -> json {
         const auto& map = c.map();
         const int samples = a.value("samples", 100);
         int regular = 0, done = 0;
         for (int guard = 0; done < samples && guard < 20 * samples; ++guard) {
           const Point x = random_point(c.p(), map.source_dim(), c.rng);
           try {
             if (!exceptional_membership(map, x)) ++regular;
             ++done;
           } catch (const Error& e) {
             if (e.kind() != ErrorKind::BasePoint) throw;
           }
         }
         c.note = std::to_string(regular) + " of " + std::to_string(done) + " not exceptional";
         return done == samples && regular >= a.value("min_false", samples);
       }},
      {"stratum",
       [](Ctx& c, const json& a) -> json {
         const auto st = rank_stratum(c.map(), a.at("rank"), c.rng, c.budget);
         json j = hilbert_json(*st.hilbert);
         if (st.points) {
           j["geometric_points"] = st.points->geometric_points;
           json pts = json::array();
           for (const auto& x : st.points->rational_points) pts.push_back(c.str(x));
           j["rational_points"] = pts;
         }
         return j;
       }},
      {"stratum_extension_counts",
       [](Ctx& c, const json& a) -> json {
         const auto st = rank_stratum(c.map(), a.at("rank"), c.rng, c.budget);
         if (!st.points) throw Error(ErrorKind::Shape, "stratum is not zero dimensional");
         const int e_max = std::min<int>(a.value("e_max", c.cfg.extension_bound), c.cfg.extension_bound);
         json out = json::array();
         std::string searched;
         for (int e = 1; e <= e_max; ++e) {
           const long long predicted = predicted_point_count(*st.points, e);
           const GaloisField gf(FieldCfg::extension(c.p(), e));
           if (gf.size() <= c.cfg.enumeration_budget) {
             const auto pts = extension_points(*st.points, st.ideal, gf, c.cfg.enumeration_budget);
             if (static_cast<long long>(pts.size()) != predicted)
               throw Error(ErrorKind::IdentityFailure, "extension search disagrees with residue degrees");
             searched += " " + std::to_string(e);
           }
           out.push_back(predicted);
         }
         c.note = "residue degrees certify all counts; exhaustive root search for e in {" +
                  searched + " }";
         return out;
       }},
      {"stratum_extension_check",
       [](Ctx& c, const json& a) -> json {
         const auto st = rank_stratum(c.map(), a.at("rank"), c.rng, c.budget);
         if (!st.points) throw Error(ErrorKind::Shape, "stratum is not zero dimensional");
         for (int e = 1; e <= a.value("e_max", 2); ++e) {
           const GaloisField gf(FieldCfg::extension(c.p(), e));
           if (gf.size() > c.cfg.enumeration_budget) break;
           const auto pts = extension_points(*st.points, st.ideal, gf, c.cfg.enumeration_budget);
           if (static_cast<long long>(pts.size()) != predicted_point_count(*st.points, e)) return false;
         }
         return true;
       }},
      {"singular_points",
       [](Ctx& c, const json& a) -> json {
         const auto sl = singular_points(c.locus(a), a.at("codim"), c.rng, c.budget);
         json pts = json::array();
         for (const auto& x : sl.singular) pts.push_back(c.str(x));
         return {{"geometric", sl.candidates.geometric_points}, {"rational_singular", pts}};
       }},
      {"hp_matches_resolution",
       [](Ctx& c, const json&) -> json {
         const auto& map = c.map();
         const auto h = hilbert_of(map.base_ideal(), c.budget);
         const auto r = hilbert_burch_hp(map.source_dim(), map.target_dim());
         return h.hilbert_polynomial == r.hilbert_polynomial;
       }},
      {"esb_shape",
       [](Ctx& c, const json&) -> json {
         const auto& map = c.map();
         const int m = map.source_dim(), n = map.target_dim();
         if (m != n) {
           c.note = "not a Cremona shape (m != n); relation not applicable";
           return true;
         }
         const auto d2 = esb_cremona_d2(n, n, m - 2);
         return d2.has_value() && *d2 == n;
       }},
      {"plane_quartic_slice",
       [](Ctx& c, const json& a) -> json {
         const auto& map = c.map();
         const Ring ring = map.source_ring();
         const auto fr = fiber(map, c.point(a.at("point"), map.target_ring().nvars), c.budget);
         const auto fiber_eqs = fr.fiber.equation_forms(ring);
         const Ideal x1 = map.base_ideal();
         std::set<json> seen;
         for (int t = 0; t < c.trials(a, "trials", 3); ++t) {
           const Poly h = random_linear_form(ring, c.rng);
           // curve = X1 cut by the hyperplane inside the fiber
           Ideal curve = x1.with(h);
           for (const auto& e : fiber_eqs) curve = curve.with(e);
           const auto hc = hilbert_of(curve, c.budget);
           // its linear span: the fiber cut by the hyperplane
           Ideal span(ring, fiber_eqs);
           span = span.with(h);
           const auto hs = hilbert_of(span, c.budget);
           // the curve lies on the slice X1 + (h)
           const auto slice_gb = groebner_basis(x1.with(h));
           bool inside = true;
           for (const auto& g : slice_gb.basis)
             if (!normal_form(g, groebner_basis(curve).basis).is_zero()) inside = false;
           seen.insert(json{{"curve_dim", hc.projective_dimension}, {"curve_degree", hc.degree},
                            {"span_dim", hs.projective_dimension}, {"in_slice", inside}});
         }
         if (seen.size() != 1) return json(seen);
         return *seen.begin();
       }},

      // ideals and form systems
      {"smooth",
       [](Ctx& c, const json& a) -> json {
         return verdict_string(c, smoothness_certificate(c.locus(a), a.at("codim"), c.rng, c.budget));
       }},
      {"hilbert", [](Ctx& c, const json& a) -> json { return hilbert_json(hilbert_of(c.locus(a), c.budget)); }},
      {"h0",
       [](Ctx& c, const json& a) -> json { return linear_system_dim(c.locus(a), a.at("d"), c.budget); }},
      {"h0_sampled",
       [](Ctx& c, const json& a) -> json {
         return linear_system_dim_sampled(c.locus(a), a.at("d"), c.rng, c.budget);
       }},
      {"generated_in_degree",
       [](Ctx& c, const json& a) -> json { return generated_in_degree(c.locus(a), a.at("d"), c.budget); }},
      {"contains",
       [](Ctx& c, const json& a) -> json {
         const auto gb = groebner_basis(c.locus(a));
         const auto it = c.inst.loci.find(a.at("forms").get<std::string>());
         if (it == c.inst.loci.end()) throw Error(ErrorKind::MalformedSpec, "unknown locus");
         for (const auto& f : it->second.gens())
           if (!normal_form(f, gb.basis).is_zero()) return false;
         return true;
       }},
      {"attempts_within",
       [](Ctx& c, const json& a) -> json {
         c.note = std::to_string(c.inst.attempts) + " attempts";
         return c.inst.attempts <= a.value("max", kMaxReseeds);
       }},
      {"ruling_planes",
       [](Ctx& c, const json& a) -> json {
         const Ideal y = c.locus(a);
         return ruling_planes_json(count_ruling_planes(y.gens().front()));
       }},
      {"ruling_planes_bound",
       [](Ctx& c, const json& a) -> json {
         const auto& q = c.system().forms();
         const Ring ring = c.system().ring();
         const int bound = a.value("bound", 2);
         int worst = 0;
         for (int t = 0; t < c.trials(a, "trials", 20); ++t) {
           std::vector<Poly> l;
           for (int i = 0; i < 4; ++i) l.push_back(random_linear_form(ring, c.rng));
           const auto pc = count_ruling_planes(fano_cubic(q, l));
           worst = std::max(worst, pc.degenerate ? 99 : pc.count);
         }
         c.note = "largest count " + std::to_string(worst);
         return worst <= bound;
       }},
      {"ruling_planes_degenerate",
       [](Ctx& c, const json&) -> json {
         const auto& q = c.system().forms();
         const Ring ring = c.system().ring();
         std::vector<Poly> l;
         for (int i = 0; i < 3; ++i) l.push_back(random_linear_form(ring, c.rng));
         l.push_back(Poly(ring));
         return ruling_planes_json(count_ruling_planes(fano_cubic(q, l)));
       }},
      {"fiber_dim_on",
       [](Ctx& c, const json& a) -> json {
         std::set<int> dims;
         for (const auto& x : sample_off_base(c, a, c.trials(a, "count", 10)))
           dims.insert(fiber_dim_at(c.system(), x));
         return dims;
       }},
      {"secant_lengths",
       [](Ctx& c, const json& a) -> json {
         const auto& sys = c.system();
         const Ideal x = c.inst.loci.at("X");
         std::set<long long> lengths;
         std::set<bool> contracted;
         json args{{"locus", "ambient"}};
         for (const auto& pt : sample_off_base(c, args, c.trials(a, "count", 20))) {
           const auto line = fiber_tangent(sys, pt);
           contracted.insert(line.dim() == 1 && is_contracted(sys, pt, line));
           const auto h = hilbert_of(restrict_to(x, line), c.budget);
           lengths.insert(h.projective_dimension == 0 ? h.degree : -1);
         }
         return {{"lengths", lengths}, {"contracted", contracted}};
       }},
      {"image_dim",
       [](Ctx& c, const json& a) -> json {
         std::optional<Ideal> restricted;
         if (a.at("locus") != "ambient") restricted = c.locus(a);
         return image_dim_estimate(c.system(), restricted, c.trials(a, "samples", 10), c.rng, c.budget);
       }},
      {"divisor12_degenerate",
       [](Ctx& c, const json&) -> json {
         const Ideal cone = c.inst.loci.at("cone");
         const auto ruling = ruling_space(cone.ring(), 0, 1);
         try {
           divisor12(cone, ruling, cone.gens().front());
           return "constructed";
         } catch (const Error& e) {
           if (e.kind() == ErrorKind::ConstructionFailed) return "ConstructionFailed";
           throw;
         }
       }},
  };
  return ops;
}

std::uint64_t mix(std::uint64_t seed, const std::string& name) {
  return seed ^ (std::hash<std::string>{}(name) * 0x9e3779b97f4a7c15ULL);
}

json select_keys(const json& actual, const std::vector<std::string>& keys) {
  if (keys.empty() || !actual.is_object()) return actual;
  json out = json::object();
  for (const auto& k : keys)
    out[k] = actual.contains(k) ? actual.at(k) : json(nullptr);
  return out;
}

json run_op(const ExampleInstance& inst, const CheckSpec& spec, const RunConfig& config,
            std::string& note) {
  const auto& ops = registry();
  const auto it = ops.find(spec.op);
  if (it == ops.end()) throw Error(ErrorKind::MalformedSpec, "unknown check operation '" + spec.op + "'");
  Budget budget;
  budget.max_pairs = config.gb_pair_budget;
  Ctx ctx{inst, config, Rng(mix(config.seed, spec.name)), budget, {}, std::nullopt};
  json actual = it->second(ctx, spec.args);
  note = ctx.note;
  return select_keys(actual, spec.select);
}

bool is_budget(ErrorKind k) {
  return k == ErrorKind::BudgetExceeded || k == ErrorKind::IncompleteBasis ||
         k == ErrorKind::InsufficientPoints;
}

}  // namespace

json fiber_to_json(const FiberReport& fr, std::uint32_t p) { return fiber_json(fr, p); }

bool is_arithmetic_op(const std::string& op) {
  static const std::set<std::string> ops = {
      "esb_d2", "esb_r2", "esb_hypersurface_d2", "profile", "class_flip", "secant_degree",
      "hilbert_burch", "resolution", "liaison", "square_plus_t", "blowup_selfint"};
  return ops.count(op) > 0;
}

std::vector<std::string> check_ops() {
  std::vector<std::string> out;
  for (const auto& [name, op] : registry()) out.push_back(name);
  return out;
}

CheckResult run_check(const ExampleInstance& inst, const CheckSpec& spec, const RunConfig& config) {
  CheckResult r;
  r.spec = spec;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.actual = run_op(inst, spec, config, r.note);
    r.status = r.actual == spec.expected ? CheckStatus::Pass : CheckStatus::Fail;
  } catch (const Error& e) {
    r.actual = to_string(e.kind());
    r.note = e.what();
    r.status = is_budget(e.kind()) ? CheckStatus::Unknown : CheckStatus::Fail;
  } catch (const nlohmann::json::exception& e) {
    r.actual = "MalformedSpec";
    r.note = e.what();
    r.status = CheckStatus::Fail;
  }
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - start)
                 .count();
  return r;
}

Report verify_manifest(const ExampleInstance& inst, const RunConfig& config) {
  Report report;
  report.example = inst.id;
  report.prime = inst.prime;
  report.seed = inst.seed;
  // small primes dividing an expected count can fake agreement or disagreement
  std::set<long long> values;
  std::function<void(const json&)> collect = [&](const json& j) {
    if (j.is_number_integer()) values.insert(std::llabs(j.get<long long>()));
    else if (j.is_array() || j.is_object())
      for (const auto& v : j) collect(v);
  };
  for (const auto& c : inst.manifest.checks) collect(c.expected);
  for (long long v : values)
    if (v > 1 && v % inst.prime == 0) {
      report.warnings.push_back("BadPrime: " + std::to_string(inst.prime) +
                                " divides the expected value " + std::to_string(v));
      break;
    }

  std::optional<ExampleInstance> other;
  bool other_failed = false;
  for (const auto& spec : inst.manifest.checks) {
    CheckResult r = run_check(inst, spec, config);
    const bool recheck = spec.provenance == Provenance::Paper && spec.recheck &&
                         config.recheck_prime != 0 && config.recheck_prime != inst.prime &&
                         !is_arithmetic_op(spec.op) && r.status == CheckStatus::Pass;
    if (recheck && !other_failed) {
      const auto start = std::chrono::steady_clock::now();
      try {
        if (!other) {
          if (inst.matrix && inst.kind == ExampleKind::DetMatrix && inst.id != "bordiga_random") {
            const Ring ring{config.recheck_prime, inst.matrix->ring().nvars, MonoOrder::Grevlex};
            other = inst;
            other->prime = config.recheck_prime;
            other->matrix = matrix_from_text(ring, matrix_to_text(*inst.matrix));
          } else {
            other = build_example(inst.id, config.recheck_prime, inst.seed);
          }
        }
        std::string note;
        const auto again = run_check(*other, spec, config);
        r.recheck_prime = config.recheck_prime;
        r.recheck_actual = again.actual;
        if (again.status != CheckStatus::Pass) {
          r.status = again.status;
          r.note = "BadPrime: result differs over F_" + std::to_string(config.recheck_prime) +
                   (again.note.empty() ? "" : " (" + again.note + ")");
        }
      } catch (const Error& e) {
        other_failed = true;
        report.warnings.push_back(std::string("recheck skipped: ") + e.what());
      }
      r.millis += std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    }
    if (config.deterministic) r.millis = 0;
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace cremona
