#include "cremona/gallery.hpp"

#include <algorithm>
#include <cstdlib>

#include "cremona/hilbert.hpp"
#include "cremona/univariate.hpp"

namespace cremona {

PolyMatrix matrix_from_text(const Ring& ring, const MatrixText& text) {
  std::vector<std::vector<Poly>> rows;
  for (const auto& row : text) {
    std::vector<Poly> r;
    for (const auto& s : row) r.push_back(parse_poly(ring, s));
    rows.push_back(std::move(r));
  }
  return PolyMatrix(ring, std::move(rows));
}

MatrixText matrix_to_text(const PolyMatrix& m) {
  MatrixText out(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).to_string());
  return out;
}

const MatrixText& segre_matrix_text() {
  static const MatrixText m = {{"x0", "x3"}, {"x1", "x4"}, {"x2", "x5"}};
  return m;
}

const MatrixText& todd_room_matrix_text() {
  static const MatrixText m = {
      {"-2*x1+x0", "-2*x2+x0", "2*x0", "-x1-x4"},
      {"x3+x0", "-x1+x2", "x1-2*x3", "2*x2-x3"},
      {"-x1-x3", "-x3+2*x4", "-2*x4+x0", "x1-x0"},
      {"-2*x1+x4", "-x2-x0", "x2+x3", "x2+x4"},
      {"x3", "x4", "x3", "x4"},
  };
  return m;
}

namespace {

MatrixText quinto_rows(const std::string& last_middle) {
  return {
      {"-2*x1-2*x4", "-2*x1+x5-x0", "-x2+x5-x0", "x3-2*x4+2*x0", "-2*x2+2*x4"},
      {"2*x2+x0", "2*x2-2*x0", "x2-x3-x4", "-x1+x2", "-2*x3+2*x4"},
      {"x4+x5", "-x4+x5+x0", "x1+2*x0", "-x2-2*x5+x0", "x1+x5"},
      {"-x3-x0", "-2*x1+x3", "-2*x1+x4", "-x2+x4", "-x1-x3-2*x5"},
      {"x1+x3-2*x5", "x3-2*x5", "-2*x3+2*x5", "x1+2*x5", "x2-x0"},
      {"x4", "x5", last_middle, "x5", "x4"},
  };
}

}  // namespace

// The printed order of the two matrices is opposite to their fibers over e5: the
// last row of A cuts that fiber, so (x4,x5,x3,x5,x4) gives the plane.
const MatrixText& quinto_plane_matrix_text() {
  static const MatrixText m = quinto_rows("x3");
  return m;
}

const MatrixText& quinto_solid_matrix_text() {
  static const MatrixText m = quinto_rows("x4");
  return m;
}

const MatrixText& conic_general_matrix_text() {
  static const MatrixText m = {
      {"x1+x4", "x1+x5-x0", "-x2+x5-x0", "x3+x4-x0"},
      {"-x2+x0", "-x2+x0", "x2-x3-x4", "-x1+x2"},
      {"x4+x5", "-x4+x5+x0", "x1-x0", "-x2+x5+x0"},
      {"-x3-x0", "x1+x3", "x1+x4", "-x2+x4"},
      {"x1+x3+x5", "x3+x5", "x3-x5", "x1-x5"},
  };
  return m;
}

const MatrixText& conic_special_matrix_text() {
  static const MatrixText m = {
      {"x1+x2+x4+x5", "x1-x5-x0", "-x2+x5-x0", "x3+x4-x0"},
      {"-x2+x0", "-x2+x3+x0", "x2-x3-x4", "-x1+x2-x5"},
      {"x1+x3+x4+x5", "-x4+x5+x0", "x1+x3-x0", "x1-x2+x5+x0"},
      {"-x3-x0", "x1+x3", "x1+x4-x5", "-x2+x4"},
      {"x4", "x5", "x4", "x5"},
  };
  return m;
}

Ideal segre_cone(int ambient, std::uint32_t p) {
  if (ambient < 5 || ambient > 7)
    throw Error(ErrorKind::Shape, "Segre cone needs ambient dimension 5, 6 or 7");
  const Ring ring{p, ambient + 1, MonoOrder::Grevlex};
  auto x = [&](int i) { return Poly::var(ring, i); };
  return Ideal(ring, {x(1) * x(5) - x(2) * x(4), x(2) * x(3) - x(0) * x(5),
                      x(0) * x(4) - x(1) * x(3)});
}

std::vector<Poly> ruling_space(const Ring& ring, std::uint32_t s, std::uint32_t t) {
  std::vector<Poly> out;
  for (int i = 0; i < 3; ++i)
    out.push_back(Poly::var(ring, i).scale(t) - Poly::var(ring, i + 3).scale(s));
  return out;
}

Poly random_linear_form(const Ring& ring, Rng& rng) {
  const PrimeField f(ring.p);
  std::vector<std::int64_t> c(ring.nvars);
  for (auto& v : c) v = f.random(rng);
  return Poly::linear(ring, c);
}

Poly quadric_through(const std::vector<Poly>& ruling, Rng& rng) {
  const Ring ring = ruling.front().ring();
  Poly q(ring);
  for (const auto& r : ruling) q += random_linear_form(ring, rng) * r;
  return q;
}

Ideal divisor12(const Ideal& cone, const std::vector<Poly>& ruling, const Poly& quadric) {
  const Ring ring = cone.ring();
  if (normal_form(quadric, groebner_basis(cone).basis).is_zero())
    throw Error(ErrorKind::ConstructionFailed, "quadric contains the cone");
  return ideal_quotient(cone.with(quadric), Ideal(ring, ruling));
}

Ideal divisor12_complete_intersection(const Ideal& cone, Rng& rng) {
  const Ring ring = cone.ring();
  const PrimeField f(ring.p);
  Ideal sum = cone;
  std::uint32_t last_s = 0, last_t = 0;
  for (int k = 0; k < 2; ++k) {
    std::uint32_t s, t;
    do {
      s = f.random(rng);
      t = f.random_nonzero(rng);
    } while (k == 1 && f.mul(s, last_t) == f.mul(last_s, t));
    last_s = s;
    last_t = t;
    const auto ruling = ruling_space(ring, s, t);
    sum = sum + divisor12(cone, ruling, quadric_through(ruling, rng));
  }
  return minimalize(sum);
}

DelPezzo del_pezzo_quintic(std::uint32_t p, Rng& rng) {
  DelPezzo dp;
  dp.segre = segre_cone(5, p);
  const Ring ring = dp.segre.ring();
  const std::vector<Poly> plane{Poly::var(ring, 0), Poly::var(ring, 1), Poly::var(ring, 2)};
  const Poly q3 = quadric_through(plane, rng);
  if (normal_form(q3, groebner_basis(dp.segre).basis).is_zero())
    throw Error(ErrorKind::ConstructionFailed, "quadric contains the Segre threefold");
  dp.surface = ideal_quotient(dp.segre.with(q3), Ideal(ring, plane));
  dp.quadrics = dp.segre.gens();
  dp.quadrics.push_back(q3);
  // a fifth quadric of the surface outside the span of Q0..Q3
  const auto span_gb = groebner_basis(Ideal(ring, dp.quadrics));
  for (const auto& q : quadrics_of(dp.surface)) {
    if (!normal_form(q, span_gb.basis).is_zero()) {
      dp.quadrics.push_back(q);
      break;
    }
  }
  if (dp.quadrics.size() != 5)
    throw Error(ErrorKind::ConstructionFailed, "residual surface has too few quadrics");
  return dp;
}

Poly fano_cubic(const std::vector<Poly>& quadrics, const std::vector<Poly>& linear) {
  if (quadrics.size() < 4 || linear.size() != 4)
    throw Error(ErrorKind::Shape, "need four quadrics and four linear forms");
  Poly y(quadrics.front().ring());
  for (int i = 0; i < 4; ++i) y += linear[i] * quadrics[i];
  if (y.is_zero()) throw Error(ErrorKind::ConstructionFailed, "cubic is the zero form");
  return y;
}

PlaneCount count_ruling_planes(const Poly& cubic) {
  const Ring src = cubic.ring();
  if (src.nvars != 6 || !cubic.is_homogeneous() || cubic.degree() != 3)
    throw Error(ErrorKind::Shape, "expected a cubic form on P^5");
  // ring k[s, t, u0, u1, u2]
  const Ring big{src.p, 5, MonoOrder::Grevlex};
  auto v = [&](int i) { return Poly::var(big, i); };
  const std::vector<Poly> images{v(0) * v(2), v(0) * v(3), v(0) * v(4),
                                 v(1) * v(2), v(1) * v(3), v(1) * v(4)};
  const Poly sub = cubic.substitute(images);
  // group by u-monomial; each coefficient is a binary cubic in (s, t)
  std::map<std::array<int, 3>, std::map<int, std::uint32_t>> groups;
  for (const auto& t : sub.terms())
    groups[{t.m.e[2], t.m.e[3], t.m.e[4]}][t.m.e[0]] = t.c;
  PlaneCount out;
  if (groups.empty()) {
    out.count = 3;
    out.degenerate = true;
    return out;
  }
  const PrimeField f(src.p);
  UPoly g;
  int at_infinity = 3;
  for (const auto& [u, coeffs] : groups) {
    UPoly h;  // dehomogenized at t = 1: polynomial in s
    h.coeffs.assign(4, 0);
    for (const auto& [s_exp, c] : coeffs) h.coeffs[s_exp] = c;
    upoly::trim(h);
    at_infinity = std::min(at_infinity, 3 - h.degree());
    g = upoly::gcd(f, g, h);
  }
  out.count = g.degree() + at_infinity;
  return out;
}

std::vector<Poly> quadrics_of(const Ideal& ideal, const Budget& budget) {
  GroebnerOptions opt;
  opt.budget = budget;
  opt.budget.max_degree = std::min(budget.max_degree, 2);
  const auto gb = groebner_basis(ideal, opt);
  std::vector<Poly> out;
  for (const auto& g : gb.basis)
    if (g.degree() == 2 && g.is_homogeneous()) out.push_back(g);
  for (const auto& g : gb.basis)
    if (g.degree() < 2) throw Error(ErrorKind::Shape, "ideal contains forms of degree below 2");
  return out;
}

bool generated_in_degree(const Ideal& ideal, int d, const Budget& budget) {
  GroebnerOptions opt;
  opt.budget = budget;
  const auto full = groebner_basis(ideal, opt);
  if (!full.complete) throw Error(ErrorKind::BudgetExceeded, "Groebner budget exhausted");
  std::vector<Poly> part;
  for (const auto& g : full.basis) {
    if (g.degree() < d) return false;
    if (g.degree() == d) part.push_back(g);
  }
  const auto sub = groebner_basis(Ideal(ideal.ring(), part), opt);
  return sub.complete && sub.leading_monomials() == full.leading_monomials();
}

PolyMatrix random_small_matrix(const Ring& ring, int n, Rng& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  PolyMatrix m(ring, n + 1, n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<std::int64_t> c(ring.nvars);
      for (auto& v : c) v = coeff(rng);
      m(i, j) = Poly::linear(ring, c);
    }
  return m;
}

}  // namespace cremona

namespace cremona {

const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids = {
      "segre_p5",         "todd_room",         "bordiga_random",  "quinto_p5_plane",
      "quinto_p5_solid",  "conic_p5_general",  "conic_p5_special", "del_pezzo_cubic",
      "semple_tyrrell",   "p7_threefold"};
  return ids;
}

namespace {

ExampleInstance det_instance(const std::string& id, const MatrixText& text, std::uint32_t p,
                             std::uint64_t seed) {
  const int nvars = [&] {
    int top = 0;
    for (const auto& row : text)
      for (const auto& s : row)
        for (std::size_t k = 0; k < s.size(); ++k)
          if (s[k] == 'x') top = std::max(top, std::atoi(s.c_str() + k + 1));
    return top + 1;
  }();
  ExampleInstance inst;
  inst.id = id;
  inst.kind = ExampleKind::DetMatrix;
  inst.prime = p;
  inst.seed = seed;
  inst.matrix = matrix_from_text(Ring{p, nvars, MonoOrder::Grevlex}, text);
  return inst;
}

ExampleInstance bordiga(std::uint32_t p, std::uint64_t seed) {
  Rng rng(seed);
  const Ring ring{p, 5, MonoOrder::Grevlex};
  for (int attempt = 1; attempt <= kMaxReseeds; ++attempt) {
    const PolyMatrix a = random_small_matrix(ring, 3, rng);
    try {
      const DetMap map = DetMap::build(a);
      const auto h = hilbert_data(groebner_basis(map.base_ideal()));
      if (h.projective_dimension != 2) continue;
      if (smoothness_certificate(map.base_ideal(), 2, rng).kind != Smoothness::Smooth) continue;
    } catch (const Error&) {
      continue;
    }
    ExampleInstance inst;
    inst.id = "bordiga_random";
    inst.prime = p;
    inst.seed = seed;
    inst.attempts = attempt;
    inst.matrix = a;
    return inst;
  }
  throw Error(ErrorKind::ConstructionFailed, "no smooth Bordiga surface within the reseed budget");
}

ExampleInstance del_pezzo_example(std::uint32_t p, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 1; attempt <= kMaxReseeds; ++attempt) {
    try {
      DelPezzo dp = del_pezzo_quintic(p, rng);
      const auto h = hilbert_data(groebner_basis(dp.surface));
      if (h.projective_dimension != 2 || h.degree != 5) continue;
      if (smoothness_certificate(dp.surface, 3, rng).kind != Smoothness::Smooth) continue;
      std::vector<Poly> l;
      for (int i = 0; i < 4; ++i) l.push_back(random_linear_form(dp.segre.ring(), rng));
      const Poly y = fano_cubic(dp.quadrics, l);
      const Ideal iy(y.ring(), {y});
      if (smoothness_certificate(iy, 1, rng).kind != Smoothness::Smooth) continue;
      ExampleInstance inst;
      inst.id = "del_pezzo_cubic";
      inst.kind = ExampleKind::FormSystem;
      inst.prime = p;
      inst.seed = seed;
      inst.attempts = attempt;
      inst.system = SystemMap(dp.quadrics);
      const Ring ring = dp.segre.ring();
      inst.loci.emplace("M", dp.segre);
      inst.loci.emplace("X", dp.surface);
      inst.loci.emplace("Y", iy);
      inst.loci.emplace("plane", Ideal(ring, {Poly::var(ring, 0), Poly::var(ring, 1),
                                              Poly::var(ring, 2)}));
      return inst;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ConstructionFailed) throw;
    }
  }
  throw Error(ErrorKind::ConstructionFailed, "no smooth cubic within the reseed budget");
}

ExampleInstance cone_example(const std::string& id, int ambient, int dim, std::uint32_t p,
                             std::uint64_t seed) {
  Rng rng(seed);
  const Ideal cone = segre_cone(ambient, p);
  for (int attempt = 1; attempt <= kMaxReseeds; ++attempt) {
    try {
      const Ideal x = divisor12_complete_intersection(cone, rng);
      const auto h = hilbert_data(groebner_basis(x));
      if (h.projective_dimension != dim || h.degree != 8) continue;
      const auto q = quadrics_of(x);
      if (q.size() != 7) continue;
      if (smoothness_certificate(x, ambient - dim, rng).kind != Smoothness::Smooth) continue;
      ExampleInstance inst;
      inst.id = id;
      inst.kind = ExampleKind::FormSystem;
      inst.prime = p;
      inst.seed = seed;
      inst.attempts = attempt;
      inst.system = SystemMap(q);
      inst.loci.emplace("X", x);
      inst.loci.emplace("cone", cone);
      return inst;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ConstructionFailed) throw;
    }
  }
  throw Error(ErrorKind::ConstructionFailed, "no smooth residual variety within the reseed budget");
}

}  // namespace

ExampleInstance build_example(const std::string& id, std::uint32_t p, std::uint64_t seed) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidField, "modulus must be prime");
  ExampleInstance inst;
  if (id == "segre_p5") inst = det_instance(id, segre_matrix_text(), p, seed);
  else if (id == "todd_room") inst = det_instance(id, todd_room_matrix_text(), p, seed);
  else if (id == "quinto_p5_plane") inst = det_instance(id, quinto_plane_matrix_text(), p, seed);
  else if (id == "quinto_p5_solid") inst = det_instance(id, quinto_solid_matrix_text(), p, seed);
  else if (id == "conic_p5_general") inst = det_instance(id, conic_general_matrix_text(), p, seed);
  else if (id == "conic_p5_special") inst = det_instance(id, conic_special_matrix_text(), p, seed);
  else if (id == "bordiga_random") inst = bordiga(p, seed);
  else if (id == "del_pezzo_cubic") inst = del_pezzo_example(p, seed);
  else if (id == "semple_tyrrell") inst = cone_example(id, 6, 2, p, seed);
  else if (id == "p7_threefold") inst = cone_example(id, 7, 3, p, seed);
  else throw Error(ErrorKind::UnknownId, "unknown example id '" + id + "'");
  inst.manifest = default_manifest(id);
  return inst;
}

ExampleInstance matrix_example(const std::string& id, const PolyMatrix& a) {
  ExampleInstance inst;
  inst.id = id;
  inst.kind = ExampleKind::DetMatrix;
  inst.prime = a.ring().p;
  inst.matrix = a;
  inst.manifest = default_manifest("matrix");
  return inst;
}

namespace {

nlohmann::json forms_json(const std::vector<Poly>& forms) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& f : forms) out.push_back(f.to_string());
  return out;
}

std::vector<Poly> forms_from_json(const Ring& ring, const nlohmann::json& j) {
  std::vector<Poly> out;
  for (const auto& s : j) out.push_back(parse_poly(ring, s.get<std::string>()));
  return out;
}

}  // namespace

nlohmann::json to_json(const ExampleInstance& inst) {
  nlohmann::json j;
  j["id"] = inst.id;
  j["kind"] = inst.kind == ExampleKind::DetMatrix ? "DetMatrix" : "FormSystem";
  j["prime"] = inst.prime;
  j["seed"] = inst.seed;
  j["attempts"] = inst.attempts;
  if (inst.matrix) {
    j["nvars"] = inst.matrix->ring().nvars;
    j["matrix"] = matrix_to_text(*inst.matrix);
  }
  if (inst.system) {
    j["nvars"] = inst.system->ring().nvars;
    j["forms"] = forms_json(inst.system->forms());
  }
  j["loci"] = nlohmann::json::object();
  for (const auto& [name, ideal] : inst.loci) j["loci"][name] = forms_json(ideal.gens());
  j["manifest"] = to_json(inst.manifest);
  return j;
}

ExampleInstance instance_from_json(const nlohmann::json& j) {
  try {
    ExampleInstance inst;
    inst.id = j.at("id").get<std::string>();
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "DetMatrix") inst.kind = ExampleKind::DetMatrix;
    else if (kind == "FormSystem") inst.kind = ExampleKind::FormSystem;
    else throw Error(ErrorKind::MalformedSpec, "unknown instance kind '" + kind + "'");
    inst.prime = j.at("prime").get<std::uint32_t>();
    if (!is_prime(inst.prime)) throw Error(ErrorKind::InvalidField, "modulus must be prime");
    inst.seed = j.at("seed").get<std::uint64_t>();
    inst.attempts = j.value("attempts", 1);
    const Ring ring{inst.prime, j.at("nvars").get<int>(), MonoOrder::Grevlex};
    if (j.contains("matrix")) inst.matrix = matrix_from_text(ring, j.at("matrix").get<MatrixText>());
    if (j.contains("forms")) inst.system = SystemMap(forms_from_json(ring, j.at("forms")));
    if (j.contains("loci"))
      for (const auto& [name, gens] : j.at("loci").items())
        inst.loci.emplace(name, Ideal(ring, forms_from_json(ring, gens)));
    inst.manifest = manifest_from_json(j.at("manifest"));
    if (inst.kind == ExampleKind::DetMatrix && !inst.matrix)
      throw Error(ErrorKind::MalformedSpec, "matrix instance without a matrix");
    if (inst.kind == ExampleKind::FormSystem && !inst.system)
      throw Error(ErrorKind::MalformedSpec, "form system instance without forms");
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, e.what());
  }
}

}  // namespace cremona
