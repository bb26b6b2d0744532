// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cremona/cli.hpp"
#include "cremona/detmap.hpp"
#include "cremona/gallery.hpp"
#include "cremona/invariants.hpp"
#include "regression.hpp"

using namespace cremona;
using namespace cremona::testing;

namespace {

struct Log {
  std::vector<std::string> failures;
  void need(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Log&)> body;
};

Point unit(int n, int k) {
  Point p;
  p.x.assign(n + 1, 0);
  p.x[k] = 1;
  return p;
}

DetMap printed(const MatrixText& text, std::uint32_t p, int nvars) {
  return DetMap::build(matrix_from_text(Ring{p, nvars, MonoOrder::Grevlex}, text));
}

LinearSubspace coordinate_subspace(std::uint32_t p, int ambient, std::vector<int> vanishing) {
  std::vector<std::vector<long long>> rows;
  for (int k : vanishing) {
    std::vector<long long> r(ambient + 1, 0);
    r[k] = 1;
    rows.push_back(r);
  }
  return subspace_from_equations(p, ambient, rows);
}

std::vector<Point> points_off_base(const std::vector<Poly>& forms, std::vector<Point> candidates,
                                   std::size_t count) {
  std::vector<Point> out;
  for (const auto& x : candidates) {
    if (out.size() >= count) break;
    try {
      (void)eval(forms, x);
      out.push_back(x);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BasePoint) throw;
    }
  }
  return out;
}

std::vector<Point> random_points(std::uint32_t p, int m, int count, Rng& rng) {
  std::vector<Point> out;
  for (int i = 0; i < count; ++i) out.push_back(random_point(p, m, rng));
  return out;
}

void todd_room(Log& log) {
  for (std::uint32_t p : {101u, 32003u}) {
    const std::string at = " over F_" + std::to_string(p);
    Rng rng(p);
    const DetMap map = printed(todd_room_matrix_text(), p, 5);
    const Ideal x1 = map.base_ideal();
    log.need(smoothness_certificate(x1, 2, rng).kind == Smoothness::Smooth, "X1 smooth" + at);

    const auto st = rank_stratum(map, 2, rng);
    const Point e4 = unit(4, 4);
    log.need(st.points && st.points->geometric_points == 1 && st.points->rational_points == std::vector{e4},
             "rank <= 2 stratum is {e4}" + at);
    if (st.points)
      for (int e = 1; e <= 3; ++e) {
        log.need(predicted_point_count(*st.points, e) == 1, "one point over degree " + std::to_string(e) + at);
        if (p == 101) {
          const GaloisField gf(FieldCfg::extension(p, e));
          log.need(extension_points(*st.points, st.ideal, gf, 2'000'000).size() == 1,
                   "root search over degree " + std::to_string(e) + at);
        }
      }

    const auto fr = fiber(map, e4);
    log.need(fr.fiber == coordinate_subspace(p, 4, {3, 4}), "fiber is the plane x3=x4=0" + at);
    log.need(fr.intersection_hilbert && fr.intersection_hilbert->projective_dimension == 1 &&
                 fr.intersection_hilbert->degree == 4,
             "fiber meets X1 in a quartic curve" + at);
    log.need(smoothness_certificate(minimalize(fr.intersection), 1, rng).kind == Smoothness::Smooth,
             "plane quartic smooth" + at);

    const auto h = hilbert_data(groebner_basis(x1));
    log.need(h.projective_dimension == 2 && h.degree == 10 && h.sectional_genus == 11,
             "degree 10, genus 11" + at);
    log.need(linear_system_dim(x1, 4) == 5, "h0(I(4)) = 5" + at);
    log.need(linear_system_dim(x1, 3) == 0, "h0(I(3)) = 0" + at);
  }
  log.need(esb_cremona_d2(4, 4, 2) == 4, "ESB d2 = 4");
  log.need(esb_cremona_r2(4, 4, 4) == 2, "ESB r2 = 2");
}

void segre(Log& log) {
  const DetMap map = printed(segre_matrix_text(), 3, 6);
  const PrimeField f(3);
  int targets = 0;
  for (const auto& y : enumerate_projective_points(f, 2, 1000)) {
    const auto fr = fiber(map, y);
    const auto b = map.flip_at(y);
    bool kernel = true;
    for (const auto& v : fr.fiber.basis)
      for (const auto& c : apply(f, b, v)) kernel = kernel && c == 0;
    log.need(kernel && fr.fiber.dim() == 3, "fiber over " + point_to_string(f, y) + " is a P3");
    log.need(fr.intersection_hilbert && fr.intersection_hilbert->projective_dimension == 2 &&
                 fr.intersection_hilbert->degree == 2,
             "fiber over " + point_to_string(f, y) + " meets X1 in a quadric");
    ++targets;
  }
  log.need(targets == 13, "13 targets");
}

void bordiga(Log& log) {
  const auto inst = build_example("bordiga_random", 101, 1);
  const DetMap map = DetMap::build(*inst.matrix);
  Rng rng(7);
  const auto xs = points_off_base(map.minors(), random_points(101, 4, 20, rng), 8);
  log.need(xs.size() == 8, "sample points off X1");
  for (const auto& x : xs) {
    const auto fr = fiber(map, eval(map, x));
    log.need(fr.fiber.dim() == 1, "generic fiber is a line");
    log.need(fr.intersection_hilbert && fr.intersection_hilbert->projective_dimension == 0 &&
                 fr.intersection_hilbert->degree == 3,
             "generic fiber is a trisecant");
  }
  const auto st = rank_stratum(map, 2, rng);
  log.need(st.hilbert && st.hilbert->projective_dimension == 0 && st.hilbert->degree == 10,
           "rank <= 2 stratum of degree 10");
}

void quinto(Log& log) {
  struct Case {
    const MatrixText* text;
    std::vector<int> fiber_eqs;
    const char* name;
  };
  for (const auto& c : {Case{&quinto_plane_matrix_text(), {3, 4, 5}, "plane"},
                        Case{&quinto_solid_matrix_text(), {4, 5}, "solid"}}) {
    const std::string at = std::string(" (") + c.name + ")";
    Rng rng(11);
    const DetMap map = printed(*c.text, 101, 6);
    const Point e5 = unit(5, 5);
    log.need(fiber(map, e5).fiber == coordinate_subspace(101, 5, c.fiber_eqs), "fiber over e5" + at);
    const auto st = rank_stratum(map, 3, rng);
    log.need(st.points && st.points->rational_points == std::vector{e5}, "e5 the only rank-deficient target" + at);
    if (st.points)
      for (int e = 1; e <= 2; ++e) {
        const GaloisField gf(FieldCfg::extension(101, e));
        log.need(predicted_point_count(*st.points, e) == 1 &&
                     extension_points(*st.points, st.ideal, gf, 2'000'000).size() == 1,
                 "unique over degree " + std::to_string(e) + at);
      }
    const auto h = hilbert_data(groebner_basis(map.base_ideal()));
    log.need(h.degree == 15 && h.sectional_genus == 26, "X1 degree 15 genus 26" + at);
  }
  const auto hb = hilbert_burch_hp(5, 5);
  log.need(hb.degree == 15 && hb.sectional_genus == 26, "Hilbert-Burch 15, 26");
  log.need(secant_hypersurface_degree(5, 5) == 24, "secant degree 24");
}

void conic(Log& log) {
  for (const auto* text : {&conic_general_matrix_text(), &conic_special_matrix_text()}) {
    Rng rng(13);
    const DetMap map = printed(*text, 101, 6);
    const auto st = rank_stratum(map, 3, rng);
    log.need(st.hilbert && st.hilbert->projective_dimension == 1 && st.hilbert->degree == 20 &&
                 st.hilbert->sectional_genus == 26,
             "rank <= 3 curve of degree 20, genus 26");
  }
  Rng rng(17);
  const DetMap map = printed(conic_special_matrix_text(), 101, 6);
  const Point e4 = unit(4, 4);
  const auto st = rank_stratum(map, 3, rng);
  const auto sing = singular_points(st.ideal, 3, rng);
  log.need(sing.singular == std::vector{e4}, "curve singular exactly at e4 over F_101");
  const auto fr = fiber(map, e4);
  log.need(fr.fiber.dim() == 3, "fiber over e4 is a P3");
  const Ring ring = map.source_ring();
  const auto eqs = fr.fiber.equation_forms(ring);
  for (int t = 0; t < 3; ++t) {
    const Poly h = random_linear_form(ring, rng);
    Ideal curve = map.base_ideal().with(h);
    Ideal span(ring, eqs);
    for (const auto& e : eqs) curve = curve.with(e);
    span = span.with(h);
    const auto hc = hilbert_data(groebner_basis(curve));
    const auto hs = hilbert_data(groebner_basis(span));
    log.need(hc.projective_dimension == 1 && hc.degree == 4 && hs.projective_dimension == 2,
             "hyperplane slice contains a plane quartic");
  }
}

void relations(Log& log) {
  log.need(esb_cremona_d2(4, 4, 2) == 4, "(4,4) -> 4");
  log.need(esb_cremona_d2(5, 5, 3) == 5, "(5,5) -> 5");
  log.need(esb_cremona_d2(6, 2, 2) == 4, "quadrics on P6 -> 4");
  log.need(esb_hypersurface_d2(2, 2, 2) == 4, "hypersurface (2,2,2) -> 4");
  log.need(class_flip(4, 4).e2 == DivisorClass{15, -4}, "flip (15,-4)");
  log.need(class_flip(2, 4).e2 == DivisorClass{7, -4}, "flip (7,-4)");
  log.need(liaison_degree(4, 4, 7) == 9, "4*4-7 = 9");
  log.need(liaison_degree(5, 5, 12) == 13, "5*5-12 = 13");
  log.need(blowup_quartic_selfint(3, 8, 3) == 12, "blow-up (3,8,3) -> 12");
  log.need(square_plus_t(11).front() == std::pair{2, 7}, "11 = 2^2 + 7");
  log.need(square_plus_t(10).front() == std::pair{2, 6}, "10 = 2^2 + 6");
  const auto table = cli::relation_table();
  log.need(!table.empty(), "relation table");
  for (const auto& row : table)
    log.need(row["match"] == true, "table row " + row["relation"].get<std::string>() + " " + row["inputs"].dump());
}

void del_pezzo(Log& log) {
  const auto inst = build_example("del_pezzo_cubic", 101, 1);
  log.need(inst.attempts <= kMaxReseeds, "construction within 50 reseeds");
  Rng rng(19);
  const auto& x = inst.loci.at("X");
  log.need(inst.system->forms().size() == 5 && linear_system_dim(x, 2) == 5, "5 quadrics");
  const auto h = hilbert_data(groebner_basis(x));
  log.need(h.projective_dimension == 2 && h.degree == 5, "surface of degree 5");
  log.need(smoothness_certificate(x, 3, rng).kind == Smoothness::Smooth, "del Pezzo smooth");
  const auto& y = inst.loci.at("Y");
  log.need(smoothness_certificate(y, 1, rng).kind == Smoothness::Smooth, "cubic smooth");
  const auto on_y = count_ruling_planes(y.gens().front());
  log.need(!on_y.degenerate && on_y.count >= 1 && on_y.count <= 2, "constructed cubic has a ruling plane");
  const Ring ring = y.ring();
  for (int t = 0; t < 20; ++t) {
    std::vector<Poly> l;
    for (int i = 0; i < 4; ++i) l.push_back(random_linear_form(ring, rng));
    const auto pc = count_ruling_planes(fano_cubic(inst.system->forms(), l));
    log.need(!pc.degenerate && pc.count <= 2, "at most two ruling planes");
  }
  const auto z = resolution_hp(ResolutionSpec{4, {{{4, 6}}, {{5, 6}}, {{6, 1}}}});
  log.need(z.projective_dimension == 2 && z.degree == 9 && z.sectional_genus == 8, "resolution gives 9, 8");
}

void semple(Log& log) {
  const auto inst = build_example("semple_tyrrell", 101, 1);
  const auto& x = inst.loci.at("X");
  const auto& cone = inst.loci.at("cone");
  const SystemMap& sys = *inst.system;
  Rng rng(23);
  log.need(linear_system_dim(x, 2) == 7, "7 quadrics");
  const auto h = hilbert_data(groebner_basis(x));
  log.need(h.projective_dimension == 2 && h.degree == 8, "octic surface");
  log.need(esb_cremona_d2(6, 2, 2) == 4, "type (2,4)");
  const auto w = points_off_base(sys.forms(), sample_points(cone, 20, rng), 10);
  log.need(w.size() == 10, "10 points of W off X1");
  for (const auto& p : w) log.need(fiber_dim_at(sys, p) == 2, "fiber dimension 2 on W");
  log.need(image_dim_estimate(sys, cone, 10, rng) == 2, "W maps onto a surface");
}

void p7(Log& log) {
  const auto inst = build_example("p7_threefold", 101, 1);
  const auto& x = inst.loci.at("X");
  const auto& cone = inst.loci.at("cone");
  const SystemMap& sys = *inst.system;
  Rng rng(29);
  log.need(linear_system_dim(x, 2) == 7, "7 quadrics");
  const auto h = hilbert_data(groebner_basis(x));
  log.need(h.projective_dimension == 3 && h.degree == 8, "threefold of degree 8");
  const auto general = points_off_base(sys.forms(), random_points(101, 7, 40, rng), 20);
  log.need(general.size() == 20, "20 random points");
  for (const auto& p : general) {
    log.need(fiber_dim_at(sys, p) == 1, "general fiber dimension 1");
    const auto line = fiber_tangent(sys, p);
    const auto meet = hilbert_data(groebner_basis(restrict_to(x, line)));
    log.need(line.dim() == 1 && meet.projective_dimension == 0 && meet.degree == 2,
             "general fiber is a secant line");
  }
  const auto m = points_off_base(sys.forms(), sample_points(cone, 20, rng), 10);
  log.need(m.size() == 10, "10 points of M off X");
  for (const auto& p : m) log.need(fiber_dim_at(sys, p) == 3, "fiber dimension 3 on M");
  log.need(liaison_degree(5, 5, 12) == 13, "degree 13");
}

void properties(Log& log) {
  Rng rng(31);
  const PrimeField f(101);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const Ring ring{101, n + 1 + static_cast<int>(rng() % 3), MonoOrder::Grevlex};
    try {
      const DetMap map = DetMap::build(random_small_matrix(ring, n, rng));
      log.need(bilinear_identity_holds(map.A(), map.B()), "flip identity");
    } catch (const Error& e) {
      // rank-deficient draws are rejected by the build itself
      log.need(e.kind() == ErrorKind::Shape, std::string("unexpected error ") + e.what());
    }
  }
  for (int d1 = 1; d1 <= 20; ++d1)
    for (int d2 = 1; d2 <= 20; ++d2) {
      const auto a = class_flip(d1, d2), b = class_flip(d2, d1);
      // substitute H2, E2 into the inverse flip
      const DivisorClass h1 = a.h2 * b.h2.a + a.e2 * b.h2.b;
      const DivisorClass e1 = a.h2 * b.e2.a + a.e2 * b.e2.b;
      log.need(h1 == DivisorClass{1, 0} && e1 == DivisorClass{0, 1}, "flip involution");
    }
  const PrimeField f3(3);
  for (const auto& [text, nvars] : {std::pair{&segre_matrix_text(), 6}, std::pair{&todd_room_matrix_text(), 5}}) {
    const DetMap map = printed(*text, 3, nvars);
    for (const auto& x : enumerate_projective_points(f3, map.source_dim(), 1'000'000)) {
      Point y;
      try {
        y = eval(map, x);
      } catch (const Error&) {
        continue;
      }
      for (auto c : apply(f3, map.flip_at(y), x.x)) log.need(c == 0, "x in the kernel of B(phi(x))");
    }
    for (const auto& y : enumerate_projective_points(f3, map.target_dim(), 1'000'000)) {
      const auto fr = fiber(map, y);
      log.need(fr.fiber.dim() == map.source_dim() - rank(f3, map.flip_at(y)), "fiber dimension from rank");
    }
  }
  for (std::uint32_t p : {101u, 32003u})
    for (const auto& r : regression_ideals(p)) {
      const auto gb = groebner_basis(r.ideal);
      log.need(gb.complete && is_groebner_basis_of(gb.basis, r.ideal), "S-pairs reduce: " + r.name);
      const auto images = random_coordinate_change(r.ideal.ring(), rng);
      const auto moved = groebner_basis(transform(r.ideal, images));
      const auto via = groebner_basis(transform(Ideal(r.ideal.ring(), gb.basis), images));
      log.need(moved.basis == via.basis, "coordinate change: " + r.name);
      if (r.ideal.is_homogeneous() && r.ideal.ring().order == MonoOrder::Grevlex)
        log.need(hilbert_data(gb).numerator == hilbert_data(moved).numerator, "Hilbert series invariant: " + r.name);
    }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Todd-Room surface in P4", 300, todd_room},
      {2, "Segre threefold fibers over P2(F3)", 10, segre},
      {3, "Bordiga surface, random smooth instance", 300, bordiga},
      {4, "P5 threefolds with isolated exceptional fibers", 600, quinto},
      {5, "conic bundle curves of degree 20", 600, conic},
      {6, "numerical relation table", 1, relations},
      {7, "del Pezzo quintic and the cubic fourfold", 600, del_pezzo},
      {8, "octic surface in P6", 600, semple},
      {9, "threefold of degree 8 in P7", 600, p7},
      {10, "property suites", 600, properties},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Log log;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(log);
    } catch (const std::exception& e) {
      log.failures.push_back(std::string("error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      std::ostringstream s;
      s << "runtime " << secs << " s over the " << c.limit_seconds << " s target";
      log.failures.push_back(s.str());
    }
    const bool ok = log.failures.empty();
    all = all && ok;
    std::cout << "criterion " << std::setw(2) << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title
              << " (" << std::fixed << std::setprecision(1) << secs << " s)\n";
    for (std::size_t i = 0; i < log.failures.size() && i < 5; ++i) std::cout << "    " << log.failures[i] << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
