#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cremona/detmap.hpp"
#include "cremona/groebner.hpp"
#include "cremona/polymatrix.hpp"

namespace cremona {

/// Matrix given as rows of linear-form strings such as "x0-2*x1".
using MatrixText = std::vector<std::vector<std::string>>;

PolyMatrix matrix_from_text(const Ring& ring, const MatrixText& text);
MatrixText matrix_to_text(const PolyMatrix& m);

/// Named matrices of the example gallery.
const MatrixText& segre_matrix_text();
const MatrixText& todd_room_matrix_text();
const MatrixText& quinto_plane_matrix_text();
const MatrixText& quinto_solid_matrix_text();
const MatrixText& conic_general_matrix_text();
const MatrixText& conic_special_matrix_text();

/// Cone over the Segre threefold (2x2 minors of [[x0,x1,x2],[x3,x4,x5]]) in P^ambient.
/// ambient 5 gives the Segre threefold itself; 6 a cone with a point vertex; 7 a line vertex.
Ideal segre_cone(int ambient, std::uint32_t p);

/// Equations t x_i - s x_{i+3} of the ruling space over (s:t).
std::vector<Poly> ruling_space(const Ring& ring, std::uint32_t s, std::uint32_t t);

/// Residual of a ruling space R in (cone + Q), Q a random quadric through R.
/// ConstructionFailed when Q contains the cone (degenerate residuation).
Ideal divisor12(const Ideal& cone, const std::vector<Poly>& ruling, const Poly& quadric);
/// Random quadric sum L_i r_i through the ruling space.
Poly quadric_through(const std::vector<Poly>& ruling, Rng& rng);
/// Sum of two random (1,2) divisors on the cone; the ideal of the octic.
Ideal divisor12_complete_intersection(const Ideal& cone, Rng& rng);

struct DelPezzo {
  Ideal segre;                 // M
  std::vector<Poly> quadrics;  // Q0..Q4; Q0..Q2 the Segre minors, Q3 through the plane
  Ideal surface;               // X
};
/// (I_M + Q3) : I_plane for a random Q3 through x0=x1=x2=0.
DelPezzo del_pezzo_quintic(std::uint32_t p, Rng& rng);
/// Cubic l0 Q0 + ... + l3 Q3.
Poly fano_cubic(const std::vector<Poly>& quadrics, const std::vector<Poly>& linear);

struct PlaneCount {
  int count = 0;
  /// Every plane of the ruling lies on the cubic.
  bool degenerate = false;
};
/// Planes x = (s u, t u) of the Segre ruling contained in a cubic, with multiplicity.
PlaneCount count_ruling_planes(const Poly& cubic);

/// Degree-2 part of a homogeneous ideal as a basis of quadrics.
std::vector<Poly> quadrics_of(const Ideal& ideal, const Budget& budget = {});
/// True when the ideal is generated by its degree-d part.
bool generated_in_degree(const Ideal& ideal, int d, const Budget& budget = {});

/// Random linear form with coefficients in F_p.
Poly random_linear_form(const Ring& ring, Rng& rng);
/// Random (n+1) x n matrix of linear forms with integer coefficients in [-2, 2].
PolyMatrix random_small_matrix(const Ring& ring, int n, Rng& rng);

}  // namespace cremona

#include "cremona/manifest.hpp"

namespace cremona {

enum class ExampleKind { DetMatrix, FormSystem };

struct ExampleInstance {
  std::string id;
  ExampleKind kind = ExampleKind::DetMatrix;
  std::uint32_t prime = 101;
  std::uint64_t seed = 1;
  /// Reseeds used by a retry loop (1 for printed data).
  int attempts = 1;
  std::optional<PolyMatrix> matrix;
  std::optional<SystemMap> system;
  /// Auxiliary varieties by name (X, cone, Y, ...).
  std::map<std::string, Ideal> loci;
  Manifest manifest;
};

const std::vector<std::string>& example_ids();

/// UnknownId for unknown ids; ConstructionFailed when a retry loop runs out.
ExampleInstance build_example(const std::string& id, std::uint32_t prime, std::uint64_t seed = 1);

/// Instance for an ad-hoc matrix, with the generic manifest.
ExampleInstance matrix_example(const std::string& id, const PolyMatrix& a);

nlohmann::json to_json(const ExampleInstance& inst);
ExampleInstance instance_from_json(const nlohmann::json& j);

/// Retry budget of the construction loops.
inline constexpr int kMaxReseeds = 50;

}  // namespace cremona
