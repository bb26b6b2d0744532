#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cremona/poly.hpp"

namespace cremona {

struct Budget {
  std::size_t max_pairs = 200000;
  /// S-pairs whose lcm (weighted) degree exceeds this are not processed.
  int max_degree = 30;
};

/// Generators in one ring; zero generators are dropped.
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(Ring ring) : ring_(ring) {}
  Ideal(Ring ring, std::vector<Poly> gens);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Poly>& gens() const noexcept { return gens_; }
  bool is_homogeneous() const;
  Ideal operator+(const Ideal& o) const;
  Ideal with(const Poly& f) const;

 private:
  Ring ring_;
  std::vector<Poly> gens_;
};

struct GroebnerOptions {
  Budget budget;
  /// Stop as soon as the leading terms contain a pure power of every variable.
  bool stop_when_empty = false;
};

struct GroebnerBasis {
  Ring ring;
  /// Reduced, monic, sorted by ascending leading monomial.
  std::vector<Poly> basis;
  /// False when a budget cut the computation short or it stopped early.
  bool complete = true;
  /// The basis is exact in every degree up to this one (homogeneous inputs).
  int valid_through_degree = 1 << 30;
  /// Leading terms already contain pure powers of every variable.
  bool empty_certified = false;
  std::size_t pairs_processed = 0;

  std::vector<Monomial> leading_monomials() const;
};

/// Buchberger with Gebauer-Moeller criteria; dense per-degree reduction for
/// homogeneous grevlex input, sparse reduction otherwise.
GroebnerBasis groebner_basis(const Ideal& ideal, const GroebnerOptions& options = {});

/// Full reduction of f modulo the basis.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis);

/// True iff the ideal has no zeros in projective space over the algebraic closure.
bool projective_emptiness(const GroebnerBasis& gb);

/// nullopt when the budget ran out before a verdict.
std::optional<bool> certify_projectively_empty(const Ideal& ideal, const Budget& budget = {});

/// Generators of the ideal of elements free of variable 0 (tag order required).
Ideal eliminate_tag(const GroebnerBasis& gb, Ring target);

Ideal intersection(const Ideal& a, const Ideal& b, const Budget& budget = {});
/// (I : J) = {f : f J in I}.
Ideal ideal_quotient(const Ideal& i, const Ideal& j, const Budget& budget = {});
/// Reduced basis of the ideal viewed as a set of generators.
Ideal minimalize(const Ideal& ideal, const Budget& budget = {});

/// Dimension of the degree-d part of the ideal, via the Hilbert function.
long long ideal_dimension_in_degree(const GroebnerBasis& gb, int d);

/// Number of monomials of degree d in n variables.
long long monomial_count(int nvars, int d);

}  // namespace cremona
