#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nlocus/invariants.hpp"
#include "nlocus/rootfind.hpp"

namespace nlocus {

struct ZeroLocusEquations {
  MultiPoly dS, dT;  // degrees 3 and 5 in the Salmon variables
};

/// The two polynomials cutting out the first-order locus inside the smooth
/// part of the section space.
ZeroLocusEquations zero_locus_equations(const FirstOrderOp& op);

/// True iff deltaS(b) = 0 and deltaT(b) = 0 exactly; b must be smooth.
bool first_order_membership(const FirstOrderOp& op, const Section& b);

/// The same operator in monomial coordinates (d/da_salmon picks up the
/// multinomial factor), ready for the rank-condition route.
DiffOp to_diffop(const FirstOrderOp& op);

struct SearchOptions {
  std::uint64_t seed = 0;
  int budget = 20;
  int precision_bits = 128;
  double residual_tol = 1e-10;  // relative to the coefficient scale
  double disc_floor = 1e-8;     // relative lower bound on |Delta|
  int jobs = 1;
  /// Optional fixed affine plane b(s,t) = b0 + s u + t v, all in Salmon
  /// convention; a zero v restricts the search to the line b0 + s u.
  std::optional<std::array<Section, 3>> plane;
};

struct SearchWitness {
  bool exact = false;
  std::optional<Section> exact_point;        // set when verified exactly
  std::vector<std::string> point_strings;    // Salmon coordinates, decimal
  std::vector<std::pair<double, double>> point_approx;
  double residual_dS = 0, residual_dT = 0, scaled_disc = 0;
  int plane_index = 0;
};

/// Random-plane search for a point of the first-order zero locus off the
/// discriminant. Exact Sylvester resultant in t, numeric root isolation in
/// s, exact verification when the root reconstructs to a rational.
/// Returns none when the budget is exhausted (not a disproof).
std::optional<SearchWitness> search_zero(const FirstOrderOp& op, const SearchOptions& opts = {});

}  // namespace nlocus
