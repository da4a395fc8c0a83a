#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlocus/ambient.hpp"

namespace nlocus {

/// The four distinguished sections: products of coordinates (LCSL) and sums
/// of powers (Fermat) for P^1 and P^2. P2_LCSL is the singular one.
enum class SpecialPoint { P1_LCSL, P1_Fermat, P2_LCSL, P2_Fermat };

std::string special_point_name(SpecialPoint pt);
std::optional<SpecialPoint> special_point_by_name(const std::string& name);
int special_m(SpecialPoint pt);
bool special_smooth(SpecialPoint pt);
Section special_section(SpecialPoint pt);

/// Coordinates of a class in the coinvariant quotient at a special point:
/// a 1-vector on the class of 1, except P2_Fermat where the basis is
/// (1, x0 x1 x2).
struct NormalForm {
  std::vector<GaussianRational> coords;

  explicit NormalForm(size_t dim = 1) : coords(dim) {}
  bool is_zero() const;
  NormalForm& operator+=(const NormalForm& b);
  NormalForm scaled(const GaussianRational& c) const;
  bool operator==(const NormalForm& b) const { return coords == b.coords; }
};

size_t normal_form_dim(SpecialPoint pt);

/// Closed-form reduction of the R-monomial x^iota at the special point.
NormalForm normal_form(SpecialPoint pt, const Multidegree& iota);

/// Exponent maps beta(alpha) giving delta e^f = sum c_alpha x^{beta(alpha)} e^f
/// at the special sections. Hard-coded; beta_from_table regenerates them from
/// the coordinate multidegrees as a self-check.
Multidegree beta_map(int m, const std::vector<int>& alpha);
Multidegree beta_from_table(int m, const std::vector<int>& alpha);
bool exponent_map_selfcheck();

/// Normal form of delta e^{f(pt)}; zero iff delta kills all periods at pt.
NormalForm normal_form_of_op(SpecialPoint pt, const DiffOp& delta);
bool annihilates(SpecialPoint pt, const DiffOp& delta);

/// The special-point linear relations on the coefficients c_alpha, evaluated
/// literally (factorial weights and residue conditions).
bool relation_predicate(SpecialPoint pt, const DiffOp& delta);

/// P^1 period calculus: delta(Delta^{-1/2}) = Delta^{-1/2-d} P_d with
/// d = deg delta; returns (d, P_d) over the variables a0, a1, a2.
std::pair<int, MultiPoly> p1_apply_to_period(const DiffOp& delta);

enum class P1LocusKind { All, Empty, Locus };

struct P1ZeroLocus {
  P1LocusKind kind;
  std::optional<MultiPoly> q;  // defining equation inside {Delta != 0}
};

/// Classifies N(delta) on P^1: "all" when P_d = 0, "empty" when P_d is a
/// nonzero constant times a power of Delta, else the stripped cofactor.
P1ZeroLocus p1_zero_locus(const DiffOp& delta);

/// Variables a0, a1, a2 and the discriminant a0^2 - 4 a1 a2 used by the
/// P^1 calculus.
const std::vector<std::string>& p1_coord_vars();
const MultiPoly& p1_disc_poly();

}  // namespace nlocus
