#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "nlocus/ambient.hpp"
#include "nlocus/poly.hpp"

namespace nlocus {

/// The ten coefficient variables of a ternary cubic in Salmon's scaling,
/// graded-lex order: a300, a210, a201, a120, a111, a102, a030, a021, a012, a003.
const std::vector<std::string>& salmon_vars();
const std::vector<Multidegree>& salmon_degrees();
size_t salmon_index(const Multidegree& d);

/// Aronhold invariants of a ternary cubic and the mod-2 carrier H.
/// S and T have integer coefficients; Delta = 64 S^3 - T^2; T0 collects the
/// six odd-coefficient terms of T; H is the six-term trilinear over F2.
struct TernaryCubicInvariants {
  MultiPoly S{Ring::Zi, salmon_vars()};
  MultiPoly T{Ring::Zi, salmon_vars()};
  MultiPoly Delta{Ring::Zi, salmon_vars()};
  MultiPoly T0{Ring::Zi, salmon_vars()};
  MultiPoly H{Ring::F2, salmon_vars()};
};

/// The canonical transcription, built once and shared read-only.
const TernaryCubicInvariants& aronhold_invariants();

/// First-order operator sum_I lambda_I d/da_I in Salmon coordinates.
struct FirstOrderOp {
  std::map<Multidegree, GaussianRational> lambda;

  bool is_zero() const;
  bool is_integral() const;
  GaussianRational coeff(const Multidegree& d) const;
  static FirstOrderOp unit(const Multidegree& d);
};

FirstOrderOp operator+(const FirstOrderOp& a, const FirstOrderOp& b);
FirstOrderOp operator*(const GaussianRational& c, const FirstOrderOp& a);

/// i!j!k!/3! — the scaling between monomial and Salmon coefficients.
GaussianRational salmon_scale(const Multidegree& d);

/// Convention conversion for P^2 sections: the cubic sum c_I x^I carries
/// Salmon coefficient a_I = c_I * i!j!k!/3!. Involutive pair.
Section convert_convention(const Section& b, Convention to);

struct AronholdValues {
  GaussianRational S, T, Delta;
};

/// Exact S(b), T(b), Delta(b) = 64 S^3 - T^2 for a Salmon-convention section.
AronholdValues aronhold(const Section& b);

enum class WhichInvariant { S, T };

/// delta S = sum_I lambda_I dS/da_I (degree 3), or delta T (degree 5).
MultiPoly delta_of_invariant(const FirstOrderOp& op, WhichInvariant which);

struct CheckReport {
  struct Item {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Item> items;
  bool all_pass() const;
};

/// The transcription-integrity identities: Delta = H^4 over F2, T = T0 over
/// F2, T = H^2 over Z/4Z, d111 S = H over F2, and S = H*a111 + a111^4 + P
/// over F2 with P free of a111. Failures name the first differing term.
CheckReport congruence_checks(const TernaryCubicInvariants& inv = aronhold_invariants());

/// gcd(lambda) a unit, (1+i) | lambda_111, and the residues of lambda_300,
/// lambda_030, lambda_003 mod (1+i) not the multiset {1,0,0}.
bool admissible(const FirstOrderOp& op);

/// content(delta S) | gcd(lambda); and when (1+i) does not divide
/// gcd(lambda_I, I != 111), the (1+i)-valuation of content(delta T) is 2.
CheckReport gcd_lemma_checks(const FirstOrderOp& op);

/// True iff some nonzero linear form over F2 divides p.
bool has_linear_divisor_f2(const MultiPoly& p);

/// Exhaustive linear-divisor search over all 2^10 - 1 candidates.
bool h_irreducibility();

/// Coefficients of the cubic f(b)(g x) for unimodular g; used for invariance
/// testing. Output keeps the input convention.
Section sl3_substitute(const Section& b, const std::array<std::array<GaussianRational, 3>, 3>& g);

/// a0^2 - 4 a1 a2 for a P^1 section in monomial convention.
GaussianRational p1_discriminant(const Section& b);

}  // namespace nlocus
