#pragma once

#include <map>
#include <string>
#include <vector>

#include "nlocus/poly.hpp"

namespace nlocus {

/// Exponent vector of a monomial in x_0..x_m; section labels have total m+1.
using Multidegree = Exponents;

/// Variable names x0..xm.
std::vector<std::string> x_vars(int m);

std::string multidegree_key(const Multidegree& d);
Multidegree parse_multidegree_key(const std::string& key, int m);

/// Basis of R_k: all monomials of total degree (m+1)k, graded-lex order.
std::vector<Multidegree> section_basis(int m, int k);

/// Concatenated bases of R_0 .. R_d.
std::vector<Multidegree> section_basis_upto(int m, int d);

/// Coordinate labels a_0, a_1, ... of the section space: for P^1 the order
/// (x0*x1, x0^2, x1^2), for P^2 the order starting with x0*x1*x2 and walking
/// the boundary cubics, otherwise the graded-lex basis.
std::vector<Multidegree> coordinate_order(int m);

enum class Convention { Monomial, Salmon };

/// A point of the section space V^vee, tagged with its coefficient convention.
struct Section {
  int m = 1;
  Convention convention = Convention::Monomial;
  std::map<Multidegree, GaussianRational> coeffs;

  Section() = default;
  Section(int m_, Convention conv) : m(m_), convention(conv) {}

  GaussianRational coeff(const Multidegree& d) const;
  void set(const Multidegree& d, const GaussianRational& c);

  /// Coefficients listed in coordinate_order(m).
  std::vector<GaussianRational> coordinates() const;
  static Section from_coordinates(int m, Convention conv,
                                  const std::vector<GaussianRational>& vals);

  Section scaled(const GaussianRational& factor) const;

  bool operator==(const Section& b) const;
};

/// f(b) = sum_I b_I x^I as an element of R_1 (monomial convention only).
MultiPoly universal_section_at(const Section& b);

/// Constant-coefficient operator sum c_alpha d^alpha on the section space,
/// stored with its Fourier polynomial h (d_I -> x^I, monomial convention).
struct DiffOp {
  int m = 1;
  std::map<std::vector<int>, GaussianRational> terms;  // alpha -> c_alpha
  int degree = 0;                                      // max |alpha|
  MultiPoly fourier{Ring::Qi, {}};

  static DiffOp from_terms(int m, std::map<std::vector<int>, GaussianRational> terms);
  bool is_zero() const { return terms.empty(); }
};

DiffOp operator+(const DiffOp& a, const DiffOp& b);
DiffOp operator*(const DiffOp& a, const DiffOp& b);

struct LieGenerator {
  enum class Kind { OffDiag, SlDiag, EulerShift };
  Kind kind;
  int u = 0, v = 0;  // OffDiag: x_u d/dx_v. SlDiag: x_u d/dx_u - x_{u+1} d/dx_{u+1}.
  std::string name() const;
};

/// Fixed generating set of gl(m+1)-action plus the shifted Euler operator:
/// m sl-diagonals, then (m+1)m off-diagonals in row-major order, then E+1.
std::vector<LieGenerator> lie_generators(int m);

/// g(r e^{f(b)}) / e^{f(b)}. r must lie in R (x-degrees divisible by m+1);
/// off-diagonal and sl-diagonal generators give g(r) + r*g(f(b)), the Euler
/// shift gives E(r) + r*f(b) + r.
MultiPoly apply_generator(const LieGenerator& g, const MultiPoly& r, const Section& b);

enum class Smoothness { Smooth, Singular, Unknown };

/// Exact smoothness test: P^1 via a0^2 - 4 a1 a2, P^2 via 64 S^3 - T^2,
/// unknown for m >= 3.
Smoothness smoothness(const Section& b);

}  // namespace nlocus
