#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nlocus/gaussian.hpp"

namespace nlocus {

struct RingMismatch : ExactError {
  using ExactError::ExactError;
};

/// Coefficient ring of a polynomial. F2 is Z[i]/(1+i); Z4 is Z/4Z.
enum class Ring { Q, Qi, Zi, F2, Z4 };

std::string ring_name(Ring r);

using Exponents = std::vector<int>;

inline int exp_total(const Exponents& e) {
  int t = 0;
  for (int v : e) t += v;
  return t;
}

/// Graded-lex term order: lower total degree first; within a degree the
/// lexicographically larger exponent vector comes first, so for two
/// variables the degree-2 block reads x0^2, x0*x1, x1^2.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = exp_total(a), db = exp_total(b);
    if (da != db) return da < db;
    return a > b;
  }
};

/// Sparse multivariate polynomial over a tagged coefficient ring with a
/// declared, ordered variable list. Zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, GaussianRational, GrlexLess>;

  MultiPoly(Ring ring, std::vector<std::string> vars) : ring_(ring), vars_(std::move(vars)) {}

  static MultiPoly constant(Ring ring, std::vector<std::string> vars, const GaussianRational& c);
  static MultiPoly variable(Ring ring, std::vector<std::string> vars, size_t index);

  Ring ring() const { return ring_; }
  const std::vector<std::string>& vars() const { return vars_; }
  size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  size_t nterms() const { return terms_.size(); }

  /// Max total degree, or -1 for the zero polynomial.
  int total_degree() const;
  /// Max exponent of one variable, or -1 for the zero polynomial.
  int degree_in(size_t var) const;

  GaussianRational coeff(const Exponents& e) const;

  /// Adds c * x^e, normalizing in the ring and pruning zeros.
  void add_term(Exponents e, const GaussianRational& c);

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& b) const;
  MultiPoly operator-(const MultiPoly& b) const;
  MultiPoly operator*(const MultiPoly& b) const;
  MultiPoly operator*(const GaussianRational& c) const;

  bool operator==(const MultiPoly& b) const;
  bool operator!=(const MultiPoly& b) const { return !(*this == b); }

 private:
  void check_compatible(const MultiPoly& b) const;
  Ring ring_;
  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Reduces a raw coefficient into the ring (F2/Z4 fold; Zi/Q integrality checks).
GaussianRational normalize_in_ring(Ring ring, const GaussianRational& c);

MultiPoly poly_pow(const MultiPoly& p, unsigned k);

MultiPoly poly_diff(const MultiPoly& p, size_t var);
MultiPoly poly_diff(const MultiPoly& p, const std::string& var);

/// Exact evaluation; the point must assign every variable in order.
GaussianRational poly_eval(const MultiPoly& p, const std::vector<GaussianRational>& point);

enum class Modulus { Two, Four, OnePlusI };

/// Coefficientwise reduction of an integral polynomial. Two/Four require
/// real coefficients and land in F2/Z4; OnePlusI lands in F2 = Z[i]/(1+i).
MultiPoly poly_reduce_mod(const MultiPoly& p, Modulus m);

/// Unit-canonical gcd of all coefficients of a nonzero Z[i]-polynomial.
GaussianInt poly_content(const MultiPoly& p);

/// Quotient p/q when the division is exact, none otherwise. Works over the
/// field rings and over Z[i] (where coefficient divisions must be exact).
std::optional<MultiPoly> poly_divide_exact(const MultiPoly& p, const MultiPoly& q);

/// Substitutes the given polynomials (all over a common ring/variable set)
/// for the variables of p.
MultiPoly poly_substitute(const MultiPoly& p, const std::vector<MultiPoly>& images);

/// Sylvester resultant of A and B with respect to one variable. Degenerate
/// inputs follow the classical conventions (res(0, B) = 0, res(a, B) = a^deg B).
MultiPoly sylvester_resultant(const MultiPoly& A, const MultiPoly& B, size_t var);

/// Parses "a0^2-4*a1*a2" style expressions over the declared variables.
/// Factors are separated by '*'; "i" is the imaginary unit unless declared.
MultiPoly parse_poly(Ring ring, const std::vector<std::string>& vars, const std::string& text);

std::string to_string(const MultiPoly& p);

}  // namespace nlocus
