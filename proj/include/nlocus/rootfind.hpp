#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nlocus/gaussian.hpp"

namespace nlocus {

/// Complex number over GMP floats at a fixed working precision.
struct MpComplex {
  mpf_class re, im;

  explicit MpComplex(mp_bitcnt_t prec = 128) : re(0, prec), im(0, prec) {}
  MpComplex(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}

  mp_bitcnt_t precision() const { return re.get_prec(); }
  bool is_zero() const { return re == 0 && im == 0; }

  MpComplex operator+(const MpComplex& b) const { return {re + b.re, im + b.im}; }
  MpComplex operator-(const MpComplex& b) const { return {re - b.re, im - b.im}; }
  MpComplex operator*(const MpComplex& b) const {
    return {re * b.re - im * b.im, re * b.im + im * b.re};
  }
  MpComplex operator/(const MpComplex& b) const;

  mpf_class norm() const { return re * re + im * im; }
  mpf_class abs() const;
};

MpComplex to_mpc(const GaussianRational& q, mp_bitcnt_t prec);

double to_double(const mpf_class& x);
std::string complex_string(const MpComplex& z, int digits = 30);

/// Horner evaluation of sum coeffs[k] z^k.
MpComplex unipoly_eval(const std::vector<MpComplex>& coeffs, const MpComplex& z);

/// All complex roots by Durand-Kerner iteration; coeffs[k] multiplies z^k
/// and the leading coefficient must be nonzero. Deterministic.
std::vector<MpComplex> unipoly_roots(const std::vector<MpComplex>& coeffs, int max_iter = 600);

/// Nearest rational with denominator <= den_bound if it approximates x to
/// within tol, via continued fractions.
std::optional<mpq_class> reconstruct_rational(const mpf_class& x, const mpz_class& den_bound,
                                              const mpf_class& tol);

}  // namespace nlocus
