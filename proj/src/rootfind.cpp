#include "nlocus/rootfind.hpp"

#include <optional>
#include <sstream>

namespace nlocus {

MpComplex MpComplex::operator/(const MpComplex& b) const {
  mpf_class n = b.norm();
  if (n == 0) throw ExactError("complex division by zero");
  return {(re * b.re + im * b.im) / n, (im * b.re - re * b.im) / n};
}

mpf_class MpComplex::abs() const {
  mpf_class n = norm();
  return sqrt(n);
}

MpComplex to_mpc(const GaussianRational& q, mp_bitcnt_t prec) {
  mpf_class d(q.den, prec);
  return {mpf_class(q.num.re, prec) / d, mpf_class(q.num.im, prec) / d};
}

double to_double(const mpf_class& x) { return x.get_d(); }

std::string complex_string(const MpComplex& z, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << z.re;
  if (z.im >= 0) out << "+";
  out << z.im << "i";
  return out.str();
}

MpComplex unipoly_eval(const std::vector<MpComplex>& coeffs, const MpComplex& z) {
  MpComplex acc(z.precision());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<MpComplex> unipoly_roots(const std::vector<MpComplex>& coeffs_in, int max_iter) {
  if (coeffs_in.empty()) throw ExactError("root finding needs a nonzero polynomial");
  const mp_bitcnt_t prec = coeffs_in.front().precision();
  std::vector<MpComplex> c = coeffs_in;
  while (c.size() > 1 && c.back().is_zero()) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n <= 0) return {};

  // monic normalization
  MpComplex lead = c.back();
  for (auto& v : c) v = v / lead;

  // classic geometric start values
  std::vector<MpComplex> z(n, MpComplex(prec));
  MpComplex seed{mpf_class(0.4, prec), mpf_class(0.9, prec)};
  MpComplex cur{mpf_class(1, prec), mpf_class(0, prec)};
  for (int k = 0; k < n; ++k) {
    cur = cur * seed;
    z[k] = cur;
  }

  mpf_class eps(1, prec);
  eps >>= (prec > 24 ? prec - 16 : 8);  // 2^-(prec-16)

  for (int iter = 0; iter < max_iter; ++iter) {
    mpf_class step(0, prec);
    for (int k = 0; k < n; ++k) {
      MpComplex denom{mpf_class(1, prec), mpf_class(0, prec)};
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        MpComplex diff = z[k] - z[j];
        if (diff.is_zero()) diff.re = eps;  // nudge coincident iterates apart
        denom = denom * diff;
      }
      MpComplex delta = unipoly_eval(c, z[k]) / denom;
      z[k] = z[k] - delta;
      mpf_class d = delta.abs();
      if (d > step) step = d;
    }
    if (step < eps) break;
  }
  return z;
}

std::optional<mpq_class> reconstruct_rational(const mpf_class& x, const mpz_class& den_bound,
                                              const mpf_class& tol) {
  // continued-fraction convergents of x
  mpf_class v = x;
  mpz_class p0 = 1, q0 = 0;  // previous convergent
  mpz_class p1, q1;          // current convergent
  mpz_class a;
  mpz_set_f(a.get_mpz_t(), v.get_mpf_t());
  if (v < 0 && mpf_class(a) != v) a -= 1;  // floor
  p1 = a;
  q1 = 1;
  for (int iter = 0; iter < 64; ++iter) {
    mpq_class cand(p1, q1);
    cand.canonicalize();
    mpf_class err = abs(mpf_class(cand, x.get_prec()) - x);
    if (err <= tol) return cand;
    mpf_class frac = v - mpf_class(a);
    if (frac == 0) break;
    v = 1 / frac;
    mpz_set_f(a.get_mpz_t(), v.get_mpf_t());
    if (v < 0 && mpf_class(a) != v) a -= 1;
    mpz_class p2 = a * p1 + p0;
    mpz_class q2 = a * q1 + q0;
    if (q2 > den_bound) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return std::nullopt;
}

}  // namespace nlocus
