#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace nlocus {

struct ExactError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Gaussian integer a + bi with arbitrary-precision components.
struct GaussianInt {
  mpz_class re, im;

  GaussianInt() : re(0), im(0) {}
  GaussianInt(long r) : re(r), im(0) {}
  GaussianInt(mpz_class r) : re(std::move(r)), im(0) {}
  GaussianInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}
  GaussianInt(long r, long i) : re(r), im(i) {}

  static GaussianInt unit_i() { return GaussianInt(0, 1); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_unit() const { return norm() == 1; }

  /// Multiplicative norm N(a+bi) = a^2 + b^2.
  mpz_class norm() const { return re * re + im * im; }

  GaussianInt conj() const { return GaussianInt(re, -im); }

  GaussianInt operator-() const { return GaussianInt(-re, -im); }
  GaussianInt operator+(const GaussianInt& b) const { return GaussianInt(re + b.re, im + b.im); }
  GaussianInt operator-(const GaussianInt& b) const { return GaussianInt(re - b.re, im - b.im); }
  GaussianInt operator*(const GaussianInt& b) const {
    return GaussianInt(re * b.re - im * b.im, re * b.im + im * b.re);
  }
  GaussianInt& operator+=(const GaussianInt& b) { re += b.re; im += b.im; return *this; }
  GaussianInt& operator-=(const GaussianInt& b) { re -= b.re; im -= b.im; return *this; }
  GaussianInt& operator*=(const GaussianInt& b) { *this = *this * b; return *this; }

  bool operator==(const GaussianInt& b) const { return re == b.re && im == b.im; }
  bool operator!=(const GaussianInt& b) const { return !(*this == b); }
};

/// Nearest-integer Euclidean division: a = q*b + r with N(r) <= N(b)/2.
GaussianInt gint_divmod(const GaussianInt& a, const GaussianInt& b, GaussianInt* rem);

/// True iff b divides a exactly.
bool gint_divides(const GaussianInt& b, const GaussianInt& a);

/// Exact quotient a/b; throws ExactError if b = 0 or the division has a remainder.
GaussianInt gint_div_exact(const GaussianInt& a, const GaussianInt& b);

/// The associate of x in the half-quadrant re > 0, -re < im <= re (0 for 0).
GaussianInt gint_canonical(const GaussianInt& x);

/// Euclidean gcd, unit-canonical. Throws on gcd(0,0).
GaussianInt gint_gcd(const GaussianInt& x, const GaussianInt& y);

/// Largest k with (1+i)^k | x. Throws on x = 0.
unsigned val_one_plus_i(const GaussianInt& x);

/// Residue of x in Z[i]/(1+i) = F_2, namely (re + im) mod 2.
int mod_one_plus_i(const GaussianInt& x);

/// Element of Q(i) kept canonical: den > 0 and gcd(den, content(num)) = 1.
struct GaussianRational {
  GaussianInt num;
  mpz_class den;

  GaussianRational() : num(), den(1) {}
  GaussianRational(long v) : num(v), den(1) {}
  GaussianRational(GaussianInt n) : num(std::move(n)), den(1) {}
  GaussianRational(GaussianInt n, mpz_class d);
  GaussianRational(long n, long d) : GaussianRational(GaussianInt(n), mpz_class(d)) {}

  static GaussianRational unit_i() { return GaussianRational(GaussianInt(0, 1)); }

  bool is_zero() const { return num.is_zero(); }
  bool is_integral() const { return den == 1; }
  bool is_real() const { return num.im == 0; }

  GaussianRational conj() const { return GaussianRational(num.conj(), den); }

  GaussianRational operator-() const;
  GaussianRational operator+(const GaussianRational& b) const;
  GaussianRational operator-(const GaussianRational& b) const;
  GaussianRational operator*(const GaussianRational& b) const;
  GaussianRational operator/(const GaussianRational& b) const;
  GaussianRational& operator+=(const GaussianRational& b) { *this = *this + b; return *this; }
  GaussianRational& operator-=(const GaussianRational& b) { *this = *this - b; return *this; }
  GaussianRational& operator*=(const GaussianRational& b) { *this = *this * b; return *this; }

  bool operator==(const GaussianRational& b) const { return num == b.num && den == b.den; }
  bool operator!=(const GaussianRational& b) const { return !(*this == b); }

  /// Real and imaginary parts as exact rationals.
  mpq_class real_part() const { return mpq_class(num.re) / mpq_class(den); }
  mpq_class imag_part() const { return mpq_class(num.im) / mpq_class(den); }

 private:
  void canonicalize();
};

GaussianRational gq_inverse(const GaussianRational& x);

/// Canonical string form: "0", "3", "-1/2", "1i", "2-1/3i", ...
std::string to_string(const GaussianInt& x);
std::string to_string(const GaussianRational& x);

/// Parses the to_string format (also accepts bare "i", "-i", "+i").
GaussianRational parse_gq(const std::string& s);
GaussianInt parse_gint(const std::string& s);

}  // namespace nlocus
