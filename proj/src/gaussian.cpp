#include "nlocus/gaussian.hpp"

#include <cstdlib>

namespace nlocus {

namespace {

// round(p/q) for q > 0, ties toward +infinity
mpz_class round_div(const mpz_class& p, const mpz_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), mpz_class(2 * p + q).get_mpz_t(), mpz_class(2 * q).get_mpz_t());
  return r;
}

}  // namespace

GaussianInt gint_divmod(const GaussianInt& a, const GaussianInt& b, GaussianInt* rem) {
  if (b.is_zero()) throw ExactError("division by zero in Z[i]");
  mpz_class n = b.norm();
  // a/b = a*conj(b)/N(b), rounded componentwise
  GaussianInt t = a * b.conj();
  GaussianInt q(round_div(t.re, n), round_div(t.im, n));
  if (rem) *rem = a - q * b;
  return q;
}

bool gint_divides(const GaussianInt& b, const GaussianInt& a) {
  if (b.is_zero()) return a.is_zero();
  GaussianInt r;
  gint_divmod(a, b, &r);
  return r.is_zero();
}

GaussianInt gint_div_exact(const GaussianInt& a, const GaussianInt& b) {
  GaussianInt r;
  GaussianInt q = gint_divmod(a, b, &r);
  if (!r.is_zero()) throw ExactError("inexact division in Z[i]");
  return q;
}

GaussianInt gint_canonical(const GaussianInt& x) {
  if (x.is_zero()) return x;
  GaussianInt c = x;
  for (int k = 0; k < 4; ++k) {
    if (c.re > 0 && -c.re < c.im && c.im <= c.re) return c;
    c = c * GaussianInt(0, 1);
  }
  throw ExactError("unreachable: no canonical associate");
}

GaussianInt gint_gcd(const GaussianInt& x, const GaussianInt& y) {
  if (x.is_zero() && y.is_zero()) throw ExactError("gcd(0,0) undefined");
  GaussianInt a = x, b = y;
  while (!b.is_zero()) {
    GaussianInt r;
    gint_divmod(a, b, &r);
    a = b;
    b = r;
  }
  return gint_canonical(a);
}

unsigned val_one_plus_i(const GaussianInt& x) {
  if (x.is_zero()) throw ExactError("valuation of zero");
  // x/(1+i) = ((re+im) + (im-re)i)/2
  GaussianInt v = x;
  unsigned k = 0;
  while ((v.re + v.im) % 2 == 0) {
    mpz_class r = (v.re + v.im) / 2;
    mpz_class i = (v.im - v.re) / 2;
    v = GaussianInt(r, i);
    ++k;
    if (v.is_zero()) throw ExactError("unreachable: valuation of zero");
  }
  return k;
}

int mod_one_plus_i(const GaussianInt& x) {
  mpz_class s = x.re + x.im;
  return mpz_odd_p(s.get_mpz_t()) ? 1 : 0;
}

GaussianRational::GaussianRational(GaussianInt n, mpz_class d) : num(std::move(n)), den(std::move(d)) {
  if (den == 0) throw ExactError("zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  canonicalize();
}

void GaussianRational::canonicalize() {
  if (num.is_zero()) {
    den = 1;
    return;
  }
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), num.re.get_mpz_t(), num.im.get_mpz_t());
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), den.get_mpz_t());
  if (c > 1) {
    num.re /= c;
    num.im /= c;
    den /= c;
  }
}

GaussianRational GaussianRational::operator-() const {
  GaussianRational r;
  r.num = -num;
  r.den = den;
  return r;
}

GaussianRational GaussianRational::operator+(const GaussianRational& b) const {
  return GaussianRational(num * b.den + b.num * den, den * b.den);
}

GaussianRational GaussianRational::operator-(const GaussianRational& b) const {
  return GaussianRational(num * b.den - b.num * den, den * b.den);
}

GaussianRational GaussianRational::operator*(const GaussianRational& b) const {
  return GaussianRational(num * b.num, den * b.den);
}

GaussianRational GaussianRational::operator/(const GaussianRational& b) const {
  return *this * gq_inverse(b);
}

GaussianRational gq_inverse(const GaussianRational& x) {
  if (x.is_zero()) throw ExactError("division by zero in Q(i)");
  // (n/d)^-1 = d*conj(n)/N(n)
  return GaussianRational(x.num.conj() * GaussianInt(x.den), x.num.norm());
}

namespace {

std::string part_string(const mpz_class& p, const mpz_class& q) {
  std::string s = p.get_str();
  if (q != 1) s += "/" + q.get_str();
  return s;
}

}  // namespace

std::string to_string(const GaussianRational& x) {
  if (x.is_zero()) return "0";
  std::string s;
  if (x.num.re != 0) s += part_string(x.num.re, x.den);
  if (x.num.im != 0) {
    if (x.num.re != 0 && x.num.im > 0) s += "+";
    s += part_string(x.num.im, x.den) + "i";
  }
  return s;
}

std::string to_string(const GaussianInt& x) { return to_string(GaussianRational(x)); }

namespace {

// one signed rational part: [+-]digits[/digits]
bool parse_part(const std::string& s, size_t& pos, mpq_class& out) {
  size_t start = pos;
  std::string t;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) t += s[pos++];
  size_t digits = 0;
  while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
    t += s[pos++];
    ++digits;
  }
  if (digits == 0 && pos < s.size() && s[pos] == 'i') {
    t += "1";  // bare "i" / "+i" / "-i"
  } else if (digits == 0) {
    pos = start;
    return false;
  }
  if (pos < s.size() && s[pos] == '/') {
    t += s[pos++];
    size_t d2 = 0;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
      t += s[pos++];
      ++d2;
    }
    if (d2 == 0) {
      pos = start;
      return false;
    }
  }
  out = mpq_class(t);
  out.canonicalize();
  return true;
}

}  // namespace

GaussianRational parse_gq(const std::string& s) {
  size_t pos = 0;
  mpq_class re = 0, im = 0;
  mpq_class part;
  bool any = false;
  while (pos < s.size()) {
    if (!parse_part(s, pos, part)) throw ExactError("bad Gaussian rational: '" + s + "'");
    if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      im += part;
    } else {
      re += part;
    }
    any = true;
  }
  if (!any) throw ExactError("bad Gaussian rational: '" + s + "'");
  mpz_class d;
  mpz_lcm(d.get_mpz_t(), re.get_den().get_mpz_t(), im.get_den().get_mpz_t());
  mpz_class nr = re.get_num() * (d / re.get_den());
  mpz_class ni = im.get_num() * (d / im.get_den());
  return GaussianRational(GaussianInt(nr, ni), d);
}

GaussianInt parse_gint(const std::string& s) {
  GaussianRational q = parse_gq(s);
  if (!q.is_integral()) throw ExactError("not a Gaussian integer: '" + s + "'");
  return q.num;
}

}  // namespace nlocus
