#include <doctest.h>

#include <random>
#include <vector>

#include "nlocus/gaussian.hpp"

using namespace nlocus;

namespace {

GaussianInt gi(long r, long i) { return GaussianInt(r, i); }

// every Gaussian integer of norm <= bound
std::vector<GaussianInt> small_gints(long bound) {
  std::vector<GaussianInt> out;
  for (long r = -bound; r <= bound; ++r)
    for (long i = -bound; i <= bound; ++i)
      if (r * r + i * i <= bound && (r || i)) out.push_back(gi(r, i));
  return out;
}

// gcd by brute force: the common divisor of maximal norm, canonicalized
GaussianInt brute_gcd(const GaussianInt& x, const GaussianInt& y) {
  long bound = 60;
  GaussianInt best;
  for (const auto& d : small_gints(bound))
    if (gint_divides(d, x) && gint_divides(d, y))
      if (best.is_zero() || d.norm() > best.norm()) best = d;
  return gint_canonical(best);
}

}  // namespace

TEST_CASE("gcd examples") {
  CHECK(gint_gcd(gi(0, 0), gi(3, 1)) == gi(3, 1));
  CHECK(gint_gcd(gi(2, 0), gi(1, 1)) == gi(1, 1));
  // 3+i = (1+i)(2-i), checked by brute-force divisor enumeration of norm <= 10
  CHECK(brute_gcd(gi(3, 1), gi(1, 1)) == gi(1, 1));
  CHECK(gint_gcd(gi(3, 1), gi(1, 1)) == gi(1, 1));
  CHECK_THROWS_AS(gint_gcd(gi(0, 0), gi(0, 0)), ExactError);
}

TEST_CASE("gcd divides both arguments and dominates common divisors") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-7, 7);
  int checked = 0;
  while (checked < 60) {
    GaussianInt x = gi(dist(rng), dist(rng)), y = gi(dist(rng), dist(rng));
    if (x.is_zero() && y.is_zero()) continue;
    if (x.norm() > 50 || y.norm() > 50) continue;
    GaussianInt g = gint_gcd(x, y);
    CHECK(gint_divides(g, x));
    CHECK(gint_divides(g, y));
    for (const auto& d : small_gints(50))
      if (gint_divides(d, x) && gint_divides(d, y)) CHECK(gint_divides(d, g));
    ++checked;
  }
}

TEST_CASE("canonical associate is unique in the half-quadrant") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> dist(-20, 20);
  for (int k = 0; k < 100; ++k) {
    GaussianInt x = gi(dist(rng), dist(rng));
    if (x.is_zero()) continue;
    GaussianInt c = gint_canonical(x);
    CHECK(c.re > 0);
    CHECK(c.im <= c.re);
    CHECK(-c.re < c.im);
    int hits = 0;
    GaussianInt a = x;
    for (int j = 0; j < 4; ++j) {
      if (a.re > 0 && -a.re < a.im && a.im <= a.re) ++hits;
      a = a * GaussianInt(0, 1);
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("valuation at 1+i") {
  CHECK(val_one_plus_i(gi(1, 0)) == 0);
  CHECK(val_one_plus_i(gi(2, 0)) == 2);  // 2 = (1+i)^2 (-i)
  // repeated exact division by (1+i)
  GaussianInt four = gi(4, 0);
  unsigned k = 0;
  GaussianInt v = four;
  while (gint_divides(gi(1, 1), v)) {
    v = gint_div_exact(v, gi(1, 1));
    ++k;
  }
  CHECK(k == 4);
  CHECK(val_one_plus_i(four) == 4);
  CHECK_THROWS_AS(val_one_plus_i(gi(0, 0)), ExactError);
}

TEST_CASE("valuation is additive") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> dist(-30, 30);
  for (int k = 0; k < 200; ++k) {
    GaussianInt x = gi(dist(rng), dist(rng)), y = gi(dist(rng), dist(rng));
    if (x.is_zero() || y.is_zero()) continue;
    CHECK(val_one_plus_i(x * y) == val_one_plus_i(x) + val_one_plus_i(y));
  }
}

TEST_CASE("residue mod 1+i") {
  // 3+i = (1+i)(2-i) exactly, so its residue is 0
  CHECK(gint_div_exact(gi(3, 1), gi(1, 1)) == gi(2, -1));
  CHECK(mod_one_plus_i(gi(3, 1)) == 0);
  CHECK(mod_one_plus_i(gi(1, 0)) == 1);
  CHECK(mod_one_plus_i(gi(0, 1)) == 1);
  CHECK(mod_one_plus_i(gi(2, 0)) == 0);
}

TEST_CASE("rational arithmetic stays canonical") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> dist(-12, 12);
  std::uniform_int_distribution<long> den(1, 9);
  for (int k = 0; k < 200; ++k) {
    GaussianRational a(gi(dist(rng), dist(rng)), den(rng));
    GaussianRational b(gi(dist(rng), dist(rng)), den(rng));
    for (const GaussianRational& v : {a + b, a - b, a * b}) {
      CHECK(v.den > 0);
      if (!v.is_zero()) {
        mpz_class c;
        mpz_gcd(c.get_mpz_t(), v.num.re.get_mpz_t(), v.num.im.get_mpz_t());
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), v.den.get_mpz_t());
        CHECK(c == 1);
      }
    }
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("string format round trip") {
  CHECK(to_string(GaussianRational(0)) == "0");
  CHECK(to_string(GaussianRational(1)) == "1");
  CHECK(to_string(GaussianRational(-1)) == "-1");
  CHECK(to_string(GaussianRational(gi(3, 0), 2)) == "3/2");
  CHECK(to_string(GaussianRational(gi(0, 1), 1)) == "1i");
  CHECK(to_string(GaussianRational(gi(1, -2), 3)) == "1/3-2/3i");
  CHECK(parse_gq("i") == GaussianRational::unit_i());
  CHECK(parse_gq("-i") == -GaussianRational::unit_i());

  std::mt19937 rng(9);
  std::uniform_int_distribution<long> dist(-50, 50);
  std::uniform_int_distribution<long> den(1, 40);
  for (int k = 0; k < 200; ++k) {
    GaussianRational v(gi(dist(rng), dist(rng)), den(rng));
    CHECK(parse_gq(to_string(v)) == v);
  }
}
