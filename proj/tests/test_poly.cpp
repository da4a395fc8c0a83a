#include <doctest.h>

#include <random>

#include "nlocus/poly.hpp"

using namespace nlocus;

namespace {

const std::vector<std::string> kVars = {"a0", "a1", "a2"};

MultiPoly disc() { return parse_poly(Ring::Q, kVars, "a0^2-4*a1*a2"); }

MultiPoly random_poly(std::mt19937& rng, Ring ring = Ring::Q, int max_terms = 5) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> expo(0, 3);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  MultiPoly p(ring, kVars);
  int n = nterms(rng);
  for (int k = 0; k < n; ++k)
    p.add_term({expo(rng), expo(rng), expo(rng)}, GaussianRational(coeff(rng)));
  return p;
}

std::vector<GaussianRational> random_point(std::mt19937& rng) {
  std::uniform_int_distribution<int> v(-6, 6);
  std::uniform_int_distribution<int> d(1, 4);
  std::vector<GaussianRational> pt;
  for (int k = 0; k < 3; ++k) pt.push_back(GaussianRational(GaussianInt(v(rng)), d(rng)));
  return pt;
}

}  // namespace

TEST_CASE("arithmetic examples") {
  MultiPoly d = disc();
  CHECK(d + MultiPoly(Ring::Q, kVars) == d);
  MultiPoly a0 = MultiPoly::variable(Ring::Q, kVars, 0);
  CHECK(a0 * a0 == parse_poly(Ring::Q, kVars, "a0^2"));
  CHECK_THROWS_AS(d + parse_poly(Ring::Qi, kVars, "a0"), RingMismatch);
  CHECK_THROWS_AS(d + parse_poly(Ring::Q, {"b0", "b1", "b2"}, "b0"), RingMismatch);
}

TEST_CASE("cube of the discriminant by independent distribution") {
  MultiPoly d = disc();
  MultiPoly cube = poly_pow(d, 3);
  // one-shot triple distribution over term triples
  MultiPoly oracle(Ring::Q, kVars);
  for (const auto& [e1, c1] : d.terms())
    for (const auto& [e2, c2] : d.terms())
      for (const auto& [e3, c3] : d.terms()) {
        Exponents e(3);
        for (int v = 0; v < 3; ++v) e[v] = e1[v] + e2[v] + e3[v];
        oracle.add_term(e, c1 * c2 * c3);
      }
  CHECK(cube == oracle);
  CHECK(cube.nterms() == 10);
  CHECK(cube.coeff({6, 0, 0}) == GaussianRational(1));
}

TEST_CASE("formal derivative") {
  MultiPoly d = disc();
  CHECK(poly_diff(d, std::string("a0")) == parse_poly(Ring::Q, kVars, "2*a0"));
  CHECK(poly_diff(d, std::string("a1")) == parse_poly(Ring::Q, kVars, "-4*a2"));
  CHECK(poly_diff(parse_poly(Ring::Q, kVars, "a1^4"), std::string("a1")) ==
        parse_poly(Ring::Q, kVars, "4*a1^3"));
  CHECK_THROWS_AS(poly_diff(d, std::string("zz")), ExactError);
}

TEST_CASE("evaluation examples") {
  MultiPoly d = disc();
  CHECK(poly_eval(d, {GaussianRational(0), GaussianRational(1), GaussianRational(1)}) ==
        GaussianRational(-4));
  CHECK(poly_eval(d, {GaussianRational(2), GaussianRational(1), GaussianRational(1)}) ==
        GaussianRational(0));
  CHECK_THROWS_AS(poly_eval(d, {GaussianRational(1)}), ExactError);
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(13);
  for (int k = 0; k < 50; ++k) {
    MultiPoly p = random_poly(rng), q = random_poly(rng);
    auto pt = random_point(rng);
    CHECK(poly_eval(p * q, pt) == poly_eval(p, pt) * poly_eval(q, pt));
    CHECK(poly_eval(p + q, pt) == poly_eval(p, pt) + poly_eval(q, pt));
  }
}

TEST_CASE("ring axioms on random instances") {
  std::mt19937 rng(17);
  for (int k = 0; k < 40; ++k) {
    MultiPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
  }
}

TEST_CASE("coefficientwise reduction") {
  MultiPoly p = parse_poly(Ring::Zi, kVars, "2*a0");
  CHECK(poly_reduce_mod(p, Modulus::Two).is_zero());

  // 3+i = (1+i)(2-i): residue of 3+i mod (1+i) is 0
  MultiPoly q(Ring::Zi, kVars);
  q.add_term({1, 0, 0}, GaussianRational(GaussianInt(3, 1)));
  CHECK(poly_reduce_mod(q, Modulus::OnePlusI).is_zero());

  MultiPoly r = parse_poly(Ring::Zi, kVars, "5*a0+2*a1");
  MultiPoly r2 = poly_reduce_mod(r, Modulus::Two);
  CHECK(r2 == parse_poly(Ring::F2, kVars, "a0"));
  MultiPoly r4 = poly_reduce_mod(parse_poly(Ring::Zi, kVars, "7*a0-2*a1"), Modulus::Four);
  CHECK(r4.coeff({1, 0, 0}) == GaussianRational(3));
  CHECK(r4.coeff({0, 1, 0}) == GaussianRational(2));

  MultiPoly frac(Ring::Qi, kVars);
  frac.add_term({1, 0, 0}, GaussianRational(1, 2));
  CHECK_THROWS_AS(poly_reduce_mod(frac, Modulus::Two), RingMismatch);
}

TEST_CASE("reduction commutes with multiplication") {
  std::mt19937 rng(23);
  for (int k = 0; k < 40; ++k) {
    MultiPoly p = random_poly(rng, Ring::Zi), q = random_poly(rng, Ring::Zi);
    for (Modulus m : {Modulus::Two, Modulus::Four, Modulus::OnePlusI})
      CHECK(poly_reduce_mod(p * q, m) == poly_reduce_mod(p, m) * poly_reduce_mod(q, m));
  }
}

TEST_CASE("content and exact division") {
  CHECK(poly_content(parse_poly(Ring::Zi, kVars, "2*a0+4*a1")) == GaussianInt(2));
  CHECK_THROWS_AS(poly_content(MultiPoly(Ring::Zi, kVars)), ExactError);

  MultiPoly d = disc();
  MultiPoly a0 = MultiPoly::variable(Ring::Q, kVars, 0);
  auto quot = poly_divide_exact(d * a0, d);
  REQUIRE(quot);
  CHECK(*quot == a0);
  CHECK(!poly_divide_exact(parse_poly(Ring::Q, kVars, "a0^2+1"), a0));
}

TEST_CASE("division round trip on random instances") {
  std::mt19937 rng(29);
  for (int k = 0; k < 40; ++k) {
    MultiPoly p = random_poly(rng), q = random_poly(rng);
    if (q.is_zero()) continue;
    auto quot = poly_divide_exact(p * q, q);
    REQUIRE(quot);
    CHECK(*quot == p);
  }
}

TEST_CASE("sylvester resultant") {
  const std::vector<std::string> st = {"s", "t"};
  // res_t(t - s, t + s) = 2s
  MultiPoly A = parse_poly(Ring::Q, st, "t-s");
  MultiPoly B = parse_poly(Ring::Q, st, "t+s");
  CHECK(sylvester_resultant(A, B, 1) == parse_poly(Ring::Q, st, "2*s"));
  // common root at t = s makes the resultant vanish
  MultiPoly C = parse_poly(Ring::Q, st, "t^2-s^2");
  CHECK(sylvester_resultant(A, C, 1).is_zero());
  // classical scalar case: res(t^2+1, t^2-1) = 4
  MultiPoly D = parse_poly(Ring::Q, st, "t^2+1");
  MultiPoly E = parse_poly(Ring::Q, st, "t^2-1");
  CHECK(sylvester_resultant(D, E, 1) == parse_poly(Ring::Q, st, "4"));
}

TEST_CASE("parser and printer round trip") {
  std::mt19937 rng(31);
  for (int k = 0; k < 60; ++k) {
    MultiPoly p = random_poly(rng, Ring::Qi);
    CHECK(parse_poly(Ring::Qi, kVars, to_string(p)) == p);
  }
  CHECK(parse_poly(Ring::Qi, kVars, "3i*a0-1/2i").coeff({1, 0, 0}) ==
        GaussianRational(GaussianInt(0, 3)));
}
