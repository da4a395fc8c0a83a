#include "nlocus/coinvariant.hpp"

#include <algorithm>

namespace nlocus {

std::string special_point_name(SpecialPoint pt) {
  switch (pt) {
    case SpecialPoint::P1_LCSL: return "p1-lcsl";
    case SpecialPoint::P1_Fermat: return "p1-fermat";
    case SpecialPoint::P2_LCSL: return "p2-lcsl";
    case SpecialPoint::P2_Fermat: return "p2-fermat";
  }
  return "?";
}

std::optional<SpecialPoint> special_point_by_name(const std::string& name) {
  for (SpecialPoint pt : {SpecialPoint::P1_LCSL, SpecialPoint::P1_Fermat, SpecialPoint::P2_LCSL,
                          SpecialPoint::P2_Fermat})
    if (special_point_name(pt) == name) return pt;
  return std::nullopt;
}

int special_m(SpecialPoint pt) {
  return (pt == SpecialPoint::P1_LCSL || pt == SpecialPoint::P1_Fermat) ? 1 : 2;
}

bool special_smooth(SpecialPoint pt) { return pt != SpecialPoint::P2_LCSL; }

Section special_section(SpecialPoint pt) {
  int m = special_m(pt);
  Section b(m, Convention::Monomial);
  switch (pt) {
    case SpecialPoint::P1_LCSL:
      b.set({1, 1}, GaussianRational(1));
      break;
    case SpecialPoint::P2_LCSL:
      b.set({1, 1, 1}, GaussianRational(1));
      break;
    case SpecialPoint::P1_Fermat:
      b.set({2, 0}, GaussianRational(1));
      b.set({0, 2}, GaussianRational(1));
      break;
    case SpecialPoint::P2_Fermat:
      b.set({3, 0, 0}, GaussianRational(1));
      b.set({0, 3, 0}, GaussianRational(1));
      b.set({0, 0, 3}, GaussianRational(1));
      break;
  }
  return b;
}

bool NormalForm::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const GaussianRational& c) { return c.is_zero(); });
}

NormalForm& NormalForm::operator+=(const NormalForm& b) {
  if (coords.size() != b.coords.size()) throw ExactError("normal form dimension mismatch");
  for (size_t k = 0; k < coords.size(); ++k) coords[k] += b.coords[k];
  return *this;
}

NormalForm NormalForm::scaled(const GaussianRational& c) const {
  NormalForm r = *this;
  for (auto& v : r.coords) v *= c;
  return r;
}

size_t normal_form_dim(SpecialPoint pt) { return pt == SpecialPoint::P2_Fermat ? 2 : 1; }

namespace {

mpz_class factorial(long n) {
  mpz_class f = 1;
  for (long k = 2; k <= n; ++k) f *= k;
  return f;
}

// n!! with (-1)!! = 1
mpz_class double_factorial(long n) {
  if (n < -1) throw ExactError("double factorial undefined below -1");
  mpz_class f = 1;
  for (long k = n; k >= 2; k -= 2) f *= k;
  return f;
}

// n!!! with (-1)!!! = (-2)!!! = 1
mpz_class triple_factorial(long n) {
  if (n < -2) throw ExactError("triple factorial undefined below -2");
  mpz_class f = 1;
  for (long k = n; k >= 2; k -= 3) f *= k;
  return f;
}

mpz_class pow_ui(long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

void check_iota(SpecialPoint pt, const Multidegree& iota) {
  int m = special_m(pt);
  if (static_cast<int>(iota.size()) != m + 1) throw ExactError("invalid exponent length");
  for (int v : iota)
    if (v < 0) throw ExactError("invalid exponent");
  if (exp_total(iota) % (m + 1) != 0)
    throw ExactError("exponent is not an R-monomial: total degree not divisible by m+1");
}

}  // namespace

NormalForm normal_form(SpecialPoint pt, const Multidegree& iota) {
  check_iota(pt, iota);
  NormalForm nf(normal_form_dim(pt));
  switch (pt) {
    case SpecialPoint::P1_LCSL: {
      // (x0 x1)^k reduces to (-1)^k k!; mixed powers die
      if (iota[0] != iota[1]) return nf;
      long k = iota[0];
      nf.coords[0] = GaussianRational(GaussianInt((k % 2 ? -1 : 1) * factorial(k)));
      return nf;
    }
    case SpecialPoint::P2_LCSL: {
      if (!(iota[0] == iota[1] && iota[1] == iota[2])) return nf;
      long k = iota[0];
      nf.coords[0] = GaussianRational(GaussianInt((k % 2 ? -1 : 1) * factorial(k)));
      return nf;
    }
    case SpecialPoint::P1_Fermat: {
      long k = iota[0], l = iota[1];
      if (k % 2 != 0) return nf;  // both odd (total is even)
      long half = (k + l) / 2;
      mpz_class num = double_factorial(k - 1) * double_factorial(l - 1);
      if (half % 2) num = -num;
      nf.coords[0] = GaussianRational(GaussianInt(num), pow_ui(2, half));
      return nf;
    }
    case SpecialPoint::P2_Fermat: {
      int r0 = iota[0] % 3, r1 = iota[1] % 3, r2 = iota[2] % 3;
      if (r0 == 2 || r1 == 2 || r2 == 2) return nf;
      if (!(r0 == r1 && r1 == r2)) return nf;  // mixed residues contain a 2
      long c = exp_total(iota);
      mpz_class num = triple_factorial(iota[0] - 2) * triple_factorial(iota[1] - 2) *
                      triple_factorial(iota[2] - 2);
      if (r0 == 0) {
        if ((c / 3) % 2) num = -num;
        nf.coords[0] = GaussianRational(GaussianInt(num), pow_ui(3, c / 3));
      } else {
        // all residues 1; class lands on x0 x1 x2 with one sign flip
        if ((c / 3) % 2 == 0) num = -num;
        nf.coords[1] = GaussianRational(GaussianInt(num), pow_ui(3, c / 3 - 1));
      }
      return nf;
    }
  }
  throw ExactError("unreachable special point");
}

Multidegree beta_map(int m, const std::vector<int>& alpha) {
  if (m == 1) {
    if (alpha.size() != 3) throw ExactError("P1 multi-index has 3 entries");
    return {alpha[0] + 2 * alpha[1], alpha[0] + 2 * alpha[2]};
  }
  if (m == 2) {
    if (alpha.size() != 10) throw ExactError("P2 multi-index has 10 entries");
    return {alpha[0] + 3 * alpha[1] + 2 * alpha[2] + alpha[3] + alpha[8] + 2 * alpha[9],
            alpha[0] + alpha[2] + 2 * alpha[3] + 3 * alpha[4] + 2 * alpha[5] + alpha[6],
            alpha[0] + alpha[5] + 2 * alpha[6] + 3 * alpha[7] + 2 * alpha[8] + alpha[9]};
  }
  return beta_from_table(m, alpha);
}

Multidegree beta_from_table(int m, const std::vector<int>& alpha) {
  const auto coords = coordinate_order(m);
  if (alpha.size() != coords.size()) throw ExactError("multi-index length mismatch");
  Multidegree beta(m + 1, 0);
  for (size_t j = 0; j < alpha.size(); ++j)
    for (int v = 0; v <= m; ++v) beta[v] += alpha[j] * coords[j][v];
  return beta;
}

bool exponent_map_selfcheck() {
  for (int m : {1, 2}) {
    size_t n = coordinate_order(m).size();
    for (size_t j = 0; j < n; ++j) {
      std::vector<int> alpha(n, 0);
      alpha[j] = 1;
      if (beta_map(m, alpha) != beta_from_table(m, alpha)) return false;
      alpha[j] = 3;  // exercise linearity too
      if (beta_map(m, alpha) != beta_from_table(m, alpha)) return false;
    }
  }
  return true;
}

NormalForm normal_form_of_op(SpecialPoint pt, const DiffOp& delta) {
  if (delta.m != special_m(pt)) throw ExactError("operator dimension mismatch");
  NormalForm acc(normal_form_dim(pt));
  for (const auto& [alpha, c] : delta.terms)
    acc += normal_form(pt, beta_map(delta.m, alpha)).scaled(c);
  return acc;
}

bool annihilates(SpecialPoint pt, const DiffOp& delta) {
  return normal_form_of_op(pt, delta).is_zero();
}

bool relation_predicate(SpecialPoint pt, const DiffOp& delta) {
  if (delta.m != special_m(pt)) throw ExactError("operator dimension mismatch");
  switch (pt) {
    case SpecialPoint::P1_LCSL: {
      GaussianRational sum;
      for (const auto& [alpha, c] : delta.terms) {
        if (alpha[1] != alpha[2]) continue;
        long d = alpha[0] + alpha[1] + alpha[2];
        sum += c * GaussianRational(GaussianInt((d % 2 ? -1 : 1) * factorial(d)));
      }
      return sum.is_zero();
    }
    case SpecialPoint::P1_Fermat: {
      GaussianRational sum;
      for (const auto& [alpha, c] : delta.terms) {
        if (alpha[0] % 2 != 0) continue;
        long d = alpha[0] + alpha[1] + alpha[2];
        mpz_class num = double_factorial(alpha[0] + 2 * alpha[1] - 1) *
                        double_factorial(alpha[0] + 2 * alpha[2] - 1);
        if (d % 2) num = -num;
        sum += c * GaussianRational(GaussianInt(num), pow_ui(2, d));
      }
      return sum.is_zero();
    }
    case SpecialPoint::P2_LCSL: {
      GaussianRational sum;
      for (const auto& [alpha, c] : delta.terms) {
        Multidegree beta = beta_map(2, alpha);
        if (!(beta[0] == beta[1] && beta[1] == beta[2])) continue;
        long d = beta[0];
        sum += c * GaussianRational(GaussianInt((d % 2 ? -1 : 1) * factorial(d)));
      }
      return sum.is_zero();
    }
    case SpecialPoint::P2_Fermat: {
      GaussianRational sum0, sum1;
      for (const auto& [alpha, c] : delta.terms) {
        Multidegree beta = beta_map(2, alpha);
        int r0 = beta[0] % 3, r1 = beta[1] % 3, r2 = beta[2] % 3;
        if (!(r0 == r1 && r1 == r2) || r0 == 2) continue;
        long csum = beta[0] + beta[1] + beta[2];
        mpz_class num = triple_factorial(beta[0] - 2) * triple_factorial(beta[1] - 2) *
                        triple_factorial(beta[2] - 2);
        if (r0 == 0) {
          if ((csum / 3) % 2) num = -num;
          sum0 += c * GaussianRational(GaussianInt(num), pow_ui(3, csum / 3));
        } else {
          if ((csum / 3 - 1) % 2) num = -num;
          sum1 += c * GaussianRational(GaussianInt(num), pow_ui(3, csum / 3 - 1));
        }
      }
      return sum0.is_zero() && sum1.is_zero();
    }
  }
  throw ExactError("unreachable special point");
}

const std::vector<std::string>& p1_coord_vars() {
  static const std::vector<std::string> vars = {"a0", "a1", "a2"};
  return vars;
}

const MultiPoly& p1_disc_poly() {
  static const MultiPoly disc = parse_poly(Ring::Qi, p1_coord_vars(), "a0^2-4*a1*a2");
  return disc;
}

std::pair<int, MultiPoly> p1_apply_to_period(const DiffOp& delta) {
  if (delta.m != 1) throw ExactError("p1_apply_to_period needs m = 1");
  const MultiPoly& disc = p1_disc_poly();
  std::vector<MultiPoly> disc_diff;
  for (size_t v = 0; v < 3; ++v) disc_diff.push_back(poly_diff(disc, v));

  int d = delta.degree;
  MultiPoly P(Ring::Qi, p1_coord_vars());
  for (const auto& [alpha, c] : delta.terms) {
    // walk Delta^s q --d_i--> Delta^{s-1} (s (d_i Delta) q + Delta d_i q)
    GaussianRational s(-1, 2);
    MultiPoly q = MultiPoly::constant(Ring::Qi, p1_coord_vars(), GaussianRational(1));
    for (size_t v = 0; v < 3; ++v)
      for (int k = 0; k < alpha[v]; ++k) {
        q = disc_diff[v] * s * q + disc * poly_diff(q, v);
        s -= GaussianRational(1);
      }
    // pad to the common power Delta^{-1/2-d}
    P = P + q * poly_pow(disc, static_cast<unsigned>(d - exp_total(alpha))) * c;
  }
  return {d, P};
}

P1ZeroLocus p1_zero_locus(const DiffOp& delta) {
  auto [d, P] = p1_apply_to_period(delta);
  if (P.is_zero()) return {P1LocusKind::All, std::nullopt};
  while (auto q = poly_divide_exact(P, p1_disc_poly())) P = *q;
  if (P.is_constant()) return {P1LocusKind::Empty, std::nullopt};
  return {P1LocusKind::Locus, P};
}

}  // namespace nlocus
