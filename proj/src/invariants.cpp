#include "nlocus/invariants.hpp"

#include <algorithm>

namespace nlocus {

namespace detail {
extern const char* const kAronholdS;
extern const char* const kAronholdT;
extern const char* const kAronholdT0;
extern const char* const kCarrierH;
}  // namespace detail

const std::vector<Multidegree>& salmon_degrees() {
  static const std::vector<Multidegree> degrees = section_basis(2, 1);
  return degrees;
}

const std::vector<std::string>& salmon_vars() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& d : salmon_degrees()) v.push_back("a" + multidegree_key(d));
    return v;
  }();
  return names;
}

size_t salmon_index(const Multidegree& d) {
  const auto& degrees = salmon_degrees();
  auto it = std::find(degrees.begin(), degrees.end(), d);
  if (it == degrees.end()) throw ExactError("not a cubic multidegree: " + multidegree_key(d));
  return static_cast<size_t>(it - degrees.begin());
}

const TernaryCubicInvariants& aronhold_invariants() {
  static const TernaryCubicInvariants inv = [] {
    TernaryCubicInvariants b;
    b.S = parse_poly(Ring::Zi, salmon_vars(), detail::kAronholdS);
    b.T = parse_poly(Ring::Zi, salmon_vars(), detail::kAronholdT);
    b.T0 = parse_poly(Ring::Zi, salmon_vars(), detail::kAronholdT0);
    b.H = parse_poly(Ring::F2, salmon_vars(), detail::kCarrierH);
    b.Delta = poly_pow(b.S, 3) * GaussianRational(64) - b.T * b.T;
    return b;
  }();
  return inv;
}

bool FirstOrderOp::is_zero() const {
  for (const auto& [d, c] : lambda)
    if (!c.is_zero()) return false;
  return true;
}

bool FirstOrderOp::is_integral() const {
  for (const auto& [d, c] : lambda)
    if (!c.is_integral()) return false;
  return true;
}

GaussianRational FirstOrderOp::coeff(const Multidegree& d) const {
  auto it = lambda.find(d);
  return it == lambda.end() ? GaussianRational() : it->second;
}

FirstOrderOp FirstOrderOp::unit(const Multidegree& d) {
  salmon_index(d);  // validate
  FirstOrderOp op;
  op.lambda[d] = GaussianRational(1);
  return op;
}

FirstOrderOp operator+(const FirstOrderOp& a, const FirstOrderOp& b) {
  FirstOrderOp r = a;
  for (const auto& [d, c] : b.lambda) {
    auto [it, fresh] = r.lambda.try_emplace(d, c);
    if (!fresh) it->second += c;
  }
  std::erase_if(r.lambda, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

FirstOrderOp operator*(const GaussianRational& c, const FirstOrderOp& a) {
  FirstOrderOp r;
  for (const auto& [d, v] : a.lambda)
    if (!(v * c).is_zero()) r.lambda[d] = v * c;
  return r;
}

namespace {

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

GaussianRational salmon_scale(const Multidegree& d) {
  mpz_class num = 1;
  for (int v : d) num *= factorial(v);
  return GaussianRational(GaussianInt(num), factorial(static_cast<int>(exp_total(d))));
}

Section convert_convention(const Section& b, Convention to) {
  if (b.m != 2) throw ExactError("convention conversion is defined for m = 2 only");
  if (b.convention == to) return b;
  Section r(2, to);
  for (const auto& [d, c] : b.coeffs) {
    GaussianRational f = salmon_scale(d);
    r.set(d, to == Convention::Salmon ? c * f : c / f);
  }
  return r;
}

AronholdValues aronhold(const Section& b) {
  if (b.m != 2) throw ExactError("aronhold invariants need m = 2");
  if (b.convention != Convention::Salmon)
    throw ExactError("aronhold refuses monomial convention; convert first");
  const auto& inv = aronhold_invariants();
  std::vector<GaussianRational> point;
  for (const auto& d : salmon_degrees()) point.push_back(b.coeff(d));
  AronholdValues v;
  v.S = poly_eval(inv.S, point);
  v.T = poly_eval(inv.T, point);
  v.Delta = GaussianRational(64) * v.S * v.S * v.S - v.T * v.T;
  return v;
}

MultiPoly delta_of_invariant(const FirstOrderOp& op, WhichInvariant which) {
  const auto& inv = aronhold_invariants();
  const MultiPoly& P = (which == WhichInvariant::S) ? inv.S : inv.T;
  Ring ring = op.is_integral() ? Ring::Zi : Ring::Qi;
  MultiPoly out(ring, salmon_vars());
  for (const auto& [d, c] : op.lambda) {
    if (c.is_zero()) continue;
    MultiPoly part = poly_diff(P, salmon_index(d));
    for (const auto& [e, pc] : part.terms()) out.add_term(e, pc * c);
  }
  return out;
}

bool CheckReport::all_pass() const {
  for (const auto& item : items)
    if (!item.pass) return false;
  return true;
}

namespace {

std::string first_difference(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly d = a - b;
  if (d.is_zero()) return "";
  const auto& [e, c] = *d.terms().begin();
  MultiPoly t(d.ring(), d.vars());
  t.add_term(e, c);
  return "first differing term " + to_string(t);
}

void check_equal(CheckReport& report, const std::string& name, const MultiPoly& lhs,
                 const MultiPoly& rhs) {
  std::string diff = lhs == rhs ? "" : first_difference(lhs, rhs);
  report.items.push_back({name, diff.empty(), diff});
}

}  // namespace

CheckReport congruence_checks(const TernaryCubicInvariants& inv) {
  CheckReport report;
  const size_t i111 = salmon_index({1, 1, 1});

  check_equal(report, "Delta = H^4 over F2", poly_reduce_mod(inv.Delta, Modulus::Two),
              poly_pow(inv.H, 4));
  check_equal(report, "T = T0 over F2", poly_reduce_mod(inv.T, Modulus::Two),
              poly_reduce_mod(inv.T0, Modulus::Two));
  {
    // any lift of H squares to the same thing mod 4
    MultiPoly h4(Ring::Z4, salmon_vars());
    for (const auto& [e, c] : inv.H.terms()) h4.add_term(e, c);
    check_equal(report, "T = H^2 over Z/4Z", poly_reduce_mod(inv.T, Modulus::Four), h4 * h4);
  }
  check_equal(report, "d111 S = H over F2",
              poly_reduce_mod(poly_diff(inv.S, i111), Modulus::Two), inv.H);
  {
    MultiPoly a111 = MultiPoly::variable(Ring::F2, salmon_vars(), i111);
    MultiPoly P = poly_reduce_mod(inv.S, Modulus::Two) - inv.H * a111 - poly_pow(a111, 4);
    bool independent = true;
    std::string detail;
    for (const auto& [e, c] : P.terms())
      if (e[i111] != 0) {
        independent = false;
        MultiPoly t(P.ring(), P.vars());
        t.add_term(e, c);
        detail = "a111 occurs in remainder term " + to_string(t);
        break;
      }
    report.items.push_back({"S = H*a111 + a111^4 + P over F2, P free of a111", independent, detail});
  }
  return report;
}

namespace {

GaussianInt require_integral_gcd(const FirstOrderOp& op) {
  if (op.is_zero()) throw ExactError("first-order operator is zero");
  if (!op.is_integral()) throw ExactError("first-order operator must have Z[i] coefficients");
  GaussianInt g;
  for (const auto& [d, c] : op.lambda) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? gint_canonical(c.num) : gint_gcd(g, c.num);
  }
  return g;
}

}  // namespace

bool admissible(const FirstOrderOp& op) {
  GaussianInt g = require_integral_gcd(op);
  if (!g.is_unit()) return false;
  if (mod_one_plus_i(op.coeff({1, 1, 1}).num) != 0) return false;
  int odd = mod_one_plus_i(op.coeff({3, 0, 0}).num) + mod_one_plus_i(op.coeff({0, 3, 0}).num) +
            mod_one_plus_i(op.coeff({0, 0, 3}).num);
  return odd != 1;
}

CheckReport gcd_lemma_checks(const FirstOrderOp& op) {
  CheckReport report;
  GaussianInt g = require_integral_gcd(op);

  GaussianInt content_dS = poly_content(delta_of_invariant(op, WhichInvariant::S));
  bool divides = gint_divides(content_dS, g);
  report.items.push_back({"content(deltaS) divides gcd(lambda)", divides,
                          "content " + to_string(content_dS) + ", gcd " + to_string(g)});

  GaussianInt g_off;  // gcd over I != 111
  for (const auto& [d, c] : op.lambda) {
    if (c.is_zero() || d == Multidegree{1, 1, 1}) continue;
    g_off = g_off.is_zero() ? gint_canonical(c.num) : gint_gcd(g_off, c.num);
  }
  if (g_off.is_zero() || mod_one_plus_i(g_off) == 0) {
    report.items.push_back(
        {"val_{1+i}(content(deltaT)) = 2", true, "hypothesis (1+i) ∤ gcd(lambda_I, I≠111) not met; skipped"});
  } else {
    GaussianInt content_dT = poly_content(delta_of_invariant(op, WhichInvariant::T));
    unsigned val = val_one_plus_i(content_dT);
    report.items.push_back({"val_{1+i}(content(deltaT)) = 2", val == 2,
                            "content " + to_string(content_dT) + ", valuation " + std::to_string(val)});
  }
  return report;
}

bool has_linear_divisor_f2(const MultiPoly& p) {
  const size_t n = p.nvars();
  if (n > 20) throw ExactError("linear-divisor search limited to 20 variables");
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    MultiPoly ell(Ring::F2, p.vars());
    for (size_t v = 0; v < n; ++v)
      if (mask & (1ul << v)) {
        Exponents e(n, 0);
        e[v] = 1;
        ell.add_term(std::move(e), GaussianRational(1));
      }
    if (poly_divide_exact(p, ell)) return true;
  }
  return false;
}

bool h_irreducibility() { return !has_linear_divisor_f2(aronhold_invariants().H); }

Section sl3_substitute(const Section& b,
                       const std::array<std::array<GaussianRational, 3>, 3>& g) {
  if (b.m != 2) throw ExactError("sl3_substitute needs m = 2");
  GaussianRational det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
        g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
        g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  if (det != GaussianRational(1)) throw ExactError("matrix is not unimodular");

  Section mono = b.convention == Convention::Monomial ? b : convert_convention(b, Convention::Monomial);
  MultiPoly f = universal_section_at(mono);
  std::vector<MultiPoly> images;
  for (int i = 0; i < 3; ++i) {
    MultiPoly row(Ring::Qi, x_vars(2));
    for (int j = 0; j < 3; ++j) {
      Exponents e(3, 0);
      e[j] = 1;
      row.add_term(std::move(e), g[i][j]);
    }
    images.push_back(std::move(row));
  }
  MultiPoly sub = poly_substitute(f, images);
  Section out(2, Convention::Monomial);
  for (const auto& [e, c] : sub.terms()) out.set(e, c);
  return b.convention == Convention::Monomial ? out : convert_convention(out, Convention::Salmon);
}

GaussianRational p1_discriminant(const Section& b) {
  if (b.m != 1) throw ExactError("p1_discriminant needs m = 1");
  if (b.convention != Convention::Monomial) throw ExactError("p1 sections use monomial convention");
  GaussianRational a0 = b.coeff({1, 1}), a1 = b.coeff({2, 0}), a2 = b.coeff({0, 2});
  return a0 * a0 - GaussianRational(4) * a1 * a2;
}

}  // namespace nlocus
