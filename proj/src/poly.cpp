#include "nlocus/poly.hpp"

#include <cctype>
#include <sstream>

namespace nlocus {

std::string ring_name(Ring r) {
  switch (r) {
    case Ring::Q: return "Q";
    case Ring::Qi: return "Q(i)";
    case Ring::Zi: return "Z[i]";
    case Ring::F2: return "F2";
    case Ring::Z4: return "Z/4Z";
  }
  return "?";
}

GaussianRational normalize_in_ring(Ring ring, const GaussianRational& c) {
  switch (ring) {
    case Ring::Qi:
      return c;
    case Ring::Q:
      if (!c.is_real()) throw RingMismatch("coefficient " + to_string(c) + " not in Q");
      return c;
    case Ring::Zi:
      if (!c.is_integral()) throw RingMismatch("coefficient " + to_string(c) + " not in Z[i]");
      return c;
    case Ring::F2: {
      if (!c.is_integral()) throw RingMismatch("coefficient " + to_string(c) + " not integral");
      return GaussianRational(GaussianInt(mod_one_plus_i(c.num)));
    }
    case Ring::Z4: {
      if (!c.is_integral() || !c.is_real())
        throw RingMismatch("coefficient " + to_string(c) + " not in Z");
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), c.num.re.get_mpz_t(), mpz_class(4).get_mpz_t());
      return GaussianRational(GaussianInt(r));
    }
  }
  throw ExactError("unreachable ring");
}

MultiPoly MultiPoly::constant(Ring ring, std::vector<std::string> vars, const GaussianRational& c) {
  MultiPoly p(ring, std::move(vars));
  p.add_term(Exponents(p.nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(Ring ring, std::vector<std::string> vars, size_t index) {
  MultiPoly p(ring, std::move(vars));
  if (index >= p.nvars()) throw ExactError("variable index out of range");
  Exponents e(p.nvars(), 0);
  e[index] = 1;
  p.add_term(std::move(e), GaussianRational(1));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && exp_total(terms_.begin()->first) == 0;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return exp_total(terms_.rbegin()->first);
}

int MultiPoly::degree_in(size_t var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

GaussianRational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void MultiPoly::add_term(Exponents e, const GaussianRational& c) {
  if (e.size() != vars_.size()) throw ExactError("exponent vector length mismatch");
  for (int v : e)
    if (v < 0) throw ExactError("negative exponent");
  auto [it, inserted] = terms_.try_emplace(std::move(e), GaussianRational());
  it->second = normalize_in_ring(ring_, it->second + c);
  if (it->second.is_zero()) terms_.erase(it);
}

void MultiPoly::check_compatible(const MultiPoly& b) const {
  if (ring_ != b.ring_)
    throw RingMismatch("ring mismatch: " + ring_name(ring_) + " vs " + ring_name(b.ring_));
  if (vars_ != b.vars_) throw RingMismatch("variable list mismatch");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_, vars_);
  for (const auto& [e, c] : terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& b) const {
  check_compatible(b);
  MultiPoly r = *this;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& b) const {
  check_compatible(b);
  MultiPoly r = *this;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& b) const {
  check_compatible(b);
  MultiPoly r(ring_, vars_);
  Exponents e(vars_.size());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const GaussianRational& c) const {
  MultiPoly r(ring_, vars_);
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

bool MultiPoly::operator==(const MultiPoly& b) const {
  return ring_ == b.ring_ && vars_ == b.vars_ && terms_ == b.terms_;
}

MultiPoly poly_pow(const MultiPoly& p, unsigned k) {
  MultiPoly r = MultiPoly::constant(p.ring(), p.vars(), GaussianRational(1));
  for (unsigned j = 0; j < k; ++j) r = r * p;
  return r;
}

MultiPoly poly_diff(const MultiPoly& p, size_t var) {
  if (var >= p.nvars()) throw ExactError("unknown variable");
  MultiPoly r(p.ring(), p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(std::move(d), c * GaussianRational(e[var]));
  }
  return r;
}

MultiPoly poly_diff(const MultiPoly& p, const std::string& var) {
  for (size_t k = 0; k < p.nvars(); ++k)
    if (p.vars()[k] == var) return poly_diff(p, k);
  throw ExactError("unknown variable '" + var + "'");
}

GaussianRational poly_eval(const MultiPoly& p, const std::vector<GaussianRational>& point) {
  if (point.size() != p.nvars()) throw ExactError("evaluation point must assign every variable");
  GaussianRational acc;
  for (const auto& [e, c] : p.terms()) {
    GaussianRational t = c;
    for (size_t v = 0; v < e.size(); ++v)
      for (int k = 0; k < e[v]; ++k) t *= point[v];
    acc += t;
  }
  // integral rings may legitimately be evaluated at rational points
  if (p.ring() == Ring::F2 || p.ring() == Ring::Z4) return normalize_in_ring(p.ring(), acc);
  return acc;
}

MultiPoly poly_reduce_mod(const MultiPoly& p, Modulus m) {
  if (p.ring() != Ring::Zi && p.ring() != Ring::Q && p.ring() != Ring::Qi)
    throw RingMismatch("reduce_mod expects an integral polynomial");
  Ring target = (m == Modulus::Four) ? Ring::Z4 : Ring::F2;
  MultiPoly r(target, p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_integral()) throw RingMismatch("non-integral coefficient " + to_string(c));
    if (m != Modulus::OnePlusI && !c.is_real())
      throw RingMismatch("coefficient " + to_string(c) + " not in Z");
    r.add_term(e, c);
  }
  return r;
}

GaussianInt poly_content(const MultiPoly& p) {
  if (p.ring() != Ring::Zi && p.ring() != Ring::Q)
    throw RingMismatch("content expects a Z[i] polynomial");
  if (p.is_zero()) throw ExactError("content of zero polynomial");
  GaussianInt g;
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_integral()) throw RingMismatch("non-integral coefficient");
    g = g.is_zero() ? gint_canonical(c.num) : gint_gcd(g, c.num);
  }
  return g;
}

std::optional<MultiPoly> poly_divide_exact(const MultiPoly& p, const MultiPoly& q) {
  if (p.ring() != q.ring() || p.vars() != q.vars())
    throw RingMismatch("divide_exact operand mismatch");
  if (q.is_zero()) throw ExactError("division by zero polynomial");
  if (p.ring() == Ring::Z4) throw RingMismatch("divide_exact unsupported over Z/4Z");

  MultiPoly rem = p;
  MultiPoly quot(p.ring(), p.vars());
  const auto& [eq, cq] = *q.terms().rbegin();
  Exponents diff(p.nvars());
  while (!rem.is_zero()) {
    const auto& [er, cr] = *rem.terms().rbegin();
    for (size_t v = 0; v < diff.size(); ++v) {
      diff[v] = er[v] - eq[v];
      if (diff[v] < 0) return std::nullopt;
    }
    GaussianRational c = cr / cq;
    if (p.ring() == Ring::Zi && !c.is_integral()) return std::nullopt;
    c = normalize_in_ring(p.ring(), c);
    quot.add_term(diff, c);
    MultiPoly t(p.ring(), p.vars());
    t.add_term(diff, c);
    rem = rem - t * q;
  }
  return quot;
}

MultiPoly poly_substitute(const MultiPoly& p, const std::vector<MultiPoly>& images) {
  if (images.size() != p.nvars()) throw ExactError("substitute needs an image per variable");
  for (const auto& im : images)
    if (im.ring() != images[0].ring() || im.vars() != images[0].vars())
      throw RingMismatch("substitution images disagree");
  MultiPoly acc(images[0].ring(), images[0].vars());
  for (const auto& [e, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(acc.ring(), acc.vars(), c);
    for (size_t v = 0; v < e.size(); ++v)
      for (int k = 0; k < e[v]; ++k) t = t * images[v];
    acc = acc + t;
  }
  return acc;
}

namespace {

// coefficient polynomials of var^0 .. var^deg, with var cleared
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, size_t var) {
  int deg = p.degree_in(var);
  std::vector<MultiPoly> out(static_cast<size_t>(deg + 1), MultiPoly(p.ring(), p.vars()));
  for (const auto& [e, c] : p.terms()) {
    Exponents r = e;
    int k = r[var];
    r[var] = 0;
    out[k].add_term(std::move(r), c);
  }
  return out;
}

// fraction-free determinant with row pivoting
MultiPoly poly_det_bareiss(std::vector<std::vector<MultiPoly>> m, Ring ring,
                           const std::vector<std::string>& vars) {
  const int n = static_cast<int>(m.size());
  MultiPoly prev = MultiPoly::constant(ring, vars, GaussianRational(1));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int pr = -1;
    for (int r = k; r < n; ++r)
      if (!m[r][k].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) return MultiPoly(ring, vars);  // singular
    if (pr != k) {
      std::swap(m[pr], m[k]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r)
      for (int c = k + 1; c < n; ++c) {
        MultiPoly num = m[k][k] * m[r][c] - m[r][k] * m[k][c];
        auto q = poly_divide_exact(num, prev);
        if (!q) throw ExactError("Bareiss division failed (corrupt determinant state)");
        m[r][c] = std::move(*q);
      }
    for (int r = k + 1; r < n; ++r) m[r][k] = MultiPoly(ring, vars);
    prev = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

MultiPoly sylvester_resultant(const MultiPoly& A, const MultiPoly& B, size_t var) {
  if (A.ring() != B.ring() || A.vars() != B.vars())
    throw RingMismatch("resultant operand mismatch");
  if (A.is_zero() || B.is_zero()) return MultiPoly(A.ring(), A.vars());
  int da = A.degree_in(var), db = B.degree_in(var);
  if (da == 0) return poly_pow(A, static_cast<unsigned>(db));
  if (db == 0) return poly_pow(B, static_cast<unsigned>(da));

  auto ac = coefficients_in(A, var);
  auto bc = coefficients_in(B, var);
  const int n = da + db;
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(A.ring(), A.vars())));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) m[i][i + j] = ac[da - j];
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) m[db + i][i + j] = bc[db - j];
  return poly_det_bareiss(std::move(m), A.ring(), A.vars());
}

namespace {

struct PolyParser {
  const std::string& s;
  size_t pos = 0;
  Ring ring;
  const std::vector<std::string>& vars;

  void skip_ws() {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ExactError("parse error at byte " + std::to_string(pos) + ": " + what);
  }

  bool take(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  // longest declared variable name starting here
  int match_var() {
    int best = -1;
    size_t best_len = 0;
    for (size_t k = 0; k < vars.size(); ++k) {
      const std::string& v = vars[k];
      if (v.size() > best_len && s.compare(pos, v.size(), v) == 0) {
        best = static_cast<int>(k);
        best_len = v.size();
      }
    }
    if (best >= 0) pos += best_len;
    return best;
  }

  mpz_class parse_uint() {
    skip_ws();
    std::string t;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) t += s[pos++];
    if (t.empty()) fail("expected number");
    return mpz_class(t);
  }

  // number | var[^k] | i
  void parse_factor(GaussianRational& coeff, Exponents& expo) {
    skip_ws();
    if (pos >= s.size()) fail("expected factor");
    int v = match_var();
    if (v >= 0) {
      int k = 1;
      if (take('^')) k = static_cast<int>(parse_uint().get_si());
      expo[v] += k;
      return;
    }
    if (s[pos] == 'i' && ring != Ring::Q) {
      ++pos;
      coeff *= GaussianRational::unit_i();
      return;
    }
    if (isdigit(static_cast<unsigned char>(s[pos]))) {
      mpz_class n = parse_uint();
      mpz_class d = 1;
      if (take('/')) d = parse_uint();
      coeff *= GaussianRational(GaussianInt(n), d);
      if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        coeff *= GaussianRational::unit_i();
      }
      return;
    }
    fail(std::string("unexpected '") + s[pos] + "'");
  }

  MultiPoly parse() {
    MultiPoly p(ring, vars);
    skip_ws();
    if (pos >= s.size()) return p;
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      int sign = 1;
      while (true) {
        if (take('+')) continue;
        if (take('-')) {
          sign = -sign;
          continue;
        }
        break;
      }
      skip_ws();
      GaussianRational coeff(sign);
      Exponents expo(vars.size(), 0);
      parse_factor(coeff, expo);
      while (take('*')) parse_factor(coeff, expo);
      p.add_term(expo, coeff);
      skip_ws();
      if (pos < s.size() && s[pos] != '+' && s[pos] != '-') fail("expected + or -");
    }
    return p;
  }
};

std::string exp_string(const std::vector<std::string>& vars, const Exponents& e) {
  std::string s;
  for (size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[v];
    if (e[v] > 1) s += "^" + std::to_string(e[v]);
  }
  return s;
}

}  // namespace

MultiPoly parse_poly(Ring ring, const std::vector<std::string>& vars, const std::string& text) {
  PolyParser parser{text, 0, ring, vars};
  return parser.parse();
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // highest term first for display
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = to_string(c);
    std::string es = exp_string(p.vars(), e);
    bool neg = cs[0] == '-';
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    if (neg) cs = cs.substr(1);
    bool unit_coeff = (cs == "1") && !es.empty();
    bool composite = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
    if (composite && !es.empty()) cs = "(" + cs + ")";
    if (!unit_coeff) out += cs;
    if (!es.empty()) {
      if (!unit_coeff) out += "*";
      out += es;
    }
  }
  return out;
}

}  // namespace nlocus
