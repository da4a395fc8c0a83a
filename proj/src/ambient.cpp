#include "nlocus/ambient.hpp"

#include <algorithm>
#include <sstream>

#include "nlocus/invariants.hpp"

namespace nlocus {

std::vector<std::string> x_vars(int m) {
  std::vector<std::string> v;
  for (int k = 0; k <= m; ++k) v.push_back("x" + std::to_string(k));
  return v;
}

std::string multidegree_key(const Multidegree& d) {
  bool compact = std::all_of(d.begin(), d.end(), [](int v) { return v <= 9; });
  std::string s;
  for (size_t k = 0; k < d.size(); ++k) {
    if (!compact && k) s += ",";
    s += std::to_string(d[k]);
  }
  return s;
}

Multidegree parse_multidegree_key(const std::string& key, int m) {
  Multidegree d;
  if (key.find(',') != std::string::npos) {
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) d.push_back(std::stoi(part));
  } else {
    for (char c : key) {
      if (!isdigit(static_cast<unsigned char>(c))) throw ExactError("bad multidegree '" + key + "'");
      d.push_back(c - '0');
    }
  }
  if (static_cast<int>(d.size()) != m + 1)
    throw ExactError("multidegree '" + key + "' has wrong length for m=" + std::to_string(m));
  return d;
}

namespace {

void enumerate_degrees(int nvars, int total, Multidegree& prefix, std::vector<Multidegree>& out) {
  if (nvars == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int k = total; k >= 0; --k) {
    prefix.push_back(k);
    enumerate_degrees(nvars - 1, total - k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Multidegree> section_basis(int m, int k) {
  if (m < 1 || k < 0) throw ExactError("section_basis needs m >= 1, k >= 0");
  std::vector<Multidegree> out;
  Multidegree prefix;
  enumerate_degrees(m + 1, (m + 1) * k, prefix, out);
  return out;
}

std::vector<Multidegree> section_basis_upto(int m, int d) {
  std::vector<Multidegree> out;
  for (int k = 0; k <= d; ++k) {
    auto part = section_basis(m, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Multidegree> coordinate_order(int m) {
  if (m == 1) return {{1, 1}, {2, 0}, {0, 2}};
  if (m == 2)
    return {{1, 1, 1}, {3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 3, 0},
            {0, 2, 1}, {0, 1, 2}, {0, 0, 3}, {1, 0, 2}, {2, 0, 1}};
  return section_basis(m, 1);
}

GaussianRational Section::coeff(const Multidegree& d) const {
  auto it = coeffs.find(d);
  return it == coeffs.end() ? GaussianRational() : it->second;
}

void Section::set(const Multidegree& d, const GaussianRational& c) {
  if (static_cast<int>(d.size()) != m + 1 || exp_total(d) != m + 1)
    throw ExactError("section coefficient label must have total degree m+1");
  if (c.is_zero())
    coeffs.erase(d);
  else
    coeffs[d] = c;
}

std::vector<GaussianRational> Section::coordinates() const {
  std::vector<GaussianRational> out;
  for (const auto& d : coordinate_order(m)) out.push_back(coeff(d));
  return out;
}

Section Section::from_coordinates(int m, Convention conv, const std::vector<GaussianRational>& vals) {
  auto order = coordinate_order(m);
  if (vals.size() != order.size()) throw ExactError("coordinate vector has wrong length");
  Section b(m, conv);
  for (size_t k = 0; k < order.size(); ++k) b.set(order[k], vals[k]);
  return b;
}

Section Section::scaled(const GaussianRational& factor) const {
  Section r(m, convention);
  for (const auto& [d, c] : coeffs) r.set(d, c * factor);
  return r;
}

bool Section::operator==(const Section& b) const {
  return m == b.m && convention == b.convention && coeffs == b.coeffs;
}

MultiPoly universal_section_at(const Section& b) {
  if (b.convention != Convention::Monomial)
    throw ExactError("universal section needs monomial convention; convert first");
  MultiPoly f(Ring::Qi, x_vars(b.m));
  for (const auto& [d, c] : b.coeffs) f.add_term(d, c);
  return f;
}

DiffOp DiffOp::from_terms(int m, std::map<std::vector<int>, GaussianRational> in) {
  DiffOp op;
  op.m = m;
  const auto order = coordinate_order(m);
  op.fourier = MultiPoly(Ring::Qi, x_vars(m));
  for (auto& [alpha, c] : in) {
    if (alpha.size() != order.size()) throw ExactError("operator multi-index has wrong length");
    if (c.is_zero()) continue;
    op.terms[alpha] = c;
    op.degree = std::max(op.degree, exp_total(alpha));
    Multidegree e(m + 1, 0);
    for (size_t j = 0; j < alpha.size(); ++j)
      for (int v = 0; v <= m; ++v) e[v] += alpha[j] * order[j][v];
    op.fourier.add_term(std::move(e), c);
  }
  return op;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  if (a.m != b.m) throw ExactError("operator dimension mismatch");
  auto terms = a.terms;
  for (const auto& [alpha, c] : b.terms) {
    auto [it, fresh] = terms.try_emplace(alpha, c);
    if (!fresh) it->second += c;
  }
  return DiffOp::from_terms(a.m, std::move(terms));
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  if (a.m != b.m) throw ExactError("operator dimension mismatch");
  std::map<std::vector<int>, GaussianRational> terms;
  for (const auto& [aa, ca] : a.terms)
    for (const auto& [ab, cb] : b.terms) {
      std::vector<int> alpha(aa.size());
      for (size_t k = 0; k < alpha.size(); ++k) alpha[k] = aa[k] + ab[k];
      auto [it, fresh] = terms.try_emplace(alpha, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  return DiffOp::from_terms(a.m, std::move(terms));
}

std::string LieGenerator::name() const {
  switch (kind) {
    case Kind::OffDiag: return "x" + std::to_string(u) + "*d" + std::to_string(v);
    case Kind::SlDiag: return "h" + std::to_string(u);
    case Kind::EulerShift: return "E+1";
  }
  return "?";
}

std::vector<LieGenerator> lie_generators(int m) {
  if (m < 1) throw ExactError("lie_generators needs m >= 1");
  std::vector<LieGenerator> gens;
  for (int i = 0; i < m; ++i) gens.push_back({LieGenerator::Kind::SlDiag, i, i});
  for (int u = 0; u <= m; ++u)
    for (int v = 0; v <= m; ++v)
      if (u != v) gens.push_back({LieGenerator::Kind::OffDiag, u, v});
  gens.push_back({LieGenerator::Kind::EulerShift});
  return gens;
}

namespace {

// x_u * d/dx_v
MultiPoly raise_lower(const MultiPoly& p, int u, int v) {
  MultiPoly r(p.ring(), p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[v] == 0) continue;
    Exponents d = e;
    d[v] -= 1;
    d[u] += 1;
    r.add_term(std::move(d), c * GaussianRational(e[v]));
  }
  return r;
}

void check_in_R(const MultiPoly& r, int m) {
  for (const auto& [e, c] : r.terms())
    if (exp_total(e) % (m + 1) != 0)
      throw ExactError("element not in R: x-degree not divisible by m+1");
}

}  // namespace

MultiPoly apply_generator(const LieGenerator& g, const MultiPoly& r, const Section& b) {
  int m = b.m;
  check_in_R(r, m);
  MultiPoly f = universal_section_at(b);
  switch (g.kind) {
    case LieGenerator::Kind::OffDiag:
      return raise_lower(r, g.u, g.v) + r * raise_lower(f, g.u, g.v);
    case LieGenerator::Kind::SlDiag: {
      MultiPoly dr = raise_lower(r, g.u, g.u) - raise_lower(r, g.u + 1, g.u + 1);
      MultiPoly df = raise_lower(f, g.u, g.u) - raise_lower(f, g.u + 1, g.u + 1);
      return dr + r * df;
    }
    case LieGenerator::Kind::EulerShift: {
      // E(r) + f*r + r, with E scaling R_k by k
      MultiPoly er(r.ring(), r.vars());
      for (const auto& [e, c] : r.terms())
        er.add_term(e, c * GaussianRational(exp_total(e) / (m + 1) + 1));
      return er + r * f;
    }
  }
  throw ExactError("unreachable generator kind");
}

Smoothness smoothness(const Section& b) {
  if (b.m == 1) {
    return p1_discriminant(b).is_zero() ? Smoothness::Singular : Smoothness::Smooth;
  }
  if (b.m == 2) {
    Section s = convert_convention(b, Convention::Salmon);
    return aronhold(s).Delta.is_zero() ? Smoothness::Singular : Smoothness::Smooth;
  }
  return Smoothness::Unknown;
}

}  // namespace nlocus
