#include "nlocus/membership.hpp"

#include <omp.h>

#include <algorithm>

#include "nlocus/invariants.hpp"

namespace nlocus {

void AffineForm::add_const(const GaussianRational& c) { c0 += c; }

void AffineForm::add_lin(int coord, const GaussianRational& c) {
  auto [it, fresh] = lin.try_emplace(coord, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) lin.erase(it);
  } else if (it->second.is_zero()) {
    lin.erase(it);
  }
}

int SymbolicMatrix::row_index(const Multidegree& e) const {
  auto it = row_lookup.find(e);
  if (it == row_lookup.end()) throw ExactError("monomial outside the R_{<=d} row basis");
  return it->second;
}

namespace {

mpz_class binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

void guard_dimension(int m, int d, int max_rows) {
  mpz_class dim = 0;
  for (int k = 0; k <= d; ++k) dim += binomial((m + 1) * k + m, m);
  if (dim > max_rows)
    throw ExactError("matrix guardrail: dim R_{<=d} = " + dim.get_str() + " exceeds " +
                     std::to_string(max_rows) + " rows");
}

// image of one variable monomial x^I under the derivation part of g
MultiPoly generator_coordinate_image(const LieGenerator& g, const Multidegree& I, int m) {
  MultiPoly mono(Ring::Qi, x_vars(m));
  mono.add_term(I, GaussianRational(1));
  Section unit(m, Convention::Monomial);
  unit.set(I, GaussianRational(1));
  if (g.kind == LieGenerator::Kind::EulerShift) return mono;
  // r = 1 gives g(1) + g(f) = g(x^I) at the coordinate section
  MultiPoly one = MultiPoly::constant(Ring::Qi, x_vars(m), GaussianRational(1));
  return apply_generator(g, one, unit);
}

}  // namespace

SymbolicMatrix build_Md(int m, int d, int max_rows) {
  if (m < 1 || d < 0) throw ExactError("build_Md needs m >= 1, d >= 0");
  guard_dimension(m, d, max_rows);

  SymbolicMatrix M;
  M.m = m;
  M.d = d;
  M.row_basis = section_basis_upto(m, d);
  M.witness_basis = section_basis_upto(m, d - 1);
  M.generators = lie_generators(m);
  for (int gi = 0; gi < static_cast<int>(M.generators.size()); ++gi)
    for (int wj = 0; wj < static_cast<int>(M.witness_basis.size()); ++wj)
      M.columns.push_back({gi, wj});
  M.entries.assign(static_cast<size_t>(M.rows()) * M.cols(), AffineForm{});
  for (int r = 0; r < M.rows(); ++r) M.row_lookup[M.row_basis[r]] = r;

  const auto coords = coordinate_order(m);
  const auto xv = x_vars(m);

  for (int gi = 0; gi < static_cast<int>(M.generators.size()); ++gi) {
    const LieGenerator& g = M.generators[gi];
    // x^I images of the derivation part, reused across witness monomials
    std::vector<MultiPoly> images;
    for (const auto& I : coords) images.push_back(generator_coordinate_image(g, I, m));

    for (int wj = 0; wj < static_cast<int>(M.witness_basis.size()); ++wj) {
      const Multidegree& e = M.witness_basis[wj];
      int col = gi * static_cast<int>(M.witness_basis.size()) + wj;
      int k = exp_total(e) / (m + 1);

      // constant part: g(e) for derivations, (k+1) e for the Euler shift
      if (g.kind == LieGenerator::Kind::EulerShift) {
        M.at(M.row_index(e), col).add_const(GaussianRational(k + 1));
      } else {
        MultiPoly mono(Ring::Qi, xv);
        mono.add_term(e, GaussianRational(1));
        Section zero_section(m, Convention::Monomial);
        MultiPoly ge = apply_generator(g, mono, zero_section);
        for (const auto& [ee, c] : ge.terms()) M.at(M.row_index(ee), col).add_const(c);
      }

      // linear part: e * g(x^I) contributes to the a_I slope
      for (size_t ci = 0; ci < coords.size(); ++ci) {
        for (const auto& [ie, c] : images[ci].terms()) {
          Multidegree shifted(ie.size());
          for (size_t v = 0; v < ie.size(); ++v) shifted[v] = ie[v] + e[v];
          M.at(M.row_index(shifted), col).add_lin(static_cast<int>(ci), c);
        }
      }
    }
  }
  return M;
}

QiMatrix evaluate_Md(const SymbolicMatrix& M, const Section& b) {
  if (b.m != M.m) throw ExactError("section dimension mismatch");
  if (b.convention != Convention::Monomial)
    throw ExactError("evaluate_Md needs monomial convention; convert first");
  std::vector<GaussianRational> coords = b.coordinates();
  QiMatrix out(M.rows(), M.cols());
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c) {
      const AffineForm& f = M.at(r, c);
      GaussianRational v = f.c0;
      for (const auto& [ci, slope] : f.lin) v += slope * coords[ci];
      out.at(r, c) = v;
    }
  return out;
}

QiMatrix build_Md_at(int m, int d, const Section& b, int max_rows) {
  guard_dimension(m, d, max_rows);
  auto rows = section_basis_upto(m, d);
  auto wit = section_basis_upto(m, d - 1);
  auto gens = lie_generators(m);
  std::map<Multidegree, int> lookup;
  for (size_t r = 0; r < rows.size(); ++r) lookup[rows[r]] = static_cast<int>(r);

  QiMatrix out(static_cast<int>(rows.size()), static_cast<int>(gens.size() * wit.size()));
  const auto xv = x_vars(m);
  int col = 0;
  for (const auto& g : gens)
    for (const auto& e : wit) {
      MultiPoly mono(Ring::Qi, xv);
      mono.add_term(e, GaussianRational(1));
      MultiPoly img = apply_generator(g, mono, b);
      for (const auto& [ee, c] : img.terms()) out.at(lookup.at(ee), col) = c;
      ++col;
    }
  return out;
}

std::vector<GaussianRational> theta_vector(const SymbolicMatrix& M, const DiffOp& delta) {
  if (delta.m != M.m) throw ExactError("operator dimension mismatch");
  if (delta.degree > M.d) throw ExactError("operator degree exceeds the matrix degree bound");
  std::vector<GaussianRational> theta(M.rows());
  for (const auto& [e, c] : delta.fourier.terms()) theta[M.row_index(e)] = c;
  return theta;
}

namespace {

Section to_monomial(const Section& b) {
  if (b.convention == Convention::Monomial) return b;
  return convert_convention(b, Convention::Monomial);
}

void require_smooth(const Section& b, const MembershipOptions& opt) {
  switch (smoothness(b)) {
    case Smoothness::Smooth:
      return;
    case Smoothness::Singular:
      throw ExactError("membership rank test requires a nonsingular section");
    case Smoothness::Unknown:
      if (!opt.assume_smooth)
        throw ExactError("smoothness unknown for m >= 3; pass assume_smooth to proceed");
      return;
  }
}

int padded_degree(const DiffOp& delta, const MembershipOptions& opt) {
  int d = delta.degree;
  if (opt.pad_degree >= 0) {
    if (opt.pad_degree < d) throw ExactError("pad_degree below operator degree");
    d = opt.pad_degree;
  }
  return d;
}

}  // namespace

MembershipCertificate membership(const Section& b_in, const DiffOp& delta,
                                 const MembershipOptions& opt) {
  Section b = to_monomial(b_in);
  if (b.m != delta.m) throw ExactError("section/operator dimension mismatch");
  require_smooth(b, opt);

  int d = padded_degree(delta, opt);
  SymbolicMatrix sym = build_Md(b.m, d, opt.max_rows);
  QiMatrix M = evaluate_Md(sym, b);
  MembershipCertificate cert;
  cert.d = d;
  cert.theta = theta_vector(sym, delta);

  QiMatrix aug(M.rows, M.cols + 1);
  for (int r = 0; r < M.rows; ++r) {
    for (int c = 0; c < M.cols; ++c) aug.at(r, c) = M.at(r, c);
    aug.at(r, M.cols) = cert.theta[r];
  }
  Echelon e = echelonize(scale_rows_to_integer(aug), opt.kernel);
  cert.rank_aug = e.rank;
  cert.rank_M = 0;
  for (int c : e.pivot_cols)
    if (c < M.cols) ++cert.rank_M;
  cert.member = cert.rank_M == cert.rank_aug;

  if (cert.member) {
    std::vector<GaussianRational> x(M.cols);
    for (int k = e.rank - 1; k >= 0; --k) {
      int p = e.pivot_cols[k];
      GaussianRational acc(e.mat.at(k, M.cols));
      for (int j = p + 1; j < M.cols; ++j) {
        if (e.mat.at(k, j).is_zero() || x[j].is_zero()) continue;
        acc -= GaussianRational(e.mat.at(k, j)) * x[j];
      }
      x[p] = acc / GaussianRational(e.mat.at(k, p));
    }
    cert.witness = std::move(x);
  }
  return cert;
}

bool verify_witness(const Section& b_in, const DiffOp& delta,
                    const std::vector<GaussianRational>& witness, const MembershipOptions& opt) {
  Section b = to_monomial(b_in);
  int d = padded_degree(delta, opt);
  auto wit = section_basis_upto(b.m, d - 1);
  auto gens = lie_generators(b.m);
  if (witness.size() != gens.size() * wit.size()) throw ExactError("witness length mismatch");

  const auto xv = x_vars(b.m);
  MultiPoly sum(Ring::Qi, xv);
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    MultiPoly r(Ring::Qi, xv);
    for (size_t wj = 0; wj < wit.size(); ++wj) {
      const GaussianRational& c = witness[gi * wit.size() + wj];
      if (!c.is_zero()) r.add_term(wit[wj], c);
    }
    if (r.is_zero()) continue;
    sum = sum + apply_generator(gens[gi], r, b);
  }
  return sum == delta.fourier;
}

int coinvariant_corank(const Section& b_in, int d, const MembershipOptions& opt) {
  Section b = to_monomial(b_in);
  require_smooth(b, opt);
  SymbolicMatrix sym = build_Md(b.m, d, opt.max_rows);
  QiMatrix M = evaluate_Md(sym, b);
  return sym.rows() - exact_rank(M, opt.kernel);
}

std::vector<StratumEntry> stratify(const std::vector<Section>& points, int d,
                                   const MembershipOptions& opt, int jobs) {
  std::vector<StratumEntry> out(points.size());
  if (points.empty()) return out;
  for (const auto& p : points)
    if (p.m != points[0].m) throw ExactError("stratify points must share one ambient dimension");
  SymbolicMatrix sym = build_Md(points[0].m, d, opt.max_rows);

#pragma omp parallel for schedule(dynamic) num_threads(std::max(jobs, 1)) if (jobs > 1)
  for (size_t i = 0; i < points.size(); ++i) {
    try {
      Section b = to_monomial(points[i]);
      require_smooth(b, opt);
      QiMatrix M = evaluate_Md(sym, b);
      out[i].rank = exact_rank(M, opt.kernel);
    } catch (const std::exception& ex) {
      out[i].error = ex.what();
    }
  }
  return out;
}

MembershipTable::MembershipTable(const Section& b_in, int d, const MembershipOptions& opt) {
  Section b = to_monomial(b_in);
  require_smooth(b, opt);
  sym_ = build_Md(b.m, d, opt.max_rows);
  QiMatrix M = evaluate_Md(sym_, b);

  std::vector<mpz_class> factors;
  GiMatrix scaled = scale_rows_to_integer(M, &factors);
  GiMatrix aug(M.rows, M.cols + M.rows);
  for (int r = 0; r < M.rows; ++r) {
    for (int c = 0; c < M.cols; ++c) aug.at(r, c) = scaled.at(r, c);
    aug.at(r, M.cols + r) = GaussianInt(factors[r]);
  }
  Echelon e = echelonize(std::move(aug), opt.kernel, M.cols);
  rank_ = e.rank;
  for (int r = e.rank; r < M.rows; ++r) {
    std::vector<GaussianInt> w(M.rows);
    GaussianInt content;
    for (int c = 0; c < M.rows; ++c) {
      w[c] = e.mat.at(r, M.cols + c);
      if (!w[c].is_zero()) content = content.is_zero() ? gint_canonical(w[c]) : gint_gcd(content, w[c]);
    }
    if (!content.is_unit() && !content.is_zero())
      for (auto& v : w) v = gint_div_exact(v, content);
    nullvecs_.push_back(std::move(w));
  }
}

bool MembershipTable::member(const DiffOp& delta) const {
  std::vector<GaussianRational> theta = theta_vector(sym_, delta);
  for (const auto& w : nullvecs_) {
    GaussianRational dot;
    for (size_t r = 0; r < w.size(); ++r) {
      if (w[r].is_zero() || theta[r].is_zero()) continue;
      dot += GaussianRational(w[r]) * theta[r];
    }
    if (!dot.is_zero()) return false;
  }
  return true;
}

}  // namespace nlocus
