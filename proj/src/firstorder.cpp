#include "nlocus/firstorder.hpp"

#include <omp.h>

#include <algorithm>
#include <random>

namespace nlocus {

ZeroLocusEquations zero_locus_equations(const FirstOrderOp& op) {
  if (op.is_zero()) throw ExactError("zero first-order operator");
  return {delta_of_invariant(op, WhichInvariant::S), delta_of_invariant(op, WhichInvariant::T)};
}

bool first_order_membership(const FirstOrderOp& op, const Section& b_in) {
  Section b = b_in.convention == Convention::Salmon ? b_in
                                                    : convert_convention(b_in, Convention::Salmon);
  if (aronhold(b).Delta.is_zero())
    throw ExactError("first-order membership needs a smooth section");
  ZeroLocusEquations eqs = zero_locus_equations(op);
  std::vector<GaussianRational> pt;
  for (const auto& d : salmon_degrees()) pt.push_back(b.coeff(d));
  return poly_eval(eqs.dS, pt).is_zero() && poly_eval(eqs.dT, pt).is_zero();
}

DiffOp to_diffop(const FirstOrderOp& op) {
  const auto coords = coordinate_order(2);
  std::map<std::vector<int>, GaussianRational> terms;
  for (const auto& [I, lam] : op.lambda) {
    if (lam.is_zero()) continue;
    auto it = std::find(coords.begin(), coords.end(), I);
    if (it == coords.end()) throw ExactError("not a cubic multidegree");
    std::vector<int> alpha(coords.size(), 0);
    alpha[it - coords.begin()] = 1;
    terms[alpha] = lam / salmon_scale(I);
  }
  return DiffOp::from_terms(2, terms);
}

namespace {

constexpr size_t kNumCoords = 10;

struct PlaneSpec {
  std::vector<GaussianRational> b0, u, v;
  bool line = false;  // v identically zero
};

std::vector<GaussianRational> section_salmon_coords(const Section& s) {
  if (s.m != 2) throw ExactError("plane sections must have m = 2");
  Section conv = s.convention == Convention::Salmon ? s : convert_convention(s, Convention::Salmon);
  std::vector<GaussianRational> out;
  for (const auto& d : salmon_degrees()) out.push_back(conv.coeff(d));
  return out;
}

bool all_zero(const std::vector<GaussianRational>& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& c) { return c.is_zero(); });
}

PlaneSpec random_plane(std::uint64_t seed, int trial) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0x517CC1B727220A95ULL * (trial + 1));
  std::uniform_int_distribution<int> dist(-9, 9);
  auto draw = [&](bool nonzero) {
    std::vector<GaussianRational> out(kNumCoords);
    do {
      for (auto& c : out) c = GaussianRational(dist(rng));
    } while (nonzero && all_zero(out));
    return out;
  };
  PlaneSpec pl;
  pl.b0 = draw(false);
  pl.u = draw(true);
  pl.v = draw(true);
  return pl;
}

const std::vector<std::string>& st_vars() {
  static const std::vector<std::string> vars = {"s", "t"};
  return vars;
}

MultiPoly restrict_to_plane(const MultiPoly& p, const PlaneSpec& pl) {
  std::vector<MultiPoly> images;
  for (size_t k = 0; k < kNumCoords; ++k) {
    MultiPoly im = MultiPoly::constant(Ring::Qi, st_vars(), pl.b0[k]);
    im.add_term({1, 0}, pl.u[k]);
    im.add_term({0, 1}, pl.v[k]);
    images.push_back(std::move(im));
  }
  return poly_substitute(p, images);
}

// dense univariate coefficient list (low to high) of a polynomial that only
// involves variable `var`
std::vector<GaussianRational> unicoeffs(const MultiPoly& p, size_t var) {
  std::vector<GaussianRational> out(static_cast<size_t>(std::max(p.degree_in(var), 0)) + 1);
  for (const auto& [e, c] : p.terms()) {
    for (size_t v = 0; v < e.size(); ++v)
      if (v != var && e[v] != 0) throw ExactError("polynomial is not univariate");
    out[e[var]] = c;
  }
  return out;
}

void uni_trim(std::vector<GaussianRational>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int uni_deg(const std::vector<GaussianRational>& a) { return static_cast<int>(a.size()) - 1; }

// remainder of a by b (b nonzero)
std::vector<GaussianRational> uni_mod(std::vector<GaussianRational> a,
                                      const std::vector<GaussianRational>& b) {
  while (uni_deg(a) >= uni_deg(b)) {
    GaussianRational q = a.back() / b.back();
    int shift = uni_deg(a) - uni_deg(b);
    for (int k = 0; k <= uni_deg(b); ++k) a[k + shift] -= q * b[k];
    a.pop_back();
    uni_trim(a);
    if (a.empty()) break;
  }
  return a;
}

std::vector<GaussianRational> uni_gcd(std::vector<GaussianRational> a,
                                      std::vector<GaussianRational> b) {
  uni_trim(a);
  uni_trim(b);
  while (!b.empty()) {
    auto r = uni_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    GaussianRational lead = a.back();
    for (auto& c : a) c = c / lead;
  }
  return a;
}

std::vector<MpComplex> to_mpc_coeffs(const std::vector<GaussianRational>& c, mp_bitcnt_t prec) {
  std::vector<MpComplex> out;
  out.reserve(c.size());
  for (const auto& v : c) out.push_back(to_mpc(v, prec));
  return out;
}

MpComplex eval_complex(const MultiPoly& p, const std::vector<MpComplex>& coords,
                       mp_bitcnt_t prec) {
  MpComplex acc(prec);
  for (const auto& [e, c] : p.terms()) {
    MpComplex t = to_mpc(c, prec);
    for (size_t v = 0; v < e.size(); ++v)
      for (int k = 0; k < e[v]; ++k) t = t * coords[v];
    acc = acc + t;
  }
  return acc;
}

// sum |c| prod |coord|^e, the evaluation in absolute values
mpf_class eval_scale(const MultiPoly& p, const std::vector<mpf_class>& mags, mp_bitcnt_t prec) {
  mpf_class acc(0, prec);
  for (const auto& [e, c] : p.terms()) {
    mpf_class t = to_mpc(c, prec).abs();
    for (size_t v = 0; v < e.size(); ++v)
      for (int k = 0; k < e[v]; ++k) t *= mags[v];
    acc += t;
  }
  return acc;
}

// coefficients of p (in vars s,t) as a polynomial in t, each evaluated at s*
std::vector<MpComplex> t_slice(const MultiPoly& p, const MpComplex& s_val, mp_bitcnt_t prec) {
  int dt = std::max(p.degree_in(1), 0);
  std::vector<MpComplex> out(static_cast<size_t>(dt) + 1, MpComplex(prec));
  for (const auto& [e, c] : p.terms()) {
    MpComplex t = to_mpc(c, prec);
    for (int k = 0; k < e[0]; ++k) t = t * s_val;
    out[e[1]] = out[e[1]] + t;
  }
  return out;
}

struct ExactCandidate {
  GaussianRational s, t;
};

std::optional<GaussianRational> reconstruct_gq(const MpComplex& z, mp_bitcnt_t prec) {
  mpz_class bound = 1000000;
  mpf_class tol(1, prec);
  tol >>= prec / 2;
  auto re = reconstruct_rational(z.re, bound, tol);
  if (!re) return std::nullopt;
  auto im = reconstruct_rational(z.im, bound, tol);
  if (!im) return std::nullopt;
  mpz_class den;
  mpz_lcm(den.get_mpz_t(), re->get_den().get_mpz_t(), im->get_den().get_mpz_t());
  return GaussianRational(GaussianInt(re->get_num() * (den / re->get_den()),
                                      im->get_num() * (den / im->get_den())),
                          den);
}

struct TrialContext {
  const ZeroLocusEquations& eqs;
  const SearchOptions& opts;
  mp_bitcnt_t prec;
  mpf_class tol, floor;
};

std::optional<SearchWitness> test_candidate(const TrialContext& ctx, const PlaneSpec& pl,
                                            const MpComplex& s_val, const MpComplex& t_val,
                                            int trial) {
  const mp_bitcnt_t prec = ctx.prec;
  std::vector<MpComplex> coords(kNumCoords, MpComplex(prec));
  std::vector<mpf_class> mags;
  for (size_t k = 0; k < kNumCoords; ++k) {
    coords[k] = to_mpc(pl.b0[k], prec) + s_val * to_mpc(pl.u[k], prec);
    if (!pl.line) coords[k] = coords[k] + t_val * to_mpc(pl.v[k], prec);
    mags.push_back(coords[k].abs());
  }

  const auto& inv = aronhold_invariants();
  mpf_class one(1, prec);
  mpf_class scale_S = eval_scale(inv.S, mags, prec);
  mpf_class scale_T = eval_scale(inv.T, mags, prec);
  MpComplex S_val = eval_complex(inv.S, coords, prec);
  MpComplex T_val = eval_complex(inv.T, coords, prec);
  MpComplex disc = MpComplex{mpf_class(64, prec), mpf_class(0, prec)} * S_val * S_val * S_val -
                   T_val * T_val;
  mpf_class disc_scale = 64 * scale_S * scale_S * scale_S + scale_T * scale_T;
  if (disc_scale < one) disc_scale = one;
  mpf_class scaled_disc = disc.abs() / disc_scale;
  if (scaled_disc < ctx.floor) return std::nullopt;

  mpf_class sS = eval_scale(ctx.eqs.dS, mags, prec);
  mpf_class sT = eval_scale(ctx.eqs.dT, mags, prec);
  if (sS < one) sS = one;
  if (sT < one) sT = one;
  mpf_class rS = eval_complex(ctx.eqs.dS, coords, prec).abs() / sS;
  mpf_class rT = eval_complex(ctx.eqs.dT, coords, prec).abs() / sT;
  if (rS > ctx.tol || rT > ctx.tol) return std::nullopt;

  SearchWitness w;
  w.plane_index = trial;
  w.residual_dS = to_double(rS);
  w.residual_dT = to_double(rT);
  w.scaled_disc = to_double(scaled_disc);
  for (const auto& z : coords) {
    w.point_strings.push_back(complex_string(z));
    w.point_approx.emplace_back(to_double(z.re), to_double(z.im));
  }

  // exact verification when the parameters reconstruct to rationals
  auto s_exact = reconstruct_gq(s_val, prec);
  auto t_exact = pl.line ? std::optional<GaussianRational>(GaussianRational())
                         : reconstruct_gq(t_val, prec);
  if (s_exact && t_exact) {
    std::vector<GaussianRational> exact_coords(kNumCoords);
    for (size_t k = 0; k < kNumCoords; ++k) {
      exact_coords[k] = pl.b0[k] + *s_exact * pl.u[k];
      if (!pl.line) exact_coords[k] += *t_exact * pl.v[k];
    }
    std::vector<GaussianRational> pt = exact_coords;
    bool zeros = poly_eval(ctx.eqs.dS, pt).is_zero() && poly_eval(ctx.eqs.dT, pt).is_zero();
    Section b(2, Convention::Salmon);
    for (size_t k = 0; k < kNumCoords; ++k) b.set(salmon_degrees()[k], exact_coords[k]);
    if (zeros && !aronhold(b).Delta.is_zero()) {
      w.exact = true;
      w.exact_point = b;
      w.residual_dS = 0;
      w.residual_dT = 0;
    }
  }
  return w;
}

std::optional<SearchWitness> run_trial(const TrialContext& ctx, const PlaneSpec& pl, int trial) {
  MultiPoly A = restrict_to_plane(ctx.eqs.dS, pl);
  MultiPoly B = restrict_to_plane(ctx.eqs.dT, pl);
  if (A.is_zero() || B.is_zero()) return std::nullopt;
  const mp_bitcnt_t prec = ctx.prec;

  if (pl.line) {
    auto g = uni_gcd(unicoeffs(A, 0), unicoeffs(B, 0));
    if (uni_deg(g) < 1) return std::nullopt;
    MpComplex t0(prec);
    for (const auto& s_root : unipoly_roots(to_mpc_coeffs(g, prec)))
      if (auto w = test_candidate(ctx, pl, s_root, t0, trial)) return w;
    return std::nullopt;
  }

  int da = A.degree_in(1), db = B.degree_in(1);
  MultiPoly R(Ring::Qi, st_vars());
  if (da <= 0 && db <= 0) return std::nullopt;  // both free of t: degenerate plane
  if (da <= 0)
    R = A;
  else if (db <= 0)
    R = B;
  else
    R = sylvester_resultant(A, B, 1);
  if (R.is_zero()) return std::nullopt;  // common component; resample
  if (R.is_constant()) return std::nullopt;

  auto s_roots = unipoly_roots(to_mpc_coeffs(unicoeffs(R, 0), prec));
  for (const auto& s_val : s_roots) {
    std::vector<MpComplex> t_candidates;
    for (const MultiPoly* P : {&A, &B}) {
      if (P->degree_in(1) <= 0) continue;
      auto coeffs = t_slice(*P, s_val, prec);
      // ill-conditioned when the leading coefficient nearly vanishes; the
      // residual test rejects bad candidates anyway
      for (auto& r : unipoly_roots(coeffs)) t_candidates.push_back(std::move(r));
    }
    for (const auto& t_val : t_candidates)
      if (auto w = test_candidate(ctx, pl, s_val, t_val, trial)) return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<SearchWitness> search_zero(const FirstOrderOp& op, const SearchOptions& opts) {
  if (op.is_zero()) throw ExactError("zero first-order operator");
  ZeroLocusEquations eqs = zero_locus_equations(op);
  mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(std::max(opts.precision_bits, 64));
  TrialContext ctx{eqs, opts, prec, mpf_class(opts.residual_tol, prec),
                   mpf_class(opts.disc_floor, prec)};

  std::optional<PlaneSpec> fixed;
  if (opts.plane) {
    PlaneSpec pl;
    pl.b0 = section_salmon_coords((*opts.plane)[0]);
    pl.u = section_salmon_coords((*opts.plane)[1]);
    pl.v = section_salmon_coords((*opts.plane)[2]);
    if (all_zero(pl.u)) throw ExactError("plane direction u must be nonzero");
    pl.line = all_zero(pl.v);
    fixed = std::move(pl);
  }

  int budget = fixed ? 1 : std::max(opts.budget, 1);
  int jobs = std::max(opts.jobs, 1);
  for (int base = 0; base < budget; base += jobs) {
    int count = std::min(jobs, budget - base);
    std::vector<std::optional<SearchWitness>> results(count);
#pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
    for (int k = 0; k < count; ++k) {
      PlaneSpec pl = fixed ? *fixed : random_plane(opts.seed, base + k);
      results[k] = run_trial(ctx, pl, base + k);
    }
    for (int k = 0; k < count; ++k)
      if (results[k]) return results[k];
  }
  return std::nullopt;
}

}  // namespace nlocus
