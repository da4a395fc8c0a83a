#include "nlocus/linalg.hpp"

#include <omp.h>

namespace nlocus {

GiMatrix scale_rows_to_integer(const QiMatrix& m, std::vector<mpz_class>* row_factor) {
  GiMatrix out(m.rows, m.cols);
  if (row_factor) row_factor->assign(m.rows, 1);
  for (int r = 0; r < m.rows; ++r) {
    mpz_class l = 1;
    for (int c = 0; c < m.cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).den.get_mpz_t());
    for (int c = 0; c < m.cols; ++c) {
      const GaussianRational& q = m.at(r, c);
      mpz_class f = l / q.den;
      out.at(r, c) = GaussianInt(q.num.re * f, q.num.im * f);
    }
    if (row_factor) (*row_factor)[r] = l;
  }
  return out;
}

namespace {

// one Bareiss update: x <- (piv*x - c*y)/prev, division exact
inline void bareiss_update(GaussianInt& x, const GaussianInt& piv, const GaussianInt& c,
                           const GaussianInt& y, const GaussianInt& prev) {
  GaussianInt t = piv * x - c * y;
  x = gint_div_exact(t, prev);
}

void update_row(GiMatrix& m, int row, int pivot_row, int col, const GaussianInt& piv,
                const GaussianInt& prev) {
  GaussianInt c = m.at(row, col);
  if (c.is_zero()) {
    for (int j = col + 1; j < m.cols; ++j) {
      GaussianInt& x = m.at(row, j);
      if (!x.is_zero()) x = gint_div_exact(piv * x, prev);
    }
  } else {
    for (int j = col + 1; j < m.cols; ++j)
      bareiss_update(m.at(row, j), piv, c, m.at(pivot_row, j), prev);
    m.at(row, col) = GaussianInt();
  }
}

template <bool Parallel>
Echelon echelonize_impl(GiMatrix m, int pivot_limit) {
  Echelon e;
  if (pivot_limit < 0 || pivot_limit > m.cols) pivot_limit = m.cols;
  GaussianInt prev(1);
  int rank = 0;
  for (int col = 0; col < pivot_limit && rank < m.rows; ++col) {
    int pr = -1;
    for (int r = rank; r < m.rows; ++r)
      if (!m.at(r, col).is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(rank, j));
    GaussianInt piv = m.at(rank, col);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (int r = rank + 1; r < m.rows; ++r) update_row(m, r, rank, col, piv, prev);
    } else {
      for (int r = rank + 1; r < m.rows; ++r) update_row(m, r, rank, col, piv, prev);
    }
    prev = piv;
    e.pivot_cols.push_back(col);
    ++rank;
  }
  e.mat = std::move(m);
  e.rank = rank;
  return e;
}

}  // namespace

Echelon echelonize_serial(GiMatrix m, int pivot_limit) {
  return echelonize_impl<false>(std::move(m), pivot_limit);
}

Echelon echelonize_omp(GiMatrix m, int pivot_limit) {
  return echelonize_impl<true>(std::move(m), pivot_limit);
}

Echelon echelonize(GiMatrix m, Kernel kernel, int pivot_limit) {
  return kernel == Kernel::Serial ? echelonize_serial(std::move(m), pivot_limit)
                                  : echelonize_omp(std::move(m), pivot_limit);
}

int exact_rank(const GiMatrix& m, Kernel kernel) { return echelonize(m, kernel).rank; }

int exact_rank(const QiMatrix& m, Kernel kernel) {
  return exact_rank(scale_rows_to_integer(m), kernel);
}

std::optional<std::vector<GaussianRational>> solve_if_consistent(
    const QiMatrix& M, const std::vector<GaussianRational>& theta, Kernel kernel) {
  if (static_cast<int>(theta.size()) != M.rows) throw ExactError("rhs length mismatch");
  QiMatrix aug(M.rows, M.cols + 1);
  for (int r = 0; r < M.rows; ++r) {
    for (int c = 0; c < M.cols; ++c) aug.at(r, c) = M.at(r, c);
    aug.at(r, M.cols) = theta[r];
  }
  Echelon e = echelonize(scale_rows_to_integer(aug), kernel);
  for (int c : e.pivot_cols)
    if (c == M.cols) return std::nullopt;  // pivot in the rhs column

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
  return x;
}

std::vector<std::vector<GaussianInt>> left_nullspace(const QiMatrix& M, Kernel kernel) {
  std::vector<mpz_class> factors;
  GiMatrix scaled = scale_rows_to_integer(M, &factors);
  // augment with diag(row factors): elimination tracks covectors of the
  // original matrix, not the scaled one
  GiMatrix aug(M.rows, M.cols + M.rows);
  for (int r = 0; r < M.rows; ++r) {
    for (int c = 0; c < M.cols; ++c) aug.at(r, c) = scaled.at(r, c);
    aug.at(r, M.cols + r) = GaussianInt(factors[r]);
  }
  Echelon e = echelonize(std::move(aug), kernel, M.cols);

  std::vector<std::vector<GaussianInt>> basis;
  for (int r = e.rank; r < M.rows; ++r) {
    std::vector<GaussianInt> w(M.rows);
    GaussianInt content;
    for (int c = 0; c < M.rows; ++c) {
      w[c] = e.mat.at(r, M.cols + c);
      if (!w[c].is_zero())
        content = content.is_zero() ? gint_canonical(w[c]) : gint_gcd(content, w[c]);
    }
    if (content.is_zero()) continue;  // zero covector (cannot happen for honest input)
    if (!content.is_unit())
      for (auto& v : w) v = gint_div_exact(v, content);
    basis.push_back(std::move(w));
  }
  return basis;
}

}  // namespace nlocus
