#pragma once

#include <optional>
#include <vector>

#include "nlocus/gaussian.hpp"

namespace nlocus {

/// Dense row-major matrix over Z[i].
struct GiMatrix {
  int rows = 0, cols = 0;
  std::vector<GaussianInt> a;

  GiMatrix() = default;
  GiMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  GaussianInt& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const GaussianInt& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

/// Dense row-major matrix over Q(i).
struct QiMatrix {
  int rows = 0, cols = 0;
  std::vector<GaussianRational> a;

  QiMatrix() = default;
  QiMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  GaussianRational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const GaussianRational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

/// Clears denominators row by row; preserves rank and solution sets of
/// augmented systems. The factor of row r is written to row_factor[r].
GiMatrix scale_rows_to_integer(const QiMatrix& m, std::vector<mpz_class>* row_factor = nullptr);

enum class Kernel { Serial, Parallel };

/// Row echelon form from fraction-free (Bareiss) elimination with
/// first-nonzero pivoting in column order.
struct Echelon {
  GiMatrix mat;
  std::vector<int> pivot_cols;  // one per pivot row, strictly increasing
  int rank = 0;
};

/// Serial reference elimination. Pivots are searched in columns
/// [0, pivot_limit) only; updates always span the whole row.
Echelon echelonize_serial(GiMatrix m, int pivot_limit = -1);

/// OpenMP elimination; row updates of each pivot step run in parallel.
/// Bit-identical to echelonize_serial by construction.
Echelon echelonize_omp(GiMatrix m, int pivot_limit = -1);

Echelon echelonize(GiMatrix m, Kernel kernel, int pivot_limit = -1);

int exact_rank(const GiMatrix& m, Kernel kernel = Kernel::Parallel);
int exact_rank(const QiMatrix& m, Kernel kernel = Kernel::Parallel);

/// One solution of M x = theta with free variables set to zero, when the
/// system is consistent.
std::optional<std::vector<GaussianRational>> solve_if_consistent(
    const QiMatrix& M, const std::vector<GaussianRational>& theta, Kernel kernel = Kernel::Parallel);

/// Basis of the left kernel {w | w^T M = 0}, content-normalized.
std::vector<std::vector<GaussianInt>> left_nullspace(const QiMatrix& M,
                                                     Kernel kernel = Kernel::Parallel);

}  // namespace nlocus
