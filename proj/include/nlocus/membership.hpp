#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nlocus/ambient.hpp"
#include "nlocus/linalg.hpp"

namespace nlocus {

/// Matrix entry affine in the section coordinates: c0 + sum_I c_I a_I.
struct AffineForm {
  GaussianRational c0;
  std::map<int, GaussianRational> lin;  // coordinate index -> coefficient

  bool is_zero() const { return c0.is_zero() && lin.empty(); }
  void add_const(const GaussianRational& c);
  void add_lin(int coord, const GaussianRational& c);
};

/// The degree-d witness matrix M_d(a): rows indexed by the R_{<=d} monomial
/// basis, columns by (generator, R_{<=d-1} basis element), entries affine in
/// the coordinates a_I.
struct SymbolicMatrix {
  int m = 1, d = 1;
  std::vector<Multidegree> row_basis;
  std::vector<Multidegree> witness_basis;
  std::vector<LieGenerator> generators;
  struct ColumnKey {
    int generator;
    int witness;
  };
  std::vector<ColumnKey> columns;  // generator-major order
  std::vector<AffineForm> entries;
  std::map<Multidegree, int> row_lookup;

  int rows() const { return static_cast<int>(row_basis.size()); }
  int cols() const { return static_cast<int>(columns.size()); }
  AffineForm& at(int r, int c) { return entries[static_cast<size_t>(r) * cols() + c]; }
  const AffineForm& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols() + c]; }
  int row_index(const Multidegree& e) const;
};

struct MembershipOptions {
  int pad_degree = -1;         // witness-degree bound override (>= deg delta)
  bool assume_smooth = false;  // callers vouch for smoothness when m >= 3
  int max_rows = 20000;        // guardrail on dim R_{<=d}
  Kernel kernel = Kernel::Parallel;
};

SymbolicMatrix build_Md(int m, int d, int max_rows = 20000);

/// Substitutes b into every affine entry (monomial convention).
QiMatrix evaluate_Md(const SymbolicMatrix& M, const Section& b);

/// Builds M_d(b) directly through apply_generator; independent code path
/// kept as an oracle for the symbolic build.
QiMatrix build_Md_at(int m, int d, const Section& b, int max_rows = 20000);

/// Coordinates of the Fourier polynomial of delta in the R_{<=d} row basis.
std::vector<GaussianRational> theta_vector(const SymbolicMatrix& M, const DiffOp& delta);

struct MembershipCertificate {
  int d = 0;
  int rank_M = 0;
  int rank_aug = 0;
  bool member = false;
  std::vector<GaussianRational> theta;
  std::optional<std::vector<GaussianRational>> witness;  // indexed like columns
};

/// Decides delta-membership at b by the rank condition
/// rk M_d(b) = rk [M_d(b) | Theta]; returns a witness when member.
MembershipCertificate membership(const Section& b, const DiffOp& delta,
                                 const MembershipOptions& opt = {});

/// Replays a witness through apply_generator and checks the polynomial
/// identity h = sum_i g_i(r_i) + (g_i f) r_i exactly; independent of the
/// elimination path.
bool verify_witness(const Section& b, const DiffOp& delta,
                    const std::vector<GaussianRational>& witness,
                    const MembershipOptions& opt = {});

/// dim R_{<=d} - rk M_d(b) at a smooth point.
int coinvariant_corank(const Section& b, int d, const MembershipOptions& opt = {});

struct StratumEntry {
  std::optional<int> rank;
  std::string error;
};

/// Rank table over a list of smooth points; per-point errors for singular
/// ones. Points may be evaluated concurrently (jobs > 1).
std::vector<StratumEntry> stratify(const std::vector<Section>& points, int d,
                                   const MembershipOptions& opt = {}, int jobs = 1);

/// Many-delta membership at a fixed (b, d): the rank and left kernel of
/// M_d(b) are computed once, and each verdict is the orthogonality test of
/// Theta against the kernel (equivalent to the rank condition).
class MembershipTable {
 public:
  MembershipTable(const Section& b, int d, const MembershipOptions& opt = {});

  int rank() const { return rank_; }
  int corank() const { return sym_.rows() - rank_; }
  int degree() const { return sym_.d; }
  bool member(const DiffOp& delta) const;

 private:
  SymbolicMatrix sym_;
  int rank_ = 0;
  std::vector<std::vector<GaussianInt>> nullvecs_;
};

}  // namespace nlocus
