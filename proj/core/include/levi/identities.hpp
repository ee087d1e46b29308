#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "levi/backends.hpp"

namespace levi {

/// Row-major n x n integer matrix with 1-based element access.
class SquareMatrix {
public:
  /// entries.size() must equal n*n (dimension_error otherwise), n >= 2.
  SquareMatrix(int n, std::vector<std::int64_t> entries);

  static SquareMatrix identity(int n);
  static SquareMatrix diagonal(std::span<const std::int64_t> diag);

  int dimension() const noexcept { return n_; }
  std::int64_t at(int r, int c) const;  // 1-based
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

private:
  int n_ = 0;
  std::vector<std::int64_t> entries_;
};

/// eps_ij * eps_mn as a Kronecker-delta determinant: d_im d_jn - d_in d_jm.
/// All indices in {1, 2}.
int eps2_product_delta(int i, int j, int m, int n);

/// The same product contracted to elementary form: (j - i)(n - m).
int eps2_product_closed(int i, int j, int m, int n);

/// eps_ijk * eps_lmn as the 3x3 delta determinant. All indices in {1, 2, 3}.
int eps3_product_delta(int i, int j, int k, int l, int m, int n);

/// The contracted form (j-i)(k-i)(k-j)(m-l)(n-l)(n-m)/4, exact integers.
int eps3_product_closed(int i, int j, int k, int l, int m, int n);

/// Determinant by full epsilon expansion: sum over all n^n tuples of
/// eps(tuple) * prod_r x[r, tuple_r], with eps evaluated by the chosen
/// backend. Deliberately sweeps every tuple, not only permutations.
/// Throws std::overflow_error if a term or the sum leaves 64 bits.
std::int64_t det_via_epsilon(const SquareMatrix& x, const BackendId& backend);

/// Reference determinant by fraction-free (Bareiss) elimination.
std::int64_t determinant_elimination(const SquareMatrix& x);

}  // namespace levi
