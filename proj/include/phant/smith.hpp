#pragma once

#include <cstddef>

#include "phant/matrix.hpp"

namespace phant {

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... , zeros last.
/// The inverses of U and V are tracked alongside since every caller that
/// changes coordinates needs both directions.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix U_inv;
  IntMatrix V_inv;
  std::size_t rank = 0;

  [[nodiscard]] BigInt diagonal(std::size_t i) const {
    return i < D.rows() && i < D.cols() ? D(i, i) : BigInt(0);
  }
};

/// Pivot rule: smallest nonzero |entry| of the active block, ties to the
/// lowest (row, col). Deterministic, so D, U and V are reproducible.
[[nodiscard]] SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace phant
