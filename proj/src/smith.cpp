#include "phant/smith.hpp"

#include <utility>

namespace phant {
namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& a)
      : d_(a),
        u_(IntMatrix::identity(a.rows())),
        u_inv_(IntMatrix::identity(a.rows())),
        v_(IntMatrix::identity(a.cols())),
        v_inv_(IntMatrix::identity(a.cols())) {}

  SmithDecomposition run() {
    const std::size_t m = d_.rows();
    const std::size_t n = d_.cols();
    std::size_t t = 0;
    for (; t < m && t < n; ++t) {
      if (!reduce_block(t)) break;
    }
    return SmithDecomposition{std::move(u_), std::move(d_), std::move(v_), std::move(u_inv_),
                              std::move(v_inv_), t};
  }

 private:
  // Brings a pivot to (t, t) and clears its row and column, enforcing
  // divisibility against the rest of the block. Returns false if the block is zero.
  bool reduce_block(std::size_t t) {
    const std::size_t m = d_.rows();
    const std::size_t n = d_.cols();
    for (;;) {
      std::size_t pi = m, pj = n;
      BigInt best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const BigInt& x = d_(i, j);
          if (x == 0) continue;
          BigInt ax = abs(x);
          if (pi == m || ax < best) {
            best = std::move(ax);
            pi = i;
            pj = j;
          }
        }
      if (pi == m) return false;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      const BigInt p = d_(t, t);
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d_(i, t) == 0) continue;
        BigInt q = d_(i, t) / p;
        if (q != 0) add_row(i, t, -q);
        if (d_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d_(t, j) == 0) continue;
        BigInt q = d_(t, j) / p;
        if (q != 0) add_col(j, t, -q);
        if (d_(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column are clear; the pivot must divide the remaining block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d_(i, j) % p != 0) {
            add_row(t, i, BigInt(1));
            divides = false;
            break;
          }
      if (!divides) continue;

      if (p < 0) negate_row(t);
      return true;
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d_.cols(); ++j) std::swap(d_(a, j), d_(b, j));
    for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(a, j), u_(b, j));
    for (std::size_t i = 0; i < u_inv_.rows(); ++i) std::swap(u_inv_(i, a), u_inv_(i, b));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d_.rows(); ++i) std::swap(d_(i, a), d_(i, b));
    for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, a), v_(i, b));
    for (std::size_t j = 0; j < v_inv_.cols(); ++j) std::swap(v_inv_(a, j), v_inv_(b, j));
  }

  // row[dst] += c * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& c) {
    for (std::size_t j = 0; j < d_.cols(); ++j)
      if (d_(src, j) != 0) d_(dst, j) += c * d_(src, j);
    for (std::size_t j = 0; j < u_.cols(); ++j)
      if (u_(src, j) != 0) u_(dst, j) += c * u_(src, j);
    for (std::size_t i = 0; i < u_inv_.rows(); ++i)
      if (u_inv_(i, dst) != 0) u_inv_(i, src) -= c * u_inv_(i, dst);
  }

  // col[dst] += c * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& c) {
    for (std::size_t i = 0; i < d_.rows(); ++i)
      if (d_(i, src) != 0) d_(i, dst) += c * d_(i, src);
    for (std::size_t i = 0; i < v_.rows(); ++i)
      if (v_(i, src) != 0) v_(i, dst) += c * v_(i, src);
    for (std::size_t j = 0; j < v_inv_.cols(); ++j)
      if (v_inv_(dst, j) != 0) v_inv_(src, j) -= c * v_inv_(dst, j);
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(r, j) = -d_(r, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(r, j) = -u_(r, j);
    for (std::size_t i = 0; i < u_inv_.rows(); ++i) u_inv_(i, r) = -u_inv_(i, r);
  }

  IntMatrix d_, u_, u_inv_, v_, v_inv_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) { return SmithReducer(a).run(); }

}  // namespace phant
