#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "phant/morphism.hpp"

namespace phant::testing {

inline IntMatrix big(const ResidueMatrix& m) { return matrix_cast<BigInt>(m); }

inline ResidueMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::int64_t lo,
                                   std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  ResidueMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline FiniteModule mod(std::int64_t n, std::vector<std::int64_t> factors) {
  return FiniteModule(Ring(n), std::move(factors));
}

inline ModuleMorphism morph(const FiniteModule& s, const FiniteModule& t, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  return ModuleMorphism(s, t, ResidueMatrix(rows));
}

}  // namespace phant::testing
