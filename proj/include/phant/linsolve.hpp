#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "phant/matrix.hpp"

namespace phant {

/// Integer solution of A x = b, or nullopt.
[[nodiscard]] std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Z-basis of {x in Z^cols : A x = 0}.
[[nodiscard]] std::vector<IntVector> integer_kernel(const IntMatrix& a);

/// Some x in Z^cols with (A x)_r = b_r (mod moduli_r) for every row r, or nullopt.
/// A zero modulus means exact equality. Solved as the Z-system [A | diag(m)].
[[nodiscard]] std::optional<IntVector> solve_congruences(const IntMatrix& a, const IntVector& b,
                                                         const IntVector& moduli);

/// Generators of the lattice {x in Z^cols : A x = 0 (mod moduli)}.
[[nodiscard]] std::vector<IntVector> congruence_kernel(const IntMatrix& a, const IntVector& moduli);

/// A witness x in [0, n)^cols with A x = b (mod n), or nullopt.
[[nodiscard]] std::optional<std::vector<std::int64_t>> solve_mod(const IntMatrix& a, const IntVector& b,
                                                                 std::int64_t n);

/// Generators of {x in (Z/n)^cols : A x = 0 (mod n)}; zero generators are dropped.
[[nodiscard]] std::vector<std::vector<std::int64_t>> solution_space_mod(const IntMatrix& a, std::int64_t n);

}  // namespace phant
