#pragma once

// Brute-force reference computations. Everything here works by enumeration
// or by textbook formulas and never calls the SNF or congruence solver, so
// it can serve as an independent check of the library routes.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "phant/matrix.hpp"
#include "phant/morphism.hpp"

namespace phant::oracle {

/// d_k = gcd(k x k minors) / gcd((k-1) x (k-1) minors), k = 1..min(rows, cols).
[[nodiscard]] std::vector<BigInt> minor_gcd_invariants(const IntMatrix& a);

/// Exact determinant by fraction-free elimination.
[[nodiscard]] BigInt determinant(const IntMatrix& a);

/// First x in lexicographic order over [0, n)^cols with A x = b mod n.
[[nodiscard]] std::optional<std::vector<std::int64_t>> exhaustive_solve_mod(const ResidueMatrix& a,
                                                                            const std::vector<std::int64_t>& b,
                                                                            std::int64_t n);

/// All x in [0, n)^cols with A x = 0 mod n.
[[nodiscard]] std::set<std::vector<std::int64_t>> exhaustive_kernel_mod(const ResidueMatrix& a, std::int64_t n);

/// Closure of a generating set under addition mod n.
[[nodiscard]] std::set<std::vector<std::int64_t>> additive_span_mod(const std::vector<std::vector<std::int64_t>>& gens,
                                                                    std::size_t length, std::int64_t n);

/// Every matrix (entries below the target orders) that defines a
/// homomorphism, checked on each generator's order.
[[nodiscard]] std::set<std::vector<std::int64_t>> exhaustive_hom_matrices(const FiniteModule& m,
                                                                          const FiniteModule& n);

/// Flattened matrices of the subgroup of Hom generated by `gens`.
[[nodiscard]] std::set<std::vector<std::int64_t>> morphism_span(const std::vector<ModuleMorphism>& gens,
                                                                const FiniteModule& m, const FiniteModule& n);

[[nodiscard]] std::vector<std::int64_t> flatten(const ModuleMorphism& f);

/// All elements of M as coordinate vectors, lexicographic.
[[nodiscard]] std::vector<Element> all_elements(const FiniteModule& m);

/// Subgroup generated by `gens`, as a set of coordinate vectors.
[[nodiscard]] std::set<Element> subgroup(const FiniteModule& m, const std::vector<Element>& gens);

/// S cap dM == dS for every divisor d, computed on element sets.
[[nodiscard]] bool pure_by_elements(const FiniteModule& m, const std::vector<Element>& gens);

/// Whether some r : M -> S has r(s) = s for all s in S, searching Hom(M, M)
/// for an idempotent-like map with image inside S fixing S pointwise.
[[nodiscard]] bool summand_by_search(const FiniteModule& m, const std::vector<Element>& gens,
                                     std::uint64_t hom_limit = 1u << 16);

/// f = h g for some g : M -> P, h : P -> N, searching both Hom sets.
[[nodiscard]] bool factors_through_by_search(const ModuleMorphism& f, const FiniteModule& p,
                                             std::uint64_t hom_limit = 1u << 14);

/// Element-level bijectivity.
[[nodiscard]] bool bijective_by_elements(const ModuleMorphism& f);

}  // namespace phant::oracle
