#pragma once

#include <cstddef>
#include <optional>

#include "phant/constructions.hpp"

namespace phant {

/// Over Z/n = prod Z/p^k, M is projective iff the p-part of every invariant
/// factor is 1 or the full p^k.
[[nodiscard]] bool is_projective(const FiniteModule& m);

/// Canonical epimorphism (Z/n)^rank ->> M, e_i -> e_i.
[[nodiscard]] ModuleMorphism free_cover(const FiniteModule& m);

/// Whether free_cover(m) admits a section. Equivalent to is_projective.
[[nodiscard]] bool free_cover_splits(const FiniteModule& m);

/// S cap dM == dS for every divisor d of n.
[[nodiscard]] bool is_pure_submodule(const Submodule& s, const FiniteModule& m);

struct Summand {
  FiniteModule module;          // canonical form of S
  ModuleMorphism inclusion;     // S -> M
  ModuleMorphism retraction;    // M -> S, retraction * inclusion = id
};

[[nodiscard]] std::optional<Summand> is_direct_summand(const Submodule& s, const FiniteModule& m);

struct PureClosure {
  Submodule closure;
  std::size_t witnesses = 0;  // preimages adjoined
};

/// Smallest-witness purification: while some d | n has s in (S cap dM) \ dS,
/// adjoin the lexicographically least m with d m = s, taking the least such s.
[[nodiscard]] PureClosure pure_closure(const Submodule& s, const FiniteModule& m);

}  // namespace phant
