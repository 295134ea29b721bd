#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "phant/rep_a2.hpp"

namespace phant::rnd {

/// The single source of randomness: a 64-bit seeded Mersenne twister with a
/// portable range reduction, so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }
  bool coin(int percent = 50) { return uniform(0, 99) < percent; }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

/// Mixes a base seed with stream coordinates (splitmix64 finalizer).
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

/// Random canonical module with cardinality <= max_card (zero module allowed).
[[nodiscard]] FiniteModule module(Rng& rng, const Ring& ring, std::uint64_t max_card, std::size_t max_rank = 4);
[[nodiscard]] FiniteModule nonzero_module(Rng& rng, const Ring& ring, std::uint64_t max_card, std::size_t max_rank = 4);
[[nodiscard]] FiniteModule projective_module(Rng& rng, const Ring& ring, std::uint64_t max_card, std::size_t max_rank = 3);

[[nodiscard]] ModuleMorphism morphism(Rng& rng, const FiniteModule& source, const FiniteModule& target);
[[nodiscard]] Element element(Rng& rng, const FiniteModule& m);
[[nodiscard]] Submodule submodule(Rng& rng, const FiniteModule& m, std::size_t max_gens = 3);

/// Sum of one or two composites source -> P -> target through random
/// projectives P of bounded size; phantom by construction.
[[nodiscard]] ModuleMorphism phantom_morphism(Rng& rng, const FiniteModule& source, const FiniteModule& target);

/// A morphism that does not factor through a projective, or the zero map
/// if Hom(source, target) has none (caller checks).
[[nodiscard]] ModuleMorphism non_phantom_morphism(Rng& rng, const FiniteModule& source, const FiniteModule& target,
                                                  int attempts = 16);

/// Every canonical module over the ring with cardinality <= max_card.
[[nodiscard]] std::vector<FiniteModule> all_modules(const Ring& ring, std::uint64_t max_card);

/// Random module whose cardinality is spread log-uniformly up to max_card.
[[nodiscard]] FiniteModule sized_module(Rng& rng, const Ring& ring, std::uint64_t max_card);

/// Uniform element of the phantom subgroup of Hom(source, target).
[[nodiscard]] ModuleMorphism uniform_phantom(Rng& rng, const FiniteModule& source, const FiniteModule& target);

/// Deterministic in (seed, ring, size_bound); |M1| + |M2| <= size_bound and the
/// map is phantom. Bounds below 2 give the zero representation. Mixes maps out
/// of projectives, uniform phantoms, sums of composites through projectives and
/// quotients by pure subrepresentations.
[[nodiscard]] RepA2 phantom_rep(std::uint64_t seed, const Ring& ring, std::uint64_t size_bound);

}  // namespace phant::rnd
