#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "phant/ideals.hpp"

namespace phant {

struct PrecoverReport {
  bool precover;
  std::optional<std::size_t> failing_probe;  // index into the probe list
};

/// Whether every probe i' : L -> M factors as phi * j. Throws InputError if
/// phi or a probe is outside the ideal or a probe has the wrong codomain.
[[nodiscard]] PrecoverReport is_precover(const MorphismIdeal& ideal, const ModuleMorphism& phi,
                                         std::span<const ModuleMorphism> probes);

enum class CoverVerdict { Cover, NotCover, NotPrecover, Indeterminate };

/// How the self-factorizations j (phi * j = phi) were decided.
enum class CoverRoute {
  Enumeration,  // every j listed and tested
  Radical,      // ker(phi) inside rad(n) F, so every j is the identity mod the radical
  SplitOff,     // projective source with ker(phi) outside the radical: explicit non-automorphism
  Undecided,
};

struct CoverOptions {
  /// Largest |Hom(F, ker phi)| that is enumerated outright.
  std::uint64_t enumeration_limit = 4096;
};

struct CoverReport {
  CoverVerdict verdict;
  CoverRoute route = CoverRoute::Undecided;
  std::optional<ModuleMorphism> witness{};   // a non-automorphism j with phi * j = phi
  std::optional<std::size_t> failing_probe{};  // for NotPrecover
  std::uint64_t enumerated = 0;
};

/// An endomorphism of a finite module is an automorphism iff it is bijective
/// on F / pF for every prime p | n.
[[nodiscard]] bool is_automorphism(const ModuleMorphism& j);

/// Only the minimality half of the cover definition: every j : F -> F with
/// phi * j = phi is an automorphism. Never answers by sampling.
[[nodiscard]] CoverReport self_factorizations(const ModuleMorphism& phi, const CoverOptions& options = {});

/// Precover check on the probes followed by self_factorizations.
[[nodiscard]] CoverReport is_cover(const MorphismIdeal& ideal, const ModuleMorphism& phi,
                                   std::span<const ModuleMorphism> probes, const CoverOptions& options = {});

/// Phantom maps into M whose sources range over all modules of cardinality
/// <= max_source_card: generators of each phantom subgroup of Hom(L, M), every
/// phantom element of the smaller Hom groups, and Hom generators from the
/// indecomposable projectives. Deduplicated, deterministic order.
[[nodiscard]] std::vector<ModuleMorphism> phantom_probes(const FiniteModule& m, std::uint64_t max_source_card);

/// Sum of local cyclic projectives mapping onto M; the identity if M is projective.
[[nodiscard]] ModuleMorphism projective_cover(const FiniteModule& m);

/// Starts from the free precover and splits off kernel summands (Fitting
/// reduction along non-automorphic self-factorizations) until minimal.
[[nodiscard]] ModuleMorphism phantom_cover(const FiniteModule& m);

struct PushoutTransport {
  Embedded kernel;  // u : K -> M
  Pushout pushout;  // of u and v
  ModuleMorphism transported;  // phi' : X -> N
};

/// phi : M ->> N phantom, v : K -> K' pure mono with K = kernel(phi).module.
/// Returns phi' with phi' * (M -> X) = phi and phi' * (K' -> X) = 0. Throws
/// InputError on invalid input and ConsistencyError if phi' is not phantom.
[[nodiscard]] PushoutTransport pushout_transport(const ModuleMorphism& phi, const ModuleMorphism& v);

struct RetractExtraction {
  ModuleMorphism retraction;  // r : K' -> K with r * v = id_K
  ModuleMorphism factor;      // t : X -> F with phi * t = phi'
  ModuleMorphism restricted;  // w : K' -> K
};

/// Splits a pure mono out of the kernel of a phantom cover. Throws InputError
/// on invalid input and ConsistencyError if the cover property is contradicted.
[[nodiscard]] RetractExtraction extract_retract(const ModuleMorphism& phi, const ModuleMorphism& v,
                                                const CoverOptions& options = {});

}  // namespace phant
