#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phant/rep_a2.hpp"

namespace phant {

struct FiltrationConfig {
  std::uint64_t kappa;  // must be >= n
};

/// A subrepresentation grown from seeds, with the number of elements adjoined
/// beyond the seeds that strictly enlarged a component.
struct GrownSubrep {
  SubRep sub;
  std::size_t adjoined = 0;
  /// Both components have cardinality <= kappa. Growth is never truncated;
  /// an exceeded budget is only reported here.
  bool within_budget = true;
};

/// Smallest-witness purification of (X1, X2 + f(S1)): S1, S2 pure, f(S1) in S2.
[[nodiscard]] GrownSubrep pure_subrep_containing(const RepA2& rep, const Submodule& x1, const Submodule& x2,
                                                 const FiltrationConfig& config);

/// Like pure_subrep_containing, but also adjoins the image of the extension of
/// f|S1 along the free envelope of S1 and re-purifies, until nothing grows.
/// The restricted map then factors through a free module. Throws InputError
/// unless rep is phantom.
[[nodiscard]] GrownSubrep phantom_pure_subrep(const RepA2& rep, const Submodule& x1, const Submodule& x2,
                                              const FiltrationConfig& config);

/// steps[0] = 0, steps.back() = target. adjoined[i] belongs to the step
/// steps[i] -> steps[i + 1].
struct Filtration {
  RepA2 target;
  std::uint64_t kappa;
  std::vector<SubRep> steps;
  std::vector<std::size_t> adjoined;
};

/// Throws InputError unless rep is phantom and kappa >= n.
[[nodiscard]] Filtration build_filtration(const RepA2& rep, const FiltrationConfig& config);

struct ConditionVerdict {
  bool passed = true;
  std::optional<std::size_t> failing_index;
  std::string detail;
};

struct StepSize {
  std::uint64_t first;   // |S1_{i+1} / S1_i|
  std::uint64_t second;  // |S2_{i+1} / S2_i|
  std::uint64_t bound;   // kappa * n^w, saturating
};

struct FiltrationReport {
  ConditionVerdict zero_base;
  ConditionVerdict chain;            // nested, ends at the target, and the colimit of the chain is the target
  ConditionVerdict pure;
  ConditionVerdict quotient_phantom;
  ConditionVerdict size_bound;
  ConditionVerdict strict_growth;
  std::vector<StepSize> sizes;

  [[nodiscard]] bool passed() const {
    return zero_base.passed && chain.passed && pure.passed && quotient_phantom.passed && size_bound.passed &&
           strict_growth.passed;
  }
};

/// Re-checks every condition from scratch. A missing adjoined count is read as 0.
[[nodiscard]] FiltrationReport verify_filtration(const Filtration& filtration);

}  // namespace phant
