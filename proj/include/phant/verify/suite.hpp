#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "phant/manifest.hpp"

namespace phant::suite {

/// Outcome of one property on one sample.
struct Verdict {
  enum class Kind { Pass, Fail, Skip };
  Kind kind = Kind::Pass;
  std::string detail;
  Manifest counterexample;

  static Verdict pass() { return {}; }
  static Verdict skip(std::string why) { return {Kind::Skip, std::move(why), {}}; }
  static Verdict fail(std::string why, Manifest witness) { return {Kind::Fail, std::move(why), std::move(witness)}; }
};

struct Property {
  std::string module;
  std::string name;
  int criterion;  // acceptance criterion number, 0 if none
  std::function<Verdict(const Ring& ring, std::uint64_t seed)> check;
};

[[nodiscard]] const std::vector<Property>& properties();

struct Failure {
  std::int64_t modulus;
  std::size_t sample;
  std::uint64_t seed;  // reproduces the sample on its own
  std::string detail;
  bool consistency_violation = false;
  Manifest counterexample;
};

struct PropertyResult {
  const Property* property = nullptr;
  std::size_t passed = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  std::vector<Failure> failures;  // the first few, in sample order
  double seconds = 0;

  [[nodiscard]] bool ok() const { return failed == 0; }
};

struct Config {
  std::uint64_t seed = 1;
  std::size_t samples = 50;
  std::vector<std::int64_t> moduli{2, 3, 4, 6, 8, 9, 12};
  /// Run only properties whose "module/name" contains this string.
  std::string filter;
  std::function<void(const PropertyResult&)> on_result;
};

/// Seed of one sample: a pure function of the base seed, the property, the
/// modulus and the sample index.
[[nodiscard]] std::uint64_t sample_seed(std::uint64_t base, const Property& p, std::int64_t modulus,
                                        std::size_t sample);

/// Runs one sample, turning exceptions into failures.
[[nodiscard]] Verdict run_sample(const Property& p, const Ring& ring, std::uint64_t seed, bool* consistency = nullptr);

[[nodiscard]] std::vector<PropertyResult> run(const Config& config);

/// One human-readable line per property, plus failure details and the
/// counterexample manifests.
[[nodiscard]] std::string format(const PropertyResult& result, std::uint64_t base_seed);

}  // namespace phant::suite
