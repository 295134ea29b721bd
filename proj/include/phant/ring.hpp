#pragma once

#include <cstdint>
#include <vector>

namespace phant {

struct PrimePower {
  std::int64_t prime;
  int exponent;
  std::int64_t value;  // prime^exponent

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// The coefficient ring Z/n.
class Ring {
 public:
  /// Largest admissible modulus; keeps every residue product inside int64.
  static constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

  explicit Ring(std::int64_t n);

  [[nodiscard]] std::int64_t modulus() const noexcept { return n_; }
  [[nodiscard]] const std::vector<PrimePower>& factorization() const noexcept { return factors_; }
  /// All positive divisors of n, ascending (1 and n included).
  [[nodiscard]] const std::vector<std::int64_t>& divisors() const noexcept { return divisors_; }
  /// p-part of n; 1 if p does not divide n.
  [[nodiscard]] std::int64_t local_factor(std::int64_t p) const noexcept;

  friend bool operator==(const Ring& a, const Ring& b) noexcept { return a.n_ == b.n_; }

 private:
  std::int64_t n_;
  std::vector<PrimePower> factors_;
  std::vector<std::int64_t> divisors_;
};

/// Factorization of a positive integer by trial division.
[[nodiscard]] std::vector<PrimePower> factorize(std::int64_t m);

/// p-part of m.
[[nodiscard]] std::int64_t prime_part(std::int64_t m, std::int64_t p) noexcept;

}  // namespace phant
