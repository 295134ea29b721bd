#include "phant/ring.hpp"

#include <algorithm>
#include <string>

#include "phant/errors.hpp"

namespace phant {

std::vector<PrimePower> factorize(std::int64_t m) {
  std::vector<PrimePower> out;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (m % p == 0) {
      m /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(pp);
  }
  if (m > 1) out.push_back({m, 1, m});
  return out;
}

std::int64_t prime_part(std::int64_t m, std::int64_t p) noexcept {
  std::int64_t part = 1;
  while (m % p == 0) {
    m /= p;
    part *= p;
  }
  return part;
}

Ring::Ring(std::int64_t n) : n_(n) {
  if (n < 2 || n > kMaxModulus)
    throw InputError("Ring: modulus must lie in [2, 2^31), got " + std::to_string(n));
  factors_ = factorize(n);
  divisors_ = {1};
  for (const auto& pp : factors_) {
    const std::size_t base = divisors_.size();
    std::int64_t power = 1;
    for (int e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) divisors_.push_back(divisors_[i] * power);
    }
  }
  std::sort(divisors_.begin(), divisors_.end());
}

std::int64_t Ring::local_factor(std::int64_t p) const noexcept {
  for (const auto& pp : factors_)
    if (pp.prime == p) return pp.value;
  return 1;
}

}  // namespace phant
