#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phant/matrix.hpp"
#include "phant/ring.hpp"

namespace phant {

/// Coordinates of an element with respect to the canonical generators.
using Element = std::vector<std::int64_t>;

/// A finite Z/n-module in invariant-factor form: Z/d1 + ... + Z/dk with
/// d1 | d2 | ... | dk, every di >= 2 and di | n. The zero module has no factors.
class FiniteModule {
 public:
  FiniteModule(Ring ring, std::vector<std::int64_t> factors);

  static FiniteModule zero(const Ring& ring) { return FiniteModule(ring, {}); }
  static FiniteModule free(const Ring& ring, std::size_t rank) {
    return FiniteModule(ring, std::vector<std::int64_t>(rank, ring.modulus()));
  }
  static FiniteModule cyclic(const Ring& ring, std::int64_t d) {
    return d == 1 ? zero(ring) : FiniteModule(ring, {d});
  }

  [[nodiscard]] const Ring& ring() const noexcept { return ring_; }
  [[nodiscard]] std::int64_t modulus() const noexcept { return ring_.modulus(); }
  [[nodiscard]] const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
  [[nodiscard]] std::int64_t factor(std::size_t i) const { return factors_[i]; }
  [[nodiscard]] std::size_t rank() const noexcept { return factors_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return factors_.empty(); }

  /// Number of elements, saturating at UINT64_MAX.
  [[nodiscard]] std::uint64_t cardinality() const noexcept;

  [[nodiscard]] bool is_element(const Element& x) const noexcept;
  [[nodiscard]] Element reduce(Element x) const;
  [[nodiscard]] Element zero_element() const { return Element(rank(), 0); }
  [[nodiscard]] Element basis(std::size_t i) const;
  [[nodiscard]] Element add(const Element& a, const Element& b) const;
  [[nodiscard]] Element scale(std::int64_t c, const Element& a) const;
  [[nodiscard]] std::int64_t order(const Element& x) const;

  /// Mixed-radix index with the first coordinate most significant, so index
  /// order is lexicographic element order. Requires cardinality() < 2^64.
  [[nodiscard]] std::uint64_t index_of(const Element& x) const;
  [[nodiscard]] Element element_at(std::uint64_t index) const;

  [[nodiscard]] std::string describe() const;

  friend bool operator==(const FiniteModule& a, const FiniteModule& b) noexcept {
    return a.ring_ == b.ring_ && a.factors_ == b.factors_;
  }

 private:
  Ring ring_;
  std::vector<std::int64_t> factors_;
};

/// Canonical form of a presented module Z^gens / (columns of relations).
/// `to_canonical` sends presentation generator j to its canonical
/// coordinates; `from_canonical` column i expresses canonical generator i in
/// presentation coordinates (entries mod n).
struct Canonical {
  FiniteModule module;
  ResidueMatrix to_canonical;
  ResidueMatrix from_canonical;
};

/// Relations n * e_j are always added, so the result is a Z/n-module.
[[nodiscard]] Canonical canonicalize(const Ring& ring, std::size_t gens, const IntMatrix& relations);

/// Every canonical module with cardinality <= max_card, zero module first.
[[nodiscard]] std::vector<FiniteModule> enumerate_modules(const Ring& ring, std::uint64_t max_card);

/// Canonical module isomorphic to Z/d1 + ... + Z/dk for arbitrary di | n.
[[nodiscard]] FiniteModule canonical_module(const Ring& ring, const std::vector<std::int64_t>& orders);

[[nodiscard]] inline std::int64_t gcd64(std::int64_t a, std::int64_t b) noexcept {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Generator coefficient of Hom(Z/a, Z/b): the map 1 -> b / gcd(a, b).
[[nodiscard]] inline std::int64_t hom_step(std::int64_t source_order, std::int64_t target_order) noexcept {
  return target_order / gcd64(source_order, target_order);
}

}  // namespace phant
