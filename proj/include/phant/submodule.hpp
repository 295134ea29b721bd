#pragma once

#include <cstdint>
#include <vector>

#include "phant/morphism.hpp"

namespace phant {

/// A module together with a monomorphism into some ambient module.
struct Embedded {
  FiniteModule module;
  ModuleMorphism embedding;
};

/// The subgroup of `ambient` generated by a list of elements. Over Z/n every
/// subgroup is a submodule.
class Submodule {
 public:
  Submodule(FiniteModule ambient, std::vector<Element> generators);

  static Submodule zero(const FiniteModule& m) { return Submodule(m, {}); }
  static Submodule whole(const FiniteModule& m);
  static Submodule image_of(const ModuleMorphism& f);

  [[nodiscard]] const FiniteModule& ambient() const noexcept { return ambient_; }
  [[nodiscard]] const std::vector<Element>& generators() const noexcept { return generators_; }

  /// Membership via the congruence solver on the generator matrix.
  [[nodiscard]] bool contains(const Element& x) const;
  [[nodiscard]] bool contains(const Submodule& other) const;
  [[nodiscard]] bool is_zero() const;

  /// Canonical module with its inclusion into the ambient module.
  [[nodiscard]] Embedded as_module() const;
  [[nodiscard]] std::uint64_t cardinality() const;
  [[nodiscard]] std::vector<Element> elements() const { return span_elements(ambient_, generators_); }

  [[nodiscard]] Submodule plus(const Submodule& other) const;
  [[nodiscard]] Submodule plus(const Element& x) const;
  /// d * S
  [[nodiscard]] Submodule multiple(std::int64_t d) const;
  [[nodiscard]] Submodule intersect(const Submodule& other) const;

  /// Same subgroup (not the same generator list).
  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.ambient_ == b.ambient_ && a.contains(b) && b.contains(a);
  }

 private:
  FiniteModule ambient_;
  std::vector<Element> generators_;
};

/// f(S) as a submodule of f.target().
[[nodiscard]] Submodule image(const ModuleMorphism& f, const Submodule& s);

/// f^{-1}(T) as a submodule of f.source().
[[nodiscard]] Submodule preimage(const ModuleMorphism& f, const Submodule& t);

}  // namespace phant
