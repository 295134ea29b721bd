#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phant/module.hpp"

namespace phant {

/// A Z/n-linear map between finite modules. Column j of the matrix is the
/// image of source generator j; entries are reduced modulo the target's
/// invariant factors, so matrix equality is morphism equality.
class ModuleMorphism {
 public:
  /// Throws InputError naming (i, j, d_i, d_j) if a_ij * d_j is not 0 mod d_i.
  ModuleMorphism(FiniteModule source, FiniteModule target, ResidueMatrix matrix);

  static ModuleMorphism zero(const FiniteModule& source, const FiniteModule& target) {
    return ModuleMorphism(source, target, ResidueMatrix(target.rank(), source.rank()));
  }
  static ModuleMorphism identity(const FiniteModule& m) {
    return ModuleMorphism(m, m, ResidueMatrix::identity(m.rank()));
  }

  [[nodiscard]] const FiniteModule& source() const noexcept { return source_; }
  [[nodiscard]] const FiniteModule& target() const noexcept { return target_; }
  [[nodiscard]] const ResidueMatrix& matrix() const noexcept { return matrix_; }
  [[nodiscard]] std::int64_t entry(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  [[nodiscard]] Element apply(const Element& x) const;
  [[nodiscard]] bool is_zero() const { return matrix_.is_zero(); }
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const ModuleMorphism& a, const ModuleMorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
  }
  friend ModuleMorphism operator+(const ModuleMorphism& a, const ModuleMorphism& b);
  friend ModuleMorphism operator-(const ModuleMorphism& a, const ModuleMorphism& b);
  friend ModuleMorphism operator-(const ModuleMorphism& a);
  friend ModuleMorphism operator*(std::int64_t c, const ModuleMorphism& a);

 private:
  FiniteModule source_;
  FiniteModule target_;
  ResidueMatrix matrix_;
};

/// g after f. Throws InputError unless f.target() == g.source().
[[nodiscard]] ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);

/// Generators of Hom(M, N): one elementary map per pair of cyclic factors
/// with a nontrivial Hom. Hom(Z/a, Z/b) is cyclic of order gcd(a, b).
[[nodiscard]] std::vector<ModuleMorphism> hom_group(const FiniteModule& m, const FiniteModule& n);

/// |Hom(M, N)|, saturating at UINT64_MAX.
[[nodiscard]] std::uint64_t hom_order(const FiniteModule& m, const FiniteModule& n) noexcept;

/// Every element of Hom(M, N). Throws InputError if there are more than `limit`.
[[nodiscard]] std::vector<ModuleMorphism> hom_elements(const FiniteModule& m, const FiniteModule& n,
                                                       std::uint64_t limit = 1u << 16);

/// Some g: A -> B with p * g = f (f: A -> C, p: B -> C), or nullopt.
[[nodiscard]] std::optional<ModuleMorphism> lift(const ModuleMorphism& f, const ModuleMorphism& p);

/// Index of the first source generator of f whose image does not lift along p.
[[nodiscard]] std::optional<std::size_t> first_unliftable_generator(const ModuleMorphism& f,
                                                                    const ModuleMorphism& p);

/// Some h: B -> C with h * i = f (f: A -> C, i: A -> B), or nullopt.
[[nodiscard]] std::optional<ModuleMorphism> extend(const ModuleMorphism& f, const ModuleMorphism& i);

/// Some h: B -> C with h * i_k = f_k for every k. All i_k end in `middle`,
/// all f_k end in `codomain`.
[[nodiscard]] std::optional<ModuleMorphism> extend_jointly(std::span<const ModuleMorphism> fs,
                                                           std::span<const ModuleMorphism> is,
                                                           const FiniteModule& middle,
                                                           const FiniteModule& codomain);

[[nodiscard]] bool is_injective(const ModuleMorphism& f);
[[nodiscard]] bool is_surjective(const ModuleMorphism& f);
[[nodiscard]] bool is_isomorphism(const ModuleMorphism& f);

/// Two-sided inverse of an isomorphism, or nullopt.
[[nodiscard]] std::optional<ModuleMorphism> inverse(const ModuleMorphism& f);

/// All elements of the subgroup of `ambient` generated by `gens`, ascending by index.
[[nodiscard]] std::vector<Element> span_elements(const FiniteModule& ambient, std::span<const Element> gens);

}  // namespace phant
