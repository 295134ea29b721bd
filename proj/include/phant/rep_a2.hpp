#pragma once

#include <cstdint>
#include <vector>

#include "phant/ideals.hpp"

namespace phant {

/// A representation M1 -> M2 of the quiver with one arrow.
class RepA2 {
 public:
  explicit RepA2(ModuleMorphism f) : f_(std::move(f)) {}
  static RepA2 zero(const Ring& ring);

  [[nodiscard]] const ModuleMorphism& map() const noexcept { return f_; }
  [[nodiscard]] const FiniteModule& m1() const noexcept { return f_.source(); }
  [[nodiscard]] const FiniteModule& m2() const noexcept { return f_.target(); }
  [[nodiscard]] const Ring& ring() const noexcept { return f_.source().ring(); }
  /// |M1| + |M2| (disjoint union), saturating.
  [[nodiscard]] std::uint64_t cardinality() const;
  [[nodiscard]] bool is_zero() const { return m1().is_zero() && m2().is_zero(); }

  friend bool operator==(const RepA2& a, const RepA2& b) { return a.f_ == b.f_; }

 private:
  ModuleMorphism f_;
};

/// A commuting square (d, s) from F = (f: M1 -> M2) to G = (g: N1 -> N2):
/// g * d = s * f.
class RepMorphism {
 public:
  /// Throws InputError if the square does not commute.
  RepMorphism(RepA2 source, RepA2 target, ModuleMorphism d, ModuleMorphism s);
  static RepMorphism identity(const RepA2& rep);

  [[nodiscard]] const RepA2& source() const noexcept { return source_; }
  [[nodiscard]] const RepA2& target() const noexcept { return target_; }
  [[nodiscard]] const ModuleMorphism& first() const noexcept { return d_; }
  [[nodiscard]] const ModuleMorphism& second() const noexcept { return s_; }

  friend bool operator==(const RepMorphism& a, const RepMorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.d_ == b.d_ && a.s_ == b.s_;
  }

 private:
  RepA2 source_;
  RepA2 target_;
  ModuleMorphism d_;
  ModuleMorphism s_;
};

/// b * a
[[nodiscard]] RepMorphism compose(const RepMorphism& b, const RepMorphism& a);

/// A pair of submodules (S1, S2) of (M1, M2) with f(S1) inside S2.
class SubRep {
 public:
  /// Throws InputError if f(S1) is not contained in S2.
  SubRep(RepA2 ambient, Submodule s1, Submodule s2);
  static SubRep zero(const RepA2& rep);
  static SubRep whole(const RepA2& rep);

  [[nodiscard]] const RepA2& ambient() const noexcept { return ambient_; }
  [[nodiscard]] const Submodule& first() const noexcept { return s1_; }
  [[nodiscard]] const Submodule& second() const noexcept { return s2_; }
  [[nodiscard]] std::uint64_t cardinality() const;
  [[nodiscard]] bool contains(const SubRep& other) const {
    return s1_.contains(other.s1_) && s2_.contains(other.s2_);
  }
  [[nodiscard]] bool is_whole() const;

  friend bool operator==(const SubRep& a, const SubRep& b) {
    return a.ambient_ == b.ambient_ && a.s1_ == b.s1_ && a.s2_ == b.s2_;
  }

 private:
  RepA2 ambient_;
  Submodule s1_;
  Submodule s2_;
};

struct RestrictedRep {
  RepA2 rep;
  RepMorphism inclusion;
};

/// The representation S1 -> S2 on canonical modules, with its inclusion.
[[nodiscard]] RestrictedRep restrict(const SubRep& s);

/// The map restrict(smaller).rep -> restrict(larger).rep induced by inclusion.
/// Throws InputError unless larger contains smaller in the same ambient.
[[nodiscard]] RepMorphism subrep_inclusion(const RestrictedRep& smaller, const RestrictedRep& larger);

struct QuotientRep {
  RepA2 rep;
  RepMorphism projection;
};

/// (M1/S1 -> M2/S2) with the induced map.
[[nodiscard]] QuotientRep quotient_rep(const SubRep& s);

[[nodiscard]] bool in_ideal_class(const MorphismIdeal& ideal, const RepA2& rep);
[[nodiscard]] bool is_pure_subrep(const SubRep& s);

struct RepArrow {
  std::size_t from;
  std::size_t to;
  RepMorphism map;
};

struct RepColimit {
  RepA2 rep;
  std::vector<RepMorphism> structural;
};

/// Componentwise directed colimit with the induced connecting map. Throws
/// InputError for a malformed diagram (see DirectedDiagram).
[[nodiscard]] RepColimit rep_colimit(const std::vector<RepA2>& objects, const std::vector<RepArrow>& arrows);

/// The split extension 0 -> (0: A -> B) -> (A+A -> B+B) -> (0: A -> B) -> 0
/// whose middle map sends (a1, a2) to (f(a2), 0).
struct ExtensionCounterexample {
  RepA2 middle;
  SubRep sub;
  RestrictedRep sub_rep;
  QuotientRep quotient;
  bool middle_in_ideal;
  bool sub_in_ideal;
  bool quotient_in_ideal;
};

/// Throws InputError if f lies in the ideal (in particular for the Hom ideal).
[[nodiscard]] ExtensionCounterexample extension_counterexample(const MorphismIdeal& ideal, const ModuleMorphism& f);

}  // namespace phant
