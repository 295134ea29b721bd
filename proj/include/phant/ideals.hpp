#pragma once

#include <optional>
#include <vector>

#include "phant/constructions.hpp"

namespace phant {

/// f = through * into with `through` projective.
struct ProjectiveFactorization {
  FiniteModule projective;
  ModuleMorphism into;     // g : source -> P
  ModuleMorphism through;  // h : P -> target
};

/// Decides whether f factors through a projective by lifting f along the
/// free cover of its target (projectives are exactly what lifts).
[[nodiscard]] std::optional<ProjectiveFactorization> factors_through_projective(const ModuleMorphism& f);

/// Why a morphism is not phantom: the probe L -> M whose composite with f
/// does not factor through a projective, and the generator of L that cannot
/// be extended along L -> free envelope.
struct PhantomCertificate {
  ModuleMorphism probe;
  std::size_t failing_generator;
};

/// The defining condition checked over the probe family {id_M} + {Z/d -> M :
/// d | n, over Hom generators}. Each composite is tested by extending it
/// along the embedding of its source into a free module (Z/n is self-injective).
[[nodiscard]] std::optional<PhantomCertificate> phantom_obstruction(const ModuleMorphism& f);
[[nodiscard]] bool is_phantom(const ModuleMorphism& f);

/// L -> (Z/n)^rank(L), e_i -> (n / d_i) e_i.
[[nodiscard]] ModuleMorphism free_envelope(const FiniteModule& l);

class MorphismIdeal {
 public:
  enum class Kind { Zero, Phantom, Hom, Generated };

  static MorphismIdeal zero(const Ring& ring) { return MorphismIdeal(ring, Kind::Zero, {}); }
  static MorphismIdeal phantom(const Ring& ring) { return MorphismIdeal(ring, Kind::Phantom, {}); }
  static MorphismIdeal hom(const Ring& ring) { return MorphismIdeal(ring, Kind::Hom, {}); }
  /// Empty generator list gives the zero ideal.
  static MorphismIdeal generated(const Ring& ring, std::vector<ModuleMorphism> generators);

  [[nodiscard]] const Ring& ring() const noexcept { return ring_; }
  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::vector<ModuleMorphism>& generators() const noexcept { return generators_; }

 private:
  MorphismIdeal(Ring ring, Kind kind, std::vector<ModuleMorphism> gens)
      : ring_(std::move(ring)), kind_(kind), generators_(std::move(gens)) {}

  Ring ring_;
  Kind kind_;
  std::vector<ModuleMorphism> generators_;
};

/// For generated ideals: f lies in the subgroup of Hom(source, target)
/// spanned by h * g * t with g a generator and h, t running over Hom generators.
[[nodiscard]] bool ideal_membership(const MorphismIdeal& ideal, const ModuleMorphism& f);

/// Identities of Z/p^k for every prime power p^k || n.
[[nodiscard]] MorphismIdeal indecomposable_projectives_ideal(const Ring& ring);

/// A morphism of directed systems: components[i] : source_i -> target_i,
/// commuting with the transitions of both diagrams (same index poset).
struct SystemMorphism {
  DirectedDiagram source;
  DirectedDiagram target;
  std::vector<ModuleMorphism> components;
};

struct InducedMorphism {
  Colimit source_colimit;
  Colimit target_colimit;
  ModuleMorphism induced;
};

/// Throws InputError if the diagrams do not share their poset or a square
/// fails to commute.
[[nodiscard]] InducedMorphism induced_colimit_morphism(const SystemMorphism& system);

struct DirectLimitCheck {
  bool member;
  ModuleMorphism induced;
};

[[nodiscard]] DirectLimitCheck closed_under_direct_limits_check(const MorphismIdeal& ideal,
                                                                const SystemMorphism& system);

}  // namespace phant
