#pragma once

#include <cstddef>
#include <vector>

#include "phant/submodule.hpp"

namespace phant {

[[nodiscard]] Embedded kernel(const ModuleMorphism& f);

/// A quotient N -> Q with a chosen preimage in N of every generator of Q.
struct Quotient {
  FiniteModule module;
  ModuleMorphism projection;
  std::vector<Element> generator_lifts;
};

[[nodiscard]] Quotient cokernel(const ModuleMorphism& f);
[[nodiscard]] Quotient quotient(const Submodule& s);

/// Block-ordered direct sum: summand k occupies the k-th block of the
/// presentation, reached through injections[k] and projections[k].
struct DirectSum {
  FiniteModule module;
  std::vector<ModuleMorphism> injections;
  std::vector<ModuleMorphism> projections;
};

[[nodiscard]] DirectSum direct_sum(const std::vector<FiniteModule>& summands);

/// Pushout of u: K -> M and v: K -> K'. `from_v_target` : K' -> X and
/// `from_u_target` : M -> X satisfy from_v_target * v = from_u_target * u.
struct Pushout {
  FiniteModule module;
  ModuleMorphism from_v_target;
  ModuleMorphism from_u_target;
};

[[nodiscard]] Pushout pushout(const ModuleMorphism& u, const ModuleMorphism& v);

/// A diagram of modules indexed by a finite directed poset. Transitions are
/// stored for every comparable pair i < j (the transitive closure).
class DirectedDiagram {
 public:
  struct Arrow {
    std::size_t from;
    std::size_t to;
    ModuleMorphism map;
  };

  /// Builds the closure of the generating arrows by composition. Throws
  /// InputError if two paths disagree (non-functorial), if there is a cycle,
  /// or if some pair of indices has no common upper bound.
  DirectedDiagram(std::vector<FiniteModule> objects, std::vector<Arrow> generating_arrows);

  /// M0 -> M1 -> ... with maps[i] : M_i -> M_{i+1}.
  static DirectedDiagram chain(std::vector<FiniteModule> objects, const std::vector<ModuleMorphism>& maps);

  [[nodiscard]] const std::vector<FiniteModule>& objects() const noexcept { return objects_; }
  [[nodiscard]] const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  [[nodiscard]] const std::vector<Arrow>& generating_arrows() const noexcept { return generating_; }
  [[nodiscard]] bool leq(std::size_t i, std::size_t j) const;
  /// Transition map i -> j (identity when i == j).
  [[nodiscard]] ModuleMorphism transition(std::size_t i, std::size_t j) const;

 private:
  std::vector<FiniteModule> objects_;
  std::vector<Arrow> generating_;
  std::vector<Arrow> arrows_;
};

struct Colimit {
  FiniteModule module;
  std::vector<ModuleMorphism> structural;  // one per diagram object
};

/// Direct sum of the objects modulo x - g_ij(x) for every arrow.
[[nodiscard]] Colimit directed_colimit(const DirectedDiagram& diagram);

}  // namespace phant
