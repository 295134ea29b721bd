#include "phant/ideals.hpp"

#include "phant/errors.hpp"
#include "phant/linsolve.hpp"
#include "phant/purity.hpp"

namespace phant {

std::optional<ProjectiveFactorization> factors_through_projective(const ModuleMorphism& f) {
  if (f.is_zero()) {
    const FiniteModule z = FiniteModule::zero(f.source().ring());
    return ProjectiveFactorization{z, ModuleMorphism::zero(f.source(), z), ModuleMorphism::zero(z, f.target())};
  }
  if (is_projective(f.source()))
    return ProjectiveFactorization{f.source(), ModuleMorphism::identity(f.source()), f};
  const ModuleMorphism cover = free_cover(f.target());
  auto g = lift(f, cover);
  if (!g) return std::nullopt;
  return ProjectiveFactorization{cover.source(), std::move(*g), cover};
}

ModuleMorphism free_envelope(const FiniteModule& l) {
  const std::int64_t n = l.modulus();
  const FiniteModule e = FiniteModule::free(l.ring(), l.rank());
  ResidueMatrix a(l.rank(), l.rank());
  for (std::size_t i = 0; i < l.rank(); ++i) a(i, i) = n / l.factor(i);
  return ModuleMorphism(l, e, std::move(a));
}

namespace {

std::optional<std::size_t> composite_obstruction(const ModuleMorphism& composite) {
  const ModuleMorphism env = free_envelope(composite.source());
  if (extend(composite, env)) return std::nullopt;
  // Narrow down to the first generator whose restriction already fails.
  for (std::size_t j = 0; j < composite.source().rank(); ++j) {
    const FiniteModule cyc = FiniteModule::cyclic(composite.source().ring(), composite.source().factor(j));
    ResidueMatrix incl(composite.source().rank(), 1);
    incl(j, 0) = 1;
    const ModuleMorphism e(cyc, composite.source(), std::move(incl));
    if (!extend(compose(composite, e), free_envelope(cyc))) return j;
  }
  return 0;
}

}  // namespace

std::optional<PhantomCertificate> phantom_obstruction(const ModuleMorphism& f) {
  const FiniteModule& m = f.source();
  for (const auto d : m.ring().divisors()) {
    if (d == 1) continue;
    const FiniteModule l = FiniteModule::cyclic(m.ring(), d);
    for (const auto& g : hom_group(l, m))
      if (auto j = composite_obstruction(compose(f, g))) return PhantomCertificate{g, *j};
  }
  const ModuleMorphism id = ModuleMorphism::identity(m);
  if (auto j = composite_obstruction(f)) return PhantomCertificate{id, *j};
  return std::nullopt;
}

bool is_phantom(const ModuleMorphism& f) { return !phantom_obstruction(f).has_value(); }

MorphismIdeal MorphismIdeal::generated(const Ring& ring, std::vector<ModuleMorphism> generators) {
  for (const auto& g : generators)
    if (!(g.source().ring() == ring)) throw InputError("MorphismIdeal: generator over a different ring");
  if (generators.empty()) return zero(ring);
  return MorphismIdeal(ring, Kind::Generated, std::move(generators));
}

MorphismIdeal indecomposable_projectives_ideal(const Ring& ring) {
  std::vector<ModuleMorphism> gens;
  for (const auto& pp : ring.factorization())
    gens.push_back(ModuleMorphism::identity(FiniteModule(ring, {pp.value})));
  return MorphismIdeal::generated(ring, std::move(gens));
}

bool ideal_membership(const MorphismIdeal& ideal, const ModuleMorphism& f) {
  if (!(f.source().ring() == ideal.ring())) throw InputError("ideal_membership: ring mismatch");
  switch (ideal.kind()) {
    case MorphismIdeal::Kind::Zero:
      return f.is_zero();
    case MorphismIdeal::Kind::Hom:
      return true;
    case MorphismIdeal::Kind::Phantom:
      return is_phantom(f);
    case MorphismIdeal::Kind::Generated:
      break;
  }
  if (f.is_zero()) return true;
  const FiniteModule& m = f.source();
  const FiniteModule& n = f.target();
  std::vector<ModuleMorphism> span;
  for (const auto& g : ideal.generators()) {
    const auto ts = hom_group(m, g.source());
    const auto hs = hom_group(g.target(), n);
    for (const auto& t : ts) {
      const ModuleMorphism gt = compose(g, t);
      if (gt.is_zero()) continue;
      for (const auto& h : hs) {
        ModuleMorphism c = compose(h, gt);
        if (!c.is_zero()) span.push_back(std::move(c));
      }
    }
  }
  if (span.empty()) return false;
  // f in the span: solve sum_k c_k span_k = f entrywise modulo target orders.
  const std::size_t cells = n.rank() * m.rank();
  IntMatrix sys(cells, span.size());
  IntVector rhs(cells), mods(cells);
  for (std::size_t i = 0; i < n.rank(); ++i)
    for (std::size_t j = 0; j < m.rank(); ++j) {
      const std::size_t r = i * m.rank() + j;
      for (std::size_t k = 0; k < span.size(); ++k) sys(r, k) = span[k].entry(i, j);
      rhs[r] = f.entry(i, j);
      mods[r] = n.factor(i);
    }
  return solve_congruences(sys, rhs, mods).has_value();
}

InducedMorphism induced_colimit_morphism(const SystemMorphism& system) {
  const auto& src = system.source;
  const auto& tgt = system.target;
  const std::size_t count = src.objects().size();
  if (tgt.objects().size() != count || system.components.size() != count)
    throw InputError("system morphism: diagrams and components must have the same index set");
  for (std::size_t i = 0; i < count; ++i) {
    const auto& c = system.components[i];
    if (!(c.source() == src.objects()[i]) || !(c.target() == tgt.objects()[i]))
      throw InputError("system morphism: component " + std::to_string(i) + " has the wrong domain");
  }
  for (const auto& a : src.arrows()) {
    if (!tgt.leq(a.from, a.to)) throw InputError("system morphism: index posets differ");
    if (!(compose(system.components[a.to], a.map) == compose(tgt.transition(a.from, a.to), system.components[a.from])))
      throw InputError("system morphism: square " + std::to_string(a.from) + " -> " + std::to_string(a.to) +
                       " does not commute");
  }
  if (tgt.arrows().size() != src.arrows().size()) throw InputError("system morphism: index posets differ");

  Colimit cs = directed_colimit(src);
  Colimit ct = directed_colimit(tgt);
  std::vector<ModuleMorphism> constraints;
  for (std::size_t i = 0; i < count; ++i) constraints.push_back(compose(ct.structural[i], system.components[i]));
  auto induced = extend_jointly(constraints, cs.structural, cs.module, ct.module);
  if (!induced) throw ConsistencyError("induced colimit morphism does not exist");
  return InducedMorphism{std::move(cs), std::move(ct), std::move(*induced)};
}

DirectLimitCheck closed_under_direct_limits_check(const MorphismIdeal& ideal, const SystemMorphism& system) {
  auto ind = induced_colimit_morphism(system);
  const bool member = ideal_membership(ideal, ind.induced);
  return DirectLimitCheck{member, std::move(ind.induced)};
}

}  // namespace phant
