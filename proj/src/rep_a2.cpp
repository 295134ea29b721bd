#include "phant/rep_a2.hpp"

#include <limits>

#include "phant/purity.hpp"

namespace phant {

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

}  // namespace

RepA2 RepA2::zero(const Ring& ring) {
  const auto z = FiniteModule::zero(ring);
  return RepA2(ModuleMorphism::zero(z, z));
}

std::uint64_t RepA2::cardinality() const { return saturating_add(m1().cardinality(), m2().cardinality()); }

RepMorphism::RepMorphism(RepA2 source, RepA2 target, ModuleMorphism d, ModuleMorphism s)
    : source_(std::move(source)), target_(std::move(target)), d_(std::move(d)), s_(std::move(s)) {
  if (!(d_.source() == source_.m1() && d_.target() == target_.m1() && s_.source() == source_.m2() &&
        s_.target() == target_.m2()))
    throw InputError("rep morphism: component shapes do not match the representations");
  if (!(compose(target_.map(), d_) == compose(s_, source_.map())))
    throw InputError("rep morphism: square does not commute");
}

RepMorphism RepMorphism::identity(const RepA2& rep) {
  return RepMorphism(rep, rep, ModuleMorphism::identity(rep.m1()), ModuleMorphism::identity(rep.m2()));
}

RepMorphism compose(const RepMorphism& b, const RepMorphism& a) {
  if (!(a.target() == b.source())) throw InputError("compose: rep morphisms are not composable");
  return RepMorphism(a.source(), b.target(), compose(b.first(), a.first()), compose(b.second(), a.second()));
}

SubRep::SubRep(RepA2 ambient, Submodule s1, Submodule s2)
    : ambient_(std::move(ambient)), s1_(std::move(s1)), s2_(std::move(s2)) {
  if (!(s1_.ambient() == ambient_.m1() && s2_.ambient() == ambient_.m2()))
    throw InputError("subrep: submodules live in the wrong modules");
  if (!s2_.contains(image(ambient_.map(), s1_))) throw InputError("subrep: f(S1) is not contained in S2");
}

SubRep SubRep::zero(const RepA2& rep) { return SubRep(rep, Submodule::zero(rep.m1()), Submodule::zero(rep.m2())); }

SubRep SubRep::whole(const RepA2& rep) {
  return SubRep(rep, Submodule::whole(rep.m1()), Submodule::whole(rep.m2()));
}

std::uint64_t SubRep::cardinality() const { return saturating_add(s1_.cardinality(), s2_.cardinality()); }

bool SubRep::is_whole() const {
  return s1_.cardinality() == ambient_.m1().cardinality() && s2_.cardinality() == ambient_.m2().cardinality();
}

RestrictedRep restrict(const SubRep& s) {
  const auto e1 = s.first().as_module();
  const auto e2 = s.second().as_module();
  auto map = lift(compose(s.ambient().map(), e1.embedding), e2.embedding);
  if (!map) throw ConsistencyError("restrict: f(S1) does not lift into S2");
  RepA2 rep(std::move(*map));
  RepMorphism inclusion(rep, s.ambient(), e1.embedding, e2.embedding);
  return {std::move(rep), std::move(inclusion)};
}

RepMorphism subrep_inclusion(const RestrictedRep& smaller, const RestrictedRep& larger) {
  if (!(smaller.inclusion.target() == larger.inclusion.target()))
    throw InputError("subrep_inclusion: different ambient representations");
  auto d = lift(smaller.inclusion.first(), larger.inclusion.first());
  auto s = lift(smaller.inclusion.second(), larger.inclusion.second());
  if (!d || !s) throw InputError("subrep_inclusion: subrepresentations are not nested");
  return RepMorphism(smaller.rep, larger.rep, std::move(*d), std::move(*s));
}

QuotientRep quotient_rep(const SubRep& s) {
  const auto q1 = quotient(s.first());
  const auto q2 = quotient(s.second());
  auto map = extend(compose(q2.projection, s.ambient().map()), q1.projection);
  if (!map) throw ConsistencyError("quotient_rep: induced map does not exist");
  RepA2 rep(std::move(*map));
  RepMorphism projection(s.ambient(), rep, q1.projection, q2.projection);
  return {std::move(rep), std::move(projection)};
}

bool in_ideal_class(const MorphismIdeal& ideal, const RepA2& rep) { return ideal_membership(ideal, rep.map()); }

bool is_pure_subrep(const SubRep& s) {
  return is_pure_submodule(s.first(), s.ambient().m1()) && is_pure_submodule(s.second(), s.ambient().m2());
}

RepColimit rep_colimit(const std::vector<RepA2>& objects, const std::vector<RepArrow>& arrows) {
  if (objects.empty()) throw InputError("rep_colimit: empty diagram");
  std::vector<FiniteModule> firsts;
  std::vector<FiniteModule> seconds;
  std::vector<ModuleMorphism> components;
  for (const auto& o : objects) {
    firsts.push_back(o.m1());
    seconds.push_back(o.m2());
    components.push_back(o.map());
  }
  std::vector<DirectedDiagram::Arrow> a1;
  std::vector<DirectedDiagram::Arrow> a2;
  for (const auto& a : arrows) {
    if (a.from >= objects.size() || a.to >= objects.size()) throw InputError("rep_colimit: arrow index out of range");
    if (!(a.map.source() == objects[a.from] && a.map.target() == objects[a.to]))
      throw InputError("rep_colimit: arrow endpoints do not match objects");
    a1.push_back({a.from, a.to, a.map.first()});
    a2.push_back({a.from, a.to, a.map.second()});
  }
  const SystemMorphism system{DirectedDiagram(firsts, a1), DirectedDiagram(seconds, a2), components};
  auto induced = induced_colimit_morphism(system);
  RepA2 rep(induced.induced);
  std::vector<RepMorphism> structural;
  for (std::size_t i = 0; i < objects.size(); ++i)
    structural.emplace_back(objects[i], rep, induced.source_colimit.structural[i],
                            induced.target_colimit.structural[i]);
  return {std::move(rep), std::move(structural)};
}

ExtensionCounterexample extension_counterexample(const MorphismIdeal& ideal, const ModuleMorphism& f) {
  if (ideal.kind() == MorphismIdeal::Kind::Hom)
    throw InputError("extension_counterexample: every morphism lies in the Hom ideal");
  if (ideal_membership(ideal, f)) throw InputError("extension_counterexample: f lies in the ideal");
  const auto a = direct_sum({f.source(), f.source()});
  const auto b = direct_sum({f.target(), f.target()});
  RepA2 middle(compose(b.injections[0], compose(f, a.projections[1])));
  SubRep sub(middle, Submodule::image_of(a.injections[0]), Submodule::image_of(b.injections[0]));
  auto sub_rep = restrict(sub);
  auto quot = quotient_rep(sub);
  const bool middle_in = in_ideal_class(ideal, middle);
  const bool sub_in = in_ideal_class(ideal, sub_rep.rep);
  const bool quot_in = in_ideal_class(ideal, quot.rep);
  return {std::move(middle), std::move(sub), std::move(sub_rep), std::move(quot), middle_in, sub_in, quot_in};
}

}  // namespace phant
