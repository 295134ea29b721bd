#include "phant/filtration.hpp"

#include <array>
#include <limits>
#include <set>

#include "phant/purity.hpp"

namespace phant {

namespace {

struct Growth {
  Submodule span;
  std::size_t adjoined = 0;

  void adjoin(const Element& x) {
    if (span.contains(x)) return;
    span = span.plus(x);
    ++adjoined;
  }
  void adjoin(const Submodule& s) {
    for (const auto& g : s.generators()) adjoin(g);
  }
  void purify() {
    auto pc = pure_closure(span, span.ambient());
    adjoined += pc.witnesses;
    span = std::move(pc.closure);
  }
};

void check_config(const RepA2& rep, const FiltrationConfig& config) {
  if (config.kappa < static_cast<std::uint64_t>(rep.ring().modulus()))
    throw InputError("filtration: kappa must be at least n");
}

void check_seeds(const RepA2& rep, const Submodule& x1, const Submodule& x2) {
  if (!(x1.ambient() == rep.m1() && x2.ambient() == rep.m2()))
    throw InputError("filtration: seeds must live in the components of the representation");
}

GrownSubrep finish(const RepA2& rep, Growth& g1, Growth& g2, const FiltrationConfig& config) {
  const bool within = g1.span.cardinality() <= config.kappa && g2.span.cardinality() <= config.kappa;
  return {SubRep(rep, g1.span, g2.span), g1.adjoined + g2.adjoined, within};
}

std::uint64_t saturating_bound(std::uint64_t kappa, std::int64_t n, std::size_t w) {
  std::uint64_t b = kappa;
  const auto un = static_cast<std::uint64_t>(n);
  for (std::size_t i = 0; i < w; ++i) {
    if (b > std::numeric_limits<std::uint64_t>::max() / un) return std::numeric_limits<std::uint64_t>::max();
    b *= un;
  }
  return b;
}

// The least element of M1 + M2 (M1 first, lexicographic) outside the subrep.
std::pair<std::size_t, Element> fresh_element(const SubRep& s) {
  const std::array<const Submodule*, 2> parts{&s.first(), &s.second()};
  for (std::size_t c = 0; c < parts.size(); ++c) {
    const auto& sub = *parts[c];
    const auto& m = sub.ambient();
    std::set<std::uint64_t> present;
    for (const auto& x : sub.elements()) present.insert(m.index_of(x));
    for (std::uint64_t idx = 0; idx < m.cardinality(); ++idx)
      if (!present.count(idx)) return {c, m.element_at(idx)};
  }
  throw ConsistencyError("fresh_element: subrepresentation is already everything");
}

}  // namespace

GrownSubrep pure_subrep_containing(const RepA2& rep, const Submodule& x1, const Submodule& x2,
                                   const FiltrationConfig& config) {
  check_config(rep, config);
  check_seeds(rep, x1, x2);
  Growth g1{x1};
  g1.purify();
  Growth g2{x2};
  g2.adjoin(image(rep.map(), g1.span));
  g2.purify();
  return finish(rep, g1, g2, config);
}

GrownSubrep phantom_pure_subrep(const RepA2& rep, const Submodule& x1, const Submodule& x2,
                                const FiltrationConfig& config) {
  check_config(rep, config);
  check_seeds(rep, x1, x2);
  if (!is_phantom(rep.map())) throw InputError("phantom_pure_subrep: representation is not phantom");
  Growth g1{x1};
  Growth g2{x2};
  while (true) {
    const std::uint64_t before1 = g1.span.cardinality();
    const std::uint64_t before2 = g2.span.cardinality();
    g1.purify();
    g2.adjoin(image(rep.map(), g1.span));
    g2.purify();
    const auto s1 = g1.span.as_module();
    const auto envelope = free_envelope(s1.module);
    auto through = extend(compose(rep.map(), s1.embedding), envelope);
    if (!through) throw ConsistencyError("phantom_pure_subrep: phantom map does not extend to the free envelope");
    g2.adjoin(Submodule::image_of(*through));
    g2.purify();
    if (g1.span.cardinality() == before1 && g2.span.cardinality() == before2) break;
  }
  return finish(rep, g1, g2, config);
}

Filtration build_filtration(const RepA2& rep, const FiltrationConfig& config) {
  check_config(rep, config);
  if (!is_phantom(rep.map())) throw InputError("build_filtration: representation is not phantom");
  Filtration out{rep, config.kappa, {SubRep::zero(rep)}, {}};
  while (!out.steps.back().is_whole()) {
    const SubRep& current = out.steps.back();
    const auto q = quotient_rep(current);
    if (q.rep.cardinality() <= config.kappa) {
      out.steps.push_back(SubRep::whole(rep));
      out.adjoined.push_back(0);
      continue;
    }
    const auto [component, x] = fresh_element(current);
    Submodule seed1 = Submodule::zero(q.rep.m1());
    Submodule seed2 = Submodule::zero(q.rep.m2());
    if (component == 0)
      seed1 = Submodule(q.rep.m1(), {q.projection.first().apply(x)});
    else
      seed2 = Submodule(q.rep.m2(), {q.projection.second().apply(x)});
    const auto grown = phantom_pure_subrep(q.rep, seed1, seed2, config);
    SubRep next(rep, preimage(q.projection.first(), grown.sub.first()),
                preimage(q.projection.second(), grown.sub.second()));
    if (next.cardinality() <= current.cardinality()) throw ConsistencyError("build_filtration: step did not grow");
    out.steps.push_back(std::move(next));
    out.adjoined.push_back(grown.adjoined);
  }
  return out;
}

FiltrationReport verify_filtration(const Filtration& filtration) {
  FiltrationReport report;
  const auto& steps = filtration.steps;
  const auto& target = filtration.target;
  const auto fail = [](ConditionVerdict& v, std::size_t index, std::string detail) {
    if (!v.passed) return;
    v.passed = false;
    v.failing_index = index;
    v.detail = std::move(detail);
  };
  if (steps.empty()) {
    fail(report.zero_base, 0, "no steps");
    fail(report.chain, 0, "no steps");
    return report;
  }
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (!(steps[i].ambient() == target)) {
      fail(report.chain, i, "step lives in a different representation");
      return report;
    }
  if (!(steps[0].first().is_zero() && steps[0].second().is_zero())) fail(report.zero_base, 0, "S0 is not zero");
  if (!steps.back().is_whole()) fail(report.chain, steps.size() - 1, "last step is not the whole representation");
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (!is_pure_subrep(steps[i])) fail(report.pure, i, "step is not a pure subrepresentation");

  bool nested = true;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (!steps[i + 1].contains(steps[i])) {
      fail(report.chain, i + 1, "step does not contain its predecessor");
      nested = false;
      continue;
    }
    if (steps[i + 1].cardinality() <= steps[i].cardinality()) fail(report.strict_growth, i + 1, "no growth");

    const auto q = quotient_rep(steps[i]);
    const SubRep step(q.rep, image(q.projection.first(), steps[i + 1].first()),
                      image(q.projection.second(), steps[i + 1].second()));
    const auto piece = restrict(step);
    if (!is_phantom(piece.rep.map())) fail(report.quotient_phantom, i + 1, "quotient step map is not phantom");
    const std::size_t w = i < filtration.adjoined.size() ? filtration.adjoined[i] : 0;
    const StepSize size{piece.rep.m1().cardinality(), piece.rep.m2().cardinality(),
                        saturating_bound(filtration.kappa, target.ring().modulus(), w)};
    if (size.first > size.bound || size.second > size.bound)
      fail(report.size_bound, i + 1, "quotient step exceeds kappa * n^w");
    report.sizes.push_back(size);
  }

  if (nested && report.chain.passed) {
    std::vector<RestrictedRep> pieces;
    for (const auto& s : steps) pieces.push_back(restrict(s));
    std::vector<RepA2> objects;
    std::vector<RepArrow> arrows;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      objects.push_back(pieces[i].rep);
      if (i > 0) arrows.push_back({i - 1, i, subrep_inclusion(pieces[i - 1], pieces[i])});
    }
    const auto colimit = rep_colimit(objects, arrows);
    // the colimit maps isomorphically onto the target through the top inclusion
    std::optional<ModuleMorphism> d;
    std::optional<ModuleMorphism> s;
    d = extend(pieces.back().inclusion.first(), colimit.structural.back().first());
    s = extend(pieces.back().inclusion.second(), colimit.structural.back().second());
    if (!d || !s || !is_isomorphism(*d) || !is_isomorphism(*s) ||
        !(compose(target.map(), *d) == compose(*s, colimit.rep.map())))
      fail(report.chain, steps.size() - 1, "colimit of the chain is not the target");
  }
  return report;
}

}  // namespace phant
