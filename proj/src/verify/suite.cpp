#include "phant/verify/suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "phant/approx.hpp"
#include "phant/linsolve.hpp"
#include "phant/purity.hpp"
#include "phant/smith.hpp"
#include "phant/verify/oracle.hpp"
#include "phant/verify/random.hpp"

namespace phant::suite {

namespace {

using rnd::Rng;

std::string rows_text(const ResidueMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ',';
      out += std::to_string(a(i, j));
    }
  }
  return out;
}

std::string rows_text(const IntMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ',';
      out += a(i, j).str();
    }
  }
  return out;
}

Manifest with_result(const Ring& ring, std::vector<Manifest::Entry> entries) {
  Manifest m(ring.modulus());
  m.add_result("input", std::move(entries));
  return m;
}

Manifest with_morphisms(const Ring& ring, std::initializer_list<std::pair<const char*, const ModuleMorphism*>> maps) {
  Manifest m(ring.modulus());
  for (const auto& [name, f] : maps) m.put_morphism(name, *f);
  return m;
}

Manifest with_module(const Ring& ring, const FiniteModule& mod) {
  Manifest m(ring.modulus());
  m.put_module("M", mod);
  return m;
}

Manifest with_rep(const Ring& ring, const RepA2& rep) {
  Manifest m(ring.modulus());
  m.put_rep("F", rep);
  return m;
}

std::vector<std::int64_t> random_vector(Rng& rng, std::size_t len, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v(len);
  for (auto& x : v) x = rng.uniform(lo, hi);
  return v;
}

ResidueMatrix random_residues(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi) {
  ResidueMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.uniform(lo, hi);
  return a;
}

// Number of elements of each order, an isomorphism invariant that determines
// a finite abelian group.
std::map<std::int64_t, std::uint64_t> order_profile(const FiniteModule& m) {
  std::map<std::int64_t, std::uint64_t> profile;
  for (const auto& x : oracle::all_elements(m)) ++profile[m.order(x)];
  return profile;
}

ModuleMorphism random_automorphism(Rng& rng, const FiniteModule& m) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    auto j = rnd::morphism(rng, m, m);
    if (is_automorphism(j)) return j;
  }
  return ModuleMorphism::identity(m);
}

ModuleMorphism some_phantom(Rng& rng, const FiniteModule& a, const FiniteModule& b) {
  return rng.coin() ? rnd::uniform_phantom(rng, a, b) : rnd::phantom_morphism(rng, a, b);
}

// A pure mono out of k: the first injection into k + extra, twisted by a
// random map into the complement and a random automorphism of the sum.
ModuleMorphism random_pure_mono(Rng& rng, const FiniteModule& k, std::uint64_t max_card) {
  const auto room = max_card / std::max<std::uint64_t>(k.cardinality(), 1);
  const auto extra = rnd::sized_module(rng, k.ring(), std::max<std::uint64_t>(room, 1));
  const auto sum = direct_sum({k, extra});
  const auto v = sum.injections[0] + compose(sum.injections[1], rnd::morphism(rng, k, extra));
  return compose(random_automorphism(rng, sum.module), v);
}

// ---- exact_linalg ----

Verdict smith_minor_gcd(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto rows = static_cast<std::size_t>(rng.uniform(1, 6));
  const auto cols = static_cast<std::size_t>(rng.uniform(1, 6));
  const IntMatrix a = matrix_cast<BigInt>(random_residues(rng, rows, cols, -20, 20));
  const auto snf = smith_normal_form(a);
  const auto witness = [&] { return with_result(ring, {{"matrix", rows_text(a)}}); };
  if (!(snf.U * a * snf.V == snf.D)) return Verdict::fail("U A V != D", witness());
  const auto du = oracle::determinant(snf.U);
  const auto dv = oracle::determinant(snf.V);
  if (abs(du) != 1 || abs(dv) != 1) return Verdict::fail("U or V not unimodular", witness());
  const auto expected = oracle::minor_gcd_invariants(a);
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (snf.diagonal(k) != expected[k])
      return Verdict::fail("diagonal entry " + std::to_string(k) + " is " + snf.diagonal(k).str() +
                               ", minors give " + expected[k].str(),
                           witness());
  }
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (i != j && snf.D(i, j) != 0) return Verdict::fail("D is not diagonal", witness());
  return Verdict::pass();
}

Verdict solve_mod_exhaustive(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const std::int64_t n = ring.modulus();
  const auto rows = static_cast<std::size_t>(rng.uniform(1, 4));
  const auto cols = static_cast<std::size_t>(rng.uniform(1, 4));
  const auto a = random_residues(rng, rows, cols, 0, n - 1);
  std::vector<std::int64_t> b = random_vector(rng, rows, 0, n - 1);
  if (rng.coin()) {
    const auto x0 = random_vector(rng, cols, 0, n - 1);
    for (std::size_t i = 0; i < rows; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < cols; ++j) s += a(i, j) * x0[j];
      b[i] = mod_floor(s, n);
    }
  }
  const auto witness = [&] {
    return with_result(ring, {{"matrix", rows_text(a)}, {"rhs", format_int_list(b)}});
  };
  IntVector bb(b.begin(), b.end());
  const auto got = solve_mod(matrix_cast<BigInt>(a), bb, n);
  const auto expected = oracle::exhaustive_solve_mod(a, b, n);
  if (got.has_value() != expected.has_value())
    return Verdict::fail(got ? "solver found a solution that search did not" : "solver missed a solution", witness());
  if (got) {
    for (std::size_t i = 0; i < rows; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < cols; ++j) s += a(i, j) * (*got)[j];
      if (mod_floor(s - b[i], n) != 0) return Verdict::fail("returned witness does not solve the system", witness());
    }
  }
  return Verdict::pass();
}

Verdict solution_space_exhaustive(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const std::int64_t n = ring.modulus();
  const auto rows = static_cast<std::size_t>(rng.uniform(1, 4));
  const auto cols = static_cast<std::size_t>(rng.uniform(1, 4));
  const auto a = random_residues(rng, rows, cols, 0, n - 1);
  const auto gens = solution_space_mod(matrix_cast<BigInt>(a), n);
  if (oracle::additive_span_mod(gens, cols, n) != oracle::exhaustive_kernel_mod(a, n))
    return Verdict::fail("generated span differs from the exhaustive kernel",
                         with_result(ring, {{"matrix", rows_text(a)}}));
  return Verdict::pass();
}

// ---- finmod ----

Verdict canonicalization(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::int64_t> divs;
  for (auto d : ring.divisors()) divs.push_back(d);
  // the same group presented by a shuffled, partly split list of cyclic orders
  std::vector<std::int64_t> orders;
  const auto len = rng.uniform(0, 4);
  for (std::int64_t i = 0; i < len; ++i) orders.push_back(rng.pick(divs));
  std::vector<std::int64_t> split;
  for (auto d : orders) {
    for (const auto& pp : ring.factorization()) {
      const auto part = prime_part(d, pp.prime);
      if (part > 1) split.push_back(part);
    }
  }
  for (std::size_t i = split.size(); i > 1; --i)
    std::swap(split[i - 1], split[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
  const auto a = canonical_module(ring, orders);
  const auto b = canonical_module(ring, split);
  const auto witness = [&] {
    return with_result(ring, {{"orders", format_int_list(orders)}, {"regrouped", format_int_list(split)}});
  };
  if (!(a == b)) return Verdict::fail("regrouped presentation canonicalizes differently", witness());
  // an unrelated module: equal canonical forms iff equal order profiles
  const auto c = rnd::module(rng, ring, 512);
  if ((a == c) != (order_profile(a) == order_profile(c)))
    return Verdict::fail("canonical equality disagrees with the element-order profile",
                         with_result(ring, {{"first", a.describe()}, {"second", c.describe()}}));
  // cokernel of a random relation matrix has |F| / |image| elements
  const auto free = FiniteModule::free(ring, static_cast<std::size_t>(rng.uniform(1, 3)));
  const auto src = FiniteModule::free(ring, static_cast<std::size_t>(rng.uniform(0, 3)));
  const auto f = rnd::morphism(rng, src, free);
  const auto q = cokernel(f);
  const auto img = oracle::subgroup(free, [&] {
    std::vector<Element> cols;
    for (std::size_t j = 0; j < src.rank(); ++j) cols.push_back(f.apply(src.basis(j)));
    return cols;
  }());
  if (q.module.cardinality() * img.size() != free.cardinality())
    return Verdict::fail("cokernel size disagrees with the element count", with_morphisms(ring, {{"relations", &f}}));
  return Verdict::pass();
}

Verdict purity_summand(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto m = rnd::sized_module(rng, ring, 256);
  const auto s = rnd::submodule(rng, m, 3);
  const auto witness = [&] {
    Manifest w(ring.modulus());
    w.put_module("M", m);
    w.add_submodule("S", "M", s);
    return w;
  };
  const bool pure = is_pure_submodule(s, m);
  const auto summand = is_direct_summand(s, m);
  if (pure != summand.has_value()) return Verdict::fail("purity and summand existence disagree", witness());
  if (summand && !(compose(summand->retraction, summand->inclusion) == ModuleMorphism::identity(summand->module)))
    return Verdict::fail("returned retraction does not split the inclusion", witness());
  if (pure != oracle::pure_by_elements(m, s.generators()))
    return Verdict::fail("purity disagrees with the element-set check", witness());
  if (hom_order(m, m) <= 4096 && pure != oracle::summand_by_search(m, s.generators()))
    return Verdict::fail("purity disagrees with the exhaustive summand search", witness());
  const auto pc = pure_closure(s, m);
  if (!pc.closure.contains(s)) return Verdict::fail("pure closure lost its seed", witness());
  if (!is_pure_submodule(pc.closure, m) || !oracle::pure_by_elements(m, pc.closure.generators()))
    return Verdict::fail("pure closure is not pure", witness());
  return Verdict::pass();
}

Verdict pushout_universal(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto k = rnd::module(rng, ring, 16, 2);
  const auto m = rnd::module(rng, ring, 16, 2);
  const auto k2 = rnd::module(rng, ring, 16, 2);
  const auto u = rnd::morphism(rng, k, m);
  const auto v = rnd::morphism(rng, k, k2);
  const auto po = pushout(u, v);
  const auto witness = [&] { return with_morphisms(ring, {{"u", &u}, {"v", &v}}); };
  if (!(compose(po.from_v_target, v) == compose(po.from_u_target, u)))
    return Verdict::fail("pushout square does not commute", witness());
  const auto y = rnd::module(rng, ring, 8, 2);
  if (hom_order(k2, y) > 64 || hom_order(m, y) > 64 || hom_order(po.module, y) > 256)
    return Verdict::skip("cone space too large");
  const auto mediators = hom_elements(po.module, y, 256);
  for (const auto& a : hom_elements(k2, y, 64))
    for (const auto& b : hom_elements(m, y, 64)) {
      if (!(compose(a, v) == compose(b, u))) continue;
      const std::vector<ModuleMorphism> fs{a, b};
      const std::vector<ModuleMorphism> is{po.from_v_target, po.from_u_target};
      const auto found = extend_jointly(fs, is, po.module, y);
      if (!found) return Verdict::fail("no mediating morphism found for a commuting cone", witness());
      std::size_t count = 0;
      for (const auto& h : mediators)
        if (compose(h, po.from_v_target) == a && compose(h, po.from_u_target) == b) ++count;
      if (count != 1) return Verdict::fail("mediating morphism is not unique", witness());
    }
  return Verdict::pass();
}

Verdict colimit_constant_and_epi(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto m = rnd::module(rng, ring, 64, 3);
  const auto id = ModuleMorphism::identity(m);
  const auto len = static_cast<std::size_t>(rng.uniform(1, 4));
  const auto c = directed_colimit(DirectedDiagram::chain(std::vector<FiniteModule>(len, m),
                                                         std::vector<ModuleMorphism>(len - 1, id)));
  if (!(c.module == m)) return Verdict::fail("constant diagram colimit differs from the object", with_module(ring, m));
  const auto a = rnd::module(rng, ring, 32, 2);
  const auto b = rnd::module(rng, ring, 32, 2);
  const auto d = rnd::module(rng, ring, 32, 2);
  const auto f = rnd::morphism(rng, a, b);
  const auto g = rnd::morphism(rng, b, d);
  const auto chain = directed_colimit(DirectedDiagram::chain({a, b, d}, {f, g}));
  Submodule gen = Submodule::zero(chain.module);
  for (const auto& s : chain.structural) gen = gen.plus(Submodule::image_of(s));
  if (!(gen == Submodule::whole(chain.module)))
    return Verdict::fail("structural maps are not jointly epimorphic", with_morphisms(ring, {{"f", &f}, {"g", &g}}));
  if (!(compose(chain.structural[1], f) == chain.structural[0]) || !(compose(chain.structural[2], g) == chain.structural[1]))
    return Verdict::fail("structural maps do not form a cocone", with_morphisms(ring, {{"f", &f}, {"g", &g}}));
  return Verdict::pass();
}

Verdict hom_group_exhaustive(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto m = rnd::sized_module(rng, ring, 64);
  const auto t = rnd::sized_module(rng, ring, 64);
  std::uint64_t candidates = 1;
  for (std::size_t j = 0; j < m.rank() && candidates <= (1u << 16); ++j) candidates *= t.cardinality();
  if (candidates > (1u << 16)) return Verdict::skip("exhaustive matrix space too large");
  const auto exhaustive = oracle::exhaustive_hom_matrices(m, t);
  if (oracle::morphism_span(hom_group(m, t), m, t) != exhaustive || exhaustive.size() != hom_order(m, t)) {
    Manifest w(ring.modulus());
    w.put_module("M", m);
    w.put_module("N", t);
    return Verdict::fail("hom_group does not generate the exhaustive hom set", w);
  }
  return Verdict::pass();
}

// ---- ideals ----

Verdict phantom_ideal_axioms(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto a = rnd::sized_module(rng, ring, 64);
  const auto b = rnd::sized_module(rng, ring, 64);
  const auto c = rnd::sized_module(rng, ring, 64);
  const auto d = rnd::sized_module(rng, ring, 64);
  const auto f = some_phantom(rng, a, b);
  const auto g = some_phantom(rng, a, b);
  const auto t = rnd::morphism(rng, c, a);
  const auto h = rnd::morphism(rng, b, d);
  const auto witness = [&] { return with_morphisms(ring, {{"f", &f}, {"g", &g}, {"h", &h}, {"t", &t}}); };
  if (!is_phantom(f) || !is_phantom(g)) return Verdict::fail("generated phantom is not phantom", witness());
  if (!is_phantom(f + g)) return Verdict::fail("f + g is not phantom", witness());
  if (!is_phantom(f - g)) return Verdict::fail("f - g is not phantom", witness());
  if (!is_phantom(compose(h, compose(f, t)))) return Verdict::fail("h f t is not phantom", witness());
  return Verdict::pass();
}

Verdict phantom_oracle_equivalence(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto a = rnd::sized_module(rng, ring, 256);
  const auto b = rnd::sized_module(rng, ring, 256);
  const auto f = rng.coin(40) ? some_phantom(rng, a, b) : rnd::morphism(rng, a, b);
  const auto witness = [&] { return with_morphisms(ring, {{"f", &f}}); };
  const auto fac = factors_through_projective(f);
  if (is_phantom(f) != fac.has_value()) return Verdict::fail("is_phantom disagrees with factors_through_projective", witness());
  if (fac && (!is_projective(fac->projective) || !(compose(fac->through, fac->into) == f)))
    return Verdict::fail("returned factorization is wrong", witness());
  // f factors through some projective iff it factors through the free module of the target's rank
  const auto p = FiniteModule::free(ring, b.rank());
  const auto box = [&](std::size_t entries) {
    double size = 1;
    for (std::size_t i = 0; i < entries; ++i) size *= static_cast<double>(ring.modulus());
    return size;
  };
  const bool searchable = box(a.rank() * p.rank()) <= (1u << 16) && box(p.rank() * b.rank()) <= (1u << 16) &&
                          hom_order(a, p) * hom_order(p, b) <= (1u << 14);
  if (searchable && oracle::factors_through_by_search(f, p, 1u << 14) != fac.has_value())
    return Verdict::fail("factorization disagrees with the exhaustive search", witness());
  return Verdict::pass();
}

Verdict phantom_tag_vs_generated(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto a = rnd::sized_module(rng, ring, 64);
  const auto b = rnd::sized_module(rng, ring, 64);
  const auto f = rng.coin() ? some_phantom(rng, a, b) : rnd::morphism(rng, a, b);
  if (ideal_membership(MorphismIdeal::phantom(ring), f) !=
      ideal_membership(indecomposable_projectives_ideal(ring), f))
    return Verdict::fail("phantom tag and the projectives ideal disagree", with_morphisms(ring, {{"f", &f}}));
  return Verdict::pass();
}

// Random directed shape with least element 0: a chain or a commuting diamond.
DirectedDiagram random_system(Rng& rng, const Ring& ring, bool diamond, std::size_t length) {
  if (diamond) {
    const auto a0 = rnd::module(rng, ring, 32, 2);
    const auto a1 = rnd::module(rng, ring, 32, 2);
    const auto a3 = rnd::module(rng, ring, 32, 2);
    const auto s = rnd::morphism(rng, a0, a1);
    const auto t = rnd::morphism(rng, a1, a3);
    using A = DirectedDiagram::Arrow;
    return DirectedDiagram({a0, a1, a1, a3}, {A{0, 1, s}, A{0, 2, s}, A{1, 3, t}, A{2, 3, t}});
  }
  std::vector<FiniteModule> objects;
  std::vector<ModuleMorphism> maps;
  for (std::size_t i = 0; i < length; ++i) {
    objects.push_back(rnd::module(rng, ring, 32, 2));
    if (i > 0) maps.push_back(rnd::morphism(rng, objects[i - 1], objects[i]));
  }
  return DirectedDiagram::chain(objects, maps);
}

Verdict direct_limit_closure(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const bool diamond = rng.coin(30);
  const auto length = static_cast<std::size_t>(rng.uniform(1, 4));
  const auto source = random_system(rng, ring, diamond, length);
  DirectedDiagram target = rng.coin(30) ? source : [&] {
    if (diamond) return random_system(rng, ring, true, 4);
    return random_system(rng, ring, false, length);
  }();
  const auto colim = directed_colimit(source);
  const std::size_t count = source.objects().size();
  std::vector<ModuleMorphism> components;
  for (std::size_t i = 0; i < count; ++i)
    components.push_back(ModuleMorphism::zero(source.objects()[i], target.objects()[i]));
  // sums of composites through a phantom between a cocone under the source and a cone over the target
  const auto terms = rng.uniform(1, 2);
  for (std::int64_t term = 0; term < terms; ++term) {
    const auto h = rnd::module(rng, ring, 32, 2);
    const auto h2 = rnd::module(rng, ring, 32, 2);
    const auto into_hub = rnd::morphism(rng, colim.module, h);
    const auto p = some_phantom(rng, h, h2);
    const auto out_of_hub = rnd::morphism(rng, h2, target.objects()[0]);
    for (std::size_t i = 0; i < count; ++i)
      components[i] = components[i] + compose(target.transition(0, i),
                                              compose(out_of_hub, compose(p, compose(into_hub, colim.structural[i]))));
  }
  const SystemMorphism system{source, target, components};
  const auto witness = [&] {
    Manifest w(ring.modulus());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i) names.push_back(w.put_morphism("f" + std::to_string(i), components[i]));
    w.add_result("system", {{"components", [&] {
                               std::string s;
                               for (const auto& n : names) s += (s.empty() ? "" : ",") + n;
                               return s;
                             }()}});
    return w;
  };
  for (const auto& c : components)
    if (!is_phantom(c)) return Verdict::fail("a component of the system is not phantom", witness());
  const auto check = closed_under_direct_limits_check(MorphismIdeal::phantom(ring), system);
  if (!check.member) return Verdict::fail("induced colimit morphism is not phantom", witness());
  return Verdict::pass();
}

// ---- rep_a2 ----

Verdict extension_counterexample_property(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto a = rnd::nonzero_module(rng, ring, 64, 2);
  const auto b = rnd::nonzero_module(rng, ring, 64, 2);
  auto f = rnd::non_phantom_morphism(rng, a, b, 32);
  // for squarefree n every map is phantom; the zero ideal still needs a nonzero map
  for (int attempt = 0; attempt < 32 && f.is_zero(); ++attempt) f = rnd::morphism(rng, a, b);
  const auto witness = [&] { return with_morphisms(ring, {{"f", &f}}); };
  bool checked = false;
  if (!is_phantom(f)) {
    const auto ex = extension_counterexample(MorphismIdeal::phantom(ring), f);
    if (ex.middle_in_ideal) return Verdict::fail("middle representation is phantom", witness());
    if (!ex.sub_in_ideal || !ex.quotient_in_ideal) return Verdict::fail("sub or quotient is not phantom", witness());
    checked = true;
  }
  if (!f.is_zero()) {
    const auto ex = extension_counterexample(MorphismIdeal::zero(ring), f);
    if (ex.middle_in_ideal || !ex.sub_in_ideal || !ex.quotient_in_ideal)
      return Verdict::fail("zero-ideal counterexample verdicts are wrong", witness());
    checked = true;
  }
  return checked ? Verdict::pass() : Verdict::skip("no morphism outside the ideals");
}

Verdict pure_chain_colimit(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto rep = rnd::phantom_rep(rng.next(), ring, 512);
  const FiltrationConfig cfg{static_cast<std::uint64_t>(ring.modulus())};
  std::vector<SubRep> chain{SubRep::zero(rep)};
  for (int k = 0; k < 2; ++k) {
    const auto& last = chain.back();
    const auto grown = pure_subrep_containing(rep, last.first().plus(rnd::submodule(rng, rep.m1(), 1)),
                                              last.second().plus(rnd::submodule(rng, rep.m2(), 1)), cfg);
    chain.push_back(grown.sub);
  }
  chain.push_back(SubRep::whole(rep));
  std::vector<RestrictedRep> pieces;
  for (const auto& s : chain) pieces.push_back(restrict(s));
  std::vector<RepA2> objects;
  std::vector<RepArrow> arrows;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    objects.push_back(pieces[i].rep);
    if (i) arrows.push_back({i - 1, i, subrep_inclusion(pieces[i - 1], pieces[i])});
  }
  const auto c = rep_colimit(objects, arrows);
  const auto d = extend(pieces.back().inclusion.first(), c.structural.back().first());
  const auto s = extend(pieces.back().inclusion.second(), c.structural.back().second());
  if (!d || !s || !is_isomorphism(*d) || !is_isomorphism(*s) ||
      !(compose(rep.map(), *d) == compose(*s, c.rep.map())))
    return Verdict::fail("colimit of the pure chain is not the top representation", with_rep(ring, rep));
  for (const auto& sub : chain)
    if (!is_pure_subrep(sub)) return Verdict::fail("chain member is not pure", with_rep(ring, rep));
  return Verdict::pass();
}

Verdict rep_morphism_composition(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto m = rnd::module(rng, ring, 64, 3);
  const RepA2 f(rnd::morphism(rng, m, m));
  // polynomials in f commute with f, giving endomorphisms of the representation
  const auto k1 = ModuleMorphism::identity(m) + rng.uniform(0, ring.modulus() - 1) * f.map();
  const auto k2 = compose(f.map(), f.map()) + rng.uniform(0, ring.modulus() - 1) * ModuleMorphism::identity(m);
  const RepMorphism a(f, f, f.map(), f.map());
  const RepMorphism b(f, f, k1, k1);
  const RepMorphism c(f, f, k2, k2);
  const auto left = compose(compose(c, b), a);
  const auto right = compose(c, compose(b, a));
  if (!(left == right)) return Verdict::fail("rep morphism composition is not associative", with_rep(ring, f));
  return Verdict::pass();
}

// ---- approx ----

Verdict kernel_pure_injective(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto m = rnd::sized_module(rng, ring, 64);
  const auto phi = phantom_cover(m);
  const auto k = kernel(phi).module;
  if (k.cardinality() > 256) return Verdict::skip("kernel larger than the ambient bound");
  const auto v = random_pure_mono(rng, k, 256);
  const auto r = extract_retract(phi, v);
  if (!(compose(r.retraction, v) == ModuleMorphism::identity(k)))
    return Verdict::fail("r v is not the identity", with_morphisms(ring, {{"phi", &phi}, {"v", &v}}));
  return Verdict::pass();
}

Verdict phantom_cover_property(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto m = rnd::sized_module(rng, ring, 64);
  const auto phi = phantom_cover(m);
  const auto witness = [&] { return with_module(ring, m); };
  if (!is_surjective(phi)) return Verdict::fail("phantom cover is not surjective", witness());
  const auto probes = phantom_probes(m, 256);
  const auto report = is_cover(MorphismIdeal::phantom(ring), phi, probes);
  if (report.verdict == CoverVerdict::NotPrecover)
    return Verdict::fail("phantom cover misses probe " + std::to_string(*report.failing_probe), witness());
  if (report.verdict != CoverVerdict::Cover) return Verdict::fail("phantom cover fails the cover condition", witness());
  return Verdict::pass();
}

bool isomorphic_over(const ModuleMorphism& a, const ModuleMorphism& b) {
  const auto x = lift(a, b);
  const auto y = lift(b, a);
  return x && y && is_isomorphism(*x) && is_isomorphism(*y);
}

Verdict cover_uniqueness(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto m = rnd::sized_module(rng, ring, 64);
  const auto a = phantom_cover(m);
  const auto b = compose(projective_cover(m), random_automorphism(rng, projective_cover(m).source()));
  const auto witness = [&] { return with_morphisms(ring, {{"first", &a}, {"second", &b}}); };
  const std::vector<ModuleMorphism> probes{projective_cover(m)};
  for (const auto* c : {&a, &b})
    if (is_cover(MorphismIdeal::phantom(ring), *c, probes).verdict != CoverVerdict::Cover)
      return Verdict::fail("candidate cover fails is_cover", witness());
  if (!isomorphic_over(a, b)) return Verdict::fail("two covers are not isomorphic over M", witness());
  return Verdict::pass();
}

Verdict pushout_transport_phantom(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto n_mod = rnd::sized_module(rng, ring, 32);
  // a phantom epimorphism: a cover plus a phantom from an extra summand
  const auto cover = phantom_cover(n_mod);
  const auto extra = rnd::module(rng, ring, 16, 2);
  const auto sum = direct_sum({cover.source(), extra});
  const auto phi = compose(cover, sum.projections[0]) + compose(some_phantom(rng, extra, n_mod), sum.projections[1]);
  const auto k = kernel(phi).module;
  if (k.cardinality() > 256) return Verdict::skip("kernel too large");
  const auto v = random_pure_mono(rng, k, 256);
  const auto t = pushout_transport(phi, v);
  if (!is_phantom(t.transported))
    return Verdict::fail("transported map is not phantom", with_morphisms(ring, {{"phi", &phi}, {"v", &v}}));
  if (!(compose(t.transported, t.pushout.from_u_target) == phi) ||
      !compose(t.transported, t.pushout.from_v_target).is_zero())
    return Verdict::fail("transported map does not restrict correctly", with_morphisms(ring, {{"phi", &phi}, {"v", &v}}));
  return Verdict::pass();
}

Verdict phantom_cover_is_projective_cover(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto m = rnd::sized_module(rng, ring, 256);
  const auto a = phantom_cover(m);
  const auto b = projective_cover(m);
  if (!isomorphic_over(a, b))
    return Verdict::fail("phantom cover and projective cover are not isomorphic over M", with_module(ring, m));
  return Verdict::pass();
}

// ---- filtration ----

Verdict filtration_verifies(const Ring& ring, std::uint64_t seed) {
  const auto rep = rnd::phantom_rep(seed, ring, 4096);
  const auto n = static_cast<std::uint64_t>(ring.modulus());
  for (const std::uint64_t kappa : {n, 2 * n, std::max(n, rep.cardinality())}) {
    const auto f = build_filtration(rep, FiltrationConfig{kappa});
    const auto report = verify_filtration(f);
    if (!report.passed()) {
      std::string failed;
      for (const auto& [name, v] : {std::pair{"zero_base", &report.zero_base}, {"chain", &report.chain},
                                    {"pure", &report.pure}, {"quotient_phantom", &report.quotient_phantom},
                                    {"size_bound", &report.size_bound}, {"strict_growth", &report.strict_growth}})
        if (!v->passed) failed += std::string(failed.empty() ? "" : ",") + name;
      Manifest w(ring.modulus());
      w.put_filtration("Phi", f);
      return Verdict::fail("kappa=" + std::to_string(kappa) + " failed " + failed, w);
    }
  }
  return Verdict::pass();
}

Verdict quotient_phantom_transport(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto rep = rnd::phantom_rep(rng.next(), ring, 1024);
  const auto s = pure_subrep_containing(rep, rnd::submodule(rng, rep.m1(), 2), rnd::submodule(rng, rep.m2(), 2),
                                        FiltrationConfig{static_cast<std::uint64_t>(ring.modulus())});
  if (!is_phantom(quotient_rep(s.sub).rep.map())) {
    Manifest w(ring.modulus());
    w.put_rep("F", rep);
    w.put_subrep("S", "F", s.sub);
    return Verdict::fail("quotient by a pure subrepresentation is not phantom", w);
  }
  return Verdict::pass();
}

Verdict filtration_union(const Ring& ring, std::uint64_t seed) {
  const auto rep = rnd::phantom_rep(seed, ring, 1024);
  const auto f = build_filtration(rep, FiltrationConfig{static_cast<std::uint64_t>(ring.modulus())});
  std::vector<RestrictedRep> pieces;
  for (const auto& s : f.steps) pieces.push_back(restrict(s));
  std::vector<RepA2> objects;
  std::vector<RepArrow> arrows;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    objects.push_back(pieces[i].rep);
    if (i) arrows.push_back({i - 1, i, subrep_inclusion(pieces[i - 1], pieces[i])});
  }
  const auto c = rep_colimit(objects, arrows);
  if (c.rep.m1().cardinality() != rep.m1().cardinality() || c.rep.m2().cardinality() != rep.m2().cardinality() ||
      !(c.rep.m1() == rep.m1()) || !(c.rep.m2() == rep.m2())) {
    Manifest w(ring.modulus());
    w.put_filtration("Phi", f);
    return Verdict::fail("union of the filtration differs from the representation", w);
  }
  return Verdict::pass();
}

Verdict pure_subrep_containing_property(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto rep = rnd::phantom_rep(rng.next(), ring, 1024);
  const FiltrationConfig cfg{static_cast<std::uint64_t>(ring.modulus())};
  const auto x1 = rnd::submodule(rng, rep.m1(), 2);
  const auto x2 = rnd::submodule(rng, rep.m2(), 2);
  const auto s = pure_subrep_containing(rep, x1, x2, cfg);
  const auto witness = [&] {
    Manifest w(ring.modulus());
    w.put_rep("F", rep);
    const auto& f = *w.find("morphism", "F.f");
    w.add_submodule("X1", *f.find("from"), x1);
    w.add_submodule("X2", *f.find("to"), x2);
    return w;
  };
  if (!is_pure_subrep(s.sub)) return Verdict::fail("result is not pure", witness());
  if (!s.sub.first().contains(x1) || !s.sub.second().contains(x2)) return Verdict::fail("seeds are lost", witness());
  const auto again = pure_subrep_containing(rep, s.sub.first(), s.sub.second(), cfg);
  if (!(again.sub == s.sub) || again.adjoined != 0) return Verdict::fail("not idempotent", witness());
  const auto ph = phantom_pure_subrep(rep, x1, x2, cfg);
  if (!is_pure_subrep(ph.sub) || !is_phantom(restrict(ph.sub).rep.map()))
    return Verdict::fail("phantom_pure_subrep result is not a pure phantom subrepresentation", witness());
  return Verdict::pass();
}

// ---- cli ----

Verdict manifest_roundtrip(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  const auto rep = rnd::phantom_rep(rng.next(), ring, 256);
  Manifest m(ring.modulus());
  m.put_filtration("Phi", build_filtration(rep, FiltrationConfig{static_cast<std::uint64_t>(ring.modulus())}));
  const auto a = rnd::module(rng, ring, 64, 3);
  const auto g = rnd::morphism(rng, a, a);
  const auto g_name = m.put_morphism("g", g);
  const auto g_module = *m.find("morphism", g_name)->find("from");
  m.add_diagram("D", "module", {g_module, g_module}, {"0>1:" + g_name});
  m.add_result("note", {{"seed", std::to_string(seed)}, {"empty", ""}});
  const auto text = m.serialize();
  const auto back = Manifest::parse(text);
  if (!(back == m) || back.serialize() != text)
    return Verdict::fail("manifest does not round-trip", m);
  if (!(back.filtration("Phi").target == rep) || !(back.morphism("g") == g))
    return Verdict::fail("round-tripped objects differ", m);
  return Verdict::pass();
}

Verdict determinism(const Ring& ring, std::uint64_t seed) {
  const auto once = [&] {
    const auto rep = rnd::phantom_rep(seed, ring, 512);
    Manifest m(ring.modulus());
    m.put_filtration("Phi", build_filtration(rep, FiltrationConfig{static_cast<std::uint64_t>(ring.modulus())}));
    m.put_morphism("cover", phantom_cover(rep.m2()));
    return m.serialize();
  };
  const auto first = once();
  if (first != once()) return Verdict::fail("outputs differ between runs", Manifest::parse(first));
  return Verdict::pass();
}

std::uint64_t name_hash(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

const std::vector<Property>& properties() {
  static const std::vector<Property> all{
      {"exact_linalg", "smith_matches_minor_gcd", 10, smith_minor_gcd},
      {"exact_linalg", "solve_mod_matches_search", 10, solve_mod_exhaustive},
      {"exact_linalg", "solution_space_matches_search", 10, solution_space_exhaustive},
      {"finmod", "canonicalization", 0, canonicalization},
      {"finmod", "purity_iff_summand", 9, purity_summand},
      {"finmod", "pushout_universal_property", 0, pushout_universal},
      {"finmod", "colimit_constant_and_jointly_epi", 0, colimit_constant_and_epi},
      {"finmod", "hom_group_generates", 0, hom_group_exhaustive},
      {"ideals", "phantom_ideal_axioms", 1, phantom_ideal_axioms},
      {"ideals", "phantom_iff_factors_through_projective", 2, phantom_oracle_equivalence},
      {"ideals", "phantom_tag_matches_projectives_ideal", 0, phantom_tag_vs_generated},
      {"ideals", "direct_limit_closure", 3, direct_limit_closure},
      {"rep_a2", "extension_counterexample", 8, extension_counterexample_property},
      {"rep_a2", "pure_chain_colimit_is_top", 0, pure_chain_colimit},
      {"rep_a2", "rep_morphism_composition", 0, rep_morphism_composition},
      {"approx", "kernel_retract", 6, kernel_pure_injective},
      {"approx", "phantom_cover_is_surjective_cover", 5, phantom_cover_property},
      {"approx", "cover_uniqueness", 0, cover_uniqueness},
      {"approx", "pushout_transport_phantom", 7, pushout_transport_phantom},
      {"approx", "phantom_cover_matches_projective_cover", 0, phantom_cover_is_projective_cover},
      {"filtration", "filtration_verifies", 4, filtration_verifies},
      {"filtration", "quotient_by_pure_subrep_phantom", 0, quotient_phantom_transport},
      {"filtration", "filtration_union_is_target", 0, filtration_union},
      {"filtration", "pure_subrep_containing", 0, pure_subrep_containing_property},
      {"cli", "manifest_roundtrip", 0, manifest_roundtrip},
      {"cli", "determinism", 0, determinism},
  };
  return all;
}

std::uint64_t sample_seed(std::uint64_t base, const Property& p, std::int64_t modulus, std::size_t sample) {
  return rnd::derive_seed(base, name_hash(p.module + "/" + p.name), static_cast<std::uint64_t>(modulus), sample);
}

Verdict run_sample(const Property& p, const Ring& ring, std::uint64_t seed, bool* consistency) {
  if (consistency) *consistency = false;
  try {
    return p.check(ring, seed);
  } catch (const ConsistencyError& e) {
    if (consistency) *consistency = true;
    return Verdict::fail(std::string("consistency violation: ") + e.what(), Manifest(ring.modulus()));
  } catch (const std::exception& e) {
    return Verdict::fail(std::string("exception: ") + e.what(), Manifest(ring.modulus()));
  }
}

std::vector<PropertyResult> run(const Config& config) {
  constexpr std::size_t kKeptFailures = 3;
  std::vector<PropertyResult> results;
  for (const auto& p : properties()) {
    if (!config.filter.empty() && (p.module + "/" + p.name).find(config.filter) == std::string::npos) continue;
    PropertyResult r;
    r.property = &p;
    const auto start = std::chrono::steady_clock::now();
    for (const auto n : config.moduli) {
      const Ring ring(n);
      for (std::size_t i = 0; i < config.samples; ++i) {
        const auto seed = sample_seed(config.seed, p, n, i);
        bool consistency = false;
        auto v = run_sample(p, ring, seed, &consistency);
        switch (v.kind) {
          case Verdict::Kind::Pass: ++r.passed; break;
          case Verdict::Kind::Skip: ++r.skipped; break;
          case Verdict::Kind::Fail:
            ++r.failed;
            if (r.failures.size() < kKeptFailures)
              r.failures.push_back({n, i, seed, std::move(v.detail), consistency, std::move(v.counterexample)});
            break;
        }
      }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (config.on_result) config.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format(const PropertyResult& r, std::uint64_t base_seed) {
  std::ostringstream out;
  out << (r.ok() ? "PASS " : "FAIL ") << r.property->module << "/" << r.property->name << " passed=" << r.passed
      << " skipped=" << r.skipped << " failed=" << r.failed;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << " seconds=" << r.seconds << "\n";
  for (const auto& f : r.failures) {
    out << "  module=" << r.property->module << " property=" << r.property->name << " base_seed=" << base_seed
        << " n=" << f.modulus << " sample=" << f.sample << " seed=" << f.seed
        << (f.consistency_violation ? " consistency_violation" : "") << "\n  " << f.detail << "\n";
    std::istringstream manifest(f.counterexample.serialize());
    for (std::string line; std::getline(manifest, line);) out << "  | " << line << "\n";
  }
  return out.str();
}

}  // namespace phant::suite
