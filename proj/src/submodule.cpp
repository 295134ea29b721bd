#include "phant/submodule.hpp"

#include <algorithm>

#include "phant/errors.hpp"
#include "phant/linsolve.hpp"

namespace phant {
namespace {

IntVector big_orders(const FiniteModule& m) {
  IntVector out;
  for (auto d : m.factors()) out.emplace_back(d);
  return out;
}

IntMatrix generator_matrix(const FiniteModule& m, const std::vector<Element>& gens) {
  IntMatrix g(m.rank(), gens.size());
  for (std::size_t l = 0; l < gens.size(); ++l)
    for (std::size_t i = 0; i < m.rank(); ++i) g(i, l) = gens[l][i];
  return g;
}

}  // namespace

Submodule::Submodule(FiniteModule ambient, std::vector<Element> generators) : ambient_(std::move(ambient)) {
  for (auto& g : generators) {
    Element x = ambient_.reduce(std::move(g));
    if (std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v != 0; })) generators_.push_back(std::move(x));
  }
}

Submodule Submodule::whole(const FiniteModule& m) {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < m.rank(); ++i) gens.push_back(m.basis(i));
  return Submodule(m, std::move(gens));
}

Submodule Submodule::image_of(const ModuleMorphism& f) { return image(f, Submodule::whole(f.source())); }

bool Submodule::contains(const Element& x) const {
  const Element y = ambient_.reduce(x);
  if (std::all_of(y.begin(), y.end(), [](std::int64_t v) { return v == 0; })) return true;
  if (generators_.empty()) return false;
  IntVector rhs(y.begin(), y.end());
  return solve_congruences(generator_matrix(ambient_, generators_), rhs, big_orders(ambient_)).has_value();
}

bool Submodule::contains(const Submodule& other) const {
  if (!(other.ambient_ == ambient_)) throw InputError("Submodule::contains: different ambient modules");
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [this](const Element& g) { return contains(g); });
}

bool Submodule::is_zero() const { return generators_.empty(); }

Embedded Submodule::as_module() const {
  const Ring& ring = ambient_.ring();
  const IntMatrix g = generator_matrix(ambient_, generators_);
  const auto relations = congruence_kernel(g, big_orders(ambient_));
  IntMatrix rel(generators_.size(), relations.size());
  for (std::size_t c = 0; c < relations.size(); ++c)
    for (std::size_t l = 0; l < generators_.size(); ++l) rel(l, c) = relations[c][l];
  const Canonical can = canonicalize(ring, generators_.size(), rel);

  ResidueMatrix emb(ambient_.rank(), can.module.rank());
  for (std::size_t i = 0; i < ambient_.rank(); ++i) {
    const std::int64_t di = ambient_.factor(i);
    for (std::size_t k = 0; k < can.module.rank(); ++k) {
      std::int64_t acc = 0;
      for (std::size_t l = 0; l < generators_.size(); ++l)
        acc = mod_floor(acc + generators_[l][i] * can.from_canonical(l, k), di);
      emb(i, k) = acc;
    }
  }
  return Embedded{can.module, ModuleMorphism(can.module, ambient_, std::move(emb))};
}

std::uint64_t Submodule::cardinality() const {
  if (generators_.empty()) return 1;
  return as_module().module.cardinality();
}

Submodule Submodule::plus(const Submodule& other) const {
  if (!(other.ambient_ == ambient_)) throw InputError("Submodule::plus: different ambient modules");
  std::vector<Element> gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Submodule(ambient_, std::move(gens));
}

Submodule Submodule::plus(const Element& x) const {
  std::vector<Element> gens = generators_;
  gens.push_back(x);
  return Submodule(ambient_, std::move(gens));
}

Submodule Submodule::multiple(std::int64_t d) const {
  std::vector<Element> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(ambient_.scale(d, g));
  return Submodule(ambient_, std::move(gens));
}

Submodule Submodule::intersect(const Submodule& other) const {
  if (!(other.ambient_ == ambient_)) throw InputError("Submodule::intersect: different ambient modules");
  // x = G a = H b  <=>  [G | -H] (a, b) = 0 in the ambient module.
  const std::size_t s = generators_.size(), t = other.generators_.size();
  IntMatrix sys(ambient_.rank(), s + t);
  for (std::size_t i = 0; i < ambient_.rank(); ++i) {
    for (std::size_t l = 0; l < s; ++l) sys(i, l) = generators_[l][i];
    for (std::size_t l = 0; l < t; ++l) sys(i, s + l) = -other.generators_[l][i];
  }
  std::vector<Element> gens;
  for (const auto& z : congruence_kernel(sys, big_orders(ambient_))) {
    Element x(ambient_.rank(), 0);
    for (std::size_t i = 0; i < ambient_.rank(); ++i) {
      const BigInt di(ambient_.factor(i));
      BigInt acc = 0;
      for (std::size_t l = 0; l < s; ++l) acc += z[l] * generators_[l][i];
      x[i] = static_cast<std::int64_t>(mod_floor(acc, di));
    }
    gens.push_back(std::move(x));
  }
  return Submodule(ambient_, std::move(gens));
}

Submodule image(const ModuleMorphism& f, const Submodule& s) {
  if (!(s.ambient() == f.source())) throw InputError("image: submodule is not inside the source");
  std::vector<Element> gens;
  for (const auto& g : s.generators()) gens.push_back(f.apply(g));
  return Submodule(f.target(), std::move(gens));
}

Submodule preimage(const ModuleMorphism& f, const Submodule& t) {
  if (!(t.ambient() == f.target())) throw InputError("preimage: submodule is not inside the target");
  // x with f(x) = T c:  [A | -T] (x, c) = 0 mod target orders.
  const FiniteModule& m = f.source();
  const FiniteModule& n = f.target();
  const auto& tg = t.generators();
  IntMatrix sys(n.rank(), m.rank() + tg.size());
  for (std::size_t i = 0; i < n.rank(); ++i) {
    for (std::size_t j = 0; j < m.rank(); ++j) sys(i, j) = f.entry(i, j);
    for (std::size_t l = 0; l < tg.size(); ++l) sys(i, m.rank() + l) = -tg[l][i];
  }
  std::vector<Element> gens;
  for (const auto& z : congruence_kernel(sys, big_orders(n))) {
    Element x(m.rank());
    for (std::size_t j = 0; j < m.rank(); ++j) x[j] = static_cast<std::int64_t>(mod_floor(z[j], BigInt(m.factor(j))));
    gens.push_back(std::move(x));
  }
  return Submodule(m, std::move(gens));
}

}  // namespace phant
