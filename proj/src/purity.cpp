#include "phant/purity.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "phant/errors.hpp"

namespace phant {
namespace {

void require_ambient(const Submodule& s, const FiniteModule& m, const char* what) {
  if (!(s.ambient() == m)) throw InputError(std::string(what) + ": submodule does not live in the given module");
}

Submodule multiples_of_module(const FiniteModule& m, std::int64_t d) {
  return Submodule::whole(m).multiple(d);
}

// Inverse of a modulo m for gcd(a, m) == 1 (m >= 1).
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t t = 0, new_t = 1, r = m, new_r = mod_floor(a, m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod_floor(t, m);
}

// Least x (coordinatewise, hence lexicographically) with d x = s, s in dM.
Element least_preimage(const FiniteModule& m, std::int64_t d, const Element& s) {
  Element x(m.rank());
  for (std::size_t i = 0; i < m.rank(); ++i) {
    const std::int64_t di = m.factor(i);
    const std::int64_t g = gcd64(d, di);
    if (s[i] % g != 0) throw ConsistencyError("pure_closure: witness is not a multiple of d");
    const std::int64_t mi = di / g;
    x[i] = mod_floor((s[i] / g) * inverse_mod(d / g, mi), mi);
  }
  return x;
}

}  // namespace

bool is_projective(const FiniteModule& m) {
  const Ring& ring = m.ring();
  for (const auto d : m.factors())
    for (const auto& pp : ring.factorization()) {
      const std::int64_t part = prime_part(d, pp.prime);
      if (part != 1 && part != pp.value) return false;
    }
  return true;
}

ModuleMorphism free_cover(const FiniteModule& m) {
  const FiniteModule f = FiniteModule::free(m.ring(), m.rank());
  return ModuleMorphism(f, m, ResidueMatrix::identity(m.rank()));
}

bool free_cover_splits(const FiniteModule& m) {
  return lift(ModuleMorphism::identity(m), free_cover(m)).has_value();
}

bool is_pure_submodule(const Submodule& s, const FiniteModule& m) {
  require_ambient(s, m, "is_pure_submodule");
  for (const auto d : m.ring().divisors()) {
    if (d == 1) continue;
    const Submodule ds = s.multiple(d);
    const Submodule meet = s.intersect(multiples_of_module(m, d));
    if (!ds.contains(meet)) return false;
  }
  return true;
}

std::optional<Summand> is_direct_summand(const Submodule& s, const FiniteModule& m) {
  require_ambient(s, m, "is_direct_summand");
  Embedded e = s.as_module();
  auto r = extend(ModuleMorphism::identity(e.module), e.embedding);
  if (!r) return std::nullopt;
  return Summand{e.module, e.embedding, std::move(*r)};
}

PureClosure pure_closure(const Submodule& s, const FiniteModule& m) {
  require_ambient(s, m, "pure_closure");
  PureClosure out{s, 0};
  for (;;) {
    bool grown = false;
    for (const auto d : m.ring().divisors()) {
      if (d == 1) continue;
      const Submodule ds = out.closure.multiple(d);
      const Submodule meet = out.closure.intersect(multiples_of_module(m, d));
      if (ds.contains(meet)) continue;

      std::unordered_set<std::uint64_t> in_ds;
      for (const auto& x : ds.elements()) in_ds.insert(m.index_of(x));
      std::optional<Element> witness;
      for (const auto& x : meet.elements())  // ascending index = lexicographic
        if (!in_ds.count(m.index_of(x))) {
          witness = x;
          break;
        }
      if (!witness) throw ConsistencyError("pure_closure: solver and enumeration disagree on purity");
      out.closure = out.closure.plus(least_preimage(m, d, *witness));
      ++out.witnesses;
      grown = true;
      break;
    }
    if (!grown) return out;
  }
}

}  // namespace phant
