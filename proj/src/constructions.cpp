#include "phant/constructions.hpp"

#include <map>
#include <optional>
#include <string>

#include "phant/errors.hpp"
#include "phant/linsolve.hpp"

namespace phant {
namespace {

ResidueMatrix block_columns(const ResidueMatrix& m, std::size_t first, std::size_t count) {
  ResidueMatrix out(m.rows(), count);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = m(i, first + j);
  return out;
}

std::vector<Element> columns_as_elements(const ResidueMatrix& m) {
  std::vector<Element> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

Quotient quotient_by_columns(const FiniteModule& n, const std::vector<Element>& gens) {
  IntMatrix rel(n.rank(), n.rank() + gens.size());
  for (std::size_t i = 0; i < n.rank(); ++i) {
    rel(i, i) = n.factor(i);
    for (std::size_t l = 0; l < gens.size(); ++l) rel(i, n.rank() + l) = gens[l][i];
  }
  Canonical can = canonicalize(n.ring(), n.rank(), rel);
  std::vector<Element> lifts;
  for (std::size_t k = 0; k < can.module.rank(); ++k) lifts.push_back(n.reduce(can.from_canonical.column(k)));
  ModuleMorphism proj(n, can.module, std::move(can.to_canonical));
  return Quotient{can.module, std::move(proj), std::move(lifts)};
}

}  // namespace

Embedded kernel(const ModuleMorphism& f) {
  IntMatrix a(f.target().rank(), f.source().rank());
  IntVector orders;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    orders.emplace_back(f.target().factor(i));
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = f.entry(i, j);
  }
  std::vector<Element> gens;
  for (const auto& z : congruence_kernel(a, orders)) {
    Element x(f.source().rank());
    for (std::size_t j = 0; j < x.size(); ++j)
      x[j] = static_cast<std::int64_t>(mod_floor(z[j], BigInt(f.source().factor(j))));
    gens.push_back(std::move(x));
  }
  return Submodule(f.source(), std::move(gens)).as_module();
}

Quotient cokernel(const ModuleMorphism& f) {
  return quotient_by_columns(f.target(), columns_as_elements(f.matrix()));
}

Quotient quotient(const Submodule& s) { return quotient_by_columns(s.ambient(), s.generators()); }

DirectSum direct_sum(const std::vector<FiniteModule>& summands) {
  if (summands.empty()) throw InputError("direct_sum: at least one summand required");
  const Ring& ring = summands.front().ring();
  std::vector<std::int64_t> orders;
  std::vector<std::size_t> offsets;
  for (const auto& m : summands) {
    if (!(m.ring() == ring)) throw InputError("direct_sum: summands over different rings");
    offsets.push_back(orders.size());
    orders.insert(orders.end(), m.factors().begin(), m.factors().end());
  }
  const std::size_t total = orders.size();

  bool chain = true;
  for (std::size_t i = 1; i < total && chain; ++i) chain = orders[i] % orders[i - 1] == 0;

  FiniteModule sum = FiniteModule::zero(ring);
  ResidueMatrix to_can, from_can;
  if (chain) {
    // Concatenation is already canonical; keep the block coordinates.
    sum = FiniteModule(ring, orders);
    to_can = ResidueMatrix::identity(total);
    from_can = ResidueMatrix::identity(total);
  } else {
    IntMatrix rel(total, total);
    for (std::size_t i = 0; i < total; ++i) rel(i, i) = orders[i];
    Canonical can = canonicalize(ring, total, rel);
    sum = can.module;
    to_can = std::move(can.to_canonical);
    from_can = std::move(can.from_canonical);
  }

  DirectSum out{sum, {}, {}};
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const auto& m = summands[k];
    out.injections.emplace_back(m, sum, block_columns(to_can, offsets[k], m.rank()));
    ResidueMatrix proj(m.rank(), sum.rank());
    for (std::size_t i = 0; i < m.rank(); ++i)
      for (std::size_t c = 0; c < sum.rank(); ++c) proj(i, c) = mod_floor(from_can(offsets[k] + i, c), m.factor(i));
    out.projections.emplace_back(sum, m, std::move(proj));
  }
  return out;
}

Pushout pushout(const ModuleMorphism& u, const ModuleMorphism& v) {
  if (!(u.source() == v.source())) throw InputError("pushout: u and v must share their source");
  const FiniteModule& m = u.target();
  const FiniteModule& kp = v.target();
  const std::size_t a = kp.rank(), b = m.rank();
  IntMatrix rel(a + b, a + b + u.source().rank());
  for (std::size_t i = 0; i < a; ++i) rel(i, i) = kp.factor(i);
  for (std::size_t i = 0; i < b; ++i) rel(a + i, a + i) = m.factor(i);
  for (std::size_t j = 0; j < u.source().rank(); ++j) {
    for (std::size_t i = 0; i < a; ++i) rel(i, a + b + j) = v.entry(i, j);
    for (std::size_t i = 0; i < b; ++i) rel(a + i, a + b + j) = -u.entry(i, j);
  }
  Canonical can = canonicalize(u.source().ring(), a + b, rel);
  ModuleMorphism from_v(kp, can.module, block_columns(can.to_canonical, 0, a));
  ModuleMorphism from_u(m, can.module, block_columns(can.to_canonical, a, b));
  return Pushout{can.module, std::move(from_v), std::move(from_u)};
}

DirectedDiagram::DirectedDiagram(std::vector<FiniteModule> objects, std::vector<Arrow> generating_arrows)
    : objects_(std::move(objects)), generating_(std::move(generating_arrows)) {
  const std::size_t n = objects_.size();
  if (n == 0) throw InputError("diagram: no objects");
  for (const auto& o : objects_)
    if (!(o.ring() == objects_.front().ring())) throw InputError("diagram: objects over different rings");

  // closure[i][j]: the composite along any path i -> j.
  std::vector<std::vector<std::optional<ModuleMorphism>>> closure(n, std::vector<std::optional<ModuleMorphism>>(n));
  for (std::size_t i = 0; i < n; ++i) closure[i][i] = ModuleMorphism::identity(objects_[i]);
  auto merge = [&](std::size_t i, std::size_t j, const ModuleMorphism& f) {
    if (closure[i][j]) {
      if (!(*closure[i][j] == f))
        throw InputError("diagram: not functorial, two paths " + std::to_string(i) + " -> " + std::to_string(j) +
                         " give different maps");
      return false;
    }
    closure[i][j] = f;
    return true;
  };
  for (const auto& a : generating_) {
    if (a.from >= n || a.to >= n) throw InputError("diagram: arrow index out of range");
    if (a.from == a.to) throw InputError("diagram: self-loop arrows are not allowed");
    if (!(a.map.source() == objects_[a.from]) || !(a.map.target() == objects_[a.to]))
      throw InputError("diagram: arrow " + std::to_string(a.from) + " -> " + std::to_string(a.to) +
                       " does not match its objects");
    merge(a.from, a.to, a.map);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& a : generating_)
        if (a.from != i && closure[i][a.from]) {
          if (a.to == i) throw InputError("diagram: cycle through index " + std::to_string(i));
          changed = merge(i, a.to, compose(a.map, *closure[i][a.from])) || changed;
        }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool bounded = false;
      for (std::size_t k = 0; k < n && !bounded; ++k) bounded = closure[i][k] && closure[j][k];
      if (!bounded)
        throw InputError("diagram: indices " + std::to_string(i) + " and " + std::to_string(j) +
                         " have no common upper bound");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && closure[i][j]) arrows_.push_back(Arrow{i, j, *closure[i][j]});
}

DirectedDiagram DirectedDiagram::chain(std::vector<FiniteModule> objects, const std::vector<ModuleMorphism>& maps) {
  if (maps.size() + 1 != objects.size()) throw InputError("chain: need one map between consecutive objects");
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < maps.size(); ++i) arrows.push_back(Arrow{i, i + 1, maps[i]});
  return DirectedDiagram(std::move(objects), std::move(arrows));
}

bool DirectedDiagram::leq(std::size_t i, std::size_t j) const {
  if (i == j) return true;
  for (const auto& a : arrows_)
    if (a.from == i && a.to == j) return true;
  return false;
}

ModuleMorphism DirectedDiagram::transition(std::size_t i, std::size_t j) const {
  if (i == j) return ModuleMorphism::identity(objects_.at(i));
  for (const auto& a : arrows_)
    if (a.from == i && a.to == j) return a.map;
  throw InputError("diagram: no transition " + std::to_string(i) + " -> " + std::to_string(j));
}

Colimit directed_colimit(const DirectedDiagram& diagram) {
  const auto& objs = diagram.objects();
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (const auto& o : objs) {
    offsets.push_back(total);
    total += o.rank();
  }
  std::size_t relation_count = total;
  for (const auto& a : diagram.arrows()) relation_count += objs[a.from].rank();

  IntMatrix rel(total, relation_count);
  std::size_t c = 0;
  for (std::size_t k = 0; k < objs.size(); ++k)
    for (std::size_t i = 0; i < objs[k].rank(); ++i, ++c) rel(offsets[k] + i, c) = objs[k].factor(i);
  for (const auto& a : diagram.arrows())
    for (std::size_t j = 0; j < objs[a.from].rank(); ++j, ++c) {
      rel(offsets[a.from] + j, c) += 1;
      for (std::size_t i = 0; i < objs[a.to].rank(); ++i) rel(offsets[a.to] + i, c) -= a.map.entry(i, j);
    }
  Canonical can = canonicalize(objs.front().ring(), total, rel);
  Colimit out{can.module, {}};
  for (std::size_t k = 0; k < objs.size(); ++k)
    out.structural.emplace_back(objs[k], can.module, block_columns(can.to_canonical, offsets[k], objs[k].rank()));
  return out;
}

}  // namespace phant
