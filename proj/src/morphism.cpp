#include "phant/morphism.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "phant/errors.hpp"
#include "phant/linsolve.hpp"

namespace phant {
namespace {

IntVector big_orders(const FiniteModule& m) {
  IntVector out;
  out.reserve(m.rank());
  for (auto d : m.factors()) out.emplace_back(d);
  return out;
}

void require_same_ring(const FiniteModule& a, const FiniteModule& b, const char* what) {
  if (!(a.ring() == b.ring())) throw InputError(std::string(what) + ": modules over different rings");
}

// Solves column j of p * g = f for g, or reports failure.
std::optional<std::vector<std::int64_t>> lift_column(const ModuleMorphism& f, const ModuleMorphism& p,
                                                     std::size_t j) {
  const FiniteModule& b = p.source();
  const FiniteModule& c = p.target();
  const std::int64_t aj = f.source().factor(j);
  IntMatrix sys(c.rank(), b.rank());
  IntVector rhs(c.rank());
  for (std::size_t r = 0; r < c.rank(); ++r) {
    for (std::size_t i = 0; i < b.rank(); ++i) sys(r, i) = p.entry(r, i) * hom_step(aj, b.factor(i));
    rhs[r] = f.entry(r, j);
  }
  auto t = solve_congruences(sys, rhs, big_orders(c));
  if (!t) return std::nullopt;
  std::vector<std::int64_t> col(b.rank());
  for (std::size_t i = 0; i < b.rank(); ++i) {
    const std::int64_t bi = b.factor(i);
    const auto ti = static_cast<std::int64_t>(mod_floor((*t)[i], BigInt(bi)));
    col[i] = mod_floor(ti * hom_step(aj, bi), bi);
  }
  return col;
}

}  // namespace

ModuleMorphism::ModuleMorphism(FiniteModule source, FiniteModule target, ResidueMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  require_same_ring(source_, target_, "ModuleMorphism");
  if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank())
    throw InputError("ModuleMorphism: matrix is " + std::to_string(matrix_.rows()) + "x" +
                     std::to_string(matrix_.cols()) + ", expected " + std::to_string(target_.rank()) + "x" +
                     std::to_string(source_.rank()));
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    const std::int64_t di = target_.factor(i);
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
      auto& a = matrix_(i, j);
      a = mod_floor(a, di);
      const std::int64_t dj = source_.factor(j);
      if ((a * dj) % di != 0) {
        std::ostringstream os;
        os << "ill-defined morphism: entry (" << i << "," << j << ")=" << a << " times source order d_j=" << dj
           << " is not 0 mod target order d_i=" << di;
        throw InputError(os.str());
      }
    }
  }
}

Element ModuleMorphism::apply(const Element& x) const {
  if (x.size() != source_.rank()) throw InputError("apply: element has wrong length");
  Element y(target_.rank(), 0);
  for (std::size_t i = 0; i < target_.rank(); ++i) {
    const std::int64_t di = target_.factor(i);
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < source_.rank(); ++j) acc = mod_floor(acc + matrix_(i, j) * mod_floor(x[j], di), di);
    y[i] = acc;
  }
  return y;
}

std::string ModuleMorphism::describe() const {
  std::ostringstream os;
  os << source_.describe() << " -> " << target_.describe() << " " << matrix_;
  return os.str();
}

ModuleMorphism operator+(const ModuleMorphism& a, const ModuleMorphism& b) {
  if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) throw InputError("morphism sum: domain mismatch");
  ResidueMatrix m = a.matrix_;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += b.matrix_(i, j);
  return ModuleMorphism(a.source_, a.target_, std::move(m));
}

ModuleMorphism operator-(const ModuleMorphism& a) { return (-1) * a; }

ModuleMorphism operator-(const ModuleMorphism& a, const ModuleMorphism& b) { return a + (-b); }

ModuleMorphism operator*(std::int64_t c, const ModuleMorphism& a) {
  ResidueMatrix m = a.matrix_;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const std::int64_t di = a.target_.factor(i);
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = mod_floor(mod_floor(c, di) * m(i, j), di);
  }
  return ModuleMorphism(a.source_, a.target_, std::move(m));
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  if (!(f.target() == g.source()))
    throw InputError("compose: target of f (" + f.target().describe() + ") differs from source of g (" +
                     g.source().describe() + ")");
  ResidueMatrix m(g.target().rank(), f.source().rank());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const std::int64_t di = g.target().factor(i);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < f.target().rank(); ++k) acc = mod_floor(acc + g.entry(i, k) * f.entry(k, j), di);
      m(i, j) = acc;
    }
  }
  return ModuleMorphism(f.source(), g.target(), std::move(m));
}

std::vector<ModuleMorphism> hom_group(const FiniteModule& m, const FiniteModule& n) {
  require_same_ring(m, n, "hom_group");
  std::vector<ModuleMorphism> gens;
  for (std::size_t i = 0; i < n.rank(); ++i)
    for (std::size_t j = 0; j < m.rank(); ++j) {
      const std::int64_t step = hom_step(m.factor(j), n.factor(i));
      if (step % n.factor(i) == 0) continue;
      ResidueMatrix a(n.rank(), m.rank());
      a(i, j) = step;
      gens.emplace_back(m, n, std::move(a));
    }
  return gens;
}

std::uint64_t hom_order(const FiniteModule& m, const FiniteModule& n) noexcept {
  std::uint64_t order = 1;
  for (auto di : n.factors())
    for (auto dj : m.factors()) {
      const auto g = static_cast<std::uint64_t>(gcd64(di, dj));
      if (order > std::numeric_limits<std::uint64_t>::max() / g) return std::numeric_limits<std::uint64_t>::max();
      order *= g;
    }
  return order;
}

std::vector<ModuleMorphism> hom_elements(const FiniteModule& m, const FiniteModule& n, std::uint64_t limit) {
  const std::uint64_t total = hom_order(m, n);
  if (total > limit) throw InputError("hom_elements: Hom group has " + std::to_string(total) + " elements");
  std::vector<ModuleMorphism> out;
  out.reserve(total);
  const std::size_t cells = n.rank() * m.rank();
  std::vector<std::int64_t> counter(cells, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    ResidueMatrix a(n.rank(), m.rank());
    for (std::size_t c = 0; c < cells; ++c) {
      const std::size_t i = c / m.rank(), j = c % m.rank();
      a(i, j) = counter[c] * hom_step(m.factor(j), n.factor(i));
    }
    out.emplace_back(m, n, std::move(a));
    for (std::size_t c = cells; c-- > 0;) {
      const std::size_t i = c / m.rank(), j = c % m.rank();
      if (++counter[c] < gcd64(m.factor(j), n.factor(i))) break;
      counter[c] = 0;
    }
  }
  return out;
}

std::optional<ModuleMorphism> lift(const ModuleMorphism& f, const ModuleMorphism& p) {
  if (!(f.target() == p.target())) throw InputError("lift: f and p must share their target");
  ResidueMatrix g(p.source().rank(), f.source().rank());
  for (std::size_t j = 0; j < f.source().rank(); ++j) {
    auto col = lift_column(f, p, j);
    if (!col) return std::nullopt;
    for (std::size_t i = 0; i < col->size(); ++i) g(i, j) = (*col)[i];
  }
  return ModuleMorphism(f.source(), p.source(), std::move(g));
}

std::optional<std::size_t> first_unliftable_generator(const ModuleMorphism& f, const ModuleMorphism& p) {
  if (!(f.target() == p.target())) throw InputError("lift: f and p must share their target");
  for (std::size_t j = 0; j < f.source().rank(); ++j)
    if (!lift_column(f, p, j)) return j;
  return std::nullopt;
}

std::optional<ModuleMorphism> extend_jointly(std::span<const ModuleMorphism> fs, std::span<const ModuleMorphism> is,
                                             const FiniteModule& middle, const FiniteModule& codomain) {
  if (fs.size() != is.size()) throw InputError("extend: need one constraint map per embedding");
  std::size_t constraints = 0;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (!(is[k].target() == middle) || !(fs[k].target() == codomain) || !(fs[k].source() == is[k].source()))
      throw InputError("extend: incompatible constraint maps");
    constraints += is[k].source().rank();
  }
  ResidueMatrix h(codomain.rank(), middle.rank());
  for (std::size_t r = 0; r < codomain.rank(); ++r) {
    const std::int64_t cr = codomain.factor(r);
    IntMatrix sys(constraints, middle.rank());
    IntVector rhs(constraints);
    IntVector mods(constraints, BigInt(cr));
    std::size_t row = 0;
    for (std::size_t k = 0; k < fs.size(); ++k)
      for (std::size_t j = 0; j < is[k].source().rank(); ++j, ++row) {
        for (std::size_t l = 0; l < middle.rank(); ++l)
          sys(row, l) = is[k].entry(l, j) * hom_step(middle.factor(l), cr);
        rhs[row] = fs[k].entry(r, j);
      }
    auto s = solve_congruences(sys, rhs, mods);
    if (!s) return std::nullopt;
    for (std::size_t l = 0; l < middle.rank(); ++l) {
      const auto sl = static_cast<std::int64_t>(mod_floor((*s)[l], BigInt(cr)));
      h(r, l) = mod_floor(sl * hom_step(middle.factor(l), cr), cr);
    }
  }
  return ModuleMorphism(middle, codomain, std::move(h));
}

std::optional<ModuleMorphism> extend(const ModuleMorphism& f, const ModuleMorphism& i) {
  if (!(f.source() == i.source())) throw InputError("extend: f and i must share their source");
  return extend_jointly(std::span(&f, 1), std::span(&i, 1), i.target(), f.target());
}

bool is_injective(const ModuleMorphism& f) {
  IntMatrix a(f.target().rank(), f.source().rank());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = f.entry(i, j);
  for (const auto& z : congruence_kernel(a, big_orders(f.target())))
    for (std::size_t j = 0; j < z.size(); ++j)
      if (z[j] % f.source().factor(j) != 0) return false;
  return true;
}

bool is_surjective(const ModuleMorphism& f) {
  const FiniteModule& n = f.target();
  IntMatrix rel(n.rank(), n.rank() + f.source().rank());
  for (std::size_t i = 0; i < n.rank(); ++i) {
    rel(i, i) = n.factor(i);
    for (std::size_t j = 0; j < f.source().rank(); ++j) rel(i, n.rank() + j) = f.entry(i, j);
  }
  return canonicalize(n.ring(), n.rank(), rel).module.is_zero();
}

bool is_isomorphism(const ModuleMorphism& f) {
  return f.source().cardinality() == f.target().cardinality() && is_injective(f);
}

std::optional<ModuleMorphism> inverse(const ModuleMorphism& f) {
  if (!is_isomorphism(f)) return std::nullopt;
  return lift(ModuleMorphism::identity(f.target()), f);
}

std::vector<Element> span_elements(const FiniteModule& ambient, std::span<const Element> gens) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<Element> frontier{ambient.zero_element()};
  seen.insert(0);
  std::vector<std::uint64_t> all{0};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Element y = ambient.add(x, g);
        const auto idx = ambient.index_of(y);
        if (seen.insert(idx).second) {
          all.push_back(idx);
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  std::vector<Element> out;
  out.reserve(all.size());
  for (auto idx : all) out.push_back(ambient.element_at(idx));
  return out;
}

}  // namespace phant
