#include "phant/module.hpp"

#include <functional>
#include <limits>
#include <sstream>

#include "phant/errors.hpp"
#include "phant/smith.hpp"

namespace phant {

FiniteModule::FiniteModule(Ring ring, std::vector<std::int64_t> factors)
    : ring_(std::move(ring)), factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::int64_t d = factors_[i];
    if (d < 2 || ring_.modulus() % d != 0)
      throw InputError("FiniteModule: invariant factor " + std::to_string(d) + " does not divide " +
                       std::to_string(ring_.modulus()) + " or is < 2");
    if (i > 0 && d % factors_[i - 1] != 0)
      throw InputError("FiniteModule: invariant factors must form a divisibility chain");
  }
}

std::uint64_t FiniteModule::cardinality() const noexcept {
  std::uint64_t c = 1;
  for (const auto d : factors_) {
    const auto ud = static_cast<std::uint64_t>(d);
    if (c > std::numeric_limits<std::uint64_t>::max() / ud) return std::numeric_limits<std::uint64_t>::max();
    c *= ud;
  }
  return c;
}

bool FiniteModule::is_element(const Element& x) const noexcept {
  if (x.size() != rank()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] >= factors_[i]) return false;
  return true;
}

Element FiniteModule::reduce(Element x) const {
  if (x.size() != rank()) throw InputError("element has wrong length for " + describe());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod_floor(x[i], factors_[i]);
  return x;
}

Element FiniteModule::basis(std::size_t i) const {
  Element e(rank(), 0);
  e.at(i) = 1;
  return e;
}

Element FiniteModule::add(const Element& a, const Element& b) const {
  Element c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = mod_floor(a[i] + b[i], factors_[i]);
  return c;
}

Element FiniteModule::scale(std::int64_t k, const Element& a) const {
  Element c(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    c[i] = mod_floor(mod_floor(k, factors_[i]) * a[i], factors_[i]);
  return c;
}

std::int64_t FiniteModule::order(const Element& x) const {
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::int64_t o = factors_[i] / gcd64(x[i], factors_[i]);
    ord = ord / gcd64(ord, o) * o;
  }
  return ord;
}

std::uint64_t FiniteModule::index_of(const Element& x) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) idx = idx * static_cast<std::uint64_t>(factors_[i]) + static_cast<std::uint64_t>(x[i]);
  return idx;
}

Element FiniteModule::element_at(std::uint64_t index) const {
  Element x(rank());
  for (std::size_t i = rank(); i-- > 0;) {
    const auto d = static_cast<std::uint64_t>(factors_[i]);
    x[i] = static_cast<std::int64_t>(index % d);
    index /= d;
  }
  return x;
}

std::string FiniteModule::describe() const {
  std::ostringstream os;
  if (factors_.empty()) {
    os << "0";
  } else {
    for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? "+" : "") << "Z/" << factors_[i];
  }
  os << " over Z/" << ring_.modulus();
  return os.str();
}

Canonical canonicalize(const Ring& ring, std::size_t gens, const IntMatrix& relations) {
  if (relations.rows() != gens) throw InputError("canonicalize: relation matrix has wrong row count");
  const std::int64_t n = ring.modulus();
  IntMatrix rel(gens, relations.cols() + gens);
  for (std::size_t i = 0; i < gens; ++i) {
    for (std::size_t j = 0; j < relations.cols(); ++j) rel(i, j) = relations(i, j);
    rel(i, relations.cols() + i) = n;
  }
  const auto snf = smith_normal_form(rel);

  std::vector<std::size_t> kept;
  std::vector<std::int64_t> factors;
  for (std::size_t i = 0; i < gens; ++i) {
    const BigInt d = snf.diagonal(i);
    if (d == 0) throw ConsistencyError("canonicalize: infinite cyclic factor despite n-torsion relations");
    if (d == 1) continue;
    kept.push_back(i);
    factors.push_back(static_cast<std::int64_t>(d));
  }

  Canonical out{FiniteModule(ring, factors), ResidueMatrix(kept.size(), gens), ResidueMatrix(gens, kept.size())};
  const BigInt bn(n);
  for (std::size_t r = 0; r < kept.size(); ++r) {
    const BigInt d(factors[r]);
    for (std::size_t j = 0; j < gens; ++j) {
      out.to_canonical(r, j) = static_cast<std::int64_t>(mod_floor(snf.U(kept[r], j), d));
      out.from_canonical(j, r) = static_cast<std::int64_t>(mod_floor(snf.U_inv(j, kept[r]), bn));
    }
  }
  return out;
}

FiniteModule canonical_module(const Ring& ring, const std::vector<std::int64_t>& orders) {
  IntMatrix rel(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) rel(i, i) = orders[i];
  return canonicalize(ring, orders.size(), rel).module;
}

std::vector<FiniteModule> enumerate_modules(const Ring& ring, std::uint64_t max_card) {
  std::vector<std::int64_t> divs;
  for (auto d : ring.divisors())
    if (d > 1) divs.push_back(d);
  std::vector<FiniteModule> out;
  std::vector<std::int64_t> chain;
  std::function<void(std::size_t, std::uint64_t)> grow = [&](std::size_t first, std::uint64_t card) {
    out.emplace_back(ring, chain);
    for (std::size_t k = first; k < divs.size(); ++k) {
      const auto d = static_cast<std::uint64_t>(divs[k]);
      if (card * d > max_card) continue;
      if (!chain.empty() && divs[k] % chain.back() != 0) continue;
      chain.push_back(divs[k]);
      grow(k, card * d);
      chain.pop_back();
    }
  };
  grow(0, 1);
  return out;
}

}  // namespace phant
