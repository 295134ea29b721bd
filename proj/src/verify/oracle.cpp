#include "phant/verify/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "phant/errors.hpp"

namespace phant::oracle {
namespace {

BigInt gcd_big(BigInt a, BigInt b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Odometer over a box of radices; fn returns false to stop early.
void for_each_tuple(const std::vector<std::int64_t>& radices, const std::function<bool(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> x(radices.size(), 0);
  for (auto r : radices)
    if (r <= 0) return;
  for (;;) {
    if (!fn(x)) return;
    std::size_t i = radices.size();
    while (i > 0) {
      --i;
      if (++x[i] < radices[i]) break;
      x[i] = 0;
      if (i == 0) return;
    }
    if (radices.empty()) return;
  }
}

std::int64_t md(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

bool well_defined(const FiniteModule& m, const FiniteModule& n, const std::vector<std::int64_t>& flat) {
  for (std::size_t i = 0; i < n.rank(); ++i)
    for (std::size_t j = 0; j < m.rank(); ++j)
      if (md(flat[i * m.rank() + j] * m.factor(j), n.factor(i)) != 0) return false;
  return true;
}

Element apply_flat(const FiniteModule& m, const FiniteModule& n, const std::vector<std::int64_t>& flat, const Element& x) {
  Element y(n.rank(), 0);
  for (std::size_t i = 0; i < n.rank(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < m.rank(); ++j) acc = md(acc + flat[i * m.rank() + j] * x[j], n.factor(i));
    y[i] = acc;
  }
  return y;
}

std::vector<std::vector<std::int64_t>> all_hom(const FiniteModule& m, const FiniteModule& n, std::uint64_t limit) {
  std::vector<std::int64_t> radices;
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < n.rank(); ++i)
    for (std::size_t j = 0; j < m.rank(); ++j) {
      radices.push_back(n.factor(i));
      box *= static_cast<std::uint64_t>(n.factor(i));
      if (box > limit * 64) throw InputError("oracle: Hom search space too large");
    }
  std::vector<std::vector<std::int64_t>> out;
  for_each_tuple(radices, [&](const std::vector<std::int64_t>& flat) {
    if (well_defined(m, n, flat)) out.push_back(flat);
    return true;
  });
  if (out.size() > limit) throw InputError("oracle: Hom set too large");
  return out;
}

}  // namespace

BigInt determinant(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw InputError("determinant: matrix not square");
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<BigInt> minor_gcd_invariants(const IntMatrix& a) {
  const std::size_t r = std::min(a.rows(), a.cols());
  std::vector<BigInt> gk(r + 1);
  gk[0] = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    BigInt g = 0;
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
        g = gcd_big(g, determinant(sub));
      });
    });
    gk[k] = g;
  }
  std::vector<BigInt> d(r);
  for (std::size_t k = 1; k <= r; ++k) d[k - 1] = gk[k] == 0 ? BigInt(0) : gk[k] / gk[k - 1];
  return d;
}

std::optional<std::vector<std::int64_t>> exhaustive_solve_mod(const ResidueMatrix& a, const std::vector<std::int64_t>& b,
                                                              std::int64_t n) {
  std::optional<std::vector<std::int64_t>> found;
  for_each_tuple(std::vector<std::int64_t>(a.cols(), n), [&](const std::vector<std::int64_t>& x) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
      if (md(acc - b[i], n) != 0) return true;
    }
    found = x;
    return false;
  });
  return found;
}

std::set<std::vector<std::int64_t>> exhaustive_kernel_mod(const ResidueMatrix& a, std::int64_t n) {
  std::set<std::vector<std::int64_t>> out;
  for_each_tuple(std::vector<std::int64_t>(a.cols(), n), [&](const std::vector<std::int64_t>& x) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
      if (md(acc, n) != 0) return true;
    }
    out.insert(x);
    return true;
  });
  return out;
}

std::set<std::vector<std::int64_t>> additive_span_mod(const std::vector<std::vector<std::int64_t>>& gens,
                                                      std::size_t length, std::int64_t n) {
  std::set<std::vector<std::int64_t>> out{std::vector<std::int64_t>(length, 0)};
  std::vector<std::vector<std::int64_t>> frontier(out.begin(), out.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        std::vector<std::int64_t> y(length);
        for (std::size_t i = 0; i < length; ++i) y[i] = md(x[i] + g[i], n);
        if (out.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return out;
}

std::vector<std::int64_t> flatten(const ModuleMorphism& f) {
  std::vector<std::int64_t> flat;
  for (std::size_t i = 0; i < f.matrix().rows(); ++i)
    for (std::size_t j = 0; j < f.matrix().cols(); ++j) flat.push_back(f.entry(i, j));
  return flat;
}

std::set<std::vector<std::int64_t>> exhaustive_hom_matrices(const FiniteModule& m, const FiniteModule& n) {
  auto all = all_hom(m, n, 1u << 20);
  return {all.begin(), all.end()};
}

std::set<std::vector<std::int64_t>> morphism_span(const std::vector<ModuleMorphism>& gens, const FiniteModule& m,
                                                  const FiniteModule& n) {
  const std::size_t len = m.rank() * n.rank();
  std::set<std::vector<std::int64_t>> out{std::vector<std::int64_t>(len, 0)};
  std::vector<std::vector<std::int64_t>> frontier(out.begin(), out.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        const auto fg = flatten(g);
        std::vector<std::int64_t> y(len);
        for (std::size_t c = 0; c < len; ++c) y[c] = md(x[c] + fg[c], n.factor(c / m.rank()));
        if (out.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return out;
}

std::vector<Element> all_elements(const FiniteModule& m) {
  std::vector<Element> out;
  for_each_tuple(m.factors(), [&](const std::vector<std::int64_t>& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

std::set<Element> subgroup(const FiniteModule& m, const std::vector<Element>& gens) {
  std::set<Element> out{Element(m.rank(), 0)};
  std::vector<Element> frontier(out.begin(), out.end());
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Element y(m.rank());
        for (std::size_t i = 0; i < m.rank(); ++i) y[i] = md(x[i] + g[i], m.factor(i));
        if (out.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return out;
}

bool pure_by_elements(const FiniteModule& m, const std::vector<Element>& gens) {
  const auto s = subgroup(m, gens);
  const auto everything = all_elements(m);
  for (std::int64_t d = 2; d <= m.modulus(); ++d) {
    if (m.modulus() % d != 0) continue;
    std::set<Element> dm, ds;
    auto times = [&](const Element& x) {
      Element y(m.rank());
      for (std::size_t i = 0; i < m.rank(); ++i) y[i] = md(d * x[i], m.factor(i));
      return y;
    };
    for (const auto& x : everything) dm.insert(times(x));
    for (const auto& x : s) ds.insert(times(x));
    for (const auto& x : s)
      if (dm.count(x) && !ds.count(x)) return false;
  }
  return true;
}

bool summand_by_search(const FiniteModule& m, const std::vector<Element>& gens, std::uint64_t hom_limit) {
  const auto s = subgroup(m, gens);
  for (const auto& flat : all_hom(m, m, hom_limit)) {
    bool ok = true;
    for (const auto& x : s)
      if (apply_flat(m, m, flat, x) != x) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (std::size_t j = 0; j < m.rank() && ok; ++j) {
      Element e(m.rank(), 0);
      e[j] = 1;
      ok = s.count(apply_flat(m, m, flat, e)) > 0;
    }
    if (ok) return true;
  }
  return false;
}

bool factors_through_by_search(const ModuleMorphism& f, const FiniteModule& p, std::uint64_t hom_limit) {
  const FiniteModule& m = f.source();
  const FiniteModule& n = f.target();
  const auto target = flatten(f);
  const auto gs = all_hom(m, p, hom_limit);
  const auto hs = all_hom(p, n, hom_limit);
  for (const auto& g : gs)
    for (const auto& h : hs) {
      bool ok = true;
      for (std::size_t j = 0; j < m.rank() && ok; ++j) {
        Element e(m.rank(), 0);
        e[j] = 1;
        const Element y = apply_flat(p, n, h, apply_flat(m, p, g, e));
        for (std::size_t i = 0; i < n.rank() && ok; ++i) ok = y[i] == target[i * m.rank() + j];
      }
      if (ok) return true;
    }
  return false;
}

bool bijective_by_elements(const ModuleMorphism& f) {
  if (f.source().cardinality() != f.target().cardinality()) return false;
  std::set<Element> seen;
  for (const auto& x : all_elements(f.source()))
    if (!seen.insert(f.apply(x)).second) return false;
  return true;
}

}  // namespace phant::oracle
