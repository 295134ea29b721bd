#include "phant/linsolve.hpp"

#include <algorithm>
#include <set>

#include "phant/smith.hpp"

namespace phant {
namespace {

IntMatrix append_modulus_block(const IntMatrix& a, const IntVector& moduli) {
  if (moduli.size() != a.rows()) throw InputError("congruence system: one modulus per row required");
  IntMatrix m(a.rows(), a.cols() + a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    m(i, a.cols() + i) = moduli[i];
  }
  return m;
}

}  // namespace

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw InputError("solve_integer: right-hand side has wrong length");
  const auto snf = smith_normal_form(a);
  IntVector ub(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.rows(); ++k)
      if (snf.U(i, k) != 0 && b[k] != 0) ub[i] += snf.U(i, k) * b[k];

  IntVector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < snf.rank) {
      const BigInt& d = snf.D(i, i);
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = ub[i] / d;
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  IntVector x(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t k = 0; k < snf.rank; ++k)
      if (snf.V(i, k) != 0 && y[k] != 0) x[i] += snf.V(i, k) * y[k];
  return x;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  std::vector<IntVector> basis;
  for (std::size_t k = snf.rank; k < a.cols(); ++k) basis.push_back(snf.V.column(k));
  return basis;
}

std::optional<IntVector> solve_congruences(const IntMatrix& a, const IntVector& b, const IntVector& moduli) {
  auto z = solve_integer(append_modulus_block(a, moduli), b);
  if (!z) return std::nullopt;
  z->resize(a.cols());
  return z;
}

std::vector<IntVector> congruence_kernel(const IntMatrix& a, const IntVector& moduli) {
  std::vector<IntVector> out;
  for (auto& z : integer_kernel(append_modulus_block(a, moduli))) {
    z.resize(a.cols());
    if (std::any_of(z.begin(), z.end(), [](const BigInt& x) { return x != 0; })) out.push_back(std::move(z));
  }
  return out;
}

std::optional<std::vector<std::int64_t>> solve_mod(const IntMatrix& a, const IntVector& b, std::int64_t n) {
  if (n < 2) throw InputError("solve_mod: modulus must be >= 2");
  if (b.size() != a.rows()) throw InputError("solve_mod: dimension mismatch");
  auto x = solve_congruences(a, b, IntVector(a.rows(), BigInt(n)));
  if (!x) return std::nullopt;
  std::vector<std::int64_t> out(x->size());
  for (std::size_t i = 0; i < x->size(); ++i) out[i] = static_cast<std::int64_t>(mod_floor((*x)[i], BigInt(n)));
  return out;
}

std::vector<std::vector<std::int64_t>> solution_space_mod(const IntMatrix& a, std::int64_t n) {
  if (n < 2) throw InputError("solution_space_mod: modulus must be >= 2");
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& z : congruence_kernel(a, IntVector(a.rows(), BigInt(n)))) {
    std::vector<std::int64_t> v(z.size());
    bool nonzero = false;
    for (std::size_t i = 0; i < z.size(); ++i) {
      v[i] = static_cast<std::int64_t>(mod_floor(z[i], BigInt(n)));
      nonzero = nonzero || v[i] != 0;
    }
    if (nonzero && seen.insert(v).second) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace phant
