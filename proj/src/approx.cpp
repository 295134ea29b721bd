#include "phant/approx.hpp"

#include <set>
#include <utility>

#include "phant/linsolve.hpp"
#include "phant/purity.hpp"

namespace phant {

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = mod_floor(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  if (r0 != 1) throw ConsistencyError("inverse_mod: not a unit");
  return mod_floor(s0, m);
}

// Rank over F_p of a small matrix.
std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] % p == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::int64_t inv = inverse_mod(a[rank][c], p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] % p == 0) continue;
      const std::int64_t factor = mod_floor(a[r][c] * inv, p);
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = mod_floor(a[r][k] - factor * a[rank][k], p);
    }
    ++rank;
  }
  return rank;
}

std::int64_t radical(const Ring& ring) {
  std::int64_t r = 1;
  for (const auto& pp : ring.factorization()) r *= pp.prime;
  return r;
}

// e with e = 1 mod q and e = 0 mod n/q.
std::int64_t local_idempotent(std::int64_t n, std::int64_t q) {
  const std::int64_t rest = n / q;
  if (rest == 1) return 1;
  return mod_floor(rest * inverse_mod(rest % q, q), n);
}

// id - x (x) mu on a projective F, where mu pairs to 1 with x modulo ord(x),
// so the result kills x. Only coordinates whose factor is divisible by p carry mu.
std::optional<ModuleMorphism> split_off(const FiniteModule& f, const Element& x, std::int64_t p) {
  std::vector<std::size_t> local;
  for (std::size_t i = 0; i < f.rank(); ++i)
    if (f.factor(i) % p == 0) local.push_back(i);
  const std::int64_t ord = f.order(x);
  IntMatrix row(1, local.size());
  for (std::size_t k = 0; k < local.size(); ++k) row(0, k) = mod_floor(x[local[k]], ord);
  const auto mu = solve_mod(row, IntVector{1}, ord);
  if (!mu) return std::nullopt;
  ResidueMatrix j = ResidueMatrix::identity(f.rank());
  for (std::size_t k = 0; k < local.size(); ++k)
    for (std::size_t i = 0; i < f.rank(); ++i) j(i, local[k]) -= (*mu)[k] * x[i];
  return ModuleMorphism(f, f, std::move(j));
}

Submodule stable_image(const ModuleMorphism& j) {
  Submodule current = Submodule::whole(j.source());
  std::uint64_t size = current.cardinality();
  while (true) {
    Submodule next = image(j, current);
    const std::uint64_t next_size = next.cardinality();
    if (next_size == size) return current;
    current = std::move(next);
    size = next_size;
  }
}

void require_phantom_epi(const ModuleMorphism& phi, const char* who) {
  if (!is_surjective(phi)) throw InputError(std::string(who) + ": phi is not surjective");
  if (!is_phantom(phi)) throw InputError(std::string(who) + ": phi is not phantom");
}

void require_pure_mono(const ModuleMorphism& v, const FiniteModule& k, const char* who) {
  if (!(v.source() == k)) throw InputError(std::string(who) + ": v must start at the canonical kernel of phi");
  if (!is_injective(v)) throw InputError(std::string(who) + ": v is not injective");
  if (!is_pure_submodule(Submodule::image_of(v), v.target())) throw InputError(std::string(who) + ": v is not pure");
}

}  // namespace

PrecoverReport is_precover(const MorphismIdeal& ideal, const ModuleMorphism& phi,
                           std::span<const ModuleMorphism> probes) {
  if (!ideal_membership(ideal, phi)) throw InputError("is_precover: phi is not in the ideal");
  for (std::size_t k = 0; k < probes.size(); ++k) {
    if (!(probes[k].target() == phi.target())) throw InputError("is_precover: probe with the wrong codomain");
    if (!ideal_membership(ideal, probes[k])) throw InputError("is_precover: probe is not in the ideal");
  }
  for (std::size_t k = 0; k < probes.size(); ++k)
    if (!lift(probes[k], phi)) return {false, k};
  return {true, std::nullopt};
}

bool is_automorphism(const ModuleMorphism& j) {
  if (!(j.source() == j.target())) return false;
  const auto& f = j.source();
  for (const auto& pp : f.ring().factorization()) {
    std::vector<std::size_t> local;
    for (std::size_t i = 0; i < f.rank(); ++i)
      if (f.factor(i) % pp.prime == 0) local.push_back(i);
    std::vector<std::vector<std::int64_t>> a(local.size(), std::vector<std::int64_t>(local.size()));
    for (std::size_t r = 0; r < local.size(); ++r)
      for (std::size_t c = 0; c < local.size(); ++c) a[r][c] = mod_floor(j.entry(local[r], local[c]), pp.prime);
    if (rank_mod_p(std::move(a), pp.prime) != local.size()) return false;
  }
  return true;
}

CoverReport self_factorizations(const ModuleMorphism& phi, const CoverOptions& options) {
  const auto& f = phi.source();
  const auto k = kernel(phi);
  const auto id = ModuleMorphism::identity(f);
  CoverReport report{.verdict = CoverVerdict::Cover};
  if (hom_order(f, k.module) <= options.enumeration_limit) {
    report.route = CoverRoute::Enumeration;
    for (const auto& h : hom_elements(f, k.module, options.enumeration_limit)) {
      ++report.enumerated;
      auto j = id + compose(k.embedding, h);
      if (!is_automorphism(j)) {
        report.verdict = CoverVerdict::NotCover;
        report.witness = std::move(j);
        return report;
      }
    }
    return report;
  }
  const Submodule kernel_image = Submodule::image_of(k.embedding);
  const std::int64_t rad = radical(f.ring());
  const Submodule rad_f = Submodule::whole(f).multiple(rad);
  if (rad_f.contains(kernel_image)) {
    report.route = CoverRoute::Radical;
    return report;
  }
  if (is_projective(f)) {
    const std::int64_t n = f.ring().modulus();
    for (const auto& g : kernel_image.generators())
      for (const auto& pp : f.ring().factorization()) {
        const Element x = f.scale(local_idempotent(n, pp.value), g);
        if (x == f.zero_element() || Submodule::whole(f).multiple(pp.prime).contains(x)) continue;
        if (auto j = split_off(f, x, pp.prime)) {
          if (!(compose(phi, *j) == phi) || is_automorphism(*j))
            throw ConsistencyError("self_factorizations: split-off endomorphism is malformed");
          report.route = CoverRoute::SplitOff;
          report.verdict = CoverVerdict::NotCover;
          report.witness = std::move(*j);
          return report;
        }
      }
    throw ConsistencyError("self_factorizations: kernel leaves the radical but nothing splits off");
  }
  report.verdict = CoverVerdict::Indeterminate;
  report.route = CoverRoute::Undecided;
  return report;
}

CoverReport is_cover(const MorphismIdeal& ideal, const ModuleMorphism& phi, std::span<const ModuleMorphism> probes,
                     const CoverOptions& options) {
  const auto pre = is_precover(ideal, phi, probes);
  if (!pre.precover) {
    CoverReport report{.verdict = CoverVerdict::NotPrecover};
    report.failing_probe = pre.failing_probe;
    return report;
  }
  return self_factorizations(phi, options);
}

std::vector<ModuleMorphism> phantom_probes(const FiniteModule& m, std::uint64_t max_source_card) {
  constexpr std::uint64_t kElementwiseLimit = 64;
  const Ring& ring = m.ring();
  const auto pi = free_cover(m);
  std::vector<ModuleMorphism> out;
  std::set<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> seen;
  const auto add = [&](ModuleMorphism g) {
    if (g.is_zero()) return;
    std::vector<std::int64_t> entries;
    for (std::size_t i = 0; i < g.matrix().rows(); ++i)
      for (std::size_t j = 0; j < g.matrix().cols(); ++j) entries.push_back(g.entry(i, j));
    if (seen.emplace(g.source().factors(), std::move(entries)).second) out.push_back(std::move(g));
  };
  for (const auto& l : enumerate_modules(ring, max_source_card)) {
    if (l.is_zero()) continue;
    for (const auto& g : hom_group(l, pi.source())) add(compose(pi, g));
    if (hom_order(l, m) <= kElementwiseLimit)
      for (auto& h : hom_elements(l, m, kElementwiseLimit))
        if (is_phantom(h)) add(std::move(h));
  }
  for (const auto& pp : ring.factorization()) {
    const auto p = FiniteModule::cyclic(ring, pp.value);
    for (auto& g : hom_group(p, m)) add(std::move(g));
  }
  return out;
}

ModuleMorphism projective_cover(const FiniteModule& m) {
  if (is_projective(m)) return ModuleMorphism::identity(m);
  const Ring& ring = m.ring();
  std::vector<FiniteModule> pieces;
  std::vector<ModuleMorphism> onto;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    const std::int64_t d = m.factor(i);
    for (const auto& pp : ring.factorization()) {
      if (d % pp.prime != 0) continue;
      const auto piece = FiniteModule::cyclic(ring, pp.value);
      ResidueMatrix col(m.rank(), 1);
      col(i, 0) = d / prime_part(d, pp.prime);
      onto.emplace_back(piece, m, std::move(col));
      pieces.push_back(piece);
    }
  }
  const auto sum = direct_sum(pieces);
  auto cover = extend_jointly(onto, sum.injections, sum.module, m);
  if (!cover) throw ConsistencyError("projective_cover: components do not assemble");
  return *cover;
}

ModuleMorphism phantom_cover(const FiniteModule& m) {
  ModuleMorphism phi = free_cover(m);
  while (true) {
    auto report = self_factorizations(phi);
    if (report.verdict == CoverVerdict::Cover) break;
    if (report.verdict != CoverVerdict::NotCover || !report.witness)
      throw ConsistencyError("phantom_cover: minimality undecided for a projective precover");
    const auto smaller = stable_image(*report.witness).as_module();
    if (smaller.module.cardinality() >= phi.source().cardinality())
      throw ConsistencyError("phantom_cover: reduction did not shrink the source");
    phi = compose(phi, smaller.embedding);
  }
  if (!is_surjective(phi)) throw ConsistencyError("phantom_cover: result is not surjective");
  if (is_isomorphism(phi)) return ModuleMorphism::identity(m);
  return phi;
}

PushoutTransport pushout_transport(const ModuleMorphism& phi, const ModuleMorphism& v) {
  require_phantom_epi(phi, "pushout_transport");
  auto k = kernel(phi);
  require_pure_mono(v, k.module, "pushout_transport");
  auto po = pushout(k.embedding, v);
  const std::vector<ModuleMorphism> fs{ModuleMorphism::zero(v.target(), phi.target()), phi};
  const std::vector<ModuleMorphism> is{po.from_v_target, po.from_u_target};
  auto transported = extend_jointly(fs, is, po.module, phi.target());
  if (!transported) throw ConsistencyError("pushout_transport: induced map out of the pushout does not exist");
  if (!is_phantom(*transported)) throw ConsistencyError("pushout_transport: transported map is not phantom");
  return {std::move(k), std::move(po), std::move(*transported)};
}

RetractExtraction extract_retract(const ModuleMorphism& phi, const ModuleMorphism& v, const CoverOptions& options) {
  require_phantom_epi(phi, "extract_retract");
  const auto minimal = self_factorizations(phi, options);
  if (minimal.verdict != CoverVerdict::Cover) throw InputError("extract_retract: phi is not a cover");
  const auto transport = pushout_transport(phi, v);
  const auto& u = transport.kernel.embedding;
  auto t = lift(transport.transported, phi);
  if (!t) throw ConsistencyError("extract_retract: phi' does not factor through the cover");
  const auto w_into_f = compose(*t, transport.pushout.from_v_target);
  auto w = lift(w_into_f, u);
  if (!w) throw ConsistencyError("extract_retract: t restricted to K' leaves the kernel");
  const auto wv = compose(*w, v);
  const auto wv_inv = inverse(wv);
  if (!wv_inv) throw ConsistencyError("extract_retract: w * v is not an automorphism of the kernel");
  auto r = compose(*wv_inv, *w);
  if (!(compose(r, v) == ModuleMorphism::identity(v.source())))
    throw ConsistencyError("extract_retract: r * v is not the identity");
  return {std::move(r), std::move(*t), std::move(*w)};
}

}  // namespace phant
