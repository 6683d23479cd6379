#include "vnum/vnumber.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "vnum/errors.hpp"
#include "vnum/kernels.hpp"
#include "parallel.hpp"

namespace vnum {

namespace {

// (I : g) == P, tested without materializing P as an ideal: the colon must
// have exactly one generator x_i per variable of P.
bool colon_is_prime(const MonomialIdeal& I, const Monomial& g, const MonomialPrime& P) {
  const auto c = kernels::colon(I.gens(), g);
  if (c.size() != P.size())
    return false;
  for (const auto& m : c) {
    if (m.degree() != 1)
      return false;
    std::size_t i = 0;
    while (m[i] == 0)
      ++i;
    if (!P.contains_var(i))
      return false;
  }
  return true;
}

} // namespace

ModuleGens module_min_gens(const MonomialIdeal& I, const MonomialPrime& P,
                           const MonomialIdeal& colon_ip) {
  if (!I.is_proper_nonzero())
    throw DomainError("module (I:P)/I needs a nonzero proper ideal");
  ModuleGens out{P, {}, {}};
  for (const auto& g : colon_ip.gens()) {
    if (I.contains(g))
      continue;
    out.gens.push_back(g);
    if (colon_is_prime(I, g, P))
      out.witnesses.push_back(g);
  }
  return out;
}

ModuleGens module_min_gens(const MonomialIdeal& I, const MonomialPrime& P) {
  if (!I.is_proper_nonzero())
    throw DomainError("module (I:P)/I needs a nonzero proper ideal");
  return module_min_gens(I, P, colon_by_prime(I, P));
}

VValue v_p(const MonomialIdeal& I, const MonomialPrime& P, const MonomialIdeal& colon_ip) {
  const auto mg = module_min_gens(I, P, colon_ip);
  if (mg.witnesses.empty()) {
    if (associated_primes(I).contains(P))
      throw ConsistencyError("no witness among module generators for associated prime " +
                             to_string(P, *I.ring()));
    throw DomainError(to_string(P, *I.ring()) + " is not an associated prime of " + to_string(I));
  }
  // gens is canonically ordered (degree first), so front/back are the extremes
  // and the first witness is the canonical minimal-degree one.
  return VValue{P, mg.witnesses.front().degree(), mg.gens.front().degree(),
                mg.gens.back().degree(), mg.witnesses.front()};
}

VValue v_p(const MonomialIdeal& I, const MonomialPrime& P) {
  if (!I.is_proper_nonzero())
    throw DomainError("v-number needs a nonzero proper ideal");
  return v_p(I, P, colon_by_prime(I, P));
}

std::vector<VValue> v_values(const MonomialIdeal& I, const AssOptions& opts) {
  const auto ass = associated_primes(I, opts);
  const std::vector<MonomialPrime> primes(ass.begin(), ass.end());
  std::vector<std::optional<VValue>> slots(primes.size());
  const auto np = static_cast<std::int64_t>(primes.size());
  detail::parallel_for(np, I.size() > 64, [&](std::int64_t i) { slots[i] = v_p(I, primes[i]); });
  std::vector<VValue> out;
  for (auto& s : slots)
    out.push_back(std::move(*s));
  return out;
}

Degree v(const MonomialIdeal& I, const AssOptions& opts) {
  const auto vals = v_values(I, opts);
  Degree best = std::numeric_limits<Degree>::max();
  for (const auto& x : vals)
    best = std::min(best, x.v);
  return best;
}

Degree v_p_bruteforce(const MonomialIdeal& I, const MonomialPrime& P,
                      std::uint64_t lattice_limit) {
  if (!I.is_proper_nonzero())
    throw DomainError("v-number needs a nonzero proper ideal");
  const auto n = I.nvars();
  const Monomial L = lcm_of_generators(I);
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    points *= static_cast<std::uint64_t>(L[i]) + 1;
    if (points > lattice_limit)
      throw DomainError("divisor lattice too large for exhaustive search");
  }

  Degree best = std::numeric_limits<Degree>::max();
  const auto total = static_cast<std::int64_t>(points);
#pragma omp parallel for schedule(static) reduction(min : best) if (total > 4096)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    Monomial u(n);
    auto rem = static_cast<std::uint64_t>(idx);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t radix = static_cast<std::uint64_t>(L[i]) + 1;
      u[i] = static_cast<Exponent>(rem % radix);
      rem /= radix;
    }
    const Degree d = u.degree();
    if (d >= best || I.contains(u))
      continue;
    if (colon_is_prime(I, u, P))
      best = d;
  }
  if (best == std::numeric_limits<Degree>::max())
    throw DomainError(to_string(P, *I.ring()) + " is not an associated prime of " + to_string(I));
  return best;
}

} // namespace vnum
