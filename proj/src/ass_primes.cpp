#include "vnum/ass_primes.hpp"

#include <cstdint>
#include <optional>

#include "vnum/errors.hpp"
#include "vnum/kernels.hpp"
#include "parallel.hpp"

namespace vnum {

namespace {

void require_proper(const MonomialIdeal& I, const char* what) {
  if (I.is_zero())
    throw DomainError(std::string(what) + " undefined for the zero ideal");
  if (I.is_unit())
    throw DomainError(std::string(what) + " undefined for the unit ideal");
}

// Socle generator of I localized at P_S, lifted to a witness in S, or nothing.
std::optional<Monomial> localized_witness(const MonomialIdeal& I, std::uint32_t subset,
                                          const Monomial& lcm_all) {
  const auto n = I.nvars();
  std::vector<Monomial> local;
  local.reserve(I.size());
  for (Monomial g : I.gens()) {
    for (std::size_t j = 0; j < n; ++j)
      if (!(subset >> j & 1u))
        g[j] = 0;
    local.push_back(std::move(g));
  }
  local = kernels::minimize(std::move(local));
  if (local.size() == 1 && local.front().is_one())
    return std::nullopt; // I is not inside P_S

  std::vector<Monomial> socle;
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(subset >> i & 1u))
      continue;
    auto c = kernels::colon(local, Monomial::variable(n, i));
    socle = first ? std::move(c) : kernels::intersect(socle, c);
    first = false;
  }
  for (const auto& g : socle) {
    if (kernels::member(local, g))
      continue;
    Monomial w = g;
    for (std::size_t j = 0; j < n; ++j)
      if (!(subset >> j & 1u))
        w[j] = lcm_all[j];
    return w;
  }
  return std::nullopt;
}

} // namespace

std::map<MonomialPrime, Monomial> associated_primes_with_witnesses(const MonomialIdeal& I,
                                                                   const AssOptions& opts) {
  require_proper(I, "Ass");
  const auto n = I.nvars();
  if (n > opts.max_vars || n > 31)
    throw DomainError("associated primes: " + std::to_string(n) + " variables exceeds the cap of " +
                      std::to_string(opts.max_vars));

  const Monomial lcm_all = lcm_of_generators(I);
  const std::int64_t subsets = (std::int64_t{1} << n) - 1;
  std::vector<std::optional<Monomial>> found(static_cast<std::size_t>(subsets));

  detail::parallel_for(subsets, subsets > 7 && I.size() > 16, [&](std::int64_t s) {
    found[s] = localized_witness(I, static_cast<std::uint32_t>(s + 1), lcm_all);
  });

  std::map<MonomialPrime, Monomial> out;
  for (std::int64_t s = 1; s <= subsets; ++s) {
    if (!found[s - 1])
      continue;
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1)
        vars.push_back(i);
    MonomialPrime p(std::move(vars));
    if (colon_by_monomial(I, *found[s - 1]) != p.as_ideal(I.ring()))
      throw ConsistencyError("lifted socle element is not a witness for " +
                             to_string(p, *I.ring()));
    out.emplace(std::move(p), std::move(*found[s - 1]));
  }
  return out;
}

PrimeSet associated_primes(const MonomialIdeal& I, const AssOptions& opts) {
  PrimeSet out;
  for (auto& [p, w] : associated_primes_with_witnesses(I, opts))
    out.insert(p);
  return out;
}

PrimeSet maximal_elements(const PrimeSet& primes) {
  PrimeSet out;
  for (const auto& p : primes) {
    bool maximal = true;
    for (const auto& q : primes)
      if (q != p && p.is_subset_of(q))
        maximal = false;
    if (maximal)
      out.insert(p);
  }
  return out;
}

PrimeSet max_primes(const MonomialIdeal& I, const AssOptions& opts) {
  return maximal_elements(associated_primes(I, opts));
}

AssProfile make_ass_profile(std::vector<PrimeSet> per_power, unsigned window) {
  if (window < 1 || per_power.size() < window)
    throw InputError("ass profile needs k_max >= window >= 1");
  AssProfile prof;
  prof.per_power = std::move(per_power);
  const auto& last = prof.per_power.back();
  std::size_t start = prof.per_power.size() - 1;
  while (start > 0 && prof.per_power[start - 1] == last)
    --start;
  prof.onset = static_cast<unsigned>(start + 1);
  prof.stable_set = last;
  prof.confirmed = prof.per_power.size() - start >= window;
  return prof;
}

AssProfile ass_profile(const MonomialIdeal& I, unsigned k_max, unsigned window,
                       const AssOptions& opts) {
  if (window < 1 || k_max < window)
    throw InputError("ass profile needs k_max >= window >= 1");
  auto pw = powers(I, k_max);
  std::vector<PrimeSet> per(k_max);
  for (unsigned k = 0; k < k_max; ++k)
    per[k] = associated_primes(pw[k], opts);
  return make_ass_profile(std::move(per), window);
}

} // namespace vnum
