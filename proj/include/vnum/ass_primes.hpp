#pragma once

#include <map>
#include <set>
#include <vector>

#include "vnum/ideal.hpp"

namespace vnum {

using PrimeSet = std::set<MonomialPrime>;

struct AssOptions {
  /// Variable cap; witness search grows exponentially with n.
  std::size_t max_vars = 6;
};

/// Ass(I) together with one witness u per prime: u divides lcm(G(I)), u ∉ I
/// and (I : u) = P.
///
/// For each variable subset S the ideal is localized at P_S (variables outside
/// S set to 1). P_S is associated iff the localized ideal has a nonzero socle,
/// and every socle generator lifts to a witness after multiplying by the full
/// lcm exponents of the variables outside S.
std::map<MonomialPrime, Monomial> associated_primes_with_witnesses(const MonomialIdeal& I,
                                                                   const AssOptions& opts = {});

PrimeSet associated_primes(const MonomialIdeal& I, const AssOptions& opts = {});

/// Members of Ass(I) maximal under inclusion.
PrimeSet max_primes(const MonomialIdeal& I, const AssOptions& opts = {});
PrimeSet maximal_elements(const PrimeSet& primes);

struct AssProfile {
  std::vector<PrimeSet> per_power; ///< per_power[k-1] = Ass(I^k)
  PrimeSet stable_set;
  unsigned onset = 1;     ///< first k of the longest constant suffix
  bool confirmed = false; ///< the last `window` entries agree
};

/// Builds the profile from precomputed Ass(I^k), k = 1..per_power.size().
AssProfile make_ass_profile(std::vector<PrimeSet> per_power, unsigned window);

AssProfile ass_profile(const MonomialIdeal& I, unsigned k_max, unsigned window = 3,
                       const AssOptions& opts = {});

} // namespace vnum
