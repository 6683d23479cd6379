#pragma once

#include <vector>

#include "vnum/ass_primes.hpp"
#include "vnum/ideal.hpp"

namespace vnum {

/// Minimal monomial generators of the module (I : P) / I.
struct ModuleGens {
  MonomialPrime prime;
  std::vector<Monomial> gens;      ///< G((I : P)) minus members of I
  std::vector<Monomial> witnesses; ///< the g in gens with (I : g) == P
};

struct VValue {
  MonomialPrime prime;
  Degree v = 0;
  Degree alpha_mod = 0; ///< lowest degree of a module generator
  Degree omega_mod = 0; ///< highest degree of a module generator
  Monomial witness;     ///< a minimal-degree witness, first in canonical order

  friend bool operator==(const VValue&, const VValue&) = default;
};

ModuleGens module_min_gens(const MonomialIdeal& I, const MonomialPrime& P);
/// Same, reusing an already computed (I : P).
ModuleGens module_min_gens(const MonomialIdeal& I, const MonomialPrime& P,
                           const MonomialIdeal& colon_ip);

/// v_P(I). DomainError if P ∉ Ass(I); ConsistencyError if P ∈ Ass(I) but
/// no module generator is a witness (cannot happen for a correct engine).
VValue v_p(const MonomialIdeal& I, const MonomialPrime& P);
VValue v_p(const MonomialIdeal& I, const MonomialPrime& P, const MonomialIdeal& colon_ip);

/// v_P(I) for every P ∈ Ass(I), in prime order.
std::vector<VValue> v_values(const MonomialIdeal& I, const AssOptions& opts = {});

/// v(I) = min over Ass(I) of v_P(I).
Degree v(const MonomialIdeal& I, const AssOptions& opts = {});

/// Exhaustive oracle: minimum degree of any monomial u dividing lcm(G(I))
/// with (I : u) == P. Throws DomainError when no such u exists, or when the
/// divisor lattice holds more than `lattice_limit` points.
Degree v_p_bruteforce(const MonomialIdeal& I, const MonomialPrime& P,
                      std::uint64_t lattice_limit = 50'000'000);

} // namespace vnum
