#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vnum/monomial.hpp"

namespace vnum {

class MonomialIdeal;

/// A prime generated by a nonempty set of variables, e.g. (x), (x,y).
class MonomialPrime {
public:
  /// Sorts and deduplicates; throws InputError on an empty set.
  explicit MonomialPrime(std::vector<std::size_t> vars);
  MonomialPrime(std::initializer_list<std::size_t> vars)
      : MonomialPrime(std::vector<std::size_t>(vars)) {}

  const std::vector<std::size_t>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  bool contains_var(std::size_t i) const;
  /// Set inclusion of the variable sets.
  bool is_subset_of(const MonomialPrime& other) const;
  /// Every generator of I lies in this prime.
  bool contains(const MonomialIdeal& I) const;

  MonomialIdeal as_ideal(const RingPtr& ring) const;

  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
  /// Smaller primes first, then lexicographic on variable indices.
  friend std::strong_ordering operator<=>(const MonomialPrime& a, const MonomialPrime& b);

private:
  std::vector<std::size_t> vars_;
};

/// `(x,y)`.
std::string to_string(const MonomialPrime& p, const RingContext& ctx);

/// A monomial ideal given by its minimal generating set G(I), kept in
/// canonical graded order. The zero ideal has no generators; the unit ideal
/// is generated by 1.
class MonomialIdeal {
public:
  /// Validates lengths and minimizes.
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);

  static MonomialIdeal zero(RingPtr ring);
  static MonomialIdeal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->size(); }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }

  bool contains(const Monomial& u) const;
  /// Every generator of J lies in this ideal.
  bool contains(const MonomialIdeal& J) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

private:
  struct Trusted {};
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens, Trusted);
  friend MonomialIdeal from_minimal(RingPtr, std::vector<Monomial>);

  RingPtr ring_;
  std::vector<Monomial> gens_;
};

/// Wraps an already minimal, canonically sorted generator set without re-checking.
MonomialIdeal from_minimal(RingPtr ring, std::vector<Monomial> gens);

MonomialIdeal minimize_generators(const RingPtr& ring, std::vector<Monomial> gens);
bool contains(const MonomialIdeal& I, const Monomial& u);

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
/// I^k by iterated multiplication; k = 0 yields the unit ideal.
MonomialIdeal power(const MonomialIdeal& I, unsigned k);
/// All powers I^1, ..., I^k_max.
std::vector<MonomialIdeal> powers(const MonomialIdeal& I, unsigned k_max);

/// (I : u) = { w : wu ∈ I }.
MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& u);
/// (I : P) = ∩_{x_i ∈ P} (I : x_i).
MonomialIdeal colon_by_prime(const MonomialIdeal& I, const MonomialPrime& P);
/// (I : J) = ∩_{g ∈ G(J)} (I : g).
MonomialIdeal colon_by_ideal(const MonomialIdeal& I, const MonomialIdeal& J);

/// (min, max) generator degree; DomainError on the zero or unit ideal.
std::pair<Degree, Degree> alpha_omega(const MonomialIdeal& I);
Monomial lcm_of_generators(const MonomialIdeal& I);

/// `(x^5, x^4*y^3, x^2*y^4)`; `(0)` and `(1)` for the trivial ideals.
std::string to_string(const MonomialIdeal& I);

} // namespace vnum
