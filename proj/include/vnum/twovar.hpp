#pragma once

// Closed forms for monomial ideals of K[x, y]. An ideal with minimal generators
// x^{a_1}y^{b_1}, ..., x^{a_m}y^{b_m} is encoded by a strictly decreasing
// sequence a and a strictly increasing sequence b.

#include <map>
#include <vector>

#include "vnum/ass_primes.hpp"
#include "vnum/ideal.hpp"

namespace vnum::twovar {

inline const MonomialPrime px{0};
inline const MonomialPrime py{1};
inline const MonomialPrime max_ideal{0, 1};

class StaircaseIdeal {
public:
  /// Throws InputError unless a_1 > ... > a_m >= 0, 0 <= b_1 < ... < b_m,
  /// equal lengths m >= 1, and the ideal is proper.
  StaircaseIdeal(std::vector<Exponent> a, std::vector<Exponent> b);

  std::size_t m() const { return a_.size(); }
  const std::vector<Exponent>& a() const { return a_; }
  const std::vector<Exponent>& b() const { return b_; }
  /// 1-based accessors matching the usual indexing.
  Degree a_at(std::size_t i) const { return a_.at(i - 1); }
  Degree b_at(std::size_t i) const { return b_.at(i - 1); }

  friend bool operator==(const StaircaseIdeal&, const StaircaseIdeal&) = default;

private:
  std::vector<Exponent> a_;
  std::vector<Exponent> b_;
};

/// The ring K[x, y] shared by all staircase conversions.
const RingPtr& ring_xy();

/// DomainError unless I lives in a two-variable ring and is nonzero proper.
StaircaseIdeal from_ideal(const MonomialIdeal& I);
MonomialIdeal to_ideal(const StaircaseIdeal& J, const RingPtr& ring = ring_xy());

PrimeSet ass_closed_form(const StaircaseIdeal& J);

/// v_{p_x}(I^k) = k(a_m + b_m) - 1 when a_m > 0; v_{p_y}(I^k) = k(a_1 + b_1) - 1 when b_1 > 0.
std::map<MonomialPrime, Degree> v_power_closed_forms(const StaircaseIdeal& J, unsigned k);

/// min over j of a_j + b_{j+1} - 2. DomainError when m == 1.
Degree v_m_closed_form(const StaircaseIdeal& J);

/// v(I) from the four-case formula.
Degree v_closed_form(const StaircaseIdeal& J);

/// (x^slope, x^{slope-1} y^{intercept+2}), whose powers satisfy
/// v(I^k) = slope*k + intercept for every k >= 1.
StaircaseIdeal family_ideal(Degree slope, Degree intercept);

/// x^{k*slope - i} y^{i*(intercept+2)}, i = 0..k, in canonical order.
std::vector<Monomial> family_power_gens(Degree slope, Degree intercept, unsigned k);

} // namespace vnum::twovar
