#include "vnum/twovar.hpp"

#include <algorithm>
#include <limits>

#include "vnum/errors.hpp"

namespace vnum::twovar {

StaircaseIdeal::StaircaseIdeal(std::vector<Exponent> a, std::vector<Exponent> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty() || a_.size() != b_.size())
    throw InputError("staircase sequences must be nonempty and of equal length");
  for (std::size_t i = 1; i < a_.size(); ++i) {
    if (a_[i] >= a_[i - 1])
      throw InputError("staircase x-exponents must strictly decrease");
    if (b_[i] <= b_[i - 1])
      throw InputError("staircase y-exponents must strictly increase");
  }
  if (a_.size() == 1 && a_[0] == 0 && b_[0] == 0)
    throw InputError("staircase describes the unit ideal");
}

const RingPtr& ring_xy() {
  static const RingPtr r = make_ring({"x", "y"});
  return r;
}

StaircaseIdeal from_ideal(const MonomialIdeal& I) {
  if (I.nvars() != 2)
    throw DomainError("staircase form needs exactly two variables");
  if (!I.is_proper_nonzero())
    throw DomainError("staircase form needs a nonzero proper ideal");
  auto gens = I.gens();
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& u, const Monomial& w) { return u[0] > w[0]; });
  std::vector<Exponent> a, b;
  for (const auto& g : gens) {
    a.push_back(g[0]);
    b.push_back(g[1]);
  }
  try {
    return StaircaseIdeal(std::move(a), std::move(b));
  } catch (const InputError& e) {
    throw ConsistencyError(std::string("minimal generators do not form a staircase: ") + e.what());
  }
}

MonomialIdeal to_ideal(const StaircaseIdeal& J, const RingPtr& ring) {
  if (ring->size() != 2)
    throw DomainError("staircase ideals live in a two-variable ring");
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < J.m(); ++i)
    gens.push_back(Monomial{J.a()[i], J.b()[i]});
  return MonomialIdeal(ring, std::move(gens));
}

PrimeSet ass_closed_form(const StaircaseIdeal& J) {
  PrimeSet out;
  if (J.a_at(J.m()) > 0)
    out.insert(px);
  if (J.b_at(1) > 0)
    out.insert(py);
  if (J.m() > 1)
    out.insert(max_ideal);
  return out;
}

std::map<MonomialPrime, Degree> v_power_closed_forms(const StaircaseIdeal& J, unsigned k) {
  if (k < 1)
    throw InputError("power must be at least 1");
  const Degree kk = k;
  std::map<MonomialPrime, Degree> out;
  const std::size_t m = J.m();
  if (J.a_at(m) > 0)
    out[px] = kk * (J.a_at(m) + J.b_at(m)) - 1;
  if (J.b_at(1) > 0)
    out[py] = kk * (J.a_at(1) + J.b_at(1)) - 1;
  return out;
}

Degree v_m_closed_form(const StaircaseIdeal& J) {
  if (J.m() == 1)
    throw DomainError("principal ideal: the maximal ideal is not associated");
  Degree best = std::numeric_limits<Degree>::max();
  for (std::size_t j = 1; j < J.m(); ++j)
    best = std::min(best, J.a_at(j) + J.b_at(j + 1) - 2);
  return best;
}

Degree v_closed_form(const StaircaseIdeal& J) {
  const std::size_t m = J.m();
  Degree best = std::numeric_limits<Degree>::max();
  for (std::size_t i = 1; i < m; ++i)
    best = std::min(best, J.a_at(i) + J.b_at(i + 1) - 2);
  if (J.b_at(1) != 0)
    best = std::min(best, J.a_at(1) + J.b_at(1) - 1);
  if (J.a_at(m) != 0)
    best = std::min(best, J.a_at(m) + J.b_at(m) - 1);
  return best;
}

namespace {

void check_family(Degree slope, Degree intercept) {
  if (slope < 1)
    throw InputError("family slope must be >= 1");
  if (intercept < -1)
    throw InputError("family intercept must be >= -1");
  if (slope > std::numeric_limits<Exponent>::max() ||
      intercept + 2 > std::numeric_limits<Exponent>::max())
    throw ArithmeticError("family parameters exceed the exponent range");
}

} // namespace

StaircaseIdeal family_ideal(Degree slope, Degree intercept) {
  check_family(slope, intercept);
  return StaircaseIdeal({static_cast<Exponent>(slope), static_cast<Exponent>(slope - 1)},
                        {0, static_cast<Exponent>(intercept + 2)});
}

std::vector<Monomial> family_power_gens(Degree slope, Degree intercept, unsigned k) {
  check_family(slope, intercept);
  if (k < 1)
    throw InputError("power must be at least 1");
  const Degree top = static_cast<Degree>(k) * slope;
  const Degree ystep = intercept + 2;
  if (top > std::numeric_limits<Exponent>::max() ||
      static_cast<Degree>(k) * ystep > std::numeric_limits<Exponent>::max())
    throw ArithmeticError("family power exceeds the exponent range");
  std::vector<Monomial> out;
  for (Degree i = 0; i <= static_cast<Degree>(k); ++i)
    out.push_back(Monomial{static_cast<Exponent>(top - i), static_cast<Exponent>(i * ystep)});
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace vnum::twovar
