#include "vnum/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "vnum/errors.hpp"
#include "vnum/kernels.hpp"

namespace vnum {

// ---------------------------------------------------------------- primes

MonomialPrime::MonomialPrime(std::vector<std::size_t> vars) : vars_(std::move(vars)) {
  if (vars_.empty())
    throw InputError("a monomial prime needs at least one variable");
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

bool MonomialPrime::contains_var(std::size_t i) const {
  return std::binary_search(vars_.begin(), vars_.end(), i);
}

bool MonomialPrime::is_subset_of(const MonomialPrime& other) const {
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
}

bool MonomialPrime::contains(const MonomialIdeal& I) const {
  return std::all_of(I.gens().begin(), I.gens().end(), [&](const Monomial& g) {
    return std::any_of(vars_.begin(), vars_.end(), [&](std::size_t i) { return g[i] > 0; });
  });
}

MonomialIdeal MonomialPrime::as_ideal(const RingPtr& ring) const {
  std::vector<Monomial> gens;
  for (auto i : vars_) {
    if (i >= ring->size())
      throw InputError("prime variable index out of range");
    gens.push_back(Monomial::variable(ring->size(), i));
  }
  return MonomialIdeal(ring, std::move(gens));
}

std::strong_ordering operator<=>(const MonomialPrime& a, const MonomialPrime& b) {
  if (auto c = a.vars_.size() <=> b.vars_.size(); c != 0)
    return c;
  return a.vars_ <=> b.vars_;
}

std::string to_string(const MonomialPrime& p, const RingContext& ctx) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.vars().size(); ++k) {
    if (k)
      s += ',';
    s += ctx.name(p.vars()[k]);
  }
  return s + ")";
}

// ---------------------------------------------------------------- ideals

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  if (!ring_)
    throw InputError("ideal without ring context");
  for (const auto& g : gens)
    require_length(g, ring_->size());
  gens_ = kernels::minimize(std::move(gens));
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens, Trusted)
    : ring_(std::move(ring)), gens_(std::move(gens)) {}

MonomialIdeal from_minimal(RingPtr ring, std::vector<Monomial> gens) {
  return MonomialIdeal(std::move(ring), std::move(gens), MonomialIdeal::Trusted{});
}

MonomialIdeal MonomialIdeal::zero(RingPtr ring) { return MonomialIdeal(std::move(ring), {}); }

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  const auto n = ring->size();
  return MonomialIdeal(std::move(ring), {Monomial::one(n)});
}

bool MonomialIdeal::contains(const Monomial& u) const { return kernels::member(gens_, u); }

bool MonomialIdeal::contains(const MonomialIdeal& J) const {
  return std::all_of(J.gens().begin(), J.gens().end(),
                     [&](const Monomial& g) { return contains(g); });
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  return *a.ring_ == *b.ring_ && a.gens_ == b.gens_;
}

MonomialIdeal minimize_generators(const RingPtr& ring, std::vector<Monomial> gens) {
  return MonomialIdeal(ring, std::move(gens));
}

bool contains(const MonomialIdeal& I, const Monomial& u) {
  require_length(u, I.nvars());
  return I.contains(u);
}

namespace {

void require_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ring() != J.ring() && *I.ring() != *J.ring())
    throw InputError("ideals live in different rings");
}

} // namespace

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  return from_minimal(I.ring(), kernels::product(I.gens(), J.gens()));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  return from_minimal(I.ring(), kernels::intersect(I.gens(), J.gens()));
}

MonomialIdeal power(const MonomialIdeal& I, unsigned k) {
  if (k == 0)
    return MonomialIdeal::unit(I.ring());
  MonomialIdeal acc = I;
  for (unsigned j = 1; j < k; ++j)
    acc = product(acc, I);
  return acc;
}

std::vector<MonomialIdeal> powers(const MonomialIdeal& I, unsigned k_max) {
  std::vector<MonomialIdeal> out;
  out.reserve(k_max);
  for (unsigned k = 1; k <= k_max; ++k)
    out.push_back(k == 1 ? I : product(out.back(), I));
  return out;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& u) {
  require_length(u, I.nvars());
  return from_minimal(I.ring(), kernels::colon(I.gens(), u));
}

MonomialIdeal colon_by_prime(const MonomialIdeal& I, const MonomialPrime& P) {
  const auto n = I.nvars();
  std::vector<Monomial> acc;
  bool first = true;
  for (auto i : P.vars()) {
    if (i >= n)
      throw InputError("prime variable index out of range");
    auto c = kernels::colon(I.gens(), Monomial::variable(n, i));
    acc = first ? std::move(c) : kernels::intersect(acc, c);
    first = false;
  }
  return from_minimal(I.ring(), std::move(acc));
}

MonomialIdeal colon_by_ideal(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  if (J.is_zero())
    return MonomialIdeal::unit(I.ring());
  std::vector<Monomial> acc;
  bool first = true;
  for (const auto& g : J.gens()) {
    auto c = kernels::colon(I.gens(), g);
    acc = first ? std::move(c) : kernels::intersect(acc, c);
    first = false;
  }
  return from_minimal(I.ring(), std::move(acc));
}

std::pair<Degree, Degree> alpha_omega(const MonomialIdeal& I) {
  if (I.is_zero())
    throw DomainError("alpha/omega undefined for the zero ideal");
  if (I.is_unit())
    throw DomainError("alpha/omega undefined for the unit ideal");
  // canonical order is by degree first
  return {I.gens().front().degree(), I.gens().back().degree()};
}

Monomial lcm_of_generators(const MonomialIdeal& I) {
  Monomial l(I.nvars());
  for (const auto& g : I.gens())
    l = lcm(l, g);
  return l;
}

std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero())
    return "(0)";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < I.gens().size(); ++i) {
    if (i)
      os << ", ";
    os << to_string(I.gens()[i], *I.ring());
  }
  os << ')';
  return os.str();
}

} // namespace vnum
