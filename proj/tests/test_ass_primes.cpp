#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "random_ideals.hpp"
#include "vnum/ass_primes.hpp"
#include "vnum/errors.hpp"

using namespace vnum;

namespace {

const RingPtr R = make_ring({"x", "y"});
const MonomialPrime px{0}, py{1}, m{0, 1};

MonomialIdeal xy(std::vector<Monomial> g) { return MonomialIdeal(R, std::move(g)); }

const MonomialIdeal I = xy({Monomial{5, 0}, Monomial{4, 3}, Monomial{2, 4}});

} // namespace

TEST_CASE("associated primes examples") {
  CHECK(associated_primes(I) == PrimeSet{px, m});
  CHECK(associated_primes(xy({Monomial{3, 2}})) == PrimeSet{px, py});
  CHECK(associated_primes(xy({Monomial{1, 0}, Monomial{0, 1}})) == PrimeSet{m});
  CHECK_THROWS_AS(associated_primes(MonomialIdeal::zero(R)), DomainError);
  CHECK_THROWS_AS(associated_primes(MonomialIdeal::unit(R)), DomainError);
}

TEST_CASE("maximal primes") {
  CHECK(max_primes(I) == PrimeSet{m});
  CHECK(max_primes(xy({Monomial{3, 2}})) == PrimeSet{px, py});
  CHECK(maximal_elements(PrimeSet{px, py, m}) == PrimeSet{m});
}

TEST_CASE("witnesses are genuine") {
  auto w = associated_primes_with_witnesses(I);
  REQUIRE(w.size() == 2);
  for (const auto& [P, u] : w) {
    CHECK(oracle::colon_is(I, u, P));
    CHECK(u.divides(lcm_of_generators(I)));
  }
}

TEST_CASE("variable cap") {
  auto R7 = make_ring({"a", "b", "c", "d", "e", "f", "g"});
  MonomialIdeal J(R7, {Monomial{1, 1, 1, 1, 1, 1, 1}});
  CHECK_THROWS_AS(associated_primes(J), DomainError);
  AssOptions wide;
  wide.max_vars = 7;
  CHECK(associated_primes(J, wide).size() == 7);
}

TEST_CASE("profile examples") {
  auto prof = ass_profile(I, 6, 3);
  CHECK(prof.per_power.size() == 6);
  for (const auto& s : prof.per_power)
    CHECK(s == PrimeSet{px, m});
  CHECK(prof.onset == 1);
  CHECK(prof.confirmed);
  auto mp = ass_profile(xy({Monomial{1, 0}, Monomial{0, 1}}), 5, 3);
  for (const auto& s : mp.per_power)
    CHECK(s == PrimeSet{m});
  CHECK_THROWS_AS(ass_profile(I, 2, 3), InputError);
  CHECK_THROWS_AS(ass_profile(I, 4, 0), InputError);
}

TEST_CASE("profile bookkeeping") {
  std::vector<PrimeSet> seq{{px}, {px, m}, {px}, {px}, {px}};
  auto p = make_ass_profile(seq, 3);
  CHECK(p.onset == 3);
  CHECK(p.confirmed);
  CHECK(p.stable_set == PrimeSet{px});
  auto q = make_ass_profile(seq, 4);
  CHECK_FALSE(q.confirmed);
}

TEST_CASE("property: agrees with the exhaustive oracle in three variables") {
  std::mt19937 rng(31);
  auto R3 = make_ring({"x", "y", "z"});
  for (int t = 0; t < 150; ++t) {
    auto J = testgen::random_ideal(rng, R3, 5, 5);
    auto ass = associated_primes(J);
    CHECK(ass == oracle::ass(J));
    for (const auto& P : ass)
      CHECK(P.contains(J));
  }
}

TEST_CASE("property: two-variable profiles are constant from the first power") {
  std::mt19937 rng(32);
  for (int t = 0; t < 60; ++t) {
    auto J = testgen::random_ideal(rng, R, 8, 5);
    auto prof = ass_profile(J, 6, 3);
    CHECK(prof.onset == 1);
    CHECK(prof.confirmed);
  }
}
