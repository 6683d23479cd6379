#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "random_ideals.hpp"
#include "vnum/errors.hpp"
#include "vnum/vnumber.hpp"

using namespace vnum;

namespace {

const RingPtr R = make_ring({"x", "y"});
const MonomialPrime px{0}, py{1}, m{0, 1};

MonomialIdeal xy(std::vector<Monomial> g) { return MonomialIdeal(R, std::move(g)); }

const MonomialIdeal I = xy({Monomial{5, 0}, Monomial{4, 3}, Monomial{2, 4}});
const MonomialIdeal M = xy({Monomial{1, 0}, Monomial{0, 1}});

} // namespace

TEST_CASE("module generators") {
  auto gm = module_min_gens(I, m);
  CHECK(gm.gens == std::vector<Monomial>{Monomial{4, 2}, Monomial{3, 3}});
  CHECK(gm.witnesses == gm.gens);
  auto gx = module_min_gens(I, px);
  CHECK(gx.gens == std::vector<Monomial>{Monomial{4, 0}, Monomial{1, 4}, Monomial{3, 3}});
  CHECK(gx.witnesses == std::vector<Monomial>{Monomial{1, 4}});
  auto gM = module_min_gens(M, m);
  CHECK(gM.gens == std::vector<Monomial>{Monomial{0, 0}});
  CHECK(gM.witnesses == gM.gens);
}

TEST_CASE("v_p examples") {
  auto vx = v_p(I, px);
  CHECK(vx.v == 5);
  CHECK(vx.alpha_mod == 4);
  CHECK(vx.omega_mod == 6);
  CHECK(vx.witness == Monomial{1, 4});
  CHECK(v_p(I, m).v == 6);
  CHECK(v_p(M, m).v == 0);
  CHECK_THROWS_AS(v_p(I, py), DomainError);
}

TEST_CASE("v examples") {
  CHECK(v(I) == 5);
  CHECK(v(M) == 0);
  CHECK(v(xy({Monomial{3, 0}, Monomial{2, 3}})) == 4);
  CHECK(v(xy({Monomial{0, 3}})) == 2);
}

TEST_CASE("brute force examples") {
  CHECK(v_p_bruteforce(I, px) == 5);
  CHECK(v_p_bruteforce(M, m) == 0);
  CHECK(v_p_bruteforce(xy({Monomial{2, 0}, Monomial{1, 1}}), m) == 1);
  CHECK_THROWS_AS(v_p_bruteforce(I, py), DomainError);
  CHECK_THROWS_AS(v_p_bruteforce(I, px, 10), DomainError);
}

TEST_CASE("property: v_p agrees with brute force and the oracle") {
  std::mt19937 rng(41);
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(n);
    auto Rn = make_ring(names);
    for (int t = 0; t < 60; ++t) {
      auto J = testgen::random_ideal(rng, Rn, n == 3 ? 6 : 8, 5);
      for (const auto& val : v_values(J)) {
        CHECK(val.v == v_p_bruteforce(J, val.prime));
        CHECK(val.v == oracle::v_p(J, val.prime).value());
        CHECK(oracle::colon_is(J, val.witness, val.prime));
        CHECK(val.witness.degree() == val.v);
      }
      CHECK(v(J) == oracle::v(J).value());
    }
  }
}

TEST_CASE("property: module bounds and the maximal-prime equality") {
  std::mt19937 rng(42);
  auto R3 = make_ring({"x", "y", "z"});
  for (int t = 0; t < 150; ++t) {
    auto J = testgen::random_ideal(rng, R3, 6, 6);
    auto vals = v_values(J);
    auto ass = associated_primes(J);
    auto maxp = maximal_elements(ass);
    Degree min_alpha_mod = -1;
    for (const auto& val : vals) {
      CHECK(val.alpha_mod <= val.v);
      CHECK(val.v <= val.omega_mod);
      if (maxp.count(val.prime))
        CHECK(val.v == val.alpha_mod);
      if (min_alpha_mod < 0 || val.alpha_mod < min_alpha_mod)
        min_alpha_mod = val.alpha_mod;
      auto mg = module_min_gens(J, val.prime);
      for (const auto& g : mg.gens) {
        CHECK_FALSE(J.contains(g));
        CHECK(oracle::in_colon_prime(J, g, val.prime));
      }
      for (const auto& g : mg.witnesses)
        CHECK(oracle::colon_is(J, g, val.prime));
    }
    if (ass == maxp)
      CHECK(v(J) == min_alpha_mod);
  }
}
