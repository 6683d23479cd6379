#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "vnum/errors.hpp"
#include "vnum/monomial.hpp"

using namespace vnum;

TEST_CASE("ring context validates names") {
  auto R = make_ring({"x", "y", "z"});
  CHECK(R->size() == 3);
  CHECK(R->index_of("y") == 1);
  CHECK(R->index_of("w") == -1);
  CHECK_THROWS_AS(make_ring({"x", "x"}), InputError);
  CHECK_THROWS_AS(make_ring({"x", ""}), InputError);
}

TEST_CASE("degree, divisibility, one") {
  Monomial a{2, 1}, b{3, 1};
  CHECK(a.degree() == 3);
  CHECK(a.divides(b));
  CHECK_FALSE(b.divides(a));
  CHECK(Monomial::one(2).is_one());
  CHECK(Monomial::variable(3, 1) == Monomial{0, 1, 0});
}

TEST_CASE("graded order puts x^2 before xy before y^2") {
  std::vector<Monomial> ms{Monomial{0, 2}, Monomial{1, 0}, Monomial{1, 1}, Monomial{2, 0}};
  std::sort(ms.begin(), ms.end());
  CHECK(ms == std::vector<Monomial>{Monomial{1, 0}, Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}});
}

TEST_CASE("checked arithmetic") {
  const Exponent big = std::numeric_limits<Exponent>::max();
  CHECK_THROWS_AS((Monomial{big, 0} * Monomial{1, 0}), ArithmeticError);
  CHECK_THROWS_AS(pow(Monomial{1u << 20, 0}, 1u << 13), ArithmeticError);
  CHECK(pow(Monomial{2, 3}, 4) == Monomial{8, 12});
  CHECK(pow(Monomial{2, 3}, 0) == Monomial{0, 0});
  CHECK_THROWS_AS((Monomial{1, 0} * Monomial{1}), InputError);
}

TEST_CASE("lcm, gcd, strip agree componentwise") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Exponent> e(0, 9);
  for (int t = 0; t < 500; ++t) {
    Monomial a{e(rng), e(rng), e(rng)}, b{e(rng), e(rng), e(rng)};
    const auto l = lcm(a, b), g = gcd(a, b), s = strip(a, b);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(l[i] == std::max(a[i], b[i]));
      CHECK(g[i] == std::min(a[i], b[i]));
      CHECK(s[i] == (a[i] > b[i] ? a[i] - b[i] : 0));
    }
    CHECK(l * g == a * b);
    CHECK(s * g == a);
    CHECK(((a < b) + (b < a) + (a == b)) == 1);
  }
}

TEST_CASE("printing") {
  auto R = make_ring({"x", "y"});
  CHECK(to_string(Monomial{5, 2}, *R) == "x^5*y^2");
  CHECK(to_string(Monomial{1, 0}, *R) == "x");
  CHECK(to_string(Monomial{0, 0}, *R) == "1");
}
