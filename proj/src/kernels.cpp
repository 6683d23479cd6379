#include "vnum/kernels.hpp"

#include <algorithm>
#include <cstdint>

#include "vnum/errors.hpp"

namespace vnum::kernels {

namespace {

// Below this many candidates the OpenMP fork costs more than it saves.
constexpr std::size_t kParallelThreshold = 512;

void sort_unique(std::vector<Monomial>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

std::vector<Monomial> minimize(std::vector<Monomial> gens) {
  sort_unique(gens);
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  std::vector<std::uint8_t> redundant(gens.size(), 0);

  // Candidates are processed one degree level at a time. Distinct monomials of
  // equal degree never divide each other, so a level only has to be checked
  // against the (already final) lower levels, and each check is independent.
  std::size_t lo = 0;
  while (lo < gens.size()) {
    const Degree d = gens[lo].degree();
    std::size_t hi = lo;
    while (hi < gens.size() && gens[hi].degree() == d)
      ++hi;

    const auto level_lo = static_cast<std::int64_t>(lo);
    const auto level_hi = static_cast<std::int64_t>(hi);
    const bool par = (hi - lo) * (kept.size() + 1) > kParallelThreshold * 8;
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t i = level_lo; i < level_hi; ++i) {
      for (const auto& g : kept) {
        if (g.divides(gens[i])) {
          redundant[i] = 1;
          break;
        }
      }
    }
    for (std::size_t i = lo; i < hi; ++i)
      if (!redundant[i])
        kept.push_back(std::move(gens[i]));
    lo = hi;
  }
  return kept;
}

bool member(std::span<const Monomial> gens, const Monomial& u) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(u); });
}

std::vector<Monomial> product(std::span<const Monomial> a, std::span<const Monomial> b) {
  std::vector<Monomial> out(a.size() * b.size());
  const auto na = static_cast<std::int64_t>(a.size());
  bool overflow = false;
#pragma omp parallel for schedule(static) if (out.size() > kParallelThreshold)
  for (std::int64_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      try {
        out[i * b.size() + j] = a[i] * b[j];
      } catch (const ArithmeticError&) {
#pragma omp atomic write
        overflow = true;
      }
    }
  }
  if (overflow)
    throw ArithmeticError("exponent overflow in ideal product");
  return minimize(std::move(out));
}

std::vector<Monomial> intersect(std::span<const Monomial> a, std::span<const Monomial> b) {
  std::vector<std::uint8_t> a_in_b(a.size()), b_in_a(b.size());
  const auto na = static_cast<std::int64_t>(a.size());
  const auto nb = static_cast<std::int64_t>(b.size());
  const bool par = a.size() * b.size() > kParallelThreshold;
#pragma omp parallel if (par)
  {
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < na; ++i)
      a_in_b[i] = member(b, a[i]);
#pragma omp for schedule(static)
    for (std::int64_t j = 0; j < nb; ++j)
      b_in_a[j] = member(a, b[j]);
  }

  std::vector<Monomial> candidates;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a_in_b[i])
      candidates.push_back(a[i]);
  for (std::size_t j = 0; j < b.size(); ++j)
    if (b_in_a[j])
      candidates.push_back(b[j]);

  std::vector<std::size_t> rest_a, rest_b;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a_in_b[i])
      rest_a.push_back(i);
  for (std::size_t j = 0; j < b.size(); ++j)
    if (!b_in_a[j])
      rest_b.push_back(j);

  const std::size_t base = candidates.size();
  candidates.resize(base + rest_a.size() * rest_b.size());
  const auto nra = static_cast<std::int64_t>(rest_a.size());
#pragma omp parallel for schedule(static) if (rest_a.size() * rest_b.size() > kParallelThreshold)
  for (std::int64_t i = 0; i < nra; ++i)
    for (std::size_t j = 0; j < rest_b.size(); ++j)
      candidates[base + i * rest_b.size() + j] = lcm(a[rest_a[i]], b[rest_b[j]]);
  return minimize(std::move(candidates));
}

std::vector<Monomial> colon(std::span<const Monomial> gens, const Monomial& u) {
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens)
    out.push_back(strip(g, u));
  return minimize(std::move(out));
}

namespace serial {

std::vector<Monomial> minimize(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < gens.size() && !drop; ++j) {
      if (i == j || !gens[j].divides(gens[i]))
        continue;
      // equal copies: keep only the first one
      drop = gens[j] != gens[i] || j < i;
    }
    if (!drop)
      out.push_back(gens[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> product(std::span<const Monomial> a, std::span<const Monomial> b) {
  std::vector<Monomial> out;
  for (const auto& x : a)
    for (const auto& y : b)
      out.push_back(x * y);
  return serial::minimize(std::move(out));
}

std::vector<Monomial> intersect(std::span<const Monomial> a, std::span<const Monomial> b) {
  std::vector<Monomial> out;
  for (const auto& x : a)
    for (const auto& y : b)
      out.push_back(lcm(x, y));
  return serial::minimize(std::move(out));
}

} // namespace serial

} // namespace vnum::kernels
