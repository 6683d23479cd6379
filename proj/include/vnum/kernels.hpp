#pragma once

// Generator-set kernels shared by every ideal operation. The default entry
// points are OpenMP-parallel; `serial` keeps the straightforward pairwise
// versions as a reference for tests and the benchmark.
//
// All kernels return a minimal generating set in canonical (graded) order, so
// results do not depend on the thread schedule.

#include <span>
#include <vector>

#include "vnum/monomial.hpp"

namespace vnum::kernels {

/// Removes duplicates and multiples; output sorted canonically.
std::vector<Monomial> minimize(std::vector<Monomial> gens);

/// True iff some generator divides u.
bool member(std::span<const Monomial> gens, const Monomial& u);

/// Minimal generators of the product ideal (a)(b).
std::vector<Monomial> product(std::span<const Monomial> a, std::span<const Monomial> b);

/// Minimal generators of (a) ∩ (b), via pairwise lcm. Pairs where one side is
/// already in the other ideal are short-circuited.
std::vector<Monomial> intersect(std::span<const Monomial> a, std::span<const Monomial> b);

/// Minimal generators of (gens : u) = ( g / gcd(g, u) ).
std::vector<Monomial> colon(std::span<const Monomial> gens, const Monomial& u);

namespace serial {

std::vector<Monomial> minimize(std::vector<Monomial> gens);
std::vector<Monomial> product(std::span<const Monomial> a, std::span<const Monomial> b);
std::vector<Monomial> intersect(std::span<const Monomial> a, std::span<const Monomial> b);

} // namespace serial

} // namespace vnum::kernels
