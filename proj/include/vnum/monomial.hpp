#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace vnum {

using Exponent = std::uint32_t;
using Degree = std::int64_t;

/// The variables of S = K[x_1, ..., x_n]. Coefficients are never represented.
class RingContext {
public:
  explicit RingContext(std::vector<std::string> var_names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  /// Index of a variable name, or -1.
  int index_of(std::string_view name) const;

  friend bool operator==(const RingContext&, const RingContext&) = default;

private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const RingContext>;

RingPtr make_ring(std::vector<std::string> var_names);

/// Exponent vector of a monomial. All arithmetic is checked.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static Monomial one(std::size_t n) { return Monomial(n); }
  static Monomial variable(std::size_t n, std::size_t i);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  Degree degree() const;
  bool is_one() const;

  /// Componentwise this <= other.
  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded order: lower degree first, ties broken by the lexicographically
  /// larger exponent vector first (x^2 < xy < y^2).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
  std::vector<Exponent> exps_;
};

/// Throws InputError unless every monomial has exactly n exponents.
void require_length(const Monomial& m, std::size_t n);

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& m, std::uint64_t k);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// a / gcd(a, b): componentwise max(a_i - b_i, 0).
Monomial strip(const Monomial& a, const Monomial& b);

/// `x^5*y^2`, `1` for the empty product.
std::string to_string(const Monomial& m, const RingContext& ctx);

} // namespace vnum
