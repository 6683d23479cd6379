#include "vnum/monomial.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "vnum/errors.hpp"

namespace vnum {

RingContext::RingContext(std::vector<std::string> var_names) : names_(std::move(var_names)) {
  if (names_.empty())
    throw InputError("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty())
      throw InputError("empty variable name");
    if (!seen.insert(n).second)
      throw InputError("duplicate variable name '" + n + "'");
  }
}

int RingContext::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

RingPtr make_ring(std::vector<std::string> var_names) {
  return std::make_shared<const RingContext>(std::move(var_names));
}

Monomial Monomial::variable(std::size_t n, std::size_t i) {
  Monomial m(n);
  m.exps_.at(i) = 1;
  return m;
}

Degree Monomial::degree() const {
  Degree d = 0;
  for (Exponent e : exps_)
    d += e; // n * 2^32 cannot overflow int64 for any sane n
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i])
      return false;
  return true;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0)
    return c;
  // larger exponent vector sorts first
  return std::lexicographical_compare_three_way(b.exps_.begin(), b.exps_.end(), a.exps_.begin(),
                                                a.exps_.end());
}

void require_length(const Monomial& m, std::size_t n) {
  if (m.size() != n)
    throw InputError("exponent vector has length " + std::to_string(m.size()) + ", expected " +
                     std::to_string(n));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_length(b, a.size());
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Exponent e;
    if (__builtin_add_overflow(a[i], b[i], &e))
      throw ArithmeticError("exponent overflow in monomial product");
    r[i] = e;
  }
  return r;
}

Monomial pow(const Monomial& m, std::uint64_t k) {
  Monomial r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::uint64_t e = static_cast<std::uint64_t>(m[i]) * k;
    if ((m[i] != 0 && e / m[i] != k) || e > std::numeric_limits<Exponent>::max())
      throw ArithmeticError("exponent overflow in monomial power");
    r[i] = static_cast<Exponent>(e);
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_length(b, a.size());
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_length(b, a.size());
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = std::min(a[i], b[i]);
  return r;
}

Monomial strip(const Monomial& a, const Monomial& b) {
  require_length(b, a.size());
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return r;
}

std::string to_string(const Monomial& m, const RingContext& ctx) {
  if (m.is_one())
    return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0)
      continue;
    if (!first)
      os << '*';
    first = false;
    os << ctx.name(i);
    if (m[i] > 1)
      os << '^' << m[i];
  }
  return os.str();
}

} // namespace vnum
