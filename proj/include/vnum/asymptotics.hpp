#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vnum/ass_primes.hpp"
#include "vnum/vnumber.hpp"

namespace vnum {

struct AsymptoticsOptions {
  unsigned k_max = 12;
  unsigned min_run = 4;
  unsigned window = 3;
  AssOptions ass{};
};

/// I, I^2, ..., I^k_max with their associated primes, the colons (I^k : P)
/// for every prime P seen in any Ass(I^k), and v_P(I^k) wherever P ∈ Ass(I^k).
/// Everything is computed once at construction; per-k work runs in parallel.
class PowerTower {
public:
  PowerTower(const MonomialIdeal& I, unsigned k_max, unsigned window = 3,
             const AssOptions& ass_opts = {});

  const MonomialIdeal& base() const { return powers_.front(); }
  unsigned k_max() const { return static_cast<unsigned>(powers_.size()); }
  const MonomialIdeal& power(unsigned k) const { return powers_.at(k - 1); }
  const AssProfile& ass() const { return profile_; }
  /// Union of Ass(I^k) over the window, in prime order.
  const std::vector<MonomialPrime>& primes() const { return primes_; }

  const MonomialIdeal& colon(unsigned k, const MonomialPrime& P) const;
  /// Empty when P ∉ Ass(I^k).
  const std::optional<VValue>& value(unsigned k, const MonomialPrime& P) const;
  /// v(I^k).
  Degree v(unsigned k) const { return v_.at(k - 1); }

private:
  std::size_t prime_index(const MonomialPrime& P) const;

  std::vector<MonomialIdeal> powers_;
  AssProfile profile_;
  std::vector<MonomialPrime> primes_;
  std::vector<std::vector<MonomialIdeal>> colons_;         // [k-1][prime]
  std::vector<std::vector<std::optional<VValue>>> values_; // [k-1][prime]
  std::vector<Degree> v_;
};

struct PrimeEntry {
  Degree v = 0;
  Degree alpha_mod = 0;
  Degree omega_mod = 0;
  friend bool operator==(const PrimeEntry&, const PrimeEntry&) = default;
};

struct VRow {
  unsigned k = 0;
  Degree v = 0;
  std::vector<std::optional<PrimeEntry>> by_prime; ///< aligned with VFunctionTable::primes
  friend bool operator==(const VRow&, const VRow&) = default;
};

/// k ↦ v(I^k) plus the per-prime columns for the stable primes.
struct VFunctionTable {
  RingPtr ring;
  unsigned k_max = 0;
  std::vector<MonomialPrime> primes;
  std::vector<VRow> rows;
  Degree alpha_I = 0;
  Degree omega_I = 0;

  std::vector<Degree> v_column() const;
  /// Values of v_P for the trailing rows where it is defined, and the k of the first one.
  std::pair<std::vector<Degree>, unsigned> prime_column(std::size_t prime_idx) const;

  friend bool operator==(const VFunctionTable& a, const VFunctionTable& b);
};

VFunctionTable v_function(const PowerTower& tower);
VFunctionTable v_function(const MonomialIdeal& I, unsigned k_max, unsigned window = 3);

struct LinearFit {
  Degree slope = 0;
  Degree intercept = 0;
  unsigned onset = 1;      ///< first k with value(k) == slope*k + intercept through the end
  unsigned run_length = 0; ///< k_max - onset + 1
  friend bool operator==(const LinearFit&, const LinearFit&) = default;
};

/// Longest suffix with constant first difference. `values[0]` is the value at
/// k = first_k. Returns nothing when that suffix is shorter than min_run.
std::optional<LinearFit> fit_eventual_linear(std::span<const Degree> values, unsigned min_run,
                                             unsigned first_k = 1);

enum class LawStatus { pass, fail, inconclusive };

const char* to_string(LawStatus s);

struct LawResult {
  std::string name;
  LawStatus status = LawStatus::inconclusive;
  unsigned first_k = 0; ///< checked range; 0/0 when nothing could be checked
  unsigned last_k = 0;
  std::optional<unsigned> onset;     ///< eventual laws: first k holding through last_k
  std::optional<unsigned> witness_k; ///< a k where the law broke
  std::string detail;
};

struct LawReport {
  AsymptoticsOptions options;
  Degree alpha_I = 0;
  Degree omega_I = 0;
  AssProfile ass;
  std::optional<LinearFit> v_fit;
  std::vector<std::pair<MonomialPrime, std::optional<LinearFit>>> prime_fits;
  std::vector<LawResult> laws;

  LawStatus overall() const;
  const LawResult& law(std::string_view name) const;
};

/// Law names, in report order.
inline constexpr const char* kLawNames[] = {
    "monotone",           "sandwich",      "ratliff",        "colon_factorization",
    "module_bounds",      "max_equality",  "slope_equals_alpha",
    "intercept_ge_minus_one", "vp_slope_range", "ass_stable"};

LawReport verify_laws(const PowerTower& tower, const AsymptoticsOptions& opts);
LawReport verify_laws(const MonomialIdeal& I, const AsymptoticsOptions& opts = {});

} // namespace vnum
