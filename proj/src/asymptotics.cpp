#include "vnum/asymptotics.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "parallel.hpp"
#include "vnum/errors.hpp"

namespace vnum {

// ---------------------------------------------------------------- tower

PowerTower::PowerTower(const MonomialIdeal& I, unsigned k_max, unsigned window,
                       const AssOptions& ass_opts) {
  if (!I.is_proper_nonzero())
    throw DomainError("v-function needs a nonzero proper ideal");
  if (k_max < 1 || window < 1 || window > k_max)
    throw InputError("need k_max >= window >= 1");

  powers_ = powers(I, k_max);

  std::vector<PrimeSet> per(k_max);
  detail::parallel_for(k_max, true, [&](std::int64_t k) {
    per[k] = associated_primes(powers_[k], ass_opts);
  });
  PrimeSet all;
  for (const auto& s : per)
    all.insert(s.begin(), s.end());
  primes_.assign(all.begin(), all.end());
  profile_ = make_ass_profile(std::move(per), window);

  const std::size_t np = primes_.size();
  colons_.assign(k_max, std::vector<MonomialIdeal>(np, MonomialIdeal::zero(I.ring())));
  values_.assign(k_max, std::vector<std::optional<VValue>>(np));
  detail::parallel_for(static_cast<std::int64_t>(k_max * np), true, [&](std::int64_t job) {
    const auto k = static_cast<std::size_t>(job) / np;
    const auto p = static_cast<std::size_t>(job) % np;
    colons_[k][p] = colon_by_prime(powers_[k], primes_[p]);
    if (profile_.per_power[k].contains(primes_[p]))
      values_[k][p] = v_p(powers_[k], primes_[p], colons_[k][p]);
  });

  v_.resize(k_max);
  for (unsigned k = 0; k < k_max; ++k) {
    Degree best = std::numeric_limits<Degree>::max();
    for (const auto& val : values_[k])
      if (val)
        best = std::min(best, val->v);
    v_[k] = best;
  }
}

std::size_t PowerTower::prime_index(const MonomialPrime& P) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), P);
  if (it == primes_.end() || *it != P)
    throw DomainError("prime never associated to a power in this tower");
  return static_cast<std::size_t>(it - primes_.begin());
}

const MonomialIdeal& PowerTower::colon(unsigned k, const MonomialPrime& P) const {
  return colons_.at(k - 1).at(prime_index(P));
}

const std::optional<VValue>& PowerTower::value(unsigned k, const MonomialPrime& P) const {
  return values_.at(k - 1).at(prime_index(P));
}

// ---------------------------------------------------------------- table

std::vector<Degree> VFunctionTable::v_column() const {
  std::vector<Degree> out;
  for (const auto& r : rows)
    out.push_back(r.v);
  return out;
}

std::pair<std::vector<Degree>, unsigned> VFunctionTable::prime_column(std::size_t idx) const {
  std::size_t start = rows.size();
  while (start > 0 && rows[start - 1].by_prime.at(idx))
    --start;
  std::vector<Degree> out;
  for (std::size_t r = start; r < rows.size(); ++r)
    out.push_back(rows[r].by_prime[idx]->v);
  return {out, static_cast<unsigned>(start + 1)};
}

bool operator==(const VFunctionTable& a, const VFunctionTable& b) {
  const bool same_ring = a.ring == b.ring || (a.ring && b.ring && *a.ring == *b.ring);
  return same_ring && a.k_max == b.k_max && a.primes == b.primes && a.rows == b.rows &&
         a.alpha_I == b.alpha_I && a.omega_I == b.omega_I;
}

VFunctionTable v_function(const PowerTower& tower) {
  VFunctionTable t;
  t.ring = tower.base().ring();
  t.k_max = tower.k_max();
  t.primes.assign(tower.ass().stable_set.begin(), tower.ass().stable_set.end());
  std::tie(t.alpha_I, t.omega_I) = alpha_omega(tower.base());
  for (unsigned k = 1; k <= t.k_max; ++k) {
    VRow row{k, tower.v(k), {}};
    for (const auto& P : t.primes) {
      const auto& val = tower.value(k, P);
      row.by_prime.push_back(val ? std::optional<PrimeEntry>(
                                       PrimeEntry{val->v, val->alpha_mod, val->omega_mod})
                                 : std::nullopt);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

VFunctionTable v_function(const MonomialIdeal& I, unsigned k_max, unsigned window) {
  return v_function(PowerTower(I, k_max, std::min(window, k_max)));
}

// ---------------------------------------------------------------- fit

std::optional<LinearFit> fit_eventual_linear(std::span<const Degree> values, unsigned min_run,
                                             unsigned first_k) {
  if (min_run < 2)
    throw InputError("min_run must be at least 2");
  const std::size_t n = values.size();
  if (n < 2)
    return std::nullopt;
  const Degree slope = values[n - 1] - values[n - 2];
  std::size_t start = n - 2;
  while (start > 0 && values[start] - values[start - 1] == slope)
    --start;
  const auto run = static_cast<unsigned>(n - start);
  if (run < min_run)
    return std::nullopt;
  const unsigned onset = first_k + static_cast<unsigned>(start);
  return LinearFit{slope, values[start] - slope * static_cast<Degree>(onset), onset, run};
}

// ---------------------------------------------------------------- laws

const char* to_string(LawStatus s) {
  switch (s) {
  case LawStatus::pass:
    return "pass";
  case LawStatus::fail:
    return "fail";
  case LawStatus::inconclusive:
    return "inconclusive";
  }
  return "?";
}

LawStatus LawReport::overall() const {
  bool inconclusive = false;
  for (const auto& l : laws) {
    if (l.status == LawStatus::fail)
      return LawStatus::fail;
    inconclusive |= l.status == LawStatus::inconclusive;
  }
  return inconclusive ? LawStatus::inconclusive : LawStatus::pass;
}

const LawResult& LawReport::law(std::string_view name) const {
  for (const auto& l : laws)
    if (l.name == name)
      return l;
  throw InputError("unknown law '" + std::string(name) + "'");
}

namespace {

LawResult named(std::string name) {
  LawResult r;
  r.name = std::move(name);
  return r;
}

// holds[i] is the law at k = first + i. Eventual laws never fail: a law still
// broken at the last k is inconclusive.
LawResult eventual(std::string name, unsigned first, const std::vector<bool>& holds) {
  LawResult r = named(std::move(name));
  if (holds.empty()) {
    r.detail = "no k in the checked range";
    return r;
  }
  r.first_k = first;
  r.last_k = first + static_cast<unsigned>(holds.size()) - 1;
  std::size_t i = holds.size();
  while (i > 0 && holds[i - 1])
    --i;
  if (i > 0)
    r.witness_k = first + static_cast<unsigned>(i) - 1;
  if (i == holds.size()) {
    r.status = LawStatus::inconclusive;
    r.detail = "not yet holding at k_max";
  } else {
    r.status = LawStatus::pass;
    r.onset = first + static_cast<unsigned>(i);
  }
  return r;
}

// holds[i] is the law at k = first + i; any break is a failure.
LawResult always(std::string name, unsigned first, const std::vector<bool>& holds) {
  LawResult r = named(std::move(name));
  if (holds.empty()) {
    r.detail = "no k in the checked range";
    return r;
  }
  r.first_k = first;
  r.last_k = first + static_cast<unsigned>(holds.size()) - 1;
  r.status = LawStatus::pass;
  for (std::size_t i = 0; i < holds.size(); ++i) {
    if (!holds[i]) {
      r.status = LawStatus::fail;
      r.witness_k = first + static_cast<unsigned>(i);
      break;
    }
  }
  return r;
}

std::string fit_string(const LinearFit& f) {
  std::ostringstream os;
  os << f.slope << "k";
  if (f.intercept != 0)
    os << (f.intercept < 0 ? " - " : " + ") << (f.intercept < 0 ? -f.intercept : f.intercept);
  os << " from k=" << f.onset;
  return os.str();
}

} // namespace

LawReport verify_laws(const PowerTower& tower, const AsymptoticsOptions& opts) {
  const unsigned K = tower.k_max();
  if (K < 3)
    throw InputError("verify_laws needs k_max >= 3");

  LawReport rep;
  rep.options = opts;
  rep.ass = tower.ass();
  std::tie(rep.alpha_I, rep.omega_I) = alpha_omega(tower.base());
  const Degree a = rep.alpha_I, w = rep.omega_I;
  const auto& I = tower.base();
  const unsigned onset = rep.ass.onset;
  const std::vector<MonomialPrime> stable(rep.ass.stable_set.begin(), rep.ass.stable_set.end());

  // v_P is defined at k-1 and k for stable P once k-1 >= onset.
  auto stable_pair = [&](unsigned k) { return k - 1 >= onset; };

  std::vector<bool> mono, sandwich;
  for (unsigned k = 2; k <= K; ++k) {
    bool m = tower.v(k) > tower.v(k - 1);
    bool s = tower.v(k - 1) + a <= tower.v(k) && tower.v(k) <= tower.v(k - 1) + w;
    if (stable_pair(k)) {
      for (const auto& P : stable) {
        const Degree prev = tower.value(k - 1, P)->v, cur = tower.value(k, P)->v;
        m = m && cur > prev;
        s = s && prev + a <= cur && cur <= prev + w;
      }
    }
    mono.push_back(m);
    sandwich.push_back(s);
  }
  rep.laws.push_back(eventual("monotone", 2, mono));
  rep.laws.push_back(eventual("sandwich", 2, sandwich));

  std::vector<bool> ratliff(K - 1), factor(K - 1);
  detail::parallel_for(K - 1, true, [&](std::int64_t i) {
    const auto k = static_cast<unsigned>(i) + 2;
    ratliff[i] = colon_by_ideal(tower.power(k), I) == tower.power(k - 1);
    bool f = true;
    for (const auto& P : stable)
      f = f && tower.colon(k, P) == product(I, tower.colon(k - 1, P));
    factor[i] = f;
  });
  rep.laws.push_back(eventual("ratliff", 2, ratliff));
  rep.laws.push_back(eventual("colon_factorization", 2, factor));

  std::vector<bool> bounds, max_eq;
  for (unsigned k = 1; k <= K; ++k) {
    bool b = true, e = true;
    const auto& ass_k = rep.ass.per_power[k - 1];
    const auto max_k = maximal_elements(ass_k);
    for (const auto& P : ass_k) {
      const auto& val = *tower.value(k, P);
      b = b && val.alpha_mod <= val.v && val.v <= val.omega_mod;
      if (max_k.contains(P))
        e = e && val.v == val.alpha_mod;
    }
    bounds.push_back(b);
    max_eq.push_back(e);
  }
  rep.laws.push_back(always("module_bounds", 1, bounds));
  rep.laws.push_back(always("max_equality", 1, max_eq));

  const auto table = v_function(tower);
  const auto vcol = table.v_column();
  rep.v_fit = fit_eventual_linear(vcol, opts.min_run);

  LawResult slope = named("slope_equals_alpha");
  LawResult icept = named("intercept_ge_minus_one");
  if (rep.v_fit) {
    slope.first_k = icept.first_k = rep.v_fit->onset;
    slope.last_k = icept.last_k = K;
    slope.onset = icept.onset = rep.v_fit->onset;
    slope.status = rep.v_fit->slope == a ? LawStatus::pass : LawStatus::fail;
    icept.status = rep.v_fit->intercept >= -1 ? LawStatus::pass : LawStatus::fail;
    slope.detail = icept.detail = "v(I^k) = " + fit_string(*rep.v_fit);
  } else {
    slope.detail = icept.detail = "no linear run of length >= min_run";
  }
  rep.laws.push_back(slope);
  rep.laws.push_back(icept);

  LawResult range = named("vp_slope_range");
  range.status = LawStatus::pass;
  for (std::size_t p = 0; p < table.primes.size(); ++p) {
    auto [col, first] = table.prime_column(p);
    auto fit = fit_eventual_linear(col, opts.min_run, first);
    rep.prime_fits.emplace_back(table.primes[p], fit);
    if (!fit) {
      if (range.status == LawStatus::pass)
        range.status = LawStatus::inconclusive;
      continue;
    }
    if (fit->slope < a || fit->slope > w)
      range.status = LawStatus::fail;
  }
  if (table.primes.empty())
    range.status = LawStatus::inconclusive;
  else {
    range.first_k = onset;
    range.last_k = K;
  }
  rep.laws.push_back(range);

  LawResult stable_law = named("ass_stable");
  stable_law.first_k = 1;
  stable_law.last_k = K;
  stable_law.onset = onset;
  stable_law.status = rep.ass.confirmed ? LawStatus::pass : LawStatus::inconclusive;
  if (!rep.ass.confirmed)
    stable_law.detail = "constant suffix shorter than window";
  rep.laws.push_back(stable_law);
  return rep;
}

LawReport verify_laws(const MonomialIdeal& I, const AsymptoticsOptions& opts) {
  if (opts.k_max < 3)
    throw InputError("verify_laws needs k_max >= 3");
  return verify_laws(PowerTower(I, opts.k_max, opts.window, opts.ass), opts);
}

} // namespace vnum
