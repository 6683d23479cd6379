#include "vnum/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "vnum/asymptotics.hpp"
#include "vnum/errors.hpp"
#include "vnum/io.hpp"
#include "vnum/twovar.hpp"
#include "vnum/vnumber.hpp"

namespace vnum::cli {

namespace {

struct Options {
  std::string input;
  std::string gens;
  std::string vars;
  std::string prime;
  std::string csv;
  std::string format = "text";
  unsigned max_power = 12;
  unsigned min_run = 4;
  unsigned window = 3;
  bool bruteforce = false;
  long long slope = 0;
  long long intercept = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InputError("cannot write '" + path + "'");
  out << body;
}

MonomialIdeal load_ideal(const Options& o, std::ostream& err) {
  io::ParsedIdeal parsed{MonomialIdeal::zero(make_ring({"x"})), {}};
  if (!o.input.empty() && !o.gens.empty())
    throw InputError("use either --input or --gens, not both");
  if (!o.input.empty()) {
    parsed = io::parse_ideal(read_file(o.input));
  } else if (!o.gens.empty()) {
    // gens first so that positions map back onto the --gens string
    const std::string prefix = "gens: ";
    std::string text = prefix + o.gens + "\n";
    if (!o.vars.empty())
      text += "vars: " + o.vars + "\n";
    try {
      parsed = io::parse_ideal(text);
    } catch (const InputError& e) {
      if (e.line() != 1 || e.column() <= prefix.size())
        throw;
      throw InputError("--gens: " + e.message() + " at column " +
                       std::to_string(e.column() - prefix.size()));
    }
  } else {
    throw InputError("no ideal given (use --input FILE or --gens LIST)");
  }
  for (const auto& w : parsed.warnings)
    err << "warning: " << w << '\n';
  if (!parsed.ideal.is_proper_nonzero())
    throw DomainError("the ideal must be nonzero and proper, got " + to_string(parsed.ideal));
  return parsed.ideal;
}

MonomialPrime parse_prime(const std::string& text, const RingContext& ctx) {
  std::string s = text;
  if (!s.empty() && s.front() == '(' && s.back() == ')')
    s = s.substr(1, s.size() - 2);
  std::vector<std::size_t> vars;
  std::stringstream ss(s);
  std::string name;
  while (std::getline(ss, name, ',')) {
    name.erase(0, name.find_first_not_of(' '));
    name.erase(name.find_last_not_of(' ') + 1);
    const int i = ctx.index_of(name);
    if (i < 0)
      throw InputError("unknown variable '" + name + "' in --prime");
    vars.push_back(static_cast<std::size_t>(i));
  }
  return MonomialPrime(std::move(vars));
}

std::string primes_string(const PrimeSet& s, const RingContext& ctx) {
  if (s.empty())
    return "{}";
  std::string out;
  for (const auto& p : s)
    out += (out.empty() ? "" : " ") + to_string(p, ctx);
  return out;
}

void header(std::ostream& out, const std::string& cmd, const Options& o) {
  out << "# vnum " << cmd << "  max-power=" << o.max_power << " min-run=" << o.min_run
      << " window=" << o.window << '\n';
}

std::string linear_string(Degree slope, Degree intercept) {
  std::string s = std::to_string(slope) + "*k";
  if (intercept != 0)
    s += (intercept < 0 ? " - " : " + ") + std::to_string(intercept < 0 ? -intercept : intercept);
  return s;
}

std::string fit_string(const std::optional<LinearFit>& f) {
  if (!f)
    return "no fit";
  return linear_string(f->slope, f->intercept) + "  (k >= " + std::to_string(f->onset) + ")";
}

// ---------------------------------------------------------------- commands

int cmd_ass(const Options& o, std::ostream& out, std::ostream& err) {
  const auto I = load_ideal(o, err);
  const auto& ctx = *I.ring();
  const auto witnesses = associated_primes_with_witnesses(I);
  PrimeSet ass;
  for (const auto& [p, w] : witnesses)
    ass.insert(p);
  const auto prof = ass_profile(I, o.max_power, std::min(o.window, o.max_power));

  if (o.format == "machine") {
    nlohmann::json doc;
    doc["ideal"] = nlohmann::json::parse(io::ideal_json(I));
    for (const auto& [p, w] : witnesses)
      doc["ass"].push_back({{"prime", to_string(p, ctx)}, {"witness", to_string(w, ctx)}});
    for (const auto& p : maximal_elements(ass))
      doc["max"].push_back(to_string(p, ctx));
    for (const auto& s : prof.per_power) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& p : s)
        row.push_back(to_string(p, ctx));
      doc["profile"].push_back(row);
    }
    doc["onset"] = prof.onset;
    doc["confirmed"] = prof.confirmed;
    out << doc.dump(2) << '\n';
    return prof.confirmed ? kOk : kInconclusive;
  }

  header(out, "ass", o);
  out << "ideal: " << to_string(I) << '\n';
  out << "Ass(I): " << primes_string(ass, ctx) << '\n';
  out << "Max(I): " << primes_string(maximal_elements(ass), ctx) << '\n';
  out << "witnesses:\n";
  for (const auto& [p, w] : witnesses)
    out << "  " << to_string(p, ctx) << "  " << to_string(w, ctx) << '\n';
  out << "Ass(I^k):\n";
  for (std::size_t k = 0; k < prof.per_power.size(); ++k)
    out << "  k=" << k + 1 << "  " << primes_string(prof.per_power[k], ctx) << '\n';
  out << "stable set: " << primes_string(prof.stable_set, ctx) << "  onset=" << prof.onset
      << "  confirmed=" << (prof.confirmed ? "yes" : "no") << '\n';
  return prof.confirmed ? kOk : kInconclusive;
}

int cmd_v(const Options& o, std::ostream& out, std::ostream& err) {
  const auto I = load_ideal(o, err);
  const Degree value = v(I);
  if (o.format == "machine") {
    out << nlohmann::json{{"ideal", nlohmann::json::parse(io::ideal_json(I))}, {"v", value}}.dump()
        << '\n';
    return kOk;
  }
  header(out, "v", o);
  out << "ideal: " << to_string(I) << '\n';
  out << "v(I) = " << value << '\n';
  return kOk;
}

int cmd_vp(const Options& o, std::ostream& out, std::ostream& err) {
  const auto I = load_ideal(o, err);
  const auto& ctx = *I.ring();
  std::vector<VValue> vals;
  if (!o.prime.empty())
    vals.push_back(v_p(I, parse_prime(o.prime, ctx)));
  else
    vals = v_values(I);

  int rc = kOk;
  std::vector<std::optional<Degree>> brute(vals.size());
  if (o.bruteforce) {
    for (std::size_t i = 0; i < vals.size(); ++i) {
      brute[i] = v_p_bruteforce(I, vals[i].prime);
      if (*brute[i] != vals[i].v)
        rc = kLawFailed;
    }
  }

  if (o.format == "machine") {
    nlohmann::json doc;
    doc["ideal"] = nlohmann::json::parse(io::ideal_json(I));
    doc["values"] = nlohmann::json::array();
    for (std::size_t i = 0; i < vals.size(); ++i) {
      nlohmann::json j{{"prime", to_string(vals[i].prime, ctx)},
                       {"v", vals[i].v},
                       {"alpha_mod", vals[i].alpha_mod},
                       {"omega_mod", vals[i].omega_mod},
                       {"witness", to_string(vals[i].witness, ctx)}};
      if (brute[i])
        j["bruteforce"] = *brute[i];
      doc["values"].push_back(std::move(j));
    }
    out << doc.dump(2) << '\n';
    return rc;
  }

  header(out, "vp", o);
  out << "ideal: " << to_string(I) << '\n';
  out << std::left << std::setw(12) << "prime" << std::setw(6) << "v" << std::setw(10)
      << "alpha_mod" << std::setw(10) << "omega_mod";
  if (o.bruteforce)
    out << std::setw(10) << "witness" << "  bruteforce";
  else
    out << "witness";
  out << '\n';
  for (std::size_t i = 0; i < vals.size(); ++i) {
    out << std::left << std::setw(12) << to_string(vals[i].prime, ctx) << std::setw(6)
        << vals[i].v << std::setw(10) << vals[i].alpha_mod << std::setw(10) << vals[i].omega_mod
        << std::setw(o.bruteforce ? 10 : 0) << to_string(vals[i].witness, ctx);
    if (brute[i])
      out << "  " << *brute[i] << (*brute[i] == vals[i].v ? "" : "  MISMATCH");
    out << '\n';
  }
  return rc;
}

void print_table(const VFunctionTable& t, std::ostream& out) {
  const auto& ctx = *t.ring;
  out << std::left << std::setw(5) << "k" << std::setw(7) << "v";
  for (const auto& p : t.primes)
    out << std::setw(22) << ("v/a/w " + to_string(p, ctx));
  out << '\n';
  for (const auto& r : t.rows) {
    out << std::left << std::setw(5) << r.k << std::setw(7) << r.v;
    for (const auto& e : r.by_prime) {
      std::string cell = "-";
      if (e)
        cell = std::to_string(e->v) + "/" + std::to_string(e->alpha_mod) + "/" +
               std::to_string(e->omega_mod);
      out << std::setw(22) << cell;
    }
    out << '\n';
  }
}

int cmd_vfun(const Options& o, std::ostream& out, std::ostream& err) {
  const auto I = load_ideal(o, err);
  const PowerTower tower(I, o.max_power, std::min(o.window, o.max_power));
  const auto t = v_function(tower);
  if (!o.csv.empty())
    write_file(o.csv, io::write_vfun_csv(t));
  if (o.format == "machine") {
    out << io::table_json(t) << '\n';
    return kOk;
  }
  header(out, "vfun", o);
  out << "ideal: " << to_string(I) << '\n';
  out << "alpha(I) = " << t.alpha_I << "  omega(I) = " << t.omega_I << '\n';
  print_table(t, out);
  out << "fit v(I^k): " << fit_string(fit_eventual_linear(t.v_column(), o.min_run)) << '\n';
  for (std::size_t p = 0; p < t.primes.size(); ++p) {
    auto [col, first] = t.prime_column(p);
    out << "fit v_" << to_string(t.primes[p], *t.ring) << ": "
        << fit_string(fit_eventual_linear(col, o.min_run, first)) << '\n';
  }
  return kOk;
}

int exit_for(LawStatus s) {
  switch (s) {
  case LawStatus::pass:
    return kOk;
  case LawStatus::fail:
    return kLawFailed;
  case LawStatus::inconclusive:
    return kInconclusive;
  }
  return kLawFailed;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto I = load_ideal(o, err);
  AsymptoticsOptions ao;
  ao.k_max = o.max_power;
  ao.min_run = o.min_run;
  ao.window = std::min(o.window, o.max_power);
  const auto rep = verify_laws(I, ao);
  if (o.format == "machine") {
    out << io::report_json(rep, *I.ring()) << '\n';
    return exit_for(rep.overall());
  }
  header(out, "verify", o);
  const auto& ctx = *I.ring();
  out << "ideal: " << to_string(I) << '\n';
  out << "alpha(I) = " << rep.alpha_I << "  omega(I) = " << rep.omega_I << '\n';
  out << "stable primes: " << primes_string(rep.ass.stable_set, ctx) << "  onset=" << rep.ass.onset
      << '\n';
  out << "fit v(I^k): " << fit_string(rep.v_fit) << '\n';
  for (const auto& [p, f] : rep.prime_fits)
    out << "fit v_" << to_string(p, ctx) << ": " << fit_string(f) << '\n';
  for (const auto& l : rep.laws) {
    out << std::left << std::setw(24) << l.name << std::setw(14) << to_string(l.status);
    if (l.first_k)
      out << "k=" << l.first_k << ".." << l.last_k;
    else
      out << "k=-";
    if (l.onset)
      out << "  onset=" << *l.onset;
    if (l.witness_k)
      out << "  broke at k=" << *l.witness_k;
    if (!l.detail.empty())
      out << "  " << l.detail;
    out << '\n';
  }
  out << "overall: " << to_string(rep.overall()) << '\n';
  return exit_for(rep.overall());
}

int cmd_twovar(const Options& o, std::ostream& out, std::ostream& err) {
  const auto I = load_ideal(o, err);
  const auto J = twovar::from_ideal(I);
  const auto& ctx = *I.ring();
  int mismatches = 0;
  std::ostringstream body;

  auto row = [&](const std::string& what, Degree closed, Degree engine) {
    const bool ok = closed == engine;
    mismatches += !ok;
    body << std::left << std::setw(20) << what << std::setw(8) << closed << std::setw(8) << engine
         << (ok ? "ok" : "MISMATCH") << '\n';
  };

  const auto ass_closed = twovar::ass_closed_form(J);
  const auto ass_engine = associated_primes(I);
  mismatches += ass_closed != ass_engine;
  body << "Ass closed: " << primes_string(ass_closed, ctx)
       << "  engine: " << primes_string(ass_engine, ctx)
       << (ass_closed == ass_engine ? "  ok" : "  MISMATCH") << '\n';

  body << std::left << std::setw(20) << "quantity" << std::setw(8) << "closed" << std::setw(8)
       << "engine" << '\n';
  row("v(I)", twovar::v_closed_form(J), v(I));
  if (J.m() > 1)
    row("v_" + to_string(twovar::max_ideal, ctx) + "(I)", twovar::v_m_closed_form(J),
        v_p(I, twovar::max_ideal).v);
  const auto pw = powers(I, o.max_power);
  for (unsigned k = 1; k <= o.max_power; ++k)
    for (const auto& [p, val] : twovar::v_power_closed_forms(J, k))
      row("v_" + to_string(p, ctx) + "(I^" + std::to_string(k) + ")", val, v_p(pw[k - 1], p).v);

  if (o.format == "machine") {
    nlohmann::json doc{{"a", J.a()}, {"b", J.b()}, {"mismatches", mismatches}};
    out << doc.dump() << '\n';
    return mismatches ? kLawFailed : kOk;
  }
  header(out, "twovar", o);
  out << "ideal: " << to_string(I) << '\n';
  out << "a = (";
  for (std::size_t i = 0; i < J.m(); ++i)
    out << (i ? "," : "") << J.a()[i];
  out << ")  b = (";
  for (std::size_t i = 0; i < J.m(); ++i)
    out << (i ? "," : "") << J.b()[i];
  out << ")\n" << body.str();
  out << "mismatches: " << mismatches << '\n';
  return mismatches ? kLawFailed : kOk;
}

int cmd_family(const Options& o, std::ostream& out, std::ostream&) {
  const auto J = twovar::family_ideal(o.slope, o.intercept);
  const auto I = twovar::to_ideal(J);
  const PowerTower tower(I, o.max_power, std::min(o.window, o.max_power));
  int mismatches = 0;
  std::ostringstream body;
  for (unsigned k = 1; k <= o.max_power; ++k) {
    const Degree expected = o.slope * static_cast<Degree>(k) + o.intercept;
    const bool gens_ok =
        tower.power(k).gens() == twovar::family_power_gens(o.slope, o.intercept, k);
    const bool ok = tower.v(k) == expected && gens_ok;
    mismatches += !ok;
    body << std::left << std::setw(5) << k << std::setw(10) << tower.v(k) << std::setw(10)
         << expected << std::setw(10) << (gens_ok ? "ok" : "MISMATCH") << (ok ? "ok" : "MISMATCH")
         << '\n';
  }
  if (!o.csv.empty())
    write_file(o.csv, io::write_vfun_csv(v_function(tower)));
  if (o.format == "machine") {
    out << nlohmann::json{{"ideal", nlohmann::json::parse(io::ideal_json(I))},
                          {"slope", o.slope},
                          {"intercept", o.intercept},
                          {"mismatches", mismatches}}
               .dump()
        << '\n';
    return mismatches ? kLawFailed : kOk;
  }
  header(out, "family", o);
  out << "ideal: " << to_string(I) << "  expected v(I^k) = " << linear_string(o.slope, o.intercept)
      << '\n';
  out << std::left << std::setw(5) << "k" << std::setw(10) << "engine" << std::setw(10)
      << "expected" << std::setw(10) << "G(I^k)" << "status" << '\n'
      << body.str();
  out << "mismatches: " << mismatches << '\n';
  return mismatches ? kLawFailed : kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"v-numbers and v-functions of monomial ideals", "vnum"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool needs_ideal) {
    if (needs_ideal) {
      sub->add_option("-i,--input", o.input, "ideal file (text or machine format)");
      sub->add_option("-g,--gens", o.gens, "inline generator list, e.g. \"x^2, x*y\"");
      sub->add_option("--vars", o.vars, "variables for --gens, e.g. \"x, y\"");
    }
    sub->add_option("--max-power", o.max_power, "largest power k")
        ->check(CLI::Range(1u, 200u));
    sub->add_option("--min-run", o.min_run, "shortest run accepted as a linear fit")
        ->check(CLI::Range(2u, 200u));
    sub->add_option("--window", o.window, "Ass stability window")->check(CLI::Range(1u, 200u));
    sub->add_option("--format", o.format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
  };

  auto* ass = app.add_subcommand("ass", "associated primes and their profile over powers");
  add_common(ass, true);
  auto* vcmd = app.add_subcommand("v", "v-number of the ideal");
  add_common(vcmd, true);
  auto* vp = app.add_subcommand("vp", "v-number at each associated prime");
  add_common(vp, true);
  vp->add_option("--prime", o.prime, "restrict to one prime, e.g. \"x,y\"");
  vp->add_flag("--bruteforce", o.bruteforce, "cross-check with exhaustive witness search");
  auto* vfun = app.add_subcommand("vfun", "v-function table k -> v(I^k)");
  add_common(vfun, true);
  vfun->add_option("--csv", o.csv, "write the table as CSV");
  auto* verify = app.add_subcommand("verify", "check the asymptotic laws over the powers");
  add_common(verify, true);
  auto* tv = app.add_subcommand("twovar", "closed forms in two variables vs the general engine");
  add_common(tv, true);
  auto* fam = app.add_subcommand("family", "ideal realizing v(I^k) = slope*k + intercept");
  add_common(fam, false);
  fam->add_option("--slope", o.slope, "slope >= 1")->required();
  fam->add_option("--intercept", o.intercept, "intercept >= -1")->required();
  fam->add_option("--csv", o.csv, "write the v-function table as CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*ass)
      return cmd_ass(o, out, err);
    if (*vcmd)
      return cmd_v(o, out, err);
    if (*vp)
      return cmd_vp(o, out, err);
    if (*vfun)
      return cmd_vfun(o, out, err);
    if (*verify)
      return cmd_verify(o, out, err);
    if (*tv)
      return cmd_twovar(o, out, err);
    if (*fam)
      return cmd_family(o, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kInputError;
  } catch (const ArithmeticError& e) {
    err << "arithmetic error: " << e.what() << '\n';
    return kInputError;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return kLawFailed;
  }
  return kInputError;
}

} // namespace vnum::cli
