#include "vnum/io.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>
#include <limits>
#include <optional>
#include <sstream>

#include "vnum/errors.hpp"

namespace vnum::io {

namespace {

using nlohmann::json;

// Characters of the relevant part of the input, each tagged with its source
// position so errors point back into the original file.
struct Source {
  std::string text;
  std::vector<std::pair<std::size_t, std::size_t>> pos; // (line, column), 1-based

  void append(std::string_view s, std::size_t line, std::size_t col) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      text.push_back(s[i]);
      pos.emplace_back(line, col + i);
    }
    // newline separator keeps tokens on different lines apart
    text.push_back('\n');
    pos.emplace_back(line, col + s.size());
  }
};

class Scanner {
public:
  explicit Scanner(const Source& src) : src_(src) {}

  void skip_ws() {
    while (i_ < src_.text.size() && std::isspace(static_cast<unsigned char>(src_.text[i_])))
      ++i_;
  }
  bool done() {
    skip_ws();
    return i_ >= src_.text.size();
  }
  char peek() {
    skip_ws();
    return i_ < src_.text.size() ? src_.text[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c)
      return false;
    ++i_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c))
      fail(std::string("expected ") + what);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = i_;
    if (i_ < src_.text.size() &&
        (std::isalpha(static_cast<unsigned char>(src_.text[i_])) || src_.text[i_] == '_')) {
      while (i_ < src_.text.size() && (std::isalnum(static_cast<unsigned char>(src_.text[i_])) ||
                                       src_.text[i_] == '_'))
        ++i_;
    }
    if (start == i_)
      fail("expected a variable name");
    return src_.text.substr(start, i_ - start);
  }

  Exponent exponent() {
    skip_ws();
    if (i_ < src_.text.size() && src_.text[i_] == '-')
      fail("negative exponent");
    std::size_t start = i_;
    std::uint64_t value = 0;
    while (i_ < src_.text.size() && std::isdigit(static_cast<unsigned char>(src_.text[i_]))) {
      value = value * 10 + static_cast<unsigned>(src_.text[i_] - '0');
      if (value > std::numeric_limits<Exponent>::max()) {
        i_ = start;
        fail("exponent out of range");
      }
      ++i_;
    }
    if (start == i_)
      fail("expected a non-negative integer");
    return static_cast<Exponent>(value);
  }

  [[noreturn]] void fail(const std::string& what) const {
    auto [line, col] = where();
    throw InputError(what, line, col);
  }
  std::pair<std::size_t, std::size_t> where() const {
    if (src_.pos.empty())
      return {1, 1};
    return i_ < src_.pos.size() ? src_.pos[i_] : src_.pos.back();
  }

private:
  const Source& src_;
  std::size_t i_ = 0;
};

// Raw generator before the ring is known: either an exponent vector or a
// product of named powers.
struct RawGen {
  std::optional<std::vector<Exponent>> vec;
  std::vector<std::pair<std::string, Exponent>> factors;
  std::pair<std::size_t, std::size_t> at;
};

RawGen parse_one(Scanner& sc) {
  RawGen g;
  g.at = (sc.skip_ws(), sc.where());
  const char open = sc.peek();
  if (open == '[' || open == '(') {
    const char close = open == '[' ? ']' : ')';
    sc.accept(open);
    std::vector<Exponent> v{sc.exponent()};
    while (sc.accept(','))
      v.push_back(sc.exponent());
    sc.expect(close, open == '[' ? "']'" : "')'");
    g.vec = std::move(v);
    return g;
  }
  do {
    if (sc.peek() == '1') {
      if (sc.exponent() != 1)
        sc.fail("only the constant 1 is allowed");
      continue;
    }
    auto name = sc.ident();
    Exponent e = 1;
    if (sc.accept('^'))
      e = sc.exponent();
    g.factors.emplace_back(std::move(name), e);
  } while (sc.accept('*'));
  return g;
}

std::vector<RawGen> parse_list(const Source& src) {
  Scanner sc(src);
  std::vector<RawGen> out;
  if (sc.done())
    return out;
  out.push_back(parse_one(sc));
  while (sc.accept(','))
    out.push_back(parse_one(sc));
  if (!sc.done())
    sc.fail(std::string("unexpected '") + sc.peek() + "'");
  return out;
}

std::vector<std::string> parse_vars(const Source& src) {
  Scanner sc(src);
  std::vector<std::string> out{sc.ident()};
  while (sc.accept(','))
    out.push_back(sc.ident());
  if (!sc.done())
    sc.fail(std::string("unexpected '") + sc.peek() + "'");
  return out;
}

Monomial resolve(const RawGen& g, const RingContext& ctx) {
  const auto [line, col] = g.at;
  if (g.vec) {
    if (g.vec->size() != ctx.size())
      throw InputError("exponent vector has " + std::to_string(g.vec->size()) +
                           " entries, ring has " + std::to_string(ctx.size()) + " variables",
                       line, col);
    return Monomial(*g.vec);
  }
  Monomial m(ctx.size());
  for (const auto& [name, e] : g.factors) {
    const int i = ctx.index_of(name);
    if (i < 0)
      throw InputError("unknown variable '" + name + "'", line, col);
    if (__builtin_add_overflow(m[i], e, &m[i]))
      throw InputError("exponent out of range", line, col);
  }
  return m;
}

ParsedIdeal build(const RingPtr& ring, const std::vector<RawGen>& raw) {
  std::vector<Monomial> gens;
  for (const auto& g : raw)
    gens.push_back(resolve(g, *ring));
  const auto given = gens.size();
  ParsedIdeal out{MonomialIdeal(ring, std::move(gens)), {}};
  if (out.ideal.size() != given)
    out.warnings.push_back("input generators are not minimal: " + std::to_string(given) +
                           " given, " + std::to_string(out.ideal.size()) + " minimal");
  return out;
}

RingPtr infer_ring(const std::vector<RawGen>& raw) {
  std::vector<std::string> names;
  for (const auto& g : raw) {
    if (g.vec)
      throw InputError("exponent vectors need a vars declaration", g.at.first, g.at.second);
    for (const auto& f : g.factors)
      if (std::find(names.begin(), names.end(), f.first) == names.end())
        names.push_back(f.first);
  }
  if (names.empty())
    throw InputError("cannot infer variables: declare them with 'vars:'");
  return make_ring(std::move(names));
}

std::pair<std::size_t, std::size_t> offset_to_line_col(std::string_view text, std::size_t off) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < off && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

ParsedIdeal parse_machine(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = offset_to_line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw InputError("malformed document", line, col);
  }
  if (!doc.is_object() || !doc.contains("gens") || !doc["gens"].is_array())
    throw InputError("document needs a 'gens' array", 1, 1);

  std::vector<RawGen> raw;
  for (const auto& item : doc["gens"]) {
    if (item.is_string()) {
      Source src;
      src.append(item.get<std::string>(), 1, 1);
      Scanner sc(src);
      raw.push_back(parse_one(sc));
      if (!sc.done())
        sc.fail("trailing characters in generator");
    } else if (item.is_array()) {
      RawGen g;
      g.at = {1, 1};
      std::vector<Exponent> v;
      for (const auto& e : item) {
        if (!e.is_number_integer())
          throw InputError("exponents must be integers", 1, 1);
        if (e.get<std::int64_t>() < 0)
          throw InputError("negative exponent", 1, 1);
        if (e.get<std::uint64_t>() > std::numeric_limits<Exponent>::max())
          throw InputError("exponent out of range", 1, 1);
        v.push_back(e.get<Exponent>());
      }
      g.vec = std::move(v);
      raw.push_back(std::move(g));
    } else {
      throw InputError("generators must be strings or integer arrays", 1, 1);
    }
  }

  RingPtr ring;
  if (doc.contains("vars")) {
    if (!doc["vars"].is_array())
      throw InputError("'vars' must be an array of names", 1, 1);
    std::vector<std::string> names;
    for (const auto& v : doc["vars"]) {
      if (!v.is_string())
        throw InputError("'vars' must be an array of names", 1, 1);
      names.push_back(v.get<std::string>());
    }
    ring = make_ring(std::move(names));
  } else {
    ring = infer_ring(raw);
  }
  return build(ring, raw);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"')
      q += '"';
    q += c;
  }
  return q + "\"";
}

std::vector<std::string> csv_split(std::string_view line, std::size_t line_no) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (quoted)
    throw InputError("unterminated quote", line_no, line.size());
  out.push_back(std::move(cur));
  return out;
}

std::vector<std::string> prime_names(const VFunctionTable& t) {
  std::vector<std::string> out;
  for (const auto& p : t.primes)
    out.push_back(to_string(p, *t.ring));
  return out;
}

} // namespace

ParsedIdeal parse_generators(const RingPtr& ring, std::string_view gens) {
  Source src;
  src.append(gens, 1, 1);
  return build(ring, parse_list(src));
}

ParsedIdeal parse_ideal(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first])))
    ++first;
  if (first < text.size() && text[first] == '{')
    return parse_machine(text);

  Source vars_src, gens_src;
  Source* section = nullptr;
  bool have_vars = false, have_gens = false;
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::size_t col = 0;
    while (col < line.size() && std::isspace(static_cast<unsigned char>(line[col])))
      ++col;
    if (col < line.size()) {
      std::size_t k = col;
      while (k < line.size() && std::isalpha(static_cast<unsigned char>(line[k])))
        ++k;
      std::size_t colon = k;
      while (colon < line.size() && line[colon] == ' ')
        ++colon;
      const bool keyed = colon < line.size() && line[colon] == ':' && k > col;
      if (keyed) {
        const auto key = line.substr(col, k - col);
        if (key == "vars") {
          if (have_vars)
            throw InputError("duplicate 'vars' line", line_no, col + 1);
          have_vars = true;
          section = &vars_src;
        } else if (key == "gens") {
          if (have_gens)
            throw InputError("duplicate 'gens' line", line_no, col + 1);
          have_gens = true;
          section = &gens_src;
        } else {
          throw InputError("unknown key '" + std::string(key) + "'", line_no, col + 1);
        }
        section->append(line.substr(colon + 1), line_no, colon + 2);
      } else if (section == &gens_src) {
        section->append(line, line_no, 1);
      } else {
        throw InputError("expected 'vars:' or 'gens:'", line_no, col + 1);
      }
    }
    start = end + 1;
  }
  if (!have_gens)
    throw InputError("missing 'gens:' line", line_no ? line_no : 1, 1);

  auto raw = parse_list(gens_src);
  RingPtr ring = have_vars ? make_ring(parse_vars(vars_src)) : infer_ring(raw);
  return build(ring, raw);
}

std::string format_ideal_file(const MonomialIdeal& I) {
  std::ostringstream os;
  os << "vars: ";
  for (std::size_t i = 0; i < I.nvars(); ++i)
    os << (i ? ", " : "") << I.ring()->name(i);
  os << "\ngens: ";
  for (std::size_t i = 0; i < I.size(); ++i)
    os << (i ? ", " : "") << to_string(I.gens()[i], *I.ring());
  os << '\n';
  return os.str();
}

std::string write_vfun_csv(const VFunctionTable& t) {
  std::ostringstream os;
  os << "k,v,alpha_I,omega_I";
  for (const auto& name : prime_names(t))
    os << ',' << csv_field("v_" + name) << ',' << csv_field("alpha_mod_" + name) << ','
       << csv_field("omega_mod_" + name);
  os << '\n';
  for (const auto& r : t.rows) {
    os << r.k << ',' << r.v << ',' << t.alpha_I << ',' << t.omega_I;
    for (const auto& e : r.by_prime) {
      if (e)
        os << ',' << e->v << ',' << e->alpha_mod << ',' << e->omega_mod;
      else
        os << ",,,";
    }
    os << '\n';
  }
  return os.str();
}

VFunctionTable read_vfun_csv(std::string_view csv, const RingPtr& ring) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < csv.size()) {
    auto end = csv.find('\n', start);
    if (end == std::string_view::npos)
      end = csv.size();
    if (end > start)
      lines.push_back(csv.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty())
    throw InputError("empty CSV", 1, 1);

  const auto header = csv_split(lines[0], 1);
  if (header.size() < 4 || header[0] != "k" || header[1] != "v" || header[2] != "alpha_I" ||
      header[3] != "omega_I" || (header.size() - 4) % 3 != 0)
    throw InputError("unexpected CSV header", 1, 1);

  VFunctionTable t;
  t.ring = ring;
  std::vector<std::string> names;
  for (std::size_t c = 4; c < header.size(); c += 3) {
    const auto& h = header[c];
    if (h.rfind("v_", 0) != 0)
      throw InputError("expected a v_ column", 1, c + 1);
    const std::string name = h.substr(2);
    if (header[c + 1] != "alpha_mod_" + name || header[c + 2] != "omega_mod_" + name)
      throw InputError("prime columns out of order", 1, c + 2);
    // name is "(a,b,...)"
    if (name.size() < 3 || name.front() != '(' || name.back() != ')')
      throw InputError("malformed prime name '" + name + "'", 1, c + 1);
    std::vector<std::size_t> vars;
    std::stringstream ss(name.substr(1, name.size() - 2));
    std::string var;
    while (std::getline(ss, var, ',')) {
      const int i = ring->index_of(var);
      if (i < 0)
        throw InputError("unknown variable '" + var + "' in column header", 1, c + 1);
      vars.push_back(static_cast<std::size_t>(i));
    }
    t.primes.emplace_back(std::move(vars));
  }

  auto integer = [](const std::string& s, std::size_t line, std::size_t col) -> Degree {
    std::size_t used = 0;
    Degree v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size())
      throw InputError("expected an integer cell", line, col);
    return v;
  };

  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto cells = csv_split(lines[l], l + 1);
    if (cells.size() != header.size())
      throw InputError("row has " + std::to_string(cells.size()) + " cells, header has " +
                           std::to_string(header.size()),
                       l + 1, 1);
    VRow r;
    r.k = static_cast<unsigned>(integer(cells[0], l + 1, 1));
    r.v = integer(cells[1], l + 1, 2);
    const Degree a = integer(cells[2], l + 1, 3), w = integer(cells[3], l + 1, 4);
    if (l == 1) {
      t.alpha_I = a;
      t.omega_I = w;
    } else if (a != t.alpha_I || w != t.omega_I) {
      throw InputError("alpha_I/omega_I differ between rows", l + 1, 3);
    }
    for (std::size_t c = 4; c < cells.size(); c += 3) {
      if (cells[c].empty() && cells[c + 1].empty() && cells[c + 2].empty()) {
        r.by_prime.emplace_back(std::nullopt);
        continue;
      }
      r.by_prime.emplace_back(PrimeEntry{integer(cells[c], l + 1, c + 1),
                                         integer(cells[c + 1], l + 1, c + 2),
                                         integer(cells[c + 2], l + 1, c + 3)});
    }
    if (r.k != l)
      throw InputError("rows must be k = 1, 2, ...", l + 1, 1);
    t.rows.push_back(std::move(r));
  }
  t.k_max = static_cast<unsigned>(t.rows.size());
  return t;
}

std::string ideal_json(const MonomialIdeal& I) {
  json doc;
  doc["vars"] = I.ring()->names();
  doc["gens"] = json::array();
  for (const auto& g : I.gens())
    doc["gens"].push_back(std::vector<Exponent>(g.exponents().begin(), g.exponents().end()));
  return doc.dump();
}

std::string table_json(const VFunctionTable& t) {
  json doc;
  doc["k_max"] = t.k_max;
  doc["alpha_I"] = t.alpha_I;
  doc["omega_I"] = t.omega_I;
  doc["primes"] = prime_names(t);
  doc["rows"] = json::array();
  for (const auto& r : t.rows) {
    json row{{"k", r.k}, {"v", r.v}};
    json per = json::array();
    for (const auto& e : r.by_prime)
      per.push_back(e ? json{{"v", e->v}, {"alpha_mod", e->alpha_mod}, {"omega_mod", e->omega_mod}}
                      : json(nullptr));
    row["by_prime"] = std::move(per);
    doc["rows"].push_back(std::move(row));
  }
  return doc.dump(2);
}

std::string report_json(const LawReport& rep, const RingContext& ctx) {
  auto fit_json = [](const std::optional<LinearFit>& f) {
    if (!f)
      return json(nullptr);
    return json{{"slope", f->slope},
                {"intercept", f->intercept},
                {"onset", f->onset},
                {"run_length", f->run_length}};
  };
  json doc;
  doc["max_power"] = rep.options.k_max;
  doc["min_run"] = rep.options.min_run;
  doc["window"] = rep.options.window;
  doc["alpha_I"] = rep.alpha_I;
  doc["omega_I"] = rep.omega_I;
  doc["overall"] = to_string(rep.overall());
  doc["v_fit"] = fit_json(rep.v_fit);
  json pf = json::object();
  for (const auto& [p, f] : rep.prime_fits)
    pf[to_string(p, ctx)] = fit_json(f);
  doc["prime_fits"] = std::move(pf);
  json stable = json::array();
  for (const auto& p : rep.ass.stable_set)
    stable.push_back(to_string(p, ctx));
  doc["ass"] = {{"stable_set", stable},
                {"onset", rep.ass.onset},
                {"confirmed", rep.ass.confirmed}};
  doc["laws"] = json::array();
  for (const auto& l : rep.laws) {
    json j{{"name", l.name}, {"status", to_string(l.status)}};
    if (l.first_k)
      j["range"] = {l.first_k, l.last_k};
    if (l.onset)
      j["onset"] = *l.onset;
    if (l.witness_k)
      j["witness_k"] = *l.witness_k;
    if (!l.detail.empty())
      j["detail"] = l.detail;
    doc["laws"].push_back(std::move(j));
  }
  return doc.dump(2);
}

} // namespace vnum::io
