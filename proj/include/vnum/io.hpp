#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vnum/asymptotics.hpp"
#include "vnum/ideal.hpp"

namespace vnum::io {

struct ParsedIdeal {
  MonomialIdeal ideal;
  std::vector<std::string> warnings;
};

/// Parses an ideal description. Two encodings are accepted:
///
///   text:     vars: x, y
///             gens: x^5, x^4*y^3, [2, 4]
///
///   machine:  {"vars": ["x", "y"], "gens": [[5, 0], "x^4*y^3", [2, 4]]}
///
/// Generators are monomial expressions or exponent vectors. Without a `vars`
/// line, variables are taken in order of first appearance. '#' starts a
/// comment in the text form. Errors are InputError with line and column.
ParsedIdeal parse_ideal(std::string_view text);

/// Parses a comma-separated generator list over a known ring.
ParsedIdeal parse_generators(const RingPtr& ring, std::string_view gens);

/// Text-form ideal file; parse_ideal(format_ideal_file(I)).ideal == I.
std::string format_ideal_file(const MonomialIdeal& I);

/// Header `k,v,alpha_I,omega_I` then per stable prime `v_P,alpha_mod_P,omega_mod_P`.
/// Prime names contain commas and are quoted. Undefined cells are empty.
std::string write_vfun_csv(const VFunctionTable& table);
VFunctionTable read_vfun_csv(std::string_view csv, const RingPtr& ring);

/// Machine-format (JSON) documents.
std::string ideal_json(const MonomialIdeal& I);
std::string table_json(const VFunctionTable& table);
std::string report_json(const LawReport& report, const RingContext& ctx);

} // namespace vnum::io
