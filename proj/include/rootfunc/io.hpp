#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "rootfunc/functional.hpp"
#include "rootfunc/polynomial.hpp"
#include "rootfunc/reduce.hpp"
#include "rootfunc/system.hpp"

namespace rootfunc::io {

using Json = nlohmann::ordered_json;

/// "x1^2*x2", with y-partners written as "x1'"; "1" for the unit monomial.
std::string format_monomial(const Monomial& m, const VarContext& context);

/// Terms in canonical order, e.g. "x1^2 - 3/2*x1*x2 + 1"; "0" for zero.
/// Prime-field coefficients are printed as residues.
std::string format_polynomial(const Polynomial& p);

/// "{x1*x2: 1, 1: -1/2}" in canonical monomial order; "{}" for zero.
std::string format_functional(const Functional& L);

/// Parses
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := integer ['/' integer] | var ['^' integer] | '(' expr ')'
///
/// where var is a declared name, optionally followed by ' for its y-partner
/// (only when allow_y_block). Whitespace is insignificant. Throws ParseError
/// carrying the 0-based character offset of the problem.
Polynomial parse_poly(std::string_view src, const ContextPtr& context, const FieldSpec& field,
                      bool allow_y_block = false);

/// Contents of a system file:
///
///   # comment
///   vars: x1 x2
///   field: Q            (or: field: Fp 32003; Q when omitted)
///   f1: x1^2 - 1
///   f2: x2^2 - x1
struct SystemFile {
  ContextPtr context;
  FieldSpec field;
  std::vector<std::string> labels;
  PolySystem system;
};

/// Throws ParseError (offset into the whole text) or Error.
SystemFile parse_system_file(std::string_view text);
SystemFile load_system_file(const std::string& path);

/// {"terms":[{"coeff":"a/b","exps":[...]}]}; exps cover the x-block only
/// when the polynomial is x-only and both blocks otherwise.
Json to_json(const Polynomial& p);
/// {"support":[{"exps":[...],"value":"a/b"}],"certified_degree":d or null}
Json to_json(const Functional& L);
/// {"input":...,"steps":[...],"iterations":P,"stabilized":bool}
Json to_json(const ReductionTrace& trace);

/// Reads the functional schema above (certified_degree is ignored; the
/// certificate must be re-established with certify()).
Functional functional_from_json(const nlohmann::json& j, const ContextPtr& context,
                                const FieldSpec& field);

}  // namespace rootfunc::io
