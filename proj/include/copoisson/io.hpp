#pragma once

// Structure-definition files (JSON) and the polynomial expression parser.
//
// Document shape: {"kind", "variables", "max_degree", "payload"}. Indices in
// payloads are 1-based; rationals are strings "p/q"; polynomials and
// monomials are expression strings over the declared variables.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "copoisson/errors.hpp"
#include "copoisson/finite_hopf.hpp"
#include "copoisson/hopf.hpp"
#include "copoisson/structures.hpp"

namespace copoisson {

/// Grammar: rational literals ("3", "3/4"), variable names, + - * ^ with a
/// non-negative integer exponent, parentheses. No implicit multiplication.
/// Throws ParseError with a 1-based column.
Poly parse_poly(std::string_view src, const std::vector<std::string>& variables);

/// An expression that evaluates to a single monomial with coefficient 1.
Monomial parse_monomial(std::string_view src, const std::vector<std::string>& variables);

enum class SpecKind { poisson, copoisson, struct_consts, finhopf, qmap, pmap };

std::string to_string(SpecKind k);

/// A map A -> A(x)A read as q (role "q") or as its I form (role "i").
struct QMapPayload {
  std::string role;
  QMap map;
};

/// A map A(x)A -> A read as p (role "p") or as its J form (role "j").
struct PMapPayload {
  std::string role;
  PMap map;
};

using SpecPayload =
    std::variant<BracketTable, ITable, StructConsts, FinHopf, QMapPayload, PMapPayload>;

struct StructureSpec {
  SpecKind kind = SpecKind::poisson;
  std::vector<std::string> variables;
  std::size_t max_degree = 0;
  SpecPayload payload;
};

/// Throws ParseError for malformed JSON and SchemaError (with a JSON pointer)
/// for schema violations, non-skew data and duplicate keys.
StructureSpec parse_spec(std::string_view json_text);
StructureSpec load_spec(const std::string& path);

/// Canonical form: sorted keys, graded-lex rows, two-space indent, trailing newline.
std::string serialize_spec(const StructureSpec& spec);

}  // namespace copoisson
