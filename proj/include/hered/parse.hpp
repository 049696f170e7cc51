#pragma once

// Text grammars for fields and polynomials.
//
//   field := "Q" | "Q[" name "]/(" poly-in-name ")"
//   expr  := ["+"|"-"] term (("+"|"-") term)*
//   term  := power (("*" power) | ("/" integer))*
//   power := atom ["^" integer]
//   atom  := integer | "x" | generator | "(" expr ")"
//
// Juxtaposition ("2x") is rejected. ParseError offsets are 1-based.

#include <string>

#include "hered/numfield.hpp"

namespace hered {

struct FieldSpec {
  std::string text;  // canonical form
  FieldPtr field;
};

FieldSpec parse_field(const std::string& text);

/// Canonical field string: "Q" or "Q[g]/(m)".
std::string field_string(const FieldPtr& K);

KPoly parse_poly(const std::string& text, const FieldSpec& K);

/// Field elements use the same grammar without the variable x.
NFElement parse_element(const std::string& text, const FieldSpec& K);

}  // namespace hered
