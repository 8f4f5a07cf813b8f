#pragma once

#include <string>
#include <vector>

#include "qbraid/scalar.hpp"

namespace qbraid {

// Grammar: integers, a/b, q, zeta(m) or zetaM, i (= zeta4), + - * / ^ and
// parentheses. Exponents are integers. The result lives in the smallest
// field containing every atom, joined with at_least.
Scalar parse_scalar(const std::string& text, const FieldContext& at_least = FieldContext());

// Comma separated list, all coerced to one common field.
std::vector<Scalar> parse_scalar_list(const std::string& csv, const FieldContext& at_least = FieldContext());

}  // namespace qbraid
