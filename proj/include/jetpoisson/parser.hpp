#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "jetpoisson/diff_operator.hpp"

namespace jetpoisson {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, size_t position)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    // 1-based byte offset into the input
    size_t position() const { return position_; }

private:
    size_t position_;
};

/**
 * Scalar expressions:
 *   expr   := ["+"|"-"] term { ("+"|"-") term }
 *   term   := factor { "*" factor }
 *   factor := atom [ "^" nat ]
 *   atom   := rational | indep | jet | "(" expr ")"
 *   jet    := dep [ "_" letters | "[" nat { "," nat } "]" ]
 *   rational := nat [ "/" nat ]
 * Letter subscripts (u_xx) require single-letter independent names; the
 * bracketed spelling (u[2,0], one entry per independent variable) is the
 * canonical output and always accepted.
 */
DiffFunction parse_expression(const Signature& sig, std::string_view text);

/**
 * Operator expressions reuse the same grammar with two extensions: the
 * derivative atoms "D" (one independent variable) or "D1".."Dm", where "*"
 * is operator composition, and an optional top-level matrix [[..],[..]] of
 * scalar operator entries.
 */
DiffOperator parse_operator(const Signature& sig, std::string_view text);

}  // namespace jetpoisson
