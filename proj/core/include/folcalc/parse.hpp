#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "folcalc/diff_form.hpp"
#include "folcalc/polynomial.hpp"

namespace folcalc {

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_),
          col(col_) {}
};

// A parsed expression is a scalar, a differential form, or a vector field.
using ParsedValue = std::variant<Polynomial, DiffForm, VectorField>;

// Grammar (see docs/grammar.md): +, -, *, parentheses; integers and rational
// literals a/b; '^' is scalar exponentiation when the exponent is a constant
// integer and the wedge product when both operands are forms; differentials
// are d<var> (dx0 ... , or dx,dy,dz when the ring is declared as x y z);
// vector-field basis elements are dd<var>.
ParsedValue parse_expression(const std::string& text, const std::vector<std::string>& vars);

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);
// Accepts any form expression; a scalar parses as a 0-form.
DiffForm parse_form(const std::string& text, const std::vector<std::string>& vars);
VectorField parse_vector_field(const std::string& text, const std::vector<std::string>& vars);

}  // namespace folcalc
