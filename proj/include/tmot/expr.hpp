#pragma once

#include <string>

#include "tmot/skew.hpp"

namespace tmot {

// Names under which the two skew variables appear in input expressions; an
// empty name makes the variable unavailable (e.g. no t inside a t-module
// matrix). Coefficients use T for theta.
struct ExprContext {
    TwistPair twist;
    FqPtr field;
    std::string rho_name;
    std::string sigma_name;
};

// Grammar: integer literals, T, the context variable names, + - * / ^,
// parentheses, juxtaposition as product. Products keep the written
// (non-commutative) order; division requires a constant divisor. Errors are
// position-annotated bad_input failures.
SkewPoly parse_expression(const std::string& text, const ExprContext& ctx);

}  // namespace tmot
