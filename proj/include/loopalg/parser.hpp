#pragma once
// Expression grammar: identifiers are coordinate names (u1, u2, ... or user
// names); `name_k` is the k-th x-derivative jet variable (k >= 1); operators
// + - * / ^ with integer exponents; parentheses; integer literals (a/b via
// division); whitespace insignificant. Division by expressions containing jet
// variables of order >= 1 is rejected.
#include "loopalg/jet.hpp"

namespace loopalg {

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t p)
      : std::runtime_error(msg + " at position " + std::to_string(p + 1)), pos(p) {}
};

JetExpr parse_expr(const std::string& src, const std::vector<std::string>& coords);
RatFun parse_ratfun(const std::string& src, const std::vector<std::string>& coords);

}  // namespace loopalg
