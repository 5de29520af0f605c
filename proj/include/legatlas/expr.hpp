#ifndef LEGATLAS_EXPR_HPP
#define LEGATLAS_EXPR_HPP

#include <map>
#include <string>

#include "legatlas/types.hpp"

namespace legatlas {

// Environment binding parameter names to integer values.
using Env = std::map<std::string, long long>;

// Evaluate an integer expression over +, -, *, parentheses, integer literals
// and parameter names, e.g. "2*p*q-3".  Throws ParseError on syntax errors or
// unbound names.
long long eval_expr(const std::string& expr, const Env& env);

// Evaluate a condition: either "true" / "false", or a comma-separated
// conjunction of comparisons "expr OP expr" with OP one of = != <= >= < >.
bool eval_condition(const std::string& cond, const Env& env);

}  // namespace legatlas

#endif  // LEGATLAS_EXPR_HPP
