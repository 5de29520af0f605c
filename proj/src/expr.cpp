#include "legatlas/expr.hpp"

#include <cctype>

namespace legatlas {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const Env& env;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }

  long long parse_sum() {
    long long v = parse_product();
    for (;;) {
      if (eat('+')) v += parse_product();
      else if (eat('-')) v -= parse_product();
      else return v;
    }
  }

  long long parse_product() {
    long long v = parse_atom();
    for (;;) {
      if (eat('*')) {
        v *= parse_atom();
      } else if (eat('/')) {
        // Exact integer division only; all table formulas divide evenly.
        long long d = parse_atom();
        if (d == 0 || v % d != 0)
          throw ParseError("non-exact division in '" + s + "'");
        v /= d;
      } else {
        return v;
      }
    }
  }

  long long parse_atom() {
    skip_ws();
    if (eat('(')) {
      long long v = parse_sum();
      if (!eat(')')) throw ParseError("missing ')' in '" + s + "'");
      return v;
    }
    if (eat('-')) return -parse_atom();
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return std::stoll(s.substr(start, pos - start));
    }
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      auto it = env.find(name);
      if (it == env.end()) throw ParseError("unbound parameter '" + name + "'");
      return it->second;
    }
    throw ParseError("unexpected character in '" + s + "' at position " +
                     std::to_string(pos));
  }
};

bool eval_comparison(const std::string& part, const Env& env) {
  std::string t = part;
  // Trim whitespace at both ends.
  size_t b = t.find_first_not_of(" \t");
  size_t e = t.find_last_not_of(" \t");
  if (b == std::string::npos) throw ParseError("empty condition");
  t = t.substr(b, e - b + 1);
  if (t == "true") return true;
  if (t == "false") return false;

  static const char* ops[] = {"!=", "<=", ">=", "=", "<", ">"};
  for (const char* op : ops) {
    size_t p = t.find(op);
    if (p == std::string::npos) continue;
    std::string lhs = t.substr(0, p);
    std::string rhs = t.substr(p + std::string(op).size());
    long long a = eval_expr(lhs, env);
    long long c = eval_expr(rhs, env);
    std::string o(op);
    if (o == "=") return a == c;
    if (o == "!=") return a != c;
    if (o == "<=") return a <= c;
    if (o == ">=") return a >= c;
    if (o == "<") return a < c;
    return a > c;
  }
  throw ParseError("condition without comparison: '" + part + "'");
}

}  // namespace

long long eval_expr(const std::string& expr, const Env& env) {
  Parser p{expr, 0, env};
  long long v = p.parse_sum();
  p.skip_ws();
  if (p.pos != expr.size())
    throw ParseError("trailing characters in expression '" + expr + "'");
  return v;
}

bool eval_condition(const std::string& cond, const Env& env) {
  size_t start = 0;
  for (;;) {
    size_t comma = cond.find(',', start);
    std::string part =
        comma == std::string::npos ? cond.substr(start) : cond.substr(start, comma - start);
    if (!eval_comparison(part, env)) return false;
    if (comma == std::string::npos) return true;
    start = comma + 1;
  }
}

}  // namespace legatlas
