#include "loopalg/parser.hpp"

#include <cctype>

namespace loopalg {

namespace {

class Parser {
 public:
  Parser(const std::string& s, const std::vector<std::string>& coords) : s_(s), coords_(coords) {}

  JetExpr parse() {
    JetExpr e = sum();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return e;
  }

 private:
  const std::string& s_;
  const std::vector<std::string>& coords_;
  size_t pos_ = 0;
  int n() const { return (int)coords_.size(); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  JetExpr sum() {
    JetExpr e = product();
    while (true) {
      if (eat('+'))
        e = e + product();
      else if (eat('-'))
        e = e - product();
      else
        return e;
    }
  }

  JetExpr product() {
    JetExpr e = unary();
    while (true) {
      if (eat('*')) {
        e = e * unary();
      } else if (eat('/')) {
        size_t at = pos_;
        JetExpr d = unary();
        e = divide(e, d, at);
      } else {
        return e;
      }
    }
  }

  JetExpr divide(const JetExpr& a, const JetExpr& b, size_t at) {
    if (!b.is_ratfun())
      throw ParseError("division by an expression containing jet variables", at);
    RatFun d = b.as_ratfun();
    if (d.is_zero()) throw ParseError("division by zero", at);
    JetExpr r(n());
    for (auto& [m, c] : a.terms()) r.add(m, c / d);
    return r;
  }

  JetExpr unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  JetExpr power() {
    JetExpr base = atom();
    if (eat('^')) {
      size_t at = pos_;
      bool neg = eat('-');
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
        throw ParseError("expected an integer exponent", pos_);
      long k = 0;
      while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) k = k * 10 + (s_[pos_++] - '0');
      if (neg) {
        if (!base.is_ratfun())
          throw ParseError("negative power of an expression containing jet variables", at);
        return JetExpr(base.as_ratfun().pow(-(int)k));
      }
      return base.pow((int)k);
    }
    return base;
  }

  JetExpr atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      JetExpr e = sum();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit((unsigned char)c)) {
      std::string num;
      while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) num += s_[pos_++];
      return JetExpr(n(), Rational(num));
    }
    if (std::isalpha((unsigned char)c)) return identifier();
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  JetExpr identifier() {
    size_t start = pos_;
    std::string name;
    while (pos_ < s_.size() && (std::isalnum((unsigned char)s_[pos_]))) name += s_[pos_++];
    int order = 0;
    if (pos_ < s_.size() && s_[pos_] == '_') {
      size_t save = pos_;
      ++pos_;
      std::string ord;
      while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ord += s_[pos_++];
      if (ord.empty()) {
        pos_ = save;  // trailing underscore not followed by digits: not ours
      } else {
        order = std::stoi(ord);
        if (order < 1) throw ParseError("jet order must be >= 1", save + 1);
      }
    }
    for (int i = 0; i < n(); ++i)
      if (coords_[i] == name) return JetExpr::jet_var(n(), i, order);
    throw ParseError("unknown identifier '" + name + "'", start);
  }
};

}  // namespace

JetExpr parse_expr(const std::string& src, const std::vector<std::string>& coords) {
  return Parser(src, coords).parse();
}

RatFun parse_ratfun(const std::string& src, const std::vector<std::string>& coords) {
  JetExpr e = parse_expr(src, coords);
  if (!e.is_ratfun()) throw ParseError("expected a u-only expression", 0);
  return e.as_ratfun();
}

}  // namespace loopalg
