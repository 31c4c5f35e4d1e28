#include "sheaf/series_parser.hpp"

#include <cctype>
#include <limits>

namespace sheaf {

ParseError::ParseError(const std::string& msg, std::string input, std::size_t column)
    : std::runtime_error(msg), input_(std::move(input)), column_(column) {}

std::string ParseError::diagnostic() const {
  return std::string("parse error: ") + what() + " at column " + std::to_string(column_ + 1) +
         "\n  " + input_ + "\n  " + std::string(column_, ' ') + "^";
}

namespace {

using Eval = SeriesExpr::Eval;

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Eval parse() {
    Eval e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, s_, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(const char* w) {
    skip_ws();
    std::size_t n = std::char_traits<char>::length(w);
    if (s_.compare(pos_, n, w) == 0) {
      pos_ += n;
      return true;
    }
    return false;
  }

  bool digit_next() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  long integer() {
    if (!digit_next()) fail("expected integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > std::numeric_limits<int>::max()) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  long signed_integer() {
    bool neg = accept('-');
    long v = integer();
    return neg ? -v : v;
  }

  Eval expr() {
    bool neg = accept('-');
    Eval acc = term();
    if (neg) acc = [a = acc](int o) { return -a(o); };
    for (;;) {
      if (accept('+')) {
        Eval rhs = term();
        acc = [a = acc, b = rhs](int o) { return a(o) + b(o); };
      } else if (accept('-')) {
        Eval rhs = term();
        acc = [a = acc, b = rhs](int o) { return a(o) - b(o); };
      } else {
        return acc;
      }
    }
  }

  bool factor_starts() {
    char c = peek();
    if (c == '(' || c == 'x') return true;
    return s_.compare(pos_, 4, "prod") == 0 || s_.compare(pos_, 3, "inv") == 0;
  }

  Eval term() {
    Eval acc;
    if (digit_next()) {
      Rational r(integer());
      if (accept('/')) {
        std::size_t at = pos_;
        long d = integer();
        if (d == 0) throw ParseError("zero denominator", s_, at);
        r /= d;
      }
      acc = [r](int o) { return FormalSeries::constant(r, o); };
      bool star = accept('*');
      if (!factor_starts()) {
        if (star) fail("expected factor after '*'");
        return acc;
      }
    } else if (!factor_starts()) {
      fail("expected a term");
    }
    while (factor_starts()) {
      Eval f = factor();
      acc = acc ? Eval([a = acc, b = f](int o) { return a(o) * b(o); }) : f;
    }
    return acc;
  }

  bool pgroup_starts() {
    std::size_t save = pos_;
    bool ok = accept('(') && accept('1') && (accept('+') || accept('-')) && accept('x') &&
              accept('^') && accept('{');
    pos_ = save;
    return ok;
  }

  Eval factor() {
    if (accept_word("prod")) {
      if (!pgroup_starts()) fail("expected '(1+x^{...})' after prod");
      std::vector<EtaFactor> fs;
      while (pgroup_starts()) fs.push_back(pgroup());
      for (const auto& f : fs)
        if (f.stride < 1 || f.stride + f.offset < 1) fail("product factor must have a + b >= 1");
      return [fs](int o) { return eval_product(fs, o); };
    }
    if (accept_word("inv")) {
      expect('(');
      Eval inner = expr();
      expect(')');
      std::size_t at = pos_;
      std::string src = s_;
      return [inner, src, at](int o) {
        FormalSeries v = inner(o);
        if (v.coeff(0) == 0) throw ParseError("inverse of series with zero constant term", src, at);
        return inverse(v);
      };
    }
    if (accept('(')) {
      Eval inner = expr();
      expect(')');
      return inner;
    }
    if (accept('x')) {
      expect('^');
      long e = integer();
      return [e](int o) { return FormalSeries::monomial(static_cast<int>(e), Rational(1), o); };
    }
    fail("expected a factor");
  }

  EtaFactor pgroup() {
    EtaFactor f;
    expect('(');
    expect('1');
    if (accept('+')) {
      f.sign = 1;
    } else {
      expect('-');
      f.sign = -1;
    }
    expect('x');
    expect('^');
    expect('{');
    f.stride = digit_next() ? static_cast<int>(integer()) : 1;
    expect('s');
    if (accept('+')) {
      f.offset = static_cast<int>(integer());
    } else if (accept('-')) {
      f.offset = -static_cast<int>(integer());
    }
    expect('}');
    expect(')');
    if (accept('^')) {
      bool brace = accept('{');
      f.exponent = static_cast<int>(signed_integer());
      if (brace) expect('}');
    }
    return f;
  }
};

}  // namespace

SeriesExpr parse_series_expr(const std::string& text) {
  Parser p(text);
  return SeriesExpr(p.parse());
}

}  // namespace sheaf
