#pragma once

#include "sheaf/series.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace sheaf {

// Grammar:
//   EXPR   := ['-'] TERM { ('+'|'-') TERM }
//   TERM   := RATIONAL [ ['*'] FACTOR { FACTOR } ] | FACTOR { FACTOR }
//   FACTOR := 'prod' PGROUP { PGROUP } | 'x^' INT | '(' EXPR ')' | 'inv' '(' EXPR ')'
//   PGROUP := '(' '1' ('+'|'-') 'x^{' LIN '}' ')' [ '^' ['-'] INT ]
//   LIN    := [INT] 's' [ ('+'|'-') INT ]
// so "prod(1+x^{2s})(1+x^{1s})^2" is a single product.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::string input, std::size_t column);
  std::size_t column() const { return column_; }
  // Message, the input line and a caret under the offending column.
  std::string diagnostic() const;

 private:
  std::string input_;
  std::size_t column_;
};

class SeriesExpr {
 public:
  using Eval = std::function<FormalSeries(int)>;
  explicit SeriesExpr(Eval e) : eval_(std::move(e)) {}
  FormalSeries evaluate(int order) const { return eval_(order); }

 private:
  Eval eval_;
};

SeriesExpr parse_series_expr(const std::string& text);

}  // namespace sheaf
