#include "sheaf/series_parser.hpp"

#include <doctest.h>

using namespace sheaf;

namespace {
FormalSeries eval(const std::string& e, int o) { return parse_series_expr(e).evaluate(o); }
}  // namespace

TEST_CASE("expressions evaluate to the matching products") {
  CHECK(eval("prod(1+x^{2s})(1+x^{1s})", 2) == eval_product({{1, 2, 0, 1}, {1, 1, 0, 1}}, 2));
  CHECK(eval("1/2 * prod(1+x^{2s-1})(1+x^{1s})", 0).coeff(0) == Rational(1, 2));
  CHECK(eval("x^0", 3) == FormalSeries::constant(1, 3));
  CHECK(eval("x^2", 3).coeff(2) == 1);
  CHECK(eval("prod(1-x^{s})^-1", 20) == eval_product({{-1, 1, 0, -1}}, 20));
  CHECK(eval("prod(1-x^{4s})^{-1}(1-x^{2s})^{-1}", 20) == eval_product({{-1, 4, 0, -1}, {-1, 2, 0, -1}}, 20));
  CHECK(eval("inv(1 - x^1)", 5) == inverse(FormalSeries::binomial(-1, 1, 5)));
  CHECK(eval("(x^1 + x^2) - x^1", 4) == FormalSeries::monomial(2, 1, 4));
  CHECK(eval("-x^1 + 2", 3).coeff(0) == 2);
  CHECK(eval("-x^1 + 2", 3).coeff(1) == -1);
  CHECK(eval("3/2 prod(1+x^{4s})(1+x^{2s})", 10) == eval_product({{1, 4, 0, 1}, {1, 2, 0, 1}}, 10, Rational(3, 2)));
  const auto oe = eval("prod(1+x^{2s-1})^2(1-x^{2s-1})^-2 - 4 x^1 prod(1+x^{4s})^4(1+x^{2s})^4 - prod(1+x^{4s-2})^4(1+x^{2s})^4", 30);
  CHECK(oe == FormalSeries(30));
}

TEST_CASE("parse errors carry a caret") {
  try {
    parse_series_expr("prod(1+x^{2s)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 12);
    const auto d = e.diagnostic();
    CHECK(d.find("prod(1+x^{2s)") != std::string::npos);
    CHECK(d.find("            ^") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_series_expr(""), ParseError);
  CHECK_THROWS_AS(parse_series_expr("sin(x)"), ParseError);
  CHECK_THROWS_AS(parse_series_expr("x^1 +"), ParseError);
  CHECK_THROWS_AS(parse_series_expr("(x^1"), ParseError);
  CHECK_THROWS_AS(parse_series_expr("1/0"), ParseError);
  CHECK_THROWS_AS(parse_series_expr("prod(1+x^{0s})"), ParseError);
}
