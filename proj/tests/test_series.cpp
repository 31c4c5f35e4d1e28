#include "sheaf/partitions.hpp"
#include "sheaf/series.hpp"

#include <doctest.h>

using namespace sheaf;

namespace {

// Naive Cauchy product, the oracle for operator*.
FormalSeries naive_mul(const FormalSeries& a, const FormalSeries& b) {
  const int o = std::min(a.order(), b.order());
  FormalSeries r(o);
  for (int i = 0; i <= o; ++i)
    for (int j = 0; i + j <= o; ++j) r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
  return r;
}

// prod_{s>=1} (1 + sign x^{a s + b})^e by repeated naive multiplication (e may be negative).
FormalSeries naive_product(int sign, int a, int b, int e, int o) {
  FormalSeries r = FormalSeries::constant(1, o);
  for (int s = 1; a * s + b <= o; ++s) {
    FormalSeries f = FormalSeries::binomial(sign, a * s + b, o);
    if (e < 0) {
      // geometric expansion of 1/(1 + sign y)
      FormalSeries g(o);
      const int step = a * s + b;
      Rational c = 1;
      for (int k = 0; k * step <= o; ++k, c *= -sign) g.set_coeff(k * step, c);
      f = g;
    }
    for (int i = 0; i < std::abs(e); ++i) r = naive_mul(r, f);
  }
  return r;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  const int o = 4;
  FormalSeries one_minus_x = FormalSeries::binomial(-1, 1, o);
  const auto inv = inverse(one_minus_x);
  for (int k = 0; k <= o; ++k) CHECK(inv.coeff(k) == 1);
  CHECK(one_minus_x * inv == FormalSeries::constant(1, o));

  FormalSeries unit(6);
  unit.set_coeff(0, Rational(3, 2));
  unit.set_coeff(1, -2);
  unit.set_coeff(4, Rational(1, 7));
  CHECK(unit * inverse(unit) == FormalSeries::constant(1, 6));
  CHECK_THROWS_AS(inverse(FormalSeries::monomial(1, 1, 3)), std::domain_error);
  CHECK_THROWS_AS(unit.coeff(7), std::out_of_range);

  FormalSeries a(5), b(3);
  for (int k = 0; k <= 5; ++k) a.set_coeff(k, k + 1);
  for (int k = 0; k <= 3; ++k) b.set_coeff(k, Rational(1, k + 1));
  CHECK((a * b) == naive_mul(a, b));
  CHECK((a * b).order() == 3);
  CHECK((a + b).order() == 3);
  CHECK(shifted(b, 2).coeff(2) == 1);
  CHECK(shifted(b, 2).order() == 3);
}

TEST_CASE("sparse binomial updates agree with dense multiplication") {
  const int o = 20;
  FormalSeries s = FormalSeries::constant(1, o);
  s.mul_binomial(3, 2);
  s.div_binomial(-1, 3);
  FormalSeries geo(o);
  for (int k = 0; 3 * k <= o; ++k) geo.set_coeff(3 * k, 1);
  CHECK(s == naive_mul(FormalSeries::binomial(3, 2, o), geo));
}

TEST_CASE("products") {
  const int o = 18;
  for (int sign : {1, -1})
    for (int a = 1; a <= 4; ++a)
      for (int b = 1 - a; b <= 1; ++b)
        for (int e : {-3, -1, 1, 2}) {
          CAPTURE(sign);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(e);
          CHECK(eval_product({{sign, a, b, e}}, o) == naive_product(sign, a, b, e, o));
        }
  const auto hecke = eval_product({{1, 2, 0, 1}, {1, 1, 0, 1}}, 2);
  CHECK(hecke.coeff(0) == 1);
  CHECK(hecke.coeff(1) == 1);
  CHECK(hecke.coeff(2) == 2);
  const auto d = eval_product({{1, 2, -1, 1}, {1, 1, 0, 1}}, 1, Rational(1, 2));
  CHECK(d.coeff(0) == Rational(1, 2));
  CHECK(d.coeff(1) == 1);
  CHECK(eval_product(std::vector<EtaFactor>{}, 5) == FormalSeries::constant(1, 5));
  CHECK(eval_product({{-1, 2, 0, -1}}, 4).coeff(4) == 2);
  CHECK(eval_product({{1, 2, 0, 2}, {1, 1, 0, 2}}, 2).coeff(2) == 5);
  CHECK(eval_product({{-1, 4, 0, -1}, {-1, 2, 0, -1}}, 4, 2).coeff(4) == 6);
  CHECK(eval_product({{1, 3, 0, 1}}, 10, 1, 2).coeff(5) == 1);
  const auto p = eval_product({{-1, 1, 0, -1}}, 60);
  for (int n = 0; n <= 60; ++n) CHECK(p.coeff(n) == count_partitions(n));
  CHECK_THROWS_AS(eval_product({{1, 0, 1, 1}}, 5), std::invalid_argument);
  CHECK_THROWS_AS(eval_product({{1, 2, -2, 1}}, 5), std::invalid_argument);
  CHECK_THROWS_AS(eval_product({{2, 1, 0, 1}}, 5), std::invalid_argument);
}

TEST_CASE("bilateral sums") {
  BilateralFamily f;
  f.numerator = {1};
  f.denominator = {1, 0, 1};
  const auto s = bilateral_sum(f, 12);
  CHECK(s.coeff(0) == Rational(1, 2));
  // direct: 1/2 + 2 sum_{k>=1} x^k/(1+x^{2k})
  FormalSeries direct = FormalSeries::constant(Rational(1, 2), 12);
  for (int k = 1; k <= 12; ++k) {
    FormalSeries t = FormalSeries::monomial(k, 2, 12);
    t.div_binomial(1, 2 * k);
    direct += t;
  }
  CHECK(s == direct);

  BilateralFamily odd = f;
  odd.parity = BilateralFamily::Parity::odd;
  BilateralFamily even = f;
  even.parity = BilateralFamily::Parity::even;
  CHECK(bilateral_sum(odd, 12) + bilateral_sum(even, 12) == s);

  BilateralFamily bad;
  bad.shift = 0;
  bad.numerator = {1};
  bad.denominator = {1};
  CHECK_THROWS_AS(bilateral_sum(bad, 5), std::invalid_argument);
}

TEST_CASE("identity checks report the first disagreement") {
  FormalSeries a = FormalSeries::constant(1, 5), b = a;
  CHECK(check_identity(a, b, 5).pass);
  b.set_coeff(3, 2);
  const auto v = check_identity(a, b, 5);
  CHECK_FALSE(v.pass);
  CHECK(v.exponent == 3);
  CHECK(v.lhs == 0);
  CHECK(v.rhs == 2);
  CHECK(v.to_string().find('3') != std::string::npos);
}

TEST_CASE("two-variable series") {
  auto b = BivariateSeries::one(6, 6);
  b.div_binomial(-1, 1, 1);  // 1/(1-uv)
  b.mul_binomial(1, 2, 0);   // (1+u^2)
  CHECK(b.coeff(0, 0) == 1);
  CHECK(b.coeff(1, 1) == 1);
  CHECK(b.coeff(2, 0) == 1);
  CHECK(b.coeff(3, 1) == 1);
  CHECK(b.coeff(2, 1) == 0);
  CHECK(b.coeff(6, 6) == 1);
  auto c = b;
  c *= Rational(3);
  c += b;
  CHECK(c.coeff(3, 1) == 4);
}
