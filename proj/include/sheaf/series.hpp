#pragma once

#include "sheaf/rational.hpp"

#include <string>
#include <vector>

namespace sheaf {

inline constexpr int kDefaultOrder = 40;

// Truncated power series: coefficients of x^0..x^order, exact.
class FormalSeries {
 public:
  explicit FormalSeries(int order = 0);
  static FormalSeries constant(const Rational& c, int order);
  static FormalSeries monomial(int exponent, const Rational& c, int order);
  // 1 + c x^e
  static FormalSeries binomial(const Rational& c, int e, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  // Throws std::out_of_range beyond the truncation order.
  const Rational& coeff(int k) const;
  void set_coeff(int k, Rational v);
  const std::vector<Rational>& coeffs() const { return c_; }

  FormalSeries truncated(int order) const;
  bool is_integral() const;

  // In-place sparse updates by (1 + c x^e)^{±1}.
  void mul_binomial(const Rational& c, int e);
  void div_binomial(const Rational& c, int e);

  FormalSeries& operator+=(const FormalSeries& o);
  FormalSeries& operator-=(const FormalSeries& o);
  FormalSeries& operator*=(const Rational& s);

  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator*(const Rational& s, FormalSeries a) { return a *= s; }
  friend FormalSeries operator-(FormalSeries a) { return a *= Rational(-1); }

  bool operator==(const FormalSeries& o) const { return c_ == o.c_; }

  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

// Throws std::domain_error when the constant term vanishes.
FormalSeries inverse(const FormalSeries& s);
// Multiplies by x^shift, dropping what falls past the order.
FormalSeries shifted(const FormalSeries& s, int shift);

// prod_{s>=1} (1 + sign x^{a s + b})^e
struct EtaFactor {
  int sign = 1;
  int stride = 1;
  int offset = 0;
  int exponent = 1;
};

struct ProductSpec {
  std::vector<EtaFactor> factors;
  Rational scalar{1};
  int shift = 0;  // extra monomial x^shift
};

// Throws std::invalid_argument if some factor has a + b < 1.
FormalSeries eval_product(const ProductSpec& spec, int order);
FormalSeries eval_product(std::vector<EtaFactor> factors, int order, Rational scalar = 1,
                          int shift = 0);

// Term x^{shift k} N(x^k) / D(x^k) summed over integers k of the given parity.
// For k < 0 the term is rewritten as x^{|k| (deg D - deg N - shift)} Nrev / Drev,
// which must have positive valuation.
struct BilateralFamily {
  enum class Parity { all, odd, even };
  int shift = 1;
  std::vector<Rational> numerator{Rational(1)};
  std::vector<Rational> denominator{Rational(1)};
  Parity parity = Parity::all;
};

// Throws std::invalid_argument when the family is not symmetrizable.
FormalSeries bilateral_sum(const BilateralFamily& family, int order);

struct IdentityVerdict {
  bool pass = true;
  int exponent = -1;  // first disagreement
  Rational lhs;
  Rational rhs;
  std::string to_string() const;
};

IdentityVerdict check_identity(const FormalSeries& lhs, const FormalSeries& rhs, int order);

// Series in v whose coefficients are series in u.
class BivariateSeries {
 public:
  BivariateSeries(int order_u, int order_v);
  static BivariateSeries one(int order_u, int order_v);

  int order_u() const { return order_u_; }
  int order_v() const { return static_cast<int>(rows_.size()) - 1; }
  const Rational& coeff(int i, int j) const;  // u^i v^j
  const FormalSeries& v_coeff(int j) const { return rows_.at(static_cast<std::size_t>(j)); }

  // (1 + c u^a v^b)^{±1}
  void mul_binomial(const Rational& c, int a, int b);
  void div_binomial(const Rational& c, int a, int b);

  BivariateSeries& operator+=(const BivariateSeries& o);
  BivariateSeries& operator*=(const Rational& s);

 private:
  int order_u_;
  std::vector<FormalSeries> rows_;
};

}  // namespace sheaf
