#include "sheaf/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace sheaf {

FormalSeries::FormalSeries(int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

FormalSeries FormalSeries::constant(const Rational& c, int order) {
  FormalSeries s(order);
  s.c_[0] = c;
  return s;
}

FormalSeries FormalSeries::monomial(int exponent, const Rational& c, int order) {
  if (exponent < 0) throw std::invalid_argument("negative exponent in power series");
  FormalSeries s(order);
  if (exponent <= order) s.c_[static_cast<std::size_t>(exponent)] = c;
  return s;
}

FormalSeries FormalSeries::binomial(const Rational& c, int e, int order) {
  FormalSeries s = constant(Rational(1), order);
  s.mul_binomial(c, e);
  return s;
}

const Rational& FormalSeries::coeff(int k) const {
  if (k < 0 || k > order())
    throw std::out_of_range("coefficient x^" + std::to_string(k) +
                            " beyond truncation order " + std::to_string(order()));
  return c_[static_cast<std::size_t>(k)];
}

void FormalSeries::set_coeff(int k, Rational v) {
  if (k < 0 || k > order()) throw std::out_of_range("coefficient index beyond truncation order");
  c_[static_cast<std::size_t>(k)] = std::move(v);
}

FormalSeries FormalSeries::truncated(int order) const {
  if (order > this->order()) throw std::out_of_range("cannot extend a truncated series");
  FormalSeries s(order);
  std::copy_n(c_.begin(), order + 1, s.c_.begin());
  return s;
}

bool FormalSeries::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return is_integer(r); });
}

void FormalSeries::mul_binomial(const Rational& c, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent in power series");
  if (e == 0) {
    *this *= Rational(1) + c;
    return;
  }
  for (int k = order(); k >= e; --k) {
    const auto& src = c_[static_cast<std::size_t>(k - e)];
    if (src != 0) c_[static_cast<std::size_t>(k)] += c * src;
  }
}

void FormalSeries::div_binomial(const Rational& c, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent in power series");
  if (e == 0) {
    if (c == -1) throw std::domain_error("inverse of a series with zero constant term");
    *this *= Rational(1) / (Rational(1) + c);
    return;
  }
  for (int k = e; k <= order(); ++k) {
    const auto& src = c_[static_cast<std::size_t>(k - e)];
    if (src != 0) c_[static_cast<std::size_t>(k)] -= c * src;
  }
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FormalSeries& FormalSeries::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  const int n = std::min(a.order(), b.order());
  FormalSeries r(n);
  for (int i = 0; i <= n; ++i) {
    const auto& ai = a.c_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      const auto& bj = b.c_[static_cast<std::size_t>(j)];
      if (bj != 0) r.c_[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  return r;
}

std::string FormalSeries::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += sheaf::to_string(c_[i]);
  }
  return s;
}

FormalSeries inverse(const FormalSeries& s) {
  const auto& a0 = s.coeff(0);
  if (a0 == 0) throw std::domain_error("inverse of a series with zero constant term");
  const int n = s.order();
  FormalSeries r(n);
  const Rational inv0 = Rational(1) / a0;
  r.set_coeff(0, inv0);
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) {
      const auto& aj = s.coeff(j);
      if (aj != 0) acc += aj * r.coeff(k - j);
    }
    r.set_coeff(k, -acc * inv0);
  }
  return r;
}

FormalSeries shifted(const FormalSeries& s, int shift) {
  if (shift < 0) throw std::invalid_argument("negative shift");
  FormalSeries r(s.order());
  for (int k = s.order(); k >= shift; --k) r.set_coeff(k, s.coeff(k - shift));
  return r;
}

FormalSeries eval_product(const ProductSpec& spec, int order) {
  FormalSeries r = FormalSeries::constant(spec.scalar, order);
  for (const auto& f : spec.factors) {
    if (f.stride < 1 || f.stride + f.offset < 1)
      throw std::invalid_argument("product factor must have stride >= 1 and stride + offset >= 1");
    if (f.sign != 1 && f.sign != -1) throw std::invalid_argument("product factor sign must be +1 or -1");
    const Rational c(f.sign);
    for (int s = 1; f.stride * s + f.offset <= order; ++s) {
      const int e = f.stride * s + f.offset;
      for (int i = 0; i < f.exponent; ++i) r.mul_binomial(c, e);
      for (int i = 0; i < -f.exponent; ++i) r.div_binomial(c, e);
    }
  }
  return shifted(r, spec.shift);
}

FormalSeries eval_product(std::vector<EtaFactor> factors, int order, Rational scalar, int shift) {
  return eval_product(ProductSpec{std::move(factors), std::move(scalar), shift}, order);
}

namespace {

std::vector<Rational> trimmed(std::vector<Rational> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

FormalSeries poly_in_power(const std::vector<Rational>& p, int step, int order) {
  FormalSeries s(order);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const long e = static_cast<long>(i) * step;
    if (e > order) break;
    s.set_coeff(static_cast<int>(e), p[i]);
  }
  return s;
}

// x^{val} P(x^step) / Q(x^step)
FormalSeries rational_term(const std::vector<Rational>& P, const std::vector<Rational>& Q, int step,
                           int val, int order) {
  if (val > order) return FormalSeries(order);
  FormalSeries q = poly_in_power(Q, step, order);
  FormalSeries p = poly_in_power(P, step, order);
  return shifted(p * inverse(q), val);
}

Rational eval_at_one(const std::vector<Rational>& p) {
  Rational s = 0;
  for (const auto& c : p) s += c;
  return s;
}

}  // namespace

FormalSeries bilateral_sum(const BilateralFamily& family, int order) {
  const auto N = trimmed(family.numerator);
  const auto D = trimmed(family.denominator);
  if (D.empty() || D.front() == 0)
    throw std::invalid_argument("bilateral term denominator must have nonzero constant term");
  if (family.shift < 1)
    throw std::invalid_argument("bilateral term has nonpositive valuation for k > 0");
  const int degN = N.empty() ? 0 : static_cast<int>(N.size()) - 1;
  const int degD = static_cast<int>(D.size()) - 1;
  const int neg_shift = degD - degN - family.shift;
  if (neg_shift < 1)
    throw std::invalid_argument("bilateral term does not rewrite to positive valuation for k < 0");
  const std::vector<Rational> Nrev(N.rbegin(), N.rend());
  const std::vector<Rational> Drev(D.rbegin(), D.rend());

  auto wanted = [&](int k) {
    switch (family.parity) {
      case BilateralFamily::Parity::odd: return k % 2 != 0;
      case BilateralFamily::Parity::even: return k % 2 == 0;
      default: return true;
    }
  };

  FormalSeries total(order);
  if (wanted(0)) {
    const Rational d1 = eval_at_one(D);
    if (d1 == 0) throw std::invalid_argument("bilateral term undefined at k = 0");
    total.set_coeff(0, eval_at_one(N) / d1);
  }
  const int min_val = std::min(family.shift, neg_shift);
  for (int k = 1; static_cast<long>(k) * min_val <= order; ++k) {
    if (!wanted(k)) continue;
    total += rational_term(N, D, k, family.shift * k, order);
    total += rational_term(Nrev, Drev, k, neg_shift * k, order);
  }
  return total;
}

std::string IdentityVerdict::to_string() const {
  if (pass) return "PASS";
  return "FAIL at x^" + std::to_string(exponent) + ": lhs " + sheaf::to_string(lhs) + " vs rhs " +
         sheaf::to_string(rhs);
}

IdentityVerdict check_identity(const FormalSeries& lhs, const FormalSeries& rhs, int order) {
  if (order > lhs.order() || order > rhs.order())
    throw std::out_of_range("identity check beyond a truncation order");
  for (int k = 0; k <= order; ++k) {
    if (lhs.coeff(k) != rhs.coeff(k)) return {false, k, lhs.coeff(k), rhs.coeff(k)};
  }
  return {};
}

BivariateSeries::BivariateSeries(int order_u, int order_v) : order_u_(order_u) {
  if (order_v < 0) throw std::invalid_argument("negative truncation order");
  rows_.assign(static_cast<std::size_t>(order_v) + 1, FormalSeries(order_u));
}

BivariateSeries BivariateSeries::one(int order_u, int order_v) {
  BivariateSeries s(order_u, order_v);
  s.rows_[0].set_coeff(0, Rational(1));
  return s;
}

const Rational& BivariateSeries::coeff(int i, int j) const {
  if (j < 0 || j > order_v()) throw std::out_of_range("v exponent beyond truncation order");
  return rows_[static_cast<std::size_t>(j)].coeff(i);
}

void BivariateSeries::mul_binomial(const Rational& c, int a, int b) {
  if (a < 0 || b < 0 || a + b < 1) throw std::invalid_argument("bad bivariate binomial");
  if (b == 0) {
    for (auto& r : rows_) r.mul_binomial(c, a);
    return;
  }
  for (int j = order_v(); j >= b; --j)
    rows_[static_cast<std::size_t>(j)] += c * shifted(rows_[static_cast<std::size_t>(j - b)], a);
}

void BivariateSeries::div_binomial(const Rational& c, int a, int b) {
  if (a < 0 || b < 0 || a + b < 1) throw std::invalid_argument("bad bivariate binomial");
  if (b == 0) {
    for (auto& r : rows_) r.div_binomial(c, a);
    return;
  }
  for (int j = b; j <= order_v(); ++j)
    rows_[static_cast<std::size_t>(j)] -= c * shifted(rows_[static_cast<std::size_t>(j - b)], a);
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
  if (o.order_u() != order_u_ || o.order_v() != order_v())
    throw std::invalid_argument("bivariate orders differ");
  for (std::size_t j = 0; j < rows_.size(); ++j) rows_[j] += o.rows_[j];
  return *this;
}

BivariateSeries& BivariateSeries::operator*=(const Rational& s) {
  for (auto& r : rows_) r *= s;
  return *this;
}

}  // namespace sheaf
