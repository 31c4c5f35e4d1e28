#include "sheaf/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sheaf {

namespace {

struct Ctx {
  int order;
  std::optional<int> sweep;
  int census_max(int fallback = kDefaultSweep) const { return sweep.value_or(fallback); }
};

class Probe {
 public:
  explicit Probe(IdentityCheck& c) : c_(c) {}

  void equal(const Rational& lhs, const Rational& rhs, const std::string& where) {
    ++c_.cells;
    if (lhs == rhs) return;
    fail(where + ": " + to_string(lhs) + " != " + to_string(rhs));
  }

  void series(const FormalSeries& lhs, const FormalSeries& rhs, int order, const std::string& what) {
    const auto v = check_identity(lhs, rhs, order);
    c_.cells += order + 1;
    if (!v.pass) fail(what + ": " + v.to_string());
  }

  void fail(const std::string& witness) {
    if (c_.status == CheckStatus::fail) return;
    c_.status = CheckStatus::fail;
    c_.witness = witness;
  }

 private:
  IdentityCheck& c_;
};

std::string at(int p, int q) { return "(p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
std::string at(const char* name, int v) { return std::string(name) + "=" + std::to_string(v); }

FormalSeries prod(std::vector<EtaFactor> f, int o, Rational scalar = 1, int shift = 0) {
  return eval_product(std::move(f), o, std::move(scalar), shift);
}

FormalSeries x_pow(int e, int o) { return FormalSeries::monomial(e, 1, o); }

// (1+x^t)/(1+x^{2t}); 1 at t = 0
FormalSeries balanced_ratio(int t, int o) {
  FormalSeries s = FormalSeries::constant(1, o);
  if (t == 0) return s;
  s.mul_binomial(1, t);
  s.div_binomial(1, 2 * t);
  return s;
}

// 1/(1+x^t) with the t = 0 value 1/2
FormalSeries recip_one_plus(int t, int o) {
  if (t == 0) return FormalSeries::constant(Rational(1, 2), o);
  FormalSeries s = FormalSeries::constant(1, o);
  s.div_binomial(1, t);
  return s;
}

template <class F>
FormalSeries tabulate(int o, F f) {
  FormalSeries s(o);
  for (int n = 0; n <= o; ++n) s.set_coeff(n, f(n));
  return s;
}

Count sigma23_weight(int p, int q) {
  Count s = 0;
  for (const auto& d : enum_sigma(p, q)) {
    const auto c = classify(d);
    if (c.cls != SigmaClass::sigma1) s += Count{1} << c.r;
  }
  return s;
}

Count total_of(const CensusReport& r, Subset s) { return restrict_to(r, s).total; }

// ---------------------------------------------------------------- census sweeps

std::string number1_k0(const Ctx& c, Probe& pr) {
  const int S = c.census_max();
  for (int N = 0; N <= S; ++N)
    for (int p = 0; p <= N; ++p)
      pr.equal(census_bdi_k0(p, N - p).total, count_formula_k0_exact(p, N - p), at(p, N - p));
  return "p+q <= " + std::to_string(S);
}

std::string number1_k1(const Ctx& c, Probe& pr) {
  const int S = c.census_max();
  for (int N = 0; N <= S; ++N)
    for (int p = 0; p <= N; ++p)
      pr.equal(census_bdi_k1(p, N - p).total, count_formula_k1(p, N - p), at(p, N - p));
  return "p+q <= " + std::to_string(S);
}

std::string kappa0_orbit_sum(const Ctx& c, Probe& pr) {
  const int S = c.census_max(kDefaultOrbitSweep);
  for (int N = 0; N <= S; ++N)
    for (int p = 0; p <= N; ++p) {
      Count s = 0;
      for (const auto& d : enum_sigma(p, N - p)) s += orbit_multiplicity(d) * (Count{1} << classify(d).r);
      pr.equal(s, count_formula_k0_exact(p, N - p), at(p, N - p));
    }
  return "p+q <= " + std::to_string(S);
}

std::string kappa1_orbit_sum(const Ctx& c, Probe& pr) {
  const int S = c.census_max(kDefaultOrbitSweep);
  for (int N = 0; N <= S; ++N)
    for (int p = 0; p <= N; ++p) {
      Count s = 0;
      for (const auto& d : enum_sigma(p, N - p)) s += orbit_multiplicity(d) * kappa1_data_bdi(d).count;
      pr.equal(s, count_formula_k1(p, N - p), at(p, N - p));
    }
  return "p+q <= " + std::to_string(S);
}

std::string lemma_n1(const Ctx& c, Probe& pr) {
  const int S = c.census_max();
  for (int t = 0; t <= 5; ++t) {
    const int o = std::max(0, (S - t) / 2);
    const auto rhs = balanced_ratio(t, o) * prod({{1, 2, 0, 2}, {-1, 2, 0, -3}}, o);
    for (int q = 0; 2 * q + t <= S; ++q) {
      pr.equal(sigma23_weight(q + t, q), rhs.coeff(q), at(q + t, q));
      pr.equal(sigma23_weight(q, q + t), rhs.coeff(q), at(q, q + t));
    }
  }
  return "|t| <= 5, p+q <= " + std::to_string(S);
}

std::string lemma_n1_2var(const Ctx& c, Probe& pr) {
  const int S = std::min(c.census_max(), c.order);
  auto half = [S](bool first) {
    auto b = BivariateSeries::one(S, S);
    auto ratio = [&](int a, int e) {
      if (a > S || e > S) return;
      b.mul_binomial(1, a, e);
      b.div_binomial(-1, a, e);
    };
    for (int m = 0; 2 * m <= S; ++m) {
      if (first) {
        ratio(2 * m + 2, 2 * m + 1);
        ratio(2 * m, 2 * m + 1);
      } else {
        ratio(2 * m + 1, 2 * m + 2);
        ratio(2 * m + 1, 2 * m);
      }
      if (m >= 1) b.div_binomial(-1, 2 * m, 2 * m);
    }
    return b;
  };
  auto gen = half(true);
  gen += half(false);
  for (int N = 0; N <= S; ++N)
    for (int p = 0; p <= N; ++p) pr.equal(gen.coeff(p, N - p), 2 * sigma23_weight(p, N - p), at(p, N - p));
  // diagonal u = v = x restricted to u^{q+t} v^q
  const auto tail = prod({{1, 4, 0, 2}, {-1, 4, 0, -3}}, S);
  for (int t = 0; t <= 5 && t <= S; ++t) {
    FormalSeries diag(S);
    for (int q = 0; 2 * q + t <= S; ++q) diag.set_coeff(2 * q + t, gen.coeff(q + t, q));
    auto den = FormalSeries::constant(1, S) + x_pow(4 * t, S);
    auto rhs = Rational(2) * ((x_pow(3 * t, S) + x_pow(t, S)) * inverse(den) * tail);
    pr.series(diag, rhs, S, at("t", t));
    const auto one_var = balanced_ratio(t, S) * prod({{1, 2, 0, 2}, {-1, 2, 0, -3}}, S);
    FormalSeries lifted(S);
    for (int q = 0; 2 * q + t <= S; ++q) lifted.set_coeff(2 * q + t, 2 * one_var.coeff(q));
    pr.series(diag, lifted, S, at("t", t) + " against the one-variable form");
  }
  return "u,v orders " + std::to_string(S);
}

std::string numbert_closure(const Ctx& c, Probe& pr) {
  const int S = c.census_max();
  for (int N = 0; N <= S; ++N) {
    const auto a = aggregate_T(N);
    pr.equal(a.census, a.formula, at("N", N) + " census vs formula");
    pr.equal(a.formula, a.closed_form, at("N", N) + " formula vs closed form");
  }
  const int h = c.order / 2;
  const auto agg = aggregate_T_series(2 * h + 1);
  auto odd = prod({{1, 2, 0, 4}, {1, 1, 0, 3}, {-1, 1, 0, -1}}, h) +
             prod({{1, 4, 0, 2}, {1, 2, 0, 1}, {1, 1, 0, 1}, {-1, 1, 0, -1}}, h, 3);
  auto even = prod({{1, 2, -1, 4}, {1, 1, 0, 3}, {-1, 1, 0, -1}}, h, Rational(1, 4)) +
              prod({{1, 4, -2, 2}, {1, 2, 0, 1}, {1, 1, 0, 1}, {-1, 1, 0, -1}}, h, Rational(3, 2)) +
              prod({{-1, 2, 0, -1}}, h, Rational(9, 4));
  pr.series(odd, tabulate(h, [&](int n) { return agg.coeff(2 * n + 1); }), h, "odd N");
  pr.series(even, tabulate(h, [&](int n) { return agg.coeff(2 * n); }), h, "even N");
  return "N <= " + std::to_string(S) + ", order " + std::to_string(c.order);
}

// ---------------------------------------------------------------- bilateral sums

BilateralFamily family(std::vector<Rational> num, std::vector<Rational> den, BilateralFamily::Parity par) {
  BilateralFamily f;
  f.shift = 1;
  f.numerator = std::move(num);
  f.denominator = std::move(den);
  f.parity = par;
  return f;
}

std::string psi1_a(const Ctx& c, Probe& pr) {
  const int o = c.order;
  const auto lhs = bilateral_sum(family({1}, {1, 0, 1}, BilateralFamily::Parity::all), o);
  const auto rhs = prod({{1, 2, -1, 2}, {-1, 2, 0, 2}, {-1, 2, -1, -2}, {1, 2, 0, -2}}, o, Rational(1, 2));
  pr.series(lhs, rhs, o, "series");
  return "order " + std::to_string(o);
}

std::string psi1_b(const Ctx& c, Probe& pr) {
  const int o = c.order;
  const auto lhs = bilateral_sum(family({1, 0, 1}, {1, 0, 0, 0, 1}, BilateralFamily::Parity::all), o);
  const auto rhs = prod({{1, 2, -1, 1}, {-1, 4, 0, 2}, {-1, 2, -1, -1}, {1, 4, 0, -2}}, o);
  pr.series(lhs, rhs, o, "series");
  return "order " + std::to_string(o);
}

std::string psi1_c(const Ctx& c, Probe& pr) {
  const int o = c.order;
  const auto odd = bilateral_sum(family({1, 0, 1}, {1, 0, 0, 0, 1}, BilateralFamily::Parity::odd), o);
  const auto even = bilateral_sum(family({1, 0, 1}, {1, 0, 0, 0, 1}, BilateralFamily::Parity::even), o);
  pr.series(odd, prod({{1, 4, -2, 1}, {-1, 8, 0, 2}, {-1, 4, -2, -1}, {1, 8, -4, -2}}, o, 2, 1), o, "odd k");
  pr.series(even, prod({{1, 4, -2, 1}, {-1, 8, 0, 2}, {-1, 4, -2, -1}, {1, 8, 0, -2}}, o), o, "even k");
  pr.series(odd + even, bilateral_sum(family({1, 0, 1}, {1, 0, 0, 0, 1}, BilateralFamily::Parity::all), o), o,
            "halves recombine");
  return "order " + std::to_string(o);
}

std::string oe_split(const Ctx& c, Probe& pr) {
  const int o = c.order;
  const auto lhs = prod({{1, 2, -1, 1}, {-1, 2, -1, -1}}, o);
  const auto rhs = prod({{1, 8, 0, 2}, {1, 4, 0, 1}, {1, 2, 0, 2}}, o, 2, 1) +
                   prod({{1, 8, -4, 2}, {1, 4, 0, 1}, {1, 2, 0, 2}}, o);
  pr.series(lhs, rhs, o, "series");
  return "order " + std::to_string(o);
}

std::string eqn_oeterms(const Ctx& c, Probe& pr) {
  const int o = c.order;
  const auto lhs = prod({{1, 2, -1, 2}, {-1, 2, -1, -2}}, o);
  const auto rhs = prod({{1, 4, 0, 4}, {1, 2, 0, 4}}, o, 4, 1) + prod({{1, 4, -2, 4}, {1, 2, 0, 4}}, o);
  pr.series(lhs, rhs, o, "series");
  return "order " + std::to_string(o);
}

// ---------------------------------------------------------------- Sigma_b sums

std::string bb_odd(const Ctx& c, Probe& pr) {
  const int S = c.census_max();
  const int h = (S - 1) / 2;
  const auto rhs = prod({{1, 1, 0, 2}, {1, 2, 0, 2}}, std::max(h, 0), 2);
  for (int n = 0; 2 * n + 1 <= S; ++n) pr.equal(btilde_total(2 * n + 1), rhs.coeff(n), at("N", 2 * n + 1));
  pr.equal(btilde_total(3), 4, "anchor N=3");
  pr.equal(btilde_total(5), 10, "anchor N=5");
  return "odd N <= " + std::to_string(S);
}

std::string bb_even(const Ctx& c, Probe& pr) {
  const int S = c.census_max();
  const int h = S / 2;
  const auto rhs = prod({{1, 1, 0, 2}, {1, 2, -1, 2}}, h, Rational(1, 2));
  for (int n = 1; 2 * n <= S; ++n) pr.equal(btilde_total(2 * n), rhs.coeff(n), at("N", 2 * n));
  return "even 2 <= N <= " + std::to_string(S);
}

std::string tbpq(const Ctx& c, Probe& pr) {
  const int S = c.census_max();
  for (int N = 1; N <= S; ++N)
    for (int p = 0; p <= N; ++p)
      pr.equal(btilde(p, N - p), Rational(2 * b1_count(p, N - p) + b2_count(p, N - p)), at(p, N - p));
  return "1 <= p+q <= " + std::to_string(S);
}

std::string tb1(const Ctx& c, Probe& pr) {
  const int S = std::min(c.census_max(), c.order);
  for (int t = 0; t <= 5; ++t) {
    const int o = std::max(0, (S - t) / 2);
    const auto base = t % 2 ? prod({{1, 2, -1, 2}, {-1, 2, 0, -2}}, o) : prod({{1, 2, 0, 2}, {-1, 2, 0, -2}}, o);
    const auto rhs = recip_one_plus(t, o) * base;
    for (int q = t == 0 ? 1 : 0; 2 * q + t <= S; ++q) {
      pr.equal(btilde(q + t, q), rhs.coeff(q), at(q + t, q));
      pr.equal(btilde(q, q + t), rhs.coeff(q), at(q, q + t));
    }
  }
  pr.equal(btilde(3, 2), 2, "anchor (3,2)");
  return "|t| <= 5, p+q <= " + std::to_string(S);
}

std::string b2_odd(const Ctx& c, Probe& pr) {
  const int S = c.census_max();
  const auto rhs = prod({{1, 1, 0, 2}, {1, 4, 0, 1}}, std::max(0, (S - 1) / 2), 2);
  for (int n = 0; 2 * n + 1 <= S; ++n) pr.equal(b2_total(2 * n + 1), rhs.coeff(n), at("N", 2 * n + 1));
  pr.equal(b2_total(1), 2, "anchor N=1");
  return "odd N <= " + std::to_string(S);
}

std::string b2_even(const Ctx& c, Probe& pr) {
  const int S = c.census_max();
  const auto rhs = prod({{1, 1, 0, 2}, {1, 4, -2, 1}}, S / 2);
  for (int n = 1; 2 * n <= S; ++n) pr.equal(b2_total(2 * n), rhs.coeff(n), at("N", 2 * n));
  pr.equal(b2_total(2), 2, "anchor N=2");
  return "even 2 <= N <= " + std::to_string(S);
}

std::string b2_weighted_oracle(const Ctx& c, Probe& pr) {
  const int S = c.census_max();
  for (int N = 1; N <= S; ++N) pr.equal(2 * weighted_odd_partition_sum(N), b2_total(N), at("N", N));
  return "1 <= N <= " + std::to_string(S);
}

// ---------------------------------------------------------------- Hecke and theta counts

std::string hecke_series(const Ctx& c, Probe& pr) {
  const int o = std::min(c.order, 120);
  auto table = [o](HeckeFamily f) { return tabulate(o, [f](int n) { return Rational(hecke_count(f, n)); }); };
  pr.series(table(HeckeFamily::A), prod({{1, 1, 0, 1}}, o), o, "A");
  pr.series(table(HeckeFamily::B), prod({{1, 1, 0, 1}, {1, 2, 0, 1}}, o), o, "B");
  pr.series(table(HeckeFamily::Bm11), prod({{1, 2, -1, 1}, {1, 1, 0, 1}}, o), o, "Bm11");
  pr.series(table(HeckeFamily::B11), prod({{-1, 1, 0, -1}}, o), o, "B11");
  auto d = prod({{1, 2, -1, 1}, {1, 1, 0, 1}}, o, Rational(1, 2));
  d.set_coeff(0, 1);
  pr.series(table(HeckeFamily::D), d, o, "D");
  return "order " + std::to_string(o);
}

std::string theta_against(const Ctx& c, Probe& pr, ThetaVariant v, const FormalSeries& rhs, int from) {
  const int o = rhs.order();
  for (int m = from; m <= o; ++m) pr.equal(theta_k0_count(v, m), rhs.coeff(m), at("m", m));
  (void)c;
  return std::to_string(from) + " <= m <= " + std::to_string(o);
}

std::string fn1B(const Ctx& c, Probe& pr) {
  pr.equal(theta_k0_count(ThetaVariant::ind1_B, 2), 5, "anchor m=2");
  return theta_against(c, pr, ThetaVariant::ind1_B, prod({{1, 2, 0, 2}, {1, 1, 0, 2}}, c.order), 0);
}

std::string fn1D(const Ctx& c, Probe& pr) {
  return theta_against(c, pr, ThetaVariant::ind1_D, prod({{1, 2, -1, 2}, {1, 1, 0, 2}}, c.order), 0);
}

std::string fn2B(const Ctx& c, Probe& pr) {
  const int o = c.order;
  for (int m = 0; m <= o; ++m)
    pr.equal(theta_k0_count(ThetaVariant::split_B, m), theta_k0_count(ThetaVariant::ind2_B, m), at("m", m));
  return theta_against(c, pr, ThetaVariant::ind2_B,
                       prod({{1, 2, 0, 2}, {1, 1, 0, 2}}, o, Rational(1, 2)) +
                           prod({{1, 4, 0, 1}, {1, 2, 0, 1}}, o, Rational(3, 2)),
                       0);
}

std::string fn_split_D(const Ctx& c, Probe& pr) {
  const int o = c.order;
  return theta_against(c, pr, ThetaVariant::split_D,
                       prod({{1, 2, -1, 2}, {1, 1, 0, 2}}, o, Rational(1, 4)) +
                           prod({{1, 4, -2, 1}, {1, 2, 0, 1}}, o, Rational(3, 2)),
                       1);
}

std::string fn_ind2_D(const Ctx& c, Probe& pr) {
  const int o = c.order;
  return theta_against(c, pr, ThetaVariant::ind2_D,
                       prod({{1, 2, -1, 2}, {1, 1, 0, 2}}, o, Rational(1, 2)) +
                           prod({{1, 4, -2, 1}, {1, 2, 0, 1}}, o, Rational(3, 2)),
                       0);
}

// ---------------------------------------------------------------- subsets

std::string coro_cuspidal_k0(const Ctx& c, Probe& pr) {
  const int S = c.census_max();
  for (int N = 1; N <= S; ++N)
    for (int p = 0; p <= N; ++p) {
      const int q = N - p;
      const Count direct = cuspidal_counts(p, q).k0;
      pr.equal(direct, cuspidal_series_k0(p, q), at(p, q) + " theta vs series");
      pr.equal(direct, total_of(census_bdi_k0(p, q), Subset::cuspidal), at(p, q) + " theta vs census");
    }
  return "1 <= p+q <= " + std::to_string(S);
}

std::string coro_cuspidal_k1(const Ctx& c, Probe& pr) {
  const int S = c.census_max();
  for (int N = 0; N <= S; ++N)
    for (int p = 0; p <= N; ++p) {
      const int q = N - p;
      const Count direct = cuspidal_counts(p, q).k1;
      pr.equal(direct, cuspidal_series_k1(p, q), at(p, q) + " theta vs series");
      pr.equal(direct, total_of(census_bdi_k1(p, q), Subset::cuspidal), at(p, q) + " theta vs census");
    }
  pr.equal(cuspidal_counts(4, 2).k1, 4, "anchor (4,2)");
  return "p+q <= " + std::to_string(S);
}

void nil_k0_cell(Probe& pr, int p, int q) {
  const Count direct = nilpotent_support_counts(p, q).k0;
  pr.equal(direct, nilpotent_series_k0(p, q), at(p, q) + " Sigma_b vs series");
  pr.equal(direct, total_of(census_bdi_k0(p, q), Subset::nilpotent), at(p, q) + " Sigma_b vs census");
}

std::string nilcoro_k0_odd(const Ctx& c, Probe& pr) {
  const int S = c.census_max();
  for (int N = 1; N <= S; N += 2)
    for (int p = 0; p <= N; ++p) nil_k0_cell(pr, p, N - p);
  pr.equal(nilpotent_support_counts(3, 2).k0, 4, "anchor (3,2)");
  return "odd p+q <= " + std::to_string(S);
}

std::string nilcoro_k0_even(const Ctx& c, Probe& pr) {
  const int S = c.census_max();
  for (int N = 2; N <= S; N += 2)
    for (int p = 0; p <= N; p += 2) nil_k0_cell(pr, p, N - p);
  return "p, q even, 2 <= p+q <= " + std::to_string(S);
}

std::string nilcoro_k1(const Ctx& c, Probe& pr) {
  const int S = c.census_max();
  for (int N = 1; N <= S; ++N)
    for (int p = 0; p <= N; ++p) {
      const int q = N - p, t = p - q;
      const Rational expect = N == t * t ? eta(0, t) : 0;
      pr.equal(nilpotent_support_counts(p, q).k1, expect, at(p, q) + " counts vs eta");
      pr.equal(total_of(census_bdi_k1(p, q), Subset::nilpotent), expect, at(p, q) + " census vs eta");
    }
  return "1 <= p+q <= " + std::to_string(S);
}

// ---------------------------------------------------------------- DIII

std::string diii_k0_closure(const Ctx& c, Probe& pr) {
  const int S = c.census_max(kDefaultOrbitSweep);
  for (int n = 0; n <= S; ++n)
    pr.equal(census_diii(n).first.total, static_cast<long long>(enum_lambda(n).size()), at("n", n));
  pr.equal(census_diii(3).first.total, 4, "anchor n=3");
  return "n <= " + std::to_string(S);
}

std::string diii_k1_bijection(const Ctx& c, Probe& pr) {
  const int S = c.census_max(kDefaultOrbitSweep);
  for (int n = 0; n <= S; ++n) {
    std::set<BiPartition> image;
    long even_orbits = 0;
    for (const auto& d : enum_lambda(n)) {
      if (kappa1_data_diii(d).count == 0) continue;
      ++even_orbits;
      const auto bp = diii_kappa1_bijection(d);
      if (bp.weight() * 2 != n) pr.fail(at("n", n) + ": " + d.to_string() + " maps off P2(n/2)");
      if (!(diii_kappa1_inverse(bp) == d)) pr.fail(at("n", n) + ": inverse fails on " + d.to_string());
      if (!image.insert(bp).second) pr.fail(at("n", n) + ": collision at " + d.to_string());
    }
    const Count expect = n % 2 ? 0 : count_bipartitions(n / 2);
    pr.equal(static_cast<long long>(image.size()), expect, at("n", n) + " image size");
    pr.equal(even_orbits, expect, at("n", n) + " orbit count");
    pr.equal(census_diii(n).second.total, expect, at("n", n) + " census");
    if (n % 2 == 0)
      for (const auto& bp : enum_bipartitions(n / 2))
        if (!image.count(bp)) pr.fail(at("n", n) + ": bipartition not hit");
  }
  pr.equal(census_diii(4).second.total, 5, "anchor n=4");
  return "n <= " + std::to_string(S);
}

// ---------------------------------------------------------------- partitions and products

std::string pnt_formula(const Ctx&, Probe& pr) {
  for (int N = 0; N <= 60; ++N)
    for (int t = -5; t <= 5; ++t) {
      const int num = N - (2 * t * t - t);
      const Count expect = num >= 0 && num % 4 == 0 ? count_partitions(num / 4) : 0;
      pr.equal(static_cast<long long>(enum_distinct_odd_balanced(N, t).size()), expect,
               "N=" + std::to_string(N) + " t=" + std::to_string(t));
    }
  return "N <= 60, |t| <= 5";
}

std::string jacobi_t(const Ctx& c, Probe& pr) {
  const int o = c.order;
  for (int t = -3; t <= 3; ++t) {
    FormalSeries a(o), b(o);
    for (int t2 = -o; t2 <= o; ++t2) {
      const int t1 = t + t2;
      const long e1 = 2L * t1 * t1 - t1 + 2L * t2 * t2 - t2;
      if (e1 <= o) a.set_coeff(static_cast<int>(e1), a.coeff(static_cast<int>(e1)) + 1);
      const long u = 2L * t2 + t;
      const long e2 = u * u - u + 1L * t * t;
      if (e2 <= o) b.set_coeff(static_cast<int>(e2), b.coeff(static_cast<int>(e2)) + 1);
    }
    const auto rhs = prod({{-1, 4, 0, 1}, {1, 2, 0, 1}}, o, 1, t * t);
    pr.series(a, b, o, at("t", t) + " reindexing");
    pr.series(b, rhs, o, at("t", t));
  }
  return "|t| <= 3, order " + std::to_string(o);
}

std::string k1_series_rewrite(const Ctx& c, Probe& pr) {
  const int o = c.order;
  pr.series(prod({{-1, 4, 0, -2}, {1, 2, 0, 1}}, o), prod({{-1, 4, 0, -1}, {-1, 2, 0, -1}}, o), o, "products");
  for (int t = -6; t <= 6; ++t)
    for (int m = 0; m <= o; ++m)
      for (int k = 0; 2 * k <= m; ++k)
        pr.equal(eta(m, t), eta(m - 2 * k, t), "eta periodicity m=" + std::to_string(m) + " t=" + std::to_string(t));
  return "order " + std::to_string(o);
}

std::string euler_smoke(const Ctx& c, Probe& pr) {
  const int o = c.order;
  FormalSeries pent(o);
  for (int k = -o; k <= o; ++k) {
    const long e = 1L * k * (3 * k - 1) / 2;
    if (e <= o) pent.set_coeff(static_cast<int>(e), k % 2 ? -1 : 1);
  }
  pr.series(prod({{-1, 1, 0, 1}}, o), pent, o, "pentagonal");
  pr.series(prod({{-1, 1, 0, -1}}, o), tabulate(o, [](int n) { return Rational(count_partitions(n)); }), o,
            "partition numbers");
  return "order " + std::to_string(o);
}

struct CheckDef {
  const char* id;
  const char* description;
  const char* anchor;
  std::function<std::string(const Ctx&, Probe&)> run;
};

const std::vector<CheckDef>& catalogue() {
  static const std::vector<CheckDef> defs = {
      {"number1-k0", "kappa0 census total equals the closed-form coefficient",
       "T0(p,q) = [x^q] 1/(2(1+x^t)) prod (1+x^s)/(1-x^s)^3 + 3(1+x^t)/(2(1+x^{2t})) prod (1+x^{2s})^2/(1-x^{2s})^3 "
       "+ 9/4 delta_{t,0} prod 1/(1-x^{2s})",
       number1_k0},
      {"number1-k1", "kappa1 census total equals the closed-form coefficient",
       "T1(p,q) = eta((N-t^2)/2, t) [x^{N-t^2}] prod 1/((1-x^{4s})(1-x^{2s}))", number1_k1},
      {"kappa0-orbit-sum", "orbit multiplicity times 2^r summed over Sigma equals the kappa0 formula",
       "sum_Sigma1 2^r + 2 sum_Sigma2 2^r + 4 sum_Sigma3 2^r = T0(p,q)", kappa0_orbit_sum},
      {"kappa1-orbit-sum", "orbit multiplicity times kappa1 irreducible count summed over Sigma equals the kappa1 formula",
       "sum_lambda mult(lambda) |Irr A_K(x_lambda)_kappa1| = T1(p,q)", kappa1_orbit_sum},
      {"lemma-n1", "2^r summed over Sigma2 and Sigma3", "[x^q] (1+x^t)/(1+x^{2t}) prod (1+x^{2s})^2/(1-x^{2s})^3",
       lemma_n1},
      {"lemma-n1-2var", "two-variable product against direct sums and its diagonal",
       "prod_{m>=0} (1+u^{2m+2}v^{2m+1})/(1-u^{2m+2}v^{2m+1}) (1+u^{2m}v^{2m+1})/(1-u^{2m}v^{2m+1}) prod_{m>=1} "
       "1/(1-u^{2m}v^{2m}) + (u <-> v)",
       lemma_n1_2var},
      {"numbert-closure", "aggregate kappa0 totals: census, coefficient formula and product form",
       "sum_N T0_N x^N = 1/4 prod (1+x^{2s-1})^2/((1-x^{4s})(1-x^{2s-1})^2) + 3/2 prod "
       "(1+x^{2s-1})/((1-x^{4s})(1-x^{2s-1})) + 9/4 prod 1/(1-x^{4s})",
       numbert_closure},
      {"psi1-a", "bilateral sum of x^k/(1+x^{2k})",
       "sum_k x^k/(1+x^{2k}) = 1/2 prod (1+x^{2s-1})^2(1-x^{2s})^2/((1-x^{2s-1})^2(1+x^{2s})^2)", psi1_a},
      {"psi1-b", "bilateral sum of x^k(1+x^{2k})/(1+x^{4k})",
       "sum_k x^k(1+x^{2k})/(1+x^{4k}) = prod (1+x^{2s-1})(1-x^{4s})^2/((1-x^{2s-1})(1+x^{4s})^2)", psi1_b},
      {"psi1-c", "odd and even halves of the second bilateral sum",
       "odd k: 2x prod (1+x^{4s-2})(1-x^{8s})^2/((1-x^{4s-2})(1+x^{8s-4})^2); even k: prod "
       "(1+x^{4s-2})(1-x^{8s})^2/((1-x^{4s-2})(1+x^{8s})^2)",
       psi1_c},
      {"oe-split", "odd/even split of prod (1+x^{2s-1})/(1-x^{2s-1})",
       "prod (1+x^{2s-1})/(1-x^{2s-1}) = 2x prod (1+x^{8s})^2(1+x^{4s})(1+x^{2s})^2 + prod "
       "(1+x^{8s-4})^2(1+x^{4s})(1+x^{2s})^2",
       oe_split},
      {"eqn-oeterms", "odd/even split of the squared product",
       "prod (1+x^{2s-1})^2/(1-x^{2s-1})^2 = 4x prod (1+x^{4s})^4(1+x^{2s})^4 + prod (1+x^{4s-2})^4(1+x^{2s})^4",
       eqn_oeterms},
      {"bb-odd", "btilde summed over odd N", "sum_n btilde_{2n+1} x^n = 2 prod (1+x^s)^2(1+x^{2s})^2", bb_odd},
      {"bb-even", "btilde summed over even N", "sum_n btilde_{2n} x^n = 1/2 prod (1+x^s)^2(1+x^{2s-1})^2", bb_even},
      {"tbpq", "btilde against the per-class Pi sizes", "btilde_{p,q} = 2 b1_{p,q} + b2_{p,q}", tbpq},
      {"tb1", "btilde at fixed t",
       "btilde_{q+t,q} = [x^q] 1/(1+x^t) prod (1+x^{2s-1})^2/(1-x^{2s})^2 (t odd), with (1+x^{2s})^2 for t even",
       tb1},
      {"b2-odd", "b2 summed over odd N", "sum_n b2_{2n+1} x^n = 2 prod (1+x^s)^2(1+x^{4s})", b2_odd},
      {"b2-even", "b2 summed over even N", "sum_n b2_{2n} x^n = prod (1+x^s)^2(1+x^{4s-2})", b2_even},
      {"b2-weighted-oracle", "b2 against weighted partitions into odd parts",
       "b2_N = 2 sum_{lambda odd parts} 2^{#{paired mu gaps >= 2}}", b2_weighted_oracle},
      {"hecke-series", "Hecke irreducible counts against their products",
       "A: prod (1+x^s); B: prod (1+x^s)(1+x^{2s}); Bm11: prod (1+x^{2s-1})(1+x^s); D: half of Bm11; B11: p(n)",
       hecke_series},
      {"fn1B", "f1_{m,1} = |Theta ind1, N odd|", "sum_m f1_{m,1} x^m = prod (1+x^{2s})^2(1+x^s)^2", fn1B},
      {"fn1D", "f1_{m,0} = |Theta ind1, N even|", "sum_m f1_{m,0} x^m = prod (1+x^{2s-1})^2(1+x^s)^2", fn1D},
      {"fn2B", "f2_{m,1} = |Theta ind2, N odd|",
       "sum_m f2_{m,1} x^m = 1/2 prod (1+x^{2s})^2(1+x^s)^2 + 3/2 prod (1+x^{4s})(1+x^{2s})", fn2B},
      {"fn-split-D", "f_{m,0} = |Theta split, N even|, m >= 1",
       "sum_m f_{m,0} x^m = 1/4 prod (1+x^{2s-1})^2(1+x^s)^2 + 3/2 prod (1+x^{4s-2})(1+x^{2s})", fn_split_D},
      {"fn-ind2-D", "f2_{m,0} = |Theta ind2, N even|",
       "sum_m f2_{m,0} x^m = 1/2 prod (1+x^{2s-1})^2(1+x^s)^2 + 3/2 prod (1+x^{4s-2})(1+x^{2s})", fn_ind2_D},
      {"coro-cuspidal-k0", "cuspidal kappa0 counts: Theta sets, series and census",
       "|t|=1: 1/2 prod (1+x^{2s})^2(1+x^s)^2 + 3/2 prod (1+x^{4s})(1+x^{2s}); t=0, n odd: x prod "
       "(1+x^{4s})^4(1+x^{2s})^4; t=0, n even: 1/4 prod (1+x^{4s-2})^4(1+x^{2s})^4 + 3/2 prod (1+x^{4s-2})(1+x^{2s})",
       coro_cuspidal_k0},
      {"coro-cuspidal-k1", "cuspidal kappa1 counts: Theta sets, series and census",
       "eta(m,t) [x^m] prod (1+x^s), m = (N-t^2)/2", coro_cuspidal_k1},
      {"nilcoro-k0-odd", "nilpotent-support kappa0 counts, N odd",
       "[x^q] 1/(2(1+x^t)) prod (1+x^{2s-1})^2/(1-x^{2s})^2 + 3(1+x^t)/(2(1+x^{2t})) prod (1+x^{4s-2})/(1-x^{2s})^2",
       nilcoro_k0_odd},
      {"nilcoro-k0-even", "nilpotent-support kappa0 counts, p and q even",
       "[x^q] 1/(2(1+x^t)) prod (1+x^{2s})^2/(1-x^{2s})^2 + 3(1+x^t)/(2(1+x^{2t})) prod (1+x^{4s})/(1-x^{2s})^2",
       nilcoro_k0_even},
      {"nilcoro-k1", "nilpotent-support kappa1 counts", "eta(0,t) when N = t^2, else 0", nilcoro_k1},
      {"diii-k0-closure", "DIII kappa0 census total", "total = |Lambda^{n,n}|", diii_k0_closure},
      {"diii-k1-bijection", "DIII kappa1 census and the even-diagram bijection",
       "(2mu)_+^{2a} (2mu)_-^{2b} ... <-> bipartitions of n/2; total = |P2(n/2)|", diii_k1_bijection},
      {"PNt-formula", "distinct odd parts with balance t", "|P_{N,t}| = p((N-(2t^2-t))/4)", pnt_formula},
      {"jacobi-t", "triple product instance",
       "sum_{t1-t2=t} x^{2t1^2-t1+2t2^2-t2} = x^{t^2} prod (1-x^{4s})(1+x^{2s})", jacobi_t},
      {"k1-series-rewrite", "kappa1 product rewrite and eta periodicity",
       "prod (1+x^{2s})/(1-x^{4s})^2 = prod 1/((1-x^{4s})(1-x^{2s})); eta(m,t) = eta(m-2k,t)", k1_series_rewrite},
      {"euler-smoke", "Euler pentagonal theorem and partition numbers",
       "prod (1-x^s) = sum_k (-1)^k x^{k(3k-1)/2}", euler_smoke},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : catalogue()) v.emplace_back(d.id);
    return v;
  }();
  return ids;
}

std::vector<IdentityCheck> run_suite(const std::vector<std::string>& ids, int order, std::optional<int> sweep) {
  if (order < 10) throw std::invalid_argument("order must be at least 10");
  if (sweep && *sweep < 0) throw std::invalid_argument("sweep must be nonnegative");
  std::vector<const CheckDef*> selected;
  const bool everything = ids.empty() || (ids.size() == 1 && ids[0] == "all");
  for (const auto& d : catalogue())
    if (everything || std::find(ids.begin(), ids.end(), d.id) != ids.end()) selected.push_back(&d);
  if (!everything)
    for (const auto& id : ids)
      if (std::none_of(catalogue().begin(), catalogue().end(), [&](const CheckDef& d) { return id == d.id; }))
        throw std::invalid_argument("unknown check id '" + id + "'");

  const Ctx ctx{order, sweep};
  std::vector<std::future<IdentityCheck>> jobs;
  for (const auto* d : selected) {
    jobs.push_back(std::async(std::launch::async, [d, ctx] {
      IdentityCheck c;
      c.id = d->id;
      c.description = d->description;
      c.anchor = d->anchor;
      Probe pr(c);
      try {
        c.range = d->run(ctx, pr);
      } catch (const std::exception& e) {
        pr.fail(std::string("exception: ") + e.what());
      }
      return c;
    }));
  }
  std::vector<IdentityCheck> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

bool all_pass(const std::vector<IdentityCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.status == CheckStatus::pass; });
}

Json to_json(const IdentityCheck& c) {
  Json j;
  j["id"] = c.id;
  j["description"] = c.description;
  j["anchor"] = c.anchor;
  j["range"] = c.range;
  j["status"] = c.status == CheckStatus::pass ? "PASS" : "FAIL";
  j["witness"] = c.witness.empty() ? Json(nullptr) : Json(c.witness);
  j["cells"] = c.cells;
  return j;
}

Json verify_report_json(const std::vector<IdentityCheck>& checks, int order, std::optional<int> sweep) {
  Json j;
  j["order"] = order;
  j["sweep"] = sweep ? Json(*sweep) : Json(nullptr);
  j["verdict"] = all_pass(checks) ? "PASS" : "FAIL";
  j["checks"] = Json::array();
  for (const auto& c : checks) j["checks"].push_back(to_json(c));
  return j;
}

std::string render_table(const std::vector<IdentityCheck>& checks) {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.status == CheckStatus::pass ? "PASS  " : "FAIL  ") << std::left << std::setw(20) << c.id << " "
       << std::right << std::setw(7) << c.cells << "  " << c.range << "\n";
    if (!c.witness.empty()) os << "      " << c.witness << "\n";
  }
  const auto passed = std::count_if(checks.begin(), checks.end(),
                                    [](const IdentityCheck& c) { return c.status == CheckStatus::pass; });
  os << passed << "/" << checks.size() << " checks passed\n";
  return os.str();
}

std::string render_csv(const std::vector<IdentityCheck>& checks) {
  std::ostringstream os;
  os << "id,status,cells,range,witness\n";
  for (const auto& c : checks) {
    std::string w = c.witness;
    std::string quoted = "\"";
    for (char ch : w) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    quoted += "\"";
    os << c.id << "," << (c.status == CheckStatus::pass ? "PASS" : "FAIL") << "," << c.cells << ",\"" << c.range
       << "\"," << (w.empty() ? "" : quoted) << "\n";
  }
  return os.str();
}

}  // namespace sheaf
