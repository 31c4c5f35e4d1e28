#include "oracles.hpp"
#include "sheaf/census.hpp"

#include <doctest.h>

using namespace sheaf;

namespace {
SignedYoungDiagram D(const std::string& s) { return SignedYoungDiagram::parse(s); }

long distinct_count(int n) { return oracle::count_if_parts(n, oracle::distinct); }
long distinct_odd_count(int n) {
  return oracle::count_if_parts(n, [](const auto& p) { return oracle::distinct(p) && oracle::all_odd(p); });
}
}  // namespace

TEST_CASE("Hecke irreducible counts") {
  CHECK(hecke_count(HeckeFamily::B, 2) == 2);
  CHECK(hecke_count(HeckeFamily::A, 3) == 2);
  CHECK(hecke_count(HeckeFamily::D, 0) == 1);
  CHECK(hecke_count(HeckeFamily::B11, 5) == 7);
  for (int n = 0; n <= 16; ++n) {
    long b = 0, e = 0;
    for (int j = 0; 2 * j <= n; ++j) b += distinct_count(n - 2 * j) * distinct_count(j);
    for (int j = 0; j <= n; ++j) e += distinct_odd_count(n - j) * distinct_count(j);
    CHECK(hecke_count(HeckeFamily::B, n) == b);
    CHECK(hecke_count(HeckeFamily::Bm11, n) == e);
    if (n >= 1) CHECK(hecke_count(HeckeFamily::D, n) * 2 == e);
  }
  CHECK(hecke_count(HeckeFamily::A, -1) == 0);
}

TEST_CASE("Theta cardinalities") {
  CHECK(theta_k0_count(ThetaVariant::ind1_B, 2) == 5);
  // split pairs at n = 0: the empty pair carries its two decorations
  CHECK(theta_k0_count(ThetaVariant::split_B, 0) == 2);
  CHECK(theta_k0_count(ThetaVariant::split_B, 2) == 4);
  CHECK(theta_k0_count(ThetaVariant::split_D, 0) == 1);
  CHECK(theta_k1_count(3, 1) == 4);
  CHECK(theta_k1_count(2, 1) == 2);
  CHECK(theta_k1_count(0, 2) == 1);
  CHECK(theta_k1_count(1, 2) == 4);
  CHECK(theta_k1_count(0, 0) == 4);
  CHECK(theta_k1_count(1, 0) == 1);
  CHECK(theta_k1_count(-1, 3) == 0);
}

TEST_CASE("names round-trip") {
  for (Family f : {Family::sigma_b1, Family::sigma_b2, Family::empty_mu, Family::k1_staircase, Family::diii})
    CHECK(parse_family(to_string(f)) == f);
  for (Subset s : {Subset::all, Subset::cuspidal, Subset::nilpotent, Subset::full}) CHECK(parse_subset(to_string(s)) == s);
  CHECK(parse_central("k1") == Central::k1);
  CHECK(parse_pair_type("diii") == PairType::diii);
  CHECK_THROWS_AS(parse_subset("some"), std::invalid_argument);
  for (int d = 1; d <= 4; ++d) CHECK(parse_roman(roman(d)) == d);
  CHECK_THROWS_AS(parse_roman("V"), std::invalid_argument);
}

TEST_CASE("orbit labels validate decorations") {
  CHECK_NOTHROW(OrbitLabel::make(D("5+"), 2, PairType::bdi));
  CHECK_THROWS_AS(OrbitLabel::make(D("5+"), std::nullopt, PairType::bdi), std::invalid_argument);
  CHECK_THROWS_AS(OrbitLabel::make(D("5+"), 3, PairType::bdi), std::invalid_argument);
  CHECK_THROWS_AS(OrbitLabel::make(D("1+^3 1-^2"), 1, PairType::bdi), std::invalid_argument);
  CHECK_NOTHROW(OrbitLabel::make(D("2+ 2-"), 4, PairType::bdi));
  CHECK_NOTHROW(OrbitLabel::make(D("3+ 3-"), std::nullopt, PairType::diii));
  CHECK(OrbitLabel::make(D("5+"), 2, PairType::bdi).delta_name() == "II");
}

TEST_CASE("BDI kappa0 census") {
  const auto r = census_bdi_k0(3, 2);
  CHECK(r.total == 11);
  CHECK(census_bdi_k0(2, 3).total == 11);
  Count sum = 0;
  for (const auto& e : r.entries) {
    sum += e.count;
    CHECK(e.count > 0);
    CHECK(e.support.diagram.signature() == std::make_pair(3, 2));
  }
  CHECK(sum == r.total);
  CHECK(census_bdi_k0(5, 0).total == count_formula_k0(5, 0));
  CHECK(census_bdi_k0(2, 1).total == count_formula_k0(2, 1));
  CHECK(r.warnings.empty());
  CHECK_FALSE(census_bdi_k0(2, 1).warnings.empty());
  CHECK(census_bdi_k0(4, 3).warnings.empty());
  CHECK_THROWS_AS(census_bdi_k0(-1, 2), std::invalid_argument);
}

TEST_CASE("BDI kappa1 census") {
  const auto r = census_bdi_k1(3, 2);
  CHECK(r.total == 6);
  Count at20 = 0, at01 = 0;
  for (const auto& e : r.entries) {
    if (e.m == 2 && e.k == 0) at20 += e.count;
    if (e.m == 0 && e.k == 1) at01 += e.count;
  }
  CHECK(at20 == 2);
  CHECK(at01 == 4);
  CHECK(census_bdi_k1(4, 1).total == 0);
  CHECK(census_bdi_k1(6, 2).total == 0);
  CHECK(census_bdi_k1(2, 2).total == 12);
  CHECK(census_bdi(3, 2, Central::k1) == r);
}

TEST_CASE("DIII census") {
  auto [k0, k1] = census_diii(3);
  CHECK(k0.total == 4);
  CHECK(k1.total == 0);
  CHECK(census_diii(4).second.total == 5);
  CHECK(census_diii(5).second.total == 0);
  for (int n = 0; n <= 12; ++n) CHECK(census_diii(n).first.total == static_cast<Count>(enum_lambda(n).size()));
  CHECK_THROWS_AS(census_diii(-1), std::invalid_argument);
}

TEST_CASE("closed forms") {
  CHECK(count_formula_k0(3, 2) == 11);
  CHECK(count_formula_k0(2, 3) == 11);
  CHECK(count_formula_k0_exact(3, 2, 10) == 11);
  CHECK_THROWS_AS(count_formula_k0(3, 2, 1), std::out_of_range);
  CHECK(count_formula_k1(3, 2) == 6);
  CHECK(count_formula_k1(3, 1) == 1);  // eta(0,2) [x^0]
  CHECK(count_formula_k1(2, 2) == 12);
  CHECK(count_formula_k1(4, 1) == 0);
  for (int N = 0; N <= 14; ++N)
    for (int p = 0; p <= N; ++p) {
      CHECK(census_bdi_k0(p, N - p).total == count_formula_k0(p, N - p));
      CHECK(census_bdi_k1(p, N - p).total == count_formula_k1(p, N - p));
    }
}

TEST_CASE("cuspidal and nilpotent-support counts") {
  CHECK(cuspidal_counts(3, 2).k0 == 4);
  CHECK(cuspidal_counts(4, 2).k1 == 4);
  CHECK(cuspidal_counts(6, 1).k1 == 0);
  CHECK(cuspidal_series_k0(3, 2) == 4);
  CHECK(cuspidal_series_k1(4, 2) == 4);
  CHECK(nilpotent_support_counts(3, 2).k0 == 4);
  CHECK(nilpotent_series_k0(3, 2) == 4);
  // one diagram 1+, carrying two orbits with one sheaf each
  CHECK(nilpotent_support_counts(1, 0).k0 == 2);
  CHECK(nilpotent_series_k0(1, 0) == 2);
  CHECK(nilpotent_support_counts(3, 1).k1 == eta(0, 2));
  CHECK(nilpotent_support_counts(3, 1).k1 == 1);
  CHECK_THROWS_AS(nilpotent_series_k0(3, 1), std::invalid_argument);
}

TEST_CASE("subsets") {
  const auto r = census_bdi_k0(3, 2);
  const auto nil = restrict_to(r, Subset::nilpotent);
  CHECK(nil.total == 4);
  CHECK(nil.subset == Subset::nilpotent);
  for (const auto& e : nil.entries) {
    CHECK(e.m == 0);
    CHECK(e.k == 0);
  }
  CHECK(restrict_to(r, Subset::cuspidal).total == 4);
  CHECK(restrict_to(r, Subset::full).total == 4);
  CHECK(restrict_to(census_bdi_k0(5, 1), Subset::cuspidal).total == 0);
  CHECK(restrict_to(census_bdi_k1(4, 2), Subset::cuspidal).total == 4);
  CHECK(restrict_to(census_bdi_k1(3, 1), Subset::nilpotent).total == 1);
  CHECK(restrict_to(r, Subset::all) == r);
  CHECK_THROWS_AS(restrict_to(census_diii(4).first, Subset::cuspidal), std::invalid_argument);
}

TEST_CASE("reference totals") {
  for (int N = 1; N <= 10; ++N)
    for (int p = 0; p <= N; ++p)
      for (Central c : {Central::k0, Central::k1})
        for (Subset s : {Subset::all, Subset::cuspidal, Subset::nilpotent, Subset::full}) {
          const auto r = restrict_to(census_bdi(p, N - p, c), s);
          const auto ref = reference_total(r);
          if (ref) CHECK(*ref == Rational(r.total));
        }
  for (int n = 0; n <= 8; ++n) {
    auto [k0, k1] = census_diii(n);
    CHECK(*reference_total(k0) == Rational(k0.total));
    CHECK(*reference_total(k1) == Rational(k1.total));
  }
}

TEST_CASE("aggregate totals") {
  for (int N = 0; N <= 10; ++N) {
    const auto a = aggregate_T(N);
    CHECK(a.formula == Rational(a.census));
    CHECK(a.closed_form == a.formula);
  }
  CHECK(aggregate_T(5).census >= 22);
}

TEST_CASE("Sigma_b bookkeeping") {
  CHECK(btilde(3, 2) == 2);
  CHECK(btilde_total(3) == 4);
  CHECK(btilde_total(5) == 10);
  CHECK(b2_total(1) == 2);
  CHECK(b2_total(2) == 2);
  CHECK(sigma_b_data(3, 2).size() == 2);
  CHECK(&sigma_b_data(3, 2) == &sigma_b_data(3, 2));
}
