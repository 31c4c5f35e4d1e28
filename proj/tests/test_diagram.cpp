#include "oracles.hpp"
#include "sheaf/diagram.hpp"

#include <doctest.h>

using namespace sheaf;

namespace {
SignedYoungDiagram D(const std::string& s) { return SignedYoungDiagram::parse(s); }

// Sigma_b by the row-wise definition: all rows odd; one sign per length; the
// (eps+mu) parities agree inside each consecutive pair (rows 2,3 / 4,5 / ... for
// odd N and 1,2 / 3,4 / ... for even N).
bool sigma_b_oracle(const oracle::RowList& rows) {
  if (rows.empty()) return false;
  int N = 0;
  for (auto [len, sign] : rows) {
    if (len % 2 == 0) return false;
    N += len;
    if (oracle::count_rows(rows, len, 1) && oracle::count_rows(rows, len, -1)) return false;
  }
  auto par = [&](std::size_t i) { return ((rows[i].first - 1) / 2 + (rows[i].second < 0 ? 1 : 0)) % 2; };
  for (std::size_t i = N % 2 ? 1 : 0; i + 1 < rows.size(); i += 2)
    if (par(i) != par(i + 1)) return false;
  return true;
}
}  // namespace

TEST_CASE("parsing and printing") {
  CHECK(D("5+").signature() == std::make_pair(3, 2));
  CHECK(D("2+").signature() == std::make_pair(1, 1));
  CHECK(D("2-").signature() == std::make_pair(1, 1));
  CHECK(D("3- 1+ 1+").signature() == std::make_pair(3, 2));
  CHECK(D("3- 1+ 1+").to_string() == "3- 1+^2");
  CHECK(D("1+ 1+ 3-") == D("3- 1+^2"));
  CHECK(D("0").empty());
  CHECK(D("0").to_string() == "0");
  CHECK(D("2+^2 2-^2").size() == 8);
  CHECK_THROWS_AS(D("3*"), std::invalid_argument);
  CHECK_THROWS_AS(D("0+"), std::invalid_argument);
  CHECK_THROWS_AS(D("3+^x"), std::invalid_argument);
  CHECK_THROWS_AS(SignedYoungDiagram({Row{-1, 1, 0}}), std::invalid_argument);
}

TEST_CASE("classification") {
  auto c = classify(D("5+"));
  CHECK(c.a == 1);
  CHECK(c.b == 0);
  CHECK(c.cls == SigmaClass::sigma2);
  CHECK(c.r == 0);
  c = classify(D("1+^3 1-^2"));
  CHECK(c.a == 1);
  CHECK(c.b == 1);
  CHECK(c.cls == SigmaClass::sigma1);
  CHECK(c.r == 0);
  c = classify(D("0"));
  CHECK(c.cls == SigmaClass::sigma3);
  CHECK(c.r == 0);
  c = classify(D("3+ 1+ 1-"));
  CHECK(c.a == 1);
  CHECK(c.b == 2);
  CHECK(c.r == 1);
  CHECK(orbit_multiplicity(D("1+^3 1-^2")) == 1);
  CHECK(orbit_multiplicity(D("5+")) == 2);
  CHECK(orbit_multiplicity(D("2+ 2-")) == 4);
  CHECK_THROWS_AS(classify(D("2+")), std::invalid_argument);
}

TEST_CASE("Sigma enumeration against brute force") {
  for (int N = 0; N <= 12; ++N)
    for (int p = 0; p <= N; ++p) {
      const int q = N - p;
      std::set<oracle::RowList> ours, ref;
      for (const auto& d : enum_sigma(p, q)) {
        CHECK(d.signature() == std::make_pair(p, q));
        CHECK(in_sigma(d));
        CHECK(SignedYoungDiagram::parse(d.to_string()) == d);
        ours.insert(oracle::rows_of(d));
      }
      for (const auto& r : oracle::signed_diagrams(p, q))
        if (oracle::in_sigma(r)) ref.insert(r);
      CHECK(ours == ref);
    }
  CHECK(enum_sigma(3, 2).size() == 5);
  CHECK(enum_sigma(0, 0).size() == 1);
  CHECK(enum_sigma(2, 1).size() == 2);
}

TEST_CASE("Sigma_b against its row-wise definition") {
  for (int N = 0; N <= 13; ++N)
    for (int p = 0; p <= N; ++p) {
      const int q = N - p;
      std::set<oracle::RowList> ours, ref;
      for (const auto& d : enum_sigma_b(p, q)) {
        CHECK(in_sigma_b(d));
        ours.insert(oracle::rows_of(d));
      }
      for (const auto& r : oracle::signed_diagrams(p, q))
        if (sigma_b_oracle(r)) ref.insert(r);
      CHECK(ours == ref);
    }
  auto b32 = enum_sigma_b(3, 2);
  REQUIRE(b32.size() == 2);
  CHECK(std::count(b32.begin(), b32.end(), D("5+")) == 1);
  CHECK(std::count(b32.begin(), b32.end(), D("3- 1+^2")) == 1);
  CHECK(enum_sigma_b(2, 1) == std::vector<SignedYoungDiagram>{D("3+")});
  CHECK(enum_sigma_b(1, 1).empty());
  CHECK(enum_sigma_b(0, 0).empty());
}

TEST_CASE("sign swap is a bijection") {
  for (int N = 0; N <= 16; ++N)
    for (int p = 0; p <= N; ++p) {
      const int q = N - p;
      auto swapped = [](std::vector<SignedYoungDiagram> v) {
        for (auto& d : v) d = d.sign_swapped();
        std::sort(v.begin(), v.end());
        return v;
      };
      auto target = enum_sigma(q, p);
      std::sort(target.begin(), target.end());
      CHECK(swapped(enum_sigma(p, q)) == target);
      auto tb = enum_sigma_b(q, p);
      std::sort(tb.begin(), tb.end());
      CHECK(swapped(enum_sigma_b(p, q)) == tb);
      for (const auto& d : enum_sigma(p, q)) {
        const auto c = classify(d), s = classify(d.sign_swapped());
        CHECK(c.a == s.b);
        CHECK(c.b == s.a);
        CHECK(c.r == s.r);
        CHECK(c.cls == s.cls);
      }
    }
}

TEST_CASE("the literal top-row reading breaks sign symmetry") {
  bool asymmetric = false;
  for (int N = 1; N <= 9 && !asymmetric; N += 2)
    for (int p = 0; p <= N; ++p)
      if (enum_sigma_b(p, N - p, SigmaBReading::literal_min).size() !=
          enum_sigma_b(N - p, p, SigmaBReading::literal_min).size())
        asymmetric = true;
  CHECK(asymmetric);
}

TEST_CASE("Lambda sets") {
  auto l3 = enum_lambda(3);
  CHECK(l3.size() == 4);
  for (const char* s : {"3+ 3-", "2+^2 1+ 1-", "2-^2 1+ 1-", "1+^3 1-^3"})
    CHECK(std::count(l3.begin(), l3.end(), D(s)) == 1);
  auto lb3 = enum_lambda_b(3);
  CHECK(lb3.size() == 3);
  CHECK(std::count(lb3.begin(), lb3.end(), D("1+^3 1-^3")) == 0);
  CHECK(enum_lambda_b(0) == std::vector<SignedYoungDiagram>{SignedYoungDiagram()});
  for (int n = 0; n <= 10; ++n)
    for (const auto& d : enum_lambda(n)) {
      CHECK(d.signature() == std::make_pair(n, n));
      CHECK(in_lambda(d));
    }
}

TEST_CASE("building blocks") {
  CHECK(mu_t(2) == D("3+ 1+"));
  CHECK(mu_t(0).empty());
  CHECK(mu_t(-3) == D("5- 3- 1-"));
  CHECK(mu_t(-3).signature() == std::make_pair(3, 6));
  CHECK(join(D("1+ 1-"), mu_t(2)) == D("3+ 1+^2 1-"));
  CHECK(join(D("2+ 2-"), D("2+ 2-")) == D("2+^2 2-^2"));
  CHECK(staircase_base(2, 1) == D("2+ 2- 1+^2 1-^2"));
  CHECK(diii_kappa1_bijection(D("2+^2 2-^2")) == BiPartition{Partition{{1}}, Partition{{1}}});
  CHECK(diii_kappa1_bijection(D("4+^2")) == BiPartition{Partition{{2}}, Partition{}});
  CHECK(diii_kappa1_bijection(SignedYoungDiagram()) == BiPartition{});
  CHECK_THROWS_AS(diii_kappa1_bijection(D("3+ 3-")), std::invalid_argument);
  for (int n = 0; n <= 6; ++n)
    for (const auto& bp : enum_bipartitions(n)) CHECK(diii_kappa1_bijection(diii_kappa1_inverse(bp)) == bp);
}
