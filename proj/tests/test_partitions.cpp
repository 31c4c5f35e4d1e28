#include "oracles.hpp"
#include "sheaf/partitions.hpp"

#include <doctest.h>

using namespace sheaf;

TEST_CASE("enumeration matches the recursive oracle") {
  for (int n = 0; n <= 14; ++n) {
    const auto ours = enum_partitions(n);
    const auto ref = oracle::partitions(n);
    REQUIRE(ours.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(ours[i].parts == ref[i]);
  }
  CHECK(enum_partitions(0).size() == 1);
  CHECK(enum_partitions(0)[0].parts.empty());
  CHECK(enum_partitions(3).size() == 3);
  CHECK(enum_partitions(5).size() == 7);
  CHECK(enum_partitions(3)[1].to_string() == "2+1");
  CHECK(enum_partitions(0)[0].to_string() == "0");
}

TEST_CASE("bipartitions and odd partitions") {
  for (int n = 0; n <= 10; ++n) {
    long pairs = 0;
    for (int k = 0; k <= n; ++k) pairs += oracle::partitions(k).size() * oracle::partitions(n - k).size();
    CHECK(static_cast<long>(enum_bipartitions(n).size()) == pairs);
    CHECK(count_bipartitions(n) == pairs);
    CHECK(static_cast<long>(enum_odd_partitions(n).size()) == oracle::count_if_parts(n, oracle::all_odd));
    for (const auto& bp : enum_bipartitions(n)) CHECK(bp.weight() == n);
  }
  CHECK(count_bipartitions(2) == 5);
  CHECK(count_bipartitions(Rational(1, 2)) == 0);
}

TEST_CASE("counting functions") {
  for (int n = 0; n <= 25; ++n) {
    CHECK(count_partitions(n) == static_cast<Count>(oracle::partitions(n).size()));
    CHECK(count_distinct_partitions(n) == oracle::count_if_parts(n, oracle::distinct));
    CHECK(count_distinct_odd_partitions(n) ==
          oracle::count_if_parts(n, [](const auto& p) { return oracle::distinct(p) && oracle::all_odd(p); }));
  }
  CHECK(count_partitions(0) == 1);
  CHECK(count_partitions(10) == 42);
  CHECK(count_partitions(100) == 190569292);
  CHECK(count_partitions(Rational(3, 2)) == 0);
  CHECK(count_partitions(Rational(10)) == 42);
  CHECK(count_partitions(-1) == 0);
  CHECK(count_distinct_partitions(3) == 2);
  CHECK(count_distinct_partitions(6) == 4);
  CHECK_THROWS_AS(count_partitions(100000), std::out_of_range);
}

TEST_CASE("distinct odd partitions with a given balance") {
  CHECK(enum_distinct_odd_balanced(5, 1).size() == 1);
  CHECK(enum_distinct_odd_balanced(5, 1)[0].parts == std::vector<int>{5});
  CHECK(enum_distinct_odd_balanced(4, 0).size() == 1);
  CHECK(enum_distinct_odd_balanced(4, 0)[0].parts == std::vector<int>({3, 1}));
  CHECK(enum_distinct_odd_balanced(12, 2).empty());
  for (int N = 0; N <= 30; ++N) {
    long total = 0;
    for (int t = -N; t <= N; ++t) total += enum_distinct_odd_balanced(N, t).size();
    CHECK(total == count_distinct_odd_partitions(N));
  }
}

TEST_CASE("weighted odd partitions") {
  CHECK(weighted_odd_partition_sum(0) == 1);
  CHECK(weighted_odd_partition_sum(1) == 1);
  CHECK(weighted_odd_partition_sum(2) == 1);
  // 7: {7}, {5,1,1}: mu=(2,0,0) gap 2 -> 2, {3,3,1}: (1,1,0) -> 1, {3,1,1,1,1}: (1,0,0,0,0) -> 1,
  // {1^7} -> 1, and three-part parity j=1 only for s >= 3
  CHECK(weighted_odd_partition_sum(7) == 1 + 2 + 1 + 1 + 1);
}
