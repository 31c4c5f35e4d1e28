#pragma once

#include "sheaf/rational.hpp"

#include <string>
#include <vector>

namespace sheaf {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, all >= 1

  int weight() const;
  std::size_t length() const { return parts.size(); }
  std::string to_string() const;  // "3+1+1", "0" when empty
  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
};

struct BiPartition {
  Partition first;
  Partition second;

  int weight() const { return first.weight() + second.weight(); }
  bool operator==(const BiPartition&) const = default;
  auto operator<=>(const BiPartition&) const = default;
};

// Lexicographically decreasing: 3, 2+1, 1+1+1.
std::vector<Partition> enum_partitions(int n);
std::vector<BiPartition> enum_bipartitions(int n);
std::vector<Partition> enum_odd_partitions(int n);

// Zero for negative or non-integral arguments.
Count count_partitions(long n);
Count count_partitions(const Rational& n);
Count count_bipartitions(long n);
Count count_bipartitions(const Rational& n);
Count count_distinct_partitions(long n);
Count count_distinct_odd_partitions(long n);

// Distinct odd parts with #{parts = 1 mod 4} - #{parts = 3 mod 4} = t.
std::vector<Partition> enum_distinct_odd_balanced(int N, int t);

// Sum over odd-part partitions of N of the gap weight 2^{#gaps}, where parts
// 2*mu_i+1 are compared in consecutive pairs (1,2),(3,4),... for odd length and
// (2,3),(4,5),... for even length, and a pair counts when the mu-gap is >= 2.
Count weighted_odd_partition_sum(int N);

}  // namespace sheaf
