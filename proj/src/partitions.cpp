#include "sheaf/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace sheaf {

namespace {

// p(n) overflows int64 a little past n = 400.
constexpr int kTableSize = 400;

std::vector<Count> build_table(bool distinct, bool odd_only) {
  std::vector<Count> t(kTableSize + 1, 0);
  t[0] = 1;
  for (int part = 1; part <= kTableSize; ++part) {
    if (odd_only && part % 2 == 0) continue;
    if (distinct) {
      for (int n = kTableSize; n >= part; --n) t[n] += t[n - part];
    } else {
      for (int n = part; n <= kTableSize; ++n) t[n] += t[n - part];
    }
  }
  return t;
}

Count lookup(const std::vector<Count>& table, long n) {
  if (n < 0) return 0;
  if (n > kTableSize) throw std::out_of_range("partition count argument too large");
  return table[static_cast<std::size_t>(n)];
}

const std::vector<Count>& partition_table() {
  static const std::vector<Count> t = build_table(false, false);
  return t;
}

bool as_nonneg_integer(const Rational& r, long& out) {
  if (!is_integer(r) || r < 0) return false;
  out = static_cast<long>(boost::multiprecision::numerator(r));
  return true;
}

void enum_rec(int remaining, int max_part, bool odd_only, std::vector<int>& cur,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    if (odd_only && k % 2 == 0) continue;
    cur.push_back(k);
    enum_rec(remaining - k, k, odd_only, cur, out);
    cur.pop_back();
  }
}

void distinct_odd_rec(int remaining, int max_part, std::vector<int>& cur,
                      std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{cur});
    return;
  }
  int start = std::min(remaining, max_part);
  if (start % 2 == 0) --start;
  for (int k = start; k >= 1; k -= 2) {
    cur.push_back(k);
    distinct_odd_rec(remaining - k, k - 2, cur, out);
    cur.pop_back();
  }
}

}  // namespace

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts[i]);
  }
  return s;
}

std::vector<Partition> enum_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  enum_rec(n, n, false, cur, out);
  return out;
}

std::vector<Partition> enum_odd_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  enum_rec(n, n, true, cur, out);
  return out;
}

std::vector<BiPartition> enum_bipartitions(int n) {
  std::vector<BiPartition> out;
  for (int k = n; k >= 0; --k)
    for (const auto& a : enum_partitions(k))
      for (const auto& b : enum_partitions(n - k)) out.push_back({a, b});
  return out;
}

Count count_partitions(long n) { return lookup(partition_table(), n); }

Count count_partitions(const Rational& n) {
  long v;
  return as_nonneg_integer(n, v) ? count_partitions(v) : 0;
}

Count count_bipartitions(long n) {
  if (n < 0) return 0;
  Count s = 0;
  for (long k = 0; k <= n; ++k) s += count_partitions(k) * count_partitions(n - k);
  return s;
}

Count count_bipartitions(const Rational& n) {
  long v;
  return as_nonneg_integer(n, v) ? count_bipartitions(v) : 0;
}

Count count_distinct_partitions(long n) {
  static const std::vector<Count> t = build_table(true, false);
  return lookup(t, n);
}

Count count_distinct_odd_partitions(long n) {
  static const std::vector<Count> t = build_table(true, true);
  return lookup(t, n);
}

std::vector<Partition> enum_distinct_odd_balanced(int N, int t) {
  std::vector<Partition> all, out;
  if (N < 0) return out;
  std::vector<int> cur;
  distinct_odd_rec(N, N, cur, all);
  for (auto& lam : all) {
    int bal = 0;
    for (int x : lam.parts) bal += (x % 4 == 1) ? 1 : -1;
    if (bal == t) out.push_back(std::move(lam));
  }
  return out;
}

Count weighted_odd_partition_sum(int N) {
  Count total = 0;
  for (const auto& lam : enum_odd_partitions(N)) {
    std::vector<int> mu;
    for (int x : lam.parts) mu.push_back((x - 1) / 2);
    const int s = static_cast<int>(mu.size());
    int gaps = 0;
    if (N % 2 == 1) {
      // j = 1..(s-1)/2 compares mu_{2j-1}, mu_{2j} (1-based)
      for (int j = 1; j <= (s - 1) / 2; ++j)
        if (mu[2 * j - 2] >= mu[2 * j - 1] + 2) ++gaps;
    } else {
      // j = 1..s/2-1 compares mu_{2j}, mu_{2j+1}
      for (int j = 1; j <= s / 2 - 1; ++j)
        if (mu[2 * j - 1] >= mu[2 * j] + 2) ++gaps;
    }
    total += Count{1} << gaps;
  }
  return total;
}

}  // namespace sheaf
