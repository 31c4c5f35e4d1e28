#include "sheaf/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sheaf {

SignedYoungDiagram::SignedYoungDiagram(std::vector<Row> groups) {
  std::map<int, Row, std::greater<>> merged;
  for (const auto& g : groups) {
    if (g.length < 1) throw std::invalid_argument("row length must be positive");
    if (g.plus < 0 || g.minus < 0) throw std::invalid_argument("negative row multiplicity");
    auto& r = merged[g.length];
    r.length = g.length;
    r.plus += g.plus;
    r.minus += g.minus;
  }
  for (const auto& [len, r] : merged)
    if (r.plus + r.minus > 0) rows_.push_back(r);
}

SignedYoungDiagram SignedYoungDiagram::parse(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<Row> groups;
  bool saw_zero = false;
  int ntok = 0;
  while (in >> tok) {
    ++ntok;
    if (tok == "0" || tok == "∅") {
      saw_zero = true;
      continue;
    }
    std::size_t i = 0;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (i == 0 || i == tok.size()) throw std::invalid_argument("bad diagram token '" + tok + "'");
    const int len = std::stoi(tok.substr(0, i));
    const char sign = tok[i++];
    if (sign != '+' && sign != '-') throw std::invalid_argument("bad sign in diagram token '" + tok + "'");
    int mult = 1;
    if (i < tok.size()) {
      if (tok[i] != '^' || i + 1 == tok.size()) throw std::invalid_argument("bad multiplicity in '" + tok + "'");
      const std::string m = tok.substr(i + 1);
      if (!std::all_of(m.begin(), m.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("bad multiplicity in '" + tok + "'");
      mult = std::stoi(m);
      if (mult < 1) throw std::invalid_argument("multiplicity must be positive in '" + tok + "'");
    }
    groups.push_back(sign == '+' ? Row{len, mult, 0} : Row{len, 0, mult});
  }
  if (ntok == 0) throw std::invalid_argument("empty diagram text (use \"0\")");
  if (saw_zero && ntok > 1) throw std::invalid_argument("\"0\" cannot be combined with rows");
  return SignedYoungDiagram(std::move(groups));
}

std::string SignedYoungDiagram::to_string() const {
  if (rows_.empty()) return "0";
  std::string s;
  auto emit = [&](int len, char sign, int mult) {
    if (mult == 0) return;
    if (!s.empty()) s += ' ';
    s += std::to_string(len);
    s += sign;
    if (mult > 1) s += "^" + std::to_string(mult);
  };
  for (const auto& r : rows_) {
    emit(r.length, '+', r.plus);
    emit(r.length, '-', r.minus);
  }
  return s;
}

int SignedYoungDiagram::size() const {
  int n = 0;
  for (const auto& r : rows_) n += r.length * (r.plus + r.minus);
  return n;
}

std::pair<int, int> SignedYoungDiagram::signature() const {
  int P = 0, Q = 0;
  for (const auto& r : rows_) {
    const int hi = (r.length + 1) / 2, lo = r.length / 2;
    P += r.plus * hi + r.minus * lo;
    Q += r.plus * lo + r.minus * hi;
  }
  return {P, Q};
}

SignedYoungDiagram SignedYoungDiagram::sign_swapped() const {
  std::vector<Row> g;
  for (const auto& r : rows_) g.push_back({r.length, r.minus, r.plus});
  return SignedYoungDiagram(std::move(g));
}

std::string to_string(SigmaClass c) {
  switch (c) {
    case SigmaClass::sigma1: return "sigma1";
    case SigmaClass::sigma2: return "sigma2";
    default: return "sigma3";
  }
}

bool in_sigma(const SignedYoungDiagram& d) {
  return std::all_of(d.rows().begin(), d.rows().end(),
                     [](const Row& r) { return r.length % 2 == 1 || r.plus == r.minus; });
}

DiagramClass classify(const SignedYoungDiagram& d) {
  if (!in_sigma(d)) throw std::invalid_argument("diagram " + d.to_string() + " is not in Sigma");
  DiagramClass c;
  for (const auto& r : d.rows()) {
    if (r.length % 4 == 1) {
      c.a += r.plus > 0;
      c.b += r.minus > 0;
    } else if (r.length % 4 == 3) {
      c.a += r.minus > 0;
      c.b += r.plus > 0;
    }
  }
  if (c.a > 0 && c.b > 0) {
    c.cls = SigmaClass::sigma1;
    c.r = c.a + c.b - 2;
  } else if (c.a + c.b > 0) {
    c.cls = SigmaClass::sigma2;
    c.r = c.a + c.b - 1;
  } else {
    c.cls = SigmaClass::sigma3;
    c.r = 0;
  }
  return c;
}

int orbit_multiplicity(const SignedYoungDiagram& d) {
  switch (classify(d).cls) {
    case SigmaClass::sigma1: return 1;
    case SigmaClass::sigma2: return 2;
    default: return 4;
  }
}

namespace {

// Distinct parts with multiplicities, in decreasing part order.
std::vector<std::pair<int, int>> grouped(const Partition& lam) {
  std::vector<std::pair<int, int>> g;
  for (int x : lam.parts) {
    if (!g.empty() && g.back().first == x) {
      ++g.back().second;
    } else {
      g.push_back({x, 1});
    }
  }
  return g;
}

// Cartesian product over per-group options.
void expand(const std::vector<std::vector<Row>>& options, std::size_t i, std::vector<Row>& cur,
            const std::pair<int, int>& sig, std::vector<SignedYoungDiagram>& out) {
  if (i == options.size()) {
    SignedYoungDiagram d(cur);
    if (d.signature() == sig) out.push_back(std::move(d));
    return;
  }
  for (const auto& r : options[i]) {
    cur.push_back(r);
    expand(options, i + 1, cur, sig, out);
    cur.pop_back();
  }
}

template <class Splitter>
std::vector<SignedYoungDiagram> enumerate(int p, int q, Splitter split) {
  std::vector<SignedYoungDiagram> out;
  if (p < 0 || q < 0) return out;
  for (const auto& lam : enum_partitions(p + q)) {
    std::vector<std::vector<Row>> options;
    bool ok = true;
    for (auto [len, mult] : grouped(lam)) {
      options.push_back(split(len, mult));
      if (options.back().empty()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<Row> cur;
    expand(options, 0, cur, {p, q}, out);
  }
  return out;
}

bool pair_parity_equal(const OddRow& x, const OddRow& y) { return (x.mu + x.eps) % 2 == (y.mu + y.eps) % 2; }

}  // namespace

std::vector<SignedYoungDiagram> enum_sigma(int p, int q) {
  return enumerate(p, q, [](int len, int mult) {
    std::vector<Row> opts;
    if (len % 2 == 0) {
      if (mult % 2 == 0) opts.push_back({len, mult / 2, mult / 2});
    } else {
      for (int a = mult; a >= 0; --a) opts.push_back({len, a, mult - a});
    }
    return opts;
  });
}

std::vector<OddRow> odd_rows(const SignedYoungDiagram& d) {
  std::vector<OddRow> rows;
  for (const auto& r : d.rows()) {
    if (r.length % 2 == 0) throw std::invalid_argument("odd_rows: diagram has an even part");
    const int mu = (r.length - 1) / 2;
    for (int i = 0; i < r.plus; ++i) rows.push_back({mu, 0});
    for (int i = 0; i < r.minus; ++i) rows.push_back({mu, 1});
  }
  return rows;
}

bool in_sigma_b(const SignedYoungDiagram& d, SigmaBReading reading) {
  if (d.empty()) return false;
  for (const auto& r : d.rows())
    if (r.length % 2 == 0 || (r.plus > 0 && r.minus > 0)) return false;
  const auto rows = odd_rows(d);
  const auto s = rows.size();
  const auto [p, q] = d.signature();
  if ((p + q) % 2 == 1) {
    const OddRow& top = rows.front();
    if (reading == SigmaBReading::minus_parity) {
      if ((top.eps + top.mu) % 2 != q % 2) return false;
    } else if (top.eps % 2 != std::min(p, q) % 2) {
      return false;
    }
    for (std::size_t i = 1; 2 * i < s; ++i)
      if (!pair_parity_equal(rows[2 * i - 1], rows[2 * i])) return false;
  } else {
    for (std::size_t i = 0; 2 * i + 1 < s; ++i)
      if (!pair_parity_equal(rows[2 * i], rows[2 * i + 1])) return false;
  }
  return true;
}

std::vector<SignedYoungDiagram> enum_sigma_b(int p, int q, SigmaBReading reading) {
  std::vector<SignedYoungDiagram> out;
  if (p + q == 0) return out;
  auto cands = enumerate(p, q, [](int len, int mult) {
    std::vector<Row> opts;
    if (len % 2 == 1) {
      opts.push_back({len, mult, 0});
      opts.push_back({len, 0, mult});
    }
    return opts;
  });
  for (auto& d : cands)
    if (in_sigma_b(d, reading)) out.push_back(std::move(d));
  return out;
}

bool in_lambda(const SignedYoungDiagram& d) {
  return std::all_of(d.rows().begin(), d.rows().end(), [](const Row& r) {
    return r.length % 2 == 1 ? r.plus == r.minus : (r.plus % 2 == 0 && r.minus % 2 == 0);
  });
}

bool in_lambda_b(const SignedYoungDiagram& d) {
  if (!in_lambda(d)) return false;
  return std::all_of(d.rows().begin(), d.rows().end(), [](const Row& r) {
    return r.length % 2 == 1 ? r.plus <= 1 : r.plus * r.minus == 0;
  });
}

std::vector<SignedYoungDiagram> enum_lambda(int n) {
  return enumerate(n, n, [](int len, int mult) {
    std::vector<Row> opts;
    if (mult % 2 != 0) return opts;
    if (len % 2 == 1) {
      opts.push_back({len, mult / 2, mult / 2});
    } else {
      for (int a = mult; a >= 0; a -= 2) opts.push_back({len, a, mult - a});
    }
    return opts;
  });
}

std::vector<SignedYoungDiagram> enum_lambda_b(int n) {
  auto all = enum_lambda(n);
  std::vector<SignedYoungDiagram> out;
  for (auto& d : all)
    if (in_lambda_b(d)) out.push_back(std::move(d));
  return out;
}

SignedYoungDiagram mu_t(int t) {
  std::vector<Row> g;
  const int a = t < 0 ? -t : t;
  for (int i = a; i >= 1; --i) g.push_back(t > 0 ? Row{2 * i - 1, 1, 0} : Row{2 * i - 1, 0, 1});
  return SignedYoungDiagram(std::move(g));
}

SignedYoungDiagram join(const SignedYoungDiagram& a, const SignedYoungDiagram& b) {
  std::vector<Row> g = a.rows();
  g.insert(g.end(), b.rows().begin(), b.rows().end());
  return SignedYoungDiagram(std::move(g));
}

SignedYoungDiagram staircase_base(int m, int k) {
  return SignedYoungDiagram({Row{1, m, m}, Row{2, k, k}});
}

bool all_parts_even(const SignedYoungDiagram& d) {
  return std::all_of(d.rows().begin(), d.rows().end(), [](const Row& r) { return r.length % 2 == 0; });
}

BiPartition diii_kappa1_bijection(const SignedYoungDiagram& d) {
  BiPartition bp;
  for (const auto& r : d.rows()) {
    if (r.length % 2 == 1) throw std::invalid_argument("diagram " + d.to_string() + " has an odd part");
    if (r.plus % 2 || r.minus % 2)
      throw std::invalid_argument("diagram " + d.to_string() + " has an odd per-sign multiplicity");
    bp.first.parts.insert(bp.first.parts.end(), r.plus / 2, r.length / 2);
    bp.second.parts.insert(bp.second.parts.end(), r.minus / 2, r.length / 2);
  }
  return bp;
}

SignedYoungDiagram diii_kappa1_inverse(const BiPartition& bp) {
  std::vector<Row> g;
  for (int x : bp.first.parts) g.push_back({2 * x, 2, 0});
  for (int x : bp.second.parts) g.push_back({2 * x, 0, 2});
  return SignedYoungDiagram(std::move(g));
}

}  // namespace sheaf
