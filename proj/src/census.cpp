#include "sheaf/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

namespace sheaf {

// ---------------------------------------------------------------- Hecke / theta

Count hecke_count(HeckeFamily family, int n) {
  if (n < 0) return 0;
  switch (family) {
    case HeckeFamily::A:
      return count_distinct_partitions(n);
    case HeckeFamily::B: {
      // prod (1+x^s)(1+x^{2s})
      Count s = 0;
      for (int j = 0; 2 * j <= n; ++j) s += count_distinct_partitions(n - 2 * j) * count_distinct_partitions(j);
      return s;
    }
    case HeckeFamily::Bm11: {
      // prod (1+x^{2s-1})(1+x^s)
      Count s = 0;
      for (int j = 0; j <= n; ++j) s += count_distinct_odd_partitions(n - j) * count_distinct_partitions(j);
      return s;
    }
    case HeckeFamily::D:
      return n == 0 ? 1 : hecke_count(HeckeFamily::Bm11, n) / 2;
    case HeckeFamily::B11:
      return count_partitions(n);
  }
  throw std::logic_error("unknown Hecke family");
}

namespace {

Count convolution(HeckeFamily f, int n) {
  Count s = 0;
  for (int k = 0; k <= n; ++k) s += hecke_count(f, k) * hecke_count(f, n - k);
  return s;
}

// Unordered pairs {rho1, rho2} of irreducibles with sizes k, n-k; at k = n/2 the
// non-isomorphic pairs count once and each rho (x) rho carries two decorations.
Count split_pairs(HeckeFamily f, int n) {
  Count s = 0;
  for (int k = 0; 2 * k < n; ++k) s += hecke_count(f, k) * hecke_count(f, n - k);
  if (n % 2 == 0) {
    const Count h = hecke_count(f, n / 2);
    s += h * (h - 1) / 2 + 2 * h;
  }
  return s;
}

Count split_d(int n) {
  auto d = [](int k) { return hecke_count(HeckeFamily::D, k); };
  Count s = d(n);  // the chi_0 block
  for (int m = 1; 2 * m < n; ++m) s += 2 * d(m) * d(n - m);
  if (n % 2 == 0 && n >= 2) {
    const Count h = d(n / 2);
    s += h * (h - 1) + 4 * h;
  }
  return s;
}

}  // namespace

Count theta_k0_count(ThetaVariant variant, int n) {
  if (n < 0) return 0;
  switch (variant) {
    case ThetaVariant::ind1_B: return convolution(HeckeFamily::B, n);
    case ThetaVariant::ind1_D: return convolution(HeckeFamily::Bm11, n);
    case ThetaVariant::split_B:
    case ThetaVariant::ind2_B: return split_pairs(HeckeFamily::B, n);
    case ThetaVariant::ind2_D: return split_pairs(HeckeFamily::Bm11, n);
    case ThetaVariant::split_D: return split_d(n);
  }
  throw std::logic_error("unknown theta variant");
}

Count theta_k1_count(int m, int t) {
  if (m < 0) return 0;
  const Count g = hecke_count(HeckeFamily::A, m);
  const int at = std::abs(t);
  if (at == 1) return 2 * g;
  if (t == 0) return m % 2 ? g : 4 * g;
  if (m == 0) return imt_descriptor(0, t).kappa1.count;
  return eta(m, t) * g;
}

// ---------------------------------------------------------------- names

std::string to_string(Central c) { return c == Central::k0 ? "k0" : "k1"; }
std::string to_string(PairType t) { return t == PairType::bdi ? "bdi" : "diii"; }

std::string to_string(Family f) {
  switch (f) {
    case Family::sigma_b1: return "sigma_b1";
    case Family::sigma_b2: return "sigma_b2";
    case Family::empty_mu: return "empty_mu";
    case Family::k1_staircase: return "k1_staircase";
    default: return "diii";
  }
}

std::string to_string(Subset s) {
  switch (s) {
    case Subset::all: return "all";
    case Subset::cuspidal: return "cuspidal";
    case Subset::nilpotent: return "nilpotent";
    default: return "full";
  }
}

Central parse_central(const std::string& s) {
  if (s == "k0") return Central::k0;
  if (s == "k1") return Central::k1;
  throw std::invalid_argument("unknown central character '" + s + "'");
}

PairType parse_pair_type(const std::string& s) {
  if (s == "bdi") return PairType::bdi;
  if (s == "diii") return PairType::diii;
  throw std::invalid_argument("unknown pair type '" + s + "'");
}

Family parse_family(const std::string& s) {
  for (Family f : {Family::sigma_b1, Family::sigma_b2, Family::empty_mu, Family::k1_staircase, Family::diii})
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown family '" + s + "'");
}

Subset parse_subset(const std::string& s) {
  for (Subset x : {Subset::all, Subset::cuspidal, Subset::nilpotent, Subset::full})
    if (to_string(x) == s) return x;
  throw std::invalid_argument("unknown subset '" + s + "'");
}

std::string roman(int delta) {
  static const char* names[] = {"I", "II", "III", "IV"};
  if (delta < 1 || delta > 4) throw std::invalid_argument("delta out of range");
  return names[delta - 1];
}

int parse_roman(const std::string& s) {
  for (int i = 1; i <= 4; ++i)
    if (roman(i) == s) return i;
  throw std::invalid_argument("bad orbit decoration '" + s + "'");
}

OrbitLabel OrbitLabel::make(SignedYoungDiagram d, std::optional<int> delta, PairType type) {
  const int mult = type == PairType::bdi ? orbit_multiplicity(d) : 1;
  if (mult > 1 && !delta) throw std::invalid_argument("orbit over " + d.to_string() + " needs a decoration");
  if (mult == 1 && delta) throw std::invalid_argument("orbit over " + d.to_string() + " takes no decoration");
  if (delta && (*delta < 1 || *delta > mult)) throw std::invalid_argument("decoration exceeds orbit multiplicity");
  return OrbitLabel{std::move(d), delta};
}

std::string OrbitLabel::delta_name() const { return delta ? roman(*delta) : std::string(); }

// ---------------------------------------------------------------- Sigma_b data

const std::vector<SigmaBMember>& sigma_b_data(int p, int q) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<SigmaBMember>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, q});
  if (it != cache.end()) return it->second;
  std::vector<SigmaBMember> v;
  for (auto& d : enum_sigma_b(p, q)) {
    SigmaBMember m;
    m.cls = classify(d).cls;
    m.l = l_of(d);
    m.pi = pi_size(d);
    m.diagram = std::move(d);
    v.push_back(std::move(m));
  }
  return cache.emplace(std::make_pair(p, q), std::move(v)).first->second;
}

Count b1_count(int p, int q) {
  Count s = 0;
  for (const auto& m : sigma_b_data(p, q))
    if (m.cls == SigmaClass::sigma1) s += m.pi;
  return s;
}

Count b2_count(int p, int q) {
  Count s = 0;
  for (const auto& m : sigma_b_data(p, q))
    if (m.cls == SigmaClass::sigma2) s += m.pi;
  return s;
}

Rational btilde(int p, int q) {
  Rational s = 0;
  const int eps = (p + q) % 2;
  for (const auto& m : sigma_b_data(p, q)) {
    const int e = m.l - 1 + eps;
    s += e >= 0 ? Rational(Integer(1) << e) : Rational(1, 2);
  }
  return s;
}

Rational btilde_total(int N) {
  Rational s = 0;
  for (int p = 0; p <= N; ++p) s += btilde(p, N - p);
  return s;
}

Count b2_total(int N) {
  Count s = 0;
  for (int p = 0; p <= N; ++p) s += b2_count(p, N - p);
  return s;
}

// ---------------------------------------------------------------- censuses

namespace {

void low_rank_warning(CensusReport& r, int N, int threshold) {
  if (N < threshold)
    r.warnings.push_back("low-rank pair: N = " + std::to_string(N) + " is below " + std::to_string(threshold));
}

void add_entry(CensusReport& r, SignedYoungDiagram support, std::optional<int> delta, int m, int k,
               SignedYoungDiagram mu, Count count, Family f) {
  if (count <= 0) return;
  StratumEntry e;
  e.support = OrbitLabel::make(std::move(support), delta, r.type);
  e.m = m;
  e.k = k;
  e.mu = std::move(mu);
  e.count = count;
  e.family = f;
  r.total += count;
  r.entries.push_back(std::move(e));
}

void check_pair(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("signature entries must be nonnegative");
}

}  // namespace

CensusReport census_bdi_k0(int p, int q) {
  check_pair(p, q);
  CensusReport r;
  r.type = PairType::bdi;
  r.p = p;
  r.q = q;
  r.n = (p + q) / 2;
  r.central = Central::k0;
  const int N = p + q;
  const int t = p - q;
  low_rank_warning(r, N, 5);
  const bool odd = N % 2 == 1;
  const ThetaVariant ind1 = odd ? ThetaVariant::ind1_B : ThetaVariant::ind1_D;
  const ThetaVariant ind2 = odd ? ThetaVariant::ind2_B : ThetaVariant::ind2_D;

  for (int m = 0; m <= std::min(p, q); ++m) {
    if (!odd && (m - q) % 2 != 0) continue;
    for (int k = 0; p - m - 2 * k >= 0 && q - m - 2 * k >= 0; ++k) {
      const int pp = p - m - 2 * k, qq = q - m - 2 * k;
      const Count pk = count_partitions(k);
      const auto base = staircase_base(m, k);
      for (const auto& mem : sigma_b_data(pp, qq)) {
        auto support = join(base, mem.diagram);
        if (mem.cls == SigmaClass::sigma1) {
          add_entry(r, support, {}, m, k, mem.diagram, theta_k0_count(ind1, m) * pk * mem.pi, Family::sigma_b1);
        } else if (m > 0) {
          add_entry(r, support, {}, m, k, mem.diagram, theta_k0_count(ind2, m) * pk * mem.pi, Family::sigma_b2);
        } else {
          for (int d = 1; d <= 2; ++d) add_entry(r, support, d, m, k, mem.diagram, pk * mem.pi, Family::sigma_b2);
        }
      }
      if (pp == 0 && qq == 0 && t == 0) {
        if (m > 0) {
          add_entry(r, base, {}, m, k, {}, theta_k0_count(ThetaVariant::split_D, m) * pk, Family::empty_mu);
        } else {
          for (int d = 1; d <= 4; ++d) add_entry(r, base, d, m, k, {}, pk, Family::empty_mu);
        }
      }
    }
  }
  return r;
}

CensusReport census_bdi_k1(int p, int q) {
  check_pair(p, q);
  CensusReport r;
  r.type = PairType::bdi;
  r.p = p;
  r.q = q;
  r.n = (p + q) / 2;
  r.central = Central::k1;
  const int N = p + q;
  const int t = p - q;
  low_rank_warning(r, N, 5);
  const int rest = N - t * t;
  if (rest < 0 || rest % 2) return r;
  const auto mu = mu_t(t);
  for (int m = 0; 2 * m <= rest; ++m) {
    if ((rest - 2 * m) % 4) continue;
    const int k = (rest - 2 * m) / 4;
    const Count pk = count_bipartitions(k);
    const auto support = join(staircase_base(m, k), mu);
    if (m > 0 || std::abs(t) >= 2) {
      add_entry(r, support, {}, m, k, mu, pk * theta_k1_count(m, t), Family::k1_staircase);
    } else {
      const int decorations = std::abs(t) == 1 ? 2 : 4;
      for (int d = 1; d <= decorations; ++d) add_entry(r, support, d, m, k, mu, pk, Family::k1_staircase);
    }
  }
  return r;
}

CensusReport census_bdi(int p, int q, Central c) {
  return c == Central::k0 ? census_bdi_k0(p, q) : census_bdi_k1(p, q);
}

std::pair<CensusReport, CensusReport> census_diii(int n) {
  if (n < 0) throw std::invalid_argument("rank must be nonnegative");
  CensusReport k0, k1;
  for (auto* r : {&k0, &k1}) {
    r->type = PairType::diii;
    r->p = r->q = r->n = n;
    low_rank_warning(*r, n, 3);
  }
  k0.central = Central::k0;
  k1.central = Central::k1;
  for (int k = 0; 2 * k <= n; ++k) {
    const auto base = staircase_base(2 * k, 0);
    for (const auto& mu : enum_lambda_b(n - 2 * k))
      add_entry(k0, join(base, mu), {}, 0, k, mu, count_partitions(k), Family::diii);
  }
  if (n % 2 == 0)
    add_entry(k1, staircase_base(n, 0), {}, 0, n / 2, {}, count_bipartitions(n / 2), Family::diii);
  return {std::move(k0), std::move(k1)};
}

// ---------------------------------------------------------------- subsets

namespace {

bool zero_orbit(const SignedYoungDiagram& d) {
  return std::all_of(d.rows().begin(), d.rows().end(), [](const Row& r) { return r.length == 1; });
}

}  // namespace

bool in_subset(const CensusReport& r, const StratumEntry& e, Subset s) {
  switch (s) {
    case Subset::all:
      return true;
    case Subset::full:
      return zero_orbit(e.support.diagram);
    case Subset::nilpotent:
      return e.m == 0 && e.k == 0 && !e.mu.empty();
    case Subset::cuspidal:
      if (r.type != PairType::bdi) throw std::invalid_argument("the cuspidal subset is defined for bdi pairs");
      if (r.central == Central::k0) return std::abs(r.p - r.q) <= 1 && zero_orbit(e.support.diagram);
      return e.k == 0;
  }
  return false;
}

CensusReport restrict_to(const CensusReport& r, Subset s) {
  CensusReport out = r;
  out.subset = s;
  out.entries.clear();
  out.total = 0;
  for (const auto& e : r.entries) {
    if (in_subset(r, e, s)) {
      out.entries.push_back(e);
      out.total += e.count;
    }
  }
  return out;
}

// ---------------------------------------------------------------- closed forms

namespace {

Count to_count(const Rational& v, const char* what) {
  if (!is_integer(v)) throw std::logic_error(std::string(what) + " produced a non-integer " + to_string(v));
  return static_cast<Count>(boost::multiprecision::numerator(v));
}

int need_order(std::optional<int> order, int needed) {
  const int o = order.value_or(needed);
  if (o < needed)
    throw std::out_of_range("truncation order " + std::to_string(o) + " insufficient; need " + std::to_string(needed));
  return o;
}

// 1/(1+x^t), with t = 0 read literally as 1/2.
FormalSeries recip_one_plus(int t, int o) {
  if (t == 0) return FormalSeries::constant(Rational(1, 2), o);
  FormalSeries s = FormalSeries::constant(1, o);
  s.div_binomial(1, t);
  return s;
}

// (1+x^t)/(1+x^{2t}), equal to 1 at t = 0.
FormalSeries balanced_ratio(int t, int o) {
  FormalSeries s = FormalSeries::constant(1, o);
  if (t == 0) return s;
  s.mul_binomial(1, t);
  s.div_binomial(1, 2 * t);
  return s;
}

}  // namespace

Rational count_formula_k0_exact(int p, int q, std::optional<int> order) {
  check_pair(p, q);
  if (p < q) std::swap(p, q);
  const int t = p - q;
  const int o = need_order(order, q);
  FormalSeries total = Rational(1, 2) * (recip_one_plus(t, o) * eval_product({{1, 1, 0, 1}, {-1, 1, 0, -3}}, o));
  total += Rational(3, 2) * (balanced_ratio(t, o) * eval_product({{1, 2, 0, 2}, {-1, 2, 0, -3}}, o));
  if (t == 0) total += eval_product({{-1, 2, 0, -1}}, o, Rational(9, 4));
  return total.coeff(q);
}

Count count_formula_k0(int p, int q, std::optional<int> order) {
  return to_count(count_formula_k0_exact(p, q, order), "kappa0 count formula");
}

Count count_formula_k1(int p, int q, std::optional<int> order) {
  check_pair(p, q);
  const int N = p + q, t = p - q;
  const int rest = N - t * t;
  if (rest < 0 || rest % 2) return 0;
  const int o = need_order(order, rest);
  const auto s = eval_product({{-1, 4, 0, -1}, {-1, 2, 0, -1}}, o);
  return eta(rest / 2, t) * to_count(s.coeff(rest), "kappa1 count formula");
}

CentralCounts cuspidal_counts(int p, int q) {
  check_pair(p, q);
  CentralCounts c;
  const int t = p - q, n = std::min(p, q);
  if (std::abs(t) == 1) c.k0 = theta_k0_count(ThetaVariant::split_B, n);
  if (t == 0) c.k0 = theta_k0_count(ThetaVariant::split_D, n);
  const int rest = p + q - t * t;
  if (rest >= 0 && rest % 2 == 0) c.k1 = theta_k1_count(rest / 2, t);
  return c;
}

Rational cuspidal_series_k0(int p, int q) {
  check_pair(p, q);
  const int t = std::abs(p - q), n = std::min(p, q);
  if (t == 1) {
    auto s = eval_product({{1, 2, 0, 2}, {1, 1, 0, 2}}, n, Rational(1, 2)) +
             eval_product({{1, 4, 0, 1}, {1, 2, 0, 1}}, n, Rational(3, 2));
    return s.coeff(n);
  }
  if (t == 0) {
    if (n % 2) return eval_product({{1, 4, 0, 4}, {1, 2, 0, 4}}, n, 1, 1).coeff(n);
    auto s = eval_product({{1, 4, -2, 4}, {1, 2, 0, 4}}, n, Rational(1, 4)) +
             eval_product({{1, 4, -2, 1}, {1, 2, 0, 1}}, n, Rational(3, 2));
    return s.coeff(n);
  }
  return 0;
}

Rational cuspidal_series_k1(int p, int q) {
  check_pair(p, q);
  const int t = p - q;
  const int rest = p + q - t * t;
  if (rest < 0 || rest % 2) return 0;
  const int m = rest / 2;
  return eta(m, t) * eval_product({{1, 1, 0, 1}}, m).coeff(m);
}

CentralCounts nilpotent_support_counts(int p, int q) {
  check_pair(p, q);
  CentralCounts c;
  c.k0 = b1_count(p, q) + 2 * b2_count(p, q);
  const int t = p - q;
  if (p + q == t * t) c.k1 = eta(0, t);
  return c;
}

Rational nilpotent_series_k0(int p, int q) {
  check_pair(p, q);
  if (p % 2 && q % 2) throw std::invalid_argument("nilpotent kappa0 series needs p or q even");
  if (p < q) std::swap(p, q);
  const int t = p - q;
  const int o = q;
  const bool t_odd = t % 2;
  const auto base1 = t_odd ? eval_product({{1, 2, -1, 2}, {-1, 2, 0, -2}}, o)
                           : eval_product({{1, 2, 0, 2}, {-1, 2, 0, -2}}, o);
  const auto base2 = t_odd ? eval_product({{1, 4, -2, 1}, {-1, 2, 0, -2}}, o)
                           : eval_product({{1, 4, 0, 1}, {-1, 2, 0, -2}}, o);
  FormalSeries s = Rational(1, 2) * (recip_one_plus(t, o) * base1);
  s += Rational(3, 2) * (balanced_ratio(t, o) * base2);
  return s.coeff(q);
}

FormalSeries aggregate_T_series(int order) {
  auto s = eval_product({{1, 2, -1, 2}, {-1, 4, 0, -1}, {-1, 2, -1, -2}}, order, Rational(1, 4));
  s += eval_product({{1, 2, -1, 1}, {-1, 4, 0, -1}, {-1, 2, -1, -1}}, order, Rational(3, 2));
  s += eval_product({{-1, 4, 0, -1}}, order, Rational(9, 4));
  return s;
}

AggregateT aggregate_T(int N) {
  AggregateT a;
  for (int p = 0; p <= N; ++p) {
    a.formula += count_formula_k0_exact(p, N - p);
    a.census += census_bdi_k0(p, N - p).total;
  }
  a.closed_form = aggregate_T_series(N).coeff(N);
  return a;
}

std::optional<Rational> reference_total(const CensusReport& r) {
  const int t = r.p - r.q;
  if (r.type == PairType::diii) {
    if (r.subset != Subset::all) return std::nullopt;
    if (r.central == Central::k0) return Rational(static_cast<long long>(enum_lambda(r.n).size()));
    return Rational(r.n % 2 ? 0 : count_bipartitions(r.n / 2));
  }
  const bool k0 = r.central == Central::k0;
  switch (r.subset) {
    case Subset::all:
      return k0 ? count_formula_k0_exact(r.p, r.q) : Rational(count_formula_k1(r.p, r.q));
    case Subset::cuspidal:
      return k0 ? cuspidal_series_k0(r.p, r.q) : cuspidal_series_k1(r.p, r.q);
    case Subset::nilpotent:
      if (k0) {
        if (r.p + r.q == 0 || (r.p % 2 && r.q % 2)) return std::nullopt;
        return nilpotent_series_k0(r.p, r.q);
      }
      return Rational(r.p + r.q == t * t ? eta(0, t) : 0);
    case Subset::full:
      if (std::abs(t) > 1) return k0 ? std::nullopt : std::optional<Rational>(Rational(0));
      return k0 ? cuspidal_series_k0(r.p, r.q) : cuspidal_series_k1(r.p, r.q);
  }
  return std::nullopt;
}

}  // namespace sheaf
