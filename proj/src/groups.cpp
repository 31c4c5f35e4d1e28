#include "sheaf/groups.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sheaf {

namespace {

Count pow2(int e) {
  if (e < 0) throw std::logic_error("negative power of two");
  return Count{1} << e;
}

bool multiple_odd_rows(const SignedYoungDiagram& d) {
  for (const auto& r : d.rows())
    if (r.length % 2 == 1 && (r.plus >= 2 || r.minus >= 2)) return true;
  return false;
}

}  // namespace

Integer GroupDescriptor::order() const {
  Integer o = 1;
  o <<= (kind == GroupKind::central_extension ? rank + 1 : rank);
  return o;
}

PairParity pair_parity(int p, int q) {
  if ((p + q) % 2) return PairParity::odd;
  return p % 2 ? PairParity::even_outer : PairParity::even_inner;
}

GroupDescriptor component_group_barK(const SignedYoungDiagram& d) {
  const int r = classify(d).r;
  if (r == 0) return {GroupKind::trivial, 0, "1"};
  return {GroupKind::elementary_abelian, r, "(Z/2)^" + std::to_string(r)};
}

Kappa1Data kappa1_data_bdi(const SignedYoungDiagram& d, PairParity parity) {
  const auto [p, q] = d.signature();
  if (pair_parity(p, q) != parity)
    throw std::invalid_argument("pair parity flag inconsistent with signature of " + d.to_string());
  const DiagramClass c = classify(d);
  if (multiple_odd_rows(d)) return {0, 0};
  const int r = c.r;
  switch (parity) {
    case PairParity::odd:
      if (c.cls == SigmaClass::sigma1) return {2, pow2((r - 1) / 2)};
      if (c.cls == SigmaClass::sigma2) return {1, pow2(r / 2)};
      break;
    case PairParity::even_outer:
      if (c.cls == SigmaClass::sigma1) return {1, pow2(r / 2)};
      break;
    case PairParity::even_inner:
      if (c.cls == SigmaClass::sigma1) return {4, pow2((r - 2) / 2)};
      if (c.cls == SigmaClass::sigma2) return {2, pow2((r - 1) / 2)};
      return {1, pow2(r / 2)};
  }
  throw std::logic_error("class " + to_string(c.cls) + " impossible for this pair parity");
}

Kappa1Data kappa1_data_bdi(const SignedYoungDiagram& d) {
  const auto [p, q] = d.signature();
  return kappa1_data_bdi(d, pair_parity(p, q));
}

Kappa1Data kappa1_data_diii(const SignedYoungDiagram& d) {
  if (!in_lambda(d)) throw std::invalid_argument("diagram " + d.to_string() + " is not in Lambda");
  return all_parts_even(d) ? Kappa1Data{1, 1} : Kappa1Data{0, 0};
}

int eta(int m, int t) {
  if (t % 2 != 0) return 2;
  const int half = t / 2;
  return ((m - half) % 2 == 0) ? 4 : 1;
}

ImtData imt_descriptor(int m, int t) {
  const int at = std::abs(t);
  if (at < 2) throw std::invalid_argument("imt_descriptor needs |t| >= 2");
  if (m < 0) throw std::invalid_argument("imt_descriptor needs m >= 0");
  if (m == 0) {
    const auto mu = mu_t(t);
    const int r = classify(mu).r;
    return {{GroupKind::central_extension, r, "A_K(O_mu_t)"}, kappa1_data_bdi(mu)};
  }
  GroupDescriptor g{GroupKind::central_extension, at - 1 + m - 1,
                    "Gamma_" + std::to_string(at) + " x (Z/2)^" + std::to_string(m - 1)};
  if (at % 2) return {g, {pow2(m - 1), pow2((at - 1) / 2)}};
  return {g, {pow2(m), pow2((at - 2) / 2)}};
}

StabilizerType stabilizer_type(int m, int t) {
  if (m < 1 || std::abs(t) < 2) throw std::invalid_argument("stabilizer_type needs m >= 1 and |t| >= 2");
  switch (eta(m, t)) {
    case 1: return {StabilizerOrbits::one, false, "one orbit, S_m"};
    case 2: return {StabilizerOrbits::one, true, "one orbit, S_m x| <tau>"};
    default: return {StabilizerOrbits::two, true, "two orbits, S_m x| <tau> each"};
  }
}

std::vector<int> omega_set(const SignedYoungDiagram& d) {
  if (!in_sigma_b(d)) throw std::invalid_argument("diagram " + d.to_string() + " is not in Sigma_b");
  const auto& g = d.rows();
  const int s = static_cast<int>(g.size());
  std::vector<int> omega;
  for (int j = 0; j < s; ++j) {
    int tail = 0;
    for (int a = j; a < s; ++a) tail += g[a].plus + g[a].minus;
    if (tail % 2) continue;
    if (j > 0) {
      const int mu_prev = (g[j - 1].length - 1) / 2, mu = (g[j].length - 1) / 2;
      const bool same_sign = (g[j - 1].plus > 0) == (g[j].plus > 0);
      if (!(mu_prev >= mu + 2 || same_sign)) continue;
    }
    omega.push_back(j + 1);
  }
  return omega;
}

int l_of(const SignedYoungDiagram& d) { return static_cast<int>(omega_set(d).size()); }

Count pi_size(const SignedYoungDiagram& d) {
  const int l = l_of(d);
  const bool sigma1 = classify(d).cls == SigmaClass::sigma1;
  const int e = d.size() % 2 ? (sigma1 ? l - 1 : l) : (sigma1 ? l - 2 : l - 1);
  if (e < 0)
    throw std::logic_error("negative exponent for the character set of " + d.to_string());
  return pow2(e);
}

Count pi_size_by_characters(const SignedYoungDiagram& d) {
  if (classify(d).cls != SigmaClass::sigma2)
    throw std::invalid_argument("character listing applies to sigma2 members only");
  const auto omega = omega_set(d);
  auto in_omega = [&](int j) {
    for (int x : omega)
      if (x == j) return true;
    return false;
  };
  const int gens = static_cast<int>(d.rows().size()) - 1;
  Count n = 0;
  for (unsigned mask = 0; mask < (1u << gens); ++mask) {
    bool ok = true;
    for (int r = 1; r <= gens; ++r) {
      const bool nontrivial = mask & (1u << (r - 1));
      if (nontrivial && !in_omega(r + 1)) ok = false;
    }
    n += ok;
  }
  return n;
}

}  // namespace sheaf
