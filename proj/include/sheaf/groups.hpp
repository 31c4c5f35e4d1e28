#pragma once

#include "sheaf/diagram.hpp"

#include <string>
#include <vector>

namespace sheaf {

enum class GroupKind { trivial, elementary_abelian, central_extension };

// Elementary abelian: order 2^rank. Central extension by Z/2 of an elementary
// abelian group of the given rank: order 2^{rank+1}.
struct GroupDescriptor {
  GroupKind kind = GroupKind::trivial;
  int rank = 0;
  std::string label;
  Integer order() const;
};

// Number of irreducibles on which the central element acts by -1, and their
// common dimension. count * dim^2 = 2^r whenever count > 0.
struct Kappa1Data {
  Count count = 0;
  Count dim = 0;
  bool operator==(const Kappa1Data&) const = default;
};

// N odd; N even with p, q both odd (outer); N even with p, q both even (inner).
enum class PairParity { odd, even_outer, even_inner };
PairParity pair_parity(int p, int q);

GroupDescriptor component_group_barK(const SignedYoungDiagram& d);
// Throws std::invalid_argument when the parity flag disagrees with the signature.
Kappa1Data kappa1_data_bdi(const SignedYoungDiagram& d, PairParity parity);
Kappa1Data kappa1_data_bdi(const SignedYoungDiagram& d);
Kappa1Data kappa1_data_diii(const SignedYoungDiagram& d);

// 2 for t odd; 4 when m = t/2 mod 2; 1 otherwise.
int eta(int m, int t);

struct ImtData {
  GroupDescriptor group;
  Kappa1Data kappa1;
};
// Requires |t| >= 2 and m >= 0.
ImtData imt_descriptor(int m, int t);

enum class StabilizerOrbits { one, two };
struct StabilizerType {
  StabilizerOrbits orbits = StabilizerOrbits::one;
  bool with_tau = false;  // stabilizer S_m x| <tau> rather than S_m
  std::string label;
};
// Requires m >= 1 and |t| >= 2.
StabilizerType stabilizer_type(int m, int t);

// 1-based indices j into the grouped rows (2mu_j+1)^{m_j}_{eps_j}. Throws off Sigma_b.
std::vector<int> omega_set(const SignedYoungDiagram& d);
int l_of(const SignedYoungDiagram& d);

// Size of the character set attached to a Sigma_b member (parity of N read from d).
Count pi_size(const SignedYoungDiagram& d);
// Same quantity for sigma2 members by listing sign characters on delta_1..delta_{s-1}.
Count pi_size_by_characters(const SignedYoungDiagram& d);

}  // namespace sheaf
