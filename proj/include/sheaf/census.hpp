#pragma once

#include "sheaf/diagram.hpp"
#include "sheaf/groups.hpp"
#include "sheaf/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sheaf {

// Irreducible counts of the Hecke algebras with parameters +-1:
// A: type A_{n-1} at -1; B: type B_n at (-1,-1); Bm11: type B_n at (-1,1);
// D: type D_n at -1 (with D(0) = 1); B11: type B_n at (1,-1), i.e. p(n).
enum class HeckeFamily { A, B, Bm11, D, B11 };
Count hecke_count(HeckeFamily family, int n);

enum class ThetaVariant { split_B, split_D, ind1_B, ind1_D, ind2_B, ind2_D };
Count theta_k0_count(ThetaVariant variant, int n);
Count theta_k1_count(int m, int t);

enum class Central { k0, k1 };
enum class PairType { bdi, diii };
enum class Family { sigma_b1, sigma_b2, empty_mu, k1_staircase, diii };
enum class Subset { all, cuspidal, nilpotent, full };

std::string to_string(Central c);
std::string to_string(PairType t);
std::string to_string(Family f);
std::string to_string(Subset s);
Central parse_central(const std::string& s);
PairType parse_pair_type(const std::string& s);
Family parse_family(const std::string& s);
Subset parse_subset(const std::string& s);

// An orbit over a diagram; delta (1..4, printed I..IV) is present exactly when the
// diagram carries more than one orbit.
struct OrbitLabel {
  SignedYoungDiagram diagram;
  std::optional<int> delta;

  // Validates delta against the orbit multiplicity (BDI) or requires none (DIII).
  static OrbitLabel make(SignedYoungDiagram d, std::optional<int> delta, PairType type);
  std::string delta_name() const;  // "" when absent
  bool operator==(const OrbitLabel&) const = default;
};

std::string roman(int delta);
int parse_roman(const std::string& s);

struct StratumEntry {
  OrbitLabel support;
  int m = 0;
  int k = 0;
  SignedYoungDiagram mu;
  Count count = 0;
  Family family = Family::sigma_b1;
  bool operator==(const StratumEntry&) const = default;
};

struct CensusReport {
  PairType type = PairType::bdi;
  int p = 0;
  int q = 0;
  int n = 0;  // floor(N/2) for bdi, the rank for diii
  Central central = Central::k0;
  Subset subset = Subset::all;
  std::vector<StratumEntry> entries;
  Count total = 0;
  std::vector<std::string> warnings;
  bool operator==(const CensusReport&) const = default;
};

CensusReport census_bdi_k0(int p, int q);
CensusReport census_bdi_k1(int p, int q);
CensusReport census_bdi(int p, int q, Central c);
// {kappa0, kappa1}
std::pair<CensusReport, CensusReport> census_diii(int n);

bool in_subset(const CensusReport& r, const StratumEntry& e, Subset s);
// Keeps the entries of the subset and recomputes the total. Throws
// std::invalid_argument for the cuspidal subset of a diii report.
CensusReport restrict_to(const CensusReport& r, Subset s);

// Closed forms. Orientation: (p,q) and (q,p) agree; `order` defaults to what the
// coefficient needs and std::out_of_range is thrown if a given order is too small.
Rational count_formula_k0_exact(int p, int q, std::optional<int> order = {});
Count count_formula_k0(int p, int q, std::optional<int> order = {});
Count count_formula_k1(int p, int q, std::optional<int> order = {});

struct CentralCounts {
  Count k0 = 0;
  Count k1 = 0;
  bool operator==(const CentralCounts&) const = default;
};

// From the theta-set cardinalities.
CentralCounts cuspidal_counts(int p, int q);
// Generating functions for the same numbers.
Rational cuspidal_series_k0(int p, int q);
Rational cuspidal_series_k1(int p, int q);

// kappa0: sum over Sigma_b^{p,q} of pi_size, doubled on sigma2 members.
CentralCounts nilpotent_support_counts(int p, int q);
// Defined when p or q is even; std::invalid_argument otherwise.
Rational nilpotent_series_k0(int p, int q);

struct AggregateT {
  Rational formula;       // sum of count_formula_k0 over p+q = N
  Count census = 0;       // sum of census totals over p+q = N
  Rational closed_form;   // coefficient of x^N in the aggregate product form
};
AggregateT aggregate_T(int N);
FormalSeries aggregate_T_series(int order);

// Independent expectation for a report's total, when one exists.
std::optional<Rational> reference_total(const CensusReport& r);

// Sigma_b bookkeeping used by the series identities.
struct SigmaBMember {
  SignedYoungDiagram diagram;
  SigmaClass cls = SigmaClass::sigma2;
  int l = 0;
  Count pi = 0;
};
// Cached, thread-safe.
const std::vector<SigmaBMember>& sigma_b_data(int p, int q);

Count b1_count(int p, int q);
Count b2_count(int p, int q);
Rational btilde(int p, int q);  // sum of 2^{l-1+eps}, eps = N mod 2
Rational btilde_total(int N);
Count b2_total(int N);

}  // namespace sheaf
