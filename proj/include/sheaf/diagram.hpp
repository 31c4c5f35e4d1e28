#pragma once

#include "sheaf/partitions.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace sheaf {

// One group of rows of equal length: `plus` rows starting with +, `minus` with -.
struct Row {
  int length = 0;
  int plus = 0;
  int minus = 0;
  bool operator==(const Row&) const = default;
  auto operator<=>(const Row&) const = default;
};

class SignedYoungDiagram {
 public:
  SignedYoungDiagram() = default;
  // Regroups equal lengths, orders by decreasing length and drops empty groups.
  // Throws std::invalid_argument on nonpositive lengths or negative counts.
  explicit SignedYoungDiagram(std::vector<Row> groups);

  // Canonical text: "3- 1+^2"; "0" for the empty diagram. Ungrouped input such
  // as "1+ 1+ 3-" is accepted. Throws std::invalid_argument.
  static SignedYoungDiagram parse(const std::string& text);
  std::string to_string() const;

  const std::vector<Row>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  int size() const;                     // number of boxes
  std::pair<int, int> signature() const;  // (#plus boxes, #minus boxes)
  SignedYoungDiagram sign_swapped() const;

  bool operator==(const SignedYoungDiagram&) const = default;
  auto operator<=>(const SignedYoungDiagram&) const = default;

 private:
  std::vector<Row> rows_;
};

enum class SigmaClass { sigma1 = 1, sigma2 = 2, sigma3 = 3 };

struct DiagramClass {
  SigmaClass cls = SigmaClass::sigma3;
  int a = 0;
  int b = 0;
  int r = 0;
};

std::string to_string(SigmaClass c);

// Sigma: even lengths have p_i = q_i.
bool in_sigma(const SignedYoungDiagram& d);
// Throws std::invalid_argument outside Sigma.
DiagramClass classify(const SignedYoungDiagram& d);
int orbit_multiplicity(const SignedYoungDiagram& d);

std::vector<SignedYoungDiagram> enum_sigma(int p, int q);

// Top-row parity test for odd N. `minus_parity` requires eps_1 + mu_1 = q mod 2;
// `literal_min` requires eps_1 = min(p,q) mod 2.
enum class SigmaBReading { minus_parity, literal_min };

// Rows of an all-odd diagram written one by one as (2 mu + 1) with sign bit eps
// (+ -> 0, - -> 1), mu non-increasing.
struct OddRow {
  int mu = 0;
  int eps = 0;
};
std::vector<OddRow> odd_rows(const SignedYoungDiagram& d);

bool in_sigma_b(const SignedYoungDiagram& d, SigmaBReading reading = SigmaBReading::minus_parity);
// Never contains the empty diagram.
std::vector<SignedYoungDiagram> enum_sigma_b(int p, int q,
                                             SigmaBReading reading = SigmaBReading::minus_parity);

bool in_lambda(const SignedYoungDiagram& d);
bool in_lambda_b(const SignedYoungDiagram& d);
std::vector<SignedYoungDiagram> enum_lambda(int n);
std::vector<SignedYoungDiagram> enum_lambda_b(int n);  // {empty} for n = 0

// Odd parts 2|t|-1, ..., 3, 1, all signed by sgn(t); empty for t = 0.
SignedYoungDiagram mu_t(int t);

SignedYoungDiagram join(const SignedYoungDiagram& a, const SignedYoungDiagram& b);

// 1_+^m 1_-^m 2_+^k 2_-^k
SignedYoungDiagram staircase_base(int m, int k);

bool all_parts_even(const SignedYoungDiagram& d);
// (2mu)_+^{2p} (2mu)_-^{2q} ... -> ((mu^p ...), (mu^q ...)). Throws on odd parts or odd
// per-sign multiplicities.
BiPartition diii_kappa1_bijection(const SignedYoungDiagram& d);
SignedYoungDiagram diii_kappa1_inverse(const BiPartition& bp);

}  // namespace sheaf
