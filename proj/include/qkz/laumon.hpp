#pragma once

#include <vector>

#include "qkz/cone.hpp"
#include "qkz/param.hpp"
#include "qkz/scalar.hpp"

namespace qkz {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  // 1-based part, zero past the end
  int part(int i) const { return i >= 1 && i <= length() ? parts[i - 1] : 0; }
  Partition transpose() const;
  int odd_sum() const;   // lambda_1 + lambda_3 + ...
  int even_sum() const;  // lambda_2 + lambda_4 + ...
  bool operator==(const Partition& o) const { return parts == o.parts; }
};

struct PartitionPair {
  Partition first, second;
};

// reverse lexicographic order, largest first part first
std::vector<Partition> partitions_of(int n);
std::vector<PartitionPair> enumerate_pairs(int total_size);

// Orbifolded Nekrasov factor, bracket product over transposed diagrams.
// The bracket [u q^a kappa^b] uses sqrt(u) q^a kappa^{b/2} from the fourth roots.
Rat nek_orb(int k, int n, const Partition& lam, const Partition& mu, const Rat& sqrt_u, const ParamPoint& p);
// Same factor from the floor-function lengths.
Rat nek_orb_floor(int k, int n, const Partition& lam, const Partition& mu, const Rat& sqrt_u, const ParamPoint& p);
// Total factor in box-product form times prod v^{-1/2}, i.e. the bracket-normalized total.
Rat nek_box_total(const Partition& lam, const Partition& mu, const Rat& sqrt_u, const ParamPoint& p);
// [u q^a kappa^b] = v^{-1/2} - v^{1/2}
Rat nek_bracket(const Rat& sqrt_u, const ParamPoint& p, int a, int b);

// Weight of a pair without the expansion monomial, and its (x1, x2) degrees.
Rat z_al_pair_weight(const PartitionPair& pr, const ParamPoint& p);
int pair_x1_degree(const PartitionPair& pr);
int pair_x2_degree(const PartitionPair& pr);

ConeSeries z_al(const ParamPoint& p, int kmax, int lmax);

struct MassTruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TruncatedZal {
  int m = 0, n = 0;
  std::vector<LambdaSeries> comps;  // index a + n for x-degree a in [-n, m]
  long pairs = 0, vanishing_pairs = 0;
  const LambdaSeries& component(int a) const { return comps.at(a + n); }
};

// Components psi_a(Lambda); throws MassTruncationError if any coefficient
// outside the window [-n, m] survives.
TruncatedZal z_al_truncated(int m, int n, const ParamPoint& p, int lmax);

}  // namespace qkz
