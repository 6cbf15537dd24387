#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qkz/laumon.hpp"

using namespace qkz;

namespace {

Rat R(long a, long b = 1) { return Rat(a, b); }

// Brute-force partitions by recursion on the largest part.
int count_partitions(int n, int maxpart) {
  if (n == 0) return 1;
  int c = 0;
  for (int k = std::min(n, maxpart); k >= 1; --k) c += count_partitions(n - k, k);
  return c;
}

}  // namespace

TEST_CASE("partition enumeration") {
  for (int n = 0; n <= 10; ++n) CHECK(static_cast<int>(partitions_of(n).size()) == count_partitions(n, n));
  CHECK(partitions_of(4).front().parts == std::vector<int>{4});
  CHECK(partitions_of(4).back().parts == std::vector<int>{1, 1, 1, 1});
  CHECK(enumerate_pairs(4).size() == 20);
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
}

TEST_CASE("transpose is an involution") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& p : partitions_of(n)) {
      CHECK(p.transpose().transpose() == p);
      CHECK(p.transpose().size() == n);
      CHECK(p.odd_sum() + p.even_sum() == n);
    }
  CHECK(Partition({3, 1}).transpose().parts == std::vector<int>{2, 1, 1});
}

TEST_CASE("bracket is v^{-1/2} - v^{1/2}") {
  ParamPoint p = sample_generic_point(4);
  Rat su = R(3, 5);
  Rat v_half = su * p.sqrt_q() * p.sqrt_kappa();
  CHECK(nek_bracket(su, p, 1, 1) == 1 / v_half - v_half);
  CHECK(nek_bracket(su, p, 0, 0) == 1 / su - su);
}

TEST_CASE("bracket and floor forms agree on all small pairs") {
  ParamPoint p = sample_generic_point(6);
  Rat su = R(7, 3);
  for (int total = 0; total <= 5; ++total)
    for (const auto& pr : enumerate_pairs(total))
      for (int n = 1; n <= 4; ++n) {
        Rat prod = 1;
        for (int k = 0; k < n; ++k) {
          Rat a = nek_orb(k, n, pr.first, pr.second, su, p);
          CHECK(a == nek_orb_floor(k, n, pr.first, pr.second, su, p));
          prod *= a;
        }
        CHECK(prod == nek_box_total(pr.first, pr.second, su, p));
      }
}

TEST_CASE("residue classes are taken mod n") {
  ParamPoint p = sample_generic_point(8);
  Partition l({3, 2}), m({2, 2, 1});
  CHECK(nek_orb(5, 3, l, m, R(2, 9), p) == nek_orb(2, 3, l, m, R(2, 9), p));
  CHECK(nek_orb(-1, 3, l, m, R(2, 9), p) == nek_orb(2, 3, l, m, R(2, 9), p));
}

TEST_CASE("empty pair has weight one") {
  ParamPoint p = sample_generic_point(9);
  CHECK(nek_box_total(Partition(), Partition(), R(5, 2), p) == 1);
  PartitionPair e{};
  CHECK(z_al_pair_weight(e, p) == 1);
  CHECK(pair_x1_degree(e) == 0);
  CHECK(pair_x2_degree(e) == 0);
}

TEST_CASE("affine Laumon expansion") {
  ParamPoint p = sample_generic_point(1);
  ConeSeries z = z_al(p, 3, 3);
  CHECK(z.at(0, 0) == 1);
  CHECK(z.at(1, 0) != 0);
  CHECK(z.at(0, 1) != 0);
  CHECK(z_al(p, 2, 2) == z.restrict(2, 2));
}

TEST_CASE("mass truncation keeps the window") {
  for (auto [m, n] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 1}}) {
    ParamPoint p = sample_generic_point(3).with_masses(m, n);
    TruncatedZal z = z_al_truncated(m, n, p, 3);
    CHECK(static_cast<int>(z.comps.size()) == m + n + 1);
    CHECK(z.component(0)[0] == 1);
    CHECK(z.vanishing_pairs > 0);
    CHECK(z.pairs > z.vanishing_pairs);
  }
}

TEST_CASE("truncated components reproduce the full expansion") {
  // with d2 = q^-1, d3 = 1 the x-degree -l..1 coefficients of Z are the components
  ParamPoint p = sample_generic_point(3).with_masses(1, 0);
  TruncatedZal z = z_al_truncated(1, 0, p, 3);
  ConeSeries full = z_al(p, 4, 3);
  for (int a = 0; a <= 1; ++a)
    for (int l = 0; l <= 3; ++l) CHECK(full.at(a + l, l) == z.component(a)[l]);
  for (int l = 0; l <= 3; ++l)
    for (int k = l + 2; k <= 4; ++k) CHECK(full.at(k, l) == 0);
}
