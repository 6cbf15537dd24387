#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qkz/cone.hpp"
#include "qkz/laumon.hpp"

using namespace qkz;

namespace {

Rat R(long a, long b = 1) { return Rat(a, b); }

}  // namespace

TEST_CASE("cone series basics") {
  ConeSeries one = ConeSeries::one(3, 2);
  CHECK(one.at(0, 0) == 1);
  CHECK(one.at(1, 0) == 0);
  ConeSeries m = ConeSeries::monomial(3, 2, 2, 1, R(5, 3));
  CHECK(mul(one, m) == m);
  CHECK((m - m).is_zero());
  CHECK(m.restrict(2, 1).at(2, 1) == R(5, 3));
  CHECK(m.first_mismatch(one) == std::make_optional(std::make_pair(0, 0)));
  CHECK_FALSE(m.first_mismatch(m));
}

TEST_CASE("Borel weight on x-degree") {
  Rat q = R(2, 3);
  for (int k = 0; k <= 4; ++k)
    for (int l = 0; l <= 4; ++l) {
      ConeSeries m = ConeSeries::monomial(4, 4, k, l);
      long a = k - l;
      CHECK(borel(m, q).at(k, l) == ipow(q, a * (a + 1) / 2));
      CHECK(borel(borel(m, q), q, -1) == m);
      CHECK(borel(m, q, 1, 2).at(k, l) == ipow(q, (a + 2) * (a + 3) / 2));
    }
}

TEST_CASE("shift multiplies by x and Lambda powers") {
  ConeSeries m = ConeSeries::monomial(3, 3, 1, 3, 1);
  CHECK(shift(m, R(2), R(5)).at(1, 3) == R(125, 4));
}

TEST_CASE("phi multiplication matches the product expansion") {
  // phi(c x) phi(c x)^{-1} = 1 on every axis
  Rat c = R(3, 7), q = R(2, 5);
  for (Axis ax : {Axis::X, Axis::LambdaOverX, Axis::Lambda}) {
    ConeSeries s = mul_phi(mul_phi(ConeSeries::one(4, 4), c, q, ax, false), c, q, ax, true);
    CHECK(s == ConeSeries::one(4, 4));
  }
  // phi(c x) = (1 - c x) phi(c q x)
  ConeSeries lhs = mul_phi(ConeSeries::one(5, 0), c, q, Axis::X, false);
  ConeSeries rhs = mul_axis_series(mul_phi(ConeSeries::one(5, 0), c * q, q, Axis::X, false), {R(1), -c}, Axis::X);
  CHECK(lhs == rhs);
}

TEST_CASE("pentagon expansion and Borel lemmas") {
  Rat al = R(3, 5), be = R(7, 2), q = R(4, 9);
  auto [l, r] = pentagon_sides(al, be, q, 6);
  CHECK(l == r);
  for (int n = -2; n <= 2; ++n) {
    auto [bl, br] = borel_lemma_sides(al, be, q, n, 5);
    CHECK(bl == br);
    auto [il, ir] = borel_inverse_lemma_sides(al, be, q, n, 5);
    CHECK(il == ir);
  }
}

TEST_CASE("solver output satisfies the equation and is stable under enlargement") {
  ParamPoint p = sample_generic_point(2);
  ConeSeries psi = solve_shakirov(p, 4, 4);
  CHECK(psi.at(0, 0) == 1);
  CHECK(equation_op(psi, p) == psi);
  CHECK(solve_shakirov(p, 5, 3).restrict(4, 3) == psi.restrict(4, 3));
  CHECK(solve_shakirov(p, 2, 2) == psi.restrict(2, 2));
}

TEST_CASE("solver diagonal is the closed lambda") {
  ParamPoint p = sample_generic_point(3);
  auto full = solve_equation_full(p, 3, 3);
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) CHECK(full.diagonal[k][l] == equation_lambda(p, k, l));
}

TEST_CASE("solver agrees with the affine Laumon function") {
  for (std::uint64_t s : {1u, 2u}) {
    ParamPoint p = sample_generic_point(s);
    CHECK(solve_shakirov(p, 3, 3) == z_al(p, 3, 3));
  }
}

TEST_CASE("coupled system residuals vanish") {
  ParamPoint p = sample_generic_point(5);
  auto r = coupled_step(p, solve_shakirov(p, 3, 3));
  CHECK(r.residual1.is_zero());
  CHECK(r.residual2.is_zero());
  CHECK_FALSE(r.chi.is_zero());
}

TEST_CASE("coupled residual detects a perturbed solution") {
  ParamPoint p = sample_generic_point(5);
  ConeSeries psi = solve_shakirov(p, 3, 3);
  psi.at(2, 1) += 1;
  auto r = coupled_step(p, psi);
  CHECK_FALSE((r.residual1.is_zero() && r.residual2.is_zero()));
}
