#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qkz/fourd.hpp"

using namespace qkz;

namespace {

Rat R(long a, long b = 1) { return Rat(a, b); }

}  // namespace

TEST_CASE("exp jet coefficients") {
  HJet e = exp_jet(R(-2), 2);
  CHECK(e[0] == 1);
  CHECK(e[1] == -2);
  CHECK(e[2] == 2);
  CHECK(e.order() == 2);
}

TEST_CASE("first jet order is the tridiagonal closed form") {
  Rat m1 = R(3, 7), m4 = R(-5, 4), L = R(11, 3);
  for (auto [m, n] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
    auto jets = r_jet_orders(m, n, m1, m4, L, 2);
    CHECK(jets[0] == Matrix<Rat>::identity(m + n + 1));
    Masses mv{m1, R(-m), R(-n), m4};
    CHECK(jets[1] == r1_fourd(mv, m, n, L));
  }
}

TEST_CASE("H_4d equals the first order and splits into A0, A1") {
  Rat m1 = R(2, 9), m4 = R(7, 5), L = R(-3, 2), kappa = R(5, 6), a = R(4, 7);
  for (auto [m, n] : {std::pair{1, 0}, {1, 1}, {2, 1}}) {
    Masses mv{m1, R(-m), R(-n), m4};
    H4d h = h4d_matrix(mv, kappa, a, m, n, L);
    CHECK(h.H == r1_fourd(mv, m, n, L));
    CHECK(kz_split_holds(h, kappa, a, L));
    for (int i = 0; i <= m + n; ++i)
      for (int j = 0; j <= m + n; ++j)
        if (std::abs(i - j) > 1) CHECK(h.A1(i, j) == 0);
  }
}

TEST_CASE("split fails for the wrong kappa") {
  Masses mv{R(1, 3), R(-1), R(0), R(2)};
  H4d h = h4d_matrix(mv, R(5, 6), R(4, 7), 1, 0, R(3));
  CHECK_FALSE(kz_split_holds(h, R(5, 6) + 1, R(4, 7), R(3)));
}

TEST_CASE("printed 4x4 case is the negated first order") {
  for (auto [m2, m4, L] : {std::tuple{R(3, 5), R(-7, 2), R(5, 3)}, {R(-2, 9), R(4, 3), R(-1, 4)}}) {
    Masses mv{R(-2), m2, R(-1), m4};
    Matrix<Rat> r1 = r1_fourd(mv, 2, 1, L);
    CHECK(r_jet_orders(2, 1, m2, m4, L, 1)[1] == r1);
    CHECK(R(-1) * r1_printed_example(m2, m4, L) == r1);
    CHECK_FALSE(r1_printed_example(m2, m4, L) == r1);
  }
}

TEST_CASE("window must close") {
  Masses bad{R(1, 3), R(1, 2), R(-1), R(2)};
  CHECK_THROWS_AS(r1_fourd(bad, 1, 1, R(2)), DomainError);
  Masses ok{R(1, 3), R(-1), R(-1), R(2)};
  CHECK_THROWS_AS(r1_fourd(ok, 1, 1, R(1)), DomainError);
  CHECK_NOTHROW(r1_fourd(ok, 1, 1, R(2)));
}

TEST_CASE("spin form after the solved gauge") {
  Masses mv{R(2, 7), R(-1), R(5, 3), R(-4, 9)};
  Rat kappa = R(3, 8), a = R(5, 11);
  SpinGauge g = spin_gauge_solved(mv, kappa, a);
  CHECK(g.e1 == 0);
  for (auto [x, z, s, r] : {std::tuple{R(3), R(5, 2), R(7, 4), R(2, 9)}, {R(-2, 3), R(7), R(1, 5), R(-3)}})
    CHECK(spin_form_difference(mv, kappa, a, g, x, z, s, r) == 0);
}

TEST_CASE("printed gauge does not produce the spin form") {
  Masses mv{R(2, 7), R(-1), R(5, 3), R(-4, 9)};
  Rat kappa = R(3, 8), a = R(5, 11);
  SpinGauge g = spin_gauge_printed(mv, kappa, a);
  CHECK(spin_form_difference(mv, kappa, a, g, R(3), R(5, 2), R(7, 4), R(2, 9)) != 0);
}

TEST_CASE("KZ symbol at the trivial point") {
  // x = z kills the P12 term and gives P34 weight one
  Rat v = kz_symbol(R(2), R(2), R(1), R(1), R(1), R(0), {R(0), R(0)}, {R(0), R(0)});
  CHECK(v == 1 - 1 + 1);
}
