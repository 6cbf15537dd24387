#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qkz/laumon.hpp"
#include "qkz/rmatrix.hpp"

using namespace qkz;

namespace {

Rat R(long a, long b = 1) { return Rat(a, b); }

struct Pt {
  Rat q, d1, d4, L;
};

Pt point(std::uint64_t s) {
  ParamPoint p = sample_generic_point(s);
  return {p.q(), p.d(1), p.d(4), p.rt * p.rQ};
}

bool all_zero(const std::vector<LambdaSeries>& v) {
  for (const auto& s : v)
    if (!s.coeffs().empty()) return false;
  return true;
}

}  // namespace

TEST_CASE("three constructions of the truncated R-matrix agree") {
  for (std::uint64_t s : {1u, 2u}) {
    Pt p = point(s);
    for (auto [m, n] : {std::pair{1, 0}, {0, 1}, {2, 0}, {1, 1}, {2, 1}, {1, 2}}) {
      Matrix<Rat> lin = r_via_linear_system<Rat>(m, n, p.d1, p.d4, p.L, p.q);
      CHECK(lin.rows() == static_cast<size_t>(m + n + 1));
      CHECK(r_defining_relation_holds<Rat>(m, n, lin, p.d1, p.d4, p.L, p.q));
      CHECK(r_closed_form(m, n, p.d1, p.d4, p.L, p.q) == lin);
      CHECK(r_hg_matrix(m, n, p.d1, p.d4, p.L, p.q) == lin);
    }
  }
}

TEST_CASE("defining relation rejects a perturbed matrix") {
  Pt p = point(4);
  Matrix<Rat> r = r_via_linear_system<Rat>(2, 1, p.d1, p.d4, p.L, p.q);
  r(1, 2) += R(1, 1000);
  CHECK_FALSE(r_defining_relation_holds<Rat>(2, 1, r, p.d1, p.d4, p.L, p.q));
}

TEST_CASE("example displays") {
  for (std::uint64_t s : {3u, 5u, 8u}) {
    Pt p = point(s);
    CHECK(r_example_2x2(p.d1, p.d4, p.L, p.q) == r_via_linear_system<Rat>(1, 0, p.d1, p.d4, p.L, p.q));
    CHECK(r_example_3x3(p.d1, p.d4, p.L, p.q) == r_via_linear_system<Rat>(2, 0, p.d1, p.d4, p.L, p.q));
  }
}

TEST_CASE("zero window is the trivial matrix") {
  Pt p = point(1);
  CHECK(r_via_linear_system<Rat>(0, 0, p.d1, p.d4, p.L, p.q) == Matrix<Rat>::identity(1));
}

TEST_CASE("linear system over jets reduces to the identity at h = 0") {
  Matrix<HJet> r = r_via_linear_system<HJet>(1, 1, exp_jet(R(2, 3), 2), exp_jet(R(-5, 2), 2), HJet(R(7, 3)),
                                             exp_jet(R(1), 2));
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) CHECK(r(i, j)[0] == (i == j ? 1 : 0));
}

TEST_CASE("q-KZ residual vanishes on the Laumon components") {
  for (auto [m, n] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 1}}) {
    ParamPoint p = sample_generic_point(2).with_masses(m, n);
    CHECK(all_zero(qkz_residual(m, n, p, 3)));
  }
}

TEST_CASE("q-KZ residual detects wrong components") {
  ParamPoint p = sample_generic_point(2).with_masses(1, 1);
  TruncatedZal z = z_al_truncated(1, 1, p, 3);
  z.comps[2] = z.comps[2] + LambdaSeries(std::vector<Rat>{0, 0, 1}, 3);
  CHECK_FALSE(all_zero(qkz_residual(z, p)));
}

TEST_CASE("fundamental solution and dual equation") {
  for (auto [m, n] : {std::pair{1, 0}, {1, 1}}) {
    ParamPoint p = sample_generic_point(3).with_masses(m, n);
    Matrix<LambdaSeries> Y = qkz_fundamental_solution(m, n, p, 3);
    for (int k = 0; k <= m + n; ++k) CHECK(Y(k, k)[0] == 1);
    CHECK(dual_qkz_residual(m, n, p, 3).is_zero_matrix());
    TruncatedZal z = z_al_truncated(m, n, p, 3);
    for (int j = 0; j <= m + n; ++j) CHECK(Y(n, j) == z.comps[j]);
  }
}

TEST_CASE("Heine pair") {
  ParamPoint p = sample_generic_point(6).with_masses(1, 0);
  auto h = heine_solution(p, 4);
  TruncatedZal z = z_al_truncated(1, 0, p, 4);
  // proportional by cross-multiplication
  CHECK(h[0] * z.comps[1] == h[1] * z.comps[0]);
  auto d = heine_dual_residual(R(3, 4), R(5, 2), R(7, 9), p.t(), 4);
  CHECK(all_zero(d.shift_z1));
  CHECK(all_zero(d.shift_z2));
}
