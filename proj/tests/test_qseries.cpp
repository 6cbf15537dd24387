#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qkz/param.hpp"
#include "qkz/qseries.hpp"

using namespace qkz;

namespace {

Rat R(long a, long b = 1) { return Rat(a, b); }

}  // namespace

TEST_CASE("q-Pochhammer frozen values") {
  CHECK(qpoch(R(1, 2), R(1, 3), 0) == 1);
  CHECK(qpoch(R(1, 2), R(1, 3), 3) == R(85, 216));
  CHECK(qpoch(R(3), R(2), 2) == R(10));  // (1-3)(1-6)
  CHECK_THROWS_AS(qpoch(R(1, 2), R(1, 3), -1), DomainError);
}

TEST_CASE("bracket Pochhammer from square roots") {
  CHECK(qbracket_poch(R(2), R(3), 2) == R(35, 4));
  CHECK(qbracket_poch(R(2), R(3), 0) == 1);
  // [u;q]_1 = u^{-1/2} - u^{1/2}
  CHECK(qbracket_poch(R(5, 7), R(3, 2), 1) == R(7, 5) - R(5, 7));
  CHECK_THROWS_AS(qbracket_poch(R(0), R(3), 1), DomainError);
}

TEST_CASE("q-binomial: Pascal recursion and symmetry") {
  Rat q = R(2, 7);
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      Rat pascal = (k ? qbinom(n - 1, k - 1, q) : Rat(0)) + (k < n ? ipow(q, k) * qbinom(n - 1, k, q) : Rat(0));
      CHECK(qbinom(n, k, q) == pascal);
      CHECK(qbinom(n, k, q) == qbinom(n, n - k, q));
    }
  CHECK_THROWS_AS(qbinom(3, 4, q), DomainError);
}

TEST_CASE("q-binomial theorem for finite products") {
  Rat q = R(3, 5), x = R(7, 4);
  for (int n = 0; n <= 6; ++n) {
    Rat s;
    for (int k = 0; k <= n; ++k)
      s += qbinom(n, k, q) * ipow(R(-1), k) * ipow(q, static_cast<long>(k) * (k - 1) / 2) * ipow(x, k);
    CHECK(s == qpoch(x, q, n));
  }
}

TEST_CASE("phi coefficients") {
  CHECK(phi_coeffs(R(1), R(1, 2), true, 2)[2] == R(8, 3));
  CHECK(phi_coeffs(R(1), R(1, 2), false, 2)[1] == R(-2));
  // phi(cz) * phi(cz)^{-1} == 1
  Rat c = R(5, 3), q = R(2, 9);
  const int K = 8;
  auto a = phi_coeffs(c, q, false, K), b = phi_coeffs(c, q, true, K);
  for (int n = 0; n <= K; ++n) {
    Rat s;
    for (int j = 0; j <= n; ++j) s += a[j] * b[n - j];
    CHECK(s == (n == 0 ? 1 : 0));
  }
  // phi(cz) = (1 - cz) phi(cqz)
  for (int n = 1; n <= K; ++n) CHECK(a[n] == a[n] * ipow(q, n) - c * a[n - 1] * ipow(q, n - 1));
}

TEST_CASE("double Pochhammer series satisfies its q-difference equation") {
  Rat c = R(3, 7), q = R(2, 5), t = R(9, 4);
  const int L = 6;
  LambdaSeries F = dbl_qt_poch_series(c, q, t, L);
  LambdaSeries phi_t(phi_coeffs(c, t, false, L), L);
  CHECK(F == phi_t * F.scale_var(q));
  CHECK(F[1] == -c / ((1 - q) * (1 - t)));
}

TEST_CASE("2phi1 coefficients against the Pochhammer ratio") {
  Rat a = R(2, 3), b = R(5, 7), c = R(11, 2), base = R(3, 13);
  LambdaSeries h = heine_2phi1(a, b, c, base, 6);
  for (int n = 0; n <= 6; ++n)
    CHECK(h[n] == qpoch(a, base, n) * qpoch(b, base, n) / (qpoch(c, base, n) * qpoch(base, base, n)));
  CHECK(heine_2phi1(R(1), b, c, base, 4) == LambdaSeries(std::vector<Rat>{1}, 4));
}

TEST_CASE("10W9 transformation") {
  ParamPoint p = sample_generic_point(21);
  Rat a = R(5, 3), b = R(2, 7), c = R(9, 4), d = R(3, 11), e = R(13, 6), f = R(7, 5), q = p.q();
  for (int n = 0; n <= 4; ++n) {
    Rat g = bailey_balanced_g(a, b, c, d, e, f, n, q);
    CHECK(q * q * a * a * a == b * c * d * e * f * g * ipow(q, -n));
    auto [lhs, rhs] = bailey_check(a, b, c, d, e, f, g, n, q);
    CHECK(lhs == rhs);
  }
  CHECK(w10_9(a, b, c, d, e, f, bailey_balanced_g(a, b, c, d, e, f, 0, q), 0, q) == 1);
}

TEST_CASE("10W9 check rejects an unbalanced g") {
  Rat a = R(5, 3), b = R(2, 7), c = R(9, 4), d = R(3, 11), e = R(13, 6), f = R(7, 5), q = R(3, 8);
  Rat g = bailey_balanced_g(a, b, c, d, e, f, 2, q) * R(17, 16);
  CHECK_THROWS_AS(bailey_check(a, b, c, d, e, f, g, 2, q), DomainError);
}

TEST_CASE("6W5 summation instances") {
  Rat a = R(7, 2), b = R(3, 5), c = R(11, 9), q = R(4, 7);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= i; ++j) {
      auto [s, closed] = w6_5_check(a, b, c, i, j, q);
      CHECK(s == closed);
    }
}

TEST_CASE("binomial kernel Pascal step") {
  Rat a = R(2, 3), b = R(7, 5), c = R(3, 11), q = R(5, 13);
  for (int N = 0; N <= 5; ++N)
    for (int r = 0; r <= N + 1; ++r) CHECK(binomial_kernel_step(N, r, a, b, c, q) == binomial_kernel(N + 1, r, a, b, c, q));
  CHECK(binomial_kernel(0, 0, a, b, c, q) == 1);
  CHECK(binomial_kernel(3, 4, a, b, c, q) == 0);
}

TEST_CASE("very-well-poised sum with no terms is one") {
  CHECK(vwp_sum(R(3, 2), {R(5, 7)}, R(1, 3), R(2), 0) == 1);
  CHECK_THROWS_AS(vwp_sum(R(1), {}, R(1, 3), R(2), 2), DomainError);
}
