#include "qkz/qseries.hpp"

namespace qkz {

LambdaSeries dbl_qt_poch_series(const Rat& c, const Rat& q, const Rat& t, int L) {
  if (L < 0) throw DomainError("dbl_qt_poch_series needs L >= 0");
  // log coefficients, then exp through e' = f' e
  std::vector<Rat> f(L + 1), e(L + 1);
  for (int n = 1; n <= L; ++n) {
    Rat den = Rat(n) * (1 - ipow(q, n)) * (1 - ipow(t, n));
    if (sgn(den) == 0) throw DomainError("dbl_qt_poch_series: degenerate q or t");
    f[n] = -ipow(c, n) / den;
  }
  e[0] = 1;
  for (int k = 1; k <= L; ++k) {
    Rat s;
    for (int j = 1; j <= k; ++j) s += Rat(j) * f[j] * e[k - j];
    e[k] = s / k;
  }
  return LambdaSeries(std::move(e), L);
}

LambdaSeries heine_2phi1(const Rat& a, const Rat& b, const Rat& c, const Rat& base, int z_order) {
  if (z_order < 0) throw DomainError("heine_2phi1 needs z_order >= 0");
  std::vector<Rat> r(z_order + 1);
  Rat term = 1;
  r[0] = 1;
  for (int n = 1; n <= z_order; ++n) {
    Rat bn = ipow(base, n - 1);
    Rat den = (1 - base * bn) * (1 - c * bn);
    if (sgn(den) == 0) throw DomainError("heine_2phi1: vanishing denominator Pochhammer");
    term *= (1 - a * bn) * (1 - b * bn) / den;
    r[n] = term;
  }
  return LambdaSeries(std::move(r), z_order);
}

Rat vwp_sum(const Rat& a, const std::vector<Rat>& params, const Rat& q, const Rat& z, int terms) {
  if (a == 1) throw DomainError("vwp_sum: a = 1");
  Rat s, term = 1;
  for (int k = 0; k <= terms; ++k) {
    if (k > 0) {
      Rat qk = ipow(q, k - 1);
      Rat num = (1 - a * qk), den = (1 - q * qk);
      for (const auto& p : params) {
        num *= 1 - p * qk;
        den *= 1 - q * a / p * qk;
      }
      if (sgn(den) == 0) throw DomainError("vwp_sum: vanishing denominator");
      term *= num / den * z;
    }
    s += term * (1 - a * ipow(q, 2 * k)) / (1 - a);
  }
  return s;
}

Rat w10_9(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e, const Rat& f,
          const Rat& g, int n, const Rat& q) {
  if (n < 0) throw DomainError("w10_9 needs n >= 0");
  return vwp_sum(a, {b, c, d, e, f, g, ipow(q, -n)}, q, q, n);
}

Rat bailey_balanced_g(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e,
                      const Rat& f, int n, const Rat& q) {
  return ipow(q, 2 + n) * a * a * a / (b * c * d * e * f);
}

std::pair<Rat, Rat> bailey_check(const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                                 const Rat& e, const Rat& f, const Rat& g, int n, const Rat& q) {
  if (g != bailey_balanced_g(a, b, c, d, e, f, n, q)) throw DomainError("bailey_check: not balanced");
  Rat lhs = w10_9(a, b, c, d, e, f, g, n, q);
  Rat aq = a * q;
  auto P = [&](const Rat& x) { return qpoch(x, q, n); };
  Rat pre = P(aq) * P(aq / (e * f)) * P(aq / (e * g)) * P(aq / (f * g)) /
            (P(aq / e) * P(aq / f) * P(aq / g) * P(aq / (e * f * g)));
  Rat lam = q * a * a / (b * c * d);
  Rat rhs = pre * w10_9(lam, aq / (b * c), aq / (b * d), aq / (c * d), e, f, g, n, q);
  return {lhs, rhs};
}

std::pair<Rat, Rat> w6_5_check(const Rat& a, const Rat& b, const Rat& c, int i, int j, const Rat& q) {
  if (j > i) throw DomainError("w6_5_check needs j <= i");
  int n = i - j;
  Rat A = b * ipow(q, 2 * j);
  Rat sum = vwp_sum(A, {a * ipow(q, i + j), b / c, ipow(q, -n)}, q, c * q / a, n);
  Rat closed = qpoch(a / c, q, n) * qpoch(b * ipow(q, 2 * j + 1), q, n) /
               (qpoch(a / b, q, n) * qpoch(c * ipow(q, 2 * j + 1), q, n)) * ipow(c / b, n);
  return {sum, closed};
}

Rat binomial_kernel(int N, int r, const Rat& a, const Rat& b, const Rat& c, const Rat& q) {
  if (r < 0 || r > N) return 0;
  return ipow(q, static_cast<long>(r) * (r + 1) / 2) * ipow(-b / c, r) * qpoch(q, q, N) /
         (qpoch(q, q, r) * qpoch(q, q, N - r)) * qpoch(a / b, q, r) *
         qpoch(ipow(q, r + 1) * a / c, q, N - r) / qpoch(b * q / c, q, N);
}

// A_r C_{N,r} + B_{r-1} C_{N,r-1}, which should be C_{N+1,r}
Rat binomial_kernel_step(int N, int r, const Rat& a, const Rat& b, const Rat& c, const Rat& q) {
  auto A = [&](int k) -> Rat { return (c - a * ipow(q, N + 1 + k)) / (c - b * ipow(q, N + 1)); };
  auto B = [&](int k) -> Rat { return (b - a * ipow(q, k)) / (b - c * ipow(q, -N - 1)); };
  Rat s;
  if (r <= N) s += A(r) * binomial_kernel(N, r, a, b, c, q);
  if (r >= 1) s += B(r - 1) * binomial_kernel(N, r - 1, a, b, c, q);
  return s;
}

}  // namespace qkz
