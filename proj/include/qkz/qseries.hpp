#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qkz/scalar.hpp"

namespace qkz {

// (a;q)_n
template <Scalar T>
T qpoch(const T& a, const T& q, int n) {
  if (n < 0) throw DomainError("qpoch needs n >= 0");
  T r(1), x = a;
  for (int i = 0; i < n; ++i) {
    r = r * (T(1) - x);
    if (i + 1 < n) x = x * q;
  }
  return r;
}

// [u;q]_n = u^{-n/2} q^{-n(n-1)/4} (u;q)_n from the square roots
template <Scalar T>
T qbracket_poch(const T& sqrt_u, const T& sqrt_q, int n) {
  if (!is_invertible(sqrt_u) || !is_invertible(sqrt_q)) throw DomainError("qbracket_poch: zero root");
  T u = sqrt_u * sqrt_u, q = sqrt_q * sqrt_q;
  return ipow(sqrt_u, -n) * ipow(sqrt_q, -static_cast<long>(n) * (n - 1) / 2) * qpoch(u, q, n);
}

template <Scalar T>
T qbinom(int n, int k, const T& q) {
  if (k < 0 || k > n) throw DomainError("qbinom: k out of range");
  T r(1), qi = q, qn = ipow(q, n - k + 1);
  for (int i = 1; i <= k; ++i) {
    T den = T(1) - qi;
    if (!is_invertible(den)) throw DomainError("qbinom: q is a root of unity");
    r = r * (T(1) - qn) / den;
    qi = qi * q;
    qn = qn * q;
  }
  return r;
}

// Coefficients of phi(c z) = (c z;q)_inf, or of its inverse, to z^K
template <Scalar T>
std::vector<T> phi_coeffs(const T& c, const T& q, bool inverted, int K) {
  if (K < 0) throw DomainError("phi_coeffs needs K >= 0");
  std::vector<T> out;
  T qq(1), cj(1), sign(1);
  for (int j = 0; j <= K; ++j) {
    if (j > 0) {
      qq = qq * (T(1) - ipow(q, j));
      cj = cj * c;
      sign = -sign;
    }
    if (!is_invertible(qq)) throw DomainError("phi_coeffs: (q;q)_j vanishes");
    if (inverted)
      out.push_back(cj / qq);
    else
      out.push_back(sign * ipow(q, static_cast<long>(j) * (j - 1) / 2) * cj / qq);
  }
  return out;
}

// The finite sum of the hypergeometric R-matrix entry
template <Scalar T>
T r_hg_entry(int i, int j, int N, const T& z, const T& alpha, const T& beta, const T& q) {
  if (i < 0 || j < 0 || i > N || j > N) throw DomainError("r_hg_entry: index out of range");
  auto P = [&](const T& a, int n) { return qpoch(a, q, n); };
  auto need = [](const T& x, const char* what) {
    if (!is_invertible(x)) throw DomainError(std::string("r_hg_entry: vanishing factor ") + what);
  };
  T den = P(q, j) * P(q, N - j) * P(T(1) / z, N) * P(T(1) / beta, N - i);
  need(den, "in the prefactor");
  T pre = ipow(beta, -j) * P(q, N) * P(alpha / z, N - i) * P(T(1) / beta, N - j) * P(beta / z, j) / den;
  T s(0);
  for (int k = 0; k <= j; ++k) {
    T kd = P(q, k) * P(ipow(q, -N), k) * P(ipow(q, 1 + i - N) * z / alpha, k) *
           P(ipow(q, 1 - j) * z / beta, k);
    need(kd, "in the summand");
    s = s + P(ipow(q, -j), k) * P(ipow(q, i - N), k) * P(ipow(q, 1 - N) * z, k) *
                P(z / (alpha * beta), k) * ipow(q, k) / kd;
  }
  return pre * s;
}

inline Rat qpoch(const Rat& a, const Rat& q, int n) { return qpoch<Rat>(a, q, n); }
inline Rat qbracket_poch(const Rat& su, const Rat& sq, int n) { return qbracket_poch<Rat>(su, sq, n); }
inline Rat qbinom(int n, int k, const Rat& q) { return qbinom<Rat>(n, k, q); }
inline std::vector<Rat> phi_coeffs(const Rat& c, const Rat& q, bool inverted, int K) {
  return phi_coeffs<Rat>(c, q, inverted, K);
}
inline Rat r_hg_entry(int i, int j, int N, const Rat& z, const Rat& alpha, const Rat& beta, const Rat& q) {
  return r_hg_entry<Rat>(i, j, N, z, alpha, beta, q);
}

// (c Lambda; q, t)_inf truncated at Lambda^L
LambdaSeries dbl_qt_poch_series(const Rat& c, const Rat& q, const Rat& t, int L);

// 2phi1(a, b; c; base, z) truncated at z^order
LambdaSeries heine_2phi1(const Rat& a, const Rat& b, const Rat& c, const Rat& base, int z_order);

// Terminating very-well-poised sum with `terms`+1 summands:
// sum_k (a)_k prod (p)_k / ((q)_k prod (qa/p)_k) (1-aq^{2k})/(1-a) z^k
Rat vwp_sum(const Rat& a, const std::vector<Rat>& params, const Rat& q, const Rat& z, int terms);

// 10W9(a; b,c,d,e,f,g,q^-n; q, q)
Rat w10_9(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e, const Rat& f,
          const Rat& g, int n, const Rat& q);

// g forced by q^2 a^3 = b c d e f g q^-n
Rat bailey_balanced_g(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e,
                      const Rat& f, int n, const Rat& q);

// Both sides of Bailey's 10W9 transformation; g must satisfy the balancing condition.
std::pair<Rat, Rat> bailey_check(const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                                 const Rat& e, const Rat& f, const Rat& g, int n, const Rat& q);

// 6W5 summation instance: (sum, closed product) for the pair (i, j), j <= i
std::pair<Rat, Rat> w6_5_check(const Rat& a, const Rat& b, const Rat& c, int i, int j, const Rat& q);

// Pascal kernel C_{N,r}(a,b,c) of the binomial expansion and its recursion check
Rat binomial_kernel(int N, int r, const Rat& a, const Rat& b, const Rat& c, const Rat& q);
Rat binomial_kernel_step(int N, int r, const Rat& a, const Rat& b, const Rat& c, const Rat& q);

}  // namespace qkz
