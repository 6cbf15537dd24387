#pragma once

#include <vector>

#include "qkz/laumon.hpp"
#include "qkz/matrix.hpp"
#include "qkz/param.hpp"
#include "qkz/qseries.hpp"
#include "qkz/scalar.hpp"

namespace qkz {

template <Scalar T>
class LaurentPolyX {
 public:
  LaurentPolyX() = default;
  LaurentPolyX(int lo, std::vector<T> c) : lo_(lo), c_(std::move(c)) {}
  static LaurentPolyX monomial(int deg, const T& c) { return LaurentPolyX(deg, {c}); }

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  T coeff(int deg) const {
    int i = deg - lo_;
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : T(0);
  }

  friend LaurentPolyX operator*(const LaurentPolyX& a, const LaurentPolyX& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return LaurentPolyX(a.lo_ + b.lo_, std::move(r));
  }

 private:
  int lo_ = 0;
  std::vector<T> c_;
};

// (c x^deg; q)_n as a Laurent polynomial
template <Scalar T>
LaurentPolyX<T> poch_poly(const T& c, const T& q, int n, int deg) {
  LaurentPolyX<T> r = LaurentPolyX<T>::monomial(0, T(1));
  T ci = c;
  for (int i = 0; i < n; ++i) {
    std::vector<T> f(std::abs(deg) + 1, T(0));
    if (deg >= 0) {
      f[0] = T(1);
      f[deg] = f[deg] - ci;
      r = r * LaurentPolyX<T>(0, f);
    } else {
      f[-deg] = T(1);
      f[0] = f[0] - ci;
      r = r * LaurentPolyX<T>(deg, f);
    }
    ci = ci * q;
  }
  return r;
}

// Left side of the defining expansion for row i
template <Scalar T>
LaurentPolyX<T> r_lhs_poly(int m, int n, int i, const T& d1, const T& d4, const T& Lambda, const T& q) {
  LaurentPolyX<T> p = LaurentPolyX<T>::monomial(i, ipow(q, static_cast<long>(i) * (i + 1) / 2));
  p = p * poch_poly<T>(-d1 * ipow(q, i - m), q, m - i, 1);
  return p * poch_poly<T>(-d4 * ipow(q, -i - n) * Lambda, q, i + n, -1);
}

// V-basis element j
template <Scalar T>
LaurentPolyX<T> r_basis_poly(int m, int n, int j, const T& Lambda, const T& q) {
  LaurentPolyX<T> p = LaurentPolyX<T>::monomial(j, ipow(q, -static_cast<long>(j) * (j + 1) / 2));
  p = p * poch_poly<T>(-ipow(q, -m), q, m - j, 1);
  return p * poch_poly<T>(-ipow(q, -n) * Lambda, q, j + n, -1);
}

// r_{i,j}, storage index shifted by +n
template <Scalar T>
Matrix<T> r_via_linear_system(int m, int n, const T& d1, const T& d4, const T& Lambda, const T& q) {
  if (m < 0 || n < 0) throw DomainError("r_via_linear_system needs m, n >= 0");
  const int N = m + n + 1;
  Matrix<T> A(N, N), B(N, N);
  for (int j = -n; j <= m; ++j) {
    LaurentPolyX<T> v = r_basis_poly(m, n, j, Lambda, q);
    for (int d = -n; d <= m; ++d) A(d + n, j + n) = v.coeff(d);
  }
  for (int i = -n; i <= m; ++i) {
    LaurentPolyX<T> u = r_lhs_poly(m, n, i, d1, d4, Lambda, q);
    if (u.lo() < -n || u.hi() > m) throw std::logic_error("row polynomial leaves the window");
    for (int d = -n; d <= m; ++d) B(d + n, i + n) = u.coeff(d);
  }
  Matrix<T> X = solve(A, B);  // column i holds row i of r
  Matrix<T> r(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r(i, j) = X(j, i);
  return r;
}

// Re-substitutes r into the expansion; true when every x-degree matches.
template <Scalar T>
bool r_defining_relation_holds(int m, int n, const Matrix<T>& r, const T& d1, const T& d4, const T& Lambda,
                               const T& q) {
  for (int i = -n; i <= m; ++i) {
    LaurentPolyX<T> u = r_lhs_poly(m, n, i, d1, d4, Lambda, q);
    for (int d = -n - 1; d <= m + 1; ++d) {
      T s(0);
      for (int j = -n; j <= m; ++j) s = s + r(i + n, j + n) * r_basis_poly(m, n, j, Lambda, q).coeff(d);
      if (!(s == u.coeff(d))) return false;
    }
  }
  return true;
}

Matrix<Rat> r_closed_form(int m, int n, const Rat& d1, const Rat& d4, const Rat& Lambda, const Rat& q);
Rat r_uw(int m, int n, int i, int k, const Rat& d1, const Rat& d4, const Rat& Lambda, const Rat& q);
Rat r_wv(int m, int n, int k, int j, const Rat& d4, const Rat& Lambda, const Rat& q);
Matrix<Rat> r_hg_matrix(int m, int n, const Rat& d1, const Rat& d4, const Rat& Lambda, const Rat& q);

// The 2x2 and 3x3 example displays, entry by entry
Matrix<Rat> r_example_2x2(const Rat& d1, const Rat& d4, const Rat& Lambda, const Rat& q);
Matrix<Rat> r_example_3x3(const Rat& d1, const Rat& d4, const Rat& Lambda, const Rat& q);

// psi_j(Lambda) - sum_i psi_i(Lambda/t) r_ij(Lambda) (qtQ)^{-i}, one series per j
std::vector<LambdaSeries> qkz_residual(const TruncatedZal& z, const ParamPoint& p);
std::vector<LambdaSeries> qkz_residual(int m, int n, const ParamPoint& p, int lmax);

// Fundamental solution rows of the Lambda-KZ system: row k has leading
// coefficient 1 at column k and eigenvalue (qtQ)^{-(k-n)} q^{(k-n)(k-n+1)}.
Matrix<LambdaSeries> qkz_fundamental_solution(int m, int n, const ParamPoint& p, int order);

Rat dual_v(int m, int n, int i, const ParamPoint& p);
// Residual of the dual equation after clearing (Lambda d1/q^{m+2})^n.
Matrix<LambdaSeries> dual_qkz_residual(int m, int n, const ParamPoint& p, int order);

// Heine pair of the (1,0) truncation at argument t d1 d4 Lambda / q^2
std::vector<LambdaSeries> heine_solution(const ParamPoint& p, int order);

// The dual Heine pair y(z1) with parameters (a, b, z2) over base t, and the
// residuals of its two difference equations (in z1 and in z2).
struct HeineDualResidual {
  std::vector<LambdaSeries> shift_z1, shift_z2;
};
HeineDualResidual heine_dual_residual(const Rat& a, const Rat& b, const Rat& z2, const Rat& t, int order);

}  // namespace qkz
