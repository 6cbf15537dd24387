#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qkz/laumon.hpp"
#include "qkz/matrix.hpp"
#include "qkz/param.hpp"
#include "qkz/qseries.hpp"
#include "qkz/scalar.hpp"

namespace qkz {

// Weight parameters; Lambda = t^alpha is carried as the series variable.
struct JacksonParams {
  Rat a1, a2, b1, b2, q, t;
};

// Dictionary to a mass-truncated point: a2 fixed, the rest solved from Q, d1, d4.
inline const Rat kDictionaryA2{3, 5};
JacksonParams jackson_params_from_point(const ParamPoint& p, int m, int n);
// Unconstrained weight parameters drawn from the point's roots.
JacksonParams jackson_params_generic(const ParamPoint& p);

// (a2, a2 q, .., a2 q^{n-1}, a1, .., a1 q^{m-1})
std::vector<Rat> jackson_cycle(const JacksonParams& jp, int m, int n);

// nu with the first n and the last m entries weakly increasing, |nu| <= depth
std::vector<std::vector<int>> cone_points(int m, int n, int depth);

struct WeightRatio {
  Rat value;
  int lambda_degree = 0;
  std::vector<Rat> z;  // xi_i t^{nu_i}
};
// Weight at xi t^nu over the weight at xi, telescoped into finite products.
WeightRatio weight_ratio(const JacksonParams& jp, const std::vector<int>& nu, int m, int n);

// [k]_q!
Rat qfactorial(int k, const Rat& q);

// e-hat_k(a, b; z) as the subset sum with its factorial prefactor
Rat matsuo_e(int k, const Rat& a, const Rat& b, const std::vector<Rat>& z, const Rat& q);
// Sum over all permutations of F(z) prod_{i<j} (z_i - z_j/q)/(z_i - z_j), F with
// (1 - b z) on the first k variables and (1 - z/a) on the rest.
Rat matsuo_e_antisymmetrized(int k, const Rat& a, const Rat& b, const std::vector<Rat>& z, const Rat& q);
// e_k(a, b; (x, xq, .., xq^{N-1})) in the form that the subset sum reproduces:
// [N]_{1/q}! (x/a; q)_k (b x q^k; q)_{N-k}
Rat matsuo_geometric(int N, int k, const Rat& a, const Rat& b, const Rat& x, const Rat& q);

// Raw pairing components: entry s holds sum over the cone of
// weight * extra(z) * e-hat_s(ka, kb; z) Lambda^|nu|, through Lambda^lmax.
std::vector<LambdaSeries> jackson_sum(const JacksonParams& jp, int m, int n, int lmax, const Rat& ka,
                                      const Rat& kb, const std::function<Rat(const std::vector<Rat>&)>& extra,
                                      int guard = 0);
std::vector<LambdaSeries> jackson_sum(const JacksonParams& jp, int m, int n, int lmax, int guard = 0);
// The same, divided by the constant term of the x-degree 0 component.
std::vector<LambdaSeries> jackson_vector(const JacksonParams& jp, int m, int n, int lmax, int guard = 0);

template <Scalar T>
struct Gauss {
  Matrix<T> first, diag, last;  // product first * diag * last
  Matrix<T> product() const { return first * diag * last; }
};

namespace detail {
inline long c2(long x) { return x * (x - 1) / 2; }
template <Scalar T>
T qb0(int n, int k, const T& q) {
  return k < 0 || k > n ? T(0) : qbinom<T>(n, k, q);
}
template <Scalar T>
T sgn_pow(int e) {
  return e % 2 ? T(-1) : T(1);
}
}  // namespace detail

// R = L D U
template <Scalar T>
Gauss<T> ito_R_gauss(const T& a1, const T& a2, const T& b1, const T& b2, const T& q, int N) {
  using detail::c2;
  using detail::qb0;
  const size_t S = N + 1;
  Gauss<T> g{Matrix<T>(S, S), Matrix<T>(S, S), Matrix<T>(S, S)};
  T qi = T(1) / q;
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) {
      if (i >= j)
        g.first(i, j) = qb0<T>(N - j, N - i, qi) * detail::sgn_pow<T>(i - j) * ipow(q, -c2(i - j)) *
                        qpoch<T>(a2 * b2 * ipow(q, j), q, i - j) /
                        qpoch<T>(a2 / a1 * ipow(q, 2 * j + 1 - N), q, i - j);
      if (i <= j)
        g.last(i, j) = qb0<T>(j, i, qi) * qpoch<T>(a1 * b1 * ipow(q, N - j), q, j - i) /
                       qpoch<T>(a1 / a2 * ipow(q, N - i - j), q, j - i);
    }
  for (int j = 0; j <= N; ++j)
    g.diag(j, j) = qpoch<T>(a1 / a2 * ipow(q, -j), q, N - j) * qpoch<T>(a2 * b1, q, j) /
                   (qpoch<T>(a1 * b2, q, N - j) * qpoch<T>(a2 / a1 * ipow(q, j - N), q, j));
  return g;
}

// A = L D U with t^alpha = ta
template <Scalar T>
Gauss<T> ito_A_gauss(const T& a1, const T& a2, const T& b1, const T& b2, const T& q, int N, const T& ta) {
  using detail::c2;
  using detail::qb0;
  const size_t S = N + 1;
  Gauss<T> g{Matrix<T>(S, S), Matrix<T>(S, S), Matrix<T>(S, S)};
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) {
      if (i >= j)
        g.first(i, j) = detail::sgn_pow<T>(i - j) * ipow(q, c2(N - i) - c2(N - j)) * qb0<T>(N - j, N - i, q) *
                        qpoch<T>(a2 * b2 * ipow(q, j), q, i - j) /
                        qpoch<T>(ta * a2 * b2 * ipow(q, 2 * j), q, i - j);
      if (i <= j)
        g.last(i, j) = ipow(T(0) - ta * a2 / a1, j - i) * ipow(q, c2(j) - c2(i)) * qb0<T>(j, i, q) *
                       qpoch<T>(a1 * b1 * ipow(q, N - j), q, j - i) /
                       qpoch<T>(ta * a2 * b2 * ipow(q, 2 * i), q, j - i);
    }
  for (int j = 0; j <= N; ++j)
    g.diag(j, j) = ipow(a1, N - j) * ipow(a2, j) * ipow(q, c2(j) + c2(N - j)) * qpoch<T>(ta, q, j) *
                   qpoch<T>(ta * a2 * b2 * ipow(q, 2 * j), q, N - j) /
                   (qpoch<T>(ta * a2 * b2 * ipow(q, j - 1), q, j) *
                    qpoch<T>(ta * a1 * a2 * b1 * b2 * ipow(q, N + j - 1), q, N - j));
  return g;
}

// R = U' D' L'
template <Scalar T>
Gauss<T> ito_R_gauss_alt(const T& a1, const T& a2, const T& b1, const T& b2, const T& q, int N) {
  using detail::c2;
  using detail::qb0;
  const size_t S = N + 1;
  Gauss<T> g{Matrix<T>(S, S), Matrix<T>(S, S), Matrix<T>(S, S)};
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) {
      if (i <= j)
        g.first(i, j) = qb0<T>(j, i, q) * detail::sgn_pow<T>(j - i) * ipow(q, c2(j - i)) *
                        qpoch<T>(ipow(q, i + 1 - N) / (a1 * b1), q, j - i) /
                        qpoch<T>(b2 / b1 * ipow(q, i + j - N), q, j - i);
      if (i >= j)
        g.last(i, j) = qb0<T>(N - j, N - i, q) * qpoch<T>(ipow(q, 1 - i) / (a2 * b2), q, i - j) /
                       qpoch<T>(b1 / b2 * ipow(q, N - 2 * i + 1), q, i - j);
    }
  for (int j = 0; j <= N; ++j)
    g.diag(j, j) = qpoch<T>(b1 / b2 * ipow(q, N - 2 * j + 1), q, j) *
                   qpoch<T>(ipow(q, j + 1 - N) / (a2 * b1), q, N - j) /
                   (qpoch<T>(ipow(q, 1 - j) / (a1 * b2), q, j) *
                    qpoch<T>(b2 / b1 * ipow(q, 2 * j + 1 - N), q, N - j));
  return g;
}

// A = U' D' L'
template <Scalar T>
Gauss<T> ito_A_gauss_alt(const T& a1, const T& a2, const T& b1, const T& b2, const T& q, int N, const T& ta) {
  using detail::c2;
  using detail::qb0;
  const size_t S = N + 1;
  Gauss<T> g{Matrix<T>(S, S), Matrix<T>(S, S), Matrix<T>(S, S)};
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) {
      if (i <= j)
        g.first(i, j) = ipow(T(0) - ta, j - i) * ipow(q, c2(N - i) - c2(N - j)) * qb0<T>(j, i, q) *
                        qpoch<T>(a1 * b1 * ipow(q, N - j), q, j - i) /
                        qpoch<T>(ta * a1 * b1 * ipow(q, 2 * (N - j)), q, j - i);
      if (i >= j)
        g.last(i, j) = ipow(T(0) - a1 / a2, i - j) * ipow(q, c2(j) - c2(i)) * qb0<T>(N - j, N - i, q) *
                       qpoch<T>(a2 * b2 * ipow(q, j), q, i - j) /
                       qpoch<T>(ta * a1 * b1 * ipow(q, 2 * (N - i)), q, i - j);
    }
  for (int j = 0; j <= N; ++j)
    g.diag(j, j) = ipow(a1, N - j) * ipow(a2, j) * ipow(q, c2(j) + c2(N - j)) *
                   qpoch<T>(ta * a1 * b1 * ipow(q, 2 * (N - j)), q, j) * qpoch<T>(ta, q, N - j) /
                   (qpoch<T>(ta * a1 * a2 * b1 * b2 * ipow(q, 2 * N - j - 1), q, j) *
                    qpoch<T>(ta * a1 * b1 * ipow(q, N - j - 1), q, N - j));
  return g;
}

Matrix<Rat> ito_R(const JacksonParams& jp, int N);
Matrix<Rat> ito_A(const JacksonParams& jp, int N, const Rat& Lambda);
Matrix<LambdaSeries> ito_A(const JacksonParams& jp, int N, const LambdaSeries& Lambda);

// diag((Lambda q^{N-1})^i) and diag((Lambda q^{N-1})^{N-i})
template <Scalar T>
Matrix<T> ito_D2(const T& Lambda, const T& q, int N) {
  std::vector<T> d;
  for (int i = 0; i <= N; ++i) d.push_back(ipow(Lambda * ipow(q, N - 1), i));
  return Matrix<T>::diagonal(d);
}
template <Scalar T>
Matrix<T> ito_D1(const T& Lambda, const T& q, int N) {
  std::vector<T> d;
  for (int i = 0; i <= N; ++i) d.push_back(ipow(Lambda * ipow(q, N - 1), N - i));
  return Matrix<T>::diagonal(d);
}

// R D2 A - A R D2
Matrix<Rat> commutativity_check(const JacksonParams& jp, int N, const Rat& Lambda);

// A and s T(R) D, where T(R) = R(a1, a2 g, b1, b2/g) with g = Lambda q^{N-1} a1 b2
struct AFactorization {
  Matrix<Rat> A, sTRD;
  Rat s;
};
AFactorization a_factorization(const JacksonParams& jp, int N, const Rat& Lambda);

// Residuals of the three difference equations on the raw pairing, one vector each.
struct ItoQkzResiduals {
  std::vector<LambdaSeries> t_alpha, t1, t2;
  bool all_zero() const;
};
ItoQkzResiduals ito_qkz_check(const JacksonParams& jp, int m, int n, int lmax);

// Row vector times matrix over Lambda-series.
std::vector<LambdaSeries> vec_mat(const std::vector<LambdaSeries>& v, const Matrix<LambdaSeries>& M);
Matrix<LambdaSeries> lift(const Matrix<Rat>& M);

// Comparison with the truncated Laumon components.
struct AlJacksonComparison {
  bool equal = false;
  Rat kappa0;                                   // psi_0 ratio after the gauge
  std::vector<int> leading_jackson, leading_al;  // lowest nonzero Lambda order per x-degree
  std::optional<std::pair<int, int>> mismatch;  // (x-degree, Lambda order)
  std::vector<LambdaSeries> gauged;              // rescaled and gauged Jackson components
  std::vector<LambdaSeries> laumon;
};
// Lambda rescaling c = t d1 d4 / q^{N+1} of the Jackson side
Rat jackson_lambda_scale(const ParamPoint& p, int m, int n);
// Gauge g_i dividing the Jackson component of x-degree i
Rat jackson_gauge(const ParamPoint& p, int m, int n, int i);
AlJacksonComparison compare_al_jackson(const ParamPoint& p, int m, int n, int lmax);

}  // namespace qkz
