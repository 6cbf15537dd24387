#include "qkz/rmatrix.hpp"

namespace qkz {

Rat r_uw(int m, int n, int i, int k, const Rat& d1, const Rat& d4, const Rat& L, const Rat& q) {
  if (k < i) return 0;
  return ipow(q, (static_cast<long>(i - k) * (2 * m + 1 + i - k)) / 2) * ipow(Rat(-d4), k - i) *
         qpoch(q, q, m - i) / (qpoch(q, q, k - i) * qpoch(q, q, m - k)) *
         qpoch(d1 * L * ipow(q, i - k - n), q, k - i) * qpoch(d1 * d4 * L * ipow(q, -m - n - 1), q, m - k) /
         qpoch(d4 * ipow(q, -m), q, m - i);
}

Rat r_wv(int m, int n, int k, int j, const Rat& d4, const Rat& L, const Rat& q) {
  int s = j + k - m + n;
  if (s < 0) return 0;
  long e = static_cast<long>(j - k - m - n - 1) * s;
  return ipow(q, e / 2) * ipow(Rat(-L), s) * qpoch(q, q, k + n) / (qpoch(q, q, s) * qpoch(q, q, m - j)) *
         qpoch(ipow(q, m + 1) / (d4 * L), q, s) * qpoch(ipow(q, j + 1) / d4, q, m - j) /
         qpoch(ipow(q, -k - n) * L, q, k + n);
}

Matrix<Rat> r_closed_form(int m, int n, const Rat& d1, const Rat& d4, const Rat& L, const Rat& q) {
  const int N = m + n + 1;
  Matrix<Rat> r(N, N);
  for (int i = -n; i <= m; ++i)
    for (int j = -n; j <= m; ++j) {
      Rat s;
      for (int k = -n; k <= m; ++k) s += r_uw(m, n, i, k, d1, d4, L, q) * r_wv(m, n, k, j, d4, L, q);
      r(i + n, j + n) = ipow(q, -i * n) * ipow(Rat(L * d4), i + n) * ipow(q, j) * ipow(L, -j - n) * s;
    }
  return r;
}

Matrix<Rat> r_hg_matrix(int m, int n, const Rat& d1, const Rat& d4, const Rat& L, const Rat& q) {
  const int N = m + n;
  Matrix<Rat> r(N + 1, N + 1);
  Rat z = L / q, alpha = ipow(q, n) / d1, beta = ipow(q, m) / d4;
  for (int i = -n; i <= m; ++i)
    for (int j = -n; j <= m; ++j)
      r(i + n, j + n) = ipow(d1, m - i) * ipow(q, (m + 1) * i) * r_hg_entry(i + n, j + n, N, z, alpha, beta, q);
  return r;
}

Matrix<Rat> r_example_2x2(const Rat& d1, const Rat& d4, const Rat& L, const Rat& q) {
  Matrix<Rat> e(2, 2);
  Rat den = 1 - L / q;
  e(0, 0) = (1 - d1 * L / q) / den;
  e(0, 1) = -(1 - d1) / den;
  e(1, 0) = -L * q * (1 - d4 / q) / den;
  e(1, 1) = q * q * (1 - d4 * L / (q * q)) / den;
  return e;
}

Matrix<Rat> r_example_3x3(const Rat& d1, const Rat& d4, const Rat& L, const Rat& q) {
  auto o = [](const Rat& x) { return Rat(1 - x); };
  Rat q2 = q * q, q3 = q2 * q, q4 = q3 * q, q6 = q3 * q3;
  Rat den = o(L / q2) * o(L / q);
  Matrix<Rat> e(3, 3);
  e(0, 0) = o(d1 * L / q2) * o(d1 * L / q) / den;
  e(0, 1) = -(1 + q) * o(d1) * o(d1 * L / q) / (q * den);
  e(0, 2) = o(d1) * o(d1 * q) / (q * den);
  e(1, 0) = -L * q * o(d4 / q) * o(d1 * L / q) / den;
  e(1, 1) = (q2 * o(d1 * L / q) * o(d4 * L / q2) + L * q * o(d1 * q) * o(d4 / q2)) / den;
  e(1, 2) = -q2 * o(d1 * q) * o(d4 * L / q3) / den;
  e(2, 0) = L * L * q3 * o(d4 / q2) * o(d4 / q) / den;
  e(2, 1) = -L * q4 * (1 + q) * o(d4 / q2) * o(d4 * L / q3) / den;
  e(2, 2) = q6 * o(d4 * L / q4) * o(d4 * L / q3) / den;
  return e;
}

std::vector<LambdaSeries> qkz_residual(const TruncatedZal& z, const ParamPoint& p) {
  const int m = z.m, n = z.n, L = z.comps.empty() ? 0 : z.comps.front().order();
  Rat q = p.q(), t = p.t(), qtQ = q * p.Q() * p.t();
  LambdaSeries lam = LambdaSeries::variable(L);
  Matrix<LambdaSeries> r = r_via_linear_system<LambdaSeries>(m, n, p.d(1), p.d(4), lam, q);
  std::vector<LambdaSeries> res;
  for (int j = -n; j <= m; ++j) {
    LambdaSeries s = z.component(j).truncated(L);
    for (int i = -n; i <= m; ++i)
      s = s - z.component(i).scale_var(Rat(1) / t) * r(i + n, j + n) * LambdaSeries(ipow(qtQ, -i));
    res.push_back(s);
  }
  return res;
}

std::vector<LambdaSeries> qkz_residual(int m, int n, const ParamPoint& p, int lmax) {
  return qkz_residual(z_al_truncated(m, n, p, lmax), p);
}

Matrix<LambdaSeries> qkz_fundamental_solution(int m, int n, const ParamPoint& p, int order) {
  const int N = m + n + 1;
  Rat q = p.q(), t = p.t(), Qv = Rat(1) / (q * t * p.Q());
  Matrix<LambdaSeries> R =
      r_via_linear_system<LambdaSeries>(m, n, p.d(1), p.d(4), LambdaSeries::variable(order), q);
  auto rp = [&](int pw, int i, int j) { return R(i, j)[pw]; };
  std::vector<Rat> D(N), c(N);
  for (int i = 0; i < N; ++i) {
    D[i] = ipow(Qv, i - n);
    c[i] = D[i] * ipow(q, static_cast<long>(i - n) * (i - n + 1));
  }
  Matrix<LambdaSeries> Y(N, N);
  for (int k = 0; k < N; ++k) {
    std::vector<std::vector<Rat>> ys;
    std::vector<Rat> y0(N);
    y0[k] = 1;
    for (int j = k + 1; j < N; ++j) {
      Rat s;
      for (int i = k; i < j; ++i) s += y0[i] * D[i] * rp(0, i, j);
      Rat den = 1 - D[j] * rp(0, j, j) / c[k];
      if (sgn(den) == 0) throw ResonanceError("degenerate exponent collision in the fundamental solution");
      y0[j] = s / c[k] / den;
    }
    ys.push_back(y0);
    for (int l = 1; l <= order; ++l) {
      Rat tl = ipow(t, -l);
      std::vector<Rat> rhs(N), y(N);
      for (int j = 0; j < N; ++j) {
        Rat s;
        for (int pw = 1; pw <= l; ++pw)
          for (int i = 0; i < N; ++i)
            if (sgn(ys[l - pw][i]) != 0) s += ipow(t, -(l - pw)) * ys[l - pw][i] * D[i] * rp(pw, i, j);
        rhs[j] = s / c[k];
      }
      for (int j = 0; j < N; ++j) {
        Rat s = rhs[j];
        for (int i = 0; i < j; ++i) s += y[i] * tl * D[i] * rp(0, i, j) / c[k];
        Rat den = 1 - tl * D[j] * rp(0, j, j) / c[k];
        if (sgn(den) == 0) throw ResonanceError("degenerate exponent collision in the fundamental solution");
        y[j] = s / den;
      }
      ys.push_back(y);
    }
    for (int j = 0; j < N; ++j) {
      std::vector<Rat> cf(order + 1);
      for (int l = 0; l <= order; ++l) cf[l] = ys[l][j];
      Y(k, j) = LambdaSeries(std::move(cf), order);
    }
  }
  return Y;
}

Rat dual_v(int m, int n, int i, const ParamPoint& p) {
  Rat q = p.q(), d1 = p.d(1), d4 = p.d(4), Qv = Rat(1) / (q * p.t() * p.Q());
  return ipow(q, static_cast<long>(i) * (i + 1)) * qpoch(Rat(Qv * ipow(q, 2 + 2 * i)), q, m - i) *
         qpoch(Rat(d4 * Qv * ipow(q, 1 - n)), q, n + i) /
         (qpoch(Rat(Qv * ipow(q, 2 + i) / d1), q, m - i) * qpoch(Rat(Qv * ipow(q, 1 - n + i)), q, n + i));
}

Matrix<LambdaSeries> dual_qkz_residual(int m, int n, const ParamPoint& p, int order) {
  const int N = m + n + 1;
  Rat q = p.q(), d1 = p.d(1), d4 = p.d(4), Qv = Rat(1) / (q * p.t() * p.Q());
  ParamPoint pt = p;
  pt.rQ = p.rQ * p.rt;  // Q -> tQ, so Qv -> Qv/t
  Matrix<LambdaSeries> Y = qkz_fundamental_solution(m, n, p, order);
  Matrix<LambdaSeries> Yt = qkz_fundamental_solution(m, n, pt, order);
  Matrix<Rat> Rt = r_via_linear_system<Rat>(m, n, d1, d4, ipow(q, m + 2) * Qv / d1, q);
  LambdaSeries g = LambdaSeries::variable(order) * LambdaSeries(d1 / ipow(q, m + 2));
  std::vector<LambdaSeries> gp(N);
  gp[0] = LambdaSeries(std::vector<Rat>{Rat(1)}, order);
  for (int j = 1; j < N; ++j) gp[j] = gp[j - 1] * g;
  Matrix<LambdaSeries> res(N, N);
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      LambdaSeries lhs(std::vector<Rat>{}, order);
      for (int j = 0; j < N; ++j) lhs = lhs + Yt(i, j) * gp[j] * LambdaSeries(Rt(j, k));
      res(i, k) = lhs - Y(i, k) * gp[i] * LambdaSeries(dual_v(m, n, i - n, p));
    }
  return res;
}

std::vector<LambdaSeries> heine_solution(const ParamPoint& p, int order) {
  Rat q = p.q(), t = p.t(), Q = p.Q(), d1 = p.d(1), d4 = p.d(4);
  Rat arg = t * d1 * d4 / (q * q);
  LambdaSeries y0 = heine_2phi1(Rat(1) / d1, Q * t / d4, Q * t / q, t, order).scale_var(arg);
  LambdaSeries y1 = heine_2phi1(t / d1, Q * t / d4, Q * t * t / q, t, order).scale_var(arg) *
                    LambdaSeries(-(1 - d1) / (1 - q / (Q * t)));
  return {y0, y1};
}

HeineDualResidual heine_dual_residual(const Rat& a, const Rat& b, const Rat& z2, const Rat& t, int order) {
  using S = LambdaSeries;
  auto Y = [&](const Rat& w2) {
    S y0 = heine_2phi1(a, w2, b * w2, t, order);
    S y1 = heine_2phi1(t * a, w2, t * b * w2, t, order) * S(b * w2 * (1 - Rat(1) / a) / (1 - b * w2));
    return std::vector<S>{y0, y1};
  };
  S z1 = S::variable(order);
  S one(std::vector<Rat>{Rat(1)}, order);
  std::vector<S> y = Y(z2);
  S D1 = z1 * S(a / (b * z2));
  HeineDualResidual out;
  // (1 - a z1/b) Y(t z1) = Y M(z1); the 1/(a z1) entry is cleared by D1
  {
    S l = one - z1 * S(a / b);
    S c0 = y[0] * (one - z1 * S(Rat(1) / b)) + y[1] * D1 * S(1 - Rat(1) / b);
    S c1 = -(y[0] * S(1 - Rat(1) / a) + y[1] * (D1 - S(Rat(1) / (b * z2))));
    out.shift_z1 = {l * y[0].scale_var(t) - c0, l * y[1].scale_var(t) - c1};
  }
  // (1 - t/(b z2)) Y(z2/t) = Y M(t/z2)
  {
    std::vector<S> yd = Y(z2 / t);
    Rat u = t / z2;
    S l(1 - t / (b * z2));
    S c0 = y[0] * S(1 - u / b) + y[1] * D1 * S(1 - Rat(1) / b);
    S c1 = -(y[0] * S(1 - Rat(1) / a) + y[1] * D1 * S(1 - Rat(1) / (a * u)));
    out.shift_z2 = {yd[0] * l - c0, yd[1] * l - c1};
  }
  return out;
}

}  // namespace qkz
