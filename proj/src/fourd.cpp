#include "qkz/fourd.hpp"

#include "qkz/rmatrix.hpp"

namespace qkz {

namespace {

void check_window(const Masses& mv, int m, int n) {
  if (m < 0 || n < 0) throw DomainError("four-dimensional window needs m, n >= 0");
  if ((m + mv[0]) * (m + mv[1]) != 0) throw DomainError("window does not close at x^m: need m1 or m2 = -m");
  if ((n + mv[2]) * (n + mv[3]) != 0) throw DomainError("window does not close at x^-n: need m3 or m4 = -n");
}

}  // namespace

Matrix<Rat> r1_fourd(const Masses& mv, int m, int n, const Rat& Lambda) {
  if (Lambda == 1) throw DomainError("r1_fourd at Lambda = 1");
  check_window(mv, m, n);
  const auto& [m1, m2, m3, m4] = mv;
  const int N = m + n + 1;
  Rat den = Lambda - 1;
  Matrix<Rat> r(N, N);
  for (int i = -n; i <= m; ++i) {
    Rat up = (i + m1) * (i + m2), dn = (i - m3) * (i - m4);
    r(i + n, i + n) = -Lambda * (up + dn) / den + i * (i + 1);
    if (i > -n) r(i + n, i + n - 1) = Lambda * dn / den;
    if (i < m) r(i + n, i + n + 1) = up / den;
  }
  return r;
}

std::vector<Matrix<Rat>> r_jet_orders(int m, int n, const Rat& m1, const Rat& m4, const Rat& Lambda, int order) {
  Matrix<HJet> r = r_via_linear_system<HJet>(m, n, exp_jet(m1, order), exp_jet(m4, order), HJet(Lambda),
                                             exp_jet(Rat(1), order));
  std::vector<Matrix<Rat>> out;
  for (int k = 0; k <= order; ++k) {
    Matrix<Rat> c(r.rows(), r.cols());
    for (size_t i = 0; i < r.rows(); ++i)
      for (size_t j = 0; j < r.cols(); ++j) c(i, j) = r(i, j)[k];
    out.push_back(std::move(c));
  }
  return out;
}

H4d h4d_matrix(const Masses& mv, const Rat& kappa, const Rat& a, int m, int n, const Rat& Lambda) {
  if (Lambda == 0 || Lambda == 1) throw DomainError("h4d_matrix at Lambda = 0 or 1");
  check_window(mv, m, n);
  const auto& [m1, m2, m3, m4] = mv;
  const int N = m + n + 1;
  H4d h{Matrix<Rat>(N, N), Matrix<Rat>(N, N), Matrix<Rat>(N, N), Matrix<Rat>(N, N)};
  Rat omL = 1 - Lambda;
  for (int i = -n; i <= m; ++i) {
    const int s = i + n;
    Rat up = (i + m1) * (i + m2), dn = (i - m3) * (i - m4);
    h.theta(s, s) = i;
    // theta(theta+1) + (Lambda - x)/(1-Lambda) P + (Lambda/x)(x-1)/(1-Lambda) M
    h.H(s, s) = i * (i + 1) + Lambda * up / omL + Lambda * dn / omL;
    h.A0(s, s) = i * (i - kappa - a);
    h.A1(s, s) = -up - dn;
    if (i < m) {
      h.H(s, s + 1) = -up / omL;
      h.A0(s, s + 1) = -up;
      h.A1(s, s + 1) = up;
    }
    if (i > -n) {
      h.H(s, s - 1) = -Lambda * dn / omL;
      h.A1(s, s - 1) = dn;
    }
  }
  return h;
}

bool kz_split_holds(const H4d& h, const Rat& kappa, const Rat& a, const Rat& Lambda) {
  Matrix<Rat> lhs = h.H - (kappa + 1 + a) * h.theta;
  Matrix<Rat> rhs = h.A0 + (Lambda / (Lambda - 1)) * h.A1;
  return lhs == rhs;
}

Matrix<Rat> r1_printed_example(const Rat& m2, const Rat& m4, const Rat& L) {
  Matrix<Rat> P(4, 4);
  Rat d = L - 1;
  P(0, 0) = -3 * (L * m2 - L) / d;
  P(0, 1) = 3 * (m2 - 1) / d;
  P(1, 0) = L * m4 / d;
  P(1, 1) = -(2 * L * m2 + L * m4) / d;
  P(1, 2) = 2 * m2 / d;
  P(2, 1) = 2 * L * (m4 - 1) / d;
  P(2, 2) = -(L + L * m2 + 2 * L * m4 - 2) / d;
  P(2, 3) = -(-m2 - 1) / d;
  P(3, 2) = 3 * (L * m4 - 2 * L) / d;
  P(3, 3) = -3 * (L * m4 - 2) / d;
  return P;
}

Rat kz_symbol(const Rat& x, const Rat& z, const Rat& s, const Rat& r, const Rat& kappa, const Rat& A,
              const std::array<Rat, 2>& c12, const std::array<Rat, 2>& c34) {
  return kappa * r - s * (s - A) + (x - z) / (1 - z) * (s + c12[0]) * (s + c12[1]) +
         z * (1 - x) / (x * (1 - z)) * (s + c34[0]) * (s + c34[1]);
}

Rat spin_form_difference(const Masses& mv, const Rat& kappa, const Rat& a, const SpinGauge& g, const Rat& x,
                         const Rat& z, const Rat& s, const Rat& r) {
  const auto& [m1, m2, m3, m4] = mv;
  Rat at = a + kappa;
  Rat j1 = (-m1 - m3) / 2, j2 = (at - 1 + m1 - m3) / 2, j3 = (at - 1 + m2 - m4) / 2, j4 = (-m2 - m4) / 2;
  Rat spin = kz_symbol(x, z, s, r, kappa, 1, {-j1 + j2, j3 - j4}, {j1 + j2, j3 + j4});
  Rat mass = kz_symbol(x, z, s + g.c, r + g.e2 + g.e1 * z / (z - 1), kappa, at, {m1, m2}, {-m3, -m4});
  return mass - spin;
}

SpinGauge spin_gauge_solved(const Masses&, const Rat& kappa, const Rat& a) {
  Rat at = a + kappa;
  return {(at - 1) / 2, 0, (1 - at * at) / (4 * kappa)};
}

SpinGauge spin_gauge_printed(const Masses& mv, const Rat& kappa, const Rat& a) {
  const auto& [m1, m2, m3, m4] = mv;
  Rat at = a + kappa;
  return {-m3, (m1 + m3) * (m2 + m4) / (2 * kappa),
          ((m3 - m1) * at - (m1 - 1) * m1 - (m3 - 1) * m3) / (2 * kappa)};
}

}  // namespace qkz
