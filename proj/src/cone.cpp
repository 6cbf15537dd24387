#include "qkz/cone.hpp"

#include <stdexcept>

#include "qkz/qseries.hpp"

namespace qkz {

ConeSeries::ConeSeries(int kmax, int lmax) : kmax_(kmax), lmax_(lmax) {
  if (kmax < 0 || lmax < 0) throw DomainError("ConeSeries needs nonnegative orders");
  c_.assign(static_cast<size_t>(kmax + 1) * (lmax + 1), Rat(0));
}

ConeSeries ConeSeries::one(int kmax, int lmax) { return monomial(kmax, lmax, 0, 0); }

ConeSeries ConeSeries::monomial(int kmax, int lmax, int k, int l, const Rat& c) {
  ConeSeries s(kmax, lmax);
  if (s.in_range(k, l)) s.at(k, l) = c;
  return s;
}

static void same_shape(const ConeSeries& a, const ConeSeries& b) {
  if (a.kmax() != b.kmax() || a.lmax() != b.lmax()) throw std::invalid_argument("ConeSeries shape mismatch");
}

ConeSeries ConeSeries::operator-(const ConeSeries& o) const {
  same_shape(*this, o);
  ConeSeries r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

ConeSeries ConeSeries::operator+(const ConeSeries& o) const {
  same_shape(*this, o);
  ConeSeries r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

bool ConeSeries::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

ConeSeries ConeSeries::restrict(int kmax, int lmax) const {
  if (kmax > kmax_ || lmax > lmax_) throw std::invalid_argument("restrict beyond the rectangle");
  ConeSeries r(kmax, lmax);
  for (int k = 0; k <= kmax; ++k)
    for (int l = 0; l <= lmax; ++l) r.at(k, l) = at(k, l);
  return r;
}

std::optional<std::pair<int, int>> ConeSeries::first_mismatch(const ConeSeries& o) const {
  same_shape(*this, o);
  for (int d = 0; d <= kmax_ + lmax_; ++d)
    for (int k = 0; k <= kmax_; ++k) {
      int l = d - k;
      if (l < 0 || l > lmax_) continue;
      if (at(k, l) != o.at(k, l)) return std::make_pair(k, l);
    }
  return std::nullopt;
}

ConeSeries borel(const ConeSeries& s, const Rat& q, int direction, int offset) {
  ConeSeries r = s;
  for (int k = 0; k <= s.kmax(); ++k)
    for (int l = 0; l <= s.lmax(); ++l) {
      long a = k - l + offset;
      if (sgn(r.at(k, l)) != 0) r.at(k, l) *= ipow(q, direction * (a * (a + 1) / 2));
    }
  return r;
}

ConeSeries shift(const ConeSeries& s, const Rat& p_x, const Rat& p_lambda) {
  ConeSeries r = s;
  for (int k = 0; k <= s.kmax(); ++k)
    for (int l = 0; l <= s.lmax(); ++l)
      if (sgn(r.at(k, l)) != 0) r.at(k, l) *= ipow(p_x, k - l) * ipow(p_lambda, l);
  return r;
}

ConeSeries mul_axis_series(const ConeSeries& s, const std::vector<Rat>& coeffs, Axis axis) {
  ConeSeries r(s.kmax(), s.lmax());
  int dk = axis == Axis::LambdaOverX ? 0 : 1;
  int dl = axis == Axis::X ? 0 : 1;
  for (int k = 0; k <= s.kmax(); ++k)
    for (int l = 0; l <= s.lmax(); ++l) {
      const Rat& v = s.at(k, l);
      if (sgn(v) == 0) continue;
      for (size_t j = 0; j < coeffs.size(); ++j) {
        int kk = k + dk * static_cast<int>(j), ll = l + dl * static_cast<int>(j);
        if (kk > s.kmax() || ll > s.lmax()) break;
        r.at(kk, ll) += v * coeffs[j];
      }
    }
  return r;
}

ConeSeries mul_phi(const ConeSeries& s, const Rat& c, const Rat& q, Axis axis, bool inverted) {
  int K = axis == Axis::X ? s.kmax() : axis == Axis::LambdaOverX ? s.lmax() : std::min(s.kmax(), s.lmax());
  return mul_axis_series(s, phi_coeffs(c, q, inverted, K), axis);
}

ConeSeries mul(const ConeSeries& a, const ConeSeries& b) {
  same_shape(a, b);
  ConeSeries r(a.kmax(), a.lmax());
  for (int k = 0; k <= a.kmax(); ++k)
    for (int l = 0; l <= a.lmax(); ++l) {
      if (sgn(a.at(k, l)) == 0) continue;
      for (int k2 = 0; k + k2 <= a.kmax(); ++k2)
        for (int l2 = 0; l + l2 <= a.lmax(); ++l2) r.at(k + k2, l + l2) += a.at(k, l) * b.at(k2, l2);
    }
  return r;
}

ConeSeries apply_HS(const ConeSeries& s0, const ParamPoint& p) {
  Rat q = p.q(), d1 = p.d(1), d2 = p.d(2), d3 = p.d(3), d4 = p.d(4);
  ConeSeries s = mul_phi(s0, d1 * d2 / q, q, Axis::X, true);
  s = mul_phi(s, d3 * d4, q, Axis::LambdaOverX, true);
  s = borel(s, q);
  s = mul_phi(s, 1, q, Axis::Lambda, false);
  s = mul_phi(s, d1 * d2 * d3 * d4 / q, q, Axis::Lambda, false);
  s = mul_phi(s, -d1, q, Axis::X, true);
  s = mul_phi(s, -d2, q, Axis::X, true);
  s = mul_phi(s, -d3, q, Axis::LambdaOverX, true);
  s = mul_phi(s, -d4, q, Axis::LambdaOverX, true);
  s = borel(s, q);
  s = mul_phi(s, q, q, Axis::X, true);
  return mul_phi(s, 1, q, Axis::LambdaOverX, true);
}

ConeSeries equation_op(const ConeSeries& s, const ParamPoint& p) {
  Rat q = p.q(), t = p.t();
  return apply_HS(shift(s, Rat(1) / (q * t * p.Q()), Rat(1) / t), p);
}

EquationSolution solve_equation_full(const ParamPoint& p, int kmax, int lmax) {
  // column (k,l) = image of the monomial (k,l); it only reaches (k',l') >= (k,l)
  std::vector<ConeSeries> cols;
  for (int k = 0; k <= kmax; ++k)
    for (int l = 0; l <= lmax; ++l) cols.push_back(equation_op(ConeSeries::monomial(kmax, lmax, k, l), p));
  auto col = [&](int k, int l) -> const ConeSeries& { return cols[static_cast<size_t>(k) * (lmax + 1) + l]; };

  EquationSolution out{ConeSeries(kmax, lmax), std::vector<std::vector<Rat>>(kmax + 1, std::vector<Rat>(lmax + 1))};
  ConeSeries& psi = out.psi;
  psi.at(0, 0) = 1;
  for (int k = 0; k <= kmax; ++k)
    for (int l = 0; l <= lmax; ++l) {
      Rat lam = col(k, l).at(k, l);
      if (lam != equation_lambda(p, k, l))
        throw std::logic_error("operator diagonal differs from the closed form at (" + std::to_string(k) + "," +
                               std::to_string(l) + ")");
      out.diagonal[k][l] = lam;
    }
  for (int d = 1; d <= kmax + lmax; ++d)
    for (int k = 0; k <= kmax; ++k) {
      int l = d - k;
      if (l < 0 || l > lmax) continue;
      Rat rhs;
      for (int k2 = 0; k2 <= k; ++k2)
        for (int l2 = 0; l2 <= l; ++l2)
          if ((k2 != k || l2 != l) && sgn(psi.at(k2, l2)) != 0) rhs += psi.at(k2, l2) * col(k2, l2).at(k, l);
      Rat den = 1 - out.diagonal[k][l];
      if (sgn(den) == 0)
        throw ResonanceError("resonance at (" + std::to_string(k) + "," + std::to_string(l) + ")");
      psi.at(k, l) = rhs / den;
    }
  return out;
}

ConeSeries solve_shakirov(const ParamPoint& p, int kmax, int lmax) { return solve_equation_full(p, kmax, lmax).psi; }

ParamPoint coupled_transform(const ParamPoint& p) {
  ParamPoint r = p;
  r.rd2 = p.rq / (p.rt * p.rQ * p.rd2);
  r.rd4 = p.rq * p.rQ / p.rd4;
  r.m.reset();
  r.n.reset();
  return r;
}

ConeSeries coupled_rescale(const ConeSeries& s, const ParamPoint& p) {
  Rat a = -p.d(2) / p.q(), b = -p.d(4);
  ConeSeries r = s;
  for (int k = 0; k <= s.kmax(); ++k)
    for (int l = 0; l <= s.lmax(); ++l)
      if (sgn(r.at(k, l)) != 0) r.at(k, l) *= ipow(a, k) * ipow(b, l);
  return r;
}

ConeSeries apply_gK(const ConeSeries& s0, const ParamPoint& p) {
  Rat q = p.q(), t = p.t(), d1 = p.d(1), d2 = p.d(2), d3 = p.d(3), d4 = p.d(4);
  ConeSeries s = mul_phi(s0, -d1, q, Axis::X, true);
  s = mul_phi(s, -d3, q, Axis::LambdaOverX, true);
  s = borel(s, q);
  s = mul_phi(s, q, q, Axis::X, true);
  s = mul_phi(s, 1, q, Axis::LambdaOverX, true);
  int L = std::min(s.kmax(), s.lmax());
  LambdaSeries g = dbl_qt_poch_series(t * d2 * d4 / q, q, t, L) * dbl_qt_poch_series(d1 * d3, q, t, L) /
                   (dbl_qt_poch_series(t, q, t, L) * dbl_qt_poch_series(t * d1 * d2 * d3 * d4 / q, q, t, L));
  std::vector<Rat> gc(L + 1);
  for (int j = 0; j <= L; ++j) gc[j] = g[j];
  return mul_axis_series(s, gc, Axis::Lambda);
}

CoupledResult coupled_step(const ParamPoint& p, const ConeSeries& psi) {
  ParamPoint tp = coupled_transform(p);
  ConeSeries chi = coupled_rescale(solve_shakirov(tp, psi.kmax(), psi.lmax()), p);
  ConeSeries r1 = psi - apply_gK(chi, p);
  ConeSeries r2 = chi - coupled_rescale(apply_gK(coupled_rescale(psi, tp), tp), p);
  return {chi, r1, r2};
}

std::pair<ConeSeries, ConeSeries> pentagon_sides(const Rat& alpha, const Rat& beta, const Rat& q, int order) {
  ConeSeries lhs = ConeSeries::one(order, order);
  lhs = mul_phi(lhs, alpha * beta, q, Axis::Lambda, false);
  lhs = mul_phi(lhs, alpha, q, Axis::X, true);
  lhs = mul_phi(lhs, beta, q, Axis::LambdaOverX, true);
  ConeSeries rhs(order, order);
  for (int k = 0; k <= order; ++k)
    for (int l = 0; l <= order; ++l)
      rhs.at(k, l) = ipow(alpha, k) * ipow(beta, l) * ipow(q, k * l) / (qpoch(q, q, k) * qpoch(q, q, l));
  return {lhs, rhs};
}

static ConeSeries lemma_g(const Rat& alpha, const Rat& beta, const Rat& q, int order) {
  ConeSeries g = ConeSeries::one(order, order);
  g = mul_phi(g, alpha, q, Axis::X, true);
  return mul_phi(g, beta, q, Axis::LambdaOverX, true);
}

static ConeSeries lemma_f(const Rat& alpha, const Rat& beta, const Rat& q, int n, int order) {
  ConeSeries f = ConeSeries::one(order, order);
  f = mul_phi(f, -ipow(q, n + 1) * alpha, q, Axis::X, false);
  return mul_phi(f, -ipow(q, -n) * beta, q, Axis::LambdaOverX, false);
}

std::pair<ConeSeries, ConeSeries> borel_lemma_sides(const Rat& alpha, const Rat& beta, const Rat& q, int n,
                                                    int order) {
  ConeSeries lhs = borel(lemma_g(alpha, beta, q, order), q, 1, n);
  ConeSeries rhs = mul_phi(lemma_f(alpha, beta, q, n, order), alpha * beta, q, Axis::Lambda, true);
  Rat c = ipow(q, static_cast<long>(n) * (n + 1) / 2);
  for (int k = 0; k <= order; ++k)
    for (int l = 0; l <= order; ++l) rhs.at(k, l) *= c;
  return {lhs, rhs};
}

std::pair<ConeSeries, ConeSeries> borel_inverse_lemma_sides(const Rat& alpha, const Rat& beta, const Rat& q,
                                                            int n, int order) {
  ConeSeries lhs = borel(lemma_f(alpha, beta, q, n, order), q, -1, n);
  ConeSeries rhs = mul_phi(lemma_g(alpha, beta, q, order), alpha * beta, q, Axis::Lambda, false);
  Rat c = ipow(q, -static_cast<long>(n) * (n + 1) / 2);
  for (int k = 0; k <= order; ++k)
    for (int l = 0; l <= order; ++l) rhs.at(k, l) *= c;
  return {lhs, rhs};
}

}  // namespace qkz
