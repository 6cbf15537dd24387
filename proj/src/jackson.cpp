#include "qkz/jackson.hpp"

#include <algorithm>
#include <numeric>

namespace qkz {

namespace {

void block_rec(int len, int maxsum, int lo, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (len == 0) {
    out.push_back(cur);
    return;
  }
  for (int v = lo; v * len <= maxsum; ++v) {
    cur.push_back(v);
    block_rec(len - 1, maxsum - v, v, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> blocks(int len, int maxsum) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  block_rec(len, maxsum, 0, cur, out);
  return out;
}

Rat nonzero(const Rat& x, const char* what) {
  if (sgn(x) == 0) throw DomainError(std::string("weight_ratio: vanishing ") + what);
  return x;
}

int leading_order(const LambdaSeries& s) {
  for (size_t k = 0; k < s.coeffs().size(); ++k)
    if (sgn(s.coeffs()[k]) != 0) return static_cast<int>(k);
  return -1;
}

}  // namespace

JacksonParams jackson_params_from_point(const ParamPoint& p, int m, int n) {
  if (p.d(2) * ipow(p.q(), m) != 1 || p.d(3) * ipow(p.q(), n) != 1)
    throw DomainError("jackson dictionary needs d2 = q^-m and d3 = q^-n");
  JacksonParams jp;
  jp.q = p.q();
  jp.t = p.t();
  jp.a2 = kDictionaryA2;
  jp.a1 = jp.a2 * p.Q() * jp.t * ipow(jp.q, n - m);
  jp.b1 = 1 / (ipow(jp.q, m - 1) * jp.a1 * p.d(1));
  jp.b2 = 1 / (ipow(jp.q, n - 1) * jp.a2 * p.d(4));
  return jp;
}

JacksonParams jackson_params_generic(const ParamPoint& p) { return {p.rd1, p.rd4, p.rd2, p.rd3, p.rq, p.rt}; }

std::vector<Rat> jackson_cycle(const JacksonParams& jp, int m, int n) {
  std::vector<Rat> xi;
  for (int i = 0; i < n; ++i) xi.push_back(jp.a2 * ipow(jp.q, i));
  for (int i = 0; i < m; ++i) xi.push_back(jp.a1 * ipow(jp.q, i));
  return xi;
}

std::vector<std::vector<int>> cone_points(int m, int n, int depth) {
  if (m < 0 || n < 0 || depth < 0) throw DomainError("cone_points needs m, n, depth >= 0");
  std::vector<std::vector<int>> out;
  for (const auto& A : blocks(n, depth)) {
    int used = std::accumulate(A.begin(), A.end(), 0);
    for (const auto& B : blocks(m, depth - used)) {
      std::vector<int> nu = A;
      nu.insert(nu.end(), B.begin(), B.end());
      out.push_back(std::move(nu));
    }
  }
  return out;
}

WeightRatio weight_ratio(const JacksonParams& jp, const std::vector<int>& nu, int m, int n) {
  const int N = m + n;
  if (static_cast<int>(nu.size()) != N) throw DomainError("weight_ratio: nu has the wrong length");
  const Rat &q = jp.q, &t = jp.t;
  std::vector<Rat> xi = jackson_cycle(jp, m, n);
  WeightRatio w;
  w.value = 1;
  for (int i = 0; i < N; ++i) {
    if (nu[i] < 0) throw DomainError("weight_ratio: negative lattice index");
    w.z.push_back(xi[i] * ipow(t, nu[i]));
    w.lambda_degree += nu[i];
  }
  Rat q2t = q * q / t;
  for (int i = 0; i < N; ++i) {
    int v = nu[i];
    w.value /= nonzero(qpoch(t * xi[i] / jp.a1, t, v) * qpoch(t * xi[i] / jp.a2, t, v), "a-factor");
    w.value *= qpoch(jp.b1 * xi[i], t, v) * qpoch(jp.b2 * xi[i], t, v);
    w.value *= ipow(q2t, static_cast<long>(v) * (N - 1 - i));
  }
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      Rat c = xi[j] / xi[i];
      int d = nu[j] - nu[i];
      if (d >= 0) {
        w.value *= qpoch(q * c, t, d) / nonzero(qpoch(t * c / q, t, d), "pair factor");
      } else {
        Rat ctd = c * ipow(t, d);
        w.value *= qpoch(t * ctd / q, t, -d) / nonzero(qpoch(q * ctd, t, -d), "pair factor");
      }
      w.value *= (w.z[i] - w.z[j]) / nonzero(xi[i] - xi[j], "cycle difference");
    }
  return w;
}

Rat qfactorial(int k, const Rat& q) {
  Rat r = 1;
  for (int i = 1; i <= k; ++i) r *= (1 - ipow(q, i)) / (1 - q);
  return r;
}

Rat matsuo_e(int k, const Rat& a, const Rat& b, const std::vector<Rat>& z, const Rat& q) {
  const int N = static_cast<int>(z.size());
  if (k < 0 || k > N) throw DomainError("matsuo_e: k out of range");
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      if (z[i] == z[j]) throw DomainError("matsuo_e: coincident variables");
  std::vector<bool> inJ(N, false);
  std::fill(inJ.begin(), inJ.begin() + k, true);
  Rat s = 0;
  // every k-subset J via prev_permutation of the indicator
  do {
    Rat term = 1;
    for (int i = 0; i < N; ++i) term *= inJ[i] ? Rat(1 - b * z[i]) : Rat(1 - z[i] / a);
    for (int i = 0; i < N; ++i)
      if (!inJ[i])
        for (int j = 0; j < N; ++j)
          if (inJ[j]) term *= (z[j] - z[i] / q) / (z[j] - z[i]);
    s += term;
  } while (std::prev_permutation(inJ.begin(), inJ.end()));
  Rat qi = 1 / q;
  return qfactorial(k, qi) * qfactorial(N - k, qi) * s;
}

Rat matsuo_e_antisymmetrized(int k, const Rat& a, const Rat& b, const std::vector<Rat>& z, const Rat& q) {
  const int N = static_cast<int>(z.size());
  if (k < 0 || k > N) throw DomainError("matsuo_e_antisymmetrized: k out of range");
  std::vector<int> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  Rat s = 0;
  do {
    Rat term = 1;
    for (int i = 0; i < N; ++i) {
      const Rat& w = z[perm[i]];
      term *= i < k ? Rat(1 - b * w) : Rat(1 - w / a);
    }
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j) {
        const Rat &wi = z[perm[i]], &wj = z[perm[j]];
        if (wi == wj) throw DomainError("matsuo_e_antisymmetrized: coincident variables");
        term *= (wi - wj / q) / (wi - wj);
      }
    s += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return s;
}

Rat matsuo_geometric(int N, int k, const Rat& a, const Rat& b, const Rat& x, const Rat& q) {
  if (k < 0 || k > N) throw DomainError("matsuo_geometric: k out of range");
  return qfactorial(N, 1 / q) * qpoch(x / a, q, k) * qpoch(b * x * ipow(q, k), q, N - k);
}

std::vector<LambdaSeries> jackson_sum(const JacksonParams& jp, int m, int n, int lmax, const Rat& ka,
                                      const Rat& kb, const std::function<Rat(const std::vector<Rat>&)>& extra,
                                      int guard) {
  if (lmax < 0 || guard < 0) throw DomainError("jackson_sum needs lmax, guard >= 0");
  const int N = m + n;
  std::vector<std::vector<Rat>> c(N + 1, std::vector<Rat>(lmax + 1));
  for (const auto& nu : cone_points(m, n, lmax + guard)) {
    WeightRatio w = weight_ratio(jp, nu, m, n);
    if (w.lambda_degree > lmax || sgn(w.value) == 0) continue;
    Rat f = w.value * extra(w.z);
    if (sgn(f) == 0) continue;
    for (int s = 0; s <= N; ++s) c[s][w.lambda_degree] += f * matsuo_e(s, ka, kb, w.z, jp.q);
  }
  std::vector<LambdaSeries> out;
  for (auto& v : c) out.emplace_back(std::move(v), lmax);
  return out;
}

std::vector<LambdaSeries> jackson_sum(const JacksonParams& jp, int m, int n, int lmax, int guard) {
  return jackson_sum(jp, m, n, lmax, jp.a2, jp.b1, [](const std::vector<Rat>&) { return Rat(1); }, guard);
}

std::vector<LambdaSeries> jackson_vector(const JacksonParams& jp, int m, int n, int lmax, int guard) {
  auto v = jackson_sum(jp, m, n, lmax, guard);
  Rat h0 = v[n][0];
  if (sgn(h0) == 0) throw DomainError("jackson_vector: vanishing normalization term");
  for (auto& s : v) s = s / LambdaSeries(h0);
  return v;
}

Matrix<Rat> ito_R(const JacksonParams& jp, int N) {
  return ito_R_gauss<Rat>(jp.a1, jp.a2, jp.b1, jp.b2, jp.q, N).product();
}

Matrix<Rat> ito_A(const JacksonParams& jp, int N, const Rat& Lambda) {
  return ito_A_gauss<Rat>(jp.a1, jp.a2, jp.b1, jp.b2, jp.q, N, Lambda).product();
}

Matrix<LambdaSeries> ito_A(const JacksonParams& jp, int N, const LambdaSeries& Lambda) {
  using S = LambdaSeries;
  return ito_A_gauss<S>(S(jp.a1), S(jp.a2), S(jp.b1), S(jp.b2), S(jp.q), N, Lambda).product();
}

Matrix<Rat> commutativity_check(const JacksonParams& jp, int N, const Rat& Lambda) {
  Matrix<Rat> R = ito_R(jp, N), A = ito_A(jp, N, Lambda), D2 = ito_D2<Rat>(Lambda, jp.q, N);
  return R * D2 * A - A * R * D2;
}

AFactorization a_factorization(const JacksonParams& jp, int N, const Rat& Lambda) {
  const Rat &a1 = jp.a1, &a2 = jp.a2, &b1 = jp.b1, &b2 = jp.b2, &q = jp.q;
  AFactorization f;
  f.A = ito_A(jp, N, Lambda);
  Rat g = Lambda * ipow(q, N - 1) * a1 * b2;
  f.s = ipow(q, static_cast<long>(N) * (N - 1) / 2) * ipow(a1 * a2 * b2, N) * qpoch(Lambda, q, N) /
        qpoch(Lambda * ipow(q, N - 1) * a1 * a2 * b1 * b2, q, N);
  Matrix<Rat> TR = ito_R_gauss<Rat>(a1, a2 * g, b1, b2 / g, q, N).product();
  std::vector<Rat> d;
  for (int i = 0; i <= N; ++i) d.push_back(ipow(a1 * b2, -i));
  f.sTRD = f.s * (TR * Matrix<Rat>::diagonal(d));
  return f;
}

bool ItoQkzResiduals::all_zero() const {
  for (const auto* v : {&t_alpha, &t1, &t2})
    for (const auto& s : *v)
      if (!is_zero(s)) return false;
  return true;
}

Matrix<LambdaSeries> lift(const Matrix<Rat>& M) {
  Matrix<LambdaSeries> r(M.rows(), M.cols());
  for (size_t i = 0; i < M.rows(); ++i)
    for (size_t j = 0; j < M.cols(); ++j) r(i, j) = LambdaSeries(M(i, j));
  return r;
}

std::vector<LambdaSeries> vec_mat(const std::vector<LambdaSeries>& v, const Matrix<LambdaSeries>& M) {
  if (v.size() != M.rows()) throw std::invalid_argument("vec_mat: shape mismatch");
  std::vector<LambdaSeries> out(M.cols(), LambdaSeries(0));
  for (size_t j = 0; j < M.cols(); ++j)
    for (size_t i = 0; i < v.size(); ++i) out[j] += v[i] * M(i, j);
  return out;
}

ItoQkzResiduals ito_qkz_check(const JacksonParams& jp, int m, int n, int lmax) {
  using S = LambdaSeries;
  const int N = m + n;
  const Rat &a1 = jp.a1, &a2 = jp.a2, &b1 = jp.b1, &b2 = jp.b2, &q = jp.q, &t = jp.t;
  auto psi = jackson_sum(jp, m, n, lmax);
  S L = S::variable(lmax), Sq(q);
  Matrix<S> D1 = ito_D1<S>(L, Sq, N), D2 = ito_D2<S>(L, Sq, N);
  auto diff = [](const std::vector<S>& x, const std::vector<S>& y) {
    std::vector<S> r;
    for (size_t i = 0; i < x.size(); ++i) r.push_back(x[i] - y[i]);
    return r;
  };
  ItoQkzResiduals res;

  // alpha -> alpha + 1 multiplies each z^alpha by z, i.e. prod(xi) t^{|nu|}
  Rat pxi = 1;
  for (const auto& x : jackson_cycle(jp, m, n)) pxi *= x;
  std::vector<S> ta_psi;
  for (const auto& s : psi) ta_psi.push_back(s.scale_var(t) * S(pxi));
  res.t_alpha = diff(vec_mat(ta_psi, D2), vec_mat(vec_mat(psi, D2), ito_A(jp, N, L)));

  // a1 -> t a1, b1 -> b1/t
  auto t1_psi = jackson_sum(jp, m, n, lmax, a2, b1 / t, [&](const std::vector<Rat>& z) {
    Rat r = 1;
    for (const auto& x : z) r *= (1 - x / a1) / (1 - b1 * x / t);
    return r;
  });
  Matrix<S> K1 = lift(inverse(ito_R(jp, N))) * D1;
  res.t1 = diff(t1_psi, vec_mat(psi, K1));

  // a2 -> t a2, b2 -> b2/t
  auto t2_psi = jackson_sum(jp, m, n, lmax, a2 * t, b1, [&](const std::vector<Rat>& z) {
    Rat r = 1;
    for (const auto& x : z) r *= (1 - x / a2) / (1 - b2 * x / t);
    return r;
  });
  Matrix<S> K2 = D2 * lift(ito_R_gauss<Rat>(a1, a2 * t, b1, b2 / t, q, N).product());
  res.t2 = diff(t2_psi, vec_mat(psi, K2));
  return res;
}

Rat jackson_lambda_scale(const ParamPoint& p, int m, int n) {
  return p.t() * p.d(1) * p.d(4) / ipow(p.q(), m + n + 1);
}

Rat jackson_gauge(const ParamPoint& p, int m, int n, int i) {
  const int N = m + n;
  Rat q = p.q();
  long e = static_cast<long>(i) * (i - 2 * (m - n) - 1) / 2;
  return ipow(-1 / (p.d(1) * p.Q() * p.t()), i) * ipow(q, -e) * qbinom(N, m, q) / qbinom(N, m - i, q);
}

AlJacksonComparison compare_al_jackson(const ParamPoint& p, int m, int n, int lmax) {
  AlJacksonComparison out;
  TruncatedZal z = z_al_truncated(m, n, p, lmax);
  JacksonParams jp = jackson_params_from_point(p, m, n);
  auto raw = jackson_sum(jp, m, n, lmax);
  Rat c = jackson_lambda_scale(p, m, n);
  for (int i = -n; i <= m; ++i) {
    const auto& J = raw[i + n];
    out.leading_jackson.push_back(leading_order(J));
    out.leading_al.push_back(leading_order(z.component(i)));
    out.gauged.push_back(J.scale_var(c) / LambdaSeries(jackson_gauge(p, m, n, i)));
    out.laumon.push_back(z.component(i));
  }
  const auto& G = out.gauged;
  const auto& Z = out.laumon;
  Rat z0 = Z[n][0];
  if (sgn(z0) == 0) throw DomainError("compare_al_jackson: Laumon constant term vanishes");
  out.kappa0 = G[n][0] / z0;
  out.equal = true;
  const int S = m + n + 1;
  for (int i = 0; i < S && out.equal; ++i)
    for (int j = 0; j < S; ++j) {
      LambdaSeries d = G[i] * Z[j] - G[j] * Z[i];
      if (!is_zero(d)) {
        out.equal = false;
        out.mismatch = std::make_pair(i - n, leading_order(d));
        break;
      }
    }
  if (out.equal)
    for (int i = 0; i < S; ++i)
      if (G[i] != LambdaSeries(out.kappa0) * Z[i]) {
        out.equal = false;
        out.mismatch = std::make_pair(i - n, leading_order(G[i] - LambdaSeries(out.kappa0) * Z[i]));
        break;
      }
  return out;
}

}  // namespace qkz
