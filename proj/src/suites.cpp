#include "qkz/suites.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "qkz/cone.hpp"
#include "qkz/fourd.hpp"
#include "qkz/jackson.hpp"
#include "qkz/laumon.hpp"
#include "qkz/qseries.hpp"
#include "qkz/rmatrix.hpp"

namespace qkz {

namespace {

using json = nlohmann::json;
using Task = std::function<CheckRecord()>;
using Body = std::function<std::optional<Mismatch>()>;
using MN = std::pair<int, int>;

Task task(std::string name, json point, json orders, Body body) {
  return [=]() {
    CheckRecord r{name, false, point, orders, std::nullopt, 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
      r.mismatch = body();
      r.pass = !r.mismatch;
    } catch (const std::exception& e) {
      r.mismatch = Mismatch{json{{"error", "exception"}}, "", e.what()};
    }
    r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
  };
}

std::optional<Mismatch> fail(json loc, const std::string& expected, const std::string& actual) {
  return Mismatch{std::move(loc), expected, actual};
}

std::optional<Mismatch> series_mismatch(const std::vector<LambdaSeries>& a, const std::vector<LambdaSeries>& b,
                                        int index_offset = 0) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    int ord = std::min(a[i].order(), b[i].order());
    for (int k = 0; k <= ord; ++k)
      if (a[i][k] != b[i][k])
        return fail(json{{"component", static_cast<int>(i) + index_offset}, {"order", k}}, b[i][k].get_str(),
                    a[i][k].get_str());
  }
  return std::nullopt;
}

std::optional<Mismatch> zero_mismatch(const std::vector<LambdaSeries>& r, int index_offset = 0) {
  std::vector<LambdaSeries> z;
  for (const auto& s : r) z.emplace_back(std::vector<Rat>{}, s.order());
  return series_mismatch(r, z, index_offset);
}

template <class T>
std::optional<Mismatch> matrix_mismatch(const Matrix<T>& a, const Matrix<T>& b, int offset = 0) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return fail(json{{"shape", "differs"}}, std::to_string(b.rows()), std::to_string(a.rows()));
  if (auto mm = first_mismatch(a, b)) {
    auto [i, j] = *mm;
    return fail(json{{"i", static_cast<int>(i) - offset}, {"j", static_cast<int>(j) - offset}},
                to_string(b(i, j)), to_string(a(i, j)));
  }
  return std::nullopt;
}

std::optional<Mismatch> cone_mismatch(const ConeSeries& a, const ConeSeries& b) {
  if (auto mm = a.first_mismatch(b)) {
    auto [k, l] = *mm;
    return fail(json{{"k", k}, {"l", l}}, b.at(k, l).get_str(), a.at(k, l).get_str());
  }
  return std::nullopt;
}

std::optional<Mismatch> rat_mismatch(const Rat& a, const Rat& b, json loc) {
  if (a == b) return std::nullopt;
  return fail(std::move(loc), b.get_str(), a.get_str());
}

// p/s with 2 <= p, s <= 97, never 1
Rat rand_rat(std::mt19937_64& rng) {
  for (;;) {
    Rat r(static_cast<long>(2 + rng() % 96), static_cast<long>(2 + rng() % 96));
    r.canonicalize();
    if (r != 1) return r;
  }
}

json rats_json(std::initializer_list<std::pair<const char*, Rat>> kv) {
  json j = json::object();
  for (const auto& [k, v] : kv) j[k] = v.get_str();
  return j;
}

json jp_json(const JacksonParams& jp) {
  return rats_json({{"a1", jp.a1}, {"a2", jp.a2}, {"b1", jp.b1}, {"b2", jp.b2}, {"q", jp.q}, {"t", jp.t}});
}

struct Ctx {
  const SuiteConfig& cfg;
  std::vector<std::uint64_t> point_seeds() const {
    std::vector<std::uint64_t> out;
    for (auto s : cfg.seeds)
      for (int j = 0; j < cfg.points; ++j) out.push_back(point_seed(s, j));
    return out;
  }
  int kmax(int d) const { return cfg.kmax.value_or(d); }
  int lmax(int d) const { return cfg.lmax.value_or(d); }
  std::vector<MN> cases(std::vector<MN> d) const {
    if (cfg.m || cfg.n) return {{cfg.m.value_or(0), cfg.n.value_or(0)}};
    if (cfg.N) {
      std::vector<MN> out;
      for (auto [m, n] : d)
        if (m + n <= *cfg.N) out.push_back({m, n});
      return out;
    }
    return d;
  }
};

std::vector<MN> pairs_up_to(int total, int lo = 0) {
  std::vector<MN> out;
  for (int s = lo; s <= total; ++s)
    for (int m = s; m >= 0; --m) out.push_back({m, s - m});
  return out;
}

std::vector<Task> equation_suite(const Ctx& c) {
  std::vector<Task> ts;
  int K = c.kmax(4), L = c.lmax(4);
  for (auto s : c.point_seeds()) {
    ParamPoint p = sample_generic_point(s, std::max(8, K + L));
    ts.push_back(task("solver == affine Laumon sum", to_json(p), json{{"kmax", K}, {"lmax", L}}, [=] {
      ConeSeries psi = solve_shakirov(p, K, L);
      ConeSeries z = z_al(p, K, L);
      if (z.at(0, 0) != 1) return fail(json{{"k", 0}, {"l", 0}}, "1", z.at(0, 0).get_str());
      return cone_mismatch(psi, z);
    }));
  }
  return ts;
}

std::vector<Task> rmatrix_3way(const Ctx& c) {
  std::vector<Task> ts;
  auto cases = c.cases({{1, 0}, {0, 1}, {2, 0}, {1, 1}, {2, 1}, {2, 2}});
  for (auto s : c.point_seeds()) {
    ParamPoint p = sample_generic_point(s);
    Rat q = p.q(), d1 = p.d(1), d4 = p.d(4), L = p.rt * p.rQ;
    json pt = to_json(p);
    pt["Lambda"] = L.get_str();
    for (auto [m, n] : cases) {
      json ord{{"m", m}, {"n", n}};
      ts.push_back(task("linear system == closed form == hypergeometric", pt, ord, [=] {
        Matrix<Rat> lin = r_via_linear_system<Rat>(m, n, d1, d4, L, q);
        if (!r_defining_relation_holds<Rat>(m, n, lin, d1, d4, L, q))
          return fail(json{{"relation", "defining expansion"}}, "0", "nonzero");
        if (auto mm = matrix_mismatch(r_closed_form(m, n, d1, d4, L, q), lin, n)) return mm;
        return matrix_mismatch(r_hg_matrix(m, n, d1, d4, L, q), lin, n);
      }));
    }
    if (!c.cfg.m && !c.cfg.n) {
      ts.push_back(task("2x2 example display", pt, json{{"m", 1}, {"n", 0}}, [=] {
        return matrix_mismatch(r_example_2x2(d1, d4, L, q), r_via_linear_system<Rat>(1, 0, d1, d4, L, q));
      }));
      ts.push_back(task("3x3 example display", pt, json{{"m", 2}, {"n", 0}}, [=] {
        return matrix_mismatch(r_example_3x3(d1, d4, L, q), r_via_linear_system<Rat>(2, 0, d1, d4, L, q));
      }));
    }
  }
  return ts;
}

std::vector<Task> qkz_matrix(const Ctx& c) {
  std::vector<Task> ts;
  int L = c.lmax(3);
  for (auto [m, n] : c.cases({{1, 0}, {1, 1}, {2, 1}}))
    for (auto s : c.point_seeds()) {
      ParamPoint p = sample_generic_point(s).with_masses(m, n);
      ts.push_back(task("q-KZ residual", to_json(p), json{{"m", m}, {"n", n}, {"lmax", L}},
                        [=] { return zero_mismatch(qkz_residual(m, n, p, L), -n); }));
    }
  return ts;
}

std::vector<Task> dual_qkz(const Ctx& c) {
  std::vector<Task> ts;
  int L = c.lmax(3);
  for (auto [m, n] : c.cases({{1, 0}, {1, 1}}))
    for (auto s : c.point_seeds()) {
      ParamPoint p = sample_generic_point(s).with_masses(m, n);
      json ord{{"m", m}, {"n", n}, {"lmax", L}};
      ts.push_back(task("dual q-KZ residual", to_json(p), ord, [=] {
        Matrix<LambdaSeries> r = dual_qkz_residual(m, n, p, L);
        Matrix<LambdaSeries> z(r.rows(), r.cols());
        for (size_t i = 0; i < r.rows(); ++i)
          for (size_t k = 0; k < r.cols(); ++k) z(i, k) = LambdaSeries(std::vector<Rat>{}, L);
        return matrix_mismatch(r, z, n);
      }));
      ts.push_back(task("eigenvalue-1 row == Laumon components", to_json(p), ord, [=] {
        Matrix<LambdaSeries> Y = qkz_fundamental_solution(m, n, p, L);
        TruncatedZal z = z_al_truncated(m, n, p, L);
        std::vector<LambdaSeries> row;
        for (int j = 0; j <= m + n; ++j) row.push_back(Y(n, j));
        return series_mismatch(row, z.comps, -n);
      }));
    }
  return ts;
}

std::vector<Task> heine_example(const Ctx& c) {
  std::vector<Task> ts;
  int L = c.lmax(4);
  for (auto s : c.point_seeds()) {
    ParamPoint p = sample_generic_point(s).with_masses(1, 0);
    ts.push_back(task("(1,0) components proportional to the Heine pair", to_json(p), json{{"lmax", L}}, [=] {
      TruncatedZal z = z_al_truncated(1, 0, p, L);
      auto h = heine_solution(p, L);
      Rat k = z.comps[0][0] / h[0][0];
      std::vector<LambdaSeries> scaled{h[0] * LambdaSeries(k), h[1] * LambdaSeries(k)};
      return series_mismatch(z.comps, scaled);
    }));
    std::mt19937_64 rng(s);
    Rat a = rand_rat(rng), b = rand_rat(rng), z2 = rand_rat(rng), t = p.t();
    ts.push_back(task("dual Heine pair difference equations", rats_json({{"a", a}, {"b", b}, {"z2", z2}, {"t", t}}),
                      json{{"order", L}}, [=] {
                        auto r = heine_dual_residual(a, b, z2, t, L);
                        if (auto mm = zero_mismatch(r.shift_z1)) return mm;
                        return zero_mismatch(r.shift_z2);
                      }));
  }
  return ts;
}

std::vector<Task> ito_qkz(const Ctx& c) {
  std::vector<Task> ts;
  int L = c.lmax(2);
  int Nmax = c.cfg.N.value_or(3);
  std::vector<MN> cases = (c.cfg.m || c.cfg.n) ? c.cases({}) : pairs_up_to(Nmax);
  for (auto [m, n] : cases)
    for (auto s : c.point_seeds()) {
      JacksonParams jp = jackson_params_generic(sample_generic_point(s));
      ts.push_back(task("T_alpha, T_1, T_2 on the Jackson pairing", jp_json(jp),
                        json{{"m", m}, {"n", n}, {"lmax", L}}, [=]() -> std::optional<Mismatch> {
                          auto r = ito_qkz_check(jp, m, n, L);
                          if (auto mm = zero_mismatch(r.t_alpha)) return mm->location["shift"] = "T_alpha", mm;
                          if (auto mm = zero_mismatch(r.t1)) return mm->location["shift"] = "T_1", mm;
                          if (auto mm = zero_mismatch(r.t2)) return mm->location["shift"] = "T_2", mm;
                          return std::nullopt;
                        }));
    }
  return ts;
}

std::vector<Task> commutativity(const Ctx& c) {
  std::vector<Task> ts;
  int Nmax = c.cfg.N.value_or(4);
  for (auto s : c.point_seeds()) {
    ParamPoint p = sample_generic_point(s);
    JacksonParams jp = jackson_params_generic(p);
    Rat L = p.rQ;
    json pt = jp_json(jp);
    pt["Lambda"] = L.get_str();
    for (int N = 0; N <= Nmax; ++N) {
      ts.push_back(task("R D2 A == A R D2", pt, json{{"N", N}}, [=] {
        Matrix<Rat> r = commutativity_check(jp, N, L);
        return matrix_mismatch(r, Matrix<Rat>(N + 1, N + 1));
      }));
      ts.push_back(task("A == s T(R) D", pt, json{{"N", N}}, [=] {
        auto f = a_factorization(jp, N, L);
        return matrix_mismatch(f.sTRD, f.A);
      }));
    }
  }
  return ts;
}

std::vector<Task> al_eq_jackson(const Ctx& c) {
  std::vector<Task> ts;
  int L = c.lmax(3);
  for (auto [m, n] : c.cases(pairs_up_to(3)))
    for (auto s : c.point_seeds()) {
      ParamPoint p = sample_generic_point(s).with_masses(m, n);
      ts.push_back(task("Jackson components proportional to Laumon components", to_json(p),
                        json{{"m", m}, {"n", n}, {"lmax", L}}, [=]() -> std::optional<Mismatch> {
                          auto r = compare_al_jackson(p, m, n, L);
                          if (r.equal) return std::nullopt;
                          int i = r.mismatch ? r.mismatch->first : 0, k = r.mismatch ? r.mismatch->second : 0;
                          const auto& G = r.gauged[i + n];
                          Rat z = r.kappa0 * r.laumon[i + n][k];
                          return fail(json{{"component", i}, {"order", k}}, z.get_str(), G[k].get_str());
                        }));
    }
  return ts;
}

Partition random_partition(std::mt19937_64& rng, int max_size) {
  auto all = partitions_of(static_cast<int>(rng() % (max_size + 1)));
  return all[rng() % all.size()];
}

json partition_json(const Partition& p) { return json(p.parts); }

std::vector<Task> nekrasov_3way(const Ctx& c) {
  std::vector<Task> ts;
  const int pairs = 200;
  for (auto s : c.point_seeds()) {
    ParamPoint p = sample_generic_point(s);
    ts.push_back(task("bracket form == floor form; residue product == box product", to_json(p),
                      json{{"pairs", pairs}, {"max_size", 8}, {"orbifold_orders", {2, 3, 4}}},
                      [=]() -> std::optional<Mismatch> {
                        std::mt19937_64 rng(s ^ 0x5deece66dULL);
                        for (int it = 0; it < pairs; ++it) {
                          Partition lam = random_partition(rng, 8), mu = random_partition(rng, 8);
                          Rat su = rand_rat(rng);
                          for (int n = 2; n <= 4; ++n) {
                            Rat prod = 1;
                            for (int k = 0; k < n; ++k) {
                              Rat a = nek_orb(k, n, lam, mu, su, p), b = nek_orb_floor(k, n, lam, mu, su, p);
                              json loc{{"pair", it}, {"lambda", partition_json(lam)}, {"mu", partition_json(mu)},
                                       {"n", n}, {"k", k}};
                              if (auto mm = rat_mismatch(b, a, loc)) return mm;
                              prod *= a;
                            }
                            json loc{{"pair", it}, {"n", n}, {"product", true}};
                            if (auto mm = rat_mismatch(prod, nek_box_total(lam, mu, su, p), loc)) return mm;
                          }
                        }
                        return std::nullopt;
                      }));
  }
  return ts;
}

std::vector<Task> pentagon(const Ctx& c) {
  std::vector<Task> ts;
  int ord = c.kmax(6);
  for (auto s : c.point_seeds()) {
    std::mt19937_64 rng(s);
    Rat al = rand_rat(rng), be = rand_rat(rng), q = sample_generic_point(s).q();
    json pt = rats_json({{"alpha", al}, {"beta", be}, {"q", q}});
    ts.push_back(task("pentagon expansion", pt, json{{"total_order", ord}}, [=] {
      auto [l, r] = pentagon_sides(al, be, q, ord);
      return cone_mismatch(l, r);
    }));
    for (int n = -2; n <= 2; ++n) {
      ts.push_back(task("Borel lemma, shifted by x^n", pt, json{{"total_order", ord}, {"n", n}}, [=] {
        auto [l, r] = borel_lemma_sides(al, be, q, n, ord);
        return cone_mismatch(l, r);
      }));
      ts.push_back(task("inverse Borel lemma, shifted by x^n", pt, json{{"total_order", ord}, {"n", n}}, [=] {
        auto [l, r] = borel_inverse_lemma_sides(al, be, q, n, ord);
        return cone_mismatch(l, r);
      }));
    }
  }
  return ts;
}

std::vector<Task> bailey(const Ctx& c) {
  std::vector<Task> ts;
  int nmax = c.cfg.N.value_or(4);
  for (auto s : c.point_seeds()) {
    std::mt19937_64 rng(s);
    Rat a = rand_rat(rng), b = rand_rat(rng), cc = rand_rat(rng), d = rand_rat(rng), e = rand_rat(rng),
        f = rand_rat(rng), q = sample_generic_point(s).q();
    json pt = rats_json({{"a", a}, {"b", b}, {"c", cc}, {"d", d}, {"e", e}, {"f", f}, {"q", q}});
    for (int n = 0; n <= nmax; ++n) {
      ts.push_back(task("Bailey 10W9 transformation", pt, json{{"n", n}}, [=] {
        Rat g = bailey_balanced_g(a, b, cc, d, e, f, n, q);
        auto [l, r] = bailey_check(a, b, cc, d, e, f, g, n, q);
        return rat_mismatch(l, r, json{{"n", n}});
      }));
    }
    ts.push_back(task("6W5 summation instances", pt, json{{"i_max", 3}}, [=]() -> std::optional<Mismatch> {
      for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= i; ++j) {
          auto [l, r] = w6_5_check(a, b, cc, i, j, q);
          if (auto mm = rat_mismatch(l, r, json{{"i", i}, {"j", j}})) return mm;
        }
      return std::nullopt;
    }));
    ts.push_back(task("binomial kernel Pascal recursion", pt, json{{"N_max", nmax}},
                      [=]() -> std::optional<Mismatch> {
                        for (int N = 0; N < nmax; ++N)
                          for (int r = 0; r <= N + 1; ++r)
                            if (auto mm = rat_mismatch(binomial_kernel_step(N, r, a, b, cc, q),
                                                       binomial_kernel(N + 1, r, a, b, cc, q),
                                                       json{{"N", N + 1}, {"r", r}}))
                              return mm;
                        return std::nullopt;
                      }));
  }
  return ts;
}

std::vector<Task> shuffle(const Ctx& c) {
  std::vector<Task> ts;
  int Nmax = c.cfg.N.value_or(4);
  for (auto s : c.point_seeds()) {
    std::mt19937_64 rng(s);
    Rat a = rand_rat(rng), b = rand_rat(rng), q = sample_generic_point(s).q(), x = rand_rat(rng);
    for (int N = 1; N <= Nmax; ++N) {
      std::vector<Rat> z;
      while (static_cast<int>(z.size()) < N) {
        Rat v = rand_rat(rng);
        if (std::find(z.begin(), z.end(), v) == z.end()) z.push_back(v);
      }
      json pt = rats_json({{"a", a}, {"b", b}, {"q", q}, {"x", x}});
      for (size_t i = 0; i < z.size(); ++i) pt["z"].push_back(z[i].get_str());
      ts.push_back(task("subset sum == antisymmetrization", pt, json{{"N", N}}, [=]() -> std::optional<Mismatch> {
        for (int k = 0; k <= N; ++k)
          if (auto mm = rat_mismatch(matsuo_e(k, a, b, z, q), matsuo_e_antisymmetrized(k, a, b, z, q),
                                     json{{"k", k}}))
            return mm;
        return std::nullopt;
      }));
      ts.push_back(task("geometric specialization", pt, json{{"N", N}}, [=]() -> std::optional<Mismatch> {
        std::vector<Rat> g;
        for (int i = 0; i < N; ++i) g.push_back(x * ipow(q, i));
        for (int k = 0; k <= N; ++k)
          if (auto mm = rat_mismatch(matsuo_e(N - k, a, b, g, q), matsuo_geometric(N, k, a, b, x, q),
                                     json{{"k", k}}))
            return mm;
        return std::nullopt;
      }));
    }
  }
  return ts;
}

std::vector<Task> coupled(const Ctx& c) {
  std::vector<Task> ts;
  int K = c.kmax(4), L = c.lmax(4);
  for (auto s : c.point_seeds()) {
    ParamPoint p = sample_generic_point(s, std::max(8, K + L));
    ts.push_back(task("psi - gK chi and chi - TgKT psi vanish", to_json(p), json{{"kmax", K}, {"lmax", L}},
                      [=]() -> std::optional<Mismatch> {
                        auto r = coupled_step(p, solve_shakirov(p, K, L));
                        ConeSeries zero(K, L);
                        if (auto mm = cone_mismatch(r.residual1, zero)) return mm->location["residual"] = 1, mm;
                        if (auto mm = cone_mismatch(r.residual2, zero)) return mm->location["residual"] = 2, mm;
                        return std::nullopt;
                      }));
  }
  return ts;
}

std::vector<Task> fourd_limit(const Ctx& c) {
  std::vector<Task> ts;
  int J = c.cfg.jet_order.value_or(2);
  for (auto s : c.point_seeds()) {
    std::mt19937_64 rng(s);
    Rat m1 = rand_rat(rng), m4 = -rand_rat(rng), L = rand_rat(rng) + 1, kappa = rand_rat(rng), a = rand_rat(rng);
    json pt = rats_json({{"m1", m1}, {"m4", m4}, {"Lambda", L}, {"kappa", kappa}, {"a", a}});
    for (auto [m, n] : c.cases({{1, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}})) {
      ts.push_back(task("jets: I + h R1 and H_4d with its KZ split", pt, json{{"m", m}, {"n", n}, {"jet_order", J}},
                        [=]() -> std::optional<Mismatch> {
                          auto jets = r_jet_orders(m, n, m1, m4, L, J);
                          const size_t S = m + n + 1;
                          if (auto mm = matrix_mismatch(jets[0], Matrix<Rat>::identity(S), n))
                            return mm->location["h_order"] = 0, mm;
                          Masses mv{m1, Rat(-m), Rat(-n), m4};
                          if (auto mm = matrix_mismatch(jets[1], r1_fourd(mv, m, n, L), n))
                            return mm->location["h_order"] = 1, mm;
                          H4d h = h4d_matrix(mv, kappa, a, m, n, L);
                          if (auto mm = matrix_mismatch(jets[1], h.H, n)) return mm->location["operator"] = "H_4d", mm;
                          if (!kz_split_holds(h, kappa, a, L))
                            return fail(json{{"operator", "A0/Lambda + A1/(Lambda-1)"}}, "H_4d", "differs");
                          return std::nullopt;
                        }));
    }
    if (!c.cfg.m && !c.cfg.n) {
      Rat m2 = rand_rat(rng);
      json p4 = rats_json({{"m2", m2}, {"m4", m4}, {"Lambda", L}});
      ts.push_back(task("printed 4x4 case m1=-2, m3=-1 (sign-reversed display)", p4, json{{"window", {-1, 2}}},
                        [=]() -> std::optional<Mismatch> {
                          auto jets = r_jet_orders(2, 1, m2, m4, L, 1);
                          Masses mv{Rat(-2), m2, Rat(-1), m4};
                          Matrix<Rat> r1 = r1_fourd(mv, 2, 1, L);
                          if (auto mm = matrix_mismatch(jets[1], r1, 1)) return mm;
                          return matrix_mismatch(Rat(-1) * r1_printed_example(m2, m4, L), r1, 1);
                        }));
      Masses mv{m1, Rat(-1), rand_rat(rng), m4};
      ts.push_back(task("spin dictionary: KZ form == mass form after gauge", pt, json{{"samples", 8}},
                        [=]() -> std::optional<Mismatch> {
                          std::mt19937_64 r2(s + 17);
                          SpinGauge g = spin_gauge_solved(mv, kappa, a);
                          for (int i = 0; i < 8; ++i) {
                            Rat x = rand_rat(r2), z = rand_rat(r2) + 1, sv = rand_rat(r2), rv = rand_rat(r2);
                            Rat d = spin_form_difference(mv, kappa, a, g, x, z, sv, rv);
                            if (auto mm = rat_mismatch(d, 0, json{{"sample", i}})) return mm;
                          }
                          return std::nullopt;
                        }));
    }
  }
  return ts;
}

using SuiteFn = std::vector<Task> (*)(const Ctx&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"SHAKIROV_EQ", equation_suite},   {"RMATRIX_3WAY", rmatrix_3way}, {"QKZ_MATRIX", qkz_matrix},
      {"DUAL_QKZ", dual_qkz},         {"ITO_QKZ", ito_qkz},           {"COMMUTATIVITY", commutativity},
      {"AL_EQ_JACKSON", al_eq_jackson}, {"NEKRASOV_3WAY", nekrasov_3way}, {"PENTAGON", pentagon},
      {"BAILEY", bailey},             {"SHUFFLE", shuffle},           {"COUPLED", coupled},
      {"FOURD_LIMIT", fourd_limit},   {"HEINE_EXAMPLE", heine_example}};
  return r;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char ch : s) r += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return r + "\"";
}

}  // namespace

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [k, f] : registry()) v.push_back(k);
    return v;
  }();
  return ids;
}

bool is_suite_id(const std::string& id) {
  for (const auto& s : suite_ids())
    if (s == id) return true;
  return false;
}

void validate(const SuiteConfig& cfg) {
  if (!is_suite_id(cfg.suite)) throw ConfigError("unknown suite id '" + cfg.suite + "'");
  if (cfg.seeds.empty()) throw ConfigError("at least one seed is required");
  if (cfg.points < 1) throw ConfigError("points must be >= 1");
  for (auto v : {cfg.kmax, cfg.lmax, cfg.m, cfg.n, cfg.N, cfg.jet_order})
    if (v && *v < 0) throw ConfigError("orders and sizes must be >= 0");
  if (cfg.jet_order && *cfg.jet_order < 1) throw ConfigError("jet order must be >= 1");
  if (cfg.format != "json" && cfg.format != "csv") throw ConfigError("format must be json or csv");
}

std::uint64_t point_seed(std::uint64_t seed, int j) {
  return j == 0 ? seed : seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(j);
}

unsigned worker_count(size_t tasks) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* e = std::getenv("QKZ_THREADS")) {
    int v = std::atoi(e);
    if (v >= 1) hw = std::min(hw, static_cast<unsigned>(v));
  }
  return static_cast<unsigned>(std::max<size_t>(1, std::min<size_t>(hw, tasks)));
}

std::vector<CheckRecord> run_tasks(const std::vector<Task>& tasks) {
  std::vector<CheckRecord> out(tasks.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next++) < tasks.size();) out[i] = tasks[i]();
  };
  unsigned w = worker_count(tasks.size());
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < w; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

json config_json(const SuiteConfig& cfg) {
  json j{{"suite", cfg.suite}, {"seeds", cfg.seeds}, {"points", cfg.points}, {"format", cfg.format}};
  auto opt = [&](const char* k, const std::optional<int>& v) { j[k] = v ? json(*v) : json(nullptr); };
  opt("kmax", cfg.kmax);
  opt("lmax", cfg.lmax);
  opt("m", cfg.m);
  opt("n", cfg.n);
  opt("N", cfg.N);
  opt("jet_order", cfg.jet_order);
  return j;
}

Report run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  Ctx ctx{cfg};
  std::vector<Task> tasks;
  for (const auto& [id, fn] : registry())
    if (id == cfg.suite) tasks = fn(ctx);
  Report r{cfg.suite, kVersion, config_json(cfg), run_tasks(tasks)};
  return r;
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json m = nullptr;
    if (c.mismatch) m = json{{"location", c.mismatch->location}, {"expected", c.mismatch->expected},
                             {"actual", c.mismatch->actual}};
    checks.push_back(json{{"name", c.name},
                          {"status", c.pass ? "pass" : "fail"},
                          {"point", c.point},
                          {"orders", c.orders},
                          {"mismatch", m},
                          {"time_ms", c.time_ms}});
  }
  return json{{"suite", r.suite}, {"version", r.version}, {"config", r.config}, {"checks", checks}};
}

std::string to_csv(const Report& r) {
  std::ostringstream os;
  os << "suite,name,status,point,orders,mismatch,time_ms\n";
  for (const auto& c : r.checks) {
    std::string m = c.mismatch ? json{{"location", c.mismatch->location},
                                      {"expected", c.mismatch->expected},
                                      {"actual", c.mismatch->actual}}
                                     .dump()
                               : "";
    os << r.suite << ',' << csv_escape(c.name) << ',' << (c.pass ? "pass" : "fail") << ','
       << csv_escape(c.point.dump()) << ',' << csv_escape(c.orders.dump()) << ',' << csv_escape(m) << ','
       << c.time_ms << '\n';
  }
  return os.str();
}

}  // namespace qkz
