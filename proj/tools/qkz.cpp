#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>

#include "qkz/cone.hpp"
#include "qkz/fourd.hpp"
#include "qkz/jackson.hpp"
#include "qkz/laumon.hpp"
#include "qkz/rmatrix.hpp"
#include "qkz/suites.hpp"

using namespace qkz;
using json = nlohmann::json;

namespace {

// Writes to the path, or stdout when it is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write to " + path + " failed");
}

std::string cone_csv(const ConeSeries& s) {
  std::ostringstream os;
  os << "k,l,numerator,denominator\n";
  for (int k = 0; k <= s.kmax(); ++k)
    for (int l = 0; l <= s.lmax(); ++l)
      os << k << ',' << l << ',' << s.at(k, l).get_num().get_str() << ',' << s.at(k, l).get_den().get_str() << '\n';
  return os.str();
}

json series_json(const LambdaSeries& s) {
  json c = json::array();
  for (int k = 0; k <= s.order() && s.order() != LambdaSeries::kExact; ++k) c.push_back(s[k].get_str());
  return json{{"order", s.order()}, {"coeffs", c}};
}

json series_vec_json(const std::vector<LambdaSeries>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(series_json(s));
  return a;
}

json matrix_json(const Matrix<Rat>& M) {
  json rows = json::array();
  for (size_t i = 0; i < M.rows(); ++i) {
    json r = json::array();
    for (size_t j = 0; j < M.cols(); ++j) r.push_back(M(i, j).get_str());
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the q-deformed Painleve / affine Laumon identities"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  SuiteConfig cfg;
  std::vector<std::uint64_t> seeds;
  int kmax = -1, lmax = -1, m = -1, n = -1, N = -1, jet = -1;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.suite, "suite id")->required();
  verify->add_option("--seed", seeds, "seed (repeatable)");
  verify->add_option("--points", cfg.points, "points per seed");
  verify->add_option("--kmax", kmax);
  verify->add_option("--lmax", lmax);
  verify->add_option("--m", m);
  verify->add_option("--n", n);
  verify->add_option("--N", N);
  verify->add_option("--jet-order", jet);
  verify->add_option("--out", cfg.out, "report path (stdout if absent)");
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));

  std::uint64_t seed = 1;
  std::string out, lambda;
  bool fourd = false;
  int sk = 4, sl = 4;
  auto* solve = app.add_subcommand("solve", "solve the non-stationary equation on a rectangle, CSV");
  solve->add_option("--kmax", sk);
  solve->add_option("--lmax", sl);
  solve->add_option("--seed", seed);
  solve->add_option("--out", out);

  int lm = -1, ln = -1;
  auto* laumon = app.add_subcommand("laumon", "affine Laumon coefficient dump, CSV");
  laumon->add_option("--kmax", sk);
  laumon->add_option("--lmax", sl);
  laumon->add_option("--seed", seed);
  laumon->add_option("--m", lm);
  laumon->add_option("--n", ln);
  laumon->add_option("--out", out);

  int rm = 1, rn = 0;
  auto* rmat = app.add_subcommand("rmatrix", "truncated R-matrix as exact fractions, JSON");
  rmat->add_option("--m", rm);
  rmat->add_option("--n", rn);
  rmat->add_option("--seed", seed);
  rmat->add_option("--lambda", lambda, "Lambda as p/s");
  rmat->add_flag("--fourd", fourd, "first jet order and H_4d instead");
  rmat->add_option("--out", out);

  int jl = 3;
  auto* jack = app.add_subcommand("jackson", "Jackson pairing components and residuals, JSON");
  jack->add_option("--m", rm);
  jack->add_option("--n", rn);
  jack->add_option("--lmax", jl);
  jack->add_option("--seed", seed);
  jack->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      if (!seeds.empty()) cfg.seeds = seeds;
      auto set = [](std::optional<int>& o, int v) {
        if (v >= 0) o = v;
      };
      set(cfg.kmax, kmax);
      set(cfg.lmax, lmax);
      set(cfg.m, m);
      set(cfg.n, n);
      set(cfg.N, N);
      if (jet >= 0) cfg.jet_order = jet;
      try {
        validate(cfg);
      } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
      }
      Report r = run_suite(cfg);
      emit(cfg.out, cfg.format == "csv" ? to_csv(r) : to_json(r).dump(2) + "\n");
      size_t failed = 0;
      for (const auto& c : r.checks) failed += !c.pass;
      std::cerr << r.suite << ": " << r.checks.size() - failed << "/" << r.checks.size() << " checks pass\n";
      return r.all_pass() ? 0 : 1;
    }
    if (solve->parsed()) {
      ParamPoint p = sample_generic_point(seed, std::max(8, sk + sl));
      emit(out, cone_csv(solve_shakirov(p, sk, sl)));
      return 0;
    }
    if (laumon->parsed()) {
      if ((lm >= 0) != (ln >= 0)) throw std::invalid_argument("--m and --n go together");
      ParamPoint p = sample_generic_point(seed, std::max(8, sk + sl));
      if (lm < 0) {
        emit(out, cone_csv(z_al(p, sk, sl)));
        return 0;
      }
      TruncatedZal z = z_al_truncated(lm, ln, p.with_masses(lm, ln), sl);
      std::ostringstream os;
      os << "a,l,numerator,denominator\n";
      for (int a = -ln; a <= lm; ++a)
        for (int l = 0; l <= sl; ++l) {
          Rat c = z.component(a)[l];
          os << a << ',' << l << ',' << c.get_num().get_str() << ',' << c.get_den().get_str() << '\n';
        }
      emit(out, os.str());
      return 0;
    }
    if (rmat->parsed()) {
      ParamPoint p = sample_generic_point(seed);
      Rat L = lambda.empty() ? p.rt * p.rQ : parse_rat(lambda);
      json j{{"m", rm}, {"n", rn}, {"Lambda", L.get_str()}, {"index_offset", -rn}};
      if (fourd) {
        std::mt19937_64 rng(seed);
        auto draw = [&] {
          Rat r(static_cast<long>(2 + rng() % 96), static_cast<long>(2 + rng() % 96));
          r.canonicalize();
          return r;
        };
        Rat m1 = draw(), m4 = -draw(), kappa = draw(), a = draw();
        Masses mv{m1, Rat(-rm), Rat(-rn), m4};
        H4d h = h4d_matrix(mv, kappa, a, rm, rn, L);
        j["masses"] = {m1.get_str(), mv[1].get_str(), mv[2].get_str(), m4.get_str()};
        j["kappa"] = kappa.get_str();
        j["a"] = a.get_str();
        j["r1"] = matrix_json(r1_fourd(mv, rm, rn, L));
        j["H"] = matrix_json(h.H);
        j["A0"] = matrix_json(h.A0);
        j["A1"] = matrix_json(h.A1);
      } else {
        j["point"] = to_json(p);
        j["r"] = matrix_json(r_via_linear_system<Rat>(rm, rn, p.d(1), p.d(4), L, p.q()));
      }
      emit(out, j.dump(2) + "\n");
      return 0;
    }
    if (jack->parsed()) {
      ParamPoint p = sample_generic_point(seed).with_masses(rm, rn);
      JacksonParams jp = jackson_params_from_point(p, rm, rn);
      JacksonParams jg = jackson_params_generic(sample_generic_point(seed));
      auto ito = ito_qkz_check(jg, rm, rn, jl);
      auto cmp = compare_al_jackson(p, rm, rn, jl);
      json j{{"m", rm},
             {"n", rn},
             {"lmax", jl},
             {"point", to_json(p)},
             {"params", {{"a1", jp.a1.get_str()}, {"a2", jp.a2.get_str()}, {"b1", jp.b1.get_str()},
                         {"b2", jp.b2.get_str()}, {"q", jp.q.get_str()}, {"t", jp.t.get_str()}}},
             {"components", series_vec_json(jackson_vector(jp, rm, rn, jl))},
             {"laumon_equal", cmp.equal},
             {"kappa0", cmp.kappa0.get_str()},
             {"residuals",
              {{"T_alpha", series_vec_json(ito.t_alpha)},
               {"T_1", series_vec_json(ito.t1)},
               {"T_2", series_vec_json(ito.t2)}}}};
      emit(out, j.dump(2) + "\n");
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
