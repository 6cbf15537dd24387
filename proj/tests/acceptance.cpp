// One line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qkz/suites.hpp"

using namespace qkz;

namespace {

struct Outcome {
  bool pass = true;
  size_t checks = 0, failed = 0;
  double seconds = 0;
  std::string note;
};

Outcome run(std::initializer_list<const char*> suites, std::function<void(SuiteConfig&)> tweak = {}) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  for (const char* id : suites) {
    SuiteConfig cfg;
    cfg.suite = id;
    if (tweak) tweak(cfg);
    Report r = run_suite(cfg);
    for (const auto& c : r.checks) {
      ++o.checks;
      if (c.pass) continue;
      ++o.failed;
      o.pass = false;
      if (o.note.empty() && c.mismatch)
        o.note = std::string(id) + "/" + c.name + " at " + c.mismatch->location.dump() + ": expected " +
                 c.mismatch->expected + ", got " + c.mismatch->actual;
    }
    if (r.checks.empty()) {
      o.pass = false;
      o.note = std::string(id) + " produced no checks";
    }
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return o;
}

void within(Outcome& o, double limit) {
  if (o.seconds > limit) {
    o.pass = false;
    o.note = "took " + std::to_string(o.seconds) + " s, limit " + std::to_string(limit) + " s";
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> body;
  };
  std::vector<Criterion> all = {
      {1, "SHAKIROV_EQ solver == Laumon sum, kmax = lmax = 4, 3 seeds",
       [] {
         Outcome o = run({"SHAKIROV_EQ"});
         within(o, 3 * 120.0);
         return o;
       }},
      {2, "RMATRIX_3WAY three constructions and example displays",
       [] {
         Outcome o = run({"RMATRIX_3WAY"});
         within(o, 10.0);
         return o;
       }},
      {3, "QKZ_MATRIX q-KZ through Lambda^3", [] { return run({"QKZ_MATRIX"}); }},
      {4, "AL_EQ_JACKSON Jackson vs Laumon, m + n <= 3, Lambda^3", [] { return run({"AL_EQ_JACKSON"}); }},
      {5, "COMMUTATIVITY R D2 A = A R D2 and A = s T(R) D, N <= 4", [] { return run({"COMMUTATIVITY"}); }},
      {6, "ITO_QKZ three difference equations, N <= 3, Lambda^2", [] { return run({"ITO_QKZ"}); }},
      {7, "NEKRASOV_3WAY bracket, floor and box forms, 200 pairs",
       [] {
         Outcome o = run({"NEKRASOV_3WAY"});
         within(o, 30.0);
         return o;
       }},
      {8, "FOURD_LIMIT jets, H_4d, KZ split, 4x4 display", [] { return run({"FOURD_LIMIT"}); }},
      {9, "PENTAGON order 6 + BAILEY 10W9 n <= 4", [] { return run({"PENTAGON", "BAILEY"}); }},
      {10, "SHUFFLE subset sum == antisymmetrization, N <= 4",
       [] {
         Outcome o = run({"SHUFFLE"});
         within(o, 10.0);
         return o;
       }},
      {11, "COUPLED both residuals to total order 4", [] { return run({"COUPLED"}); }},
      {12, "DUAL_QKZ + HEINE_EXAMPLE", [] { return run({"DUAL_QKZ", "HEINE_EXAMPLE"}); }},
  };

  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("[%s] criterion %2d: %s (%zu checks, %.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                o.checks, o.seconds, o.note.empty() ? "" : " -- ", o.note.c_str());
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
