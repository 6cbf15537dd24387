#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qkz/param.hpp"

using namespace qkz;

TEST_CASE("sampling is deterministic per seed") {
  for (std::uint64_t s : {1u, 2u, 3u, 99u}) CHECK(sample_generic_point(s) == sample_generic_point(s));
  CHECK_FALSE(sample_generic_point(1) == sample_generic_point(2));
}

TEST_CASE("fourth roots are small reduced fractions") {
  for (std::uint64_t s = 1; s <= 20; ++s) {
    ParamPoint p = sample_generic_point(s);
    for (const Rat* r : {&p.rq, &p.rt, &p.rQ, &p.rd1, &p.rd2, &p.rd3, &p.rd4}) {
      CHECK(sgn(*r) > 0);
      CHECK(abs(r->get_num()) <= 97);
      CHECK(r->get_den() <= 97);
    }
    CHECK(passes_guards(p, 8));
  }
}

TEST_CASE("powers are monomials in the roots") {
  ParamPoint p = sample_generic_point(5);
  CHECK(p.q() == p.rq * p.rq * p.rq * p.rq);
  CHECK(p.sqrt_q() * p.sqrt_q() == p.q());
  CHECK(p.kappa() * p.sqrt_t() == 1);
  CHECK(p.sqrt_kappa() * p.sqrt_kappa() == p.kappa());
  for (int i = 1; i <= 4; ++i) CHECK(p.sqrt_d(i) * p.sqrt_d(i) == p.d(i));
  CHECK_THROWS_AS(p.rd(5), DomainError);
}

TEST_CASE("with_masses pins d2 and d3 to inverse q powers") {
  ParamPoint p = sample_generic_point(7);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      ParamPoint r = p.with_masses(m, n);
      CHECK(r.d(2) * ipow(p.q(), m) == 1);
      CHECK(r.d(3) * ipow(p.q(), n) == 1);
      CHECK(r.rd1 == p.rd1);
      CHECK(r.rd4 == p.rd4);
      CHECK(*r.m == m);
      CHECK(*r.n == n);
    }
}

TEST_CASE("json round trip") {
  ParamPoint p = sample_generic_point(11).with_masses(2, 1);
  CHECK(point_from_json(to_json(p)) == p);
  ParamPoint g = sample_generic_point(12);
  CHECK(point_from_json(to_json(g)) == g);
  CHECK_FALSE(to_json(g).contains("m"));
}

TEST_CASE("guards reject degenerate points") {
  ParamPoint p = sample_generic_point(3);
  ParamPoint bad = p;
  bad.rd1 = 1;
  CHECK_FALSE(passes_guards(bad, 8));
  bad = p;
  bad.rq = 1;
  CHECK_FALSE(passes_guards(bad, 8));
  bad = p;
  bad.rt = bad.rq;  // t = q makes q^a t^-a collide with 1
  CHECK_FALSE(passes_guards(bad, 8));
}

TEST_CASE("T variables") {
  ParamPoint p = sample_generic_point(4);
  auto T = p.T();
  CHECK(T[0] * p.sqrt_q() == p.d(1) * p.sqrt_t());
  CHECK(T[2] * p.sqrt_t() * p.d(3) == p.sqrt_q());
  CHECK(T[1] * T[3] * ipow(p.Q(), 2) * p.d(2) * p.t() == p.d(4));
}
