#include "qkz/param.hpp"

#include <random>
#include <vector>

namespace qkz {

Rat ParamPoint::rd(int i) const {
  switch (i) {
    case 1: return rd1;
    case 2: return rd2;
    case 3: return rd3;
    case 4: return rd4;
  }
  throw DomainError("mass index out of range");
}

std::array<Rat, 4> ParamPoint::T() const {
  Rat sq = sqrt_q(), st = sqrt_t();
  return {d(1) * st / sq, sq / (st * Q() * d(2)), sq / (st * d(3)), d(4) / (sq * st * Q())};
}

ParamPoint ParamPoint::with_masses(int mm, int nn) const {
  ParamPoint r = *this;
  r.m = mm;
  r.n = nn;
  r.rd2 = ipow(rq, -mm);
  r.rd3 = ipow(rq, -nn);
  return r;
}

bool ParamPoint::operator==(const ParamPoint& o) const {
  return rq == o.rq && rt == o.rt && rQ == o.rQ && rd1 == o.rd1 && rd2 == o.rd2 && rd3 == o.rd3 &&
         rd4 == o.rd4 && m == o.m && n == o.n;
}

Rat equation_lambda(const ParamPoint& p, int k, int l) {
  int a = k - l;
  Rat q = p.q(), t = p.t();
  return ipow(q, static_cast<long>(a) * (a + 1)) * ipow(q * t * p.Q(), -a) * ipow(t, -l);
}

bool passes_guards(const ParamPoint& p, int guard) {
  for (const Rat* r : {&p.rq, &p.rt, &p.rQ, &p.rd1, &p.rd2, &p.rd3, &p.rd4})
    if (sgn(*r) == 0) return false;
  for (int i = 1; i <= 4; ++i)
    if (p.rd(i) == 1 || p.rd(i) == -1) return false;
  Rat q = p.q(), t = p.t(), Q = p.Q();
  if (q == 1 || t == 1) return false;
  std::vector<Rat> qp, tp, Qp;
  for (int e = -guard; e <= guard; ++e) {
    qp.push_back(ipow(q, e));
    tp.push_back(ipow(t, e));
    Qp.push_back(ipow(Q, e));
  }
  for (int a = 0; a <= 2 * guard; ++a)
    for (int b = 0; b <= 2 * guard; ++b) {
      Rat ab = qp[a] * tp[b];
      for (int c = 0; c <= 2 * guard; ++c) {
        if (a == guard && b == guard && c == guard) continue;
        if (ab * Qp[c] == 1) return false;
      }
    }
  for (int k = 0; k <= guard; ++k)
    for (int l = 0; l <= guard; ++l)
      if ((k || l) && equation_lambda(p, k, l) == 1) return false;
  return true;
}

ParamPoint sample_generic_point(std::uint64_t seed, int guard) {
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    long num = 2 + static_cast<long>(rng() % 96);
    long den = 2 + static_cast<long>(rng() % 96);
    Rat r(num, den);
    r.canonicalize();
    return r;
  };
  for (int attempt = 0; attempt < 10000; ++attempt) {
    ParamPoint p;
    p.rq = draw();
    p.rt = draw();
    p.rQ = draw();
    p.rd1 = draw();
    p.rd2 = draw();
    p.rd3 = draw();
    p.rd4 = draw();
    if (passes_guards(p, guard)) return p;
  }
  throw SamplingError("no generic point after 10^4 resamples");
}

nlohmann::json to_json(const ParamPoint& p) {
  nlohmann::json j = {{"rq", p.rq.get_str()},   {"rt", p.rt.get_str()},   {"rQ", p.rQ.get_str()},
                      {"rd1", p.rd1.get_str()}, {"rd2", p.rd2.get_str()}, {"rd3", p.rd3.get_str()},
                      {"rd4", p.rd4.get_str()}};
  if (p.m) j["m"] = *p.m;
  if (p.n) j["n"] = *p.n;
  return j;
}

ParamPoint point_from_json(const nlohmann::json& j) {
  ParamPoint p;
  p.rq = parse_rat(j.at("rq").get<std::string>());
  p.rt = parse_rat(j.at("rt").get<std::string>());
  p.rQ = parse_rat(j.at("rQ").get<std::string>());
  p.rd1 = parse_rat(j.at("rd1").get<std::string>());
  p.rd2 = parse_rat(j.at("rd2").get<std::string>());
  p.rd3 = parse_rat(j.at("rd3").get<std::string>());
  p.rd4 = parse_rat(j.at("rd4").get<std::string>());
  if (j.contains("m")) p.m = j.at("m").get<int>();
  if (j.contains("n")) p.n = j.at("n").get<int>();
  if (p.m && p.n) p = p.with_masses(*p.m, *p.n);
  return p;
}

}  // namespace qkz
