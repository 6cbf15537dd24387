#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "qkz/scalar.hpp"

namespace qkz {

// Fourth roots of q, t, Q, d1..d4. Every half or quarter power used
// downstream is a monomial in these.
struct ParamPoint {
  Rat rq, rt, rQ, rd1, rd2, rd3, rd4;
  std::optional<int> m, n;

  Rat q() const { return ipow(rq, 4); }
  Rat t() const { return ipow(rt, 4); }
  Rat Q() const { return ipow(rQ, 4); }
  Rat rd(int i) const;
  Rat d(int i) const { return ipow(rd(i), 4); }
  Rat kappa() const { return ipow(rt, -2); }
  Rat sqrt_kappa() const { return Rat(1) / rt; }
  Rat sqrt_q() const { return rq * rq; }
  Rat sqrt_t() const { return rt * rt; }
  Rat sqrt_Q() const { return rQ * rQ; }
  Rat sqrt_d(int i) const { return rd(i) * rd(i); }

  // T_1..T_4 of the change of variables to the Hamiltonian masses
  std::array<Rat, 4> T() const;

  // d2 = q^-m, d3 = q^-n exactly
  ParamPoint with_masses(int m, int n) const;

  bool operator==(const ParamPoint& o) const;
};

struct SamplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reduced fractions p/s with 2 <= p,s <= 97 from a seeded mt19937_64,
// resampled until the degeneracy guards pass.
ParamPoint sample_generic_point(std::uint64_t seed, int guard = 8);

// The guard predicate used by the sampler.
bool passes_guards(const ParamPoint& p, int guard);

// Diagonal of the difference operator on x^k (Lambda/x)^l.
Rat equation_lambda(const ParamPoint& p, int k, int l);

nlohmann::json to_json(const ParamPoint& p);
ParamPoint point_from_json(const nlohmann::json& j);

}  // namespace qkz
