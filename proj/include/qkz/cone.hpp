#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qkz/param.hpp"
#include "qkz/scalar.hpp"

namespace qkz {

// Truncated series in x^k (Lambda/x)^l on the rectangle k <= kmax, l <= lmax.
class ConeSeries {
 public:
  ConeSeries() = default;
  ConeSeries(int kmax, int lmax);
  static ConeSeries one(int kmax, int lmax);
  static ConeSeries monomial(int kmax, int lmax, int k, int l, const Rat& c = 1);

  int kmax() const { return kmax_; }
  int lmax() const { return lmax_; }
  const Rat& at(int k, int l) const { return c_[idx(k, l)]; }
  Rat& at(int k, int l) { return c_[idx(k, l)]; }
  bool in_range(int k, int l) const { return k >= 0 && l >= 0 && k <= kmax_ && l <= lmax_; }

  ConeSeries operator-(const ConeSeries& o) const;
  ConeSeries operator+(const ConeSeries& o) const;
  bool operator==(const ConeSeries& o) const { return kmax_ == o.kmax_ && lmax_ == o.lmax_ && c_ == o.c_; }
  bool is_zero() const;
  // restriction to a smaller rectangle
  ConeSeries restrict(int kmax, int lmax) const;
  // first (k, l) where the two differ, scanning by total degree
  std::optional<std::pair<int, int>> first_mismatch(const ConeSeries& o) const;

 private:
  size_t idx(int k, int l) const { return static_cast<size_t>(k) * (lmax_ + 1) + l; }
  int kmax_ = 0, lmax_ = 0;
  std::vector<Rat> c_;
};

enum class Axis { X, LambdaOverX, Lambda };

// q^{dir (a+offset)(a+offset+1)/2} on x-degree a = k - l
ConeSeries borel(const ConeSeries& s, const Rat& q, int direction = 1, int offset = 0);
// p_x^{k-l} p_lambda^l
ConeSeries shift(const ConeSeries& s, const Rat& p_x, const Rat& p_lambda);
ConeSeries mul_phi(const ConeSeries& s, const Rat& c, const Rat& q, Axis axis, bool inverted);
// multiplication by a series in the given monomial
ConeSeries mul_axis_series(const ConeSeries& s, const std::vector<Rat>& coeffs, Axis axis);
ConeSeries mul(const ConeSeries& a, const ConeSeries& b);

ConeSeries apply_HS(const ConeSeries& s, const ParamPoint& p);
// H_S T^{-1}_{qtQ,x} T^{-1}_{t,Lambda}
ConeSeries equation_op(const ConeSeries& s, const ParamPoint& p);

struct EquationSolution {
  ConeSeries psi;
  // diagonal of the operator read off column by column
  std::vector<std::vector<Rat>> diagonal;
};

struct ResonanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

EquationSolution solve_equation_full(const ParamPoint& p, int kmax, int lmax);
ConeSeries solve_shakirov(const ParamPoint& p, int kmax, int lmax);

// Coupled system for psi and its transform chi
struct CoupledResult {
  ConeSeries chi, residual1, residual2;
};
ParamPoint coupled_transform(const ParamPoint& p);
// (k, l) scaled by (-d2/q)^k (-d4)^l with p's d2, d4
ConeSeries coupled_rescale(const ConeSeries& s, const ParamPoint& p);
// g K applied to s at p
ConeSeries apply_gK(const ConeSeries& s, const ParamPoint& p);
CoupledResult coupled_step(const ParamPoint& p, const ConeSeries& psi);

// Expansion of phi(alpha beta Lambda) / (phi(alpha x) phi(beta Lambda/x)) computed
// through mul_phi, and the closed double sum.
std::pair<ConeSeries, ConeSeries> pentagon_sides(const Rat& alpha, const Rat& beta, const Rat& q, int order);

// Borel lemma with x^n shift: B_n (1/(phi(alpha x) phi(beta Lambda/x))) against
// q^{n(n+1)/2} phi(-q^{1+n} alpha x) phi(-q^{-n} beta Lambda/x) / phi(alpha beta Lambda),
// and the inverse-Borel form. Returns (lhs, rhs) pairs.
std::pair<ConeSeries, ConeSeries> borel_lemma_sides(const Rat& alpha, const Rat& beta, const Rat& q, int n,
                                                    int order);
std::pair<ConeSeries, ConeSeries> borel_inverse_lemma_sides(const Rat& alpha, const Rat& beta, const Rat& q,
                                                            int n, int order);

}  // namespace qkz
