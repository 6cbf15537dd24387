#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <concepts>
#include <type_traits>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qkz {

using Rat = mpq_class;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat ipow(const Rat& x, long e) {
  if (e < 0) {
    if (sgn(x) == 0) throw DomainError("zero to a negative power");
    return ipow(Rat(1) / x, -e);
  }
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

inline bool is_invertible(const Rat& x) { return sgn(x) != 0; }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline std::string to_string(const Rat& x) { return x.get_str(); }

// "p/s" or "p"; throws on malformed input
inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0) throw DomainError("bad rational '" + s + "'");
  r.canonicalize();
  if (r.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
  return r;
}

// Truncated univariate series over Rat. Order kExact marks an exact
// polynomial (a promoted constant); mixing orders keeps the smaller one.
template <class Tag>
class Series {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max();

  Series() = default;
  Series(int v) : Series(Rat(v)) {}
  Series(const Rat& v) {
    if (sgn(v) != 0) c_.push_back(v);
  }
  Series(std::vector<Rat> c, int order) : c_(std::move(c)), order_(order) {
    if (order_ < 0) throw DomainError("negative series order");
    trim();
  }

  static Series variable(int order) { return Series({Rat(0), Rat(1)}, order); }

  int order() const { return order_; }
  bool exact() const { return order_ == kExact; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat operator[](int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rat(0); }

  Series truncated(int order) const { return Series(c_, std::min(order, order_)); }

  Series operator-() const {
    Series r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Series& operator+=(const Series& o) {
    order_ = std::min(order_, o.order_);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Series& operator-=(const Series& o) { return *this += -o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }
  Series& operator/=(const Series& o) { return *this = *this / o; }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b) {
    int ord = std::min(a.order_, b.order_);
    if (a.c_.empty() || b.c_.empty()) return Series({}, ord);
    size_t n = a.c_.size() + b.c_.size() - 1;
    if (ord != kExact) n = std::min(n, static_cast<size_t>(ord) + 1);
    std::vector<Rat> r(n);
    for (size_t i = 0; i < a.c_.size() && i < n; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (size_t j = 0; j < b.c_.size() && i + j < n; ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Series(std::move(r), ord);
  }
  friend Series operator/(const Series& a, const Series& b) {
    if (b.exact() && b.c_.size() == 1) {
      Series r = a;
      for (auto& x : r.c_) x /= b.c_[0];
      return r;
    }
    return a * b.inverse();
  }

  Series inverse() const {
    if (c_.empty() || sgn(c_[0]) == 0) throw DomainError("series inverse needs a nonzero constant term");
    if (exact()) {
      if (c_.size() == 1) return Series(Rat(1) / c_[0]);
      throw DomainError("inverse of an exact non-constant series has no truncation order");
    }
    std::vector<Rat> r(order_ + 1);
    Rat inv0 = Rat(1) / c_[0];
    r[0] = inv0;
    for (int k = 1; k <= order_; ++k) {
      Rat s;
      for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j) s += c_[j] * r[k - j];
      r[k] = -s * inv0;
    }
    return Series(std::move(r), order_);
  }

  // f(z) -> f(c z)
  Series scale_var(const Rat& c) const {
    Series r = *this;
    Rat p = 1;
    for (auto& x : r.c_) {
      x *= p;
      p *= c;
    }
    r.trim();
    return r;
  }

  Series derivative() const {
    std::vector<Rat> r;
    for (size_t k = 1; k < c_.size(); ++k) r.push_back(c_[k] * static_cast<long>(k));
    return Series(std::move(r), order_ == kExact ? kExact : std::max(order_ - 1, 0));
  }

  // equality modulo the common truncation order
  friend bool operator==(const Series& a, const Series& b) {
    int ord = std::min(a.order_, b.order_);
    size_t n = std::max(a.c_.size(), b.c_.size());
    if (ord != kExact) n = std::min(n, static_cast<size_t>(ord) + 1);
    for (size_t k = 0; k < n; ++k)
      if (a[static_cast<int>(k)] != b[static_cast<int>(k)]) return false;
    return true;
  }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  void trim() {
    if (order_ != kExact && c_.size() > static_cast<size_t>(order_) + 1) c_.resize(order_ + 1);
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  std::vector<Rat> c_;
  int order_ = kExact;
};

struct HTag {};
struct LambdaTag {};
using HJet = Series<HTag>;
using LambdaSeries = Series<LambdaTag>;

template <class T>
struct is_series : std::false_type {};
template <class Tag>
struct is_series<Series<Tag>> : std::true_type {};

// The scalar rings generic code is written over. Expression templates of
// gmpxx deliberately fail this, so mixed calls fall back to Rat overloads.
template <class T>
concept Scalar = std::same_as<T, Rat> || is_series<T>::value;

template <class Tag>
bool is_invertible(const Series<Tag>& x) {
  return sgn(x[0]) != 0;
}
template <class Tag>
bool is_zero(const Series<Tag>& x) {
  return x.coeffs().empty();
}
template <class Tag>
std::string to_string(const Series<Tag>& x) {
  std::string s = "[";
  for (size_t k = 0; k < x.coeffs().size(); ++k) s += (k ? ", " : "") + x.coeffs()[k].get_str();
  s += "]";
  if (!x.exact()) s += " + O(^" + std::to_string(x.order() + 1) + ")";
  return s;
}

template <class Tag>
Series<Tag> ipow(const Series<Tag>& x, long e) {
  using T = Series<Tag>;
  if (e < 0) return T(1) / ipow(x, -e);
  T r(1), b = x;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

// exp(c h) to order K
inline HJet exp_jet(const Rat& c, int K) {
  if (K < 0) throw DomainError("exp_jet needs K >= 0");
  std::vector<Rat> r(K + 1);
  r[0] = 1;
  for (int k = 1; k <= K; ++k) r[k] = r[k - 1] * c / k;
  return HJet(std::move(r), K);
}

}  // namespace qkz
