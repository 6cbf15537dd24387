#include "qkz/laumon.hpp"

#include <algorithm>
#include <stdexcept>

namespace qkz {

namespace {

int floor_div(int a, int n) {
  int q = a / n;
  if ((a % n != 0) && ((a < 0) != (n < 0))) --q;
  return q;
}
int mod(int a, int n) { return a - n * floor_div(a, n); }

void partitions_rec(int n, int maxp, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int f = std::min(n, maxp); f >= 1; --f) {
    cur.push_back(f);
    partitions_rec(n - f, f, cur, out);
    cur.pop_back();
  }
}

// [u q^a kappa^b; kappa^n]_cnt
Rat bracket_run(const Rat& su, const ParamPoint& p, int a, int b, int n, int cnt) {
  Rat r = 1;
  for (int i = 0; i < cnt; ++i) r *= nek_bracket(su, p, a, b + n * i);
  return r;
}

}  // namespace

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i)
    if (parts[i] <= 0 || (i && parts[i] > parts[i - 1])) throw DomainError("not a partition");
}

int Partition::size() const {
  int s = 0;
  for (int x : parts) s += x;
  return s;
}

Partition Partition::transpose() const {
  std::vector<int> t;
  for (int j = 1; j <= part(1); ++j) {
    int c = 0;
    for (int x : parts) c += x >= j;
    t.push_back(c);
  }
  return Partition(std::move(t));
}

int Partition::odd_sum() const {
  int s = 0;
  for (size_t i = 0; i < parts.size(); i += 2) s += parts[i];
  return s;
}

int Partition::even_sum() const {
  int s = 0;
  for (size_t i = 1; i < parts.size(); i += 2) s += parts[i];
  return s;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions_of needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<PartitionPair> enumerate_pairs(int total_size) {
  std::vector<PartitionPair> out;
  for (int a = total_size; a >= 0; --a)
    for (const auto& l1 : partitions_of(a))
      for (const auto& l2 : partitions_of(total_size - a)) out.push_back({l1, l2});
  return out;
}

Rat nek_bracket(const Rat& sqrt_u, const ParamPoint& p, int a, int b) {
  Rat sv = sqrt_u * ipow(p.rq, 2 * a) * ipow(p.rt, -b);
  return Rat(1) / sv - sv;
}

Rat nek_orb(int k, int n, const Partition& lam, const Partition& mu, const Rat& sqrt_u, const ParamPoint& p) {
  if (n < 1) throw DomainError("nek_orb needs n >= 1");
  k = mod(k, n);
  Partition lt = lam.transpose(), mt = mu.transpose();
  int bound = lt.length() + mt.length() + n + 2;
  Rat r = 1;
  for (int j = 1; j < bound; ++j)
    for (int i = 1; i <= j; ++i) {
      int lo = lt.part(j + 1) - mt.part(i);
      for (int l = 0; l < lt.part(j) - lt.part(j + 1); ++l)
        if (mod(lo + l - k, n) == 0) r *= nek_bracket(sqrt_u, p, j - i, lo + l);
      int lo2 = lt.part(i) - mt.part(j);
      for (int l = 0; l < mt.part(j) - mt.part(j + 1); ++l)
        if (mod(lo2 + l - k, n) == 0) r *= nek_bracket(sqrt_u, p, i - j - 1, lo2 + l);
    }
  return r;
}

Rat nek_orb_floor(int k, int n, const Partition& lam, const Partition& mu, const Rat& sqrt_u,
                  const ParamPoint& p) {
  if (n < 1) throw DomainError("nek_orb_floor needs n >= 1");
  k = mod(k, n);
  Partition lt = lam.transpose(), mt = mu.transpose();
  int bound = lt.length() + mt.length() + n + 2;
  Rat r = 1;
  for (int j = 1; j < bound; ++j)
    for (int i = 1; i <= j; ++i) {
      int res = mod(mt.part(i), n);
      int e = k + n * floor_div(lt.part(j + 1) + n - 1 - k - res, n) - n * floor_div(mt.part(i), n);
      int cnt = floor_div(lt.part(j) + n - 1 - k - res, n) - floor_div(lt.part(j + 1) + n - 1 - k - res, n);
      r *= bracket_run(sqrt_u, p, j - i, e, n, cnt);
      int res2 = mod(mt.part(j), n), nres = mod(-lt.part(i), n);
      int e2 = k + n * floor_div(lt.part(i) + n - 1 - k - res2, n) - n * floor_div(mt.part(j), n);
      int cnt2 = floor_div(mt.part(j) + k + nres, n) - floor_div(mt.part(j + 1) + k + nres, n);
      r *= bracket_run(sqrt_u, p, i - j - 1, e2, n, cnt2);
    }
  return r;
}

Rat nek_box_total(const Partition& lam, const Partition& mu, const Rat& sqrt_u, const ParamPoint& p) {
  Partition lt = lam.transpose(), mt = mu.transpose();
  Rat num = 1, pre = 1;
  auto box = [&](int a, int b) {
    Rat s = sqrt_u * ipow(p.rq, 2 * a) * ipow(p.rt, -b);
    num *= 1 - s * s;
    pre /= s;
  };
  for (int i = 1; i <= lam.length(); ++i)
    for (int j = 1; j <= lam.part(i); ++j) box(lam.part(i) - j, -mt.part(j) + i - 1);
  for (int i = 1; i <= mu.length(); ++i)
    for (int j = 1; j <= mu.part(i); ++j) box(-mu.part(i) + j - 1, lt.part(j) - i);
  return num * pre;
}

int pair_x1_degree(const PartitionPair& pr) { return pr.first.odd_sum() + pr.second.even_sum(); }
int pair_x2_degree(const PartitionPair& pr) { return pr.first.even_sum() + pr.second.odd_sum(); }

Rat z_al_pair_weight(const PartitionPair& pr, const ParamPoint& p) {
  const Partition empty;
  const Partition* lam[2] = {&pr.first, &pr.second};
  Rat sq = p.rq * p.rq, sQ = p.rQ * p.rQ;
  Rat su[2] = {sq * sQ / (p.rd3 * p.rd3), sq / (p.rt * p.rd1 * p.rd1)};
  Rat sv[2] = {Rat(1), sQ * p.rt};
  Rat sw[2] = {Rat(1) / (p.rd2 * p.rd2), sQ * p.rt / (p.rd4 * p.rd4)};
  Rat w = 1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      int kk = mod(j - i, 2);
      w *= nek_orb(kk, 2, empty, *lam[j], su[i] / sv[j], p);
      w *= nek_orb(kk, 2, *lam[i], empty, sv[i] / sw[j], p);
      Rat vec = nek_orb(kk, 2, *lam[i], *lam[j], sv[i] / sv[j], p);
      if (sgn(vec) == 0) throw DomainError("vanishing vector multiplet factor");
      w /= vec;
    }
  return w;
}

ConeSeries z_al(const ParamPoint& p, int kmax, int lmax) {
  Rat x1 = -p.rQ * p.rQ * p.rd1 * p.rd1 * p.rd2 * p.rd2 * p.rt * p.rt;
  Rat x2 = -p.rd3 * p.rd3 * p.rd4 * p.rd4 / (p.q() * p.rQ * p.rQ);
  ConeSeries res(kmax, lmax);
  for (int D = 0; D <= kmax + lmax; ++D)
    for (const auto& pr : enumerate_pairs(D)) {
      int A = pair_x1_degree(pr), B = pair_x2_degree(pr);
      if (A > kmax || B > lmax) continue;
      res.at(A, B) += z_al_pair_weight(pr, p) * ipow(x1, A) * ipow(x2, B);
    }
  return res;
}

TruncatedZal z_al_truncated(int m, int n, const ParamPoint& p, int lmax) {
  if (m < 0 || n < 0 || lmax < 0) throw DomainError("z_al_truncated needs m, n, lmax >= 0");
  if (p.d(2) * ipow(p.q(), m) != 1 || p.d(3) * ipow(p.q(), n) != 1)
    throw DomainError("z_al_truncated needs d2 = q^-m and d3 = q^-n");
  int kmax = m + lmax;
  Rat x1 = -p.rQ * p.rQ * p.rd1 * p.rd1 * p.rd2 * p.rd2 * p.rt * p.rt;
  Rat x2 = -p.rd3 * p.rd3 * p.rd4 * p.rd4 / (p.q() * p.rQ * p.rQ);
  TruncatedZal out;
  out.m = m;
  out.n = n;
  ConeSeries z(kmax, lmax);
  for (int D = 0; D <= kmax + lmax; ++D)
    for (const auto& pr : enumerate_pairs(D)) {
      int A = pair_x1_degree(pr), B = pair_x2_degree(pr);
      if (A > kmax || B > lmax) continue;
      ++out.pairs;
      Rat w = z_al_pair_weight(pr, p);
      if (sgn(w) == 0) {
        ++out.vanishing_pairs;
        continue;
      }
      if (A - B < -n || A - B > m)
        throw MassTruncationError("pair of sizes (" + std::to_string(pr.first.size()) + "," +
                                  std::to_string(pr.second.size()) + ") contributes outside the x-window");
      z.at(A, B) += w * ipow(x1, A) * ipow(x2, B);
    }
  for (int a = -n; a <= m; ++a) {
    std::vector<Rat> c(lmax + 1);
    for (int l = 0; l <= lmax; ++l)
      if (a + l >= 0) c[l] = z.at(a + l, l);
    out.comps.emplace_back(std::move(c), lmax);
  }
  return out;
}

}  // namespace qkz
