#include "kostka/fermionic.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace kostka {

namespace {

std::vector<std::vector<int>> partitions_of(long long m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(long long, int)> rec = [&](long long rem, int maxp) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = static_cast<int>(std::min<long long>(rem, maxp)); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(m, static_cast<int>(m));
  return out;
}

int part_at(const std::vector<int>& p, int i) {  // 1-based
  return (i >= 1 && i <= static_cast<int>(p.size())) ? p[i - 1] : 0;
}

long long choose2(long long x) { return x * (x - 1) / 2; }

}  // namespace

QPoly fermionic_f(const LMatrix& L, const Partition& lambda) {
  int n = L.rows();
  int N = L.cols();
  if (lambda.size() != L.weight()) return QPoly();
  if (lambda.height() > n) return QPoly();

  // required |alpha^{(a)}| for a = 1..n-1; levels >= n vanish since
  // sum_j j*lbar_j^{(a)} = |mu| and height(lambda) <= n
  std::vector<long long> sizes;
  for (int a = 1; a < n; ++a) {
    long long s = 0;
    for (int j = 1; j <= N; ++j) s += static_cast<long long>(j) * L.ell_bar(a, j);
    for (int b = 0; b < a; ++b) s -= lambda.part(b);
    if (s < 0) return QPoly();
    sizes.push_back(s);
  }

  long long imax = static_cast<long long>(N);
  for (long long s : sizes) imax = std::max(imax, s);
  ++imax;

  std::vector<std::vector<std::vector<int>>> levels;
  for (long long s : sizes) levels.push_back(partitions_of(s));

  QPoly res;
  std::vector<const std::vector<int>*> alpha(sizes.size());
  auto at = [&](int a, int i) -> int {  // alpha_i^{(a)}, alpha^{(0)} = 0
    if (a < 1 || a > static_cast<int>(alpha.size())) return 0;
    return part_at(*alpha[a - 1], i);
  };

  std::function<void(std::size_t)> rec = [&](std::size_t lev) {
    if (lev < alpha.size()) {
      for (const auto& p : levels[lev]) {
        alpha[lev] = &p;
        rec(lev + 1);
      }
      return;
    }
    QPoly term(1);
    for (int a = 1; a <= n; ++a) {
      long long cum = 0;
      for (int i = 1; i <= imax; ++i) {
        cum += at(a - 1, i) - 2LL * at(a, i) + at(a + 1, i);
        long long P = cum + L.ell(a, i);
        long long d = at(a, i) - at(a, i + 1);
        QPoly f = qbinom(P + d, d);
        if (f.is_zero()) return;
        term = term * f;
      }
    }
    long long cexp = 0;
    for (int a = 1; a <= n; ++a)
      for (int i = 1; i <= imax; ++i) {
        long long A = 0;
        for (int b = a; b <= n; ++b)
          for (int k = i; k <= N; ++k) A += L.at(b, k);
        cexp += choose2(A + at(a - 1, i) - at(a, i));
      }
    res += term.shifted(Rational(cexp));
  };
  rec(0);
  return res;
}

QPoly kr_kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("|lambda| != |mu|");
  std::vector<int> mt = mu.transpose().parts();
  int nlev = lambda.height();
  std::vector<long long> sizes;
  for (int a = 1; a < nlev; ++a) {
    long long s = 0;
    for (int b = a; b < nlev; ++b) s += lambda.part(b);
    if (s == 0) break;
    sizes.push_back(s);
  }
  long long imax = static_cast<long long>(mt.size());
  for (long long s : sizes) imax = std::max(imax, s);
  ++imax;

  std::vector<std::vector<std::vector<int>>> levels;
  for (long long s : sizes) levels.push_back(partitions_of(s));

  QPoly res;
  std::vector<const std::vector<int>*> alpha(sizes.size());
  auto at = [&](int a, int i) -> int {  // alpha^{(0)} = mu^T
    if (a == 0) return part_at(mt, i);
    if (a < 0 || a > static_cast<int>(alpha.size())) return 0;
    return part_at(*alpha[a - 1], i);
  };

  std::function<void(std::size_t)> rec = [&](std::size_t lev) {
    if (lev < alpha.size()) {
      for (const auto& p : levels[lev]) {
        alpha[lev] = &p;
        rec(lev + 1);
      }
      return;
    }
    QPoly term(1);
    int atop = static_cast<int>(alpha.size());
    for (int a = 1; a <= atop; ++a) {
      long long cum = 0;
      for (int i = 1; i <= imax; ++i) {
        cum += at(a - 1, i) - 2LL * at(a, i) + at(a + 1, i);
        long long d = at(a, i) - at(a, i + 1);
        QPoly f = qbinom(cum + d, d);
        if (f.is_zero()) return;
        term = term * f;
      }
    }
    long long cexp = 0;
    for (int a = 1; a <= atop + 1; ++a)
      for (int i = 1; i <= imax; ++i) cexp += choose2(at(a - 1, i) - at(a, i));
    res += term.shifted(Rational(cexp));
  };
  rec(0);
  return res;
}

bool fermionic_recurrence_check(const LMatrix& L, const Partition& lambda, int i, int a) {
  if (i < 1 || i >= L.cols() || a < 1 || a >= L.rows())
    throw std::invalid_argument("recurrence needs 1 <= i < N, 1 <= a < n");
  if (L.at(a, i) < 2) throw std::invalid_argument("recurrence needs L_i^{(a)} >= 2");
  LMatrix l1 = L;
  if (i > 1) l1.bump(a, i - 1, 1);
  l1.bump(a, i, -2);
  l1.bump(a, i + 1, 1);
  LMatrix l2 = L;
  if (a > 1) l2.bump(a - 1, i, 1);
  l2.bump(a, i, -2);
  l2.bump(a + 1, i, 1);
  QPoly rhs = fermionic_f(l1, lambda).shifted(Rational(L.ell_bar(a, i) - a)) +
              fermionic_f(l2, lambda);
  return fermionic_f(L, lambda) == rhs;
}

bool kf_theorem_hypothesis(const LMatrix& L) {
  bool rows = true;
  for (int a = 1; a + 2 <= L.rows() && rows; ++a)
    for (int i = 1; i <= L.cols(); ++i)
      if (L.at(a, i) < L.at(a + 2, i)) { rows = false; break; }
  if (rows) return true;
  bool cols = true;
  for (int a = 1; a <= L.rows() && cols; ++a)
    for (int i = 1; i + 2 <= L.cols(); ++i)
      if (L.at(a, i) < L.at(a, i + 2)) { cols = false; break; }
  return cols;
}

}  // namespace kostka
