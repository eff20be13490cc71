#include "kostka/identities.hpp"

#include "kostka/tableaux.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>

namespace kostka {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream o;
  o << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) o << ",";
    o << v[i];
  }
  o << ")";
  return o.str();
}

std::string mu_str(const RectList& mu) {
  std::ostringstream o;
  o << "[";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) o << ",";
    o << mu[i].width << "^" << mu[i].height;
  }
  o << "]";
  return o.str();
}

std::string lmatrix_str(const LMatrix& L) { return mu_str(from_lmatrix(L)); }

IdentityReport make_report(std::string name, std::string inst, QPoly lhs, QPoly rhs,
                           Clock::time_point t0) {
  IdentityReport r;
  r.identity = std::move(name);
  r.instance = std::move(inst);
  r.pass = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.elapsed_ms = ms_since(t0);
  return r;
}

std::vector<Partition> partitions_of_size(long long m, int max_height) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(long long, int)> rec = [&](long long rem, int maxp) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= max_height) return;
    for (int p = static_cast<int>(std::min<long long>(rem, maxp)); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(m, static_cast<int>(m));
  return out;
}

}  // namespace

const QPoly& SupernomialTable::s(const LMatrix& L, const std::vector<int>& lambda) {
  auto key = std::make_pair(from_lmatrix(L), lambda);
  auto it = s_.find(key);
  if (it != s_.end()) return it->second;
  QPoly v;
  bool ok = true;
  long long tot = 0;
  for (int x : lambda) {
    if (x < 0) ok = false;
    tot += x;
  }
  if (ok && tot == L.weight()) {
    std::vector<int> lam = lambda;
    lam.resize(n_, 0);
    v = supernomial(PathSpace{n_, lam, key.first});
  }
  return s_.emplace(std::move(key), std::move(v)).first->second;
}

const QPoly& SupernomialTable::ktilde(const LMatrix& L, const Partition& lambda) {
  auto key = std::make_pair(from_lmatrix(L), lambda);
  auto it = kt_.find(key);
  if (it != kt_.end()) return it->second;
  QPoly v;
  if (lambda.height() <= n_ && lambda.size() == L.weight()) {
    std::vector<int> lam = lambda.parts();
    lam.resize(n_, 0);
    v = cocharge_kostka(PathSpace{n_, lam, key.first});
  }
  return kt_.emplace(std::move(key), std::move(v)).first->second;
}

QPoly SupernomialTable::k(const LMatrix& L, const Partition& lambda) {
  return ktilde(L, lambda).substitute_inverse_q().shifted(Rational(mu_norm(from_lmatrix(L))));
}

IdentityReport check_sas_sb(const std::vector<int>& lambda, const RectList& mu, int n,
                            SupernomialTable* table) {
  auto t0 = Clock::now();
  SupernomialTable local(n);
  SupernomialTable& tab = table ? *table : local;
  int N = 1;
  for (const Rect& r : mu) N = std::max(N, r.width);
  LMatrix L = to_lmatrix(mu, n, N);
  QPoly lhs = tab.s(L, lambda);
  QPoly rhs;
  long long tot = 0;
  for (int x : lambda) tot += x;
  for (const Partition& eta : partitions_of_size(tot, n)) {
    long long kn = kostka_number(eta, lambda);
    if (kn == 0) continue;
    rhs += tab.ktilde(L, eta).shifted(Rational(0), Int(kn));
  }
  return make_report("SasSb", "lambda=" + vec_str(lambda) + " mu=" + mu_str(mu),
                     std::move(lhs), std::move(rhs), t0);
}

IdentityReport check_sbas_s(const Partition& lambda, const RectList& mu, int n,
                            SupernomialTable* table) {
  auto t0 = Clock::now();
  SupernomialTable local(n);
  SupernomialTable& tab = table ? *table : local;
  int N = 1;
  for (const Rect& r : mu) N = std::max(N, r.width);
  LMatrix L = to_lmatrix(mu, n, N);
  QPoly lhs = tab.ktilde(L, lambda);
  QPoly rhs;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    int sign = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    std::vector<int> shifted(n);
    bool neg = false;
    for (int i = 0; i < n; ++i) {
      shifted[i] = lambda.part(i) + perm[i] - (i + 1);
      if (shifted[i] < 0) neg = true;
    }
    if (neg) continue;
    rhs += tab.s(L, shifted).shifted(Rational(0), Int(sign));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return make_report("SbasS", "lambda=" + vec_str(lambda.parts()) + " mu=" + mu_str(mu),
                     std::move(lhs), std::move(rhs), t0);
}

IdentityReport check_duality(const Partition& lambda, const RectList& mu, int n,
                             SupernomialTable* table) {
  auto t0 = Clock::now();
  int N = 1, H = 1;
  for (const Rect& r : mu) {
    N = std::max(N, r.width);
    H = std::max(H, r.height);
  }
  SupernomialTable local_l(n);
  SupernomialTable& tabL = table ? *table : local_l;
  LMatrix L = to_lmatrix(mu, n, N);
  QPoly lhs = tabL.k(L, lambda);
  // the transposed content needs an alphabet covering the transposed heights
  RectList ms = mu_star(mu);
  int n2 = std::max(lambda.width(), N);
  SupernomialTable tabR(n2);
  LMatrix L2 = to_lmatrix(ms, n2, std::max(1, H));
  QPoly inner = tabR.k(L2, lambda.transpose());
  QPoly rhs = inner.substitute_inverse_q().shifted(Rational(mu_norm(mu)));
  return make_report("duality", "lambda=" + vec_str(lambda.parts()) + " mu=" + mu_str(mu),
                     std::move(lhs), std::move(rhs), t0);
}

std::vector<IdentityReport> check_recurrences(const LMatrix& L, const std::vector<int>& lambda,
                                              int i, int a, SupernomialTable* table) {
  if (i < 1 || i >= L.cols() || a < 1 || a >= L.rows())
    throw std::invalid_argument("recurrence needs 1 <= i < N, 1 <= a < n");
  if (L.at(a, i) < 2) throw std::invalid_argument("recurrence needs L_i^{(a)} >= 2");
  SupernomialTable local(L.rows());
  SupernomialTable& tab = table ? *table : local;
  LMatrix l1 = L;
  if (i > 1) l1.bump(a, i - 1, 1);
  l1.bump(a, i, -2);
  l1.bump(a, i + 1, 1);
  LMatrix l2 = L;
  if (a > 1) l2.bump(a - 1, i, 1);
  l2.bump(a, i, -2);
  l2.bump(a + 1, i, 1);
  std::string inst = "L=" + lmatrix_str(L) + " lambda=" + vec_str(lambda) + " i=" +
                     std::to_string(i) + " a=" + std::to_string(a);
  std::vector<IdentityReport> out;
  {
    auto t0 = Clock::now();
    QPoly rhs = tab.s(l1, lambda) + tab.s(l2, lambda).shifted(Rational(L.ell(a, i) - i));
    out.push_back(make_report("recS", inst, tab.s(L, lambda), std::move(rhs), t0));
  }
  bool is_partition = true;
  for (std::size_t k = 0; k + 1 < lambda.size(); ++k)
    if (lambda[k] < lambda[k + 1]) is_partition = false;
  if (is_partition) {
    auto t0 = Clock::now();
    Partition lam(lambda);
    QPoly rhs = tab.k(l1, lam).shifted(Rational(L.ell_bar(a, i) - a)) + tab.k(l2, lam);
    out.push_back(make_report("recK", inst, tab.k(L, lam), std::move(rhs), t0));
  }
  return out;
}

std::vector<IdentityReport> check_column_removal(const LMatrix& L, const std::vector<int>& lambda,
                                                 int i, SupernomialTable* table) {
  int n = L.rows();
  SupernomialTable local(n);
  SupernomialTable& tab = table ? *table : local;
  LMatrix big(n, std::max(L.cols(), i));
  for (int a = 1; a <= n; ++a)
    for (int j = 1; j <= L.cols(); ++j) big.set(a, j, L.at(a, j));
  big.bump(n, i, 1);
  std::vector<int> lam_big = lambda;
  lam_big.resize(n, 0);
  for (int& x : lam_big) x += i;
  std::string inst = "L=" + lmatrix_str(L) + " lambda=" + vec_str(lambda) + " i=" +
                     std::to_string(i);
  std::vector<IdentityReport> out;
  {
    auto t0 = Clock::now();
    out.push_back(make_report("columnS", inst, tab.s(big, lam_big), tab.s(L, lambda), t0));
  }
  bool is_partition = true;
  for (std::size_t k = 0; k + 1 < lambda.size(); ++k)
    if (lambda[k] < lambda[k + 1]) is_partition = false;
  if (is_partition) {
    auto t0 = Clock::now();
    long long e = 0;
    for (int a = 1; a <= n; ++a) e += static_cast<long long>(a) * L.ell(a, i);
    QPoly rhs = tab.k(L, Partition(lambda)).shifted(Rational(e));
    out.push_back(make_report("columnK", inst, tab.k(big, Partition(lam_big)), std::move(rhs), t0));
  }
  return out;
}

namespace {

std::vector<long long> ell_of(const std::vector<int>& L) {
  int N = static_cast<int>(L.size());
  std::vector<long long> ell(N + 1, 0);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) ell[i] += static_cast<long long>(std::min(i, j)) * L[j - 1];
  return ell;
}

QPoly a1_super_impl(const std::vector<int>& L, long long a2, bool modified) {
  int N = static_cast<int>(L.size());
  if (N == 0) return a2 == 0 ? QPoly(1) : QPoly();
  auto ell = ell_of(L);
  long long top2 = a2 + ell[N];
  if (top2 < 0 || top2 % 2 != 0) return QPoly();
  long long tot = top2 / 2;
  QPoly res;
  std::vector<long long> js(N, 0);
  std::function<void(int, long long)> rec = [&](int k, long long rem) {
    if (k == N - 1) {
      js[k] = rem;
      QPoly term(1);
      for (int t = 0; t < N && !term.is_zero(); ++t) {
        long long upper = L[t] + (t + 1 < N ? js[t + 1] : 0);
        QPoly f = modified ? qbinom_modified(upper, js[t]) : qbinom(upper, js[t]);
        term = term * f;
      }
      if (!term.is_zero()) {
        long long e = 0;
        for (int t = 1; t < N; ++t) e += (ell[t + 1] - ell[t] - js[t]) * js[t - 1];
        res += term.shifted(Rational(e));
      }
      return;
    }
    for (long long j = 0; j <= rem; ++j) {
      js[k] = j;
      rec(k + 1, rem - j);
    }
  };
  rec(0, tot);
  return res;
}

}  // namespace

QPoly a1_supernomial(const std::vector<int>& L, long long a2) {
  for (int x : L)
    if (x < 0) throw std::invalid_argument("a1_supernomial needs L >= 0");
  return a1_super_impl(L, a2, false);
}

QPoly a1_supernomial_modified(const std::vector<int>& L, long long a2) {
  return a1_super_impl(L, a2, true);
}

IdentityReport check_a1_closed_form(const std::vector<int>& L) {
  auto t0 = Clock::now();
  auto ell = ell_of(L);
  int N = static_cast<int>(L.size());
  long long lN = N ? ell[N] : 0;
  RectList mu;
  for (int i = 0; i < N; ++i)
    for (int c = 0; c < L[i]; ++c) mu.push_back(Rect{i + 1, 1});
  bool pass = true;
  QPoly lhs_all, rhs_all;  // stitched with distinct markers per a
  long long marker = 0;
  for (long long a2 = -lN; a2 <= lN; a2 += 2, ++marker) {
    QPoly closed = a1_supernomial(L, a2);
    std::vector<int> lam{static_cast<int>((lN + a2) / 2), static_cast<int>((lN - a2) / 2)};
    QPoly path = supernomial(PathSpace{2, lam, mu});
    if (!(closed == path)) pass = false;
    Rational off(marker * (2 * lN + 2));
    lhs_all += closed.shifted(off);
    rhs_all += path.shifted(off);
  }
  IdentityReport r;
  r.identity = "a1_closed_form";
  r.instance = "L=" + vec_str(L);
  r.lhs = std::move(lhs_all);
  r.rhs = std::move(rhs_all);
  r.pass = pass;
  r.elapsed_ms = ms_since(t0);
  return r;
}

IdentityReport check_a1_family_recurrence(const std::vector<int>& L, int A, int B, long long a2) {
  auto t0 = Clock::now();
  int N = static_cast<int>(L.size());
  if (!(1 <= A && A <= B && B < N)) throw std::invalid_argument("need 1 <= A <= B < N");
  if (A < B)
    for (int t = 0; t + 1 < B; ++t)
      if (L[t] != 0) throw std::invalid_argument("need L_1..L_{B-1} = 0 when A < B");
  auto bump = [&](int idx) {
    std::vector<int> v = L;
    if (idx >= 1) ++v[idx - 1];
    return v;
  };
  auto ell = ell_of(L);
  std::vector<int> lAB = L;
  ++lAB[A - 1];
  ++lAB[B - 1];
  QPoly lhs = a1_supernomial(lAB, a2);
  std::vector<int> l2 = bump(A - 1);
  if (B + 1 <= N) ++l2[B];  // e_{B+1}
  else throw std::invalid_argument("B+1 exceeds N");
  QPoly rhs = a1_supernomial(l2, a2) +
              a1_supernomial(bump(B - A), a2).shifted(Rational(ell[A] + A));
  return make_report("a1_family_rec",
                     "L=" + vec_str(L) + " A=" + std::to_string(A) + " B=" + std::to_string(B) +
                         " 2a=" + std::to_string(a2),
                     std::move(lhs), std::move(rhs), t0);
}

IdentityReport check_x_recurrence(const std::vector<int>& L, int A, int B, long long a2) {
  auto t0 = Clock::now();
  int N = static_cast<int>(L.size());
  if (!(1 <= A && A <= B && B < N)) throw std::invalid_argument("need 1 <= A <= B < N");
  auto ell = ell_of(L);
  auto bump = [&](int idx) {
    std::vector<int> v = L;
    if (idx >= 1) ++v[idx - 1];
    return v;
  };
  std::vector<int> lAB = L;
  ++lAB[A - 1];
  ++lAB[B - 1];
  std::vector<int> l2 = bump(A - 1);
  ++l2[B];
  QPoly lhs = a1_supernomial_modified(lAB, a2);
  QPoly rhs = a1_supernomial_modified(l2, a2) +
              a1_supernomial_modified(bump(B - A), a2).shifted(Rational(ell[A] + A));
  return make_report("x_rec",
                     "L=" + vec_str(L) + " A=" + std::to_string(A) + " B=" + std::to_string(B) +
                         " 2a=" + std::to_string(a2),
                     std::move(lhs), std::move(rhs), t0);
}

namespace {

QPoly t1_poly(const std::vector<int>& L, long long a2) {
  int N = static_cast<int>(L.size());
  QPoly s = a1_supernomial(L, a2);
  if (s.is_zero()) return s;
  auto ell = ell_of(L);
  Rational pre(0);
  for (int i = 1; i <= N; ++i) pre += Rational(L[i - 1] * ell[i], 4);
  pre += Rational(-a2 * a2, 4LL * N);
  return s.substitute_inverse_q().shifted(pre);
}

std::vector<std::vector<int>> cartan_a(int k) {
  std::vector<std::vector<int>> C(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i) {
    C[i][i] = 2;
    if (i > 0) C[i][i - 1] = -1;
    if (i + 1 < k) C[i][i + 1] = -1;
  }
  return C;
}

// C^{-1}_{ab} = min(a,b) (k+1-max(a,b)) / (k+1) for the Cartan matrix of A_k
Rational cartan_inv(int k, int a, int b) {
  return Rational(static_cast<long long>(std::min(a, b)) * (k + 1 - std::max(a, b)), k + 1);
}

}  // namespace

IdentityReport check_rr_identity(int p, int N, int a, int b, const std::vector<int>& L) {
  auto t0 = Clock::now();
  if (!(N < p - 2 && 1 <= a && a <= p - 1 && 1 <= b && b <= p - N - 1))
    throw std::invalid_argument("rr identity parameter range");
  if (static_cast<int>(L.size()) != N) throw std::invalid_argument("L must have length N");
  auto ell = ell_of(L);
  long long lN = ell[N];

  QPoly lhs;
  long long span = (lN + std::abs(a) + std::abs(b)) / (2 * p) + 2;
  for (long long j = -span; j <= span; ++j) {
    {
      long long a2 = b - a + 2 * p * j;
      Rational e = Rational(j, N) * Rational(p * (p - N) * j + p * b - (p - N) * a);
      lhs += t1_poly(L, a2).shifted(e);
    }
    {
      long long a2 = b + a + 2 * p * j;
      Rational e = Rational(1, N) * Rational((p * j + a) * ((p - N) * j + b));
      lhs -= t1_poly(L, a2).shifted(e);
    }
  }

  int k = p - 3;
  auto C = cartan_a(k);
  auto qvec = [&](int i) {
    std::vector<int> v(k, 0);
    for (int x = i - 1; x >= 1; x -= 2)
      if (x <= k) v[x - 1] += 1;
    return v;
  };
  std::vector<int> Q(k, 0);
  {
    auto add = [&](const std::vector<int>& v, int mult) {
      for (int t = 0; t < k; ++t) Q[t] = (Q[t] + mult * v[t]) % 2;
    };
    add(qvec(a - 1), 1);
    add(qvec(p - b - 1), 1);
    add(qvec(p - 2), 1);
    for (int i = 2; i <= N; ++i) add(qvec(i), L[i - 1]);
    for (int& x : Q) x = ((x % 2) + 2) % 2;
  }
  std::vector<int> r(k, 0);
  if (1 <= a - 1 && a - 1 <= k) r[a - 2] += 1;
  if (1 <= p - b - 1 && p - b - 1 <= k) r[p - b - 2] += 1;
  for (int i = 1; i <= std::min(N, k); ++i) r[i - 1] += L[i - 1];

  std::vector<long long> bound(k, 0);
  for (int t = 1; t <= k; ++t) {
    Rational s(0);
    for (int u = 1; u <= k; ++u) s += cartan_inv(k, t, u) * Rational(r[u - 1]);
    bound[t - 1] = s.num() / s.den() + 2;
  }

  QPoly rhs;
  std::vector<int> m(k, 0);
  std::function<void(int)> rec = [&](int t) {
    if (t == k) {
      std::vector<long long> nv(k);
      for (int u = 0; u < k; ++u) {
        long long cm = 0;
        for (int v = 0; v < k; ++v) cm += static_cast<long long>(C[u][v]) * m[v];
        long long num = r[u] - cm;
        if (num < 0 || num % 2 != 0) return;
        nv[u] = num / 2;
      }
      QPoly term(1);
      for (int u = 0; u < k && !term.is_zero(); ++u) term = term * qbinom(m[u] + nv[u], m[u]);
      if (term.is_zero()) return;
      long long mcm = 0;
      for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v) mcm += static_cast<long long>(C[u][v]) * m[u] * m[v];
      Rational e(mcm, 4);
      if (2 <= a && a <= k + 1) e += Rational(-m[a - 2], 2);
      rhs += term.shifted(e);
      return;
    }
    for (long long v = Q[t]; v <= bound[t]; v += 2) {
      m[t] = static_cast<int>(v);
      rec(t + 1);
    }
  };
  if (k > 0)
    rec(0);
  else
    rhs = QPoly(1);
  rhs = rhs.shifted(Rational(static_cast<long long>(b - a) * (a - b - N), 4LL * N));

  std::ostringstream inst;
  inst << "p=" << p << " N=" << N << " a=" << a << " b=" << b << " L=" << vec_str(L);
  return make_report("rr_unitary", inst.str(), std::move(lhs), std::move(rhs), t0);
}

IdentityReport check_anrr_conjecture(int n, int p, int N, const LMatrix& L) {
  auto t0 = Clock::now();
  if (!(n >= 2 && N >= 1 && N < p - n)) throw std::invalid_argument("anrr parameter range");
  if (L.rows() < n - 1) throw std::invalid_argument("L needs rows 1..n-1");
  for (int i = 1; i <= L.cols(); ++i)
    for (int aa = 1; aa < n; ++aa) {
      Rational s(0);
      for (int bb = 1; bb < n; ++bb) s += cartan_inv(n - 1, aa, bb) * Rational(L.at(bb, i));
      if (!s.is_integer()) throw std::invalid_argument("integrality condition violated");
    }
  long long w = L.weight();
  if (w % n != 0) throw std::invalid_argument("|mu| not divisible by n");
  long long base = w / n;

  SupernomialTable tab(n);
  auto t_poly = [&](const std::vector<int>& lambda) {
    const QPoly& s = tab.s(L, lambda);
    if (s.is_zero()) return QPoly();
    Rational pre(0);
    for (int i = 1; i <= L.cols(); ++i)
      for (int aa = 1; aa < n; ++aa)
        for (int bb = 1; bb < n; ++bb)
          pre += Rational(L.at(aa, i)) * cartan_inv(n - 1, aa, bb) *
                 Rational(L.ell(bb, i)) * Rational(1, 2);
    for (int i = 0; i < n; ++i) {
      Rational dev = Rational(lambda[i]) - Rational(w, n);
      pre += Rational(-1, 2 * N) * dev * dev;
    }
    return s.substitute_inverse_q().shifted(pre);
  };

  QPoly lhs;
  long long klo = -(base + n + p) / p - 1, khi = (base + n + p) * (n - 1) / p + 1;
  std::vector<int> perm(n);
  std::vector<long long> kv(n, 0);
  std::function<void(int, long long)> krec = [&](int idx, long long sum) {
    if (idx == n - 1) {
      kv[idx] = -sum;
      if (kv[idx] < klo || kv[idx] > khi) return;
      std::iota(perm.begin(), perm.end(), 1);
      do {
        int sign = 1;
        std::vector<int> lambda(n);
        bool ok = true;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            if (perm[i] > perm[j]) sign = -sign;
        for (int i = 0; i < n; ++i) {
          long long v = base + p * kv[i] + perm[i] - (i + 1);
          if (v < 0) { ok = false; break; }
          lambda[i] = static_cast<int>(v);
        }
        if (!ok) continue;
        QPoly t = t_poly(lambda);
        if (t.is_zero()) continue;
        Rational e(0);
        for (int i = 0; i < n; ++i) {
          long long d = p * kv[i] + perm[i] - (i + 1);
          e += Rational(d * d, 2LL * N) + Rational(-p * kv[i] * kv[i], 2) +
               Rational((i + 1) * kv[i]);
        }
        if (sign > 0)
          lhs += t.shifted(e);
        else
          lhs -= t.shifted(e);
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (long long v = klo; v <= khi; ++v) {
      kv[idx] = v;
      krec(idx + 1, sum + v);
    }
  };
  krec(0, 0);

  // right-hand side: m over (n-1) x (p-n-1) nonnegative matrices
  int rows = n - 1, cols = p - n - 1;
  auto Cr = cartan_a(rows);
  auto Cc = cartan_a(cols);
  // bound via (C^{-1} (x) I) m <= (C^{-1} (x) C^{-1}) Lvec
  std::vector<std::vector<long long>> mb(rows, std::vector<long long>(cols, 0));
  for (int aa = 1; aa <= rows; ++aa)
    for (int i = 1; i <= cols; ++i) {
      Rational s(0);
      for (int bb = 1; bb <= rows; ++bb)
        for (int j = 1; j <= cols; ++j)
          s += cartan_inv(rows, aa, bb) * cartan_inv(cols, i, j) *
               Rational(j <= L.cols() ? L.at(bb, j) : 0);
      Rational q = s / cartan_inv(rows, aa, aa);
      mb[aa - 1][i - 1] = q.num() / q.den() + 1;
    }

  QPoly rhs;
  std::vector<std::vector<int>> m(rows, std::vector<int>(cols, 0));
  std::function<void(int)> mrec = [&](int flat) {
    if (flat == rows * cols) {
      for (int aa = 1; aa <= rows; ++aa)
        for (int i = 1; i <= cols; ++i) {
          Rational s(0);
          for (int bb = 1; bb <= rows; ++bb) s += cartan_inv(rows, aa, bb) * Rational(m[bb - 1][i - 1]);
          if (!s.is_integer()) return;
        }
      // n determined by (C (x) I) nvec = Lvec - (I (x) C) m
      std::vector<std::vector<long long>> icm(rows, std::vector<long long>(cols, 0));
      for (int aa = 0; aa < rows; ++aa)
        for (int i = 0; i < cols; ++i) {
          long long s = 0;
          for (int j = 0; j < cols; ++j) s += static_cast<long long>(Cc[i][j]) * m[aa][j];
          icm[aa][i] = (i < L.cols() ? L.at(aa + 1, i + 1) : 0) - s;
        }
      std::vector<std::vector<Rational>> nv(rows, std::vector<Rational>(cols));
      for (int aa = 0; aa < rows; ++aa)
        for (int i = 0; i < cols; ++i) {
          Rational s(0);
          for (int bb = 0; bb < rows; ++bb)
            s += cartan_inv(rows, aa + 1, bb + 1) * Rational(icm[bb][i]);
          if (s < Rational(0) || !s.is_integer()) return;
          nv[aa][i] = s;
        }
      QPoly term(1);
      for (int aa = 0; aa < rows && !term.is_zero(); ++aa)
        for (int i = 0; i < cols && !term.is_zero(); ++i)
          term = term * qbinom(m[aa][i] + nv[aa][i].num(), m[aa][i]);
      if (term.is_zero()) return;
      Rational e(0);
      for (int aa = 0; aa < rows; ++aa)
        for (int bb = 0; bb < rows; ++bb)
          for (int i = 0; i < cols; ++i)
            for (int j = 0; j < cols; ++j)
              e += cartan_inv(rows, aa + 1, bb + 1) * Rational(Cc[i][j]) *
                   Rational(static_cast<long long>(m[aa][i]) * m[bb][j], 2);
      rhs += term.shifted(e);
      return;
    }
    int aa = flat / cols, i = flat % cols;
    for (int v = 0; v <= mb[aa][i]; ++v) {
      m[aa][i] = v;
      mrec(flat + 1);
    }
  };
  if (rows * cols > 0)
    mrec(0);
  else
    rhs = QPoly(1);

  std::ostringstream inst;
  inst << "n=" << n << " p=" << p << " N=" << N << " L=" << lmatrix_str(L);
  return make_report("anrr_conjecture", inst.str(), std::move(lhs), std::move(rhs), t0);
}

}  // namespace kostka
