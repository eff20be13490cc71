#include "doctest.h"

#include "kostka/fermionic.hpp"
#include "kostka/lrtab.hpp"
#include "kostka/paths.hpp"

#include <functional>
#include <vector>

using namespace kostka;

namespace {

QPoly q(long long e) { return QPoly::monomial(Rational(e)); }

std::vector<Partition> partitions_of_size(int m, int maxh = 99) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= maxh) return;
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

QPoly charge_sum(const Partition& lam, const RectList& mu) {
  QPoly s;
  for (const Tableau& t : enumerate_lrt(lam, mu)) s.add_term(Rational(charge(t, mu)), 1);
  return s;
}

}  // namespace

TEST_CASE("weight mismatch gives zero") {
  LMatrix L(2, 2);
  L.set(1, 1, 3);
  CHECK(fermionic_f(L, Partition({2, 2})).is_zero());
}

TEST_CASE("single-row content reduces to the classical Kostka polynomial") {
  LMatrix L(2, 2);
  L.set(1, 1, 3);  // mu = (1,1,1)
  CHECK(fermionic_f(L, Partition({2, 1})) == q(1) + q(2));
  CHECK(kr_kostka(Partition({2, 1}), Partition({1, 1, 1})) == q(1) + q(2));
}

TEST_CASE("full rectangle forces the empty configuration") {
  LMatrix L(2, 3);
  L.set(2, 3, 1);  // single component (3^2)
  CHECK(fermionic_f(L, Partition({3, 3})) == QPoly(1));
}

TEST_CASE("KR equals the charge generating function") {
  for (int m = 1; m <= 6; ++m)
    for (const Partition& lam : partitions_of_size(m))
      for (const Partition& mup : partitions_of_size(m)) {
        RectList mu;
        for (int part : mup.parts()) mu.push_back(Rect{part, 1});
        CHECK(kr_kostka(lam, mup) == charge_sum(lam, mu));
      }
  CHECK(kr_kostka(Partition({3, 1}), Partition({3, 1})) == QPoly(1));
}

TEST_CASE("F coefficients are nonnegative") {
  LMatrix L(3, 2);
  L.set(2, 1, 1);
  L.set(1, 2, 1);
  for (const Partition& lam : partitions_of_size(4, 3))
  {
    QPoly f = fermionic_f(L, lam);
    for (const auto& [e, c] : f.terms()) CHECK(c > 0);
  }
}

TEST_CASE("F equals K under the theorem hypothesis") {
  // a representative family; the full sweep is in the acceptance suite
  struct Inst {
    std::vector<std::vector<int>> rows;  // rows a=1.., columns i=1..
  };
  std::vector<Inst> insts{{{{1, 0}, {1, 0}}}, {{{0, 1}, {1, 0}}}, {{{0, 0}, {2, 0}}},
                          {{{1, 1}, {0, 0}}}, {{{1, 0}, {0, 1}}}, {{{2, 0}, {1, 0}}}};
  int n = 3;
  for (const auto& inst : insts) {
    LMatrix L(n, static_cast<int>(inst.rows[0].size()));
    for (std::size_t a = 0; a < inst.rows.size(); ++a)
      for (std::size_t i = 0; i < inst.rows[a].size(); ++i)
        L.set(static_cast<int>(a) + 1, static_cast<int>(i) + 1, inst.rows[a][i]);
    REQUIRE(kf_theorem_hypothesis(L));
    RectList mu = from_lmatrix(L);
    for (const Partition& lam : partitions_of_size(static_cast<int>(L.weight()), n)) {
      std::vector<int> lv = lam.parts();
      lv.resize(n, 0);
      CHECK(fermionic_f(L, lam) == gen_kostka(PathSpace{n, lv, mu}));
    }
  }
}

TEST_CASE("fermionic recurrence") {
  // all admissible (L, lambda, i, a) with weight <= 6, n = 2..3
  for (int n = 2; n <= 3; ++n)
    for (int N = 2; N <= 3; ++N) {
      std::vector<LMatrix> mats;
      LMatrix base(n, N);
      std::function<void(int)> fill = [&](int idx) {
        if (idx == n * N) {
          if (base.weight() >= 1 && base.weight() <= 6) mats.push_back(base);
          return;
        }
        int a = idx / N + 1, i = idx % N + 1;
        for (int v = 0; v * a * i <= 6; ++v) {
          base.set(a, i, v);
          fill(idx + 1);
          base.set(a, i, 0);
        }
      };
      fill(0);
      for (const LMatrix& L : mats)
        for (int a = 1; a < n; ++a)
          for (int i = 1; i < N; ++i) {
            if (L.at(a, i) < 2) continue;
            for (const Partition& lam : partitions_of_size(static_cast<int>(L.weight()), n))
              CHECK(fermionic_recurrence_check(L, lam, i, a));
          }
    }
  // degenerate: recursion target with negative entries vanishes on both sides
  LMatrix L(2, 2);
  L.set(1, 1, 2);
  CHECK(fermionic_recurrence_check(L, Partition({2}), 1, 1));
}

TEST_CASE("duality transported through F where F = K") {
  // q^{||mu||} F(L(mu*), lambda^T)(1/q) = F(L(mu), lambda) via theo_Kinv
  std::vector<RectList> mus{{{2, 1}, {1, 1}}, {{1, 2}, {1, 1}}, {{2, 1}, {2, 1}}};
  for (const RectList& mu : mus) {
    int n = 3, N = 3;
    LMatrix L = to_lmatrix(mu, n, N);
    LMatrix Ls = to_lmatrix(mu_star(mu), n, N);
    if (!kf_theorem_hypothesis(L) || !kf_theorem_hypothesis(Ls)) continue;
    for (const Partition& lam : partitions_of_size(static_cast<int>(L.weight()), n)) {
      if (lam.transpose().height() > n) continue;
      QPoly lhs = fermionic_f(Ls, lam.transpose()).substitute_inverse_q().shifted(
          Rational(mu_norm(mu)));
      CHECK(lhs == fermionic_f(L, lam));
    }
  }
}
