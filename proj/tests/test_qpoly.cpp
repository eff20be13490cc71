#include "doctest.h"

#include "kostka/qpoly.hpp"

using namespace kostka;

namespace {

QPoly q(long long num, long long den = 1) { return QPoly::monomial(Rational(num, den)); }

}  // namespace

TEST_CASE("addition") {
  QPoly p = q(1) + QPoly(2);
  CHECK(QPoly() + p == p);                       // 0 + p = p
  CHECK(q(1) + q(1) == q(1).shifted(Rational(0), 2));  // q + q = 2q
  QPoly one_plus_q = QPoly(1) + q(1);
  CHECK((one_plus_q + (-one_plus_q)).is_zero());  // (1+q) + (-1-q) = 0
}

TEST_CASE("multiplication") {
  QPoly p = QPoly(3) + q(2);
  CHECK(QPoly(1) * p == p);
  CHECK((QPoly(1) + q(1)) * (QPoly(1) - q(1)) == QPoly(1) - q(2));
  CHECK(q(1, 2) * q(1, 2) == q(1));  // q^{1/2} * q^{1/2} = q
}

TEST_CASE("substitute 1/q") {
  CHECK(q(1).substitute_inverse_q() == q(-1));
  QPoly p = QPoly(1) + q(1) + q(3);
  CHECK(p.substitute_inverse_q() == QPoly(1) + q(-1) + q(-3));
  CHECK(p.substitute_inverse_q().substitute_inverse_q() == p);  // involution
}

TEST_CASE("qbinom values") {
  CHECK(qbinom(2, 1) == QPoly(1) + q(1));
  // expand (q^3)_2/(q)_2 by hand: 1 + q + 2q^2 + q^3 + q^4
  QPoly e42 = QPoly(1) + q(1) + q(2).shifted(Rational(0), 2) + q(3) + q(4);
  CHECK(qbinom(4, 2) == e42);
  CHECK(qbinom(1, 2).is_zero());  // negative upper part
  CHECK(qbinom(-1, 0).is_zero());
}

TEST_CASE("qbinom symmetry and recurrence") {
  for (int m = 0; m <= 10; ++m)
    for (int n = 0; n <= 10; ++n) {
      CHECK(qbinom(m + n, n) == qbinom(m + n, m));
      if (m >= 1 && n >= 1) {
        QPoly rhs = qbinom(m + n - 1, n).shifted(Rational(n)) + qbinom(m + n - 1, n - 1);
        CHECK(qbinom(m + n, n) == rhs);
      }
    }
}

TEST_CASE("qbinom at q=1 is the binomial coefficient") {
  auto binom = [](int n, int k) {
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= 8; ++n)
      CHECK(qbinom(m + n, n).eval_one() == Int(binom(m + n, n)));
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(1, 0) == QPoly(1));
  CHECK(pochhammer(1, 1) == QPoly(1) - q(1));
  // (q)_2 = (1-q)(1-q^2)
  CHECK(pochhammer(1, 2) == (QPoly(1) - q(1)) * (QPoly(1) - q(2)));
}

TEST_CASE("modified qbinom") {
  for (int mn = 0; mn <= 6; ++mn)
    for (int n = 0; n <= 6; ++n) CHECK(qbinom_modified(mn, n) == qbinom(mn, n));
  // m in [-n, -1] vanishes
  CHECK(qbinom_modified(0, 1).is_zero());
  CHECK(qbinom_modified(1, 2).is_zero());
  // n=1, m=-2: (q^{-1})_1/(q)_1 = -q^{-1}
  CHECK(qbinom_modified(-1, 1) == -q(-1));
  // check against the defining Pochhammer ratio for a few Laurent cases:
  // [m+n; n] * (q)_n == (q^{m+1})_n for m < -n needs negative-k Pochhammer
  for (int n = 1; n <= 3; ++n)
    for (int m = -n - 3; m < -n; ++m) {
      QPoly lhs = qbinom_modified(m + n, n) * pochhammer(1, n);
      QPoly rhs(1);
      for (int t = 0; t < n; ++t) rhs = rhs * (QPoly(1) - QPoly::monomial(Rational(m + 1 + t)));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("canonical text form") {
  QPoly p = QPoly(1) + q(2).shifted(Rational(0), 2) + q(5, 2);
  CHECK(p.str() == "1 + 2*q^2 + q^(5/2)");
  CHECK(QPoly().str() == "0");
  CHECK((q(1) - QPoly(1)).str() == "-1 + q");
  CHECK(q(-2).str() == "q^-2");
}
