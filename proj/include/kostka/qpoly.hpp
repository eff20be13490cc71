#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kostka {

using Int = boost::multiprecision::cpp_int;

// Thrown when a proven statement of the underlying theory fails at runtime
// (non-integer weight, ambiguous isomorphism, ...). Distinct from bad input.
struct defect_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Exact rational number with canonical reduced form, den > 0.
/// Used for exponents of q; magnitudes stay far below 2^63 at desk scale.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}
  Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const { return *this + (-o); }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  std::strong_ordering operator<=>(const Rational& o) const {
    long long l = num_ * o.den_, r = o.num_ * den_;
    return l <=> r;
  }
  bool operator==(const Rational& o) const = default;

  std::string str() const;

 private:
  void reduce() {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }
  long long num_ = 0;
  long long den_ = 1;
};

/// Laurent polynomial in q with exact rational exponents and arbitrary
/// precision integer coefficients. Stored coefficients are never zero,
/// so operator== is exact identity of polynomials.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long long c) { if (c != 0) terms_[Rational(0)] = c; }
  QPoly(const Int& c) { if (c != 0) terms_[Rational(0)] = c; }

  static QPoly monomial(const Rational& e, Int c = 1) {
    QPoly p;
    if (c != 0) p.terms_[e] = std::move(c);
    return p;
  }

  const std::map<Rational, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Rational& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  QPoly& operator+=(const QPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  QPoly operator+(const QPoly& o) const { QPoly r = *this; r += o; return r; }
  QPoly operator-(const QPoly& o) const { QPoly r = *this; r -= o; return r; }
  QPoly operator-() const { QPoly r; for (const auto& [e, c] : terms_) r.terms_[e] = -c; return r; }
  QPoly operator*(const QPoly& o) const;

  /// Multiply by c * q^e.
  QPoly shifted(const Rational& e, const Int& c = 1) const;

  /// q -> 1/q: negate every exponent.
  QPoly substitute_inverse_q() const;

  Int eval_one() const {  // value at q = 1
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  bool operator==(const QPoly& o) const { return terms_ == o.terms_; }

  /// Canonical text: terms by ascending exponent, e.g. `1 + 2*q^2 + q^(5/2)`.
  std::string str() const;

 private:
  std::map<Rational, Int> terms_;
};

/// Gaussian binomial [m+n choose n]_q; 0 when either index is negative.
/// Computed by the q-Pascal recurrence in integer arithmetic, memoized.
QPoly qbinom(long long m_plus_n, long long n);

/// q-binomial with the upper range extended to all integers: for
/// m = m_plus_n - n < 0 this is (q^{m+1})_n/(q)_n, a signed Laurent
/// polynomial (zero when -n <= m <= -1).
QPoly qbinom_modified(long long m_plus_n, long long n);

/// Pochhammer symbol (x)_n with x = q^k: (1-q^k)(1-q^{k+1})...(1-q^{k+n-1}).
QPoly pochhammer(long long k, long long n);

}  // namespace kostka
