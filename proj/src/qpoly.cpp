#include "kostka/qpoly.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace kostka {

std::string Rational::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

QPoly QPoly::operator*(const QPoly& o) const {
  QPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

QPoly QPoly::shifted(const Rational& e, const Int& c) const {
  QPoly r;
  if (c == 0) return r;
  for (const auto& [e1, c1] : terms_) r.terms_[e1 + e] = c1 * c;
  return r;
}

QPoly QPoly::substitute_inverse_q() const {
  QPoly r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

std::string QPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) { out << "-"; a = -a; }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = (a == 1);
    if (e == Rational(0)) {
      out << a;
    } else {
      if (!unit) out << a << "*";
      out << "q";
      if (e != Rational(1)) {
        if (e.is_integer())
          out << "^" << e.num();
        else
          out << "^(" << e.str() << ")";
      }
    }
  }
  return out.str();
}

QPoly qbinom(long long m_plus_n, long long n) {
  long long m = m_plus_n - n;
  if (n < 0 || m < 0) return QPoly();
  thread_local std::map<std::pair<long long, long long>, QPoly> cache;
  if (n == 0 || m == 0) return QPoly(1);
  auto key = std::make_pair(m_plus_n, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  QPoly r = qbinom(m_plus_n - 1, n).shifted(Rational(n)) + qbinom(m_plus_n - 1, n - 1);
  cache.emplace(key, r);
  return r;
}

QPoly qbinom_modified(long long m_plus_n, long long n) {
  long long m = m_plus_n - n;
  if (n < 0) return QPoly();
  if (m >= 0) return qbinom(m_plus_n, n);
  if (m >= -n) return QPoly();  // a factor (1 - q^0) appears
  // reflection: [M; n] = (-1)^n q^{nM - n(n-1)/2} [n-M-1; n]
  Rational shift(n * m_plus_n - n * (n - 1) / 2);
  return qbinom(n - m_plus_n - 1, n).shifted(shift, (n % 2 == 0) ? 1 : -1);
}

QPoly pochhammer(long long k, long long n) {
  QPoly r(1);
  for (long long t = 0; t < n; ++t)
    r = r * (QPoly(1) - QPoly::monomial(Rational(k + t)));
  return r;
}

}  // namespace kostka
