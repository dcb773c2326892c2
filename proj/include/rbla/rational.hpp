#ifndef RBLA_RATIONAL_HPP
#define RBLA_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <utility>

#include "rbla/errors.hpp"

namespace rbla {

/// Exact rational scalar over arbitrary-precision integers.
///
/// Values are kept canonical at all times: gcd(numerator, denominator) = 1,
/// denominator > 0, zero is 0/1. The textual form is "p/q" (or "p" when
/// q = 1), which is also what the document formats use.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) {
    if (den == 0)
      throw arithmetic_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Strict parse of "p" or "p/q" (optional leading '-', q > 0 after
  /// canonicalization; "1/0" and any other garbage is rejected).
  static Rational parse(const std::string& s) {
    const auto bad = [&] { throw parse_error("bad rational literal: '" + s + "'"); };
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) bad();
    std::size_t den_begin = std::string::npos;
    if (i < s.size()) {
      if (s[i] != '/') bad();
      den_begin = ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == den_begin) bad();
    }
    if (i != s.size()) bad();
    mpq_class q;
    if (q.set_str(s, 10) != 0) bad();
    if (sgn(q.get_den()) == 0) bad();
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  /// Canonical rendering: "p/q" with q > 0 and gcd 1, "p" when q = 1.
  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw arithmetic_error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
  mpq_class v_;
};

inline Rational inverse(const Rational& a) { return Rational(1) / a; }

} // namespace rbla

#endif
