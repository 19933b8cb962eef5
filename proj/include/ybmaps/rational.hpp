#ifndef YBMAPS_RATIONAL_HPP
#define YBMAPS_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "ybmaps/errors.hpp"

namespace ybmaps {

/// Exact rational number in lowest terms with positive denominator.
///
/// Thin value wrapper over GMP's mpq_class that keeps the canonical form
/// after every operation and turns division by zero into an exception.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Accepts "p", "-p", "p/q" with decimal integers.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
      auto b = t.find_first_not_of(" \t");
      auto e = t.find_last_not_of(" \t");
      t = (b == std::string::npos) ? std::string{} : t.substr(b, e - b + 1);
    };
    trim(s);
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    trim(num);
    trim(den);
    auto valid = [](const std::string& t, bool allow_sign) {
      if (t.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    if (!valid(num, true) || !valid(den, false))
      throw ParseError("not a rational literal: '" + std::string(text) + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw DivisionByZero("Rational: zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
  }

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  /// Max bit length of numerator and denominator; at least 1.
  std::size_t height() const {
    std::size_t a = mpz_sizeinbase(q_.get_num_mpz_t(), 2);
    std::size_t b = mpz_sizeinbase(q_.get_den_mpz_t(), 2);
    return a > b ? a : b;
  }

  std::string str() const { return q_.get_str(10); }

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

inline Rational inverse(const Rational& r) { return Rational(1) / r; }

}  // namespace ybmaps

#endif
