#ifndef YBMAPS_RATFUN_HPP
#define YBMAPS_RATFUN_HPP

#include <ostream>
#include <string>
#include <utility>

#include "ybmaps/errors.hpp"
#include "ybmaps/polynomial.hpp"
#include "ybmaps/rational.hpp"

namespace ybmaps {

/// Rational function num/den in the spectral variable.
///
/// Canonical form: den monic and gcd(num, den) = 1; zero is 0/1. With
/// canonical operands equality is structural.
class RatFun {
 public:
  RatFun() : den_(PolyZ::constant(1)) {}
  RatFun(long c) : RatFun(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RatFun(Rational c) : num_(PolyZ::constant(std::move(c))), den_(PolyZ::constant(1)) {}  // NOLINT
  RatFun(PolyZ p) : num_(std::move(p)), den_(PolyZ::constant(1)) {}  // NOLINT
  RatFun(PolyZ num, PolyZ den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  /// Canonicalize an arbitrary pair without assuming anything about it.
  static RatFun from_pair(PolyZ num, PolyZ den) { return RatFun(std::move(num), std::move(den)); }
  static RatFun variable() { return RatFun(PolyZ::variable()); }

  const PolyZ& num() const { return num_; }
  const PolyZ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }

  Rational operator()(const Rational& x) const {
    Rational d = den_(x);
    if (d.is_zero()) throw DivisionByZero("RatFun: evaluation at a pole");
    return num_(x) / d;
  }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a) { return raw(-a.num_, a.den_); }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return monic_den(a.num_ * b.num_, a.den_ * b.den_);
    // Cross-cancel first so the products stay small.
    PolyZ g1 = gcd(a.num_, b.den_);
    PolyZ g2 = gcd(b.num_, a.den_);
    PolyZ n1 = divmod(a.num_, g1).first, d2 = divmod(b.den_, g1).first;
    PolyZ n2 = divmod(b.num_, g2).first, d1 = divmod(a.den_, g2).first;
    return monic_den(n1 * n2, d1 * d2);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw DivisionByZero("RatFun: division by zero");
    return a * raw_unnormalized_inverse(b);
  }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str(const std::string& var = "z") const {
    if (is_polynomial()) {
      std::string s = num_.str(var);
      return num_.is_constant() ? s : "(" + s + ")";
    }
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const RatFun& r) { return os << r.str(); }

  /// Max bit height over all coefficients.
  std::size_t height() const {
    std::size_t h = 1;
    for (const auto& c : num_.coefficients()) h = std::max(h, c.height());
    for (const auto& c : den_.coefficients()) h = std::max(h, c.height());
    return h;
  }

 private:
  struct RawTag {};
  RatFun(RawTag, PolyZ num, PolyZ den) : num_(std::move(num)), den_(std::move(den)) {}
  static RatFun raw(PolyZ num, PolyZ den) { return RatFun(RawTag{}, std::move(num), std::move(den)); }
  static RatFun monic_den(PolyZ num, PolyZ den) {
    Rational lead = den.leading();
    if (!lead.is_one()) {
      Rational inv = inverse(lead);
      num = num.scaled(inv);
      den = den.scaled(inv);
    }
    return raw(std::move(num), std::move(den));
  }
  // den/num, coprime already; leading coefficient fixed by the caller.
  static RatFun raw_unnormalized_inverse(const RatFun& b) { return RatFun(RawTag{}, b.den_, b.num_); }

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("RatFun: zero denominator");
    if (num_.is_zero()) {
      den_ = PolyZ::constant(1);
      return;
    }
    if (!den_.is_constant()) {
      PolyZ g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
      }
    }
    *this = monic_den(std::move(num_), std::move(den_));
  }

  PolyZ num_;
  PolyZ den_;
};

/// Exact identity test for rational functions by cross-multiplication.
/// Works on non-canonical operands too.
inline bool ratfun_eq(const RatFun& a, const RatFun& b) {
  return a.num() * b.den() == b.num() * a.den();
}

}  // namespace ybmaps

#endif
