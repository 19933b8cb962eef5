#ifndef YBMAPS_POLYNOMIAL_HPP
#define YBMAPS_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ybmaps/errors.hpp"
#include "ybmaps/rational.hpp"

namespace ybmaps {

/// Dense univariate polynomial over a field F, coefficients lowest degree
/// first. The zero polynomial is the empty coefficient sequence; otherwise
/// the leading coefficient is nonzero.
///
/// F must be a value type with +, -, *, /, == and `is_zero()`.
template <class F>
class Polynomial {
 public:
  static constexpr int minus_infinity = std::numeric_limits<int>::min();

  Polynomial() = default;
  Polynomial(std::vector<F> coefficients) : c_(std::move(coefficients)) { trim(); }  // NOLINT
  Polynomial(std::initializer_list<F> coefficients) : c_(coefficients) { trim(); }
  static Polynomial constant(F value) { return Polynomial(std::vector<F>{std::move(value)}); }
  /// The monomial `coefficient * X^power`.
  static Polynomial monomial(F coefficient, std::size_t power) {
    std::vector<F> c(power + 1);
    c[power] = std::move(coefficient);
    return Polynomial(std::move(c));
  }
  static Polynomial variable() { return monomial(F(1), 1); }

  const std::vector<F>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Degree, or minus_infinity for the zero polynomial.
  int degree() const { return c_.empty() ? minus_infinity : static_cast<int>(c_.size()) - 1; }
  F coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : F{}; }
  F leading() const { return c_.empty() ? F{} : c_.back(); }

  F operator()(const F& x) const {
    F acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial monic() const {
    if (c_.empty()) return *this;
    F lead = c_.back();
    std::vector<F> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] / lead;
    return Polynomial(std::move(c));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial{} - a; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<F> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const F& s) const {
    if (s.is_zero()) return {};
    std::vector<F> c(c_);
    for (auto& x : c) x = x * s;
    return Polynomial(std::move(c));
  }

  /// Euclidean division: returns (quotient, remainder).
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("Polynomial: division by the zero polynomial");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<F> rem(a.c_);
    std::vector<F> quot(a.c_.size() - b.c_.size() + 1);
    const F lead = b.c_.back();
    const bool unit_lead = lead == F(1);
    for (std::size_t k = quot.size(); k-- > 0;) {
      F q = rem[k + b.c_.size() - 1];
      if (q.is_zero()) continue;
      if (!unit_lead) q = q / lead;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] = rem[k + j] - q * b.c_[j];
      quot[k] = std::move(q);
    }
    rem.resize(b.c_.size() - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Human-readable form in the given variable, highest degree first.
  std::string str(const std::string& var = "z") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      std::ostringstream term;
      term << c_[k];
      std::string coef = term.str();
      bool negative = !coef.empty() && coef[0] == '-';
      if (negative) coef.erase(0, 1);
      if (!first) os << (negative ? " - " : " + ");
      else if (negative) os << "-";
      bool unit = coef == "1";
      if (k == 0 || !unit) os << coef;
      if (k > 0) {
        if (!unit) os << "*";
        os << var;
        if (k > 1) os << "^" << k;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<F> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Composition p(q(X)).
template <class F>
Polynomial<F> compose(const Polynomial<F>& p, const Polynomial<F>& q) {
  Polynomial<F> acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Polynomial<F>::constant(*it);
  return acc;
}

template <class F>
std::ostream& operator<<(std::ostream& os, const Polynomial<F>& p) {
  return os << p.str();
}

/// Polynomials in the spectral variable with rational coefficients.
using PolyZ = Polynomial<Rational>;

}  // namespace ybmaps

#endif
