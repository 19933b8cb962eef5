#ifndef YBMAPS_MATRIX_HPP
#define YBMAPS_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "ybmaps/errors.hpp"
#include "ybmaps/polynomial.hpp"
#include "ybmaps/ratfun.hpp"

namespace ybmaps {

/// Dense square matrix over a field T, row-major.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {
    if (dim == 0) throw DimensionMismatch("matrix dimension must be positive");
  }
  SquareMatrix(std::size_t dim, std::vector<T> row_major) : dim_(dim), a_(std::move(row_major)) {
    if (dim == 0 || a_.size() != dim * dim)
      throw DimensionMismatch("matrix entries do not form a square of dimension " + std::to_string(dim));
  }
  static SquareMatrix identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t dim() const { return dim_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  const std::vector<T>& entries() const { return a_; }

  T trace() const {
    T t{};
    for (std::size_t i = 0; i < dim_; ++i) t = t + (*this)(i, i);
    return t;
  }

  SquareMatrix scaled(const T& s) const {
    SquareMatrix m(*this);
    for (auto& x : m.a_) x = x * s;
    return m;
  }

  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    check_same(a, b);
    SquareMatrix m(a);
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = m.a_[k] + b.a_[k];
    return m;
  }
  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    check_same(a, b);
    SquareMatrix m(a);
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = m.a_[k] - b.a_[k];
    return m;
  }
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    check_same(a, b);
    const std::size_t d = a.dim_;
    SquareMatrix m(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) m(i, j) = m(i, j) + aik * b(k, j);
      }
    return m;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.dim_ == b.dim_ && a.a_ == b.a_;
  }

 private:
  static void check_same(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim_ != b.dim_)
      throw DimensionMismatch("matrix dimensions differ: " + std::to_string(a.dim_) + " vs " +
                              std::to_string(b.dim_));
  }
  std::size_t dim_ = 0;
  std::vector<T> a_;
};

/// d x d matrix of rational functions of the spectral variable.
using LaxMatrix = SquareMatrix<RatFun>;

inline LaxMatrix mat_mul(const LaxMatrix& a, const LaxMatrix& b) { return a * b; }

inline LaxMatrix to_lax(const SquareMatrix<Rational>& m) {
  std::vector<RatFun> e;
  e.reserve(m.entries().size());
  for (const auto& x : m.entries()) e.emplace_back(x);
  return LaxMatrix(m.dim(), std::move(e));
}

/// Coefficients c_0..c_d of det(M - lambda I) = sum_k c_k lambda^k, so
/// c_d = (-1)^d.
template <class T>
struct CharPolyOf {
  std::vector<T> coefficients;

  const T& trace_coefficient() const { return coefficients[coefficients.size() - 2]; }
  const T& determinant() const { return coefficients.front(); }
  friend bool operator==(const CharPolyOf& a, const CharPolyOf& b) = default;
};

using CharPoly = CharPolyOf<RatFun>;

/// det(M - lambda I) by the Leibniz permutation expansion, with entries
/// promoted to polynomials in lambda.
template <class T>
CharPolyOf<T> char_poly_leibniz(const SquareMatrix<T>& m) {
  using LPoly = Polynomial<T>;
  const std::size_t d = m.dim();
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  LPoly total;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (perm[i] > perm[j]) ++inversions;
    LPoly term = LPoly::constant(T(inversions % 2 == 0 ? 1 : -1));
    for (std::size_t i = 0; i < d && !term.is_zero(); ++i) {
      const T& entry = m(i, perm[i]);
      if (perm[i] == i)
        term = term * LPoly(std::vector<T>{entry, T(-1)});
      else
        term = term.scaled(entry);
    }
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<T> c = total.coefficients();
  c.resize(d + 1);
  return {std::move(c)};
}

/// det(M - lambda I) by the Faddeev-LeVerrier trace recurrence.
template <class T>
CharPolyOf<T> char_poly_faddeev_leverrier(const SquareMatrix<T>& m) {
  const std::size_t d = m.dim();
  // Monic det(lambda I - M) = sum a_k lambda^k, a_d = 1.
  std::vector<T> a(d + 1);
  a[d] = T(1);
  SquareMatrix<T> aux(d);  // M_0 = 0
  const auto id = SquareMatrix<T>::identity(d);
  for (std::size_t k = 1; k <= d; ++k) {
    aux = m * aux + id.scaled(a[d - k + 1]);
    T tr = (m * aux).trace();
    a[d - k] = -(tr / T(static_cast<long>(k)));
  }
  if (d % 2 == 1)
    for (auto& x : a) x = -x;
  return {std::move(a)};
}

/// Characteristic polynomial with the expansion chosen by dimension:
/// Leibniz up to d = 4, trace recurrence above, rejected past max_dim.
inline CharPoly char_poly(const LaxMatrix& m, std::size_t max_dim = 6) {
  if (m.dim() > max_dim)
    throw DimensionTooLarge("char_poly: dimension " + std::to_string(m.dim()) + " exceeds bound " +
                            std::to_string(max_dim));
  return m.dim() <= 4 ? char_poly_leibniz(m) : char_poly_faddeev_leverrier(m);
}

}  // namespace ybmaps

#endif
