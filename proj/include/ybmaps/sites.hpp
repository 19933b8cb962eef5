#ifndef YBMAPS_SITES_HPP
#define YBMAPS_SITES_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ybmaps/errors.hpp"
#include "ybmaps/matrix.hpp"
#include "ybmaps/rational.hpp"

namespace ybmaps {

/// A bare point of X = Q, no spectral parameter.
struct ScalarSite {
  Rational value;
  friend bool operator==(const ScalarSite&, const ScalarSite&) = default;
};

/// Dressing-chain site (f; beta).
struct DressingSite {
  Rational f;
  Rational beta;
  friend bool operator==(const DressingSite&, const DressingSite&) = default;
};

/// Rank-1 polarization xi (x) eta / (xi, eta) of a matrix soliton with
/// velocity lambda. Stored as a representative pair.
struct KdvSite {
  std::vector<Rational> xi;
  std::vector<Rational> eta;
  Rational lambda;
  std::size_t dim() const { return xi.size(); }
  friend bool operator==(const KdvSite&, const KdvSite&) = default;
};

inline Rational pairing(std::span<const Rational> v, std::span<const Rational> w) {
  if (v.size() != w.size()) throw DimensionMismatch("pairing: vector and covector sizes differ");
  Rational acc;
  for (std::size_t k = 0; k < v.size(); ++k) acc += v[k] * w[k];
  return acc;
}

/// Throws SingularInput unless the representative defines a projector.
inline void validate(const KdvSite& s) {
  if (s.xi.empty()) throw DimensionMismatch("kdv site: dimension must be at least 1");
  if (s.xi.size() != s.eta.size()) throw DimensionMismatch("kdv site: xi and eta sizes differ");
  if (pairing(s.xi, s.eta).is_zero()) throw SingularInput("kdv site: (xi, eta) = 0");
}

/// P = xi (x) eta / (xi, eta) as a constant matrix.
inline SquareMatrix<Rational> projector_matrix(const KdvSite& s) {
  validate(s);
  const std::size_t d = s.dim();
  const Rational inv = inverse(pairing(s.xi, s.eta));
  SquareMatrix<Rational> p(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) p(i, j) = s.xi[i] * s.eta[j] * inv;
  return p;
}

inline LaxMatrix projector_of(const KdvSite& s) { return to_lax(projector_matrix(s)); }

/// Equality of the projectors carried by two representatives.
inline bool projector_eq(const KdvSite& s, const KdvSite& t) {
  if (s.dim() != t.dim()) return false;
  // xi_s eta_s^T (xi_t, eta_t) == xi_t eta_t^T (xi_s, eta_s), no division.
  const Rational ps = pairing(s.xi, s.eta), pt = pairing(t.xi, t.eta);
  if (ps.is_zero() || pt.is_zero()) throw SingularInput("projector_eq: (xi, eta) = 0");
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (s.xi[i] * s.eta[j] * pt != t.xi[i] * t.eta[j] * ps) return false;
  return true;
}

// Equivalence of dynamical states. Structural, except for KdV sites whose
// state is the projector.
inline bool equivalent(const ScalarSite& a, const ScalarSite& b) { return a == b; }
inline bool equivalent(const DressingSite& a, const DressingSite& b) { return a == b; }
inline bool equivalent(const KdvSite& a, const KdvSite& b) {
  return a.lambda == b.lambda && projector_eq(a, b);
}

inline std::size_t height(const ScalarSite& s) { return s.value.height(); }
inline std::size_t height(const DressingSite& s) { return std::max(s.f.height(), s.beta.height()); }
inline std::size_t height(const KdvSite& s) {
  std::size_t h = s.lambda.height();
  for (const auto& x : s.xi) h = std::max(h, x.height());
  for (const auto& x : s.eta) h = std::max(h, x.height());
  return h;
}

/// Ordered n-tuple of sites, the phase space X^n.
template <class Site>
using State = std::vector<Site>;

template <class Site>
bool states_equivalent(const State<Site>& a, const State<Site>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!equivalent(a[k], b[k])) return false;
  return true;
}

template <class Site>
std::size_t height(const State<Site>& s) {
  std::size_t h = 1;
  for (const auto& x : s) h = std::max(h, height(x));
  return h;
}

template <class Site>
struct site_kind;
template <>
struct site_kind<ScalarSite> {
  static constexpr std::string_view name = "scalar";
};
template <>
struct site_kind<DressingSite> {
  static constexpr std::string_view name = "dressing";
};
template <>
struct site_kind<KdvSite> {
  static constexpr std::string_view name = "kdv";
};

}  // namespace ybmaps

#endif
