#ifndef YBMAPS_LAX_HPP
#define YBMAPS_LAX_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "ybmaps/errors.hpp"
#include "ybmaps/maps.hpp"
#include "ybmaps/matrix.hpp"
#include "ybmaps/ratfun.hpp"
#include "ybmaps/sites.hpp"
#include "ybmaps/ybcore.hpp"

namespace ybmaps {

/// A family of matrices A(x, z) depending on a site x and the spectral
/// variable z.
template <class Site>
struct LaxFamily {
  using site_type = Site;

  std::string name;
  std::size_t dim = 0;
  std::function<LaxMatrix(const Site&)> builder;
  /// Monic polynomial q_x(z) with q_x A(x, z) polynomial in z; empty for
  /// polynomial families.
  std::function<PolyZ(const Site&)> pole_factor;
};

/// [[f, 1], [f^2 + beta - z, f]]
inline LaxMatrix dressing_A(const DressingSite& s) {
  const RatFun f(s.f);
  const RatFun lower(PolyZ{s.f * s.f + s.beta, Rational(-1)});
  return LaxMatrix(2, {f, RatFun(1), lower, f});
}

/// I + 2 lambda/(z - lambda) P.
inline LaxMatrix kdv_A(const KdvSite& s) {
  const LaxMatrix p = projector_of(s);
  const std::size_t d = s.dim();
  if (s.lambda.is_zero()) return LaxMatrix::identity(d);
  const RatFun weight = RatFun::from_pair(PolyZ::constant(Rational(2) * s.lambda), PolyZ{-s.lambda, Rational(1)});
  return LaxMatrix::identity(d) + p.scaled(weight);
}

inline LaxFamily<DressingSite> dressing_family() { return {"dressing", 2, dressing_A, {}}; }

inline LaxFamily<KdvSite> kdv_family(std::size_t d) {
  return {"kdv", d,
          [d](const KdvSite& s) {
            if (s.dim() != d) throw DimensionMismatch("kdv family: site dimension differs from family");
            return kdv_A(s);
          },
          [](const KdvSite& s) { return s.lambda.is_zero() ? PolyZ::constant(1) : PolyZ{-s.lambda, Rational(1)}; }};
}

struct MonodromyMatrix {
  LaxMatrix matrix;
  std::size_t factor_count = 0;
};

/// M = A(x_n) A(x_{n-1}) ... A(x_1).
template <class Site>
MonodromyMatrix monodromy(const LaxFamily<Site>& family, const State<Site>& s) {
  if (s.empty()) throw IndexOutOfRange("monodromy of an empty state");
  LaxMatrix m = family.builder(s.front());
  for (std::size_t k = 1; k < s.size(); ++k) m = family.builder(s[k]) * m;
  return {std::move(m), s.size()};
}

enum class Orientation {
  /// R(x, y) = (x', y') with A(x') A(y') = A(y) A(x).
  swapped_product,
  /// The mirror: A(y') A(x') = A(x) A(y).
  mirrored,
};

template <class Site>
bool refactor_check(const LaxFamily<Site>& family, const YbMap<Site>& map, const Site& x, const Site& y,
                    Orientation orientation = Orientation::swapped_product) {
  const auto [xt, yt] = apply_R(map, x, y);
  const LaxMatrix ax = family.builder(x), ay = family.builder(y);
  const LaxMatrix axt = family.builder(xt), ayt = family.builder(yt);
  if (orientation == Orientation::swapped_product) return axt * ayt == ay * ax;
  return ayt * axt == ax * ay;
}

/// Closed-form refactorization for the dressing family: given l = A(y) A(x)
/// and the parameters beta1 (of x~) and beta2 (of y~), return (x~, y~) with
/// A(x~) A(y~) = l.
///
/// From A(a, b1) A(b, b2): l_12 = a + b and l_11 = (a + b) b + b2 - z.
inline std::pair<DressingSite, DressingSite> refactor_solve_dressing(const LaxMatrix& l, const Rational& beta1,
                                                                     const Rational& beta2) {
  if (l.dim() != 2) throw NotFactorizable("dressing refactorization needs a 2x2 matrix");
  const RatFun& l12 = l(0, 1);
  const RatFun& l11 = l(0, 0);
  if (!l12.is_constant() || l12.is_zero() || !l11.is_polynomial())
    throw NotFactorizable("dressing refactorization: l_12 must be a nonzero constant");
  const Rational s = l12.num().coefficient(0);
  const Rational b = (l11.num().coefficient(0) - beta2) / s;
  const Rational a = s - b;
  DressingSite xt{a, beta1}, yt{b, beta2};
  if (dressing_A(xt) * dressing_A(yt) != l)
    throw NotFactorizable("dressing refactorization: residual mismatch");
  return {xt, yt};
}

/// Characteristic polynomial of the monodromy matrix. For families with
/// poles it is taken of the cleared matrix (prod_i q_{x_i}) M, and the
/// clearing factor is recorded next to it.
struct SpectralInvariants {
  CharPoly char_poly;
  PolyZ clearing_factor = PolyZ::constant(1);
  friend bool operator==(const SpectralInvariants&, const SpectralInvariants&) = default;
};

template <class Site>
SpectralInvariants spectral_invariants(const LaxFamily<Site>& family, const State<Site>& s,
                                       std::size_t max_dim = 6) {
  if (!family.pole_factor) return {ybmaps::char_poly(monodromy(family, s).matrix, max_dim), PolyZ::constant(1)};
  if (s.empty()) throw IndexOutOfRange("monodromy of an empty state");
  // (prod q_i) M = prod (q_i A(x_i)); the cleared factors multiply without
  // any rational-function cancellation.
  PolyZ clearing = PolyZ::constant(1);
  std::optional<LaxMatrix> m;
  for (const auto& x : s) {
    const PolyZ q = family.pole_factor(x);
    LaxMatrix a = family.builder(x).scaled(RatFun(q));
    for (const auto& e : a.entries())
      if (!e.is_polynomial()) throw Error("spectral_invariants: pole profile does not clear " + family.name);
    m = m ? a * *m : std::move(a);
    clearing *= q;
  }
  return {ybmaps::char_poly(*m, max_dim), std::move(clearing)};
}

}  // namespace ybmaps

#endif
