#ifndef YBMAPS_MAPS_HPP
#define YBMAPS_MAPS_HPP

#include <string>
#include <utility>
#include <vector>

#include "ybmaps/errors.hpp"
#include "ybmaps/ratfun.hpp"
#include "ybmaps/sites.hpp"
#include "ybmaps/ybcore.hpp"

namespace ybmaps {

/// Adler's map for the periodic dressing chain:
///   f1' = f2 - (beta1 - beta2)/(f1 + f2),  f2' = f1 - (beta2 - beta1)/(f1 + f2),
/// with beta1, beta2 staying in their slots.
inline std::pair<DressingSite, DressingSite> adler_R(const DressingSite& x1, const DressingSite& x2) {
  const Rational sum = x1.f + x2.f;
  if (sum.is_zero()) throw SingularInput("adler: f1 + f2 = 0");
  const Rational delta = (x1.beta - x2.beta) / sum;
  return {DressingSite{x2.f - delta, x1.beta}, DressingSite{x1.f + delta, x2.beta}};
}

inline YbMap<DressingSite> adler_map() {
  return {"adler", adler_R, "f1 + f2 = 0"};
}

/// Polarization change in a collision of two matrix KdV solitons with
/// velocities lambda1, lambda2. Outputs are checked to still define
/// projectors.
inline std::pair<KdvSite, KdvSite> kdv_R(const KdvSite& s1, const KdvSite& s2) {
  if (s1.dim() != s2.dim()) throw DimensionMismatch("kdv: sites of different dimension");
  if (s1.lambda == s2.lambda) throw SingularInput("kdv: lambda1 = lambda2");
  const Rational p11 = pairing(s1.xi, s1.eta);
  const Rational p22 = pairing(s2.xi, s2.eta);
  if (p11.is_zero() || p22.is_zero()) throw SingularInput("kdv: (xi, eta) = 0 on input");
  const Rational p12 = pairing(s1.xi, s2.eta);  // (xi1, eta2)
  const Rational p21 = pairing(s2.xi, s1.eta);  // (xi2, eta1)

  const Rational w1 = Rational(2) * s2.lambda / ((s1.lambda - s2.lambda) * p22);
  const Rational w2 = Rational(2) * s1.lambda / ((s2.lambda - s1.lambda) * p11);
  const Rational a1 = w1 * p12, b1 = w1 * p21;
  const Rational a2 = w2 * p21, b2 = w2 * p12;

  const std::size_t d = s1.dim();
  KdvSite out1{std::vector<Rational>(d), std::vector<Rational>(d), s1.lambda};
  KdvSite out2{std::vector<Rational>(d), std::vector<Rational>(d), s2.lambda};
  for (std::size_t k = 0; k < d; ++k) {
    out1.xi[k] = s1.xi[k] + a1 * s2.xi[k];
    out1.eta[k] = s1.eta[k] + b1 * s2.eta[k];
    out2.xi[k] = s2.xi[k] + a2 * s1.xi[k];
    out2.eta[k] = s2.eta[k] + b2 * s1.eta[k];
  }
  if (pairing(out1.xi, out1.eta).is_zero() || pairing(out2.xi, out2.eta).is_zero())
    throw SingularInput("kdv: (xi, eta) = 0 on output");
  return {std::move(out1), std::move(out2)};
}

inline YbMap<KdvSite> kdv_map() {
  return {"kdv", kdv_R, "lambda1 = lambda2, or a vanishing pairing on input or output"};
}

template <class Site>
YbMap<Site> identity_map() {
  return {"identity", [](const Site& x, const Site& y) { return std::pair{x, y}; }, "none"};
}

template <class Site>
YbMap<Site> permutation_map() {
  return {"permutation", [](const Site& x, const Site& y) { return std::pair{y, x}; }, "none"};
}

/// R(x, y) = (x + y, y). Not a Yang-Baxter map; kept as a negative control.
inline YbMap<ScalarSite> sumleft_map() {
  return {"sumleft",
          [](const ScalarSite& x, const ScalarSite& y) {
            return std::pair{ScalarSite{x.value + y.value}, y};
          },
          "none"};
}

/// Univariate rational maps p, q for R(x, y) = (p(x), q(y)).
struct LyubashenkoPair {
  RatFun p;
  RatFun q;
};

inline void validate(const LyubashenkoPair& pq) {
  if (pq.p.is_constant() || pq.q.is_constant())
    throw Error("lyubashenko: p and q must be nonconstant");
}

inline Rational evaluate_map(const RatFun& r, const Rational& z) {
  try {
    return r(z);
  } catch (const DivisionByZero&) {
    throw SingularInput("lyubashenko: evaluation at a pole z = " + z.str());
  }
}

inline std::pair<ScalarSite, ScalarSite> lyubashenko_R(const LyubashenkoPair& pq, const ScalarSite& x,
                                                       const ScalarSite& y) {
  return {ScalarSite{evaluate_map(pq.p, x.value)}, ScalarSite{evaluate_map(pq.q, y.value)}};
}

inline YbMap<ScalarSite> lyubashenko_map(LyubashenkoPair pq) {
  validate(pq);
  return {"lyubashenko",
          [pq = std::move(pq)](const ScalarSite& x, const ScalarSite& y) { return lyubashenko_R(pq, x, y); },
          "poles of p and q"};
}

/// Composition of univariate rational functions, outer(inner(z)).
inline RatFun compose(const RatFun& outer, const RatFun& inner) {
  // a(u/v)/b(u/v) = (sum a_k u^k v^(D-k)) / (sum b_k u^k v^(D-k)), D = max degree.
  const auto& a = outer.num().coefficients();
  const auto& b = outer.den().coefficients();
  const std::size_t top = std::max(a.size(), b.size());
  const PolyZ& u = inner.num();
  const PolyZ& v = inner.den();
  std::vector<PolyZ> upow{PolyZ::constant(1)}, vpow{PolyZ::constant(1)};
  for (std::size_t k = 1; k < top; ++k) {
    upow.push_back(upow.back() * u);
    vpow.push_back(vpow.back() * v);
  }
  auto homogenize = [&](const std::vector<Rational>& c) {
    PolyZ acc;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero()) acc += (upow[k] * vpow[top - 1 - k]).scaled(c[k]);
    return acc;
  };
  return RatFun::from_pair(homogenize(a), homogenize(b));
}

inline bool maps_commute(const LyubashenkoPair& pq) { return compose(pq.p, pq.q) == compose(pq.q, pq.p); }

struct LyubashenkoVerdict {
  BatchReport agreement;       // per sample: check_YB == [p(q(b)) == q(p(b))]
  std::size_t yb_held = 0;     // samples on which check_YB was true
  bool commute_symbolic = false;
  bool consistent() const { return agreement.all_passed(); }
};

/// On each sampled triple (a, b, c), check_YB must agree with the pointwise
/// commutation test p(q(b)) = q(p(b)).
inline LyubashenkoVerdict lyubashenko_yb_iff_commute(const LyubashenkoPair& pq,
                                                    const std::vector<State<ScalarSite>>& samples) {
  const auto map = lyubashenko_map(pq);
  LyubashenkoVerdict v;
  v.commute_symbolic = maps_commute(pq);
  std::vector<char> held(samples.size(), 0);
  std::vector<std::size_t> index(samples.size());
  for (std::size_t k = 0; k < index.size(); ++k) index[k] = k;
  v.agreement = run_batch(index, [&](std::size_t k) {
    const auto& t = samples[k];
    const bool yb = check_YB(map, t);
    held[k] = yb;
    const Rational b = t.at(1).value;
    const bool pointwise = evaluate_map(pq.p, evaluate_map(pq.q, b)) == evaluate_map(pq.q, evaluate_map(pq.p, b));
    return yb == pointwise;
  });
  for (std::size_t k = 0; k < samples.size(); ++k)
    if (v.agreement.results[k].outcome != Outcome::skipped && held[k]) ++v.yb_held;
  return v;
}

}  // namespace ybmaps

#endif
