#ifndef YBMAPS_SAMPLING_HPP
#define YBMAPS_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ybmaps/rational.hpp"
#include "ybmaps/sites.hpp"

namespace ybmaps {

struct SampleBox {
  long numerator_bound = 20;   // |p| <= bound
  long denominator_bound = 10; // 1 <= q <= bound
};

/// Seeded source of random exact sites and states. The integer draws use
/// rejection on raw mt19937_64 output, so a seed reproduces the same
/// samples on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, SampleBox box = {}) : rng_(seed), box_(box) {}

  long uniform(long lo, long hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do x = rng_();
    while (x >= limit);
    return lo + static_cast<long>(x % range);
  }

  Rational rational() {
    const long p = uniform(-box_.numerator_bound, box_.numerator_bound);
    const long q = uniform(1, box_.denominator_bound);
    return Rational(p, q);
  }

  Rational nonzero_rational() {
    Rational r;
    do r = rational();
    while (r.is_zero());
    return r;
  }

  ScalarSite scalar() { return {rational()}; }
  DressingSite dressing() { return {rational(), rational()}; }

  KdvSite kdv(std::size_t d) {
    KdvSite s;
    s.lambda = nonzero_rational();
    do {
      s.xi.assign(d, Rational{});
      s.eta.assign(d, Rational{});
      for (auto& x : s.xi) x = rational();
      for (auto& x : s.eta) x = rational();
    } while (pairing(s.xi, s.eta).is_zero());
    return s;
  }

  State<ScalarSite> scalar_state(std::size_t n) {
    State<ScalarSite> s;
    for (std::size_t k = 0; k < n; ++k) s.push_back(scalar());
    return s;
  }
  /// No two sites with f_i + f_j = 0.
  State<DressingSite> dressing_state(std::size_t n) {
    State<DressingSite> s;
    while (s.size() < n) {
      DressingSite candidate = dressing();
      bool clash = false;
      for (const auto& t : s) clash = clash || (t.f + candidate.f).is_zero();
      if (!clash) s.push_back(std::move(candidate));
    }
    return s;
  }
  /// Velocities pairwise distinct, so no pair of slots is singular outright.
  State<KdvSite> kdv_state(std::size_t n, std::size_t d) {
    State<KdvSite> s;
    while (s.size() < n) {
      KdvSite candidate = kdv(d);
      bool clash = false;
      for (const auto& t : s) clash = clash || t.lambda == candidate.lambda;
      if (!clash) s.push_back(std::move(candidate));
    }
    return s;
  }

  template <class Site>
  State<Site> state(std::size_t n, std::size_t d = 2);

 private:
  std::mt19937_64 rng_;
  SampleBox box_;
};

template <>
inline State<ScalarSite> Sampler::state<ScalarSite>(std::size_t n, std::size_t) { return scalar_state(n); }
template <>
inline State<DressingSite> Sampler::state<DressingSite>(std::size_t n, std::size_t) { return dressing_state(n); }
template <>
inline State<KdvSite> Sampler::state<KdvSite>(std::size_t n, std::size_t d) { return kdv_state(n, d); }

/// `count` independent states of size n.
template <class Site>
std::vector<State<Site>> sample_states(Sampler& sampler, std::size_t count, std::size_t n, std::size_t d = 2) {
  std::vector<State<Site>> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(sampler.state<Site>(n, d));
  return out;
}

}  // namespace ybmaps

#endif
