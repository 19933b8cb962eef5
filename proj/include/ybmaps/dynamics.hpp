#ifndef YBMAPS_DYNAMICS_HPP
#define YBMAPS_DYNAMICS_HPP

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ybmaps/errors.hpp"
#include "ybmaps/lax.hpp"
#include "ybmaps/sites.hpp"
#include "ybmaps/ybcore.hpp"

namespace ybmaps {

template <class Site>
struct Orbit {
  std::string map_name;
  std::size_t n = 0;
  std::size_t generator = 1;
  std::vector<State<Site>> states;
  bool truncated = false;
  std::string truncation_reason;  // set when truncated
};

/// s, T_i(s), T_i^2(s), ... for `steps` steps, stopping early at the first
/// singular application.
template <class Site>
Orbit<Site> iterate(const YbMap<Site>& map, const State<Site>& s, std::size_t i, std::size_t steps) {
  Orbit<Site> orbit{map.name, s.size(), i, {s}, false, {}};
  orbit.states.reserve(steps + 1);
  for (std::size_t k = 0; k < steps; ++k) {
    try {
      orbit.states.push_back(apply_Ti(map, orbit.states.back(), i));
    } catch (const SingularInput& e) {
      orbit.truncated = true;
      orbit.truncation_reason = "step " + std::to_string(k + 1) + ": " + e.factor + ": " + e.what();
      break;
    }
  }
  return orbit;
}

struct InvariantReport {
  /// Invariants per orbit state; empty optional where the family was singular.
  std::vector<std::optional<SpectralInvariants>> per_step;
  std::vector<std::size_t> singular_steps;
  bool verdict = true;
  std::optional<std::size_t> first_divergence;
};

/// Verdict is true iff every computed invariant equals the one at step 0.
template <class Site>
InvariantReport conservation_report(const LaxFamily<Site>& family, const Orbit<Site>& orbit) {
  InvariantReport r;
  r.per_step.reserve(orbit.states.size());
  for (std::size_t k = 0; k < orbit.states.size(); ++k) {
    try {
      r.per_step.emplace_back(spectral_invariants(family, orbit.states[k]));
    } catch (const SingularInput&) {
      r.per_step.emplace_back(std::nullopt);
      r.singular_steps.push_back(k);
    }
  }
  const SpectralInvariants* reference = nullptr;
  for (std::size_t k = 0; k < r.per_step.size(); ++k) {
    if (!r.per_step[k]) continue;
    if (!reference) {
      reference = &*r.per_step[k];
    } else if (!(*r.per_step[k] == *reference)) {
      r.verdict = false;
      r.first_divergence = k;
      break;
    }
  }
  return r;
}

struct SlopeFit {
  double slope = 0;
  std::size_t points = 0;
};

struct HeightSeries {
  std::vector<std::size_t> heights;
  // Least-squares fits over the second half of the series, [window_begin, end).
  std::size_t window_begin = 0;
  std::optional<SlopeFit> log_h_vs_k;          // exponential growth rate
  std::optional<SlopeFit> loglog_h_vs_log_k;
  std::optional<SlopeFit> log_h_vs_log_k;      // polynomial growth exponent
};

namespace detail {
inline std::optional<SlopeFit> least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t m = xs.size();
  if (m < 2) return std::nullopt;
  double sx = 0, sy = 0;
  for (std::size_t k = 0; k < m; ++k) {
    sx += xs[k];
    sy += ys[k];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < m; ++k) {
    sxx += (xs[k] - mx) * (xs[k] - mx);
    sxy += (xs[k] - mx) * (ys[k] - my);
  }
  if (sxx == 0) return std::nullopt;
  return SlopeFit{sxy / sxx, m};
}
}  // namespace detail

template <class Site>
HeightSeries height_series(const Orbit<Site>& orbit) {
  if (orbit.states.empty()) throw Error("height_series: empty orbit");
  HeightSeries h;
  for (const auto& s : orbit.states) h.heights.push_back(height(s));
  h.window_begin = h.heights.size() / 2;
  std::vector<double> k1, y1, k2, y2, k3, y3;
  for (std::size_t k = h.window_begin; k < h.heights.size(); ++k) {
    const double lh = std::log(static_cast<double>(h.heights[k]));
    k1.push_back(static_cast<double>(k));
    y1.push_back(lh);
    if (k == 0) continue;
    k3.push_back(std::log(static_cast<double>(k)));
    y3.push_back(lh);
    if (h.heights[k] < 2) continue;
    k2.push_back(std::log(static_cast<double>(k)));
    y2.push_back(std::log(lh));
  }
  h.log_h_vs_k = detail::least_squares(k1, y1);
  h.loglog_h_vs_log_k = detail::least_squares(k2, y2);
  h.log_h_vs_log_k = detail::least_squares(k3, y3);
  return h;
}

struct FlowScanReport {
  std::size_t words = 0;      // words evaluated
  std::size_t classes = 0;    // distinct exponent vectors
  std::size_t mismatches = 0; // words disagreeing with their class representative
  std::size_t skipped = 0;    // words hitting a singularity
  std::vector<std::string> mismatch_words;
  bool path_independent() const { return mismatches == 0; }
};

/// Evaluate every word of length 1..max_depth in the given generators T_i
/// and check that words with equal exponent vectors give equivalent states.
template <class Site>
FlowScanReport commuting_flow_scan(const YbMap<Site>& map, const State<Site>& s,
                                   const std::vector<std::size_t>& generators, std::size_t max_depth = 4) {
  FlowScanReport report;
  std::map<std::vector<std::size_t>, State<Site>> representative;
  // Depth-first over words; extending a word by a letter on the left means
  // one more T application on the already computed state.
  struct Frame {
    std::vector<std::size_t> word;
    std::vector<std::size_t> exponents;
    State<Site> state;
  };
  std::vector<Frame> stack{{{}, std::vector<std::size_t>(generators.size(), 0), s}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.word.size() == max_depth) continue;
    for (std::size_t g = 0; g < generators.size(); ++g) {
      Frame next{f.word, f.exponents, {}};
      next.word.insert(next.word.begin(), generators[g]);
      ++next.exponents[g];
      ++report.words;
      try {
        next.state = apply_Ti(map, f.state, generators[g]);
      } catch (const SingularInput&) {
        ++report.skipped;
        continue;
      }
      auto [it, inserted] = representative.try_emplace(next.exponents, next.state);
      if (!inserted && !states_equivalent(it->second, next.state)) {
        ++report.mismatches;
        std::string w;
        for (auto letter : next.word) w += "T" + std::to_string(letter);
        report.mismatch_words.push_back(w);
      }
      stack.push_back(std::move(next));
    }
  }
  report.classes = representative.size();
  return report;
}

}  // namespace ybmaps

#endif
