#ifndef YBMAPS_YBCORE_HPP
#define YBMAPS_YBCORE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ybmaps/errors.hpp"
#include "ybmaps/sites.hpp"

namespace ybmaps {

/// A two-in/two-out map R(x, y) = (f(x, y), g(x, y)). Spectral parameters
/// live inside the sites, so R(lambda, mu) is read off the arguments.
template <class Site>
struct YbMap {
  using site_type = Site;
  using Pair = std::pair<Site, Site>;

  std::string name;
  std::function<Pair(const Site&, const Site&)> evaluator;
  /// Human description of where the evaluator throws SingularInput.
  std::string singular_set;
};

// All operator products below follow one convention: in a displayed
// product the rightmost factor acts first, and indices are 1-based with
// index 0 read as n.

namespace detail {
inline std::size_t wrap_index(long i, std::size_t n) {
  long m = static_cast<long>(n);
  long r = ((i - 1) % m + m) % m;
  return static_cast<std::size_t>(r) + 1;
}
inline void check_index(std::size_t i, std::size_t n) {
  if (i < 1 || i > n)
    throw IndexOutOfRange("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}
inline std::string rij_name(std::size_t i, std::size_t j) {
  return "R_" + std::to_string(i) + std::to_string(j);
}
}  // namespace detail

template <class Site>
std::pair<Site, Site> apply_R(const YbMap<Site>& map, const Site& x, const Site& y) {
  return map.evaluator(x, y);
}

/// R acting on slots i and j: (s_i, s_j) <- R(s_i, s_j). For i > j this is
/// the same rule, which gives R_21(x, y) = (g(y, x), f(y, x)).
template <class Site>
State<Site> apply_Rij(const YbMap<Site>& map, State<Site> s, std::size_t i, std::size_t j) {
  detail::check_index(i, s.size());
  detail::check_index(j, s.size());
  if (i == j) throw IndexOutOfRange("R_ij needs i != j");
  try {
    auto [fi, gj] = map.evaluator(s[i - 1], s[j - 1]);
    s[i - 1] = std::move(fi);
    s[j - 1] = std::move(gj);
  } catch (SingularInput& e) {
    if (e.factor.empty()) e.factor = detail::rij_name(i, j);
    throw;
  }
  return s;
}

template <class Site>
State<Site> apply_P(State<Site> s, std::size_t i, std::size_t j) {
  detail::check_index(i, s.size());
  detail::check_index(j, s.size());
  std::swap(s[i - 1], s[j - 1]);
  return s;
}

/// omega = P_1n P_1,n-1 ... P_12, so (a, b, c) -> (c, a, b).
template <class Site>
State<Site> apply_omega(State<Site> s) {
  for (std::size_t j = 2; j <= s.size(); ++j) s = apply_P(std::move(s), 1, j);
  return s;
}

/// S_i = P_{i,i+1} R_{i,i+1}, with i+1 taken mod n.
template <class Site>
State<Site> apply_Si(const YbMap<Site>& map, State<Site> s, std::size_t i) {
  const std::size_t n = s.size();
  detail::check_index(i, n);
  if (n < 2) throw IndexOutOfRange("S_i needs n >= 2");
  const std::size_t next = detail::wrap_index(static_cast<long>(i) + 1, n);
  return apply_P(apply_Rij(map, std::move(s), i, next), i, next);
}

/// Monodromy map T_i = R_{i,i+n-1} ... R_{i,i+2} R_{i,i+1}.
template <class Site>
State<Site> apply_Ti(const YbMap<Site>& map, State<Site> s, std::size_t i) {
  const std::size_t n = s.size();
  if (n < 2) throw IndexOutOfRange("T_i needs n >= 2");
  detail::check_index(i, n);
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t j = detail::wrap_index(static_cast<long>(i + k), n);
    try {
      s = apply_Rij(map, std::move(s), i, j);
    } catch (SingularInput& e) {
      e.factor += " in T_" + std::to_string(i);
      throw;
    }
  }
  return s;
}

/// Apply a word of generators left to right as written in an operator
/// product, i.e. the last letter acts first.
template <class Site, class Op>
State<Site> apply_word(State<Site> s, const std::vector<std::size_t>& word, Op op) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) s = op(std::move(s), *it);
  return s;
}

template <class Site>
State<Site> apply_T_word(const YbMap<Site>& map, State<Site> s, const std::vector<std::size_t>& word) {
  return apply_word(std::move(s), word, [&](State<Site> t, std::size_t i) { return apply_Ti(map, std::move(t), i); });
}

template <class Site>
State<Site> apply_S_word(const YbMap<Site>& map, State<Site> s, const std::vector<std::size_t>& word) {
  return apply_word(std::move(s), word, [&](State<Site> t, std::size_t i) { return apply_Si(map, std::move(t), i); });
}

/// R_12 R_13 R_23 == R_23 R_13 R_12 on a triple.
template <class Site>
bool check_YB(const YbMap<Site>& map, const State<Site>& triple) {
  if (triple.size() != 3) throw IndexOutOfRange("check_YB needs a triple");
  auto lhs = apply_Rij(map, apply_Rij(map, apply_Rij(map, triple, 2, 3), 1, 3), 1, 2);
  auto rhs = apply_Rij(map, apply_Rij(map, apply_Rij(map, triple, 1, 2), 1, 3), 2, 3);
  return states_equivalent(lhs, rhs);
}

/// R_21 R == Id on a pair.
template <class Site>
bool check_reversibility(const YbMap<Site>& map, const State<Site>& pair) {
  if (pair.size() != 2) throw IndexOutOfRange("check_reversibility needs a pair");
  return states_equivalent(apply_Rij(map, apply_Rij(map, pair, 1, 2), 2, 1), pair);
}

/// T_i T_j == T_j T_i.
template <class Site>
bool check_commutativity(const YbMap<Site>& map, const State<Site>& s, std::size_t i, std::size_t j) {
  detail::check_index(i, s.size());
  detail::check_index(j, s.size());
  if (i == j) return true;
  return states_equivalent(apply_T_word(map, s, {i, j}), apply_T_word(map, s, {j, i}));
}

/// T_1 T_2 ... T_n == Id.
template <class Site>
bool check_product_identity(const YbMap<Site>& map, const State<Site>& s) {
  std::vector<std::size_t> word(s.size());
  for (std::size_t k = 0; k < word.size(); ++k) word[k] = k + 1;
  return states_equivalent(apply_T_word(map, s, word), s);
}

/// S_i S_{i+1} S_i == S_{i+1} S_i S_{i+1}, i+1 mod n.
template <class Site>
bool check_braid(const YbMap<Site>& map, const State<Site>& s, std::size_t i) {
  detail::check_index(i, s.size());
  const std::size_t next = detail::wrap_index(static_cast<long>(i) + 1, s.size());
  return states_equivalent(apply_S_word(map, s, {i, next, i}), apply_S_word(map, s, {next, i, next}));
}

/// S_i^2 == Id.
template <class Site>
bool check_involution(const YbMap<Site>& map, const State<Site>& s, std::size_t i) {
  return states_equivalent(apply_S_word(map, s, {i, i}), s);
}

/// S_i S_j == S_j S_i for cyclically non-adjacent i, j.
template <class Site>
bool check_far_commutation(const YbMap<Site>& map, const State<Site>& s, std::size_t i, std::size_t j) {
  return states_equivalent(apply_S_word(map, s, {i, j}), apply_S_word(map, s, {j, i}));
}

enum class Outcome { pass, fail, skipped };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::skipped: return "skipped";
  }
  return "?";
}

struct SampleResult {
  Outcome outcome = Outcome::pass;
  std::string detail;  // singular factor or failure description
};

struct BatchReport {
  std::vector<SampleResult> results;  // ordered by sample index
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::optional<std::size_t> first_failure;
  bool all_passed() const { return failed == 0; }
};

/// Run `check(sample)` on every sample. SingularInput marks the sample as
/// skipped. Samples may be spread over threads; the report is ordered by
/// sample index so it does not depend on scheduling.
template <class Sample, class Check>
BatchReport run_batch(const std::vector<Sample>& samples, Check check, unsigned threads = 1) {
  BatchReport report;
  report.results.resize(samples.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      try {
        report.results[k].outcome = check(samples[k]) ? Outcome::pass : Outcome::fail;
      } catch (const SingularInput& e) {
        report.results[k] = {Outcome::skipped, e.factor.empty() ? e.what() : e.factor + ": " + e.what()};
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(samples.size())));
  if (threads <= 1) {
    work(0, samples.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (samples.size() + threads - 1) / threads;
    for (std::size_t b = 0; b < samples.size(); b += chunk)
      pool.emplace_back(work, b, std::min(samples.size(), b + chunk));
  }
  for (std::size_t k = 0; k < report.results.size(); ++k) {
    switch (report.results[k].outcome) {
      case Outcome::pass: ++report.passed; break;
      case Outcome::fail:
        ++report.failed;
        if (!report.first_failure) report.first_failure = k;
        break;
      case Outcome::skipped: ++report.skipped; break;
    }
  }
  return report;
}

/// Result of the converse direction of the commutativity theorem: the
/// n = 2 product identity (reversibility) together with n = 3
/// commutativity T_1 T_2 = T_2 T_1 certify a reversible YB map on the
/// sampled set.
struct MonodromyVerdict {
  BatchReport product_identity_n2;
  BatchReport commutativity_n3;
  bool reversible() const { return product_identity_n2.all_passed(); }
  bool commuting() const { return commutativity_n3.all_passed(); }
  bool consistent_with_reversible_yb() const { return reversible() && commuting(); }
  std::string summary() const {
    if (consistent_with_reversible_yb()) return "consistent-with-reversible-YB";
    if (!reversible() && !commuting()) return "fails-reversibility-and-commutativity";
    return reversible() ? "fails-n3-commutativity" : "fails-reversibility";
  }
};

template <class Site>
MonodromyVerdict yb_from_monodromy(const YbMap<Site>& map, const std::vector<State<Site>>& pairs,
                                   const std::vector<State<Site>>& triples) {
  if (pairs.empty() || triples.empty()) throw IndexOutOfRange("yb_from_monodromy needs samples");
  MonodromyVerdict v;
  v.product_identity_n2 = run_batch(pairs, [&](const State<Site>& p) { return check_product_identity(map, p); });
  v.commutativity_n3 = run_batch(triples, [&](const State<Site>& t) { return check_commutativity(map, t, 1, 2); });
  return v;
}

}  // namespace ybmaps

#endif
