#include "catch_amalgamated.hpp"

#include "ybmaps/maps.hpp"
#include "ybmaps/sampling.hpp"
#include "ybmaps/ybcore.hpp"

#include <optional>

using namespace ybmaps;

namespace {

using DState = State<DressingSite>;
using SState = State<ScalarSite>;

DressingSite ds(Rational f, Rational beta) { return {f, beta}; }

SState scalars(std::initializer_list<long> v) {
  SState s;
  for (long x : v) s.push_back({Rational(x)});
  return s;
}

const DState fixture3{ds(1, 3), ds(2, 1), ds(1, 2)};

// Value of a check, or nothing when the sample is singular.
template <class F>
std::optional<bool> evaluated(F f) {
  try {
    return f();
  } catch (const SingularInput&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("R_ij acts on slots i and j only", "[ybcore]") {
  const auto adler = adler_map();
  const DState pair{ds(1, 3), ds(2, 1)};
  const auto [x, y] = apply_R(adler, pair[0], pair[1]);
  CHECK(apply_Rij(adler, pair, 1, 2) == DState{x, y});

  const DState r13 = apply_Rij(adler, fixture3, 1, 3);
  CHECK(r13[1] == fixture3[1]);
  const auto [a, c] = apply_R(adler, fixture3[0], fixture3[2]);
  CHECK(r13 == DState{a, fixture3[1], c});
}

TEST_CASE("R_21 reads R with swapped arguments", "[ybcore]") {
  const auto adler = adler_map();
  Sampler rng(41);
  for (int k = 0; k < 50; ++k) {
    const DState s = rng.dressing_state(2);
    if ((s[0].f + s[1].f).is_zero()) continue;
    const auto [f, g] = apply_R(adler, s[1], s[0]);
    CHECK(apply_Rij(adler, s, 2, 1) == DState{g, f});
    CHECK(apply_Rij(adler, s, 2, 1) == apply_P(apply_Rij(adler, apply_P(s, 1, 2), 1, 2), 1, 2));
  }
}

TEST_CASE("P and omega permute slots", "[ybcore]") {
  CHECK(apply_P(scalars({1, 2}), 1, 2) == scalars({2, 1}));
  CHECK(apply_omega(scalars({1, 2, 3})) == scalars({3, 1, 2}));
  for (std::size_t n : {3u, 4u, 5u}) {
    SState s;
    for (std::size_t k = 0; k < n; ++k) s.push_back({Rational(static_cast<long>(k * k + 1))});
    SState t = s;
    for (std::size_t k = 0; k < n; ++k) {
      t = apply_omega(std::move(t));
      if (k + 1 < n) CHECK(t != s);
    }
    CHECK(t == s);
  }
}

TEST_CASE("S_i is the transposed image of R", "[ybcore]") {
  const auto adler = adler_map();
  CHECK(apply_Si(adler, DState{ds(1, 3), ds(2, 1)}, 1) == DState{ds(Rational(5, 3), 1), ds(Rational(4, 3), 3)});

  const auto perm = permutation_map<ScalarSite>();
  const SState s = scalars({4, 5, 6});
  for (std::size_t i = 1; i <= 3; ++i) CHECK(apply_Si(perm, s, i) == s);

  // Affine index: S_3 on n = 3 acts on slots 3 and 1.
  const DState s3 = apply_Si(adler, fixture3, 3);
  const auto [x3, x1] = apply_R(adler, fixture3[2], fixture3[0]);
  CHECK(s3 == DState{x3, fixture3[1], x1});
}

TEST_CASE("T_i at n = 2", "[ybcore]") {
  const auto adler = adler_map();
  const DState s{ds(1, 3), ds(2, 1)};
  CHECK(apply_Ti(adler, s, 1) == apply_Rij(adler, s, 1, 2));
  CHECK(apply_Ti(adler, s, 2) == apply_Rij(adler, s, 2, 1));
  CHECK(apply_Ti(adler, s, 1) == DState{ds(Rational(4, 3), 3), ds(Rational(5, 3), 1)});
}

TEST_CASE("T_i at n = 3 on the Adler fixture", "[ybcore]") {
  const auto adler = adler_map();
  const DState after_r12{ds(Rational(4, 3), 3), ds(Rational(5, 3), 1), ds(1, 2)};
  CHECK(apply_Rij(adler, fixture3, 1, 2) == after_r12);
  CHECK(apply_Ti(adler, fixture3, 1) == apply_Rij(adler, after_r12, 1, 3));

  const DState t1{ds(Rational(4, 7), 3), ds(Rational(5, 3), 1), ds(Rational(37, 21), 2)};
  CHECK(apply_Ti(adler, fixture3, 1) == t1);
  CHECK(apply_Ti(adler, fixture3, 2) ==
        DState{ds(Rational(10, 21), 3), ds(Rational(13, 7), 1), ds(Rational(5, 3), 2)});
  CHECK(apply_Ti(adler, t1, 1) ==
        DState{ds(Rational(2661, 1946), 3), ds(Rational(482, 329), 1), ds(Rational(15255, 13066), 2)});
  CHECK(apply_T_word(adler, fixture3, {1, 1}) == apply_Ti(adler, t1, 1));
}

TEST_CASE("check_YB on built-in maps and a non-example", "[ybcore]") {
  CHECK(check_YB(permutation_map<ScalarSite>(), scalars({1, 2, 3})));
  CHECK(check_YB(identity_map<ScalarSite>(), scalars({1, 2, 3})));
  CHECK(check_YB(adler_map(), fixture3));

  const auto sumleft = sumleft_map();
  const SState t = scalars({1, 1, 1});
  const SState lhs = apply_Rij(sumleft, apply_Rij(sumleft, apply_Rij(sumleft, t, 2, 3), 1, 3), 1, 2);
  const SState rhs = apply_Rij(sumleft, apply_Rij(sumleft, apply_Rij(sumleft, t, 1, 2), 1, 3), 2, 3);
  CHECK(lhs == scalars({4, 2, 1}));
  CHECK(rhs == scalars({3, 2, 1}));
  CHECK_FALSE(check_YB(sumleft, t));
}

TEST_CASE("reversibility", "[ybcore]") {
  CHECK(check_reversibility(permutation_map<ScalarSite>(), scalars({1, 2})));
  CHECK(check_reversibility(adler_map(), DState{ds(1, 3), ds(2, 1)}));
  CHECK_FALSE(check_reversibility(sumleft_map(), scalars({1, 1})));
}

TEST_CASE("monodromy maps commute and multiply to the identity", "[ybcore][property]") {
  const auto adler = adler_map();
  Sampler rng(43);
  std::size_t checked = 0;
  for (std::size_t n : {3u, 4u}) {
    for (int k = 0; k < 20; ++k) {
      const DState s = rng.dressing_state(n);
      const auto holds = evaluated([&] {
        bool ok = check_product_identity(adler, s);
        for (std::size_t i = 1; i <= n; ++i)
          for (std::size_t j = 1; j <= n; ++j) ok = ok && check_commutativity(adler, s, i, j);
        return ok;
      });
      if (!holds) continue;
      CHECK(*holds);
      ++checked;
    }
  }
  CHECK(checked > 30);

  const auto sumleft = sumleft_map();
  const SState t = scalars({1, 1, 1});
  CHECK(apply_T_word(sumleft, t, {1, 2}) == scalars({5, 3, 1}));
  CHECK(apply_T_word(sumleft, t, {2, 1}) == scalars({3, 5, 1}));
  CHECK_FALSE(check_commutativity(sumleft, t, 1, 2));
  CHECK(check_commutativity(sumleft, t, 2, 2));
}

TEST_CASE("braid, involution and far commutation", "[ybcore][property]") {
  const auto adler = adler_map();
  Sampler rng(47);
  std::size_t checked = 0;
  for (std::size_t n : {3u, 4u, 5u}) {
    for (int k = 0; k < 10; ++k) {
      const DState s = rng.dressing_state(n);
      const auto holds = evaluated([&] {
        bool ok = n < 4 || check_far_commutation(adler, s, 1, 3);
        for (std::size_t i = 1; i <= n; ++i) ok = ok && check_involution(adler, s, i) && check_braid(adler, s, i);
        return ok;
      });
      if (!holds) continue;
      CHECK(*holds);
      ++checked;
    }
  }
  CHECK(checked > 20);
  const auto sumleft = sumleft_map();
  CHECK_FALSE(check_involution(sumleft, scalars({1, 1, 1}), 1));
}

TEST_CASE("index errors", "[ybcore]") {
  const auto adler = adler_map();
  CHECK_THROWS_AS(apply_Rij(adler, fixture3, 0, 1), IndexOutOfRange);
  CHECK_THROWS_AS(apply_Rij(adler, fixture3, 1, 4), IndexOutOfRange);
  CHECK_THROWS_AS(apply_Rij(adler, fixture3, 2, 2), IndexOutOfRange);
  CHECK_THROWS_AS(apply_Ti(adler, fixture3, 4), IndexOutOfRange);
  CHECK_THROWS_AS(apply_Ti(adler, DState{ds(1, 1)}, 1), IndexOutOfRange);
  CHECK_THROWS_AS(check_YB(adler, DState{ds(1, 1), ds(2, 1)}), IndexOutOfRange);
  CHECK_THROWS_AS(check_reversibility(adler, fixture3), IndexOutOfRange);
}

TEST_CASE("singular inputs name the failing factor", "[ybcore]") {
  const auto adler = adler_map();
  const DState s{ds(1, 0), ds(-1, 1), ds(2, 0)};
  try {
    apply_Ti(adler, s, 1);
    FAIL("expected SingularInput");
  } catch (const SingularInput& e) {
    CHECK(e.factor == "R_12 in T_1");
  }
  // T_3 = R_32 R_31 meets f3 + f1 = 0 first.
  const DState u{ds(1, 0), ds(5, 1), ds(-1, 2)};
  try {
    apply_Ti(adler, u, 3);
    FAIL("expected SingularInput");
  } catch (const SingularInput& e) {
    CHECK(e.factor == "R_31 in T_3");
  }
}

TEST_CASE("run_batch is ordered and thread-count independent", "[ybcore]") {
  const auto adler = adler_map();
  Sampler rng(53);
  auto triples = sample_states<DressingSite>(rng, 200, 3);
  triples.push_back(DState{ds(1, 0), ds(-1, 1), ds(2, 0)});
  auto check = [&](const DState& t) { return check_YB(adler, t); };
  const BatchReport serial = run_batch(triples, check, 1);
  const BatchReport parallel = run_batch(triples, check, 4);
  CHECK(serial.passed + serial.failed + serial.skipped == triples.size());
  CHECK(serial.failed == 0);
  CHECK(serial.skipped >= 1);
  CHECK(serial.results.back().outcome == Outcome::skipped);
  CHECK(serial.results.back().detail.rfind("R_", 0) == 0);
  REQUIRE(parallel.results.size() == serial.results.size());
  for (std::size_t k = 0; k < serial.results.size(); ++k) {
    CHECK(parallel.results[k].outcome == serial.results[k].outcome);
    CHECK(parallel.results[k].detail == serial.results[k].detail);
  }
  CHECK_FALSE(serial.first_failure);
}

TEST_CASE("yb_from_monodromy verdicts", "[ybcore]") {
  Sampler rng(59);
  const auto pairs = sample_states<DressingSite>(rng, 30, 2);
  const auto triples = sample_states<DressingSite>(rng, 30, 3);
  const auto adler = yb_from_monodromy(adler_map(), pairs, triples);
  CHECK(adler.consistent_with_reversible_yb());
  CHECK(adler.summary() == "consistent-with-reversible-YB");

  const auto spairs = sample_states<ScalarSite>(rng, 10, 2);
  auto striples = sample_states<ScalarSite>(rng, 10, 3);
  striples.insert(striples.begin(), scalars({1, 1, 1}));
  const auto perm = yb_from_monodromy(permutation_map<ScalarSite>(), spairs, striples);
  CHECK(perm.summary() == "consistent-with-reversible-YB");

  const auto sumleft = yb_from_monodromy(sumleft_map(), spairs, striples);
  CHECK_FALSE(sumleft.commuting());
  CHECK(sumleft.commutativity_n3.first_failure == std::size_t{0});
  CHECK_FALSE(sumleft.consistent_with_reversible_yb());

  CHECK_THROWS_AS(yb_from_monodromy(adler_map(), {}, triples), IndexOutOfRange);
}
