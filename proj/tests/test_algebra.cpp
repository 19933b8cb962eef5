#include "catch_amalgamated.hpp"

#include "oracle.hpp"
#include "ybmaps/lax.hpp"
#include "ybmaps/matrix.hpp"
#include "ybmaps/polynomial.hpp"
#include "ybmaps/ratfun.hpp"
#include "ybmaps/sampling.hpp"

using namespace ybmaps;

namespace {

const RatFun z = RatFun::variable();

RatFun random_ratfun(Sampler& rng) {
  PolyZ num{rng.rational(), rng.rational(), rng.rational()};
  PolyZ den = rng.uniform(0, 1) == 0 ? PolyZ::constant(1) : PolyZ{rng.rational(), Rational(1)};
  return RatFun(num, den);
}

LaxMatrix random_matrix(Sampler& rng, std::size_t d) {
  std::vector<RatFun> e;
  for (std::size_t k = 0; k < d * d; ++k) e.push_back(random_ratfun(rng));
  return LaxMatrix(d, std::move(e));
}

LaxMatrix random_constant_matrix(Sampler& rng, std::size_t d) {
  std::vector<RatFun> e;
  for (std::size_t k = 0; k < d * d; ++k) e.emplace_back(rng.rational());
  return LaxMatrix(d, std::move(e));
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms with positive denominator", "[algebra][rational]") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2).numerator() == -1);
  CHECK(Rational(1, -2).denominator() == 2);
  CHECK(Rational(0, 5).denominator() == 1);
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(-6, 4).str() == "-3/2");
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("rational literals parse and print as p/q", "[algebra][rational]") {
  CHECK(Rational::parse("4/3") == Rational(4, 3));
  CHECK(Rational::parse(" -10/4 ") == Rational(-5, 2));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse("3/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
}

TEST_CASE("rational arithmetic is exact", "[algebra][rational][property]") {
  Sampler rng(11);
  for (int k = 0; k < 500; ++k) {
    const Rational a = rng.rational(), b = rng.rational();
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK(Rational(a.value()) == a);  // canonicalizing again is a no-op
  }
}

TEST_CASE("polynomial zero is the empty sequence", "[algebra][poly]") {
  PolyZ zero;
  CHECK(zero.coefficients().empty());
  CHECK(zero.degree() == PolyZ::minus_infinity);
  CHECK((PolyZ{1, 2} - PolyZ{1, 2}).is_zero());
  CHECK(PolyZ{1, 0, 0}.degree() == 0);
  CHECK(PolyZ{3, -2}.str() == "-2*z + 3");
  CHECK_THROWS_AS(divmod(PolyZ{1}, zero), DivisionByZero);
}

TEST_CASE("polynomial division and gcd", "[algebra][poly]") {
  const PolyZ a{-1, 0, 1};  // z^2 - 1
  const PolyZ b{-1, 1};     // z - 1
  auto [q, r] = divmod(a, b);
  CHECK(q == PolyZ{1, 1});
  CHECK(r.is_zero());
  CHECK(gcd(a, PolyZ{2, 2}) == PolyZ{1, 1});
  CHECK(gcd(a, PolyZ{5}) == PolyZ{1});
  CHECK(compose(PolyZ{1, 0, 1}, PolyZ{0, 2}) == PolyZ{1, 0, 4});

  Sampler rng(3);
  for (int k = 0; k < 100; ++k) {
    const PolyZ x{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
    const PolyZ y{rng.rational(), rng.rational(), Rational(1)};
    auto [qq, rr] = divmod(x, y);
    CHECK(qq * y + rr == x);
    CHECK(rr.degree() < y.degree());
  }
}

TEST_CASE("rational functions cancel common factors", "[algebra][ratfun]") {
  const RatFun lhs(PolyZ{-1, 0, 1}, PolyZ{-1, 1});
  const RatFun rhs(PolyZ{1, 1});
  CHECK(ratfun_eq(lhs, rhs));
  CHECK(lhs == rhs);
  CHECK(lhs.den() == PolyZ{1});

  // 2 lambda/(z - lambda) at lambda = 1 vs 2/(z - 1)
  const Rational lambda(1);
  const RatFun w = RatFun(Rational(2) * lambda) / (z - RatFun(lambda));
  CHECK(ratfun_eq(w, RatFun(PolyZ{2}, PolyZ{-1, 1})));

  CHECK_FALSE(ratfun_eq(RatFun(PolyZ{13, -2}), RatFun(PolyZ{13, -3})));

  const RatFun scaled(PolyZ{2, 4}, PolyZ{6, 2});  // (4z+2)/(2z+6) = (2z+1)/(z+3)
  CHECK(scaled.den() == PolyZ{3, 1});
  CHECK(scaled.num() == PolyZ{1, 2});
  CHECK_THROWS_AS(RatFun(PolyZ{1}, PolyZ{}), DivisionByZero);
  CHECK(RatFun(PolyZ{}, PolyZ{4, 1}).den() == PolyZ{1});
}

TEST_CASE("rational function canonicalization is idempotent", "[algebra][ratfun][property]") {
  Sampler rng(5);
  for (int k = 0; k < 200; ++k) {
    const RatFun a = random_ratfun(rng), b = random_ratfun(rng);
    const RatFun s = a * b + a / (b.is_zero() ? RatFun(1) : b);
    CHECK(RatFun::from_pair(s.num(), s.den()) == s);
    CHECK(s.den().leading() == Rational(1));
    CHECK(gcd(s.num(), s.den()).is_constant());
    // Field identities, structurally.
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}

TEST_CASE("mat_mul on the dressing matrices", "[algebra][matrix]") {
  const LaxMatrix a1 = dressing_A({1, 3});
  const LaxMatrix a2 = dressing_A({2, 1});
  CHECK(mat_mul(LaxMatrix::identity(2), a1) == a1);

  const LaxMatrix m = mat_mul(a2, a1);
  CHECK(m(0, 1) == RatFun(3));
  CHECK(m(1, 1) == RatFun(PolyZ{7, -1}));
  CHECK(m(0, 0) == RatFun(PolyZ{6, -1}));
  CHECK(m(1, 0) == RatFun(PolyZ{13, -3}));

  const CharPoly cp = char_poly(m);
  CHECK(cp.determinant() == (z - RatFun(3)) * (z - RatFun(1)));

  CHECK_THROWS_AS(mat_mul(a1, LaxMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("mat_mul agrees with pointwise evaluation", "[algebra][matrix][oracle]") {
  Sampler rng(17);
  for (std::size_t d : {2u, 3u}) {
    for (int k = 0; k < 20; ++k) {
      const LaxMatrix a = random_matrix(rng, d), b = random_matrix(rng, d);
      const LaxMatrix ab = a * b;
      for (long zz : {7L, -11L, 101L}) {
        const Rational pt(zz, 13);
        try {
          CHECK(oracle::at(ab, pt) == oracle::multiply(oracle::at(a, pt), oracle::at(b, pt)));
        } catch (const DivisionByZero&) {
          // sampled point hit a pole
        }
      }
    }
  }
}

TEST_CASE("mat_mul is associative", "[algebra][matrix][property]") {
  Sampler rng(23);
  for (std::size_t d : {2u, 3u}) {
    for (int k = 0; k < 10; ++k) {
      const LaxMatrix a = random_matrix(rng, d), b = random_matrix(rng, d), c = random_matrix(rng, d);
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("char_poly of small closed forms", "[algebra][charpoly]") {
  const CharPoly id = char_poly(LaxMatrix::identity(2));
  CHECK(id.coefficients == std::vector<RatFun>{RatFun(1), RatFun(-2), RatFun(1)});

  const RatFun r1 = z + RatFun(2), r2(Rational(5, 3));
  LaxMatrix diag(2);
  diag(0, 0) = r1;
  diag(1, 1) = r2;
  // (lambda - r1)(lambda - r2) = lambda^2 - (r1 + r2) lambda + r1 r2
  CHECK(char_poly(diag).coefficients == std::vector<RatFun>{r1 * r2, -(r1 + r2), RatFun(1)});

  const LaxMatrix m = dressing_A({2, 1}) * dressing_A({1, 3});
  const CharPoly cp = char_poly(m);
  CHECK(cp.trace_coefficient() == -RatFun(PolyZ{13, -2}));
  CHECK(cp.determinant() == RatFun(PolyZ{3, -4, 1}));

  // Leading coefficient is (-1)^d.
  CHECK(char_poly(LaxMatrix::identity(3)).coefficients.back() == RatFun(-1));
  CHECK_THROWS_AS(char_poly(LaxMatrix::identity(7)), DimensionTooLarge);
  CHECK_NOTHROW(char_poly(LaxMatrix::identity(7), 7));
}

TEST_CASE("Leibniz and trace recurrence agree", "[algebra][charpoly][property]") {
  Sampler rng(29);
  for (std::size_t d = 1; d <= 4; ++d) {
    for (int k = 0; k < 5; ++k) {
      const LaxMatrix m = random_matrix(rng, d);
      CHECK(char_poly_leibniz(m) == char_poly_faddeev_leverrier(m));
    }
  }
}

TEST_CASE("char_poly matches determinant evaluation", "[algebra][charpoly][oracle]") {
  Sampler rng(31);
  for (std::size_t d : {2u, 3u, 4u, 5u, 6u}) {
    for (int k = 0; k < 3; ++k) {
      const LaxMatrix m = d <= 4 ? random_matrix(rng, d) : random_constant_matrix(rng, d);
      const CharPoly cp = char_poly(m);
      REQUIRE(cp.coefficients.size() == d + 1);
      for (long zz : {3L, -5L}) {
        const Rational pt(zz, 7);
        try {
          for (long ll : {2L, -9L, 4L}) {
            const Rational lambda(ll, 5);
            Rational value;
            Rational power(1);
            for (const auto& c : cp.coefficients) {
              value += c(pt) * power;
              power *= lambda;
            }
            CHECK(value == oracle::char_value(m, pt, lambda));
          }
        } catch (const DivisionByZero&) {
        }
      }
    }
  }
}

TEST_CASE("char_poly(AB) equals char_poly(BA)", "[algebra][charpoly][property]") {
  Sampler rng(37);
  for (std::size_t d : {2u, 3u}) {
    for (int k = 0; k < 8; ++k) {
      const LaxMatrix a = random_matrix(rng, d), b = random_matrix(rng, d);
      CHECK(char_poly(a * b) == char_poly(b * a));
    }
  }
}
