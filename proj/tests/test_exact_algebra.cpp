#include "support.hpp"

using namespace planeaut;
using namespace planeaut::testing;

// ---- scalars ----

TEST(Rational, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Rational::parse("-3").to_string(), "-3");
  EXPECT_EQ((q(1, 2) + q(1, 3)).to_string(), "5/6");
  EXPECT_THROW(q(1) / q(0), DomainError);
}

TEST(Fp, ValuesAreReduced) {
  const auto c = Fp::make_context(7);
  EXPECT_EQ(Fp(-1L, c).value(), 6u);
  EXPECT_EQ(Fp(15L, c).value(), 1u);
  EXPECT_EQ((Fp(3L, c) * Fp(5L, c)).value(), 1u);
  EXPECT_EQ((Fp(1L, c) / Fp(3L, c)).value(), 5u);
  EXPECT_THROW(Fp::make_context(9), DomainError);
}

TEST(RatFunc, LowestTermsMonicDenominator) {
  using R = RatFunc<Rational>;
  const R z = R::z({});
  const R one(1L, {});
  // (z^2 - 1) / (2z + 2) = (z - 1) / 2
  const R f = (z * z - one) / (R(2L, {}) * z + R(2L, {}));
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.to_string(), "-1/2 + 1/2*z");
  const R g = one / (R(3L, {}) * z);
  EXPECT_EQ(g.denominator().to_string("z"), "z");
  EXPECT_EQ(g.numerator().to_string("z"), "1/3");
  EXPECT_EQ(g * R(3L, {}) * z, one);
}

template <class K>
class FieldAxioms : public ::testing::Test {};
TYPED_TEST_SUITE(FieldAxioms, Backends);

TYPED_TEST(FieldAxioms, RandomizedAxioms) {
  using K = TypeParam;
  Random rnd(11);
  const auto c = ctx<K>();
  for (int i = 0; i < 200; ++i) {
    const K a = rnd.any<K>(c), b = rnd.any<K>(c), d = rnd.any<K>(c);
    EXPECT_EQ((a + b) + d, a + (b + d));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_TRUE((a / a).is_one());
  }
}

// ---- polynomials ----

TEST(Poly1, ZeroPolynomialDegree) {
  const Poly1<Rational> z(Rational::Context{});
  EXPECT_EQ(z.degree(), kNegInfDegree);
  EXPECT_LT(z.degree(), 0);
  Poly1<Rational> f = t_pow<Rational>(2);
  f.add_term(2, q(-1));
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.terms().size(), 0u);
}

TEST(Poly1, DivmodAndGcd) {
  using P = Poly1<Rational>;
  const P t = P::variable({}), one = P::constant(q(1));
  const P a = (t - one) * (t + one) * (t + one), b = (t + one) * (t * t + one);
  auto [qq, r] = P::divmod(a, b);
  EXPECT_EQ(qq * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  EXPECT_EQ(gcd(a, b), t + one);
}

template <class K>
class PolyLaws : public ::testing::Test {};
TYPED_TEST_SUITE(PolyLaws, Backends);

TYPED_TEST(PolyLaws, RingLawsAndSubstitutionHomomorphism) {
  using K = TypeParam;
  Random rnd(5);
  const auto c = ctx<K>();
  // coefficients in Q(z) grow quickly under substitution
  const long deg = kHeavy<K> ? 2 : 3;
  auto rp = [&] {
    Poly2<K> p(c);
    for (int i = 0; i < 4; ++i)
      p += Poly2<K>::monomial(rnd.any<K>(c), static_cast<unsigned>(rnd.integer(0, deg)),
                              static_cast<unsigned>(rnd.integer(0, deg)));
    return p;
  };
  for (int i = 0; i < 30; ++i) {
    const Poly2<K> p = rp(), r = rp(), s = rp(), u = rp(), v = rp();
    EXPECT_EQ((p + r) + s, p + (r + s));
    EXPECT_EQ(p * r, r * p);
    EXPECT_EQ((p * r).substitute(u, v), p.substitute(u, v) * r.substitute(u, v));
    EXPECT_EQ((p + r).substitute(u, v), p.substitute(u, v) + r.substitute(u, v));
  }
}

TEST(Poly2, SubstituteExamples) {
  const auto x = X<Rational>(), y = Y<Rational>();
  EXPECT_EQ(poly2_substitute(x, y + x * x, x), y + x * x);
  EXPECT_EQ(poly2_substitute(y, x, y), y);
  EXPECT_EQ(poly2_substitute(y + x * x, x, y + x * x), y + q(2) * x * x);
}

TEST(Poly2, CanonicalPrinting) {
  const auto x = X<Rational>(), y = Y<Rational>();
  EXPECT_EQ((y + q(2) * x * x).to_string(), "y + 2*x^2");
  EXPECT_EQ((q(1, 2) * x - y * y + x * y - Poly2<Rational>::constant(q(3))).to_string(), "-3 + 1/2*x + x*y - y^2");
  EXPECT_EQ(Poly2<Rational>(Rational::Context{}).to_string(), "0");
}

// ---- projective points and square-zero endomorphisms ----

TEST(ProjPoint, CanonicalForms) {
  EXPECT_EQ(canonical_proj_point(q(0), q(5)), ProjPoint<Rational>::make(q(0), q(1)));
  EXPECT_TRUE(canonical_proj_point(q(3), q(0)).is_infinity());
  EXPECT_EQ(canonical_proj_point(q(3), q(0)).a(), q(1));
  EXPECT_EQ(canonical_proj_point(q(2), q(4)), canonical_proj_point(q(1), q(2)));
  EXPECT_EQ(canonical_proj_point(q(1), q(2)).a(), q(1, 2));
  EXPECT_THROW(canonical_proj_point(q(0), q(0)), DomainError);
}

template <class K>
class ProjLaws : public ::testing::Test {};
TYPED_TEST_SUITE(ProjLaws, Backends);

TYPED_TEST(ProjLaws, ScaleInvarianceAndNilEndoInvariants) {
  using K = TypeParam;
  Random rnd(17);
  const auto c = ctx<K>();
  for (int i = 0; i < 100; ++i) {
    K a = rnd.any<K>(c), b = rnd.any<K>(c);
    if (a.is_zero() && b.is_zero()) b = K(1L, c);
    const K lam = rnd.any<K>(c, true);
    const auto d = canonical_proj_point(a, b);
    EXPECT_EQ(canonical_proj_point(lam * a, lam * b), d);
    const Mat2<K> e = nil_endo(d);
    EXPECT_TRUE(e.trace().is_zero());
    EXPECT_TRUE(e.det().is_zero());
    EXPECT_TRUE((e * e).is_zero());
    EXPECT_EQ(e.rank(), 1);
    EXPECT_EQ(image_line(e), d);
  }
}

TEST(NilEndo, Examples) {
  const auto e01 = nil_endo(ProjPoint<Rational>::make(q(0), q(1)));
  EXPECT_EQ(e01, (Mat2<Rational>{q(0), q(0), q(1), q(0)}));
  const auto e10 = nil_endo(ProjPoint<Rational>::infinity({}));
  EXPECT_EQ(e10, (Mat2<Rational>{q(0), q(1), q(0), q(0)}));
}

TEST(BilinearBracket, Examples) {
  const auto id = Mat2<Rational>::identity({});
  EXPECT_EQ(bilinear_bracket(id, id), q(2));
  const auto d = ProjPoint<Rational>::make(q(3), q(1));
  const auto e = nil_endo(d);
  // two rank-one maps with image on the same line
  const Mat2<Rational> f{q(3), q(6), q(1), q(2)};
  EXPECT_EQ(bilinear_bracket(e, f), q(0));
  Random rnd(3);
  for (int i = 0; i < 50; ++i) {
    const Mat2<Rational> A{rnd.scalar(Rational::Context{}), rnd.scalar(Rational::Context{}), rnd.scalar(Rational::Context{}), rnd.scalar(Rational::Context{})};
    const Mat2<Rational> B{rnd.scalar(Rational::Context{}), rnd.scalar(Rational::Context{}), rnd.scalar(Rational::Context{}), rnd.scalar(Rational::Context{})};
    EXPECT_EQ(bilinear_bracket(A, B), bilinear_bracket(B, A));
  }
}

// ---- polynomial matrices ----

TEST(PolyMat2, MultiplicationExamples) {
  const auto c = ctx<Rational>();
  const auto L = parse_polymat<Rational>("1, 0 ; t, 1", c);
  const auto U = parse_polymat<Rational>("1, t ; 0, 1", c);
  EXPECT_EQ(polymat_mul(L, U), parse_polymat<Rational>("1, t ; t, 1 + t^2", c));
  EXPECT_EQ(polymat_mul(PolyMat2<Rational>::identity(c), L), L);
}

template <class K>
class PolyMatLaws : public ::testing::Test {};
TYPED_TEST_SUITE(PolyMatLaws, Backends);

TYPED_TEST(PolyMatLaws, DeterminantIsMultiplicative) {
  using K = TypeParam;
  Random rnd(23);
  const auto c = ctx<K>();
  auto rm = [&] {
    return PolyMat2<K>{rnd.poly<K>(c, 0, 2), rnd.poly<K>(c, 0, 1), rnd.poly<K>(c, 0, 2), rnd.poly<K>(c, 0, 1)};
  };
  for (int i = 0; i < 30; ++i) {
    const auto A = rm(), B = rm();
    EXPECT_EQ((A * B).det(), A.det() * B.det());
  }
}
