#include "support.hpp"

#include "planeaut/generators.hpp"

using namespace planeaut;
using namespace planeaut::testing;
namespace gen = planeaut::generators;

TEST(Compose, Examples) {
  const auto T = gen::T<Rational>({});
  EXPECT_EQ(compose(T, T), qa("x, y + 2*x^2"));
  const auto S = gen::S<Rational>({});
  EXPECT_EQ(compose(compose(S, T), invert(S)), compose(T, T));
  const auto phi = qa("x + y^3, y - x");
  EXPECT_EQ(compose(phi, PlaneAuto<Rational>::identity({})), phi);
  // right factor acts first
  EXPECT_EQ(compose(qa("y, x"), T), qa("y + x^2, x"));
}

TEST(Jacobian, Examples) {
  EXPECT_EQ(jacobian(gen::T<Rational>({})).to_string(), "1");
  EXPECT_EQ(jacobian(gen::S<Rational>({})).to_string(), "1/4");
  EXPECT_EQ(jacobian(qa("x^2, y")).to_string(), "2*x");
  // formal derivative in characteristic 2: d(x^2)/dx = 0
  const auto c2 = Fp::make_context(2);
  EXPECT_TRUE(jacobian(parse_plane_auto<Fp>("x^2, y", c2)).is_zero());
}

TEST(Classify, Examples) {
  const auto t = classify(gen::T<Rational>({}));
  EXPECT_TRUE(t.is_elementary && t.in_Aut0 && t.in_Aut1 && t.in_SAut);
  EXPECT_FALSE(t.is_affine || t.in_B);
  const auto s = classify(gen::S_prime<Rational>({}));
  EXPECT_TRUE(s.is_affine && s.in_Aut0);
  EXPECT_FALSE(s.in_SAut || s.in_B || s.in_Aut1);
  const auto tr = classify(qa("x + 1, y"));
  EXPECT_TRUE(tr.is_affine && tr.is_elementary && tr.in_B);
  EXPECT_FALSE(tr.in_Aut0);
}

TEST(TauDelta, Examples) {
  const auto d01 = ProjPoint<Rational>::make(q(0), q(1));
  const auto d11 = ProjPoint<Rational>::make(q(1), q(1));
  EXPECT_EQ(tau_delta(d01, t_pow<Rational>(2)), qa("x, y + x^2"));
  EXPECT_EQ(tau_delta(d11, t_pow<Rational>(2)), qa("x + (x - y)^2, y + (x - y)^2"));
  EXPECT_EQ(tau_delta(ProjPoint<Rational>::infinity({}), t_pow<Rational>(2)), qa("x + y^2, y"));
  EXPECT_THROW(tau_delta(d01, t_pow<Rational>(1)), DomainError);
  EXPECT_THROW(tau_delta(d01, Poly1<Rational>(Rational::Context{})), DomainError);
}

template <class K>
class TauLaws : public ::testing::Test {};
TYPED_TEST_SUITE(TauLaws, Backends);

TYPED_TEST(TauLaws, AdditiveInF) {
  using K = TypeParam;
  Random rnd(2);
  const auto c = ctx<K>();
  for (int i = 0; i < 20; ++i) {
    const auto d = rnd.line<K>(c);
    const auto f = rnd.poly<K>(c, 2, 4), g = rnd.poly<K>(c, 2, 3);
    if ((f + g).is_zero()) continue;
    EXPECT_EQ(compose(tau_delta(d, f), tau_delta(d, g)), tau_delta(d, f + g));
    EXPECT_TRUE(classify(tau_delta(d, f)).in_Aut1);
  }
}

TEST(GnGroup, LiteralElements) {
  EXPECT_EQ(g_n_element(3, q(1), q(1)).to_plane(), qa("x, y + x^2"));
  EXPECT_EQ(g_n_element(3, q(2), q(0)).to_plane(), qa("2*x, 1/2*y"));
  EXPECT_THROW(g_n_element(3, q(0), q(1)), DomainError);
  EXPECT_THROW(g_n_element(1, q(1), q(1)), DomainError);
}

TEST(GnGroup, EmbeddingRespectsTheLaw) {
  // (z, a).(z', a') = (z z', z'^n a + a') evaluated both ways for (2, 0), (1, 1)
  const int n = 3;
  const std::pair<Rational, Rational> g{q(2), q(0)}, h{q(1), q(1)};
  const auto gh = g_n_multiply(n, g, h), hg = g_n_multiply(n, h, g);
  EXPECT_EQ(gh, (std::pair{q(2), q(1)}));
  EXPECT_EQ(hg, (std::pair{q(2), q(8)}));
  auto emb = [&](const std::pair<Rational, Rational>& p) { return g_n_embed(n, p.first, p.second); };
  EXPECT_EQ(compose(emb(g), emb(h)), emb(gh));
  EXPECT_EQ(compose(emb(h), emb(g)), emb(hg));
  EXPECT_EQ(emb(gh).to_plane(), qa("2*x, 1/2*y + 1/2*x^2"));

  Random rnd(4);
  for (int i = 0; i < 50; ++i) {
    const int m = static_cast<int>(rnd.integer(2, 5));
    const std::pair<Rational, Rational> a{rnd.scalar(Rational::Context{}, true), rnd.scalar(Rational::Context{})}, b{rnd.scalar(Rational::Context{}, true), rnd.scalar(Rational::Context{})};
    EXPECT_EQ(compose(g_n_embed(m, a.first, a.second), g_n_embed(m, b.first, b.second)),
              g_n_embed(m, g_n_multiply(m, a, b).first, g_n_multiply(m, a, b).second));
  }
}

TEST(GnGroup, LiteralParameterizationIsNotMultiplicative) {
  // the raw map (z, a) -> (zx, y/z + a x^(n-1)) disagrees with the law, which
  // is why the embedding rescales a by 1/z
  const int n = 3;
  const auto lhs = compose(g_n_element(n, q(2), q(0)), g_n_element(n, q(1), q(1)));
  const auto prod = g_n_multiply(n, std::pair{q(2), q(0)}, std::pair{q(1), q(1)});
  EXPECT_NE(lhs, g_n_element(n, prod.first, prod.second));
}

TEST(Named, Generators) {
  EXPECT_EQ(gen::named<Rational>("S'", {}), qa("x + y, x"));
  EXPECT_EQ(gen::S_prime<Rational>({}).linear_part(), (Mat2<Rational>{q(1), q(1), q(1), q(0)}));
  EXPECT_EQ(gen::named<Rational>("h", {}), qa("2*x, 1/2*y"));
  EXPECT_EQ(gen::named<Rational>("u", {}, 2), gen::T<Rational>({}));
  EXPECT_EQ(gen::named<Rational>("gamma", {}, 0, q(3)), qa("x + 3*y, y"));
  EXPECT_EQ(gen::named<Rational>("phi", {}, 3, q(2)), qa("x, y + 2*x^3"));
  EXPECT_THROW(gen::named<Rational>("Q", {}), DomainError);
  EXPECT_THROW(gen::named<Rational>("u", {}, 0), DomainError);
  EXPECT_THROW(gen::S<Fp>(Fp::make_context(2)), DomainError);
}

TEST(Relations, SectionThree) {
  const auto S = gen::S<Rational>({}), Sp = gen::S_prime<Rational>({}), T = gen::T<Rational>({});
  EXPECT_EQ(compose(S, Sp), compose(Sp, S));
  EXPECT_EQ(compose(compose(S, T), invert(S)), compose(T, T));
}

TEST(Relations, HomothetyScalingOfUn) {
  // h^-1 o u_n o h = u_n^(2^(n+1)) with h = (2x, y/2)
  const auto h = gen::h<Rational>({});
  for (int n = 1; n <= 4; ++n) {
    const auto u = gen::u<Rational>(n, {});
    PlaneAuto<Rational> p = PlaneAuto<Rational>::identity({});
    for (int i = 0; i < (1 << (n + 1)); ++i) p = compose(p, u);
    EXPECT_EQ(compose(compose(invert(h), u), h), p) << "n = " << n;
    EXPECT_NE(compose(compose(h, u), invert(h)), p) << "n = " << n;
  }
}

template <class K>
class GroupLaws : public ::testing::Test {};
TYPED_TEST_SUITE(GroupLaws, Backends);

TYPED_TEST(GroupLaws, AssociativityChainRuleAndConjugation) {
  using K = TypeParam;
  Random rnd(8);
  const auto c = ctx<K>();
  auto ra = [&] {
    PlaneAuto<K> p = PlaneAuto<K>::identity(c);
    const long n = rnd.integer(1, kHeavy<K> ? 2 : 3);
    for (long i = 0; i < n; ++i) p = compose(p, to_plane(rnd.factor<K>(c, 2)));
    return p;
  };
  for (int i = 0; i < 15; ++i) {
    const auto a = ra(), b = ra(), d = ra();
    EXPECT_EQ(compose(compose(a, b), d), compose(a, compose(b, d)));
    EXPECT_EQ(jacobian(compose(a, b)), jacobian(a).substitute(b.P(), b.Q()) * jacobian(b));
    EXPECT_TRUE(jacobian(a).is_constant());
  }
  for (int i = 0; i < 15; ++i) {
    const auto phi = tau_delta(rnd.line<K>(c), rnd.poly<K>(c, 2, 3));
    const auto g = PlaneAuto<K>::linear(rnd.affine<K>(c).L);
    const auto conj = compose(compose(g, phi), invert(g));
    EXPECT_TRUE(classify(conj).in_Aut1);
    EXPECT_EQ(classify(conj).in_SAut, classify(phi).in_SAut);
  }
}
