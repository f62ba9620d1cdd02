#include "support.hpp"

using namespace planeaut;
using namespace planeaut::testing;

namespace {

PolyMat2<Rational> qm(const char* s) { return parse_polymat<Rational>(s, {}); }
const ProjPoint<Rational> kD01 = ProjPoint<Rational>::make(q(0), q(1));
const ProjPoint<Rational> kInf = ProjPoint<Rational>::infinity({});

}  // namespace

TEST(MatrixFactor, Examples) {
  const auto single = matrix_factor(PolyMat2<Rational>::unipotent(t_pow<Rational>(1), nil_endo(kD01)));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0], (EFactor<Rational>{kD01, q(1), 1}));

  std::vector<long> trace;
  const auto two = matrix_factor(qm("1, t ; t, 1 + t^2"), &trace);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], (EFactor<Rational>{kD01, q(1), 1}));
  EXPECT_EQ(two[1], (EFactor<Rational>{kInf, q(1), 1}));
  EXPECT_EQ(two[0].to_matrix(), qm("1, 0 ; t, 1"));
  EXPECT_EQ(two[1].to_matrix(), qm("1, t ; 0, 1"));
  EXPECT_EQ(trace, (std::vector<long>{2, 1, 0}));

  EXPECT_TRUE(matrix_factor(PolyMat2<Rational>::identity({})).empty());
  EXPECT_THROW(matrix_factor(qm("1 + t, 0 ; 0, 1")), NotInGL1);
  EXPECT_THROW(matrix_factor(qm("2, 0 ; 0, 1/2")), NotInGL1);
}

TEST(MatrixFreeNf, Examples) {
  const auto d = ProjPoint<Rational>::make(q(3), q(1));
  const auto e = nil_endo(d);
  const auto G = PolyMat2<Rational>::unipotent(t_pow<Rational>(1), e) * PolyMat2<Rational>::unipotent(t_pow<Rational>(2), e);
  const auto w = matrix_free_nf(G);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0], (MatPair<Rational>{d, t_pow<Rational>(1) + t_pow<Rational>(2)}));

  const auto cancel =
      PolyMat2<Rational>::unipotent(t_pow<Rational>(1), e) * PolyMat2<Rational>::unipotent(t_pow<Rational>(1, -1), e);
  EXPECT_TRUE(matrix_free_nf(cancel).empty());

  // four alternating factors stay as they are
  const MatFreeWord<Rational> fib{{kD01, t_pow<Rational>(1)}, {kInf, t_pow<Rational>(1)}, {kD01, t_pow<Rational>(1)},
                                  {kInf, t_pow<Rational>(1)}};
  EXPECT_EQ(matrix_free_nf(product(fib, {})), fib);
}

TEST(Psi, Examples) {
  EXPECT_EQ(to_matrix(qa("x, y + x^2")), qm("1, 0 ; t, 1"));
  EXPECT_EQ(to_matrix(compose(tau_delta(kD01, t_pow<Rational>(2)), tau_delta(kInf, t_pow<Rational>(2)))),
            qm("1, t ; t, 1 + t^2"));
  EXPECT_TRUE(to_matrix(PlaneAuto<Rational>::identity({})).is_identity());

  EXPECT_EQ(from_matrix(qm("1, 0 ; t, 1")), qa("x, y + x^2"));
  EXPECT_TRUE(from_matrix(PolyMat2<Rational>::identity({})).is_identity());
  const auto phi = from_matrix(qm("1, t ; t, 1 + t^2"));
  EXPECT_EQ(phi, compose(tau_delta(kD01, t_pow<Rational>(2)), tau_delta(kInf, t_pow<Rational>(2))));
  EXPECT_EQ(phi.degree(), 4);
  EXPECT_THROW(from_matrix(qm("1, t ; 0, 1 + t")), NotInGL1);
}

template <class K>
class PsiLaws : public ::testing::Test {};
TYPED_TEST_SUITE(PsiLaws, Backends);

TYPED_TEST(PsiLaws, HomomorphismBijectionDegree) {
  using K = TypeParam;
  Random rnd(61);
  const auto c = ctx<K>();
  const int trials = kHeavy<K> ? 8 : 50;
  for (int i = 0; i < trials; ++i) {
    // split one word so the composite stays small
    const unsigned pairs = std::is_same_v<K, Fp> ? 4 : (kHeavy<K> ? 2 : 3);
    const FreeWord<K> w = rnd.free_word<K>(c, pairs, kHeavy<K> ? 3 : 4);
    const auto cut = static_cast<long>(rnd.integer(0, static_cast<long>(w.size())));
    const FreeWord<K> a(w.begin(), w.begin() + cut), b(w.begin() + cut, w.end());
    const PlaneAuto<K> pa = recompose(a, c), pb = recompose(b, c);
    const PolyMat2<K> ma = to_matrix(pa), mb = to_matrix(pb);
    EXPECT_EQ(to_matrix(compose(pa, pb)), ma * mb);
    EXPECT_EQ(from_matrix(ma), pa);
    long sum = 0;
    for (const auto& p : a) sum += p.f.degree();
    EXPECT_EQ(ma.degree(), sum - static_cast<long>(a.size()));

    const auto fs = rnd.efactors<K>(c, kHeavy<K> ? 3 : 4, kHeavy<K> ? 1 : 2);
    const PolyMat2<K> G = product(fs, c);
    std::vector<long> trace;
    const auto back = matrix_factor(G, &trace);
    EXPECT_EQ(product(back, c), G);
    for (std::size_t j = 1; j < trace.size(); ++j) EXPECT_LT(trace[j], trace[j - 1]);
    EXPECT_LE(back.size(), static_cast<std::size_t>(std::max(0L, trace.front())));
    EXPECT_EQ(to_matrix(from_matrix(G)), G);
  }
}

TEST(GlS, Membership) {
  auto is_id = [](const Mat2<Rational>& m) { return m == Mat2<Rational>::identity({}); };
  auto upper = [](const Mat2<Rational>& m) { return m.is_upper_triangular(); };
  EXPECT_TRUE(gls_membership<Rational>(qm("1, t ; t, 1 + t^2"), is_id));
  EXPECT_TRUE(gls_membership<Rational>(qm("2, t ; 0, 1/2"), upper));
  EXPECT_FALSE(gls_membership<Rational>(qm("2, t ; 0, 1/2"), is_id));
  EXPECT_THROW(gls_membership<Rational>(qm("1 + t, 0 ; 0, 1"), is_id), DomainError);
}

TEST(PingPong, Examples) {
  const EFactor<Rational> H{kInf, q(1), 1};
  const PolyVec<Rational> v{Poly1<Rational>::constant(q(1)), Poly1<Rational>::constant(q(1))};
  EXPECT_EQ(apply(H.to_matrix(), v), (PolyVec<Rational>{parse_poly1<Rational>("1 + t", {}), Poly1<Rational>::constant(q(1))}));
  const Report r = pingpong_check<Rational>({H}, {v});
  ASSERT_EQ(r.checks().size(), 1u);
  EXPECT_TRUE(r.all_pass());

  // same line: nothing is asserted
  const PolyVec<Rational> on{parse_poly1<Rational>("t", {}), Poly1<Rational>::constant(q(1))};
  EXPECT_TRUE(pingpong_check<Rational>({H}, {on}).checks().empty());

  const MatFreeWord<Rational> w{{kD01, t_pow<Rational>(1)}, {kInf, t_pow<Rational>(2)}, {kD01, t_pow<Rational>(1, 3)}};
  const Report f = pingpong_check<Rational>({}, {v}, {w});
  ASSERT_EQ(f.checks().size(), 1u);
  EXPECT_TRUE(f.all_pass());

  const PolyVec<Rational> zero{Poly1<Rational>(Rational::Context{}), Poly1<Rational>(Rational::Context{})};
  EXPECT_THROW(pingpong_check<Rational>({H}, {zero}), DomainError);
}

TEST(PingPong, RandomInclusions) {
  Random rnd(71);
  const auto c = Fp::make_context(5);
  for (int i = 0; i < 100; ++i) {
    const EFactor<Fp> H{rnd.line<Fp>(c), rnd.any<Fp>(c, true), static_cast<unsigned>(rnd.integer(1, 3))};
    const PolyVec<Fp> v{rnd.poly<Fp>(c, 0, 2), rnd.poly<Fp>(c, 0, 2)};
    EXPECT_TRUE(pingpong_check<Fp>({H}, {v}).all_pass());
  }
}
