#include "support.hpp"

#include "planeaut/word_io.hpp"

using namespace planeaut;
using namespace planeaut::testing;

namespace {

std::size_t error_position(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no ParseError";
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST(Parse, Grammar) {
  const Rational::Context c;
  EXPECT_EQ(parse_poly2<Rational>("x + y", c), X<Rational>() + Y<Rational>());
  EXPECT_EQ(parse_poly2<Rational>("(x+1)^2", c).to_string(), "1 + 2*x + x^2");
  EXPECT_EQ(parse_poly2<Rational>("-x^2 - -y", c).to_string(), "y - x^2");
  EXPECT_EQ(parse_poly2<Rational>("x*y/2 + 3/4", c).to_string(), "3/4 + 1/2*x*y");
  EXPECT_EQ(parse_poly2<Rational>("2^3*x", c).to_string(), "8*x");
  EXPECT_EQ(parse_poly2<Rational>("  x  ", c), X<Rational>());
  EXPECT_EQ(parse_poly1<Rational>("1 + t^3", c).to_string("t"), "1 + t^3");
  EXPECT_EQ(parse_scalar<Rational>("-7/3", c), q(-7, 3));
}

TEST(Parse, FieldSpecific) {
  const auto f5 = Fp::make_context(5);
  EXPECT_EQ(parse_scalar<Fp>("7", f5), Fp(2, f5));
  EXPECT_EQ(parse_scalar<Fp>("1/2", f5), Fp(3, f5));
  EXPECT_THROW(parse_scalar<Fp>("1/5", f5), ParseError);
  const RatFunc<Rational>::Context cz;
  const auto z = RatFunc<Rational>::z(cz);
  EXPECT_EQ(parse_scalar<RatFunc<Rational>>("1/(1+z)", cz), RatFunc<Rational>(1L, cz) / (RatFunc<Rational>(1L, cz) + z));
  EXPECT_EQ(parse_poly2<RatFunc<Rational>>("z*x", cz), Poly2<RatFunc<Rational>>::constant(z) * X<RatFunc<Rational>>());
  EXPECT_THROW(parse_poly2<Rational>("z*x", {}), ParseError);
}

TEST(Parse, ErrorsCarryPositions) {
  const Rational::Context c;
  EXPECT_EQ(error_position([&] { parse_poly2<Rational>("x + ", c); }), 4u);
  EXPECT_EQ(error_position([&] { parse_poly2<Rational>("x + w", c); }), 4u);
  EXPECT_EQ(error_position([&] { parse_poly2<Rational>("(x + 1", c); }), 6u);
  EXPECT_EQ(error_position([&] { parse_poly2<Rational>("x ) ", c); }), 2u);
  EXPECT_THROW(parse_poly2<Rational>("1/x", c), ParseError);
  EXPECT_THROW(parse_poly2<Rational>("x/0", c), ParseError);
  EXPECT_THROW(parse_poly2<Rational>("x^99999", c), ParseError);
  EXPECT_THROW(parse_poly2<Rational>("", c), ParseError);
  // offsets refer to the full automorphism text
  EXPECT_EQ(error_position([&] { parse_plane_auto<Rational>("x, y + $", c); }), 7u);
  EXPECT_THROW(parse_plane_auto<Rational>("x, y, x", c), ParseError);
  EXPECT_THROW(parse_polymat<Rational>("1, 0 ; 0", c), ParseError);
  EXPECT_THROW(parse_mat2<Rational>("1, t ; 0, 1", c), ParseError);
  const std::string msg = [&] {
    try {
      parse_poly2<Rational>("x + ", c);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  }();
  EXPECT_NE(msg.find("at position 4"), std::string::npos);
}

TEST(Parse, Matrices) {
  const Rational::Context c;
  const auto m = parse_polymat<Rational>("1 + t, t^2 ; 0, 1", c);
  EXPECT_EQ(m.to_string(), "1 + t, t^2 ; 0, 1");
  EXPECT_EQ(parse_mat2<Rational>("1, 2 ; 3, 4", c).det(), q(-2));
}

template <class K>
class ParseRoundTrip : public ::testing::Test {};
TYPED_TEST_SUITE(ParseRoundTrip, Backends);

TYPED_TEST(ParseRoundTrip, PrintThenParse) {
  using K = TypeParam;
  Random rnd(41);
  for (int i = 0; i < 40; ++i) {
    const Poly2<K> f = rnd.poly2<K>(ctx<K>(), 5);
    EXPECT_EQ(parse_poly2<K>(f.to_string(), ctx<K>()), f) << f.to_string();
    const K s = rnd.any<K>(ctx<K>(), false);
    EXPECT_EQ(parse_scalar<K>(s.to_string(), ctx<K>()), s) << s.to_string();
  }
}

TYPED_TEST(ParseRoundTrip, WordFile) {
  using K = TypeParam;
  Random rnd(43);
  for (int i = 0; i < 25; ++i) {
    AmalgamWord<K> w = rnd.raw_word<K>(ctx<K>(), kHeavy<K> ? 3 : 5, kHeavy<K> ? 2 : 4);
    w.tail = rnd.elementary<K>(ctx<K>(), 3);
    const std::string text = write_word(w);
    EXPECT_EQ(read_word<K>(text, ctx<K>()), w) << text;
  }
}

TEST(WordIo, CommentsAndErrors) {
  const Rational::Context c;
  const std::string text =
      "# a comment\n"
      "word v1\n"
      "affine 0, 1, 1, 0 | 0, 0\n"
      "   elementary 1, 0, 1 | x^2   \n"
      "tail 1, 0, 1 | 0\n";
  const auto w = read_word<Rational>(text, c);
  EXPECT_EQ(w.factors.size(), 2u);
  EXPECT_EQ(w.recompose(), qa("y + x^2, x"));
  EXPECT_THROW(read_word<Rational>("affine 1, 0, 0, 1 | 0, 0\n", c), ParseError);
  EXPECT_THROW(read_word<Rational>("word v1\n", c), ParseError);
  EXPECT_THROW(read_word<Rational>("word v1\naffine 1, 1, 1, 1 | 0, 0\ntail 1, 0, 1 | 0\n", c), ParseError);
  EXPECT_THROW(read_word<Rational>("word v1\nelementary 0, 0, 1 | 0\ntail 1, 0, 1 | 0\n", c), ParseError);
  EXPECT_THROW(read_word<Rational>("word v1\nbogus 1 | 2\ntail 1, 0, 1 | 0\n", c), ParseError);
  const std::size_t pos = error_position([&] { read_word<Rational>("word v1\nelementary 1, 0, 1 | x +\ntail 1, 0, 1 | 0\n", c); });
  EXPECT_EQ(pos, 32u);
}
