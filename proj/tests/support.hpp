#pragma once

#include <gtest/gtest.h>

#include <type_traits>

#include "planeaut/parse.hpp"
#include "planeaut/random.hpp"

namespace planeaut::testing {

// Contexts for the typed suites: Q, F_5 and Q(z).
template <class K>
typename K::Context ctx();

template <>
inline Rational::Context ctx<Rational>() {
  return {};
}
template <>
inline Fp::Context ctx<Fp>() {
  return Fp::make_context(5);
}
template <>
inline RatFunc<Rational>::Context ctx<RatFunc<Rational>>() {
  return {};
}

using Backends = ::testing::Types<Rational, Fp, RatFunc<Rational>>;

// Q(z) coefficients grow fast under composition; typed suites use smaller
// instances there.
template <class K>
inline constexpr bool kHeavy = std::is_same_v<K, RatFunc<Rational>>;

template <Field K>
K k(long n) {
  return K(n, ctx<K>());
}

template <Field K>
Poly2<K> X() {
  return Poly2<K>::x(ctx<K>());
}
template <Field K>
Poly2<K> Y() {
  return Poly2<K>::y(ctx<K>());
}
template <Field K>
Poly1<K> t_pow(unsigned e, long c = 1) {
  return Poly1<K>::monomial(k<K>(c), e);
}

inline Rational q(long n, long d = 1) { return Rational(n, d); }

inline PlaneAuto<Rational> qa(const char* s) { return parse_plane_auto<Rational>(s, {}); }

}  // namespace planeaut::testing
