#pragma once

#include <random>
#include <vector>

#include "planeaut/amalgam.hpp"
#include "planeaut/matrix_rep.hpp"

namespace planeaut {

/// Seeded source of random exact objects. Rationals have numerator and
/// denominator bounded by `height`; rational-function scalars are
/// polynomials in z of degree <= 1 with such coefficients.
class Random {
 public:
  explicit Random(std::uint64_t seed, long height = 8) : rng_(seed), height_(height) {}

  /// Rationals drawn with denominator 1.
  void integral(bool on) { integral_ = on; }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  std::mt19937_64& engine() { return rng_; }

  Rational scalar(const Rational::Context&, bool nonzero = false) {
    for (;;) {
      const Rational v(integer(-height_, height_), integral_ ? 1 : integer(1, height_));
      if (!nonzero || !v.is_zero()) return v;
    }
  }
  Fp scalar(const Fp::Context& ctx, bool nonzero = false) {
    for (;;) {
      const Fp v(integer(0, static_cast<long>(ctx.p) - 1), ctx);
      if (!nonzero || !v.is_zero()) return v;
    }
  }
  template <Field B>
  RatFunc<B> ratfunc(const typename B::Context& ctx, bool nonzero = false) {
    for (;;) {
      Poly1<B> p(ctx);
      for (unsigned i = 0; i <= 1; ++i) p.add_term(i, scalar(ctx));
      RatFunc<B> v(p);
      if (!nonzero || !v.is_zero()) return v;
    }
  }

  template <Field K>
  K any(const typename K::Context& ctx, bool nonzero = false) {
    if constexpr (requires { typename K::Base; })
      return ratfunc<typename K::Base>(ctx, nonzero);
    else
      return scalar(ctx, nonzero);
  }

  /// Polynomial with terms in degrees [lo, hi], each present with
  /// probability one half; the degree-hi term is always present.
  template <Field K>
  Poly1<K> poly(const typename K::Context& ctx, unsigned lo, unsigned hi) {
    Poly1<K> f(ctx);
    for (unsigned i = lo; i < hi; ++i)
      if (coin()) f.add_term(i, any<K>(ctx));
    f.add_term(hi, any<K>(ctx, true));
    return f;
  }

  template <Field K>
  Poly2<K> poly2(const typename K::Context& ctx, unsigned max_total) {
    Poly2<K> f(ctx);
    for (unsigned d = 0; d <= max_total; ++d)
      for (unsigned i = 0; i <= d; ++i)
        if (integer(0, 3) == 0) f += Poly2<K>::monomial(any<K>(ctx), i, d - i);
    return f;
  }

  template <Field K>
  ProjPoint<K> line(const typename K::Context& ctx) {
    if (integer(0, 5) == 0) return ProjPoint<K>::infinity(ctx);
    return ProjPoint<K>::affine(any<K>(ctx));
  }

  template <Field K>
  AffineAuto<K> affine(const typename K::Context& ctx) {
    for (;;) {
      const Mat2<K> L{any<K>(ctx), any<K>(ctx), any<K>(ctx), any<K>(ctx)};
      if (!L.det().is_zero()) return {L, any<K>(ctx), any<K>(ctx)};
    }
  }

  template <Field K>
  ElemAuto<K> elementary(const typename K::Context& ctx, unsigned max_degree = 3) {
    return {any<K>(ctx, true), any<K>(ctx), any<K>(ctx, true),
            poly<K>(ctx, 0, static_cast<unsigned>(integer(0, max_degree)))};
  }

  template <Field K>
  Factor<K> factor(const typename K::Context& ctx, unsigned max_degree = 3) {
    if (coin()) return affine<K>(ctx);
    return elementary<K>(ctx, max_degree);
  }

  /// Raw word of 1..max_factors random affine/elementary factors.
  template <Field K>
  AmalgamWord<K> raw_word(const typename K::Context& ctx, unsigned max_factors = 6, unsigned max_degree = 3) {
    AmalgamWord<K> w = AmalgamWord<K>::identity(ctx);
    const long n = integer(1, max_factors);
    for (long i = 0; i < n; ++i) w.factors.push_back(factor<K>(ctx, max_degree));
    return w;
  }

  /// Free word of 1..max_pairs tau_delta factors, consecutive lines distinct.
  template <Field K>
  FreeWord<K> free_word(const typename K::Context& ctx, unsigned max_pairs = 4, unsigned max_degree = 6) {
    FreeWord<K> w;
    const long n = integer(1, max_pairs);
    while (static_cast<long>(w.size()) < n) {
      const ProjPoint<K> d = line<K>(ctx);
      if (!w.empty() && w.back().delta == d) continue;
      w.push_back({d, poly<K>(ctx, 2, static_cast<unsigned>(integer(2, max_degree)))});
    }
    return w;
  }

  template <Field K>
  std::vector<EFactor<K>> efactors(const typename K::Context& ctx, unsigned max_factors = 5, unsigned max_k = 3) {
    std::vector<EFactor<K>> out;
    const long n = integer(1, max_factors);
    for (long i = 0; i < n; ++i)
      out.push_back({line<K>(ctx), any<K>(ctx, true), static_cast<unsigned>(integer(1, max_k))});
    return out;
  }

 private:
  std::mt19937_64 rng_;
  long height_;
  bool integral_ = false;
};

}  // namespace planeaut
