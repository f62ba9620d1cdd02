#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "planeaut/plane_auto.hpp"

namespace planeaut::generators {

template <Field K>
K half(const typename K::Context& ctx) {
  const K two(2L, ctx);
  if (two.is_zero()) throw DomainError("1/2 does not exist in characteristic 2");
  return K(1L, ctx) / two;
}

/// S = (x/2, y/2).
template <Field K>
PlaneAuto<K> S(const typename K::Context& ctx) {
  const K h = half<K>(ctx);
  return PlaneAuto<K>::linear(Mat2<K>::diag(h, h));
}

/// S' = linear map with matrix rows ((1, 1), (1, 0)), i.e. (x + y, x).
template <Field K>
PlaneAuto<K> S_prime(const typename K::Context& ctx) {
  const K one(1L, ctx), zero(0L, ctx);
  return PlaneAuto<K>::linear(Mat2<K>{one, one, one, zero});
}

/// T = (x, y + x^2).
template <Field K>
PlaneAuto<K> T(const typename K::Context& ctx) {
  return {Poly2<K>::x(ctx), Poly2<K>::y(ctx) + Poly2<K>::monomial(K(1L, ctx), 2, 0)};
}

/// h = (2x, y/2).
template <Field K>
PlaneAuto<K> h(const typename K::Context& ctx) {
  return PlaneAuto<K>::linear(Mat2<K>::diag(K(2L, ctx), half<K>(ctx)));
}

/// u_n = (x, y + x^n), n >= 1.
template <Field K>
PlaneAuto<K> u(int n, const typename K::Context& ctx) {
  if (n < 1) throw DomainError("u_n needs n >= 1");
  return {Poly2<K>::x(ctx), Poly2<K>::y(ctx) + Poly2<K>::monomial(K(1L, ctx), static_cast<unsigned>(n), 0)};
}

/// gamma_r = (x + r y, y).
template <Field K>
PlaneAuto<K> gamma(const K& r) {
  const K one(1L, r.context()), zero(0L, r.context());
  return PlaneAuto<K>::linear(Mat2<K>{one, r, zero, one});
}

/// phi_{r,n} = (x, y + r x^n).
template <Field K>
PlaneAuto<K> phi(const K& r, int n) {
  if (n < 1) throw DomainError("phi_{r,n} needs n >= 1");
  const auto ctx = r.context();
  return {Poly2<K>::x(ctx), Poly2<K>::y(ctx) + Poly2<K>::monomial(r, static_cast<unsigned>(n), 0)};
}

/// Dispatch by name: S, S', T, h, u (needs n), gamma (needs r), phi (needs r, n).
template <Field K>
PlaneAuto<K> named(std::string_view name, const typename K::Context& ctx, int n = 0,
                   const std::optional<K>& r = std::nullopt) {
  auto need_r = [&]() -> const K& {
    if (!r) throw DomainError("generator '" + std::string(name) + "' needs a parameter r");
    return *r;
  };
  if (name == "S") return S<K>(ctx);
  if (name == "S'" || name == "Sp" || name == "S_prime") return S_prime<K>(ctx);
  if (name == "T") return T<K>(ctx);
  if (name == "h") return h<K>(ctx);
  if (name == "u") return u<K>(n, ctx);
  if (name == "gamma") return gamma<K>(need_r());
  if (name == "phi") return phi<K>(need_r(), n);
  throw DomainError("unknown generator '" + std::string(name) + "'");
}

}  // namespace planeaut::generators
