#pragma once

#include <string>

#include "planeaut/linalg2.hpp"
#include "planeaut/poly2.hpp"

namespace planeaut {

/// Polynomial map (x, y) -> (P(x, y), Q(x, y)).
///
/// Composition convention used everywhere: compose(f, g) = f o g, the map
/// p -> f(g(p)), so the right factor acts first.
template <Field K>
class PlaneAuto {
 public:
  using Context = typename K::Context;

  PlaneAuto() = default;
  PlaneAuto(Poly2<K> p, Poly2<K> q) : p_(std::move(p)), q_(std::move(q)) {}

  static PlaneAuto identity(const Context& ctx) { return {Poly2<K>::x(ctx), Poly2<K>::y(ctx)}; }
  /// (x, y) -> L (x, y)^T + (u, v).
  static PlaneAuto affine(const Mat2<K>& L, const K& u, const K& v) {
    const auto ctx = L.context();
    const Poly2<K> x = Poly2<K>::x(ctx), y = Poly2<K>::y(ctx);
    return {L.a * x + L.b * y + Poly2<K>::constant(u), L.c * x + L.d * y + Poly2<K>::constant(v)};
  }
  static PlaneAuto linear(const Mat2<K>& L) {
    const K zero(0L, L.context());
    return affine(L, zero, zero);
  }

  const Poly2<K>& P() const { return p_; }
  const Poly2<K>& Q() const { return q_; }
  Context context() const { return p_.context(); }

  /// max of the component total degrees.
  long degree() const { return std::max(p_.total_degree(), q_.total_degree()); }

  /// Image of the origin.
  std::array<K, 2> at_origin() const { return {p_.constant_term(), q_.constant_term()}; }
  /// Differential at the origin (the linear part).
  Mat2<K> linear_part() const { return {p_.coeff(1, 0), p_.coeff(0, 1), q_.coeff(1, 0), q_.coeff(0, 1)}; }

  bool is_identity() const { return *this == identity(context()); }

  /// "P, Q" in canonical polynomial printing.
  std::string to_string() const { return p_.to_string() + ", " + q_.to_string(); }

  friend bool operator==(const PlaneAuto&, const PlaneAuto&) = default;

 private:
  Poly2<K> p_, q_;
};

template <Field K>
PlaneAuto<K> compose(const PlaneAuto<K>& f, const PlaneAuto<K>& g) {
  return {f.P().substitute(g.P(), g.Q()), f.Q().substitute(g.P(), g.Q())};
}

template <Field K>
Poly2<K> poly2_substitute(const Poly2<K>& p, const Poly2<K>& u, const Poly2<K>& v) {
  return p.substitute(u, v);
}

template <Field K>
Poly2<K> jacobian(const PlaneAuto<K>& f) {
  return f.P().dx() * f.Q().dy() - f.P().dy() * f.Q().dx();
}

/// (x, y) -> (z1 x + t0, z2 y + f(x)) with z1, z2 units.
template <Field K>
struct ElemAuto {
  K z1, t0, z2;
  Poly1<K> f;

  static ElemAuto identity(const typename K::Context& ctx) {
    return {K(1L, ctx), K(0L, ctx), K(1L, ctx), Poly1<K>(ctx)};
  }
  typename K::Context context() const { return z1.context(); }

  /// Lies in B = Aff n Elem.
  bool in_borel() const { return f.degree() <= 1; }
  bool is_identity() const { return z1.is_one() && t0.is_zero() && z2.is_one() && f.is_zero(); }

  PlaneAuto<K> to_plane() const {
    const auto ctx = context();
    return {z1 * Poly2<K>::x(ctx) + Poly2<K>::constant(t0), z2 * Poly2<K>::y(ctx) + Poly2<K>::from_univariate(f)};
  }
  /// this o inner, without a bivariate substitution.
  PlaneAuto<K> after(const PlaneAuto<K>& inner) const {
    return {z1 * inner.P() + Poly2<K>::constant(t0), z2 * inner.Q() + compose_univariate(f, inner.P())};
  }

  friend bool operator==(const ElemAuto&, const ElemAuto&) = default;
};

/// (x, y) -> L (x, y)^T + (u, v), det L != 0.
template <Field K>
struct AffineAuto {
  Mat2<K> L;
  K u, v;

  static AffineAuto identity(const typename K::Context& ctx) { return {Mat2<K>::identity(ctx), K(0L, ctx), K(0L, ctx)}; }
  typename K::Context context() const { return L.context(); }

  bool in_borel() const { return L.b.is_zero(); }
  bool is_identity() const { return L == Mat2<K>::identity(context()) && u.is_zero() && v.is_zero(); }
  PlaneAuto<K> to_plane() const { return PlaneAuto<K>::affine(L, u, v); }
  PlaneAuto<K> after(const PlaneAuto<K>& inner) const {
    return {L.a * inner.P() + L.b * inner.Q() + Poly2<K>::constant(u),
            L.c * inner.P() + L.d * inner.Q() + Poly2<K>::constant(v)};
  }

  friend bool operator==(const AffineAuto&, const AffineAuto&) = default;
};

template <Field K>
ElemAuto<K> compose(const ElemAuto<K>& e, const ElemAuto<K>& g) {
  // e(g(x, y)) = (e.z1 (g.z1 x + g.t0) + e.t0, e.z2 (g.z2 y + g.f(x)) + e.f(g.z1 x + g.t0))
  const Poly1<K> inner = Poly1<K>::monomial(g.z1, 1) + Poly1<K>::constant(g.t0);
  return {e.z1 * g.z1, e.z1 * g.t0 + e.t0, e.z2 * g.z2, e.z2 * g.f + e.f.compose(inner)};
}

template <Field K>
ElemAuto<K> inverse(const ElemAuto<K>& e) {
  // x' = (x - t0)/z1, y' = (y - f(x'))/z2
  const K iz1 = K(1L, e.context()) / e.z1, iz2 = K(1L, e.context()) / e.z2;
  const Poly1<K> xprime = Poly1<K>::monomial(iz1, 1) + Poly1<K>::constant(-(iz1 * e.t0));
  return {iz1, -(iz1 * e.t0), iz2, -(iz2 * e.f.compose(xprime))};
}

template <Field K>
AffineAuto<K> compose(const AffineAuto<K>& f, const AffineAuto<K>& g) {
  const auto t = f.L.apply(g.u, g.v);
  return {f.L * g.L, t[0] + f.u, t[1] + f.v};
}

template <Field K>
AffineAuto<K> inverse(const AffineAuto<K>& f) {
  const Mat2<K> Li = f.L.inverse();
  const auto t = Li.apply(f.u, f.v);
  return {Li, -t[0], -t[1]};
}

/// Borel elements viewed in either presentation.
template <Field K>
AffineAuto<K> borel_as_affine(const ElemAuto<K>& e) {
  if (!e.in_borel()) throw DomainError("elementary map is not affine");
  return {Mat2<K>{e.z1, K(0L, e.context()), e.f.coeff(1), e.z2}, e.t0, e.f.coeff(0)};
}
template <Field K>
ElemAuto<K> borel_as_elementary(const AffineAuto<K>& a) {
  if (!a.in_borel()) throw DomainError("affine map is not elementary");
  Poly1<K> f(a.context());
  f.add_term(0, a.v);
  f.add_term(1, a.L.c);
  return {a.L.a, a.u, a.L.d, f};
}

/// Recognizes (z1 x + t0, z2 y + f(x)); returns false otherwise.
template <Field K>
bool as_elementary(const PlaneAuto<K>& phi, ElemAuto<K>& out) {
  const auto ctx = phi.context();
  const Poly2<K>& P = phi.P();
  const Poly2<K>& Q = phi.Q();
  if (!P.only_in_x() || P.total_degree() != 1) return false;
  const K z1 = P.coeff(1, 0), z2 = Q.coeff(0, 1);
  if (z2.is_zero()) return false;
  const Poly2<K> rest = Q - z2 * Poly2<K>::y(ctx);
  if (!rest.only_in_x()) return false;
  out = {z1, P.coeff(0, 0), z2, rest.as_univariate_in_x()};
  return true;
}

/// Recognizes invertible affine maps.
template <Field K>
bool as_affine(const PlaneAuto<K>& phi, AffineAuto<K>& out) {
  if (phi.degree() > 1) return false;
  const Mat2<K> L = phi.linear_part();
  if (L.det().is_zero()) return false;
  const auto o = phi.at_origin();
  out = {L, o[0], o[1]};
  return true;
}

struct ClassifyFlags {
  bool is_affine = false;
  bool is_elementary = false;
  bool in_B = false;
  bool in_Aut0 = false;
  bool in_Aut1 = false;
  bool in_SAut = false;
  friend bool operator==(const ClassifyFlags&, const ClassifyFlags&) = default;
};

/// Fixes the origin with identity differential there.
template <Field K>
bool in_aut1(const PlaneAuto<K>& phi) {
  const auto o = phi.at_origin();
  return o[0].is_zero() && o[1].is_zero() && phi.linear_part() == Mat2<K>::identity(phi.context());
}

template <Field K>
ClassifyFlags classify(const PlaneAuto<K>& phi) {
  ClassifyFlags f;
  AffineAuto<K> a;
  ElemAuto<K> e;
  f.is_affine = as_affine(phi, a);
  f.is_elementary = as_elementary(phi, e);
  f.in_B = f.is_affine && f.is_elementary;
  const auto o = phi.at_origin();
  f.in_Aut0 = o[0].is_zero() && o[1].is_zero();
  f.in_Aut1 = f.in_Aut0 && phi.linear_part() == Mat2<K>::identity(phi.context());
  f.in_SAut = jacobian(phi) == Poly2<K>::constant(K(1L, phi.context()));
  return f;
}

inline std::string to_string(const ClassifyFlags& f) {
  std::string s;
  auto add = [&](const char* name, bool v) {
    if (!s.empty()) s += " ";
    s += std::string(name) + "=" + (v ? "true" : "false");
  };
  add("is_affine", f.is_affine);
  add("is_elementary", f.is_elementary);
  add("in_B", f.in_B);
  add("in_Aut0", f.in_Aut0);
  add("in_Aut1", f.in_Aut1);
  add("in_SAut", f.in_SAut);
  return s;
}

/// Shear along delta: (x + a f(bx - ay), y + b f(bx - ay)) with (a, b) the
/// canonical representative. Requires f in t^2 K[t], f != 0.
template <Field K>
PlaneAuto<K> tau_delta(const ProjPoint<K>& delta, const Poly1<K>& f) {
  if (f.is_zero()) throw DomainError("tau_delta needs a nonzero polynomial");
  if (f.valuation() < 2) throw DomainError("tau_delta needs f in t^2 K[t]");
  const auto ctx = delta.a().context();
  const Poly2<K> x = Poly2<K>::x(ctx), y = Poly2<K>::y(ctx);
  const Poly2<K> fl = compose_univariate(f, delta.b() * x - delta.a() * y);
  return {x + delta.a() * fl, y + delta.b() * fl};
}

/// (x, y) -> (z x, z^-1 y + a x^(n-1)), the literal parameterization.
/// tau_delta(f) o inner.
template <Field K>
PlaneAuto<K> shear_after(const ProjPoint<K>& delta, const Poly1<K>& f, const PlaneAuto<K>& inner) {
  const Poly2<K> fl = compose_univariate(f, delta.b() * inner.P() - delta.a() * inner.Q());
  return {inner.P() + delta.a() * fl, inner.Q() + delta.b() * fl};
}

template <Field K>
ElemAuto<K> g_n_element(int n, const K& z, const K& a) {
  if (n < 2) throw DomainError("g_n_element needs n >= 2");
  if (z.is_zero()) throw DomainError("g_n_element needs z != 0");
  const auto ctx = z.context();
  return {z, K(0L, ctx), K(1L, ctx) / z, Poly1<K>::monomial(a, static_cast<unsigned>(n - 1))};
}

/// Product in G_n(K): (z, a).(z', a') = (z z', z'^n a + a').
template <Field K>
std::pair<K, K> g_n_multiply(int n, const std::pair<K, K>& g, const std::pair<K, K>& h) {
  return {g.first * h.first, power(h.first, static_cast<unsigned long>(n)) * g.second + h.second};
}

/// Embedding of G_n(K) that turns its product into composition:
/// g_n_embed(g) o g_n_embed(h) = g_n_embed(g.h). Equals
/// g_n_element(n, z, a / z).
template <Field K>
ElemAuto<K> g_n_embed(int n, const K& z, const K& a) {
  if (z.is_zero()) throw DomainError("g_n_embed needs z != 0");
  return g_n_element(n, z, a / z);
}

}  // namespace planeaut
