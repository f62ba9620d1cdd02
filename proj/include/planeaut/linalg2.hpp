#pragma once

#include <array>
#include <string>

#include "planeaut/poly1.hpp"

namespace planeaut {

/// 2x2 matrix over K, rows ((a, b), (c, d)); acts on column vectors.
template <Field K>
struct Mat2 {
  K a, b, c, d;

  static Mat2 identity(const typename K::Context& ctx) { return {K(1L, ctx), K(0L, ctx), K(0L, ctx), K(1L, ctx)}; }
  static Mat2 zero(const typename K::Context& ctx) { return {K(0L, ctx), K(0L, ctx), K(0L, ctx), K(0L, ctx)}; }
  static Mat2 diag(const K& p, const K& q) {
    const K z(0L, p.context());
    return {p, z, z, q};
  }

  typename K::Context context() const { return a.context(); }
  K det() const { return a * d - b * c; }
  K trace() const { return a + d; }
  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
  /// Rank over K (0, 1 or 2).
  int rank() const { return !det().is_zero() ? 2 : (is_zero() ? 0 : 1); }
  bool is_lower_triangular() const { return b.is_zero(); }
  bool is_upper_triangular() const { return c.is_zero(); }

  Mat2 inverse() const {
    const K dt = det();
    if (dt.is_zero()) throw DomainError("singular 2x2 matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
  }

  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  friend Mat2 operator+(const Mat2& m, const Mat2& n) { return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d}; }
  friend Mat2 operator-(const Mat2& m, const Mat2& n) { return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d}; }
  friend Mat2 operator*(const K& s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
  std::array<K, 2> apply(const K& x, const K& y) const { return {a * x + b * y, c * x + d * y}; }

  std::string to_string() const {
    return a.to_string() + ", " + b.to_string() + " ; " + c.to_string() + ", " + d.to_string();
  }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// <A|B> = det(A+B) - det A - det B, the polarization of the determinant.
template <Field K>
K bilinear_bracket(const Mat2<K>& A, const Mat2<K>& B) {
  return (A + B).det() - A.det() - B.det();
}

/// Point of P^1 in canonical form: (a, 1) or (1, 0).
template <Field K>
class ProjPoint {
 public:
  ProjPoint() = default;

  static ProjPoint make(const K& a, const K& b) {
    if (b.is_zero()) {
      if (a.is_zero()) throw DomainError("zero vector has no projective class");
      return ProjPoint(K(1L, a.context()), K(0L, a.context()));
    }
    return ProjPoint(a / b, K(1L, b.context()));
  }
  static ProjPoint infinity(const typename K::Context& ctx) { return ProjPoint(K(1L, ctx), K(0L, ctx)); }
  static ProjPoint affine(const K& a) { return ProjPoint(a, K(1L, a.context())); }

  const K& a() const { return a_; }
  const K& b() const { return b_; }
  bool is_infinity() const { return b_.is_zero(); }

  /// Whether the nonzero vector (x, y) lies on this line.
  bool contains(const K& x, const K& y) const { return (b_ * x - a_ * y).is_zero(); }

  std::string to_string() const { return "[" + a_.to_string() + ", " + b_.to_string() + "]"; }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  ProjPoint(K a, K b) : a_(std::move(a)), b_(std::move(b)) {}
  K a_, b_;
};

template <Field K>
ProjPoint<K> canonical_proj_point(const K& a, const K& b) {
  return ProjPoint<K>::make(a, b);
}

/// Canonical square-zero endomorphism with image delta.
///
/// For delta = (a, 1) this is v.w^T with v = (a, 1), w = (1, -a), i.e.
/// rows ((a, -a^2), (1, -a)). For the point at infinity (1, 0) the sign is
/// fixed to rows ((0, 1), (0, 0)). Any nonzero scale gives the same group
/// E_delta; this one is what matrix_factor reports its constants against.
template <Field K>
Mat2<K> nil_endo(const ProjPoint<K>& delta) {
  const auto ctx = delta.a().context();
  if (delta.is_infinity()) return {K(0L, ctx), K(1L, ctx), K(0L, ctx), K(0L, ctx)};
  const K& a = delta.a();
  return {a, -(a * a), K(1L, ctx), -a};
}

/// Line spanned by the columns of a rank-one matrix.
template <Field K>
ProjPoint<K> image_line(const Mat2<K>& m) {
  if (m.rank() != 1) throw InternalRankError("image line requested for a matrix of rank " + std::to_string(m.rank()));
  if (!m.a.is_zero() || !m.c.is_zero()) return ProjPoint<K>::make(m.a, m.c);
  return ProjPoint<K>::make(m.b, m.d);
}

/// Whether every column of m lies on delta.
template <Field K>
bool image_within(const Mat2<K>& m, const ProjPoint<K>& delta) {
  return delta.contains(m.a, m.c) && delta.contains(m.b, m.d);
}

/// 2x2 matrix with entries in K[t].
template <Field K>
struct PolyMat2 {
  Poly1<K> a, b, c, d;

  static PolyMat2 identity(const typename K::Context& ctx) {
    const Poly1<K> one = Poly1<K>::constant(K(1L, ctx)), zero(ctx);
    return {one, zero, zero, one};
  }
  static PolyMat2 from_scalar(const Mat2<K>& m) {
    return {Poly1<K>::constant(m.a), Poly1<K>::constant(m.b), Poly1<K>::constant(m.c), Poly1<K>::constant(m.d)};
  }
  /// id + h(t) * e.
  static PolyMat2 unipotent(const Poly1<K>& h, const Mat2<K>& e) {
    PolyMat2 r = identity(h.context());
    r.a += e.a * h;
    r.b += e.b * h;
    r.c += e.c * h;
    r.d += e.d * h;
    return r;
  }

  typename K::Context context() const { return a.context(); }
  Poly1<K> det() const { return a * d - b * c; }
  long degree() const { return std::max({a.degree(), b.degree(), c.degree(), d.degree()}); }
  Mat2<K> coeff(unsigned k) const { return {a.coeff(k), b.coeff(k), c.coeff(k), d.coeff(k)}; }
  Mat2<K> at(const K& t) const { return {a(t), b(t), c(t), d(t)}; }
  Mat2<K> at_zero() const { return coeff(0); }
  bool is_identity() const { return *this == identity(context()); }

  std::array<Poly1<K>, 2> apply(const Poly1<K>& x, const Poly1<K>& y) const { return {a * x + b * y, c * x + d * y}; }

  friend PolyMat2 operator*(const PolyMat2& m, const PolyMat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }

  /// Matrix literal "a, b ; c, d" in the variable t.
  std::string to_string() const {
    return a.to_string("t") + ", " + b.to_string("t") + " ; " + c.to_string("t") + ", " + d.to_string("t");
  }

  friend bool operator==(const PolyMat2&, const PolyMat2&) = default;
};

template <Field K>
PolyMat2<K> polymat_mul(const PolyMat2<K>& A, const PolyMat2<K>& B) {
  return A * B;
}

}  // namespace planeaut
