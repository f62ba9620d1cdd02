#pragma once

#include <string>
#include <vector>

#include "planeaut/poly1.hpp"

namespace planeaut {

/// Square matrix over K, row-major.
template <Field K>
class DenseMat {
 public:
  using Context = typename K::Context;

  DenseMat() = default;
  DenseMat(std::size_t n, const Context& ctx) : n_(n), ctx_(ctx), v_(n * n, K(0L, ctx)) {}
  DenseMat(std::size_t n, std::vector<K> rowmajor) : n_(n), v_(std::move(rowmajor)) {
    if (v_.size() != n * n) throw DomainError("matrix entry count does not match its size");
    if (!v_.empty()) ctx_ = v_.front().context();
  }

  static DenseMat identity(std::size_t n, const Context& ctx) {
    DenseMat m(n, ctx);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1L, ctx);
    return m;
  }
  static DenseMat diag(const std::vector<K>& d) {
    DenseMat m(d.size(), d.front().context());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t size() const { return n_; }
  const Context& context() const { return ctx_; }
  K& operator()(std::size_t i, std::size_t j) { return v_[i * n_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }

  bool is_zero() const {
    for (const auto& x : v_)
      if (!x.is_zero()) return false;
    return true;
  }
  K trace() const {
    K s(0L, ctx_);
    for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
  }

  friend DenseMat operator+(DenseMat a, const DenseMat& b) {
    for (std::size_t i = 0; i < a.v_.size(); ++i) a.v_[i] += b.v_[i];
    return a;
  }
  friend DenseMat operator-(DenseMat a, const DenseMat& b) {
    for (std::size_t i = 0; i < a.v_.size(); ++i) a.v_[i] -= b.v_[i];
    return a;
  }
  friend DenseMat operator*(const K& s, DenseMat a) {
    for (auto& x : a.v_) x = s * x;
    return a;
  }
  friend DenseMat operator*(const DenseMat& a, const DenseMat& b) {
    DenseMat r(a.n_, a.ctx_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  friend bool operator==(const DenseMat& a, const DenseMat& b) { return a.n_ == b.n_ && a.v_ == b.v_; }

  DenseMat pow(unsigned long e) const {
    DenseMat r = identity(n_, ctx_), b = *this;
    for (; e; e >>= 1) {
      if (e & 1) r = r * b;
      if (e > 1) b = b * b;
    }
    return r;
  }

  /// Gauss-Jordan inverse; throws DomainError when singular.
  DenseMat inverse() const {
    DenseMat a = *this, r = identity(n_, ctx_);
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t p = c;
      while (p < n_ && a(p, c).is_zero()) ++p;
      if (p == n_) throw DomainError("matrix is singular");
      if (p != c)
        for (std::size_t j = 0; j < n_; ++j) {
          std::swap(a(p, j), a(c, j));
          std::swap(r(p, j), r(c, j));
        }
      const K inv = K(1L, ctx_) / a(c, c);
      for (std::size_t j = 0; j < n_; ++j) {
        a(c, j) = inv * a(c, j);
        r(c, j) = inv * r(c, j);
      }
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == c || a(i, c).is_zero()) continue;
        const K f = a(i, c);
        for (std::size_t j = 0; j < n_; ++j) {
          a(i, j) -= f * a(c, j);
          r(i, j) -= f * r(c, j);
        }
      }
    }
    return r;
  }

  K det() const {
    DenseMat a = *this;
    K d(1L, ctx_);
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t p = c;
      while (p < n_ && a(p, c).is_zero()) ++p;
      if (p == n_) return K(0L, ctx_);
      if (p != c) {
        for (std::size_t j = 0; j < n_; ++j) std::swap(a(p, j), a(c, j));
        d = -d;
      }
      d *= a(c, c);
      const K inv = K(1L, ctx_) / a(c, c);
      for (std::size_t i = c + 1; i < n_; ++i) {
        if (a(i, c).is_zero()) continue;
        const K f = a(i, c) * inv;
        for (std::size_t j = c; j < n_; ++j) a(i, j) -= f * a(c, j);
      }
    }
    return d;
  }

  /// Characteristic polynomial det(t - A) by Faddeev-LeVerrier; needs
  /// characteristic 0 or larger than the size.
  Poly1<K> charpoly() const {
    const unsigned long ch = K::characteristic(ctx_);
    if (ch != 0 && ch <= n_) throw DomainError("characteristic too small for Faddeev-LeVerrier");
    Poly1<K> out = Poly1<K>::monomial(K(1L, ctx_), static_cast<unsigned>(n_));
    DenseMat M(n_, ctx_);
    K c(1L, ctx_);
    for (std::size_t k = 1; k <= n_; ++k) {
      M = *this * M + c * identity(n_, ctx_);
      const DenseMat AM = *this * M;
      c = -(AM.trace() / K(static_cast<long>(k), ctx_));
      out.add_term(static_cast<unsigned>(n_ - k), c);
    }
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i) s += " ; ";
      for (std::size_t j = 0; j < n_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
    }
    return s;
  }

 private:
  std::size_t n_ = 0;
  Context ctx_{};
  std::vector<K> v_;
};

template <Field K>
bool is_unipotent(const DenseMat<K>& u) {
  const DenseMat<K> N = u - DenseMat<K>::identity(u.size(), u.context());
  return N.pow(u.size()).is_zero();
}

}  // namespace planeaut
