#pragma once

#include <string>

#include "planeaut/poly1.hpp"

namespace planeaut {

/// Rational function in one variable z over a base field B, kept in lowest
/// terms with a monic denominator so that equality is syntactic.
template <Field B>
class RatFunc {
 public:
  using Context = typename B::Context;
  using Base = B;

  RatFunc() = default;
  RatFunc(long n, const Context& ctx) : num_(Poly1<B>::constant(B(n, ctx))), den_(Poly1<B>::constant(B(1L, ctx))) {}
  explicit RatFunc(const B& c) : num_(Poly1<B>::constant(c)), den_(Poly1<B>::constant(B(1L, c.context()))) {}
  explicit RatFunc(Poly1<B> num) : num_(std::move(num)), den_(Poly1<B>::constant(B(1L, num_.context()))) {}
  RatFunc(Poly1<B> num, Poly1<B> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc z(const Context& ctx) { return RatFunc(Poly1<B>::variable(ctx)); }

  Context context() const { return num_.context(); }
  static unsigned long characteristic(const Context& c) { return B::characteristic(c); }

  const Poly1<B>& numerator() const { return num_; }
  const Poly1<B>& denominator() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return is_constant() && num_.coeff(0).is_one(); }
  bool is_negative() const { return is_constant() && num_.coeff(0).is_negative(); }
  bool is_atomic() const { return is_constant(); }

  std::string to_string() const {
    if (is_polynomial()) return num_.to_string("z");
    return "(" + num_.to_string("z") + ")/(" + den_.to_string("z") + ")";
  }

  RatFunc inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    return reduced(den_, num_);
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_);
    // n/d + p stays in lowest terms
    if (b.is_polynomial()) return reduced(a.num_ + b.num_ * a.den_, a.den_);
    if (a.is_polynomial()) return reduced(b.num_ + a.num_ * b.den_, b.den_);
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
    if (a.is_zero() || b.is_zero()) return RatFunc(0L, a.context());
    // cross cancellation keeps the gcds small
    const Poly1<B> g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    return reduced(Poly1<B>::divmod(a.num_, g1).first * Poly1<B>::divmod(b.num_, g2).first,
                   Poly1<B>::divmod(a.den_, g2).first * Poly1<B>::divmod(b.den_, g1).first);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return a * b.inverse();
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  // num and den already coprime; only the denominator is made monic
  static RatFunc reduced(Poly1<B> num, Poly1<B> den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.make_monic();
    return r;
  }

  void normalize() {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly1<B>::constant(B(1L, num_.context()));
      return;
    }
    if (num_.degree() > 0 && den_.degree() > 0) {
      const Poly1<B> g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = Poly1<B>::divmod(num_, g).first;
        den_ = Poly1<B>::divmod(den_, g).first;
      }
    }
    make_monic();
  }

  void make_monic() {
    if (num_.is_zero()) {
      den_ = Poly1<B>::constant(B(1L, num_.context()));
      return;
    }
    const B lead = den_.leading_coeff();
    if (!lead.is_one()) {
      const B inv = B(1L, lead.context()) / lead;
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  Poly1<B> num_;
  Poly1<B> den_;
};

static_assert(Field<RatFunc<Rational>>);
static_assert(Field<RatFunc<Fp>>);

}  // namespace planeaut
