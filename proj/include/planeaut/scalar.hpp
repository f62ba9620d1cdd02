#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "planeaut/errors.hpp"

namespace planeaut {

/// Requirements on a coefficient field. Every field type carries a
/// `Context` (the data needed to build constants, e.g. the prime p), and
/// every value knows its context, so generic code never consults global
/// state.
template <class K>
concept Field = std::copyable<K> && std::equality_comparable<K> &&
    requires(const K& a, const K& b, const typename K::Context& c) {
      { K(0L, c) };
      { a + b } -> std::same_as<K>;
      { a - b } -> std::same_as<K>;
      { a * b } -> std::same_as<K>;
      { a / b } -> std::same_as<K>;
      { -a } -> std::same_as<K>;
      { a.is_zero() } -> std::convertible_to<bool>;
      { a.is_one() } -> std::convertible_to<bool>;
      { a.context() } -> std::convertible_to<typename K::Context>;
      { a.to_string() } -> std::convertible_to<std::string>;
      { a.is_negative() } -> std::convertible_to<bool>;
      { a.is_atomic() } -> std::convertible_to<bool>;
      { K::characteristic(c) } -> std::convertible_to<unsigned long>;
    };

struct RationalContext {
  friend bool operator==(const RationalContext&, const RationalContext&) = default;
};

/// Arbitrary-precision rational number (GMP backed), always canonical.
class Rational {
 public:
  using Context = RationalContext;

  Rational() = default;
  Rational(long n, const Context& = {}) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "-12", "3/4", "+5".
  static Rational parse(std::string_view text);

  Context context() const { return {}; }
  static unsigned long characteristic(const Context&) { return 0; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return sgn(v_) < 0; }
  bool is_atomic() const { return true; }
  bool is_integer() const { return v_.get_den() == 1; }

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  std::string to_string() const { return v_.get_str(); }

  Rational inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    return Rational(Canonical{}, mpq_class(1) / v_);
  }

  // GMP results are already canonical
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Canonical{}, a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Canonical{}, a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Canonical{}, a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Rational(Canonical{}, a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(Canonical{}, -v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

 private:
  struct Canonical {};
  Rational(Canonical, mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;
};

struct PrimeContext {
  std::uint64_t p = 0;
  friend bool operator==(const PrimeContext&, const PrimeContext&) = default;
};

bool is_prime(std::uint64_t n);

/// Element of the prime field F_p, stored reduced to [0, p).
/// p must be prime and below 2^32.
class Fp {
 public:
  using Context = PrimeContext;

  Fp() = default;
  Fp(long n, const Context& ctx) : p_(ctx.p) {
    if (p_ < 2) throw DomainError("prime field element without a modulus");
    long r = n % static_cast<long>(p_);
    v_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(p_) : r);
  }

  static Context make_context(std::uint64_t p);

  Context context() const { return {p_}; }
  static unsigned long characteristic(const Context& c) { return c.p; }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return false; }
  bool is_atomic() const { return true; }

  std::string to_string() const { return std::to_string(v_); }

  Fp pow(std::uint64_t e) const;
  Fp inverse() const {
    if (v_ == 0) throw DomainError("division by zero");
    return pow(p_ - 2);
  }

  friend Fp operator+(const Fp& a, const Fp& b) { return make(a.v_ + b.v_ >= a.p_ ? a.v_ + b.v_ - a.p_ : a.v_ + b.v_, a.p_); }
  friend Fp operator-(const Fp& a, const Fp& b) { return make(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_); }
  friend Fp operator*(const Fp& a, const Fp& b) { return make(a.v_ * b.v_ % a.p_, a.p_); }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return make(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  static Fp make(std::uint64_t v, std::uint64_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

template <Field K>
K zero_of(const typename K::Context& c) { return K(0L, c); }
template <Field K>
K one_of(const typename K::Context& c) { return K(1L, c); }

template <Field K>
K power(K base, unsigned long e) {
  K r(1L, base.context());
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

static_assert(Field<Rational>);
static_assert(Field<Fp>);

}  // namespace planeaut
