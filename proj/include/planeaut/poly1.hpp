#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "planeaut/scalar.hpp"

namespace planeaut {

/// Degree of the zero polynomial: strictly below every real degree.
inline constexpr long kNegInfDegree = std::numeric_limits<long>::min();

namespace detail {

// Appends one signed term to a polynomial rendering.
template <Field K>
void append_term(std::string& out, const K& coef, const std::string& mono) {
  const bool neg = coef.is_negative();
  const K mag = neg ? -coef : coef;
  if (out.empty())
    out += neg ? "-" : "";
  else
    out += neg ? " - " : " + ";
  if (mono.empty()) {
    out += mag.is_atomic() ? mag.to_string() : "(" + mag.to_string() + ")";
  } else if (mag.is_one()) {
    out += mono;
  } else {
    out += mag.is_atomic() ? mag.to_string() : "(" + mag.to_string() + ")";
    out += "*" + mono;
  }
}

inline std::string power_string(std::string_view var, unsigned e) {
  if (e == 0) return "";
  if (e == 1) return std::string(var);
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace detail

/// Sparse univariate polynomial over K. Zero coefficients are never stored.
template <Field K>
class Poly1 {
 public:
  using Context = typename K::Context;
  using Terms = std::map<unsigned, K>;

  Poly1() = default;
  explicit Poly1(const Context& ctx) : ctx_(ctx) {}

  static Poly1 constant(const K& c) {
    Poly1 r(c.context());
    r.add_term(0, c);
    return r;
  }
  static Poly1 monomial(const K& c, unsigned e) {
    Poly1 r(c.context());
    r.add_term(e, c);
    return r;
  }
  static Poly1 variable(const Context& ctx) { return monomial(K(1L, ctx), 1); }

  const Context& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  long degree() const { return terms_.empty() ? kNegInfDegree : static_cast<long>(terms_.rbegin()->first); }
  /// Lowest exponent carrying a nonzero coefficient; kNegInfDegree for zero.
  long valuation() const { return terms_.empty() ? kNegInfDegree : static_cast<long>(terms_.begin()->first); }

  K coeff(unsigned e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0L, ctx_) : it->second;
  }
  K leading_coeff() const { return terms_.empty() ? K(0L, ctx_) : terms_.rbegin()->second; }

  void add_term(unsigned e, const K& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly1 operator-() const {
    Poly1 r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  Poly1& operator+=(const Poly1& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly1& operator-=(const Poly1& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b) {
    Poly1 r(a.ctx_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Poly1& operator*=(const Poly1& o) { return *this = *this * o; }
  friend Poly1 operator*(const K& s, const Poly1& p) {
    Poly1 r(p.ctx_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : p.terms_) r.add_term(e, s * c);
    return r;
  }
  friend Poly1 operator*(const Poly1& p, const K& s) { return s * p; }

  /// Multiplication by t^k.
  Poly1 shifted(unsigned k) const {
    Poly1 r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }
  /// Exact division by t^k; throws if some exponent is below k.
  Poly1 unshifted(unsigned k) const {
    Poly1 r(ctx_);
    for (const auto& [e, c] : terms_) {
      if (e < k) throw DomainError("polynomial not divisible by the requested power of the variable");
      r.terms_.emplace(e - k, c);
    }
    return r;
  }

  Poly1 pow(unsigned n) const {
    Poly1 r = constant(K(1L, ctx_));
    Poly1 b = *this;
    while (n) {
      if (n & 1) r *= b;
      n >>= 1;
      if (n) b *= b;
    }
    return r;
  }

  K operator()(const K& at) const {
    K r(0L, ctx_);
    long prev = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      for (long k = static_cast<long>(it->first); k < prev; ++k) r = r * at;
      r = r + it->second;
      prev = it->first;
    }
    for (long k = 0; k < prev && prev != kNegInfDegree; ++k) r = r * at;
    return r;
  }

  /// Horner evaluation in an arbitrary K-algebra R (R must accept K scalars
  /// via `R::constant`-style construction supplied by `lift`).
  template <class R, class Lift>
  R evaluate_in(const R& at, Lift lift) const {
    R r = lift(K(0L, ctx_));
    long prev = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      for (long k = static_cast<long>(it->first); k < prev; ++k) r = r * at;
      r = r + lift(it->second);
      prev = it->first;
    }
    if (prev != kNegInfDegree)
      for (long k = 0; k < prev; ++k) r = r * at;
    return r;
  }

  /// Composition f(inner).
  Poly1 compose(const Poly1& inner) const {
    return evaluate_in(inner, [](const K& c) { return Poly1::constant(c); });
  }

  Poly1 derivative() const {
    Poly1 r(ctx_);
    for (const auto& [e, c] : terms_)
      if (e > 0) r.add_term(e - 1, K(static_cast<long>(e), ctx_) * c);
    return r;
  }

  Poly1 monic() const {
    if (terms_.empty()) return *this;
    return leading_coeff().is_one() ? *this : (K(1L, ctx_) / leading_coeff()) * *this;
  }

  /// Euclidean division a = q*b + r with deg r < deg b.
  static std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    Poly1 q(a.ctx_), r = a;
    const K lead = b.leading_coeff();
    const long db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
      const unsigned shift = static_cast<unsigned>(r.degree() - db);
      const K c = r.leading_coeff() / lead;
      q.add_term(shift, c);
      for (const auto& [e, cb] : b.terms_) r.add_term(e + shift, -(c * cb));
    }
    return {std::move(q), std::move(r)};
  }

  /// Monic gcd; gcd(0,0) = 0.
  friend Poly1 gcd(Poly1 a, Poly1 b) {
    while (!b.is_zero()) {
      Poly1 r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Ascending exponents, e.g. "1 + t^2".
  std::string to_string(std::string_view var = "t") const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) detail::append_term(out, c, detail::power_string(var, e));
    return out;
  }

  friend bool operator==(const Poly1& a, const Poly1& b) { return a.terms_ == b.terms_; }

 private:
  Context ctx_{};
  Terms terms_;
};

}  // namespace planeaut
