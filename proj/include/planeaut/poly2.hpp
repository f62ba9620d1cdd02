#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planeaut/poly1.hpp"

namespace planeaut {

/// Exponent pair (of x, of y).
struct Monomial {
  unsigned x = 0;
  unsigned y = 0;
  unsigned total() const { return x + y; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Print order: total degree ascending, then x-exponent descending
/// (1, x, y, x^2, x*y, y^2, ...).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.x > b.x;
  }
};

/// Sparse polynomial in x, y over K.
template <Field K>
class Poly2 {
 public:
  using Context = typename K::Context;
  using Terms = std::map<Monomial, K, MonomialOrder>;

  Poly2() = default;
  explicit Poly2(const Context& ctx) : ctx_(ctx) {}

  static Poly2 constant(const K& c) { return monomial(c, 0, 0); }
  static Poly2 monomial(const K& c, unsigned ex, unsigned ey) {
    Poly2 r(c.context());
    r.add_term({ex, ey}, c);
    return r;
  }
  static Poly2 x(const Context& ctx) { return monomial(K(1L, ctx), 1, 0); }
  static Poly2 y(const Context& ctx) { return monomial(K(1L, ctx), 0, 1); }
  /// f(x) (or f(y) when `in_y`) for a univariate f.
  static Poly2 from_univariate(const Poly1<K>& f, bool in_y = false) {
    Poly2 r(f.context());
    for (const auto& [e, c] : f.terms()) r.add_term(in_y ? Monomial{0, e} : Monomial{e, 0}, c);
    return r;
  }

  const Context& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0); }
  long total_degree() const { return terms_.empty() ? kNegInfDegree : static_cast<long>(terms_.rbegin()->first.total()); }
  long degree_in_x() const {
    long d = kNegInfDegree;
    for (const auto& [m, c] : terms_) d = std::max<long>(d, m.x);
    return d;
  }
  long degree_in_y() const {
    long d = kNegInfDegree;
    for (const auto& [m, c] : terms_) d = std::max<long>(d, m.y);
    return d;
  }

  K coeff(unsigned ex, unsigned ey) const {
    auto it = terms_.find(Monomial{ex, ey});
    return it == terms_.end() ? K(0L, ctx_) : it->second;
  }
  K constant_term() const { return coeff(0, 0); }

  void add_term(const Monomial& m, const K& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Homogeneous component of total degree d.
  Poly2 homogeneous(unsigned d) const {
    Poly2 r(ctx_);
    for (const auto& [m, c] : terms_)
      if (m.total() == d) r.terms_.emplace(m, c);
    return r;
  }
  Poly2 leading_form() const { return is_zero() ? *this : homogeneous(static_cast<unsigned>(total_degree())); }
  /// Leading coefficient in the print order (largest monomial).
  K leading_coeff() const { return terms_.empty() ? K(0L, ctx_) : terms_.rbegin()->second; }
  Monomial leading_monomial() const { return terms_.empty() ? Monomial{} : terms_.rbegin()->first; }

  /// When the polynomial only involves x, returns it as a univariate one.
  bool only_in_x() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.y == 0; });
  }
  Poly1<K> as_univariate_in_x() const {
    Poly1<K> r(ctx_);
    for (const auto& [m, c] : terms_) {
      if (m.y != 0) throw DomainError("polynomial depends on y");
      r.add_term(m.x, c);
    }
    return r;
  }

  Poly2 operator-() const {
    Poly2 r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  Poly2& operator+=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly2& operator-=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r(a.ctx_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    const auto [ax, ay] = a.max_exponents();
    const auto [bx, by] = b.max_exponents();
    const std::size_t X = ax + bx + 1, Y = ay + by + 1;
    const std::size_t pairs = a.terms_.size() * b.terms_.size();
    if (X * Y > 8 * pairs + 4096) {
      for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(Monomial{ma.x + mb.x, ma.y + mb.y}, ca * cb);
      return r;
    }
    // dense accumulation, then one ordered pass into the map
    std::vector<std::optional<K>> buf(X * Y);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        auto& slot = buf[(ma.x + mb.x) * Y + ma.y + mb.y];
        if (slot)
          *slot += ca * cb;
        else
          slot = ca * cb;
      }
    const std::size_t top = X + Y - 2;
    for (std::size_t t = 0; t <= top; ++t) {
      const std::size_t hi = std::min(t, X - 1), lo = t >= Y ? t - (Y - 1) : 0;
      for (std::size_t x = hi + 1; x-- > lo;) {
        auto& slot = buf[x * Y + (t - x)];
        if (slot && !slot->is_zero())
          r.terms_.emplace_hint(r.terms_.end(), Monomial{static_cast<unsigned>(x), static_cast<unsigned>(t - x)},
                                std::move(*slot));
      }
    }
    return r;
  }

  std::pair<unsigned, unsigned> max_exponents() const {
    unsigned mx = 0, my = 0;
    for (const auto& [m, c] : terms_) {
      mx = std::max(mx, m.x);
      my = std::max(my, m.y);
    }
    return {mx, my};
  }
  Poly2& operator*=(const Poly2& o) { return *this = *this * o; }
  friend Poly2 operator*(const K& s, const Poly2& p) {
    Poly2 r(p.ctx_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : p.terms_) r.add_term(m, s * c);
    return r;
  }
  friend Poly2 operator*(const Poly2& p, const K& s) { return s * p; }

  Poly2 pow(unsigned n) const {
    Poly2 r = constant(K(1L, ctx_));
    Poly2 b = *this;
    while (n) {
      if (n & 1) r *= b;
      n >>= 1;
      if (n) b *= b;
    }
    return r;
  }

  /// p(u, v): x replaced by u and y by v.
  Poly2 substitute(const Poly2& u, const Poly2& v) const {
    if (terms_.empty()) return *this;
    // Horner in v over the rows sum_i c_ij u^i
    std::vector<Poly2> upow{constant(K(1L, ctx_))};
    std::map<unsigned, Poly2, std::greater<>> rows;
    for (const auto& [m, c] : terms_) {
      while (upow.size() <= m.x) upow.push_back(upow.back() * u);
      auto it = rows.try_emplace(m.y, ctx_).first;
      it->second += c * upow[m.x];
    }
    Poly2 r(ctx_);
    unsigned level = rows.begin()->first;
    for (const auto& [j, row] : rows) {
      for (; level > j; --level) r = r * v;
      r += row;
    }
    for (; level > 0; --level) r = r * v;
    return r;
  }

  K evaluate(const K& xv, const K& yv) const {
    K r(0L, ctx_);
    for (const auto& [m, c] : terms_) r = r + c * power(xv, m.x) * power(yv, m.y);
    return r;
  }

  Poly2 dx() const {
    Poly2 r(ctx_);
    for (const auto& [m, c] : terms_)
      if (m.x > 0) r.add_term({m.x - 1, m.y}, K(static_cast<long>(m.x), ctx_) * c);
    return r;
  }
  Poly2 dy() const {
    Poly2 r(ctx_);
    for (const auto& [m, c] : terms_)
      if (m.y > 0) r.add_term({m.x, m.y - 1}, K(static_cast<long>(m.y), ctx_) * c);
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      std::string mono = detail::power_string("x", m.x);
      const std::string ys = detail::power_string("y", m.y);
      if (!ys.empty()) mono += (mono.empty() ? "" : "*") + ys;
      detail::append_term(out, c, mono);
    }
    return out;
  }

  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

 private:
  Context ctx_{};
  Terms terms_;
};

/// f(arg) for a univariate f and a bivariate argument.
template <Field K>
Poly2<K> compose_univariate(const Poly1<K>& f, const Poly2<K>& arg) {
  return f.evaluate_in(arg, [](const K& c) { return Poly2<K>::constant(c); });
}

}  // namespace planeaut
