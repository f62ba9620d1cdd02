#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "planeaut/linalg2.hpp"
#include "planeaut/plane_auto.hpp"
#include "planeaut/ratfunc.hpp"

namespace planeaut {

/// Scalar-valued names available to the parser in a given field. Only
/// rational-function fields have one: z.
template <Field K>
struct ScalarVariables {
  static std::optional<K> lookup(std::string_view, const typename K::Context&) { return std::nullopt; }
};

template <Field B>
struct ScalarVariables<RatFunc<B>> {
  static std::optional<RatFunc<B>> lookup(std::string_view name, const typename B::Context& ctx) {
    if (name == "z") return RatFunc<B>::z(ctx);
    return std::nullopt;
  }
};

inline constexpr unsigned kMaxParsedExponent = 4096;

/// Recursive-descent parser for
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := ('+' | '-') unary | power
///   power := atom ('^' integer)?
///   atom  := integer | variable | '(' expr ')'
/// Division is allowed only by nonzero constants. Positions in errors are
/// byte offsets into the full input.
template <Field K>
class ExprParser {
 public:
  using Ctx = typename K::Context;
  using Vars = std::vector<std::pair<std::string, Poly2<K>>>;

  ExprParser(std::string_view text, const Ctx& ctx, Vars vars, std::size_t base = 0)
      : s_(text), ctx_(ctx), vars_(std::move(vars)), base_(base) {}

  Poly2<K> parse() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    Poly2<K> v = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, base_ + pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly2<K> expr() {
    Poly2<K> v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  Poly2<K> term() {
    Poly2<K> v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        const std::size_t at = pos_;
        const Poly2<K> d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail(d.is_zero() ? "division by zero" : "division by a non-constant");
        }
        v = (K(1L, ctx_) / d.constant_term()) * v;
      } else {
        return v;
      }
    }
  }

  Poly2<K> unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Poly2<K> power() {
    Poly2<K> base = atom();
    if (!eat('^')) return base;
    skip();
    const std::size_t start = pos_;
    unsigned long e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + static_cast<unsigned>(s_[pos_] - '0');
      if (e > kMaxParsedExponent) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a nonnegative integer exponent");
    return base.pow(static_cast<unsigned>(e));
  }

  Poly2<K> atom() {
    skip();
    if (pos_ == s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly2<K> v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      K v(0L, ctx_);
      const K ten(10L, ctx_);
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = v * ten + K(static_cast<long>(s_[pos_++] - '0'), ctx_);
      return Poly2<K>::constant(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      for (const auto& [n, v] : vars_)
        if (n == name) return v;
      if (auto z = ScalarVariables<K>::lookup(name, ctx_)) return Poly2<K>::constant(*z);
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  Ctx ctx_;
  Vars vars_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

/// Splits at separators outside parentheses; each piece keeps its offset.
inline std::vector<std::pair<std::size_t, std::string_view>> split_top_level(std::string_view s, char sep,
                                                                             std::size_t base = 0) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.emplace_back(base + start, s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.emplace_back(base + start, s.substr(start));
  return out;
}

template <Field K>
Poly2<K> parse_poly2(std::string_view s, const typename K::Context& ctx, std::size_t base = 0) {
  return ExprParser<K>(s, ctx, {{"x", Poly2<K>::x(ctx)}, {"y", Poly2<K>::y(ctx)}}, base).parse();
}

/// Univariate polynomial in the named variable (t by default).
template <Field K>
Poly1<K> parse_poly1(std::string_view s, const typename K::Context& ctx, const std::string& var = "t",
                     std::size_t base = 0) {
  return ExprParser<K>(s, ctx, {{var, Poly2<K>::x(ctx)}}, base).parse().as_univariate_in_x();
}

template <Field K>
K parse_scalar(std::string_view s, const typename K::Context& ctx, std::size_t base = 0) {
  return ExprParser<K>(s, ctx, {}, base).parse().constant_term();
}

/// "P, Q".
template <Field K>
PlaneAuto<K> parse_plane_auto(std::string_view s, const typename K::Context& ctx, std::size_t base = 0) {
  const auto parts = split_top_level(s, ',', base);
  if (parts.size() != 2) throw ParseError("an automorphism needs exactly two components", base);
  return {parse_poly2<K>(parts[0].second, ctx, parts[0].first), parse_poly2<K>(parts[1].second, ctx, parts[1].first)};
}

/// "a, b ; c, d" with entries in K[t].
template <Field K>
PolyMat2<K> parse_polymat(std::string_view s, const typename K::Context& ctx, std::size_t base = 0) {
  const auto rows = split_top_level(s, ';', base);
  if (rows.size() != 2) throw ParseError("a matrix needs exactly two rows separated by ';'", base);
  std::vector<Poly1<K>> e;
  for (const auto& [off, row] : rows) {
    const auto cells = split_top_level(row, ',', off);
    if (cells.size() != 2) throw ParseError("each matrix row needs exactly two entries", off);
    for (const auto& [coff, cell] : cells) e.push_back(parse_poly1<K>(cell, ctx, "t", coff));
  }
  return {e[0], e[1], e[2], e[3]};
}

/// "a, b ; c, d" with scalar entries.
template <Field K>
Mat2<K> parse_mat2(std::string_view s, const typename K::Context& ctx, std::size_t base = 0) {
  const PolyMat2<K> m = parse_polymat<K>(s, ctx, base);
  if (m.degree() > 0) throw ParseError("matrix entries must be constants", base);
  return m.at_zero();
}

}  // namespace planeaut
