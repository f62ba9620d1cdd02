#pragma once

#include <string>
#include <string_view>

#include "planeaut/amalgam.hpp"
#include "planeaut/parse.hpp"

namespace planeaut {

// Text form of an AmalgamWord, one record per line:
//   word v1
//   affine a, b, c, d | u, v          (x, y) -> L (x, y)^T + (u, v)
//   elementary z1, t0, z2 | f         (z1 x + t0, z2 y + f(x))
//   tail z1, t0, z2 | f
// Scalars and f use the polynomial grammar; f is written in x.

inline constexpr std::string_view kWordHeader = "word v1";

template <Field K>
std::string write_word(const AmalgamWord<K>& w) {
  std::string out(kWordHeader);
  out += "\n";
  auto elem = [](const char* tag, const ElemAuto<K>& e) {
    return std::string(tag) + " " + e.z1.to_string() + ", " + e.t0.to_string() + ", " + e.z2.to_string() + " | " +
           e.f.to_string("x") + "\n";
  };
  for (const auto& f : w.factors) {
    if (const auto* a = std::get_if<AffineAuto<K>>(&f)) {
      out += "affine " + a->L.a.to_string() + ", " + a->L.b.to_string() + ", " + a->L.c.to_string() + ", " +
             a->L.d.to_string() + " | " + a->u.to_string() + ", " + a->v.to_string() + "\n";
    } else {
      out += elem("elementary", std::get<ElemAuto<K>>(f));
    }
  }
  out += elem("tail", w.tail);
  return out;
}

/// Reads the format above. The word is returned as written; callers
/// normalize if they need the reduced form.
template <Field K>
AmalgamWord<K> read_word(std::string_view text, const typename K::Context& ctx) {
  AmalgamWord<K> w = AmalgamWord<K>::identity(ctx);
  bool header = false, tail = false;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t end = text.find('\n', line_start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(line_start, end - line_start);
    std::size_t off = line_start;
    line_start = end + 1;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) {
      line.remove_prefix(1);
      ++off;
    }
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!header) {
      if (line != kWordHeader) throw ParseError("expected header '" + std::string(kWordHeader) + "'", off);
      header = true;
      continue;
    }
    if (tail) throw ParseError("records after the tail", off);
    const std::size_t sp = line.find(' ');
    const std::string_view tag = line.substr(0, sp);
    if (sp == std::string_view::npos) throw ParseError("record has no payload", off);
    const std::string_view body = line.substr(sp + 1);
    const std::size_t boff = off + sp + 1;
    const auto halves = split_top_level(body, '|', boff);
    if (halves.size() != 2) throw ParseError("record needs one '|'", boff);
    const auto nums = split_top_level(halves[0].second, ',', halves[0].first);
    auto scalar = [&](std::size_t i) { return parse_scalar<K>(nums[i].second, ctx, nums[i].first); };
    if (tag == "affine") {
      if (nums.size() != 4) throw ParseError("affine record needs four matrix entries", halves[0].first);
      const auto tr = split_top_level(halves[1].second, ',', halves[1].first);
      if (tr.size() != 2) throw ParseError("affine record needs a translation u, v", halves[1].first);
      const Mat2<K> L{scalar(0), scalar(1), scalar(2), scalar(3)};
      if (L.det().is_zero()) throw ParseError("affine record has a singular matrix", halves[0].first);
      w.factors.push_back(AffineAuto<K>{L, parse_scalar<K>(tr[0].second, ctx, tr[0].first),
                                        parse_scalar<K>(tr[1].second, ctx, tr[1].first)});
    } else if (tag == "elementary" || tag == "tail") {
      if (nums.size() != 3) throw ParseError("elementary record needs z1, t0, z2", halves[0].first);
      const ElemAuto<K> e{scalar(0), scalar(1), scalar(2), parse_poly1<K>(halves[1].second, ctx, "x", halves[1].first)};
      if (e.z1.is_zero() || e.z2.is_zero()) throw ParseError("elementary record needs z1, z2 != 0", halves[0].first);
      if (tag == "tail") {
        w.tail = e;
        tail = true;
      } else {
        w.factors.push_back(e);
      }
    } else {
      throw ParseError("unknown record '" + std::string(tag) + "'", off);
    }
  }
  if (!header) throw ParseError("missing header", 0);
  if (!tail) throw ParseError("missing tail record", text.size());
  return w;
}

}  // namespace planeaut
