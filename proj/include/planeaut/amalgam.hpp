#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "planeaut/generators.hpp"
#include "planeaut/plane_auto.hpp"
#include "planeaut/ratfunc.hpp"

namespace planeaut {

// Aut K^2 = Aff(2,K) *_B Elem(K). Factor tag 1 is affine, 2 is elementary.

template <Field K>
using Factor = std::variant<AffineAuto<K>, ElemAuto<K>>;

enum class FactorKind { Affine = 1, Elementary = 2 };

template <Field K>
FactorKind kind_of(const Factor<K>& f) {
  return std::holds_alternative<AffineAuto<K>>(f) ? FactorKind::Affine : FactorKind::Elementary;
}

template <Field K>
bool in_borel(const Factor<K>& f) {
  return std::visit([](const auto& g) { return g.in_borel(); }, f);
}

template <Field K>
PlaneAuto<K> to_plane(const Factor<K>& f) {
  return std::visit([](const auto& g) { return g.to_plane(); }, f);
}

template <Field K>
Factor<K> inverse(const Factor<K>& f) {
  return std::visit([](const auto& g) { return Factor<K>(inverse(g)); }, f);
}

/// Reduced word x_1 ... x_n x_0: alternating coset representatives followed
/// by a tail in B (stored as an elementary map with affine f).
template <Field K>
struct AmalgamWord {
  std::vector<Factor<K>> factors;
  ElemAuto<K> tail;

  static AmalgamWord identity(const typename K::Context& ctx) { return {{}, ElemAuto<K>::identity(ctx)}; }

  typename K::Context context() const { return tail.context(); }

  PlaneAuto<K> recompose() const {
    // applied from the right so each step is a univariate evaluation
    PlaneAuto<K> r = tail.to_plane();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
      r = std::visit([&](const auto& g) { return g.after(r); }, *it);
    return r;
  }

  friend bool operator==(const AmalgamWord&, const AmalgamWord&) = default;
};

namespace amalgam_detail {

template <Field K>
Factor<K> right_borel(const Factor<K>& f, const ElemAuto<K>& b) {
  if (std::holds_alternative<AffineAuto<K>>(f))
    return compose(std::get<AffineAuto<K>>(f), borel_as_affine(b));
  return compose(std::get<ElemAuto<K>>(f), b);
}

template <Field K>
Factor<K> left_borel(const ElemAuto<K>& b, const Factor<K>& f) {
  if (std::holds_alternative<AffineAuto<K>>(f))
    return compose(borel_as_affine(b), std::get<AffineAuto<K>>(f));
  return compose(b, std::get<ElemAuto<K>>(f));
}

template <Field K>
ElemAuto<K> as_borel(const Factor<K>& f) {
  if (std::holds_alternative<AffineAuto<K>>(f)) return borel_as_elementary(std::get<AffineAuto<K>>(f));
  return std::get<ElemAuto<K>>(f);
}

template <Field K>
Factor<K> merge(const Factor<K>& f, const Factor<K>& g) {
  if (std::holds_alternative<AffineAuto<K>>(f))
    return compose(std::get<AffineAuto<K>>(f), std::get<AffineAuto<K>>(g));
  return compose(std::get<ElemAuto<K>>(f), std::get<ElemAuto<K>>(g));
}

}  // namespace amalgam_detail

/// Representative of the left coset f.B for f outside B, and the B-part:
/// f = rep o borel.
///
/// Affine cosets are classified by the line through L e_2, which is
/// (1, mu) for non-Borel maps; the representative is (y, x + mu y).
/// Elementary cosets are represented by (x, y + h(x)), h in x^2 K[x].
template <Field K>
std::pair<Factor<K>, ElemAuto<K>> coset_split(const Factor<K>& f) {
  if (in_borel(f)) throw DomainError("coset_split on a Borel element");
  if (std::holds_alternative<AffineAuto<K>>(f)) {
    const auto& a = std::get<AffineAuto<K>>(f);
    const auto ctx = a.context();
    const K mu = a.L.d / a.L.b;
    const AffineAuto<K> rep{Mat2<K>{K(0L, ctx), K(1L, ctx), K(1L, ctx), mu}, K(0L, ctx), K(0L, ctx)};
    return {rep, borel_as_elementary(compose(inverse(rep), a))};
  }
  const auto& e = std::get<ElemAuto<K>>(f);
  const auto ctx = e.context();
  const K iz1 = K(1L, ctx) / e.z1;
  Poly1<K> h = e.f.compose(Poly1<K>::monomial(iz1, 1) + Poly1<K>::constant(-(iz1 * e.t0)));
  h.add_term(0, -h.coeff(0));
  h.add_term(1, -h.coeff(1));
  const ElemAuto<K> rep{K(1L, ctx), K(0L, ctx), K(1L, ctx), h};
  return {rep, compose(inverse(rep), e)};
}

/// Canonical reduced word of the element represented by w.
template <Field K>
AmalgamWord<K> normal_form(const AmalgamWord<K>& w) {
  using namespace amalgam_detail;
  const auto ctx = w.context();
  std::vector<Factor<K>> stack;
  ElemAuto<K> lead = ElemAuto<K>::identity(ctx);

  auto push = [&](Factor<K> g) {
    for (;;) {
      if (in_borel(g)) {
        if (stack.empty())
          lead = compose(lead, as_borel(g));
        else
          stack.back() = right_borel(stack.back(), as_borel(g));
        return;
      }
      if (!stack.empty() && kind_of(stack.back()) == kind_of(g)) {
        g = merge(stack.back(), g);
        stack.pop_back();
        continue;
      }
      if (stack.empty()) {
        g = left_borel(lead, g);
        lead = ElemAuto<K>::identity(ctx);
      }
      stack.push_back(std::move(g));
      return;
    }
  };
  for (const auto& f : w.factors) push(f);
  push(Factor<K>(w.tail));

  AmalgamWord<K> out{{}, lead};
  ElemAuto<K> carry = lead;
  for (const auto& g : stack) {
    auto [rep, b] = coset_split(left_borel(carry, g));
    out.factors.push_back(std::move(rep));
    carry = std::move(b);
  }
  out.tail = carry;
  return out;
}

template <Field K>
bool is_normal(const AmalgamWord<K>& w) {
  if (!w.tail.in_borel()) return false;
  for (std::size_t i = 0; i < w.factors.size(); ++i) {
    const auto& f = w.factors[i];
    if (in_borel(f)) return false;
    if (i > 0 && kind_of(f) == kind_of(w.factors[i - 1])) return false;
    auto [rep, b] = coset_split(f);
    if (!(rep == f) || !b.is_identity()) return false;
  }
  return true;
}

template <Field K>
AmalgamWord<K> word_multiply(const AmalgamWord<K>& u, const AmalgamWord<K>& v) {
  AmalgamWord<K> w{u.factors, v.tail};
  w.factors.push_back(u.tail);
  w.factors.insert(w.factors.end(), v.factors.begin(), v.factors.end());
  return normal_form(w);
}

template <Field K>
AmalgamWord<K> word_inverse(const AmalgamWord<K>& u) {
  AmalgamWord<K> w{{}, ElemAuto<K>::identity(u.context())};
  w.factors.push_back(inverse(u.tail));
  for (auto it = u.factors.rbegin(); it != u.factors.rend(); ++it) w.factors.push_back(inverse(*it));
  return normal_form(w);
}

/// gamma . w . gamma^-1
template <Field K>
AmalgamWord<K> word_conjugate(const AmalgamWord<K>& w, const AmalgamWord<K>& gamma) {
  return word_multiply(word_multiply(gamma, w), word_inverse(gamma));
}

template <Field K>
AmalgamWord<K> single_factor_word(const Factor<K>& f) {
  const auto ctx = std::visit([](const auto& g) { return g.context(); }, f);
  return normal_form(AmalgamWord<K>{{f}, ElemAuto<K>::identity(ctx)});
}

enum class WordType { A, G11, G22, G12, G21 };

inline std::string to_string(WordType t) {
  switch (t) {
    case WordType::A: return "A";
    case WordType::G11: return "G11";
    case WordType::G22: return "G22";
    case WordType::G12: return "G12";
    case WordType::G21: return "G21";
  }
  return "?";
}

template <Field K>
WordType word_type(const AmalgamWord<K>& w) {
  if (!is_normal(w)) throw DomainError("word_type needs a word in normal form");
  if (w.factors.empty()) return WordType::A;
  const bool first_aff = kind_of(w.factors.front()) == FactorKind::Affine;
  const bool last_aff = kind_of(w.factors.back()) == FactorKind::Affine;
  if (first_aff) return last_aff ? WordType::G11 : WordType::G12;
  return last_aff ? WordType::G21 : WordType::G22;
}

/// Jung / van der Kulk reduction. Repeatedly removes the top-degree part of
/// the higher-degree component with an elementary map until the remaining
/// map is affine.
template <Field K>
AmalgamWord<K> vdk_factor(const PlaneAuto<K>& phi) {
  const auto ctx = phi.context();
  const Poly2<K> jac = jacobian(phi);
  if (!jac.is_constant() || jac.is_zero()) throw NotAnAutomorphism("jacobian is not a nonzero constant");

  const AffineAuto<K> swap{Mat2<K>{K(0L, ctx), K(1L, ctx), K(1L, ctx), K(0L, ctx)}, K(0L, ctx), K(0L, ctx)};
  std::vector<Factor<K>> left;
  Poly2<K> P = phi.P(), Q = phi.Q();

  // Tries high -= c * low^k with top(high) = c * top(low)^k.
  auto reduce = [](Poly2<K>& high, const Poly2<K>& low, K& c, unsigned& k) {
    const long dh = high.total_degree(), dl = low.total_degree();
    if (dl <= 0 || dh < dl || dh % dl != 0) return false;
    k = static_cast<unsigned>(dh / dl);
    const Poly2<K> lowk = low.pow(k);
    const Poly2<K> top = lowk.leading_form();
    const Poly2<K> htop = high.leading_form();
    if (htop.size() != top.size()) return false;
    c = htop.leading_coeff() / top.leading_coeff();
    if (!(htop == c * top)) return false;
    high -= c * lowk;
    return true;
  };

  while (std::max(P.total_degree(), Q.total_degree()) > 1) {
    K c;
    unsigned k = 0;
    if (Q.total_degree() >= P.total_degree() && reduce(Q, P, c, k)) {
      left.push_back(ElemAuto<K>{K(1L, ctx), K(0L, ctx), K(1L, ctx), Poly1<K>::monomial(c, k)});
    } else if (P.total_degree() >= Q.total_degree() && reduce(P, Q, c, k)) {
      // (x + c y^k, y) = swap o (x, y + c x^k) o swap
      left.push_back(swap);
      left.push_back(ElemAuto<K>{K(1L, ctx), K(0L, ctx), K(1L, ctx), Poly1<K>::monomial(c, k)});
      left.push_back(swap);
    } else {
      throw NotAnAutomorphism("leading forms are not related by a power: (" + P.leading_form().to_string() + ", " +
                              Q.leading_form().to_string() + ")");
    }
  }
  AffineAuto<K> last;
  if (!as_affine(PlaneAuto<K>(P, Q), last)) throw NotAnAutomorphism("reduction ended in a singular affine map");
  left.push_back(last);
  return normal_form(AmalgamWord<K>{std::move(left), ElemAuto<K>::identity(ctx)});
}

template <Field K>
PlaneAuto<K> invert(const PlaneAuto<K>& phi) {
  return word_inverse(vdk_factor(phi)).recompose();
}

/// gamma o g o gamma^-1 on plane maps.
template <Field K>
PlaneAuto<K> conjugate(const PlaneAuto<K>& g, const PlaneAuto<K>& gamma) {
  return compose(compose(gamma, g), invert(gamma));
}

template <Field K>
struct CornerConjugation {
  AmalgamWord<K> conjugator;
  AmalgamWord<K> conjugate;
};

namespace amalgam_detail {

template <Field K>
ElemAuto<K> shear(const K& c, unsigned k) {
  const auto ctx = c.context();
  return {K(1L, ctx), K(0L, ctx), K(1L, ctx), Poly1<K>::monomial(c, k)};
}

template <Field K>
AffineAuto<K> swap_map(const typename K::Context& ctx) {
  return {Mat2<K>{K(0L, ctx), K(1L, ctx), K(1L, ctx), K(0L, ctx)}, K(0L, ctx), K(0L, ctx)};
}

// Conjugators moving a nontrivial Borel element out of B in Aut K^2, in any
// characteristic: swap, x^2, x^3, x^4 shears, and shears after the swap.
template <Field K>
std::vector<AmalgamWord<K>> borel_escape_candidates(const typename K::Context& ctx) {
  const K one(1L, ctx);
  const AmalgamWord<K> sw = single_factor_word<K>(swap_map<K>(ctx));
  std::vector<AmalgamWord<K>> out{sw};
  for (unsigned k : {2u, 3u, 4u}) out.push_back(single_factor_word<K>(shear(one, k)));
  for (unsigned k : {3u, 4u}) out.push_back(word_multiply(single_factor_word<K>(shear(one, k)), sw));
  return out;
}

}  // namespace amalgam_detail

/// Finds gamma with gamma.w.gamma^-1 of the requested corner type (G11 or
/// G22). For w in B a conjugator moving it out of B may be supplied;
/// otherwise a small candidate list is searched.
template <Field K>
CornerConjugation<K> conjugate_to_corner(const AmalgamWord<K>& w, WordType corner,
                                         const std::optional<AmalgamWord<K>>& borel_witness = std::nullopt) {
  using namespace amalgam_detail;
  if (corner != WordType::G11 && corner != WordType::G22)
    throw DomainError("conjugate_to_corner targets G11 or G22 only");
  const auto ctx = w.context();
  AmalgamWord<K> cur = normal_form(w);
  if (cur.factors.empty() && cur.tail.is_identity()) throw DomainError("the identity has no corner conjugate");
  AmalgamWord<K> conj = AmalgamWord<K>::identity(ctx);

  auto apply = [&](const AmalgamWord<K>& gamma) {
    cur = word_conjugate(cur, gamma);
    conj = word_multiply(gamma, conj);
  };

  if (word_type(cur) == WordType::A) {
    if (borel_witness) {
      if (word_type(word_conjugate(cur, *borel_witness)) == WordType::A)
        throw DomainError("supplied witness does not move the element out of B");
      apply(*borel_witness);
    } else {
      bool found = false;
      for (const auto& gamma : borel_escape_candidates<K>(ctx)) {
        if (word_type(word_conjugate(cur, gamma)) != WordType::A) {
          apply(gamma);
          found = true;
          break;
        }
      }
      if (!found) throw DomainError("no conjugator among the candidates moves the element out of B");
    }
  }

  const WordType t = word_type(cur);
  if (t == WordType::G21 || t == WordType::G12) {
    // Left-multiplying the leading elementary factor u by gamma in Elem* with
    // gamma.u outside B turns a G21 word into G22 after conjugation.
    const AmalgamWord<K> g21 = t == WordType::G21 ? cur : word_inverse(cur);
    const auto& u = std::get<ElemAuto<K>>(g21.factors.front());
    const K one(1L, ctx);
    std::optional<ElemAuto<K>> gamma;
    for (unsigned k : {2u, 3u}) {
      const ElemAuto<K> cand = shear(one, k);
      if (!compose(cand, u).in_borel()) {
        gamma = cand;
        break;
      }
    }
    if (!gamma) throw InternalRankError("no elementary conjugator found");
    apply(single_factor_word<K>(*gamma));
  }

  if (word_type(cur) != corner) {
    if (corner == WordType::G11)
      apply(single_factor_word<K>(swap_map<K>(ctx)));
    else
      apply(single_factor_word<K>(shear(K(1L, ctx), 2)));
  }
  if (word_type(cur) != corner) throw InternalRankError("corner conjugation failed");
  return {conj, cur};
}

template <Field K>
struct HWitness {
  PlaneAuto<K> conjugator;
  PlaneAuto<K> conjugate;
  std::string rule;
};

/// Hypothesis H for SL(2,K) *_{SB_0(K)} SElem_0(K): for g in SB_0(K), g != 1,
/// returns gamma with gamma o g o gamma^-1 outside B.
template <Field K>
HWitness<K> hypothesis_h_witness_saut0(const PlaneAuto<K>& g) {
  const auto ctx = g.context();
  const ClassifyFlags fl = classify(g);
  if (g.is_identity()) throw DomainError("hypothesis H witness requested for the identity");
  if (!fl.in_B || !fl.in_Aut0 || !g.linear_part().det().is_one()) throw DomainError("element is not in SB_0(K)");
  const Mat2<K> L = g.linear_part();
  const K one(1L, ctx), zero(0L, ctx);
  const bool homothety = L.b.is_zero() && L.c.is_zero() && L.a == L.d;
  if (homothety) {
    // det 1 forces L = -id with -1 != 1
    if (K::characteristic(ctx) == 2) throw DomainError("homothety case does not arise in characteristic 2");
    const PlaneAuto<K> gamma = generators::T<K>(ctx);
    HWitness<K> w{gamma, conjugate(g, gamma), "homothety: conjugate by (x, y + x^2)"};
    if (classify(w.conjugate).in_B) throw InternalRankError("homothety witness failed");
    return w;
  }
  const std::vector<std::pair<Mat2<K>, std::string>> candidates{
      {Mat2<K>{zero, -one, one, zero}, "rotation (-y, x)"},
      {Mat2<K>{one, one, zero, one}, "shear (x + y, y)"},
  };
  for (const auto& [m, name] : candidates) {
    const PlaneAuto<K> gamma = PlaneAuto<K>::linear(m);
    PlaneAuto<K> c = conjugate(g, gamma);
    if (!classify(c).in_B) return {gamma, std::move(c), "linear: conjugate by " + name};
  }
  throw InternalRankError("no SL(2) conjugator moved the element out of B");
}

/// Hypothesis H for Aff(2,I) *_{B(I)} Elem(I) over K[z], I = (generator).
/// Scalars live in K(z). g must be (x + u, y + v + w x) with u, v, w in I.
template <Field B>
HWitness<RatFunc<B>> hypothesis_h_witness_congruence(const PlaneAuto<RatFunc<B>>& g, const Poly1<B>& ideal_generator,
                                                     std::optional<RatFunc<B>> r = std::nullopt,
                                                     std::optional<int> n = std::nullopt) {
  using R = RatFunc<B>;
  const auto ctx = g.context();
  if (ideal_generator.is_zero()) throw DomainError("the ideal I must be nonzero");
  if (g.is_identity()) throw DomainError("hypothesis H witness requested for the identity");
  AffineAuto<R> a;
  if (!as_affine(g, a)) throw DomainError("element is not affine");
  const R one(1L, ctx);
  if (!(a.L.a == one) || !(a.L.d == one) || !a.L.b.is_zero()) throw DomainError("element is not in B(I)");
  auto in_ideal = [&](const R& s) {
    return s.is_polynomial() && Poly1<B>::divmod(s.numerator(), ideal_generator).second.is_zero();
  };
  const R& u = a.u;
  const R& v = a.v;
  const R& w = a.L.c;
  if (!in_ideal(u) || !in_ideal(v) || !in_ideal(w)) throw DomainError("element is not in B(I)");

  const R rr = r ? *r : R(ideal_generator);
  if (rr.is_zero() || !in_ideal(rr)) throw DomainError("r must be a nonzero element of I");
  int nn = n ? *n : 3;
  const unsigned long ch = R::characteristic(ctx);
  if (!n)
    while (ch != 0 && nn % static_cast<long>(ch) == 0) ++nn;
  if (nn < 3 || (ch != 0 && nn % static_cast<long>(ch) == 0)) throw DomainError("n must be >= 3 and prime to the characteristic");

  const PlaneAuto<R> gamma = generators::gamma<R>(rr);
  const PlaneAuto<R> phi = generators::phi<R>(rr, nn);
  HWitness<R> out;
  if (!w.is_zero()) {
    out = {gamma, conjugate(g, gamma), "w != 0: conjugate by gamma_r"};
  } else if (!u.is_zero()) {
    out = {phi, conjugate(g, phi), "w = 0, u != 0: conjugate by phi_{r,n}"};
  } else {
    // conjugate by gamma_r first, then by phi_{r,n}
    const PlaneAuto<R> both = compose(phi, gamma);
    out = {both, conjugate(g, both), "u = w = 0: conjugate by phi_{r,n} o gamma_r"};
  }
  if (classify(out.conjugate).in_B) throw InternalRankError("congruence witness failed: " + out.rule);
  return out;
}

/// Element of the free-product normal form of Aut_1 K^2: tau_delta(f).
template <Field K>
struct FreePair {
  ProjPoint<K> delta;
  Poly1<K> f;
  friend bool operator==(const FreePair&, const FreePair&) = default;
};

template <Field K>
using FreeWord = std::vector<FreePair<K>>;

template <Field K>
PlaneAuto<K> recompose(const FreeWord<K>& w, const typename K::Context& ctx) {
  PlaneAuto<K> r = PlaneAuto<K>::identity(ctx);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->f.is_zero() || it->f.valuation() < 2) throw DomainError("tau_delta needs f in t^2 K[t], f != 0");
    r = shear_after(it->delta, it->f, r);
  }
  return r;
}

/// Unique decomposition phi = tau_{d_1}(f_1) o ... o tau_{d_m}(f_m) with
/// consecutive d_i distinct.
///
/// The outermost factor dominates: the top-degree part of phi points along
/// d_1, and b P - a Q is invariant under tau_{d_1}, so the monomials of f_1
/// can be peeled from the top one at a time.
template <Field K>
FreeWord<K> free1_decompose(const PlaneAuto<K>& phi) {
  if (!in_aut1(phi)) throw DomainError("free1_decompose needs an element of Aut_1");
  const auto ctx = phi.context();
  FreeWord<K> out;
  Poly2<K> P = phi.P(), Q = phi.Q();
  // b P - a Q is unchanged while terms along the same line are peeled, so
  // its powers are kept until the line changes
  std::optional<ProjPoint<K>> cached_line;
  std::vector<Poly2<K>> gpow;
  while (std::max(P.total_degree(), Q.total_degree()) > 1) {
    const unsigned d = static_cast<unsigned>(std::max(P.total_degree(), Q.total_degree()));
    const Poly2<K> Pt = P.homogeneous(d), Qt = Q.homogeneous(d);
    const Monomial m = (Pt.is_zero() ? Qt : Pt).leading_monomial();
    const ProjPoint<K> delta = ProjPoint<K>::make(Pt.coeff(m.x, m.y), Qt.coeff(m.x, m.y));
    if (!(delta.b() * Pt - delta.a() * Qt).is_zero())
      throw NotAnAutomorphism("leading forms are not proportional");
    const Poly2<K>& H = delta.is_infinity() ? Pt : Qt;
    const Poly2<K> g = delta.b() * P - delta.a() * Q;
    const long dg = g.total_degree();
    if (dg <= 0 || d % dg != 0 || d / dg < 2) throw NotAnAutomorphism("top form is not a power of the invariant form");
    const unsigned k = d / static_cast<unsigned>(dg);
    if (!cached_line || !(*cached_line == delta)) {
      cached_line = delta;
      gpow.assign(1, Poly2<K>::constant(K(1L, ctx)));
    }
    while (gpow.size() <= k) gpow.push_back(gpow.back() * g);
    const Poly2<K>& gk = gpow[k];
    const Poly2<K> top = gk.leading_form();
    const K c = H.leading_coeff() / top.leading_coeff();
    if (!(H == c * top)) throw NotAnAutomorphism("top form is not a power of the invariant form");
    P -= (delta.a() * c) * gk;
    Q -= (delta.b() * c) * gk;
    const Poly1<K> piece = Poly1<K>::monomial(c, k);
    if (!out.empty() && out.back().delta == delta)
      out.back().f += piece;
    else
      out.push_back({delta, piece});
  }
  if (!(PlaneAuto<K>(P, Q) == PlaneAuto<K>::identity(ctx)))
    throw NotAnAutomorphism("reduction did not end at the identity");
  return out;
}

}  // namespace planeaut
