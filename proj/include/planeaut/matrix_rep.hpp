#pragma once

#include <functional>
#include <string>
#include <vector>

#include "planeaut/amalgam.hpp"
#include "planeaut/report.hpp"

namespace planeaut {

/// id + c t^k e_delta.
template <Field K>
struct EFactor {
  ProjPoint<K> delta;
  K c;
  unsigned k = 1;

  PolyMat2<K> to_matrix() const { return PolyMat2<K>::unipotent(Poly1<K>::monomial(c, k), nil_endo(delta)); }
  friend bool operator==(const EFactor&, const EFactor&) = default;
};

template <Field K>
PolyMat2<K> product(const std::vector<EFactor<K>>& fs, const typename K::Context& ctx) {
  PolyMat2<K> r = PolyMat2<K>::identity(ctx);
  for (const auto& f : fs) r = r * f.to_matrix();
  return r;
}

template <Field K>
void require_gl1(const PolyMat2<K>& G) {
  const auto ctx = G.context();
  if (!(G.det() == Poly1<K>::constant(K(1L, ctx)))) throw NotInGL1("determinant is not 1: " + G.det().to_string("t"));
  if (!(G.at_zero() == Mat2<K>::identity(ctx))) throw NotInGL1("value at t = 0 is not the identity");
}

/// Writes G = F_1 ... F_s with F_i in E_delta. Each step strips the top
/// coefficient with a left factor, so the t-degree drops every iteration.
/// If degree_trace is given, it receives the degree before each step and
/// the final degree.
template <Field K>
std::vector<EFactor<K>> matrix_factor(const PolyMat2<K>& G, std::vector<long>* degree_trace = nullptr) {
  require_gl1(G);
  const auto ctx = G.context();
  std::vector<EFactor<K>> out;
  PolyMat2<K> H = G;
  long N = H.degree();
  if (degree_trace) degree_trace->push_back(N);
  while (N > 0) {
    const Mat2<K> AN = H.coeff(static_cast<unsigned>(N));
    const ProjPoint<K> delta = image_line(AN);
    long n = N - 1;
    while (n >= 0 && image_within(H.coeff(static_cast<unsigned>(n)), delta)) --n;
    if (n < 0) throw InternalRankError("every coefficient lies on the top image line");
    const Mat2<K> e = nil_endo(delta);
    const Mat2<K> M = e * H.coeff(static_cast<unsigned>(n));
    const K* num = nullptr;
    const K* den = nullptr;
    for (auto [p, q] : {std::pair{&AN.a, &M.a}, {&AN.b, &M.b}, {&AN.c, &M.c}, {&AN.d, &M.d}}) {
      if (!q->is_zero()) {
        num = p;
        den = q;
        break;
      }
    }
    if (!den) throw InternalRankError("e_delta annihilates the lower coefficient");
    const K c = *num / *den;
    if (!(c * M == AN)) throw InternalRankError("top coefficient is not a multiple of e_delta A_n");
    const unsigned k = static_cast<unsigned>(N - n);
    out.push_back({delta, c, k});
    H = PolyMat2<K>::unipotent(Poly1<K>::monomial(-c, k), e) * H;
    const long next = H.degree();
    if (next >= N) throw InternalRankError("degree did not drop");
    N = next;
    if (degree_trace) degree_trace->push_back(N);
  }
  if (!H.is_identity()) throw InternalRankError("remainder is not the identity");
  return out;
}

/// Pair (delta, h) standing for id + h(t) e_delta, h in t K[t].
template <Field K>
struct MatPair {
  ProjPoint<K> delta;
  Poly1<K> h;
  friend bool operator==(const MatPair&, const MatPair&) = default;
};

template <Field K>
using MatFreeWord = std::vector<MatPair<K>>;

template <Field K>
PolyMat2<K> product(const MatFreeWord<K>& w, const typename K::Context& ctx) {
  PolyMat2<K> r = PolyMat2<K>::identity(ctx);
  for (const auto& [delta, h] : w) r = r * PolyMat2<K>::unipotent(h, nil_endo(delta));
  return r;
}

/// Merges neighbours on a common line (e_delta^2 = 0) and drops cancellations.
template <Field K>
MatFreeWord<K> reduce(const MatFreeWord<K>& w) {
  MatFreeWord<K> out;
  for (const auto& p : w) {
    if (p.h.is_zero()) continue;
    if (!out.empty() && out.back().delta == p.delta) {
      out.back().h += p.h;
      if (out.back().h.is_zero()) out.pop_back();
    } else {
      out.push_back(p);
    }
  }
  return out;
}

template <Field K>
MatFreeWord<K> matrix_free_nf(const PolyMat2<K>& G) {
  MatFreeWord<K> w;
  for (const auto& f : matrix_factor(G)) w.push_back({f.delta, Poly1<K>::monomial(f.c, f.k)});
  return reduce(w);
}

/// psi: tau_delta(f) -> id + (f / t) e_delta, extended multiplicatively.
template <Field K>
PolyMat2<K> to_matrix(const PlaneAuto<K>& phi) {
  const auto ctx = phi.context();
  MatFreeWord<K> w;
  for (const auto& [delta, f] : free1_decompose(phi)) w.push_back({delta, f.unshifted(1)});
  return product(w, ctx);
}

template <Field K>
PlaneAuto<K> from_matrix(const PolyMat2<K>& G) {
  FreeWord<K> w;
  for (const auto& [delta, h] : matrix_free_nf(G)) w.push_back({delta, h.shifted(1)});
  return recompose(w, G.context());
}

/// G(0) in S, for G of constant determinant.
template <Field K>
bool gls_membership(const PolyMat2<K>& G, const std::function<bool(const Mat2<K>&)>& in_S) {
  const Poly1<K> det = G.det();
  if (!det.is_constant() || det.is_zero()) throw DomainError("determinant is not a nonzero constant: " + det.to_string("t"));
  return in_S(G.at_zero());
}

/// Column vector over K[t].
template <Field K>
struct PolyVec {
  Poly1<K> x, y;

  long degree() const { return std::max(x.degree(), y.degree()); }
  /// Highest component.
  std::array<K, 2> hc() const {
    if (x.is_zero() && y.is_zero()) throw DomainError("highest component of the zero vector");
    const unsigned n = static_cast<unsigned>(degree());
    return {x.coeff(n), y.coeff(n)};
  }
  ProjPoint<K> hc_line() const {
    const auto v = hc();
    return ProjPoint<K>::make(v[0], v[1]);
  }
  std::string to_string() const { return "(" + x.to_string("t") + ", " + y.to_string("t") + ")"; }
  friend bool operator==(const PolyVec&, const PolyVec&) = default;
};

template <Field K>
PolyVec<K> apply(const PolyMat2<K>& G, const PolyVec<K>& v) {
  const auto r = G.apply(v.x, v.y);
  return {r[0], r[1]};
}

/// Ping-pong certificate: E*_delta maps Omega_delta' into Omega_delta for
/// delta' != delta, and reduced words move a vector whose highest component
/// lies off their first and last lines.
template <Field K>
Report pingpong_check(const std::vector<EFactor<K>>& factors, const std::vector<PolyVec<K>>& samples,
                      const std::vector<MatFreeWord<K>>& words = {}) {
  Report rep;
  for (const auto& v : samples) (void)v.hc();
  for (const auto& f : factors) {
    const PolyMat2<K> H = f.to_matrix();
    for (const auto& v : samples) {
      const ProjPoint<K> from = v.hc_line();
      if (from == f.delta) continue;
      const PolyVec<K> Hv = apply(H, v);
      const ProjPoint<K> to = Hv.hc_line();
      rep.add("pingpong.inclusion",
              "delta=" + f.delta.to_string() + " c=" + f.c.to_string() + " k=" + std::to_string(f.k) +
                  " v=" + v.to_string(),
              "hc on " + f.delta.to_string(), "hc on " + to.to_string(), to == f.delta);
    }
  }
  for (const auto& w : words) {
    if (w.empty()) continue;
    const auto ctx = w.front().h.context();
    std::optional<PolyVec<K>> sample;
    for (const auto& v : samples) {
      const auto line = v.hc_line();
      if (!(line == w.front().delta) && !(line == w.back().delta)) {
        sample = v;
        break;
      }
    }
    for (long s = 0; !sample; ++s) {
      const ProjPoint<K> line = ProjPoint<K>::make(K(s, ctx), K(1L, ctx));
      if (!(line == w.front().delta) && !(line == w.back().delta))
        sample = PolyVec<K>{Poly1<K>::constant(line.a()), Poly1<K>::constant(line.b())};
    }
    const PolyVec<K> moved = apply(product(w, ctx), *sample);
    std::string name;
    for (const auto& p : w) name += (name.empty() ? "" : " ") + p.delta.to_string();
    rep.add("pingpong.faithful", "word=" + name + " v=" + sample->to_string(), "moved",
            moved == *sample ? "fixed" : "moved to line " + moved.hc_line().to_string(), !(moved == *sample));
  }
  return rep;
}

}  // namespace planeaut
