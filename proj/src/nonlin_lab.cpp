#include "planeaut/nonlin_lab.hpp"

#include <numeric>
#include <random>
#include <map>

#include "planeaut/amalgam.hpp"
#include "planeaut/generators.hpp"

namespace planeaut {

namespace {

using Q = Rational;
using QMat = DenseMat<Rational>;

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void require_prime(unsigned p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

}  // namespace

unsigned euler_phi(unsigned d) {
  unsigned n = d, out = d;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    out -= out / q;
  }
  if (n > 1) out -= out / n;
  return out;
}

Poly1<Q> cyclotomic(unsigned d) {
  if (d == 0) throw DomainError("cyclotomic polynomials start at d = 1");
  Poly1<Q> num = Poly1<Q>::monomial(Q(1L), d) - Poly1<Q>::constant(Q(1L));
  for (unsigned e = 1; e < d; ++e)
    if (d % e == 0) num = Poly1<Q>::divmod(num, cyclotomic(e)).first;
  return num;
}

std::optional<unsigned long> quasi_unipotent_order(const QMat& u) {
  const std::size_t n = u.size();
  if (n == 0) throw DomainError("empty matrix");
  if (u.det().is_zero()) throw DomainError("matrix is singular");
  Poly1<Q> chi = u.charpoly();
  unsigned long order = 1;
  // phi(d) >= sqrt(d / 2), so phi(d) <= n forces d <= 2 n^2.
  const unsigned dmax = static_cast<unsigned>(2 * n * n + 2);
  for (unsigned d = 1; d <= dmax && chi.degree() > 0; ++d) {
    if (euler_phi(d) > n) continue;
    const Poly1<Q> phi = cyclotomic(d);
    bool matched = false;
    for (;;) {
      auto [q, rem] = Poly1<Q>::divmod(chi, phi);
      if (!rem.is_zero()) break;
      chi = std::move(q);
      matched = true;
    }
    if (matched) order = std::lcm(order, static_cast<unsigned long>(d));
  }
  if (chi.degree() > 0) return std::nullopt;
  return order;
}

QMat unipotent_log(const QMat& u) {
  if (!is_unipotent(u)) throw DomainError("logarithm needs a unipotent matrix");
  const std::size_t n = u.size();
  const QMat N = u - QMat::identity(n, {});
  QMat out(n, Q::Context{}), Np = N;
  for (std::size_t m = 1; m <= n && !Np.is_zero(); ++m) {
    const Q coef(m % 2 ? 1L : -1L, static_cast<long>(m));
    out = out + coef * Np;
    Np = Np * N;
  }
  return out;
}

QMat nilpotent_exp(const QMat& x) {
  const std::size_t n = x.size();
  if (!x.pow(n).is_zero()) throw DomainError("exponential needs a nilpotent matrix");
  QMat out = QMat::identity(n, {}), xp = x;
  mpq_class fact = 1;
  for (std::size_t k = 1; k <= n && !xp.is_zero(); ++k) {
    fact *= static_cast<long>(k);
    out = out + Q(mpq_class(1 / fact)) * xp;
    xp = xp * x;
  }
  return out;
}

bool log_scaling_check(const QMat& h, const QMat& u, unsigned k) {
  if (h.size() != u.size()) throw DomainError("h and u have different sizes");
  const QMat hi = h.inverse();
  const std::uint64_t two_k = std::uint64_t{1} << k;
  if (!(h * u * hi == u.pow(two_k))) throw DomainError("hypothesis h u h^-1 = u^(2^k) does not hold");
  const auto n = quasi_unipotent_order(u);
  if (!n) throw DomainError("u is not quasi-unipotent");
  const QMat e = unipotent_log(u.pow(*n));
  return h * e * hi == Q(static_cast<long>(two_k)) * e;
}

// ---- G(r) ----

namespace {

// Index arithmetic on E = F_p^r encoded in base p.
struct ElemAbelian {
  unsigned p, r, q;
  std::vector<unsigned> add_table;  // q * q
  std::vector<unsigned> neg_table;

  ElemAbelian(unsigned p_, unsigned r_) : p(p_), r(r_), q(static_cast<unsigned>(ipow(p_, r_))) {
    add_table.resize(std::size_t{q} * q);
    neg_table.resize(q);
    for (unsigned a = 0; a < q; ++a) {
      for (unsigned b = 0; b < q; ++b) {
        unsigned s = 0, x = a, y = b, place = 1;
        for (unsigned i = 0; i < r; ++i) {
          s += ((x % p + y % p) % p) * place;
          x /= p;
          y /= p;
          place *= p;
        }
        add_table[std::size_t{a} * q + b] = s;
        if (s == 0) neg_table[a] = b;
      }
    }
  }
  unsigned add(unsigned a, unsigned b) const { return add_table[std::size_t{a} * q + b]; }
  unsigned neg(unsigned a) const { return neg_table[a]; }
};

unsigned encode_digits(const std::vector<unsigned>& d, unsigned p) {
  unsigned s = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) s = s * p + *it;
  return s;
}

std::vector<unsigned> decode_digits(unsigned s, unsigned p, unsigned r) {
  std::vector<unsigned> d(r);
  for (unsigned i = 0; i < r; ++i) {
    d[i] = s % p;
    s /= p;
  }
  return d;
}

using Row = std::vector<unsigned>;

// Reduced row echelon form mod p; returns the nonzero rows.
std::vector<Row> row_reduce(std::vector<Row> rows, unsigned p) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const unsigned inv = static_cast<unsigned>(Fp(rows[rank][c], Fp::make_context(p)).inverse().value());
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const unsigned f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[rank][j]) % p;
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

}  // namespace

PGroupElem PGroupElem::identity(unsigned p, unsigned r) {
  return {p, r, std::vector<unsigned>(r, 0), std::vector<unsigned>(ipow(p, r), 0)};
}

PGroupElem operator*(const PGroupElem& a, const PGroupElem& b) {
  const unsigned p = a.p;
  PGroupElem out{p, a.r, a.u, b.f};
  for (unsigned i = 0; i < a.r; ++i) out.u[i] = (a.u[i] + b.u[i]) % p;
  const unsigned shift = encode_digits(b.u, p);
  for (unsigned w = 0; w < a.f.size(); ++w) {
    std::vector<unsigned> wd = decode_digits(w, p, a.r), sd = decode_digits(shift, p, a.r);
    for (unsigned i = 0; i < a.r; ++i) wd[i] = (wd[i] + sd[i]) % p;
    out.f[w] = (out.f[w] + a.f[encode_digits(wd, p)]) % p;
  }
  return out;
}

PGroupElem PGroupElem::inverse() const {
  // (u, f)^-1 = (-u, g) with g(w) = -f(w - u)
  PGroupElem out{p, r, u, f};
  for (auto& x : out.u) x = (p - x) % p;
  for (unsigned w = 0; w < f.size(); ++w) {
    std::vector<unsigned> wd = decode_digits(w, p, r);
    for (unsigned i = 0; i < r; ++i) wd[i] = (wd[i] + p - u[i]) % p;
    out.f[w] = (p - f[encode_digits(wd, p)]) % p;
  }
  return out;
}

std::uint64_t pgroup_work(unsigned p, unsigned r) {
  constexpr std::uint64_t cap = std::uint64_t{1} << 62;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (q > cap / p) return cap;
    q *= p;
  }
  std::uint64_t w = q;
  for (std::uint64_t i = 0; i < q; ++i) {
    if (w > cap / p) return cap;
    w *= p;
  }
  return w;
}

unsigned pgroup_nilpotency_index(unsigned p, unsigned r, std::uint64_t work_bound) {
  require_prime(p);
  if (r < 1) throw DomainError("rank r must be at least 1");
  const std::uint64_t work = pgroup_work(p, r);
  if (work > work_bound)
    throw BoundExceeded("p^r * p^(p^r) = " + std::to_string(work) + " exceeds the work bound " +
                        std::to_string(work_bound));
  const ElemAbelian E(p, r);
  const unsigned q = E.q;

  // V = ker A. The commutator of (u, f) with (0, m) is (0, (tau_u - 1) m) and
  // with (e, 0) it is (0, (tau_e - 1) f), so membership in the next center
  // splits into a condition on u alone and a linear condition on f alone.
  std::vector<Row> A;
  for (unsigned i = 0; i < q; ++i) {
    Row row(q, 0);
    row[i] = 1;
    A.push_back(row);
  }
  std::vector<unsigned> basis;
  for (unsigned i = 0, place = 1; i < r; ++i, place *= p) basis.push_back(place);

  // Row of A (tau_u - 1): entry j is A[j - u] - A[j].
  auto shifted_difference = [&](const Row& row, unsigned u) {
    Row out(q);
    for (unsigned j = 0; j < q; ++j) out[j] = (row[E.add(j, E.neg(u))] + p - row[j]) % p;
    return out;
  };

  for (unsigned k = 1; k <= q * (p - 1) + 2; ++k) {
    bool all_u = true;
    for (unsigned u = 0; u < q && all_u; ++u)
      for (const auto& row : A) {
        const Row d = shifted_difference(row, u);
        if (std::any_of(d.begin(), d.end(), [](unsigned x) { return x != 0; })) {
          all_u = false;
          break;
        }
      }
    std::vector<Row> next;
    for (const auto& row : A)
      for (unsigned e : basis) next.push_back(shifted_difference(row, e));
    A = row_reduce(std::move(next), p);
    if (all_u && A.empty()) return k;
  }
  throw InternalRankError("upper central series did not terminate");
}

unsigned pgroup_nilpotency_index_bruteforce(unsigned p, unsigned r, std::uint64_t max_order) {
  require_prime(p);
  if (r < 1) throw DomainError("rank r must be at least 1");
  const std::uint64_t order = pgroup_work(p, r);
  if (order > max_order) throw BoundExceeded("group of order " + std::to_string(order) + " is too large to enumerate");
  const unsigned q = static_cast<unsigned>(ipow(p, r));
  const std::uint64_t fcount = ipow(p, q);

  auto decode = [&](std::uint64_t code) {
    PGroupElem g = PGroupElem::identity(p, r);
    std::uint64_t fc = code % fcount;
    g.u = decode_digits(static_cast<unsigned>(code / fcount), p, r);
    for (unsigned w = 0; w < q; ++w) {
      g.f[w] = static_cast<unsigned>(fc % p);
      fc /= p;
    }
    return g;
  };
  auto encode = [&](const PGroupElem& g) {
    std::uint64_t fc = 0;
    for (unsigned w = q; w-- > 0;) fc = fc * p + g.f[w];
    return std::uint64_t{encode_digits(g.u, p)} * fcount + fc;
  };

  std::vector<PGroupElem> elems;
  std::vector<PGroupElem> inverses;
  for (std::uint64_t c = 0; c < order; ++c) {
    elems.push_back(decode(c));
    inverses.push_back(elems.back().inverse());
  }
  std::vector<char> center(order, 0);
  center[encode(PGroupElem::identity(p, r))] = 1;
  std::uint64_t size = 1;
  for (unsigned k = 1;; ++k) {
    std::vector<char> next(order, 0);
    std::uint64_t next_size = 0;
    for (std::uint64_t g = 0; g < order; ++g) {
      bool central = true;
      for (std::uint64_t x = 0; x < order && central; ++x) {
        const PGroupElem comm = elems[g] * elems[x] * inverses[g] * inverses[x];
        central = center[encode(comm)] != 0;
      }
      next[g] = central;
      next_size += central;
    }
    if (next_size == order) return k;
    if (next_size == size) throw InternalRankError("upper central series stalled");
    center = std::move(next);
    size = next_size;
  }
}

namespace {

// Polynomials over F_p in r variables, keyed by exponent vectors.
using MPoly = std::map<std::vector<unsigned>, unsigned>;

MPoly mul(const MPoly& a, const MPoly& b, unsigned p) {
  MPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      unsigned& c = out[e];
      c = (c + ca * cb) % p;
      if (c == 0) out.erase(e);
    }
  return out;
}

void add_into(MPoly& a, const MPoly& b, unsigned p) {
  for (const auto& [e, c] : b) {
    unsigned& x = a[e];
    x = (x + c) % p;
    if (x == 0) a.erase(e);
  }
}

}  // namespace

bool power_sum_identity(unsigned p, unsigned r, std::uint64_t bound) {
  require_prime(p);
  if (r < 1) throw DomainError("rank r must be at least 1");
  const std::uint64_t q = ipow(p, r);
  if (q > bound) throw BoundExceeded("p^r = " + std::to_string(q) + " exceeds the bound " + std::to_string(bound));
  MPoly sum, prod{{std::vector<unsigned>(r, 0), 1}};
  for (unsigned code = 0; code < q; ++code) {
    const std::vector<unsigned> lam = decode_digits(code, p, r);
    MPoly u;
    for (unsigned i = 0; i < r; ++i) {
      if (lam[i] == 0) continue;
      std::vector<unsigned> e(r, 0);
      e[i] = 1;
      u[e] = lam[i];
    }
    if (u.empty()) continue;  // 0^(q-1) = 0 since q - 1 >= 1
    MPoly pw{{std::vector<unsigned>(r, 0), 1}};
    for (std::uint64_t i = 0; i + 1 < q; ++i) pw = mul(pw, u, p);
    add_into(sum, pw, p);
    prod = mul(prod, u, p);
  }
  return sum == prod;
}

bool power_sum_vanishing(unsigned p, unsigned n) {
  require_prime(p);
  const auto ctx = Fp::make_context(p);
  Fp s(0L, ctx);
  for (unsigned l = 0; l < p; ++l) s += n == 0 ? Fp(1L, ctx) : Fp(l, ctx).pow(n);
  const bool special = n > 0 && n % (p - 1) == 0;
  return special ? s == Fp(-1L, ctx) : s.is_zero();
}

FreenessResult cyclic_module_is_free(unsigned p, unsigned r, const std::vector<unsigned>& f, std::uint64_t bound) {
  require_prime(p);
  if (r < 1) throw DomainError("rank r must be at least 1");
  const std::uint64_t q64 = ipow(p, r);
  if (q64 > bound) throw BoundExceeded("group algebra of dimension " + std::to_string(q64) + " exceeds the bound");
  const unsigned q = static_cast<unsigned>(q64);
  if (f.size() != q) throw DomainError("f needs p^r values");
  const ElemAbelian E(p, r);
  FreenessResult out;
  unsigned aug = 0;
  for (unsigned x : f) aug = (aug + x) % p;
  out.criterion = aug != 0;
  std::vector<Row> cols;
  for (unsigned u = 0; u < q; ++u) {
    Row c(q);
    for (unsigned w = 0; w < q; ++w) c[w] = f[E.add(w, u)] % p;
    cols.push_back(c);
  }
  out.free = row_reduce(std::move(cols), p).size() == q;
  return out;
}

PAdicExpansion PAdicExpansion::of(std::uint64_t n, unsigned base, std::size_t width) {
  if (base < 2) throw DomainError("base must be at least 2");
  PAdicExpansion e{base, {}};
  while (n) {
    e.digits.push_back(static_cast<unsigned>(n % base));
    n /= base;
  }
  if (e.digits.size() < width) e.digits.resize(width, 0);
  return e;
}

std::uint64_t PAdicExpansion::value() const {
  std::uint64_t v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * base + *it;
  return v;
}

std::vector<DigitCounterexample> digit_lemma_scan(unsigned p, unsigned N_max) {
  require_prime(p);
  std::vector<DigitCounterexample> out;
  for (unsigned N = 1; N <= N_max; ++N) {
    const std::uint64_t P = ipow(p, N);
    if (P > (std::uint64_t{1} << 31)) throw BoundExceeded("p^N too large for the digit scan");
    const std::uint64_t M = P - 1;
    for (unsigned a = 0; a < N; ++a) {
      const std::uint64_t pa = ipow(p, a);
      for (std::uint64_t m = 1; m < P; ++m) {
        if (m % p == 0) continue;
        // m p^a mod (p^N - 1) is m with its N digits rotated up by a places
        const PAdicExpansion md = PAdicExpansion::of(m, p, N);
        PAdicExpansion rot{p, std::vector<unsigned>(N, 0)};
        for (unsigned k = 0; k < N; ++k) rot.digits[(a + k) % N] = md.digits[k];
        const std::uint64_t target = (m * pa) % M;
        if (rot.value() % M != target) throw InternalRankError("digit rotation disagrees with m p^a mod p^N - 1");
        for (std::uint64_t n = 1; n * m < P; ++n) {
          if (n % p == 0) continue;
          if (n % M == target && !(a == 0 && n == m)) out.push_back({N, a, n, m});
        }
      }
    }
  }
  return out;
}

// ---- <S, S', T> ----

Report gamma_relations_check(std::uint64_t seed, unsigned words) {
  using A = PlaneAuto<Q>;
  Report rep;
  const A S = generators::S<Q>({}), Sp = generators::S_prime<Q>({}), T = generators::T<Q>({});
  const A Si = invert(S), Spi = invert(Sp), Ti = invert(T);

  rep.add("gamma.commute", "S o S' = S' o S", compose(Sp, S).to_string(), compose(S, Sp).to_string(),
          compose(S, Sp) == compose(Sp, S));
  const A lhs = compose(compose(S, T), Si), rhs = compose(T, T);
  rep.add("gamma.conjugate", "S o T o S^-1 = T o T", rhs.to_string(), lhs.to_string(), lhs == rhs);

  const Mat2<Q> m = Sp.linear_part(), mi = m.inverse();
  Mat2<Q> pos = Mat2<Q>::identity({}), neg = Mat2<Q>::identity({});
  bool all_nontriangular = true;
  std::string bad;
  for (int n = 1; n <= 20; ++n) {
    pos = pos * m;
    neg = neg * mi;
    for (const auto& [k, M] : {std::pair{n, pos}, {-n, neg}}) {
      if (M.is_lower_triangular() || M.is_upper_triangular()) {
        all_nontriangular = false;
        bad += (bad.empty() ? "" : ",") + std::to_string(k);
      }
    }
  }
  rep.add("gamma.sprime_powers", "1 <= |n| <= 20", "non-triangular", all_nontriangular ? "non-triangular" : "triangular at " + bad,
          all_nontriangular);

  auto is_trivial = [](const A& phi) {
    const auto w = vdk_factor(phi);
    return w.factors.empty() && w.tail.is_identity();
  };
  const A commutator = compose(compose(compose(Sp, T), Spi), Ti);
  rep.add("gamma.word", "S' T S'^-1 T^-1", "nontrivial", is_trivial(commutator) ? "identity" : "nontrivial",
          !is_trivial(commutator));

  auto apow = [](const A& g, const A& gi, long e) {
    A r = A::identity({});
    for (long i = 0; i < (e < 0 ? -e : e); ++i) r = compose(r, e < 0 ? gi : g);
    return r;
  };
  std::mt19937_64 rng(seed);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  auto nonzero = [&](long bound) {
    long v = 0;
    while (v == 0) v = pick(-bound, bound);
    return v;
  };
  for (unsigned i = 0; i < words; ++i) {
    // alternate K1 \ C = {S^a S'^b, b != 0} and K2 \ C = {S^a T^c, c != 0}
    const long len = pick(1, 5);
    bool from_k1 = pick(0, 1) == 1;
    A phi = A::identity({});
    std::string name;
    for (long j = 0; j < len; ++j, from_k1 = !from_k1) {
      const long a = pick(-2, 2), b = nonzero(2);
      const A s = apow(S, Si, a);
      const A piece = from_k1 ? compose(s, apow(Sp, Spi, b)) : compose(s, apow(T, Ti, b));
      phi = compose(phi, piece);
      name += (name.empty() ? "" : " ") + std::string("S^") + std::to_string(a) + (from_k1 ? " S'^" : " T^") +
              std::to_string(b);
    }
    const bool trivial = is_trivial(phi);
    rep.add("gamma.random_word", name, "nontrivial", trivial ? "identity" : "nontrivial", !trivial);
  }
  return rep;
}

}  // namespace planeaut
