#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "planeaut/dense.hpp"
#include "planeaut/report.hpp"

namespace planeaut {

// ---- quasi-unipotence and logarithms (over Q) ----

/// Phi_d over Q.
Poly1<Rational> cyclotomic(unsigned d);

unsigned euler_phi(unsigned d);

/// Least n >= 1 with u^n unipotent, or nothing if some eigenvalue is not a
/// root of unity. Throws DomainError for singular u.
std::optional<unsigned long> quasi_unipotent_order(const DenseMat<Rational>& u);

/// log u = -sum_{m >= 1} (1 - u)^m / m, a finite sum for unipotent u.
DenseMat<Rational> unipotent_log(const DenseMat<Rational>& u);

/// exp of a nilpotent matrix.
DenseMat<Rational> nilpotent_exp(const DenseMat<Rational>& x);

/// With h u h^-1 = u^(2^k) and n the quasi-order of u, checks
/// h e h^-1 = 2^k e for e = log(u^n). A failed hypothesis throws DomainError.
bool log_scaling_check(const DenseMat<Rational>& h, const DenseMat<Rational>& u, unsigned k);

// ---- the groups G(r) = E x| F_p[E] ----

inline constexpr std::uint64_t kDefaultWorkBound = 200000;

/// (u, f) with u in E = F_p^r and f : E -> F_p, stored as values indexed by
/// the base-p encoding of the argument.
struct PGroupElem {
  unsigned p = 2;
  unsigned r = 1;
  std::vector<unsigned> u;
  std::vector<unsigned> f;

  static PGroupElem identity(unsigned p, unsigned r);
  /// (u, f)(u', f') = (u + u', f(. + u') + f').
  friend PGroupElem operator*(const PGroupElem& a, const PGroupElem& b);
  PGroupElem inverse() const;
  friend bool operator==(const PGroupElem&, const PGroupElem&) = default;
};

/// p^r * p^(p^r), saturating.
std::uint64_t pgroup_work(unsigned p, unsigned r);

/// Length of the upper central series of G(r), computed on the pair
/// structure: Z_k = U_k x V_k where V_k is cut out by linear conditions over
/// F_p and U_k by a fixed-point condition on E. Throws BoundExceeded above
/// work_bound.
unsigned pgroup_nilpotency_index(unsigned p, unsigned r, std::uint64_t work_bound = kDefaultWorkBound);

/// The same quantity by listing every element; only for groups of order at
/// most max_order.
unsigned pgroup_nilpotency_index_bruteforce(unsigned p, unsigned r, std::uint64_t max_order = 4096);

/// sum_{u in E} u^(p^r - 1) == prod_{u in E \ 0} u in F_p[x_1..x_r].
bool power_sum_identity(unsigned p, unsigned r, std::uint64_t bound = 27);

/// sum_{l in F_p} l^n == 0 unless n > 0 and (p - 1) | n, in which case -1.
bool power_sum_vanishing(unsigned p, unsigned n);

struct FreenessResult {
  bool criterion = false;  // sum over E of the translates of f is nonzero
  bool free = false;       // annihilator of f is zero
  bool consistent() const { return !criterion || free; }
};

/// f given by its values on E in base-p index order.
FreenessResult cyclic_module_is_free(unsigned p, unsigned r, const std::vector<unsigned>& f,
                                     std::uint64_t bound = 4096);

// ---- digit arithmetic ----

struct PAdicExpansion {
  unsigned base = 2;
  std::vector<unsigned> digits;  // least significant first

  static PAdicExpansion of(std::uint64_t n, unsigned base, std::size_t width = 0);
  std::uint64_t value() const;
};

struct DigitCounterexample {
  unsigned N = 0;
  unsigned a = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  friend bool operator==(const DigitCounterexample&, const DigitCounterexample&) = default;
};

/// Every N <= N_max, a < N, and n, m >= 1 prime to p with n m < p^N such that
/// n = m p^a (mod p^N - 1) but (a, n) != (0, m). Each congruence is also
/// recomputed by rotating the p-adic digits of m by a places.
std::vector<DigitCounterexample> digit_lemma_scan(unsigned p, unsigned N_max);

// ---- the group generated by S, S', T ----

/// Relations S S' = S' S and S T S^-1 = T^2, non-triangularity of S'^n, and
/// nontriviality of random reduced words of <S, S'> *_<S> <S, T>.
Report gamma_relations_check(std::uint64_t seed = 1, unsigned words = 10);

}  // namespace planeaut
