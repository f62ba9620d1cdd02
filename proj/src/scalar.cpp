#include "planeaut/scalar.hpp"

#include <cctype>

namespace planeaut {

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + std::string(text) + "'", 0);
  if (q.get_den() == 0) throw DomainError("rational with zero denominator");
  q.canonicalize();
  return Rational(q);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeContext Fp::make_context(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 32)) throw DomainError("prime too large for F_p backend");
  return PrimeContext{p};
}

Fp Fp::pow(std::uint64_t e) const {
  Fp base = *this;
  Fp r = make(1 % p_, p_);
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

}  // namespace planeaut
