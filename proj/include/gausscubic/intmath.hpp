#ifndef GAUSSCUBIC_INTMATH_HPP_
#define GAUSSCUBIC_INTMATH_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "gausscubic/errors.hpp"

namespace gausscubic {

// Plain 64-bit number theory for the desk-scale moduli this library works with
// (field sizes are capped around 10^6, so trial division is more than enough).

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull}) {
    if (n % d == 0) return n == d;
  }
  // 30-wheel trial division
  static constexpr std::uint64_t wheel[] = {1, 7, 11, 13, 17, 19, 23, 29};
  for (std::uint64_t base = 0;; base += 30) {
    for (std::uint64_t off : wheel) {
      std::uint64_t d = base + off;
      if (d < 7) continue;
      if (d * d > n) return true;
      if (n % d == 0) return false;
    }
  }
}

inline std::vector<long long> primes_upto(long long n) {
  std::vector<long long> out;
  if (n < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(n) + 1, true);
  for (long long i = 2; i <= n; ++i) {
    if (!sieve[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (long long j = i * i; j <= n; j += i) sieve[static_cast<std::size_t>(j)] = false;
  }
  return out;
}

// Distinct prime divisors with multiplicities, by trial division.
inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  // extended Euclid; requires gcd(a, m) == 1
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) fail(Errc::invalid_params, "inv_mod: arguments not coprime");
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<std::uint64_t>(t);
}

// Legendre symbol (a/p) for odd prime p, values in {-1, 0, 1}.
inline int legendre(long long a, long long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  std::uint64_t e = pow_mod(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>((p - 1) / 2),
                            static_cast<std::uint64_t>(p));
  return e == 1 ? 1 : -1;
}

}  // namespace gausscubic

#endif  // GAUSSCUBIC_INTMATH_HPP_
