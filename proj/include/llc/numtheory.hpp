#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace llc::nt {

using i64 = std::int64_t;
using i128 = __int128;

inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

inline i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>((static_cast<i128>(mod(a, m)) * mod(b, m)) % m);
}

inline i64 powmod(i64 a, i64 e, i64 m) {
  i64 r = 1 % m;
  a = mod(a, m);
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

inline i64 ipow(i64 b, int e) {
  i64 r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
i64 invmod(i64 a, i64 m);

inline i64 lcm(i64 a, i64 b) { return a / std::gcd(a, b) * b; }

/// Prime factorisation as (prime, exponent) pairs in increasing order.
std::vector<std::pair<i64, int>> factor(i64 n);

bool is_prime(i64 n);

/// v_p(n) for n != 0.
int valuation(i64 n, i64 p);

/// Legendre symbol (u/p) for u prime to p, p an odd prime.
int legendre(i64 u, i64 p);

/// Smallest quadratic non-residue modulo the odd prime p.
i64 least_nonresidue(i64 p);

/// Smallest primitive root modulo the odd prime p.
i64 primitive_root(i64 p);

}  // namespace llc::nt
