#pragma once

#include <cstdint>

namespace chi {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
inline u64 addmod(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return (s >= p || s < a) ? s - p : s;
}
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }
inline u64 negmod(u64 a, u64 p) { return a == 0 ? 0 : p - a; }

inline u64 powmod(u64 base, u64 e, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return result;
}

// p prime, a != 0 mod p.
inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Euler criterion: +1 for a nonzero square, -1 for a non-square, 0 for zero.
inline int legendre(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace chi
