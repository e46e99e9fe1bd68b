#ifndef ORBITCOUNT_INTUTIL_HPP
#define ORBITCOUNT_INTUTIL_HPP

// Small integer utilities shared by the enumeration layer: gcd/isqrt on
// 64-bit values, a smallest-prime-factor sieve, Euler totients, and square
// roots modulo composite integers (factor, lift, CRT-combine).

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oc {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/** Integer square root: largest r with r*r <= n (n >= 0). */
i64 isqrt64(i64 n);

/** True iff n is a perfect square (n >= 0). */
bool isSquare64(i64 n);

/** Euler totients phi(0..n) by sieve. */
std::vector<i64> totientTable(i64 n);

/** Smallest-prime-factor sieve for 2..n (spf[0]=spf[1]=0). */
std::vector<i64> spfTable(i64 n);

/**
 * All square roots of a mod m, i.e. x in [0,m) with x*x = a (mod m).
 * Uses the provided smallest-prime-factor table (must cover m).
 * Complexity ~ number of prime factors of m; intended for m up to ~1e7.
 */
std::vector<i64> squareRootsMod(i64 a, i64 m, const std::vector<i64>& spf);

/** Floor division for possibly-negative numerators. */
inline i64 floorDiv(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline i64 ceilDiv(i64 a, i64 b) { return -floorDiv(-a, b); }

/** a mod b in [0, |b|). */
inline i64 mod(i64 a, i64 b) {
  i64 r = a % b;
  if (r < 0) r += (b < 0 ? -b : b);
  return r;
}

}  // namespace oc

#endif
