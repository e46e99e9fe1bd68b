#include "orbitcount/intutil.hpp"

#include <algorithm>
#include <cmath>

namespace oc {

i64 isqrt64(i64 n) {
  if (n < 0) throw std::domain_error("isqrt64: negative input");
  if (n == 0) return 0;
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool isSquare64(i64 n) {
  if (n < 0) return false;
  i64 r = isqrt64(n);
  return r * r == n;
}

std::vector<i64> totientTable(i64 n) {
  std::vector<i64> phi(n + 1);
  for (i64 i = 0; i <= n; ++i) phi[i] = i;
  for (i64 p = 2; p <= n; ++p) {
    if (phi[p] == p) {  // p prime
      for (i64 k = p; k <= n; k += p) phi[k] -= phi[k] / p;
    }
  }
  return phi;
}

std::vector<i64> spfTable(i64 n) {
  std::vector<i64> spf(n + 1, 0);
  for (i64 i = 2; i <= n; ++i) {
    if (spf[i] == 0) {
      for (i64 k = i; k <= n; k += i)
        if (spf[k] == 0) spf[k] = i;
    }
  }
  return spf;
}

namespace {

i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<__int128>(a) * b % m);
}

i64 powmod(i64 a, i64 e, i64 m) {
  i64 r = 1 % m;
  a = mod(a, m);
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Tonelli-Shanks: one square root of a mod odd prime p, or -1 if none.
i64 sqrtModPrime(i64 a, i64 p) {
  a = mod(a, p);
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) return -1;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  // write p-1 = q*2^s with q odd
  i64 q = p - 1, s = 0;
  while (q % 2 == 0) { q /= 2; ++s; }
  // find a quadratic non-residue z
  i64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  i64 m = s;
  i64 c = powmod(z, q, p);
  i64 t = powmod(a, q, p);
  i64 r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    i64 t2 = t, i = 0;
    while (t2 != 1) { t2 = mulmod(t2, t2, p); ++i; }
    i64 b = c;
    for (i64 j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

// All roots of x^2 = a (mod p^k), p odd prime. Handles a divisible by p by
// direct descent; intended for small k / moderate p^k.
std::vector<i64> sqrtModOddPrimePower(i64 a, i64 p, i64 pk) {
  a = mod(a, pk);
  std::vector<i64> out;
  if (a == 0) {
    // x must be divisible by p^ceil(k/2)
    i64 k = 0;
    for (i64 t = pk; t > 1; t /= p) ++k;
    i64 step = 1;
    for (i64 j = 0; j < (k + 1) / 2; ++j) step *= p;
    for (i64 x = 0; x < pk; x += step) out.push_back(x);
    return out;
  }
  if (a % p == 0) {
    // a = p^2m * b with b unit: roots are p^m * (roots of b mod pk/p^2m),
    // extended over the kernel. Keep it simple: brute force only when the
    // modulus is tiny; otherwise factor out p^2.
    if (a % (p * p) != 0) return out;  // valuation 1: no roots
    i64 sub = pk / (p * p);
    if (sub == 1) {
      for (i64 x = 0; x < pk; ++x)
        if (mulmod(x, x, pk) == a) out.push_back(x);
      return out;
    }
    auto inner = sqrtModOddPrimePower((a / (p * p)) % sub, p, sub);
    for (i64 r : inner) {
      for (i64 x = r * p; x < pk; x += sub * p) out.push_back(mod(x, pk));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  i64 r = sqrtModPrime(a % p, p);
  if (r < 0) return out;
  // Hensel lift to pk
  i64 m = p;
  while (m < pk) {
    i64 m2 = m * p;
    // r' = r - (r^2-a)/(2r) mod m2
    i64 f = mod(mulmod(r, r, m2) - mod(a, m2), m2);
    i64 inv2r = powmod(mod(2 * r, m2), -1 + (m2 / p) * (p - 1), m2);  // Euler inverse
    r = mod(r - mulmod(f, inv2r, m2), m2);
    m = m2;
  }
  out.push_back(r);
  out.push_back(pk - r);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// All roots of x^2 = a (mod 2^k).
std::vector<i64> sqrtModTwoPower(i64 a, i64 twok) {
  a = mod(a, twok);
  std::vector<i64> out;
  if (twok <= 64) {
    for (i64 x = 0; x < twok; ++x)
      if (mod(x * x - a, twok) == 0) out.push_back(x);
    return out;
  }
  // lift from half modulus
  auto half = sqrtModTwoPower(mod(a, twok / 2), twok / 2);
  for (i64 r : half) {
    for (i64 x : {r, r + twok / 2}) {
      if (mod(mulmod(x, x, twok) - a, twok) == 0) out.push_back(mod(x, twok));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<i64> squareRootsMod(i64 a, i64 m, const std::vector<i64>& spf) {
  if (m <= 0) throw std::domain_error("squareRootsMod: modulus must be positive");
  if (m == 1) return {0};
  if (static_cast<std::size_t>(m) >= spf.size())
    throw std::domain_error("squareRootsMod: spf table too small");
  a = mod(a, m);
  // factor m
  std::vector<std::pair<i64, i64>> fac;  // (p, p^k)
  i64 t = m;
  while (t > 1) {
    i64 p = spf[t], pk = 1;
    while (t % p == 0) { t /= p; pk *= p; }
    fac.emplace_back(p, pk);
  }
  // roots per prime power, then CRT
  std::vector<i64> roots{0};
  i64 mm = 1;
  for (auto [p, pk] : fac) {
    std::vector<i64> rs = (p == 2) ? sqrtModTwoPower(a % pk, pk)
                                   : sqrtModOddPrimePower(a % pk, p, pk);
    if (rs.empty()) return {};
    std::vector<i64> next;
    next.reserve(roots.size() * rs.size());
    for (i64 x : roots) {
      for (i64 r : rs) {
        // solve y = x (mod mm), y = r (mod pk)
        i64 g, u, v;
        g = std::gcd(mm, pk);
        (void)g;  // coprime by construction
        // extended gcd
        i64 a0 = mm, b0 = pk, u0 = 1, v0 = 0, u1 = 0, v1 = 1;
        while (b0) {
          i64 q = a0 / b0;
          std::swap(a0 -= q * b0, b0);
          std::swap(u0 -= q * u1, u1);
          std::swap(v0 -= q * v1, v1);
        }
        (void)v0;
        i64 M = mm * pk;
        __int128 y = (__int128)x + (__int128)mm * ((__int128)u0 * (r - x) % pk);
        i64 yy = static_cast<i64>(((y % M) + M) % M);
        next.push_back(yy);
      }
    }
    roots.swap(next);
    mm *= pk;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace oc
