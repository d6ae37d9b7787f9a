#ifndef MR2_FIELD_HPP
#define MR2_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mr2 {

/// Arithmetic in GF(p). Elements are residues in [0, p) stored as uint64_t.
/// p must be an odd prime below 2^62 so that products fit in 128 bits.
struct PrimeField {
  std::uint64_t p;

  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (prime < 2) throw std::invalid_argument("field characteristic must be >= 2");
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, p - 2);
  }
  /// Reduce a (possibly negative) machine integer into [0, p).
  std::uint64_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<std::uint64_t>(r);
  }

  bool operator==(const PrimeField& o) const { return p == o.p; }
};

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

/// Default working prime: 2^31 - 1 (Mersenne, fits double-word products).
inline constexpr std::uint64_t kDefaultPrime = 2147483647ull;

/// dst += c * src, elementwise mod p.
inline void row_axpy(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                     std::uint64_t c, const PrimeField& f) {
  const std::size_t n = dst.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (src[i]) dst[i] = f.add(dst[i], f.mul(c, src[i]));
  }
}

}  // namespace mr2

#endif
