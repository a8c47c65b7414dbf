#include "factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace graphlab::detail {

namespace {

__extension__ using Wide = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1U) {
      result = mul_mod(result, base, m);
    }
    base = mul_mod(base, base, m);
    exponent >>= 1U;
  }
  return result;
}

// Brent's variant of Pollard's rho; returns a nontrivial factor of odd composite n.
std::uint64_t rho(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2;
    std::uint64_t x = 2;
    std::uint64_t g = 1;
    std::uint64_t q = 1;
    std::uint64_t ys = 2;
    constexpr std::uint64_t kBlock = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1U) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) {
        y = f(y);
      }
      for (std::uint64_t k = 0; k < r && g == 1; k += kBlock) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBlock, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) {
      return g;
    }
  }
}

void split(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) {
    return;
  }
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  const std::uint64_t d = rho(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (const std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) {
      return n == p;
    }
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (const std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) {
      continue;
    }
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) {
      return false;
    }
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> found;
  for (std::uint64_t p = 2; p < 1000 && p <= n / p; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      n /= p;
      ++found[p];
    }
  }
  if (n > 1) {
    split(n, found);
  }
  return {found.begin(), found.end()};
}

}  // namespace graphlab::detail
