#include "pdslab/number_theory.hpp"

#include <cstdlib>
#include <stdexcept>

namespace pdslab {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt of a negative number");
  std::int64_t lo = 0;
  std::int64_t hi = 3037000500;  // floor(sqrt(2^63 - 1)) + 1
  while (lo + 1 < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (mid <= n / mid) lo = mid;
    else hi = mid;
  }
  return lo;
}

std::optional<std::int64_t> exact_sqrt(std::int64_t n) {
  if (n < 0) return std::nullopt;
  std::int64_t r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("floor_mod: modulus must be positive");
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(std::llabs(a) / gcd(a, b), std::llabs(b));
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t n) {
  if (n < 2) return std::nullopt;
  auto primes = prime_factors(n);
  if (primes.size() != 1) return std::nullopt;
  int d = 0;
  for (std::int64_t m = n; m > 1; m /= primes[0]) ++d;
  return std::make_pair(primes[0], d);
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("prime_factors: argument must be positive");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (exp < 0) throw std::invalid_argument("pow_mod: negative exponent");
  __int128 result = 1 % m;
  __int128 b = floor_mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  if (gcd(a, m) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
  if (m == 1) return 1;
  std::int64_t x = floor_mod(a, m);
  std::int64_t k = 1;
  for (std::int64_t y = x; y != 1; y = static_cast<std::int64_t>(static_cast<__int128>(y) * x % m)) ++k;
  return k;
}

}  // namespace pdslab
