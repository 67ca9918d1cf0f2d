#pragma once

// Exact integer helpers shared by the parameter and field code. Every
// product that can grow with v goes through the checked_* wrappers, which
// throw std::overflow_error instead of wrapping.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pdslab {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Floor of the square root of n >= 0.
std::int64_t isqrt(std::int64_t n);

/// The exact square root of n when n is a perfect square.
std::optional<std::int64_t> exact_sqrt(std::int64_t n);

/// Residue of a modulo m in [0, m).
std::int64_t floor_mod(std::int64_t a, std::int64_t m);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

bool is_prime(std::int64_t n);

/// (p, d) with n = p^d when n is a prime power, nullopt otherwise.
std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t n);

/// Distinct prime factors of n > 0, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t n);

/// base^exp mod m by repeated squaring (m > 0).
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
std::int64_t multiplicative_order(std::int64_t a, std::int64_t m);

}  // namespace pdslab
