#pragma once

/**
 * @file finite_field.hpp
 * @brief GF(p^d) in polynomial basis, backed by log/antilog tables.
 *
 * An element is stored as the integer sum c_i p^i of its coefficient vector,
 * so equality and hashing on FieldElem agree with the canonical coefficient
 * representation. The modulus is the lexicographically least monic
 * irreducible polynomial of degree d, comparing (c_{d-1}, ..., c_0).
 */

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace pdslab {

struct FieldElem {
  std::uint32_t value = 0;
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

struct FieldSpec {
  std::int64_t p = 2;
  int d = 1;
  /// Low-to-high coefficients of the monic modulus (size d + 1, last entry 1).
  std::vector<std::int64_t> modulus;
};

/// True iff the monic polynomial (low-to-high coefficients) is irreducible over GF(p).
bool is_irreducible(std::span<const std::int64_t> poly, std::int64_t p);

/// Lexicographically least monic irreducible polynomial of degree d over GF(p).
std::vector<std::int64_t> least_irreducible(std::int64_t p, int d);

class GaloisField {
 public:
  /// GF(p^d) with the least irreducible modulus. Requires p^d <= 2^20.
  static std::shared_ptr<const GaloisField> create(std::int64_t p, int d);
  /// GF(p^d) for an explicit modulus; irreducibility is verified.
  static std::shared_ptr<const GaloisField> create(const FieldSpec& spec);
  /// GF(q^2) for a prime power q, built as a degree-2d extension of GF(p).
  static std::shared_ptr<const GaloisField> quadratic_extension(std::int64_t q);

  const FieldSpec& spec() const { return spec_; }
  std::int64_t characteristic() const { return spec_.p; }
  int degree() const { return spec_.d; }
  std::int64_t order() const { return order_; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem from_int(std::int64_t n) const;
  FieldElem from_coeffs(std::span<const std::int64_t> coeffs) const;
  std::vector<std::int64_t> coeffs(FieldElem a) const;
  FieldElem element(std::uint32_t value) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem neg(FieldElem a) const { return FieldElem{neg_[a.value]}; }
  FieldElem mul(FieldElem a, FieldElem b) const {
    if (a.value == 0 || b.value == 0) return zero();
    return FieldElem{exp_[log_[a.value] + log_[b.value]]};
  }
  /// Throws std::domain_error for a == 0.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::int64_t n) const;

  /// Multiplicative order of a nonzero element.
  std::int64_t multiplicative_order(FieldElem a) const;
  /// The least (by value) generator of the multiplicative group.
  FieldElem primitive_element() const { return FieldElem{exp_[1]}; }
  /// An element of multiplicative order exactly n; n must divide order()-1.
  FieldElem element_of_order(std::int64_t n) const;

  /// Square-order fields only: q with order() == q^2.
  bool has_square_order() const { return spec_.d % 2 == 0; }
  std::int64_t sqrt_order() const;
  /// x -> x^q on GF(q^2). Throws std::domain_error if the order is not a square.
  FieldElem frobenius_q(FieldElem a) const;
  /// Elements of the subfield GF(q) inside GF(q^2), ascending by value.
  std::span<const FieldElem> ground_subfield() const;

  std::vector<FieldElem> elements() const;

 private:
  explicit GaloisField(FieldSpec spec);

  FieldSpec spec_;
  std::int64_t order_ = 0;
  std::vector<std::uint32_t> exp_;  // length 2(order-1), exp_[i] = xi^i
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> add_table_;  // order^2 entries when small enough
  std::vector<std::uint32_t> frob_;
  std::vector<FieldElem> subfield_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// All (alpha, beta) in GF(q^2)^2 with alpha + alpha^q + beta^(q+1) = 0.
std::vector<std::pair<FieldElem, FieldElem>> hermitian_trace_zero_pairs(const GaloisField& field);

}  // namespace pdslab
