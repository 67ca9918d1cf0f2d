#pragma once

// Exact elements of Z[zeta_e], stored as integer coefficients of 1, zeta, ...
// and kept reduced modulo the e-th cyclotomic polynomial so that equality is
// plain vector equality.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pdslab {

/// Integer coefficients (low to high) of the e-th cyclotomic polynomial.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t e);

class Cyclotomic {
 public:
  explicit Cyclotomic(std::int64_t e = 1);
  static Cyclotomic integer(std::int64_t e, std::int64_t n);
  /// sum_j c_j zeta_e^j for an arbitrary-length coefficient list.
  static Cyclotomic from_coefficients(std::int64_t e, std::vector<std::int64_t> c);
  /// zeta_e^j for any integer j.
  static Cyclotomic zeta_power(std::int64_t e, std::int64_t j);

  std::int64_t conductor() const { return e_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) = default;

  /// The value as an integer when it is rational, otherwise nullopt.
  std::optional<std::int64_t> as_integer() const;
  std::string to_string() const;

 private:
  void reduce();

  std::int64_t e_;
  std::vector<std::int64_t> coeffs_;  // length phi(e) after reduction
};

}  // namespace pdslab
