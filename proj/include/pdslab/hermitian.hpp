#pragma once

// The generalized quadrangle H(3, q^2): totally isotropic points and lines of
// the Hermitian form b(x, y) = x1 y1^q + x2 y4^q + x3 y3^q + x4 y2^q on
// GF(q^2)^4, with the ovoid cut out by x1 = 0.

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pdslab/finite_field.hpp"
#include "pdslab/group.hpp"

namespace pdslab {

using Vec4 = std::array<FieldElem, 4>;

FieldElem hermitian_form(const GaloisField& f, const Vec4& x, const Vec4& y);

/// Scales x so that its last nonzero coordinate is 1. Throws on the zero vector.
Vec4 canonical_point(const GaloisField& f, Vec4 x);

Vec4 apply(const GaloisField& f, const Matrix& m, const Vec4& x);

inline constexpr std::int64_t kDefaultGeometryCap = 9;

class HermitianGeometry {
 public:
  /// Throws std::invalid_argument unless q is a prime power, std::length_error if q > cap.
  static HermitianGeometry build(std::int64_t q, std::int64_t cap = kDefaultGeometryCap);

  std::int64_t q() const { return q_; }
  const FieldPtr& field() const { return field_; }
  const std::vector<Vec4>& points() const { return points_; }
  /// Each line as its sorted point indices.
  const std::vector<std::vector<std::uint32_t>>& lines() const { return lines_; }
  const std::vector<std::uint32_t>& lines_on(std::uint32_t point) const { return lines_on_[point]; }
  /// Ovoid point indices (x1 = 0), ascending.
  const std::vector<std::uint32_t>& ovoid() const { return ovoid_; }
  std::uint32_t p0() const { return p0_; }

  std::optional<std::uint32_t> point_index(const Vec4& x) const;
  /// The line through two distinct collinear points, if any.
  std::optional<std::uint32_t> line_through(std::uint32_t a, std::uint32_t b) const;
  bool on_line(std::uint32_t point, std::uint32_t line) const;

  /// Point permutation induced by m; throws std::invalid_argument if m does not preserve the point set.
  std::vector<std::uint32_t> point_permutation(const Matrix& m) const;
  /// Line permutation induced by a point permutation that preserves collinearity.
  std::vector<std::uint32_t> line_permutation(const std::vector<std::uint32_t>& point_perm) const;

 private:
  std::uint64_t key(const Vec4& canonical) const;

  std::int64_t q_ = 0;
  FieldPtr field_;
  std::vector<Vec4> points_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::vector<std::uint32_t>> lines_;
  std::vector<std::vector<std::uint32_t>> lines_on_;
  std::vector<std::uint32_t> ovoid_;
  std::uint32_t p0_ = 0;
};

}  // namespace pdslab
