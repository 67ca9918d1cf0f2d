#include "pdslab/hermitian.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pdslab/number_theory.hpp"

namespace pdslab {

FieldElem hermitian_form(const GaloisField& f, const Vec4& x, const Vec4& y) {
  FieldElem s = f.mul(x[0], f.frobenius_q(y[0]));
  s = f.add(s, f.mul(x[1], f.frobenius_q(y[3])));
  s = f.add(s, f.mul(x[2], f.frobenius_q(y[2])));
  return f.add(s, f.mul(x[3], f.frobenius_q(y[1])));
}

Vec4 canonical_point(const GaloisField& f, Vec4 x) {
  for (int i = 3; i >= 0; --i) {
    if (x[i] == f.zero()) continue;
    FieldElem s = f.inv(x[i]);
    for (auto& c : x) c = f.mul(c, s);
    return x;
  }
  throw std::invalid_argument("the zero vector is not a projective point");
}

Vec4 apply(const GaloisField& f, const Matrix& m, const Vec4& x) {
  if (m.n != 4) throw std::invalid_argument("expected a 4x4 matrix");
  Vec4 y{f.zero(), f.zero(), f.zero(), f.zero()};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) y[i] = f.add(y[i], f.mul(m.at(i, j), x[j]));
  return y;
}

std::uint64_t HermitianGeometry::key(const Vec4& c) const {
  const auto n = static_cast<std::uint64_t>(field_->order());
  return ((c[3].value * n + c[2].value) * n + c[1].value) * n + c[0].value;
}

std::optional<std::uint32_t> HermitianGeometry::point_index(const Vec4& x) const {
  auto it = index_.find(key(canonical_point(*field_, x)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> HermitianGeometry::line_through(std::uint32_t a, std::uint32_t b) const {
  for (auto l : lines_on_[a])
    if (std::binary_search(lines_[l].begin(), lines_[l].end(), b)) return l;
  return std::nullopt;
}

bool HermitianGeometry::on_line(std::uint32_t point, std::uint32_t line) const {
  return std::binary_search(lines_[line].begin(), lines_[line].end(), point);
}

std::vector<std::uint32_t> HermitianGeometry::point_permutation(const Matrix& m) const {
  std::vector<std::uint32_t> perm(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    auto j = point_index(apply(*field_, m, points_[i]));
    if (!j) throw std::invalid_argument("matrix does not preserve the isotropic points");
    perm[i] = *j;
  }
  return perm;
}

std::vector<std::uint32_t> HermitianGeometry::line_permutation(const std::vector<std::uint32_t>& pp) const {
  std::vector<std::uint32_t> perm(lines_.size());
  for (std::size_t l = 0; l < lines_.size(); ++l) {
    auto img = line_through(pp[lines_[l][0]], pp[lines_[l][1]]);
    if (!img) throw std::invalid_argument("point map does not preserve collinearity");
    perm[l] = *img;
  }
  return perm;
}

HermitianGeometry HermitianGeometry::build(std::int64_t q, std::int64_t cap) {
  if (!prime_power(q)) throw std::invalid_argument("H(3,q^2) needs a prime power q, got " + std::to_string(q));
  if (q > cap)
    throw std::length_error("q = " + std::to_string(q) + " exceeds the geometry cap of " + std::to_string(cap));
  HermitianGeometry h;
  h.q_ = q;
  h.field_ = GaloisField::quadratic_extension(q);
  const GaloisField& f = *h.field_;
  const auto Q = static_cast<std::uint32_t>(f.order());

  // Points, grouped by the position of the last nonzero coordinate.
  for (int last = 0; last < 4; ++last) {
    std::uint64_t count = 1;
    for (int i = 0; i < last; ++i) count *= Q;
    for (std::uint64_t c = 0; c < count; ++c) {
      Vec4 x{f.zero(), f.zero(), f.zero(), f.zero()};
      x[last] = f.one();
      std::uint64_t rest = c;
      for (int i = 0; i < last; ++i) {
        x[i] = FieldElem{static_cast<std::uint32_t>(rest % Q)};
        rest /= Q;
      }
      if (hermitian_form(f, x, x) == f.zero()) h.points_.push_back(x);
    }
  }
  std::sort(h.points_.begin(), h.points_.end(), [](const Vec4& a, const Vec4& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  for (std::uint32_t i = 0; i < h.points_.size(); ++i) h.index_.emplace(h.key(h.points_[i]), i);

  const std::int64_t q2 = q * q, q3 = q2 * q;
  if (static_cast<std::int64_t>(h.points_.size()) != (q2 + 1) * (q3 + 1))
    throw std::runtime_error("H(3,q^2) has " + std::to_string(h.points_.size()) + " points, expected " +
                             std::to_string((q2 + 1) * (q3 + 1)));

  // Lines through P: P^perp = <P> + M for a 2-space M, and each line through P
  // meets M in exactly one isotropic point.
  h.lines_on_.assign(h.points_.size(), {});
  for (std::uint32_t pi = 0; pi < h.points_.size(); ++pi) {
    const Vec4& p = h.points_[pi];
    Vec4 c{f.frobenius_q(p[0]), f.frobenius_q(p[3]), f.frobenius_q(p[2]), f.frobenius_q(p[1])};
    int pivot = 0;
    while (c[pivot] == f.zero()) ++pivot;
    int drop = -1;
    for (int i = 0; i < 4; ++i)
      if (i != pivot && p[i] != f.zero()) {
        drop = i;
        break;
      }
    if (drop < 0) throw std::logic_error("isotropic point with a single nonzero coordinate");
    std::vector<Vec4> basis;
    for (int i = 0; i < 4; ++i) {
      if (i == pivot || i == drop) continue;
      Vec4 v{f.zero(), f.zero(), f.zero(), f.zero()};
      v[i] = f.one();
      v[pivot] = f.neg(f.div(c[i], c[pivot]));
      basis.push_back(v);
    }
    auto combo = [&](FieldElem a, FieldElem b) {
      Vec4 v;
      for (int i = 0; i < 4; ++i) v[i] = f.add(f.mul(a, basis[0][i]), f.mul(b, basis[1][i]));
      return v;
    };
    std::vector<Vec4> candidates{combo(f.zero(), f.one())};
    for (std::uint32_t w = 0; w < Q; ++w) candidates.push_back(combo(f.one(), FieldElem{w}));
    for (const Vec4& y : candidates) {
      if (hermitian_form(f, y, y) != f.zero()) continue;
      const std::uint32_t yi = *h.point_index(y);
      if (h.line_through(pi, yi)) continue;
      std::vector<std::uint32_t> pts{pi};
      for (std::uint32_t a = 0; a < Q; ++a) {
        Vec4 z;
        for (int i = 0; i < 4; ++i) z[i] = f.add(y[i], f.mul(FieldElem{a}, p[i]));
        auto zi = h.point_index(z);
        if (!zi) throw std::runtime_error("a line of H(3,q^2) contains a non-isotropic point");
        pts.push_back(*zi);
      }
      std::sort(pts.begin(), pts.end());
      const auto li = static_cast<std::uint32_t>(h.lines_.size());
      for (auto x : pts) h.lines_on_[x].push_back(li);
      h.lines_.push_back(std::move(pts));
    }
  }

  // Canonical line order: sorted point-index vectors.
  {
    std::vector<std::uint32_t> order(h.lines_.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return h.lines_[a] < h.lines_[b]; });
    std::vector<std::vector<std::uint32_t>> sorted;
    std::vector<std::uint32_t> new_id(order.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) {
      new_id[order[i]] = i;
      sorted.push_back(std::move(h.lines_[order[i]]));
    }
    h.lines_ = std::move(sorted);
    for (auto& ls : h.lines_on_) {
      for (auto& l : ls) l = new_id[l];
      std::sort(ls.begin(), ls.end());
    }
  }

  if (static_cast<std::int64_t>(h.lines_.size()) != (q + 1) * (q3 + 1))
    throw std::runtime_error("H(3,q^2) has " + std::to_string(h.lines_.size()) + " lines, expected " +
                             std::to_string((q + 1) * (q3 + 1)));
  for (const auto& l : h.lines_)
    if (static_cast<std::int64_t>(l.size()) != q2 + 1) throw std::runtime_error("a line has the wrong size");
  for (const auto& ls : h.lines_on_)
    if (static_cast<std::int64_t>(ls.size()) != q + 1)
      throw std::runtime_error("a point lies on " + std::to_string(ls.size()) + " lines, expected " +
                               std::to_string(q + 1));

  for (std::uint32_t i = 0; i < h.points_.size(); ++i)
    if (h.points_[i][0] == f.zero()) h.ovoid_.push_back(i);
  if (static_cast<std::int64_t>(h.ovoid_.size()) != q3 + 1)
    throw std::runtime_error("ovoid has " + std::to_string(h.ovoid_.size()) + " points, expected " +
                             std::to_string(q3 + 1));
  std::vector<std::uint32_t> param{*h.point_index({f.zero(), f.one(), f.zero(), f.zero()})};
  for (auto [a, b] : hermitian_trace_zero_pairs(f)) {
    auto i = h.point_index({f.zero(), a, b, f.one()});
    if (!i) throw std::runtime_error("parametrised ovoid point is not isotropic");
    param.push_back(*i);
  }
  std::sort(param.begin(), param.end());
  if (param != h.ovoid_) throw std::runtime_error("the x1 = 0 slice differs from the parametrised ovoid");
  std::vector<std::uint8_t> in_ovoid(h.points_.size(), 0);
  for (auto i : h.ovoid_) in_ovoid[i] = 1;
  for (const auto& l : h.lines_) {
    int meets = 0;
    for (auto x : l) meets += in_ovoid[x];
    if (meets != 1) throw std::runtime_error("a line meets the ovoid in " + std::to_string(meets) + " points");
  }
  h.p0_ = *h.point_index({f.zero(), f.one(), f.zero(), f.zero()});
  return h;
}

}  // namespace pdslab
