#include "pdslab/finite_field.hpp"

#include <stdexcept>
#include <string>

#include "pdslab/number_theory.hpp"

namespace pdslab {

namespace {

using Poly = std::vector<std::int64_t>;  // low-to-high, coefficients in [0, p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_mod(Poly a, const Poly& b, std::int64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    std::int64_t lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = floor_mod(a[shift + i] - lead * b[i], p);
    trim(a);
  }
  return a;
}

Poly decode(std::uint64_t value, std::int64_t p, int d) {
  Poly c(d, 0);
  for (int i = 0; i < d; ++i) {
    c[i] = static_cast<std::int64_t>(value % p);
    value /= p;
  }
  return c;
}

std::uint32_t encode(const Poly& c, std::int64_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + static_cast<std::uint64_t>(c[i]);
  return static_cast<std::uint32_t>(v);
}

}  // namespace

bool is_irreducible(std::span<const std::int64_t> poly, std::int64_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1) throw std::invalid_argument("is_irreducible: expects a monic polynomial of degree >= 1");
  const int d = static_cast<int>(f.size()) - 1;
  for (int e = 1; 2 * e <= d; ++e) {
    std::int64_t count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (std::int64_t low = 0; low < count; ++low) {
      Poly g = decode(static_cast<std::uint64_t>(low), p, e);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> least_irreducible(std::int64_t p, int d) {
  if (!is_prime(p) || d < 1) throw std::invalid_argument("least_irreducible: need prime p and d >= 1");
  std::int64_t size = 1;
  for (int i = 0; i < d; ++i) {
    size *= p;
    if (size > (1 << 20)) throw std::invalid_argument("least_irreducible: p^d exceeds 2^20");
  }
  std::int64_t count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (std::int64_t low = 0; low < count; ++low) {
    Poly f = decode(static_cast<std::uint64_t>(low), p, d);
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::shared_ptr<const GaloisField> GaloisField::create(std::int64_t p, int d) {
  return create(FieldSpec{p, d, least_irreducible(p, d)});
}

std::shared_ptr<const GaloisField> GaloisField::create(const FieldSpec& spec) {
  if (!is_prime(spec.p)) throw std::invalid_argument("GaloisField: characteristic must be prime");
  if (spec.d < 1 || spec.d > 20) throw std::invalid_argument("GaloisField: degree must be in [1, 20]");
  std::int64_t size = 1;
  for (int i = 0; i < spec.d; ++i) {
    size *= spec.p;
    if (size > (1 << 20)) throw std::invalid_argument("GaloisField: order exceeds 2^20");
  }
  if (static_cast<int>(spec.modulus.size()) != spec.d + 1 || spec.modulus.back() != 1)
    throw std::invalid_argument("GaloisField: modulus must be monic of degree d");
  for (auto c : spec.modulus)
    if (c < 0 || c >= spec.p) throw std::invalid_argument("GaloisField: modulus coefficients must lie in [0, p)");
  if (!is_irreducible(spec.modulus, spec.p)) throw std::invalid_argument("GaloisField: modulus is reducible");
  return std::shared_ptr<const GaloisField>(new GaloisField(spec));
}

std::shared_ptr<const GaloisField> GaloisField::quadratic_extension(std::int64_t q) {
  auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument("quadratic_extension: q must be a prime power");
  return create(pp->first, 2 * pp->second);
}

GaloisField::GaloisField(FieldSpec spec) : spec_(std::move(spec)) {
  const std::int64_t p = spec_.p;
  const int d = spec_.d;
  order_ = 1;
  for (int i = 0; i < d; ++i) order_ *= p;

  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    Poly x = decode(a, p, d), y = decode(b, p, d);
    Poly z(2 * d, 0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
    Poly r = poly_mod(z, spec_.modulus, p);
    r.resize(d, 0);
    return encode(r, p);
  };

  const std::int64_t n = order_ - 1;
  std::vector<std::int64_t> primes = n > 1 ? prime_factors(n) : std::vector<std::int64_t>{};
  auto slow_pow = [&](std::uint32_t a, std::int64_t e) {
    std::uint32_t r = 1;
    while (e > 0) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint32_t xi = 0;
  for (std::uint32_t cand = 1; cand < order_; ++cand) {
    bool primitive = true;
    for (auto l : primes)
      if (slow_pow(cand, n / l) == 1) { primitive = false; break; }
    if (primitive) { xi = cand; break; }
  }
  if (xi == 0) throw std::logic_error("GaloisField: no primitive element");

  exp_.assign(2 * n, 0);
  log_.assign(order_, 0);
  std::uint32_t cur = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    exp_[i] = cur;
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = slow_mul(cur, xi);
  }
  if (cur != 1) throw std::logic_error("GaloisField: primitive element has wrong order");
  for (std::int64_t i = n; i < 2 * n; ++i) exp_[i] = exp_[i - n];

  neg_.assign(order_, 0);
  for (std::uint32_t a = 0; a < order_; ++a) {
    Poly c = decode(a, p, d);
    for (auto& x : c) x = (p - x) % p;
    neg_[a] = encode(c, p);
  }
  if (order_ <= 1024) {
    add_table_.assign(order_ * order_, 0);
    for (std::uint32_t a = 0; a < order_; ++a) {
      Poly x = decode(a, p, d);
      for (std::uint32_t b = 0; b < order_; ++b) {
        Poly y = decode(b, p, d);
        for (int i = 0; i < d; ++i) y[i] = (x[i] + y[i]) % p;
        add_table_[a * order_ + b] = encode(y, p);
      }
    }
  }
  if (d % 2 == 0) {
    const std::int64_t q = sqrt_order();
    frob_.assign(order_, 0);
    for (std::uint32_t a = 1; a < order_; ++a) frob_[a] = exp_[(static_cast<std::int64_t>(log_[a]) * q) % n];
    for (std::uint32_t a = 0; a < order_; ++a)
      if (frob_[a] == a) subfield_.push_back(FieldElem{a});
  }
}

FieldElem GaloisField::from_int(std::int64_t n) const {
  return FieldElem{static_cast<std::uint32_t>(floor_mod(n, spec_.p))};
}

FieldElem GaloisField::from_coeffs(std::span<const std::int64_t> coeffs) const {
  if (static_cast<int>(coeffs.size()) > spec_.d) throw std::invalid_argument("from_coeffs: too many coefficients");
  Poly c(coeffs.begin(), coeffs.end());
  for (auto& x : c) x = floor_mod(x, spec_.p);
  return FieldElem{encode(c, spec_.p)};
}

std::vector<std::int64_t> GaloisField::coeffs(FieldElem a) const { return decode(a.value, spec_.p, spec_.d); }

FieldElem GaloisField::element(std::uint32_t value) const {
  if (value >= order_) throw std::out_of_range("field element value out of range");
  return FieldElem{value};
}

FieldElem GaloisField::add(FieldElem a, FieldElem b) const {
  if (!add_table_.empty()) return FieldElem{add_table_[a.value * order_ + b.value]};
  Poly x = decode(a.value, spec_.p, spec_.d), y = decode(b.value, spec_.p, spec_.d);
  for (int i = 0; i < spec_.d; ++i) x[i] = (x[i] + y[i]) % spec_.p;
  return FieldElem{encode(x, spec_.p)};
}

FieldElem GaloisField::inv(FieldElem a) const {
  if (a.value == 0) throw std::domain_error("division by zero in GF(" + std::to_string(order_) + ")");
  const std::int64_t n = order_ - 1;
  return FieldElem{exp_[(n - log_[a.value]) % n]};
}

FieldElem GaloisField::pow(FieldElem a, std::int64_t e) const {
  if (a.value == 0) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return e == 0 ? one() : zero();
  }
  const std::int64_t n = order_ - 1;
  std::int64_t l = static_cast<std::int64_t>(static_cast<__int128>(log_[a.value]) * floor_mod(e, n) % n);
  return FieldElem{exp_[l]};
}

std::int64_t GaloisField::multiplicative_order(FieldElem a) const {
  if (a.value == 0) throw std::domain_error("zero has no multiplicative order");
  const std::int64_t n = order_ - 1;
  return n / gcd(n, log_[a.value]);
}

FieldElem GaloisField::element_of_order(std::int64_t n) const {
  if (n < 1 || (order_ - 1) % n != 0)
    throw std::invalid_argument("element_of_order: " + std::to_string(n) + " does not divide " +
                                std::to_string(order_ - 1));
  return pow(primitive_element(), (order_ - 1) / n);
}

std::int64_t GaloisField::sqrt_order() const {
  if (!has_square_order()) throw std::domain_error("field order is not a square");
  std::int64_t q = 1;
  for (int i = 0; i < spec_.d / 2; ++i) q *= spec_.p;
  return q;
}

FieldElem GaloisField::frobenius_q(FieldElem a) const {
  if (!has_square_order())
    throw std::domain_error("frobenius_q: GF(" + std::to_string(order_) + ") is not of square order");
  return FieldElem{frob_[a.value]};
}

std::span<const FieldElem> GaloisField::ground_subfield() const {
  if (!has_square_order()) throw std::domain_error("ground_subfield: field order is not a square");
  return subfield_;
}

std::vector<FieldElem> GaloisField::elements() const {
  std::vector<FieldElem> out(order_);
  for (std::uint32_t i = 0; i < order_; ++i) out[i] = FieldElem{i};
  return out;
}

std::vector<std::pair<FieldElem, FieldElem>> hermitian_trace_zero_pairs(const GaloisField& field) {
  const std::int64_t q = field.sqrt_order();
  std::vector<std::pair<FieldElem, FieldElem>> out;
  for (auto a : field.elements()) {
    FieldElem tr = field.add(a, field.frobenius_q(a));
    for (auto b : field.elements()) {
      FieldElem norm = field.pow(b, q + 1);
      if (field.add(tr, norm) == field.zero()) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace pdslab
