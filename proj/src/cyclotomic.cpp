#include "pdslab/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "pdslab/number_theory.hpp"

namespace pdslab {

namespace {

using Poly = std::vector<std::int64_t>;

// Exact division of a by a monic b over Z.
Poly divide_exact(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    std::int64_t c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

const Poly& cached_phi(std::int64_t e) {
  static std::mutex mu;
  static std::map<std::int64_t, Poly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  Poly p(e + 1, 0);  // x^e - 1
  p[0] = -1;
  p[e] = 1;
  for (std::int64_t d = 1; d < e; ++d) {
    if (e % d != 0) continue;
    Poly phi_d{-1, 1};
    if (d > 1) {
      Poly x(d + 1, 0);
      x[0] = -1;
      x[d] = 1;
      for (std::int64_t d2 = 1; d2 < d; ++d2)
        if (d % d2 == 0) {
          auto f = cache.find(d2);
          if (f == cache.end()) throw std::logic_error("cyclotomic cache miss");
          x = divide_exact(x, f->second);
        }
      phi_d = x;
    }
    cache.emplace(d, phi_d);
    p = divide_exact(p, cache.at(d));
  }
  return cache.emplace(e, p).first->second;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t e) {
  if (e < 1) throw std::invalid_argument("cyclotomic_polynomial: e must be positive");
  return cached_phi(e);
}

Cyclotomic::Cyclotomic(std::int64_t e) : e_(e) {
  if (e < 1) throw std::invalid_argument("Cyclotomic: conductor must be positive");
  coeffs_.assign(cached_phi(e).size() - 1, 0);
}

Cyclotomic Cyclotomic::integer(std::int64_t e, std::int64_t n) {
  Cyclotomic c(e);
  c.coeffs_[0] = n;
  return c;
}

Cyclotomic Cyclotomic::from_coefficients(std::int64_t e, std::vector<std::int64_t> c) {
  Cyclotomic out(e);
  out.coeffs_.assign(e, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto& slot = out.coeffs_[i % static_cast<std::size_t>(e)];
    slot = checked_add(slot, c[i]);
  }
  out.reduce();
  return out;
}

Cyclotomic Cyclotomic::zeta_power(std::int64_t e, std::int64_t j) {
  Cyclotomic c(e);
  c.coeffs_.assign(e, 0);
  c.coeffs_[floor_mod(j, e)] = 1;
  c.reduce();
  return c;
}

void Cyclotomic::reduce() {
  const Poly& phi = cached_phi(e_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = coeffs_.size(); i-- > deg;) {
    std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j)
      coeffs_[i - deg + j] = checked_sub(coeffs_[i - deg + j], checked_mul(c, phi[j]));
  }
  coeffs_.resize(deg, 0);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.e_ != e_) throw std::invalid_argument("Cyclotomic: conductor mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.e_ != e_) throw std::invalid_argument("Cyclotomic: conductor mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_sub(coeffs_[i], o.coeffs_[i]);
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.e_ != b.e_) throw std::invalid_argument("Cyclotomic: conductor mismatch");
  Cyclotomic c(a.e_);
  c.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size(), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c.coeffs_[i + j] = checked_add(c.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  c.reduce();
  return c;
}

std::optional<std::int64_t> Cyclotomic::as_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_.empty() ? 0 : coeffs_[0];
}

std::string Cyclotomic::to_string() const {
  if (auto n = as_integer()) return std::to_string(*n);
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    std::int64_t a = c < 0 ? -c : c;
    if (i == 0) {
      out += std::to_string(a);
      continue;
    }
    if (a != 1) out += std::to_string(a) + "*";
    out += "z" + std::to_string(e_);
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace pdslab
