#include <doctest.h>

#include <set>
#include <stdexcept>

#include "pdslab/finite_field.hpp"
#include "pdslab/number_theory.hpp"

using namespace pdslab;

namespace {

// Schoolbook polynomial arithmetic over GF(p), independent of the log tables.
struct PolyOracle {
  std::int64_t p;
  int d;
  std::vector<std::int64_t> modulus;

  std::vector<std::int64_t> digits(std::uint32_t v) const {
    std::vector<std::int64_t> c(d);
    for (int i = 0; i < d; ++i, v /= static_cast<std::uint32_t>(p)) c[i] = v % p;
    return c;
  }
  std::uint32_t value(const std::vector<std::int64_t>& c) const {
    std::int64_t v = 0;
    for (int i = d - 1; i >= 0; --i) v = v * p + c[i];
    return static_cast<std::uint32_t>(v);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < d; ++i) x[i] = (x[i] + y[i]) % p;
    return value(x);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a), y = digits(b);
    std::vector<std::int64_t> prod(2 * d, 0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (int k = 2 * d - 1; k >= d; --k) {
      const std::int64_t c = prod[k];
      if (!c) continue;
      for (int i = 0; i <= d; ++i) prod[k - d + i] = floor_mod(prod[k - d + i] - c * modulus[i], p);
    }
    prod.resize(d);
    return value(prod);
  }
};

}  // namespace

TEST_CASE("field arithmetic agrees with polynomial arithmetic") {
  for (auto [p, d] : std::vector<std::pair<std::int64_t, int>>{{2, 1}, {3, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2},
                                                                 {2, 4}, {5, 2}, {3, 3}, {2, 6}, {7, 2}}) {
    auto f = GaloisField::create(p, d);
    PolyOracle o{p, d, f->spec().modulus};
    const auto n = static_cast<std::uint32_t>(f->order());
    CAPTURE(p);
    CAPTURE(d);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        CHECK(f->add(FieldElem{a}, FieldElem{b}).value == o.add(a, b));
        CHECK(f->mul(FieldElem{a}, FieldElem{b}).value == o.mul(a, b));
      }
    for (std::uint32_t a = 1; a < n; ++a) CHECK(f->mul(FieldElem{a}, f->inv(FieldElem{a})) == f->one());
    for (std::uint32_t a = 0; a < n; ++a) CHECK(f->add(FieldElem{a}, f->neg(FieldElem{a})) == f->zero());
  }
}

TEST_CASE("moduli are the least irreducible polynomials") {
  CHECK(least_irreducible(2, 2) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(least_irreducible(2, 3) == std::vector<std::int64_t>{1, 1, 0, 1});
  CHECK(least_irreducible(3, 2) == std::vector<std::int64_t>{1, 0, 1});
  // Degree 2 and 3: irreducible iff no root; compare against root search.
  for (std::int64_t p : {2, 3, 5})
    for (int deg : {2, 3}) {
      std::int64_t count = 1;
      for (int i = 0; i < deg; ++i) count *= p;
      for (std::int64_t code = 0; code < count; ++code) {
        std::vector<std::int64_t> f(deg + 1, 0);
        std::int64_t c = code;
        for (int i = 0; i < deg; ++i, c /= p) f[i] = c % p;
        f[deg] = 1;
        bool has_root = false;
        for (std::int64_t x = 0; x < p; ++x) {
          std::int64_t acc = 0;
          for (int i = deg; i >= 0; --i) acc = (acc * x + f[i]) % p;
          has_root = has_root || acc == 0;
        }
        CHECK(is_irreducible(f, p) == !has_root);
      }
    }
}

TEST_CASE("primitive elements and element orders") {
  for (auto [p, d] : std::vector<std::pair<std::int64_t, int>>{{2, 4}, {3, 2}, {5, 1}, {2, 6}, {3, 4}}) {
    auto f = GaloisField::create(p, d);
    const auto q = f->order();
    CHECK(f->multiplicative_order(f->primitive_element()) == q - 1);
    for (std::int64_t n = 1; n <= q - 1; ++n) {
      if ((q - 1) % n) {
        CHECK_THROWS_AS(f->element_of_order(n), std::invalid_argument);
        continue;
      }
      CHECK(f->multiplicative_order(f->element_of_order(n)) == n);
    }
  }
  auto f = GaloisField::create(7, 1);
  CHECK_THROWS_AS(f->inv(f->zero()), std::domain_error);
  CHECK(f->pow(FieldElem{3}, 6) == f->one());
  CHECK(f->pow(FieldElem{3}, -1) == f->inv(FieldElem{3}));
}

TEST_CASE("Frobenius on square-order fields") {
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    auto f = GaloisField::quadratic_extension(q);
    CHECK(f->order() == q * q);
    CHECK(f->sqrt_order() == q);
    std::set<std::uint32_t> fixed;
    for (auto a : f->elements()) {
      auto fa = f->frobenius_q(a);
      CHECK(fa == f->pow(a, q));
      CHECK(f->frobenius_q(fa) == a);
      if (fa == a) fixed.insert(a.value);
    }
    CHECK(static_cast<std::int64_t>(fixed.size()) == q);
    std::set<std::uint32_t> sub;
    for (auto a : f->ground_subfield()) sub.insert(a.value);
    CHECK(sub == fixed);
  }
  auto g5 = GaloisField::create(5, 1);
  CHECK_THROWS_AS(g5->frobenius_q(g5->one()), std::domain_error);
}

TEST_CASE("GF(64^2) Frobenius") {
  auto f = GaloisField::quadratic_extension(64);
  CHECK(f->order() == 4096);
  auto xi = f->primitive_element();
  CHECK(f->frobenius_q(xi) == f->pow(xi, 64));
  CHECK(f->frobenius_q(f->frobenius_q(xi)) == xi);
  // x^(q+1) is the norm to GF(64), so it is fixed.
  auto norm = f->mul(xi, f->frobenius_q(xi));
  CHECK(f->frobenius_q(norm) == norm);
  std::int64_t fixed = 0;
  for (auto a : f->elements()) fixed += f->frobenius_q(a) == a;
  CHECK(fixed == 64);
}

TEST_CASE("trace-zero pairs") {
  for (std::int64_t q : {2, 3, 4, 5, 7}) {
    auto f = GaloisField::quadratic_extension(q);
    auto pairs = hermitian_trace_zero_pairs(*f);
    CHECK(static_cast<std::int64_t>(pairs.size()) == q * q * q);
    for (auto [a, b] : pairs)
      CHECK(f->add(f->add(a, f->frobenius_q(a)), f->pow(b, q + 1)) == f->zero());
  }
}

TEST_CASE("rejections") {
  CHECK_THROWS_AS(GaloisField::create(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField::create(2, 21), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField::create(3, 13), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField::quadratic_extension(6), std::invalid_argument);
  FieldSpec reducible{2, 2, {1, 0, 1}};
  CHECK_THROWS_AS(GaloisField::create(reducible), std::invalid_argument);
  CHECK_NOTHROW(GaloisField::create(2, 20));
}
