#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "pdslab/cayley_graph.hpp"
#include "pdslab/group_ring.hpp"
#include "pdslab/number_theory.hpp"

using namespace pdslab;

namespace {

GroupPtr z(std::vector<std::int64_t> moduli) { return abelian_group(moduli); }

// Index of (i, j) in Z_n x Z_n built by abelian_group({n, n}).
Index element(const FiniteGroup& g, std::int64_t i, std::int64_t j) {
  auto a = g.alphabet();
  return g.mul(g.pow(a.at("a"), i), g.pow(a.at("b"), j));
}

// Lattice-square PDS: r parallel classes of lines through 0 in Z_n^2, minus 0.
std::vector<Index> lattice(const FiniteGroup& g, std::int64_t n, std::int64_t r) {
  std::vector<std::pair<std::int64_t, std::int64_t>> dirs{{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  std::set<Index> s;
  for (std::int64_t d = 0; d < r; ++d)
    for (std::int64_t t = 1; t < n; ++t) s.insert(element(g, dirs[d].first * t % n, dirs[d].second * t % n));
  return {s.begin(), s.end()};
}

// Direct S*S coefficients, as an independent check of convolve.
std::vector<std::int64_t> square_by_pairs(const FiniteGroup& g, const std::vector<Index>& s) {
  std::vector<std::int64_t> c(g.order(), 0);
  for (Index a : s)
    for (Index b : s) ++c[g.mul(a, b)];
  return c;
}

}  // namespace

TEST_CASE("group ring convolution matches pair counting") {
  auto g = semidirect_cp_ct(7, 2);
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Index> s;
    for (Index x = 1; x < g->order(); ++x)
      if (rng() % 3 == 0) s.push_back(x);
    auto a = GroupRingElem::subset(g, s);
    CHECK(convolve(a, a).coeffs == square_by_pairs(*g, s));
  }
  auto one = GroupRingElem::element(g, 0);
  auto w = GroupRingElem::whole(g);
  CHECK(convolve(one, w) == w);
  CHECK((w - w) == GroupRingElem::zero(g));
}

TEST_CASE("verify_pds on lattice and Paley sets") {
  auto g = z({4, 4});
  PdsCandidate c(g, lattice(*g, 4, 2));
  auto cert = verify_pds(c, {16, 6, 2, 2});
  CHECK(cert.pass());
  CHECK(infer_params(c) == SrgParams{16, 6, 2, 2});

  auto g9 = z({3, 3});
  PdsCandidate c9(g9, lattice(*g9, 3, 2));
  CHECK(verify_pds(c9, {9, 4, 1, 2}).pass());

  // Paley(13): nonzero squares mod 13.
  auto g13 = z({13});
  std::set<Index> sq;
  for (std::int64_t x = 1; x < 13; ++x) sq.insert(g13->pow(g13->generators()[0], x * x % 13));
  PdsCandidate paley(g13, {sq.begin(), sq.end()});
  CHECK(verify_pds(paley, {13, 6, 2, 3}).pass());
}

TEST_CASE("failures carry witnesses") {
  auto g = z({4, 4});
  auto s = lattice(*g, 4, 2);
  s.pop_back();
  PdsCandidate c(g, s);
  auto cert = verify_pds(c, {16, 6, 2, 2});
  CHECK_FALSE(cert.pass());
  CHECK_FALSE(cert.size_ok);
  CHECK_FALSE(cert.inverse_closed);
  REQUIRE(cert.inverse_witness);
  CHECK(std::find(s.begin(), s.end(), g->inv(*cert.inverse_witness)) == s.end());
  CHECK_FALSE(cert.failures.empty());
  // The identity coefficient of S^2 counts the a in S with a^-1 in S.
  std::int64_t paired = 0;
  for (Index a : s) paired += std::find(s.begin(), s.end(), g->inv(a)) != s.end();
  CHECK(cert.failures.front().element == 0);
  CHECK(cert.failures.front().actual == paired);
  CHECK(paired == 4);

  PdsCandidate with_identity(g, {0, 1, 3});
  CHECK_FALSE(verify_pds(with_identity, {16, 3, 0, 0}).identity_excluded);
  CHECK_THROWS_AS(verify_pds(with_identity, {15, 3, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(PdsCandidate(g, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PdsCandidate(g, {16}), std::invalid_argument);
}

TEST_CASE("group ring and graph oracles agree on random subsets") {
  std::mt19937_64 rng(7);
  for (auto g : {z({5, 5}), z({3, 3}), semidirect_cp_ct(7, 2), z({2, 2, 2, 2})}) {
    for (int trial = 0; trial < 200; ++trial) {
      std::set<Index> s;
      for (Index x = 1; x < g->order(); ++x)
        if (rng() % 2 == 0) {
          s.insert(x);
          s.insert(g->inv(x));
        }
      PdsCandidate c(g, {s.begin(), s.end()});
      auto inferred = infer_params(c);
      auto check = verify_srg(cayley(*g, c.subset));
      const bool srg = check.is_srg && check.lambda && check.mu && !check.trivial;
      if (inferred && !inferred->is_trivial()) {
        CHECK(srg);
        CHECK(check.k == inferred->k);
        CHECK(check.lambda == inferred->lambda);
        CHECK(check.mu == inferred->mu);
      } else if (srg) {
        CHECK(inferred);
      }
    }
  }
}

TEST_CASE("multipliers") {
  auto g = z({4, 4});
  PdsCandidate c(g, lattice(*g, 4, 2));
  for (std::int64_t m : {1, 3, 5, 7, 9}) CHECK(multiplier_test(c, m).holds);
  CHECK_THROWS_AS(multiplier_test(c, 2), std::invalid_argument);

  auto t = semidirect_cp_ct(7, 2);
  auto a = t->alphabet();
  const Index s = a.at("s");
  std::vector<Index> S;
  for (auto w : {"s", "s^6", "t", "t^2", "s*t", "s*t^2", "s^5*t", "s^3*t^2", "s^6*t", "s^4*t^2"})
    S.push_back(evaluate_word(*t, w, a));
  PdsCandidate tc(t, S);
  auto r = multiplier_test(tc, 2);
  CHECK_FALSE(r.holds);
  CHECK(std::find(r.witnesses.begin(), r.witnesses.end(), s) != r.witnesses.end());
  for (Index w : r.witnesses) CHECK(std::find(S.begin(), S.end(), t->pow(w, 2)) == S.end());

  auto qr = quotient_multiplier_test(tc, 2);
  CHECK(qr.quotient_order == 3);
}

TEST_CASE("power map accumulates") {
  auto g = z({4});
  auto all = GroupRingElem::whole(g);
  auto sq = power_map(all, 2);
  CHECK(sq.coeffs == std::vector<std::int64_t>{2, 0, 2, 0});
}

TEST_CASE("abelian decomposition") {
  for (auto moduli : std::vector<std::vector<std::int64_t>>{{12}, {2, 6}, {4, 4}, {2, 2, 2}, {3, 9}, {6, 10}}) {
    auto g = z(moduli);
    auto d = abelian_decomposition(*g);
    std::int64_t product = 1;
    for (std::size_t i = 0; i < d.moduli.size(); ++i) {
      product *= d.moduli[i];
      CHECK(g->element_order(d.basis[i]) == d.moduli[i]);
    }
    CHECK(product == static_cast<std::int64_t>(g->order()));
    std::set<Index> seen(d.element_of.begin(), d.element_of.end());
    CHECK(seen.size() == g->order());
    // Coordinates are additive.
    for (Index x = 0; x < g->order(); ++x)
      for (Index y = 0; y < g->order(); ++y)
        for (std::size_t i = 0; i < d.moduli.size(); ++i)
          CHECK(d.coords[g->mul(x, y)][i] == floor_mod(d.coords[x][i] + d.coords[y][i], d.moduli[i]));
  }
  CHECK_THROWS_AS(abelian_decomposition(*semidirect_cp_ct(7, 2)), std::domain_error);
}

TEST_CASE("characters are homomorphisms and orthogonal") {
  auto g = z({2, 6});
  CharacterTable ct(g);
  for (Index chi = 0; chi < g->order(); ++chi) {
    for (Index x = 0; x < g->order(); ++x)
      for (Index y = 0; y < g->order(); ++y) CHECK(ct.value(chi, g->mul(x, y)) == ct.value(chi, x) * ct.value(chi, y));
    std::vector<Index> all(g->order());
    for (Index x = 0; x < g->order(); ++x) all[x] = x;
    CHECK(ct.sum(chi, all).as_integer() == (chi == 0 ? 12 : 0));
  }
}

TEST_CASE("cyclotomic arithmetic") {
  auto z5 = Cyclotomic::zeta_power(5, 1);
  Cyclotomic sum = Cyclotomic::integer(5, 0);
  for (int j = 0; j < 5; ++j) sum += Cyclotomic::zeta_power(5, j);
  CHECK(sum.as_integer() == 0);
  CHECK(Cyclotomic::zeta_power(5, 5).as_integer() == 1);
  CHECK((z5 * Cyclotomic::zeta_power(5, 4)).as_integer() == 1);
  CHECK_FALSE(z5.as_integer());
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  // Gauss sum for p = 5: sum of Legendre symbols times zeta^j squares to 5.
  Cyclotomic gauss = Cyclotomic::integer(5, 0);
  for (int j = 1; j < 5; ++j) {
    const bool square = j == 1 || j == 4;
    gauss += square ? Cyclotomic::zeta_power(5, j) : Cyclotomic::integer(5, 0) - Cyclotomic::zeta_power(5, j);
  }
  CHECK((gauss * gauss).as_integer() == 5);
}

TEST_CASE("dual PDS in the character group") {
  auto g = z({4, 4});
  PdsCandidate c(g, lattice(*g, 4, 2));
  auto r = dual_pds(c, {16, 6, 2, 2});
  CHECK(r.pass());
  CHECK(r.dual_subset.size() == static_cast<std::size_t>(*spectrum({16, 6, 2, 2}).m1));
  CHECK(r.dual_sqrt_delta == 16 / r.sqrt_delta);
  // Every character sum is an eigenvalue (or k for the trivial character).
  for (std::size_t chi = 0; chi < r.sums_by_character.size(); ++chi) {
    auto v = r.sums_by_character[chi];
    CHECK((v == 6 || v == 2 || v == -2));
  }

  auto bad = lattice(*g, 4, 2);
  bad.pop_back();
  bad.pop_back();
  CHECK_THROWS_AS(dual_pds(PdsCandidate(g, bad), {16, 6, 2, 2}), std::domain_error);
  CHECK_THROWS_AS(dual_pds(PdsCandidate(semidirect_cp_ct(7, 2), {1}), {21, 10, 5, 4}), std::domain_error);
}
