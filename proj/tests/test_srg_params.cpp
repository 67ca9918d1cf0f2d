#include <doctest.h>

#include <set>
#include <stdexcept>
#include <tuple>

#include "pdslab/cayley_graph.hpp"
#include "pdslab/srg_params.hpp"

using namespace pdslab;

namespace {

// Integer roots of x^2 - (lambda - mu) x - (k - mu), found by search.
std::vector<std::int64_t> brute_eigenvalues(const SrgParams& p) {
  std::vector<std::int64_t> roots;
  for (std::int64_t x = -p.v; x <= p.v; ++x)
    if (x * x - (p.lambda - p.mu) * x - (p.k - p.mu) == 0) roots.push_back(x);
  return roots;
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(SrgParams::parse("21,10,5,4") == SrgParams{21, 10, 5, 4});
  CHECK(SrgParams::parse("(27, 10, 1, 5)") == SrgParams{27, 10, 1, 5});
  CHECK(SrgParams{512, 133, 24, 38}.to_string() == "(512,133,24,38)");
  CHECK_THROWS_AS(SrgParams::parse("21,10,5"), std::invalid_argument);
  CHECK_THROWS_AS(SrgParams::parse("a,b,c,d"), std::invalid_argument);
}

TEST_CASE("first condition") {
  CHECK(check_first_feasibility({10, 3, 0, 1}));
  CHECK(check_first_feasibility({21, 10, 5, 4}));
  CHECK_FALSE(check_first_feasibility({21, 10, 5, 5}));
  CHECK_THROWS_AS(spectrum({21, 10, 5, 5}), std::invalid_argument);
}

TEST_CASE("spectrum of T_7 and the 27-vertex sets") {
  auto s = spectrum({21, 10, 5, 4});
  CHECK(s.delta == 25);
  CHECK(s.sqrt_delta == 5);
  CHECK(s.theta1() == 3);
  CHECK(s.theta2() == -2);
  CHECK(s.m1 == 6);
  CHECK(s.m2 == 14);

  auto t = spectrum({27, 10, 1, 5});
  CHECK(t.sqrt_delta == 6);
  CHECK(t.theta1() == 1);
  CHECK(t.theta2() == -5);
}

TEST_CASE("trace identities hold for every scanned Type II set") {
  // Independent check of the multiplicities: tr(A) = 0 and tr(A^2) = vk.
  const auto scan = scan_parameters(80);
  int checked = 0;
  for (const auto& e : scan.entries) {
    const auto& p = e.params;
    auto s = spectrum(p);
    if (!s.is_type2()) continue;
    auto roots = brute_eigenvalues(p);
    REQUIRE(roots.size() == 2);
    CHECK(*s.theta2() == roots[0]);
    CHECK(*s.theta1() == roots[1]);
    const std::int64_t m1 = *s.m1, m2 = *s.m2;
    CHECK(m1 + m2 == p.v - 1);
    CHECK(p.k + m1 * *s.theta1() + m2 * *s.theta2() == 0);
    CHECK(p.k * p.k + m1 * *s.theta1() * *s.theta1() + m2 * *s.theta2() * *s.theta2() == p.v * p.k);
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("conference classification") {
  CHECK(is_conference({13, 6, 2, 3}).conference);
  CHECK(is_conference({13, 6, 2, 3}).paley_shape);
  CHECK(is_conference({5, 2, 0, 1}).conference);
  CHECK_FALSE(is_conference({21, 10, 5, 4}).conference);
  CHECK_FALSE(is_conference({16, 6, 2, 2}).conference);
  CHECK_THROWS_AS(abelian_type2_test({13, 6, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(swartz_tauscheck_residues({5, 2, 0, 1}), std::invalid_argument);
}

TEST_CASE("complement is an involution on feasible sets") {
  for (const auto& e : scan_parameters(60).entries) {
    const auto c = complement_params(e.params);
    CHECK(complement_params(c) == e.params);
    CHECK(check_first_feasibility(c));
  }
  CHECK(complement_params({21, 10, 5, 4}) == SrgParams{21, 10, 3, 6});
}

TEST_CASE("triangular parameters match common-neighbour counts") {
  for (std::int64_t n = 5; n <= 13; ++n) {
    const auto p = triangular_params(n);
    const auto check = verify_srg(triangular_graph(n));
    REQUIRE(check.is_srg);
    CHECK(p.v == static_cast<std::int64_t>(triangular_graph(n).size()));
    CHECK(check.k == p.k);
    CHECK(check.lambda == p.lambda);
    CHECK(check.mu == p.mu);
  }
  CHECK(triangular_params(7) == SrgParams{21, 10, 5, 4});
}

TEST_CASE("abelian discriminant test") {
  CHECK(abelian_type2_test({21, 10, 5, 4}).verdict == AbelianVerdict::impossible);
  CHECK(abelian_type2_test({27, 10, 1, 5}).verdict == AbelianVerdict::impossible);
  CHECK(abelian_type2_test({16, 6, 2, 2}).verdict == AbelianVerdict::unknown);
  CHECK(abelian_type2_test({9, 4, 1, 2}).verdict == AbelianVerdict::unknown);
  CHECK(abelian_type2_test({512, 133, 24, 38}).verdict == AbelianVerdict::impossible);
}

TEST_CASE("Hermitian family parameters") {
  auto g = godsil_params(8, 3);
  CHECK(g.params == SrgParams{512, 133, 24, 38});
  CHECK(g.sqrt_delta == 24);
  CHECK(g.genuinely_nonabelian);
  CHECK(godsil_params(3, 2).params == SrgParams{27, 10, 1, 5});
  CHECK(godsil_params(3, 1).trivial);
  CHECK_THROWS_AS(godsil_params(6, 7), std::invalid_argument);
  CHECK_THROWS_AS(godsil_params(5, 4), std::invalid_argument);
  // Every admissible set is a feasible SRG parameter set with the stated sqrt(Delta).
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32})
    for (std::int64_t r = 2; r < q + 1; ++r) {
      if ((q + 1) % r) continue;
      auto gp = godsil_params(q, r);
      CHECK(check_first_feasibility(gp.params));
      CHECK(spectrum(gp.params).sqrt_delta == gp.sqrt_delta);
    }
}

TEST_CASE("class-function residues") {
  auto r = swartz_tauscheck_residues({27, 10, 1, 5});
  CHECK(r.residue == 15);
  CHECK(r.residue_mod == 3);
  CHECK(r.complement_residue == 18);
  CHECK(r.complement_residue_mod == 0);
  CHECK_FALSE(r.no_nontrivial_center);
  CHECK(r.genuinely_nonabelian);

  auto big = swartz_tauscheck_residues({512, 133, 24, 38});
  CHECK(big.residue == 152);
  CHECK(big.residue_mod == 8);

  auto t7 = swartz_tauscheck_residues({21, 10, 5, 4});
  CHECK(t7.residue_mod == 2);
}

TEST_CASE("named families") {
  CHECK(paley_params(3) == SrgParams{13, 6, 2, 3});
  CHECK(latin_square_pl_params(4, 2) == SrgParams{16, 6, 2, 2});
  CHECK(gq_point_params(2, 2) == SrgParams{15, 6, 1, 3});
  const std::int64_t args[] = {7};
  CHECK(catalog_params("triangular", args) == SrgParams{21, 10, 5, 4});
  CHECK_THROWS_AS(catalog_params("nonsense", args), std::invalid_argument);
}

TEST_CASE("overflow is reported, not wrapped") {
  CHECK_THROWS_AS(godsil_params(2147483647, 2), std::overflow_error);
}

TEST_CASE("scan records the first failing filter") {
  const auto s = scan_parameters(30, true);
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> accepted;
  for (const auto& e : s.entries) {
    const auto& p = e.params;
    if (e.accepted) {
      accepted.insert({p.v, p.k, p.lambda, p.mu});
      continue;
    }
    // Recompute the filters in order.
    std::string expected;
    if (p.k * (p.k - p.lambda - 1) != (p.v - p.k - 1) * p.mu)
      expected = "first_condition";
    else if (is_conference(p).inconsistent())
      expected = "conference_shape";
    else
      expected = "multiplicity";
    CHECK(e.first_failing_filter == expected);
  }
  CHECK(accepted.count({21, 10, 5, 4}));
  CHECK(accepted.count({27, 10, 1, 5}));
  CHECK(accepted.count({13, 6, 2, 3}));
  CHECK(accepted.count({16, 6, 2, 2}));
  CHECK_FALSE(accepted.count({21, 10, 5, 5}));
  for (const auto& e : s.entries)
    if (e.accepted && e.params == SrgParams{27, 10, 1, 5}) CHECK(e.verdict.genuinely_nonabelian_candidate);
}
