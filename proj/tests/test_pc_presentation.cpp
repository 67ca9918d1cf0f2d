#include <doctest.h>

#include <map>
#include <stdexcept>

#include "pdslab/group.hpp"
#include "pdslab/pc_presentation.hpp"

using namespace pdslab;

namespace {

std::map<std::int64_t, int> order_histogram(const FiniteGroup& g) {
  std::map<std::int64_t, int> h;
  for (Index x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
  return h;
}

Matrix unitriangular(const GaloisField& f, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  Matrix m = identity_matrix(f, 3);
  m.at(0, 1) = FieldElem{a};
  m.at(0, 2) = FieldElem{b};
  m.at(1, 2) = FieldElem{c};
  return m;
}

}  // namespace

TEST_CASE("Heisenberg group from its pc presentation") {
  PcPresentation pc({3, 3, 3});
  pc.set_commutator(1, 0, {2});
  auto g = group_from_pc_presentation(pc);
  REQUIRE(g.group->order() == 27);
  auto st = structure(*g.group);
  CHECK_FALSE(st.is_abelian);
  CHECK(st.center.size() == 3);
  CHECK(st.exponent == 3);
  const auto gens = g.group->generators();
  CHECK(g.group->commutator(gens[1], gens[0]) == gens[2]);

  // Oracle: upper unitriangular 3x3 matrices over GF(3).
  auto f = GaloisField::create(3, 1);
  auto m = group_from_matrices(f, {unitriangular(*f, 1, 0, 0), unitriangular(*f, 0, 0, 1)});
  CHECK(m.group->order() == 27);
  CHECK(order_histogram(*g.group) == order_histogram(*m.group));
  CHECK(structure(*m.group).center.size() == 3);
}

TEST_CASE("C9 x| C3 from its pc presentation") {
  // f1 = y, f2 = x, f3 = x^3 with y^-1 x y = x^4.
  PcPresentation pc({3, 3, 3});
  pc.set_power(1, {2});
  pc.set_commutator(1, 0, {2});
  auto g = group_from_pc_presentation(pc);
  REQUIRE(g.group->order() == 27);
  const auto& G = *g.group;
  const Index y = G.generators()[0], x = G.generators()[1];
  CHECK(G.element_order(x) == 9);
  CHECK(G.mul(G.mul(G.inv(y), x), y) == G.pow(x, 4));
  CHECK(structure(G).exponent == 9);

  // Oracle: affine maps z -> 4^j z + i on Z_9.
  Permutation tx(9), ty(9);
  for (Index z = 0; z < 9; ++z) {
    tx[z] = (z + 1) % 9;
    ty[z] = (4 * z) % 9;
  }
  auto perm = group_from_permutations({tx, ty});
  CHECK(perm.group->order() == 27);
  CHECK(order_histogram(G) == order_histogram(*perm.group));
}

TEST_CASE("small presentations") {
  auto e8 = group_from_pc_presentation(PcPresentation({2, 2, 2}));
  CHECK(e8.group->order() == 8);
  CHECK(e8.group->is_abelian());
  CHECK(structure(*e8.group).exponent == 2);

  PcPresentation q8({2, 2, 2});
  q8.set_power(0, {2});
  q8.set_power(1, {2});
  q8.set_commutator(1, 0, {2});
  auto q = group_from_pc_presentation(q8);
  CHECK(q.group->order() == 8);
  CHECK(order_histogram(*q.group) == std::map<std::int64_t, int>{{1, 1}, {2, 1}, {4, 6}});

  PcPresentation c4({2, 2});
  c4.set_power(0, {1});
  auto c = group_from_pc_presentation(c4);
  CHECK(c.group->is_abelian());
  CHECK(structure(*c.group).exponent == 4);
}

TEST_CASE("normal forms label every element") {
  PcPresentation pc({3, 3, 3});
  pc.set_commutator(1, 0, {2});
  auto g = group_from_pc_presentation(pc);
  auto alphabet = g.group->alphabet();
  for (Index x = 0; x < g.group->order(); ++x) {
    CHECK(evaluate_word(*g.group, g.group->label(x), alphabet) == x);
    const auto& e = g.exponents[x];
    Index w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w = g.group->mul(w, g.group->pow(g.group->generators()[i], e[i]));
    CHECK(w == x);
  }
}

TEST_CASE("inconsistent and malformed presentations") {
  // f1^2 = f2 commutes with f1, yet f1 inverts f2: only the trivial quotient survives.
  PcPresentation bad({2, 3});
  bad.set_power(0, {1});
  bad.set_commutator(1, 0, {1});
  CHECK_THROWS_AS(group_from_pc_presentation(bad), std::runtime_error);

  PcPresentation p({2, 2});
  CHECK_THROWS_AS(p.set_commutator(0, 1, {}), std::invalid_argument);
  p.set_power(1, {0});
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  CHECK_THROWS_AS(PcPresentation({1, 2}).validate(), std::invalid_argument);

  CHECK_THROWS_AS(group_from_pc_presentation(PcPresentation(std::vector<std::int64_t>(9, 2)), 100),
                  std::length_error);
}
