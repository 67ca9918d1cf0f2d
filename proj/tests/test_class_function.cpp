#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "pdslab/class_function.hpp"
#include "pdslab/constructions.hpp"

using namespace pdslab;

namespace {

void check_invariants(const PhiReport& r, const PdsCandidate& c) {
  std::size_t total = 0;
  for (const auto& row : r.per_class) {
    total += row.meet;
    CHECK(row.phi == static_cast<std::int64_t>(row.meet * row.centralizer_order));
    CHECK(row.class_size * row.centralizer_order == c.group->order());
  }
  CHECK(static_cast<std::int64_t>(total) == r.params.k);
}

}  // namespace

TEST_CASE("T_7 class profile") {
  auto tc = triangular_pds(7);
  const auto& g = *tc.group.group;
  auto r = phi_report(tc.pds.candidate, tc.certificate.params);
  CHECK(r.sqrt_delta == 5);
  CHECK(r.residue_target == 2);
  CHECK(r.all_pass);
  check_invariants(r, tc.pds.candidate);
  const auto a = g.alphabet();
  const Index s = a.at("s"), t = a.at("t");
  auto class_meet = [&](Index x) {
    for (const auto& row : r.per_class)
      for (const auto& cls : conjugacy(g).classes)
        if (cls.front() == row.representative && std::find(cls.begin(), cls.end(), x) != cls.end()) return row.meet;
    return std::size_t{99};
  };
  CHECK(class_meet(s) == 1);
  CHECK(class_meet(g.pow(s, 3)) == 1);
  CHECK(class_meet(t) == 4);
  CHECK(class_meet(g.pow(t, 2)) == 4);
  auto text = render_phi_table(r, g);
  CHECK(text.find("Phi mod 5") != std::string::npos);
  CHECK(text.find("all classes pass") != std::string::npos);
}

TEST_CASE("order-27 sets satisfy the congruence") {
  for (auto v : {Order27Variant::heisenberg, Order27Variant::c9_semidirect}) {
    auto c = order27_pds(v);
    auto r = phi_report(c.pds, {27, 10, 1, 5});
    CHECK(r.residue_target == 3);
    CHECK(r.all_pass);
    check_invariants(r, c.pds);
    for (const auto& row : r.per_class)
      if (!row.identity) CHECK(row.meet >= 1);
    CHECK(class_meet_nonempty(c.pds, {27, 10, 1, 5}).all_meet);
  }
}

TEST_CASE("Hermitian-family sets satisfy the congruence") {
  for (auto [q, r] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 2}, {5, 2}, {5, 3}}) {
    auto gc = godsil_pds(q, r);
    auto rep = phi_report(gc.pds.candidate, gc.expected.params);
    CHECK(rep.all_pass);
    check_invariants(rep, gc.pds.candidate);
  }
}

TEST_CASE("abelian groups reduce to Phi in {0, v}") {
  const std::int64_t m[] = {4, 4};
  auto g = abelian_group(m);
  auto a = g->alphabet();
  std::vector<Index> s;
  for (int t = 1; t < 4; ++t) {
    s.push_back(g->pow(a.at("a"), t));
    s.push_back(g->pow(a.at("b"), t));
  }
  PdsCandidate c(g, s);
  REQUIRE(verify_pds(c, {16, 6, 2, 2}).pass());
  auto r = phi_report(c, {16, 6, 2, 2});
  for (const auto& row : r.per_class) {
    const bool in_s = std::find(s.begin(), s.end(), row.representative) != s.end();
    CHECK(row.phi == (in_s ? 16 : 0));
  }
  CHECK(r.all_pass);
  CHECK_FALSE(class_meet_nonempty(c, {16, 6, 2, 2}).applicable);
}

TEST_CASE("class meets in an abelian group expose empty classes") {
  const std::int64_t m[] = {21};
  auto g = abelian_group(m);
  std::vector<Index> s;
  for (Index x = 1; x <= 10; ++x) s.push_back(x);
  auto res = class_meet_nonempty(PdsCandidate(g, s), {21, 10, 5, 4});
  CHECK(res.applicable);
  CHECK_FALSE(res.all_meet);
  CHECK(res.empty_classes.size() == 10);
}

TEST_CASE("center obstruction") {
  const std::int64_t m[] = {21};
  auto z21 = abelian_group(m);
  CHECK(center_obstruction(*z21, {21, 10, 5, 4}).verdict == CenterVerdict::impossible);
  CHECK(center_obstruction(*semidirect_cp_ct(7, 2), {21, 10, 5, 4}).verdict == CenterVerdict::inapplicable);
  auto h = order27_pds(Order27Variant::heisenberg);
  auto co = center_obstruction(*h.group, {27, 10, 1, 5});
  CHECK(co.verdict == CenterVerdict::inapplicable);
  CHECK(co.center_order == 3);
}

TEST_CASE("conference parameters are rejected") {
  const std::int64_t m[] = {13};
  auto g = abelian_group(m);
  PdsCandidate c(g, {1, 3, 4, 9, 10, 12});
  CHECK_THROWS_AS(phi_report(c, {13, 6, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(class_meet_nonempty(c, {13, 6, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(phi_report(c, {21, 10, 5, 4}), std::invalid_argument);
}
