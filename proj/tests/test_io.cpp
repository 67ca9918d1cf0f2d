#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "pdslab/constructions.hpp"
#include "pdslab/io.hpp"

using namespace pdslab;

namespace {

const std::string kData = PDSLAB_DATA_DIR;

GroupPtr elementary_512() {
  PcPresentation pc(std::vector<std::int64_t>(9, 2));
  return group_from_pc_presentation(pc).group;
}

std::map<std::int64_t, int> order_histogram(const FiniteGroup& g) {
  std::map<std::int64_t, int> h;
  for (Index x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
  return h;
}

}  // namespace

TEST_CASE("group files round-trip bit-exactly") {
  const std::string c3 = "group-table 3\ngens 1\nlabels c\n0 1 2\n1 2 0\n2 0 1\n";
  auto g = parse_group_file(c3);
  CHECK(g->order() == 3);
  CHECK(write_group_file(*g) == c3);

  auto tc = triangular_pds(7);
  const std::string text = write_group_file(*tc.group.group);
  auto back = parse_group_file(text);
  CHECK(write_group_file(*back) == text);
  CHECK(back->table_hash() == tc.group.group->table_hash());
  CHECK(std::vector<Index>(back->table().begin(), back->table().end()) ==
        std::vector<Index>(tc.group.group->table().begin(), tc.group.group->table().end()));
}

TEST_CASE("group file diagnostics") {
  auto message = [](const std::string& text) {
    try {
      parse_group_file(text);
    } catch (const FormatError& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  auto corrupted = message("group-table 3\ngens 1\n0 1 2\n1 2 0\n2 0 0\n");
  CHECK(corrupted.find("row 2") != std::string::npos);
  CHECK(corrupted.find("column 2") != std::string::npos);
  CHECK(message("group-table 3\ngens 1\n0 1 2\n1 2 0\n") != "accepted");
  CHECK(message("group-table 3\ngens 1\n0 1 2\n1 2 0\n2 0\n").find("row 2") != std::string::npos);
  CHECK(message("group 3\n") != "accepted");
  CHECK(message("group-table 3\ngens 5\n0 1 2\n1 2 0\n2 0 1\n").find("out of range") != std::string::npos);
  CHECK(message("group-table 3\ngens 1\n0 1 2\n1 2 0\n2 0 7\n").find("column 2") != std::string::npos);
  CHECK_THROWS_AS(parse_group_file("group-table 4\ngens 1\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n", 3), std::length_error);
}

TEST_CASE("bundled pc files") {
  auto h = group_from_pc_presentation(parse_pc_file(read_file(kData + "/heisenberg_27.pc")));
  CHECK(h.group->order() == 27);
  CHECK(structure(*h.group).exponent == 3);
  CHECK(order_histogram(*h.group) == order_histogram(*order27_pds(Order27Variant::heisenberg).group));

  auto c = group_from_pc_presentation(parse_pc_file(read_file(kData + "/c9_semidirect_27.pc")));
  CHECK(c.group->order() == 27);
  CHECK(order_histogram(*c.group) == order_histogram(*order27_pds(Order27Variant::c9_semidirect).group));
}

TEST_CASE("pc files") {
  auto e8 = parse_any_group_file("pc 3\norder 1 2\norder 2 2\norder 3 2\n");
  CHECK(e8->order() == 8);
  CHECK(e8->is_abelian());

  PcPresentation pc({3, 3, 3});
  pc.set_power(1, {2});
  pc.set_commutator(1, 0, {2, 2});
  const std::string text = write_pc_file(pc);
  CHECK(text == "pc 3\norder 1 3\norder 2 3\norder 3 3\npow 2 = f3\ncomm 2 1 = f3*f3\n");
  auto back = parse_pc_file(text);
  CHECK(back.commutator_relations[1][0] == PcWord{2, 2});
  CHECK(parse_pc_file("pc 2\norder 1 2\norder 2 2\npow 1 = f2 # comment\n").power_relations[0] == PcWord{1});
  CHECK(parse_pc_file("pc 3\norder 1 3\norder 2 3\norder 3 3\ncomm 2 1 = f3^2\n").commutator_relations[1][0] ==
        PcWord{2, 2});

  CHECK_THROWS_AS(parse_pc_file("pc 2\norder 1 2\n"), FormatError);
  CHECK_THROWS_AS(parse_pc_file("pc 2\norder 1 2\norder 2 2\npow 2 = f1\n"), FormatError);
  CHECK_THROWS_AS(parse_pc_file("pc 2\norder 1 2\norder 2 2\nfoo 1\n"), FormatError);
  CHECK_THROWS_AS(parse_pc_file("pc 2\norder 1 2\norder 2 2\ncomm 1 2 = 1\n"), FormatError);
  CHECK_THROWS_AS(parse_pc_file("pc 2\norder 1 2\norder 2 2\npow 1 = g1\n"), FormatError);
}

TEST_CASE("appendix word list") {
  auto g = elementary_512();
  auto s = parse_subset(read_file(kData + "/appendix_512_words.txt"), *g);
  CHECK(s.size() == 133);
  CHECK(std::set<Index>(s.begin(), s.end()).size() == 133);
  const auto a = g->alphabet();
  CHECK(s.front() == a.at("f9"));
  CHECK(parse_subset("f9\n", *g) == std::vector<Index>{a.at("f9")});
  // The GAP assignment shape is accepted as printed.
  CHECK(parse_subset("S2:= [ f9, f7,\n  f7*f9 ];;\n", *g).size() == 3);
}

TEST_CASE("subset files") {
  auto tc = triangular_pds(7);
  const auto& g = *tc.group.group;
  auto s = parse_subset("s\ns^6\nt\nt^2\ns*t\ns*t^2\ns^5*t\ns^3*t^2\ns^6*t\ns^4*t^2\n", g);
  CHECK(s.size() == 10);
  CHECK(PdsCandidate(tc.group.group, s).subset == tc.pds.candidate.subset);
  CHECK(parse_subset(write_subset_words(tc.pds.candidate), g) == tc.pds.candidate.subset);
  auto idx = parse_subset(write_subset_indices(tc.pds.candidate), g);
  CHECK(idx == tc.pds.candidate.subset);

  const auto a = g.alphabet();
  CHECK(parse_subset("[s*t]", g, WordOrder::right_to_left).front() == g.mul(a.at("t"), a.at("s")));
  CHECK_THROWS_AS(parse_subset("s\ns\n", g), FormatError);
  CHECK_THROWS_AS(parse_subset("s^8\ns\n", g), FormatError);  // both are s
  CHECK_THROWS_AS(parse_subset("u\n", g), FormatError);
  CHECK_THROWS_AS(parse_subset("subset-indices 2\n1\n", g), FormatError);
  CHECK_THROWS_AS(parse_subset("subset-indices 1\n99\n", g), FormatError);
}
