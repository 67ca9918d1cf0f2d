#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "pdslab/cli.hpp"
#include "pdslab/group.hpp"
#include "pdslab/io.hpp"

using namespace pdslab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pdslab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "pdslab_cli_test";
  fs::create_directories(dir);
  return dir;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("construct then verify") {
  const auto dir = scratch().string();
  auto c = run({"construct", "--out-dir", dir, "triangular", "--q", "7"});
  REQUIRE(c.code == 0);
  CHECK(contains(c.out, "kind: pds_pass"));
  CHECK(contains(c.out, "kind: srg_pass"));
  const auto group = dir + "/triangular_q7.group", set = dir + "/triangular_q7.set";
  auto v = run({"verify", "--group", group, "--set", set, "--params", "21,10,5,4", "--graph"});
  CHECK(v.code == 0);
  CHECK(contains(v.out, "kind: srg_pass"));

  auto inferred = run({"verify", "--group", group, "--set", set});
  CHECK(inferred.code == 0);
  CHECK(contains(inferred.out, "inferred params (21,10,5,4)"));

  // Byte-identical certificates on a rerun.
  const auto first = read_file(dir + "/triangular_q7.cert");
  REQUIRE(run({"construct", "--out-dir", dir, "triangular", "--q", "7"}).code == 0);
  CHECK(read_file(dir + "/triangular_q7.cert") == first);

  // Remove one element: mathematical failure with a witness.
  std::string words = read_file(set);
  words.erase(0, words.find('\n') + 1);
  write_file(dir + "/broken.set", words);
  auto b = run({"verify", "--group", group, "--set", dir + "/broken.set", "--params", "21,10,5,4"});
  CHECK(b.code == 1);
  CHECK(contains(b.out, "kind: pds_fail"));
  CHECK(contains(b.out, "witness.coefficient"));
}

TEST_CASE("order-27 commands") {
  const auto dir = scratch().string();
  REQUIRE(run({"construct", "--out-dir", dir, "order27", "--variant", "c9"}).code == 0);
  const auto group = dir + "/order27_c9.group", set = dir + "/order27_c9.set";
  auto m = run({"multiplier", "--group", group, "--set", set, "--m", "2"});
  CHECK(m.code == 1);
  CHECK(contains(m.out, "witness: x^2 in S"));
  auto p = run({"phi", "--group", group, "--set", set, "--params", "27,10,1,5"});
  CHECK(p.code == 0);
  CHECK(contains(p.out, "= 3 mod 6"));
  auto q = run({"multiplier", "--group", group, "--set", set, "--m", "2", "--quotient"});
  CHECK(contains(q.out, "quotient G/G' of order 9"));
  CHECK(run({"multiplier", "--group", group, "--set", set, "--m", "3"}).code == 2);
}

TEST_CASE("dual and export") {
  const auto dir = scratch().string();
  const std::int64_t moduli[] = {4, 4};
  write_file(dir + "/z44.group", write_group_file(*abelian_group(moduli)));
  write_file(dir + "/lattice.set", "a\na^2\na^3\nb\nb^2\nb^3\n");
  auto d = run({"dual", "--group", dir + "/z44.group", "--set", dir + "/lattice.set", "--params", "16,6,2,2"});
  CHECK(d.code == 0);
  CHECK(contains(d.out, "dual PDS certified"));

  REQUIRE(run({"construct", "--out-dir", dir, "--prefix", "t11", "triangular", "--q", "11"}).code == 0);
  auto g6 = run({"export", "--graph", dir + "/t11.edges", "--format", "graph6"});
  REQUIRE(g6.code == 0);
  write_file(dir + "/t11.g6", g6.out);
  auto edges = run({"export", "--graph", dir + "/t11.g6", "--format", "edges"});
  CHECK(edges.out == read_file(dir + "/t11.edges"));
}

TEST_CASE("feasibility and scan") {
  auto f = run({"feasibility", "--params", "13,6,2,3"});
  CHECK(f.code == 0);
  CHECK(contains(f.out, "conference: yes"));
  auto t = run({"feasibility", "--params", "21,10,5,4"});
  CHECK(contains(t.out, "abelian: impossible"));
  CHECK(contains(t.out, "kind: nonexistence"));
  CHECK(run({"feasibility", "--params", "21,10,5,5"}).code == 1);

  auto s = run({"scan", "--v-max", "30"});
  CHECK(s.code == 0);
  std::istringstream lines(s.out);
  bool t7 = false, g27 = false;
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("(21,10,5,4)", 0) == 0) t7 = contains(line, "abelian-impossible");
    if (line.rfind("(27,10,1,5)", 0) == 0) g27 = contains(line, "genuinely-nonabelian-candidate");
  }
  CHECK(t7);
  CHECK(g27);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"feasibility"}).code == 2);
  CHECK(run({"feasibility", "--params", "1,2"}).code == 2);
  CHECK(run({"construct", "triangular", "--q", "13"}).code == 2);
  CHECK(run({"construct", "godsil", "--q", "5", "--r", "4"}).code == 2);
  const auto dir = scratch().string();
  write_file(dir + "/bad.group", "group-table 3\ngens 1\n0 1 2\n1 2 0\n2 0 0\n");
  write_file(dir + "/one.set", "g1\n");
  auto bad = run({"verify", "--group", dir + "/bad.group", "--set", dir + "/one.set", "--params", "3,1,0,0"});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "row 2"));
  CHECK(run({"verify", "--group", dir + "/missing.group", "--set", dir + "/one.set"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("size cap from the environment") {
  const auto dir = scratch().string();
  REQUIRE(run({"construct", "--out-dir", dir, "triangular", "--q", "7"}).code == 0);
  setenv("PDSLAB_MAX_ORDER", "10", 1);
  auto r = run({"verify", "--group", dir + "/triangular_q7.group", "--set", dir + "/triangular_q7.set"});
  unsetenv("PDSLAB_MAX_ORDER");
  CHECK(r.code == 2);
  CHECK(contains(r.err, "cap"));
}
