#pragma once

// Simple graphs as packed bit rows, strong-regularity checking by
// common-neighbour counts, Cayley graphs, and PDS extraction from a regular
// group action.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdslab/group.hpp"
#include "pdslab/group_ring.hpp"

namespace pdslab {

class Graph {
 public:
  Graph() : Graph(0) {}
  explicit Graph(std::size_t n);

  std::size_t size() const { return n_; }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U; }
  std::size_t degree(std::size_t u) const;
  std::size_t edge_count() const;
  std::vector<std::size_t> neighbors(std::size_t u) const;
  /// |N(u) and N(v)| by popcount over the row intersection.
  std::size_t common_neighbors(std::size_t u, std::size_t v) const;

  std::vector<std::string> vertex_labels;  // optional, empty or size n

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct SrgCheck {
  bool is_srg = false;
  std::int64_t k = 0;
  std::optional<std::int64_t> lambda;  // absent when there are no edges
  std::optional<std::int64_t> mu;      // absent when the graph is complete
  bool trivial = false;                // complete, empty, disjoint cliques or complete multipartite
  /// First violating pair in row-major order (u < v), or (u, u) for a degree defect.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string detail;
};

SrgCheck verify_srg(const Graph& g);

/// x ~ y iff x y^-1 in S. Throws std::invalid_argument if 1 in S or S != S^-1.
Graph cayley(const FiniteGroup& g, std::span<const Index> s);

/// T_n: 2-subsets of {0..n-1} in lexicographic order, adjacent when they share one point.
Graph triangular_graph(std::int64_t n);

/// The 2-subsets of {0..n-1} in the vertex order used by triangular_graph.
std::vector<std::pair<std::int64_t, std::int64_t>> two_subsets(std::int64_t n);

Graph complement(const Graph& g);
bool is_connected(const Graph& g);

/// A group acting on graph vertices; action[x] is the permutation of element x.
struct RegularAction {
  GroupPtr group;
  std::vector<Permutation> action;
};

/// The orbit of v0 under the action, in discovery order.
std::vector<std::size_t> orbit(const RegularAction& a, std::size_t v0);

struct PdsExtraction {
  PdsCandidate candidate;
  /// Element x -> vertex x^-1(v0); an isomorphism Cay(G, S) -> graph.
  std::vector<std::size_t> evaluation;
};

/**
 * S = {x : x(v0) ~ v0}. Checks that the action is a homomorphism into the
 * automorphism group and sharply transitive, then checks Cay(G, S) against
 * the graph edge by edge. Throws std::invalid_argument naming the failure
 * (orbit size, fixed point, non-automorphism) otherwise.
 */
PdsExtraction pds_from_regular_action(const Graph& g, const RegularAction& a, std::size_t v0);

/// "graph n m" followed by one "u v" line per edge (u < v, lexicographic).
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

/// Header-free graph6 string (standard 6-bit packing of the upper triangle).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

}  // namespace pdslab
