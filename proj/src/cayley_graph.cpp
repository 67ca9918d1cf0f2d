#include "pdslab/cayley_graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace pdslab {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: loops are not allowed");
  rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t Graph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(rows_[u * words_ + w]);
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t u = 0; u < n_; ++u) total += degree(u);
  return total / 2;
}

std::vector<std::size_t> Graph::neighbors(std::size_t u) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = rows_[u * words_ + w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Graph::common_neighbors(std::size_t u, std::size_t v) const {
  const std::uint64_t* a = rows_.data() + u * words_;
  const std::uint64_t* b = rows_.data() + v * words_;
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

SrgCheck verify_srg(const Graph& g) {
  SrgCheck r;
  const std::size_t n = g.size();
  if (n == 0) {
    r.detail = "empty vertex set";
    return r;
  }
  r.k = static_cast<std::int64_t>(g.degree(0));
  for (std::size_t u = 1; u < n; ++u)
    if (static_cast<std::int64_t>(g.degree(u)) != r.k) {
      r.witness = std::pair{u, u};
      r.detail = "vertex " + std::to_string(u) + " has degree " + std::to_string(g.degree(u)) + ", vertex 0 has " +
                 std::to_string(r.k);
      return r;
    }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const auto c = static_cast<std::int64_t>(g.common_neighbors(u, v));
      auto& slot = g.adjacent(u, v) ? r.lambda : r.mu;
      if (!slot) {
        slot = c;
      } else if (*slot != c) {
        r.witness = std::pair{u, v};
        r.detail = std::string(g.adjacent(u, v) ? "adjacent" : "nonadjacent") + " pair (" + std::to_string(u) +
                   "," + std::to_string(v) + ") has " + std::to_string(c) + " common neighbours, expected " +
                   std::to_string(*slot);
        r.lambda.reset();
        r.mu.reset();
        return r;
      }
    }
  r.is_srg = true;
  r.trivial = !r.lambda || !r.mu || *r.mu == 0 || *r.mu == r.k;
  return r;
}

Graph cayley(const FiniteGroup& g, std::span<const Index> s) {
  std::vector<std::uint8_t> in_s(g.order(), 0);
  for (Index x : s) {
    if (x >= g.order()) throw std::invalid_argument("cayley: element index out of range");
    in_s[x] = 1;
  }
  if (in_s[g.identity()]) throw std::invalid_argument("cayley: the connection set contains the identity");
  for (Index x : s)
    if (!in_s[g.inv(x)])
      throw std::invalid_argument("cayley: the connection set is not inverse-closed (" + g.label(x) + ")");
  Graph out(g.order());
  for (Index x = 0; x < g.order(); ++x)
    for (Index t : s) {
      Index y = g.mul(t, x);  // x y^-1 = t^-1, which lies in S
      if (x < y) out.add_edge(x, y);
    }
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> two_subsets(std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = a + 1; b < n; ++b) out.emplace_back(a, b);
  return out;
}

Graph triangular_graph(std::int64_t n) {
  if (n < 4) throw std::invalid_argument("triangular_graph: n must be at least 4");
  auto vs = two_subsets(n);
  Graph g(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    g.vertex_labels.push_back("{" + std::to_string(vs[i].first) + "," + std::to_string(vs[i].second) + "}");
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      auto [a, b] = vs[i];
      auto [c, d] = vs[j];
      int shared = (a == c) + (a == d) + (b == c) + (b == d);
      if (shared == 1) g.add_edge(i, j);
    }
  }
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.size());
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  out.vertex_labels = g.vertex_labels;
  return out;
}

bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  std::vector<std::uint8_t> seen(g.size(), 0);
  std::vector<std::size_t> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (auto w : g.neighbors(queue[head]))
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  return queue.size() == g.size();
}

std::vector<std::size_t> orbit(const RegularAction& a, std::size_t v0) {
  std::vector<std::size_t> out;
  std::vector<std::uint8_t> seen;
  for (const auto& perm : a.action) {
    if (seen.empty()) seen.assign(perm.size(), 0);
    std::size_t w = perm.at(v0);
    if (!seen[w]) {
      seen[w] = 1;
      out.push_back(w);
    }
  }
  return out;
}

PdsExtraction pds_from_regular_action(const Graph& g, const RegularAction& a, std::size_t v0) {
  const FiniteGroup& grp = *a.group;
  const std::size_t n = g.size();
  if (v0 >= n) throw std::invalid_argument("base vertex out of range");
  if (a.action.size() != grp.order()) throw std::invalid_argument("action must list one permutation per element");
  for (const auto& p : a.action)
    if (p.size() != n || !is_permutation(p))
      throw std::invalid_argument("action entries must be permutations of the vertex set");

  // Homomorphism: (x h)(v) = x(h(v)) for every generator h.
  for (Index x = 0; x < grp.order(); ++x)
    for (Index h : grp.generators()) {
      const auto& lhs = a.action[grp.mul(x, h)];
      for (std::size_t v = 0; v < n; ++v)
        if (lhs[v] != a.action[x][a.action[h][v]])
          throw std::invalid_argument("action is not a homomorphism at (" + grp.label(x) + ", " + grp.label(h) + ")");
    }
  for (Index h : grp.generators()) {
    const auto& p = a.action[h];
    for (std::size_t u = 0; u < n; ++u)
      for (auto w : g.neighbors(u))
        if (!g.adjacent(p[u], p[w]))
          throw std::invalid_argument("generator " + grp.label(h) + " is not a graph automorphism");
  }

  auto orb = orbit(a, v0);
  if (orb.size() != n)
    throw std::invalid_argument("action is not transitive: the orbit of vertex " +
                                (g.vertex_labels.empty() ? std::to_string(v0) : g.vertex_labels[v0]) +
                                " has size " + std::to_string(orb.size()) + " of " + std::to_string(n));
  if (grp.order() != n)
    throw std::invalid_argument("action is transitive but not regular: |G| = " + std::to_string(grp.order()) +
                                " on " + std::to_string(n) + " vertices");

  std::vector<Index> s;
  std::vector<std::size_t> eval(grp.order());
  for (Index x = 0; x < grp.order(); ++x) {
    if (g.adjacent(a.action[x][v0], v0)) s.push_back(x);
    eval[x] = a.action[grp.inv(x)][v0];
  }
  PdsExtraction out{PdsCandidate(a.group, s), std::move(eval)};
  Graph cay = cayley(grp, out.candidate.subset);
  for (Index x = 0; x < grp.order(); ++x)
    for (Index y = x + 1; y < grp.order(); ++y)
      if (cay.adjacent(x, y) != g.adjacent(out.evaluation[x], out.evaluation[y]))
        throw std::logic_error("Cayley graph disagrees with the input graph at (" + grp.label(x) + ", " +
                               grp.label(y) + ")");
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "graph " << g.size() << ' ' << g.edge_count() << '\n';
  for (std::size_t u = 0; u < g.size(); ++u)
    for (auto v : g.neighbors(u))
      if (u < v) os << u << ' ' << v << '\n';
  return os.str();
}

Graph from_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tag;
  std::size_t n = 0, m = 0;
  if (!(is >> tag >> n >> m) || tag != "graph") throw std::invalid_argument("edge list must start with 'graph n m'");
  Graph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t u = 0, v = 0;
    if (!(is >> u >> v)) throw std::invalid_argument("edge list ends after " + std::to_string(i) + " edges");
    if (u >= n || v >= n || u == v) throw std::invalid_argument("bad edge on line " + std::to_string(i + 2));
    g.add_edge(u, v);
  }
  std::string extra;
  if (is >> extra) throw std::invalid_argument("trailing data after the edge list");
  if (g.edge_count() != m) throw std::invalid_argument("edge list repeats an edge");
  return g;
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.size();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  }
  int bits = 0, acc = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(acc + 63);
        bits = acc = 0;
      }
    }
  if (bits > 0) out += static_cast<char>((acc << (6 - bits)) + 63);
  return out;
}

Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: character outside the printable range");
  std::size_t n = 0, pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else if (text.size() > 1 && text[1] != '~') {
    if (text.size() < 4) throw std::invalid_argument("graph6: truncated size field");
    for (int i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - 63);
    pos = 4;
  } else {
    if (text.size() < 8) throw std::invalid_argument("graph6: truncated size field");
    for (int i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - 63);
    pos = 8;
  }
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (text.size() - pos != (nbits + 5) / 6) throw std::invalid_argument("graph6: wrong body length");
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      int c = text[pos + bit / 6] - 63;
      if ((c >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

}  // namespace pdslab
