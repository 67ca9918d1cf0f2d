#include "pdslab/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "pdslab/detail/closure.hpp"
#include "pdslab/number_theory.hpp"
#include "pdslab/pc_presentation.hpp"

namespace pdslab {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

std::vector<std::uint32_t> matrix_key(const Matrix& m) {
  std::vector<std::uint32_t> k;
  k.reserve(m.entries.size());
  for (auto e : m.entries) k.push_back(e.value);
  return k;
}

}  // namespace

// ---- triangular graphs -----------------------------------------------------

TriangularConstruction triangular_pds(std::int64_t q) {
  auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument("triangular construction needs a prime power q, got " + std::to_string(q));
  if (q % 2 == 0) throw std::invalid_argument("triangular construction needs odd q, got " + std::to_string(q));
  if (q < 5) throw std::invalid_argument("T_3 is a triangle, not a strongly regular graph; need q >= 7");
  const auto [p, d] = *pp;

  TriangularConstruction tc;
  tc.q = q;
  tc.t = (q - 1) / 2;
  tc.field = GaloisField::create(p, d);
  const GaloisField& f = *tc.field;
  tc.m = f.pow(f.primitive_element(), 2);

  const auto uq = static_cast<std::uint32_t>(q);
  std::vector<std::uint32_t> index(static_cast<std::size_t>(q * q), 0);
  for (std::uint32_t a = 0; a < uq; ++a)
    for (std::uint32_t b = a + 1; b < uq; ++b) {
      index[a * uq + b] = index[b * uq + a] = static_cast<std::uint32_t>(tc.vertices.size());
      tc.vertices.emplace_back(FieldElem{a}, FieldElem{b});
    }
  auto induced = [&](auto&& point_map) {
    Permutation perm(tc.vertices.size());
    for (std::size_t i = 0; i < tc.vertices.size(); ++i) {
      FieldElem a = point_map(tc.vertices[i].first), b = point_map(tc.vertices[i].second);
      perm[i] = index[a.value * uq + b.value];
    }
    return perm;
  };

  std::vector<std::string> gen_labels;
  std::int64_t basis_value = 1;
  for (int k = 0; k < d; ++k, basis_value *= p) {
    FieldElem e{static_cast<std::uint32_t>(basis_value)};
    tc.sigma.push_back(induced([&](FieldElem x) { return f.add(x, e); }));
    gen_labels.push_back(d == 1 ? "s" : "s" + std::to_string(k + 1));
  }
  tc.tau = induced([&](FieldElem x) { return f.mul(tc.m, x); });
  gen_labels.push_back("t");

  std::vector<Permutation> gens = tc.sigma;
  gens.push_back(tc.tau);
  tc.group = group_from_permutations(gens, gen_labels);
  const FiniteGroup g = *tc.group.group;

  // Normal forms s1^a1*...*sd^ad*t^j for x -> m^j x + c.
  std::unordered_map<Permutation, Index, detail::VectorHash> element_index;
  for (Index i = 0; i < tc.group.elements.size(); ++i) element_index.emplace(tc.group.elements[i], i);
  std::vector<std::string> labels(g.order());
  for (std::uint32_t c = 0; c < uq; ++c)
    for (std::int64_t j = 0; j < tc.t; ++j) {
      FieldElem mj = f.pow(tc.m, j);
      auto it = element_index.find(induced([&](FieldElem x) { return f.add(f.mul(mj, x), FieldElem{c}); }));
      if (it == element_index.end()) continue;
      std::vector<std::pair<std::string, std::int64_t>> runs;
      auto digits = f.coeffs(FieldElem{c});
      for (int k = 0; k < d; ++k) runs.emplace_back(gen_labels[k], digits[k]);
      runs.emplace_back("t", j);
      labels[it->second] = format_word(runs);
    }

  RegularAction action{tc.group.group, tc.group.elements};
  if (q % 4 == 1) {
    auto orb = orbit(action, 0);
    std::string listing;
    for (auto v : orb) {
      listing += listing.empty() ? "" : ", ";
      listing += "{" + std::to_string(tc.vertices[v].first.value) + "," + std::to_string(tc.vertices[v].second.value) + "}";
    }
    throw std::invalid_argument("q = " + std::to_string(q) + " is 1 mod 4, so -1 is a square and the group of order " +
                                std::to_string(g.order()) + " is not transitive on the " +
                                std::to_string(tc.vertices.size()) + " vertices: the orbit of {0,1} is {" + listing +
                                "} (size " + std::to_string(orb.size()) + ")");
  }

  for (const auto& l : labels) require(!l.empty(), "triangular group element outside the affine normal forms");
  {
    auto labelled = std::make_shared<FiniteGroup>(g);
    labelled->set_element_labels(labels);
    tc.group.group = labelled;
    action.group = labelled;
  }
  require(static_cast<std::int64_t>(g.order()) == q * tc.t, "triangular group has the wrong order");

  const Index s1 = g.generators()[0];
  const Index tau = g.generators()[d];
  if (d == 1) {
    const std::int64_t m_int = tc.m.value;
    require(g.mul(g.mul(tau, s1), g.inv(tau)) == g.pow(s1, m_int), "tau sigma tau^-1 != sigma^m");
  }

  tc.graph = triangular_graph(q);
  tc.pds = pds_from_regular_action(tc.graph, action, 0);
  tc.certificate = verify_pds(tc.pds.candidate, triangular_params(q));
  tc.srg = verify_srg(cayley(g, tc.pds.candidate.subset));
  require(tc.certificate.pass(), "group-ring check rejected the triangular PDS");
  const auto expected = triangular_params(q);
  require(tc.srg.is_srg && tc.srg.k == expected.k && tc.srg.lambda == expected.lambda && tc.srg.mu == expected.mu,
          "common-neighbour count rejected the triangular Cayley graph");

  // S = {s, s^-1} u T u T s^-1 u s T u s T s^-1 with T = {t^j : 1 <= j < t}.
  std::vector<Index> predicted{s1, g.inv(s1)};
  std::vector<Index> big_t, conj_t;
  for (std::int64_t j = 1; j < tc.t; ++j) {
    Index tj = g.pow(tau, j);
    big_t.push_back(tj);
    conj_t.push_back(g.mul(g.mul(s1, tj), g.inv(s1)));
    predicted.push_back(tj);
    predicted.push_back(g.mul(tj, g.inv(s1)));
    predicted.push_back(g.mul(s1, tj));
    predicted.push_back(conj_t.back());
  }
  std::sort(predicted.begin(), predicted.end());
  require(predicted == tc.pds.candidate.subset, "S differs from {s, s^-1} u T u Ts^-1 u sT u sTs^-1");
  for (Index x : big_t)
    require(std::find(conj_t.begin(), conj_t.end(), x) == conj_t.end(), "T meets sTs^-1");
  return tc;
}

// ---- order 27 --------------------------------------------------------------

Order27Construction order27_pds(Order27Variant which) {
  PcPresentation pc({3, 3, 3});
  std::vector<std::string> words;
  std::map<std::string, Index, std::less<>> alphabet;
  PcGroup base;
  if (which == Order27Variant::heisenberg) {
    // f1 = x, f2 = y, f3 = z central, [y, x] = z.
    pc.set_commutator(1, 0, {2});
    base = group_from_pc_presentation(pc);
    const auto gens = base.group->generators();
    alphabet = {{"x", gens[0]}, {"y", gens[1]}, {"z", gens[2]}};
    words = {"x", "x^2", "x*y", "x*y^2", "z", "y*z", "x^2*y^2*z", "z^2", "y^2*z^2", "x^2*y*z^2"};
  } else {
    // f1 = y, f2 = x, f3 = x^3; y^-1 x y = x^4 gives [x, y] = x^3.
    pc.set_power(1, {2});
    pc.set_commutator(1, 0, {2});
    base = group_from_pc_presentation(pc);
    const auto gens = base.group->generators();
    alphabet = {{"x", gens[1]}, {"y", gens[0]}};
    words = {"x^2", "x^3", "x^6", "x^7", "x^2*y", "x^3*y", "x^4*y", "x*y^2", "x^2*y^2", "x^6*y^2"};
  }

  const FiniteGroup& b = *base.group;
  std::vector<Index> gen_idx;
  std::vector<std::string> gen_labels;
  for (const auto& [name, idx] : alphabet) {
    gen_idx.push_back(idx);
    gen_labels.push_back(name);
  }
  auto g = std::make_shared<FiniteGroup>(b.order(), std::vector<Index>(b.table().begin(), b.table().end()), gen_idx,
                                         gen_labels);
  std::vector<std::string> labels(g->order());
  const bool heis = which == Order27Variant::heisenberg;
  const std::int64_t xo = heis ? 3 : 9;
  for (std::int64_t i = 0; i < xo; ++i)
    for (std::int64_t j = 0; j < 3; ++j)
      for (std::int64_t k = 0; k < (heis ? 3 : 1); ++k) {
        std::vector<std::pair<std::string, std::int64_t>> runs{{"x", i}, {"y", j}};
        if (heis) runs.emplace_back("z", k);
        std::string w = format_word(runs);
        labels[evaluate_word(*g, w, alphabet)] = w;
      }
  for (const auto& l : labels) require(!l.empty(), "order-27 normal forms do not cover the group");
  g->set_element_labels(labels);

  std::vector<Index> s;
  for (const auto& w : words) s.push_back(evaluate_word(*g, w, alphabet));
  Order27Construction out{g, alphabet, words, PdsCandidate(g, s), {}, {}};
  const SrgParams params{27, 10, 1, 5};
  out.certificate = verify_pds(out.pds, params);
  out.srg = verify_srg(cayley(*g, out.pds.subset));
  return out;
}

// ---- Hermitian quadrangle family ------------------------------------------

GodsilConstruction godsil_pds(std::int64_t q, std::int64_t r, std::int64_t cap) {
  if (!prime_power(q)) throw std::invalid_argument("q must be a prime power");
  if (r <= 1 || r >= q + 1 || (q + 1) % r != 0)
    throw std::invalid_argument("need 1 < r < q+1 with r | q+1, got q = " + std::to_string(q) +
                                ", r = " + std::to_string(r));
  GodsilConstruction gc;
  gc.q = q;
  gc.r = r;
  gc.geometry = HermitianGeometry::build(q, cap);
  gc.expected = godsil_params(q, r);
  const HermitianGeometry& h = gc.geometry;
  const FieldPtr& fp = h.field();
  const GaloisField& f = *fp;
  const std::int64_t q3 = q * q * q;
  const std::int64_t g_order = (q + 1) / r;

  // g = diag(gamma, 1, 1, 1) with gamma of order (q+1)/r.
  gc.gamma = f.element_of_order(g_order);
  gc.g = identity_matrix(f, 4);
  gc.g.at(0, 0) = gc.gamma;
  require(f.pow(gc.gamma, q + 1) == f.one(), "gamma^(q+1) != 1");

  auto is_isometry = [&](const Matrix& m) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Vec4 x{f.zero(), f.zero(), f.zero(), f.zero()}, y = x;
        x[i] = f.one();
        y[j] = f.one();
        if (hermitian_form(f, apply(f, m, x), apply(f, m, y)) != hermitian_form(f, x, y)) return false;
      }
    return true;
  };
  require(is_isometry(gc.g), "g does not preserve the Hermitian form");
  const auto g_points = h.point_permutation(gc.g);
  for (auto o : h.ovoid()) require(g_points[o] == o, "g moves an ovoid point");
  const auto g_lines = h.line_permutation(g_points);
  {
    std::vector<std::uint32_t> power = g_lines;
    for (std::int64_t i = 1; i < g_order; ++i) {
      for (std::uint32_t l = 0; l < power.size(); ++l)
        require(power[l] != l, "g^" + std::to_string(i) + " fixes a line");
      for (auto& x : power) x = g_lines[x];
    }
    for (std::uint32_t l = 0; l < power.size(); ++l) require(power[l] == l, "g has the wrong order on lines");
  }

  // <g>-orbits of lines, numbered by their least line.
  const std::uint32_t none = static_cast<std::uint32_t>(-1);
  gc.line_orbit.assign(h.lines().size(), none);
  for (std::uint32_t l = 0; l < h.lines().size(); ++l) {
    if (gc.line_orbit[l] != none) continue;
    const auto id = static_cast<std::uint32_t>(gc.orbits.size());
    std::vector<std::uint32_t> orb;
    for (std::uint32_t x = l; gc.line_orbit[x] == none; x = g_lines[x]) {
      gc.line_orbit[x] = id;
      orb.push_back(x);
    }
    std::sort(orb.begin(), orb.end());
    gc.orbits.push_back(std::move(orb));
  }
  for (auto l : h.lines_on(h.p0())) gc.orbits_through_p0.push_back(gc.line_orbit[l]);
  std::sort(gc.orbits_through_p0.begin(), gc.orbits_through_p0.end());
  gc.orbits_through_p0.erase(std::unique(gc.orbits_through_p0.begin(), gc.orbits_through_p0.end()),
                             gc.orbits_through_p0.end());
  require(static_cast<std::int64_t>(gc.orbits_through_p0.size()) == r,
          "expected r orbits of lines through P0, found " + std::to_string(gc.orbits_through_p0.size()));

  // The q^3-group of matrices t_{alpha,beta}, generated greedily.
  std::vector<Matrix> all_t;
  for (auto [a, b] : hermitian_trace_zero_pairs(f)) {
    Matrix t = identity_matrix(f, 4);
    t.at(1, 2) = f.neg(f.frobenius_q(b));
    t.at(1, 3) = a;
    t.at(2, 3) = b;
    all_t.push_back(std::move(t));
  }
  require(static_cast<std::int64_t>(all_t.size()) == q3, "wrong number of trace-zero pairs");
  std::vector<Matrix> gens;
  std::unordered_set<std::vector<std::uint32_t>, detail::VectorHash> span{matrix_key(identity_matrix(f, 4))};
  for (const auto& t : all_t) {
    if (span.count(matrix_key(t))) continue;
    gens.push_back(t);
    std::vector<Matrix> frontier;
    for (const auto& k : span) {
      Matrix m{4, {}};
      for (auto v : k) m.entries.push_back(FieldElem{v});
      frontier.push_back(std::move(m));
    }
    for (std::size_t head = 0; head < frontier.size(); ++head)
      for (const auto& gen : gens) {
        Matrix c = mat_mul(f, frontier[head], gen);
        if (span.insert(matrix_key(c)).second) frontier.push_back(std::move(c));
      }
  }
  std::vector<std::string> gen_labels;
  for (std::size_t i = 0; i < gens.size(); ++i) gen_labels.push_back("t" + std::to_string(i + 1));
  gc.unitary_sylow = group_from_matrices(fp, gens, gen_labels);
  const FiniteGroup& grp = *gc.unitary_sylow.group;
  require(static_cast<std::int64_t>(grp.order()) == q3, "the t-matrices generate a group of order " +
                                                            std::to_string(grp.order()) + ", expected q^3");
  {
    std::unordered_set<std::vector<std::uint32_t>, detail::VectorHash> t_keys;
    for (const auto& t : all_t) t_keys.insert(matrix_key(t));
    for (const auto& m : gc.unitary_sylow.elements)
      require(t_keys.count(matrix_key(m)) == 1, "the q^3-group contains a matrix outside {t_alpha,beta}");
  }
  for (const auto& gen : gens) require(is_isometry(gen), "a t-matrix does not preserve the Hermitian form");
  for (const auto& m : gc.unitary_sylow.elements)
    require(mat_mul(f, gc.g, m) == mat_mul(f, m, gc.g), "g does not commute with the q^3-group");

  // Fixes P0, regular on the rest of the ovoid.
  const Vec4 base_point{f.zero(), f.zero(), f.zero(), f.one()};
  {
    std::vector<std::uint8_t> hit(h.points().size(), 0);
    for (const auto& m : gc.unitary_sylow.elements) {
      require(*h.point_index(apply(f, m, h.points()[h.p0()])) == h.p0(), "the q^3-group moves P0");
      auto img = h.point_index(apply(f, m, base_point));
      require(img && !hit[*img] && h.points()[*img][0] == f.zero() && *img != h.p0(),
              "the q^3-group is not regular on the ovoid minus P0");
      hit[*img] = 1;
    }
  }

  std::vector<std::vector<std::uint32_t>> gen_lines;
  for (const auto& gen : gens) gen_lines.push_back(h.line_permutation(h.point_permutation(gen)));
  for (auto o : gc.orbits_through_p0) {
    bool fixed = true;
    for (const auto& perm : gen_lines)
      for (auto l : gc.orbits[o]) fixed = fixed && gc.line_orbit[perm[l]] == o;
    if (fixed) gc.fixed_orbits_through_p0.push_back(o);
  }
  require(!gc.fixed_orbits_through_p0.empty(), "no orbit of lines through P0 is fixed by the q^3-group");
  // Orbits are numbered by least line, so the least fixed id holds the least line.
  gc.ell0 = gc.orbits[gc.fixed_orbits_through_p0.front()].front();

  // Vertices: orbits of lines off P0 meeting ell0.
  std::vector<std::uint32_t> vertex_of(gc.orbits.size(), none);
  for (auto x : h.lines()[gc.ell0]) {
    if (x == h.p0()) continue;
    for (auto l : h.lines_on(x))
      if (l != gc.ell0) gc.vertices.push_back(gc.line_orbit[l]);
  }
  std::sort(gc.vertices.begin(), gc.vertices.end());
  gc.vertices.erase(std::unique(gc.vertices.begin(), gc.vertices.end()), gc.vertices.end());
  require(static_cast<std::int64_t>(gc.vertices.size()) == q3,
          "found " + std::to_string(gc.vertices.size()) + " vertex orbits, expected q^3");
  for (std::uint32_t v = 0; v < gc.vertices.size(); ++v) vertex_of[gc.vertices[v]] = v;

  gc.graph = Graph(gc.vertices.size());
  for (std::uint32_t v = 0; v < gc.vertices.size(); ++v) {
    const auto rep = gc.orbits[gc.vertices[v]].front();
    for (auto x : h.lines()[rep])
      for (auto l : h.lines_on(x)) {
        const auto w = vertex_of[gc.line_orbit[l]];
        if (w != none && w != v && !gc.graph.adjacent(v, w)) gc.graph.add_edge(v, w);
      }
  }
  auto graph_check = verify_srg(gc.graph);
  const auto& ep = gc.expected.params;
  require(graph_check.is_srg && graph_check.k == ep.k && graph_check.lambda == ep.lambda &&
              graph_check.mu == ep.mu,
          "the orbit graph is not an SRG with parameters " + ep.to_string());

  RegularAction action{gc.unitary_sylow.group, {}};
  for (const auto& m : gc.unitary_sylow.elements) {
    Permutation perm(gc.vertices.size());
    for (std::uint32_t v = 0; v < gc.vertices.size(); ++v) {
      const auto& line = h.lines()[gc.orbits[gc.vertices[v]].front()];
      auto a = h.point_index(apply(f, m, h.points()[line[0]]));
      auto b = h.point_index(apply(f, m, h.points()[line[1]]));
      auto img = h.line_through(*a, *b);
      require(img.has_value(), "a group element does not map lines to lines");
      const auto w = vertex_of[gc.line_orbit[*img]];
      require(w != none, "the q^3-group does not preserve the vertex set");
      perm[v] = w;
    }
    action.action.push_back(std::move(perm));
  }
  gc.pds = pds_from_regular_action(gc.graph, action, 0);
  gc.certificate = verify_pds(gc.pds.candidate, ep);
  gc.srg = verify_srg(cayley(grp, gc.pds.candidate.subset));
  require(gc.certificate.pass(), "group-ring check rejected the PDS");
  require(gc.srg.is_srg && gc.srg.k == ep.k && gc.srg.lambda == ep.lambda && gc.srg.mu == ep.mu,
          "common-neighbour count rejected the Cayley graph");

  gc.exponent = structure(grp).exponent;
  const std::int64_t p = prime_power(q)->first;
  require(gc.exponent == (p == 2 ? 4 : p), "the q^3-group has exponent " + std::to_string(gc.exponent));
  return gc;
}

}  // namespace pdslab
