#include "pdslab/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <random>
#include <stdexcept>

#include "pdslab/detail/closure.hpp"
#include "pdslab/number_theory.hpp"

namespace pdslab {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Index> table, std::vector<Index> generators,
                         std::vector<std::string> generator_labels, std::size_t assoc_samples)
    : order_(order), table_(std::move(table)), generators_(std::move(generators)) {
  if (order_ == 0) throw std::invalid_argument("group order must be positive");
  if (table_.size() != order_ * order_) throw std::invalid_argument("group table has the wrong size");
  for (Index g : generators_)
    if (g >= order_) throw std::invalid_argument("generator index out of range");

  for (std::size_t a = 0; a < order_; ++a) {
    if (mul(0, static_cast<Index>(a)) != a || mul(static_cast<Index>(a), 0) != a)
      throw std::invalid_argument("index 0 is not the identity (row/column " + std::to_string(a) + ")");
  }
  std::vector<std::uint8_t> seen(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order_; ++b) {
      Index x = table_[a * order_ + b];
      if (x >= order_ || seen[x])
        throw std::invalid_argument("table is not a Latin square: row " + std::to_string(a) + ", column " +
                                    std::to_string(b));
      seen[x] = 1;
    }
  }
  for (std::size_t b = 0; b < order_; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < order_; ++a) {
      Index x = table_[a * order_ + b];
      if (seen[x])
        throw std::invalid_argument("table is not a Latin square: column " + std::to_string(b) + ", row " +
                                    std::to_string(a));
      seen[x] = 1;
    }
  }
  inverse_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      if (table_[a * order_ + b] == 0) {
        inverse_[a] = static_cast<Index>(b);
        break;
      }

  // BFS tree over the generators; doubles as the generation check.
  bfs_parent_.assign(order_, 0);
  bfs_gen_.assign(order_, 0);
  std::vector<std::uint8_t> reached(order_, 0);
  std::vector<Index> queue{0};
  reached[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      Index c = mul(queue[head], generators_[i]);
      if (!reached[c]) {
        reached[c] = 1;
        bfs_parent_[c] = queue[head];
        bfs_gen_[c] = static_cast<std::uint32_t>(i);
        queue.push_back(c);
      }
    }
  }
  if (queue.size() != order_) throw std::invalid_argument("generators do not generate the group");

  if (generator_labels.empty()) {
    for (std::size_t i = 0; i < generators_.size(); ++i) generator_labels.push_back("g" + std::to_string(i + 1));
  }
  set_generator_labels(std::move(generator_labels));

  if (assoc_samples > 0) check_associativity(*this, assoc_samples);
}

Index FiniteGroup::pow(Index a, std::int64_t n) const {
  Index base = n < 0 ? inv(a) : a;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Index r = 0;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::int64_t FiniteGroup::element_order(Index a) const {
  std::int64_t k = 1;
  for (Index x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Index a : generators_)
    for (Index b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string FiniteGroup::label(Index a) const {
  if (!element_labels_.empty()) return element_labels_[a];
  if (a == 0) return "1";
  std::vector<std::uint32_t> letters;
  for (Index x = a; x != 0; x = bfs_parent_[x]) letters.push_back(bfs_gen_[x]);
  std::reverse(letters.begin(), letters.end());
  std::vector<std::pair<std::string, std::int64_t>> runs;
  for (auto l : letters) {
    if (!runs.empty() && runs.back().first == generator_labels_[l]) ++runs.back().second;
    else runs.emplace_back(generator_labels_[l], 1);
  }
  return format_word(runs);
}

void FiniteGroup::set_element_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != order_) throw std::invalid_argument("element label count mismatch");
  element_labels_ = std::move(labels);
}

void FiniteGroup::set_generator_labels(std::vector<std::string> labels) {
  if (labels.size() != generators_.size()) throw std::invalid_argument("generator label count mismatch");
  for (const auto& l : labels) {
    if (l.empty() || l == "1" || l.find_first_of("*^ \t,[]") != std::string::npos)
      throw std::invalid_argument("invalid generator label '" + l + "'");
  }
  generator_labels_ = std::move(labels);
}

std::map<std::string, Index, std::less<>> FiniteGroup::alphabet() const {
  std::map<std::string, Index, std::less<>> out;
  for (std::size_t i = 0; i < generators_.size(); ++i) out.emplace(generator_labels_[i], generators_[i]);
  return out;
}

std::uint64_t FiniteGroup::table_hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 4; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(order_);
  for (Index x : table_) mix(x);
  return h;
}

void check_associativity(const FiniteGroup& g, std::size_t samples) {
  const std::size_t n = g.order();
  auto check = [&](Index a, Index b, Index c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      throw std::invalid_argument("table is not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                                  "," + std::to_string(c) + ")");
  };
  if (n * n * n <= samples) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c) check(a, b, c);
    return;
  }
  std::mt19937_64 rng(0x5eed'0f'a55'0c);
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
  for (std::size_t i = 0; i < samples; ++i) check(pick(rng), pick(rng), pick(rng));
}

// ---- permutations ----------------------------------------------------------

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: degree mismatch");
  Permutation r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
  return r;
}

Permutation inverse(const Permutation& a) {
  Permutation r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<Index>(x);
  return r;
}

bool is_permutation(const Permutation& a) {
  std::vector<std::uint8_t> seen(a.size(), 0);
  for (Index x : a) {
    if (x >= a.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

PermutationGroup group_from_permutations(const std::vector<Permutation>& gens, std::vector<std::string> labels,
                                         std::size_t max_order) {
  if (gens.empty()) throw std::invalid_argument("group_from_permutations: no generators");
  const std::size_t degree = gens.front().size();
  for (const auto& g : gens)
    if (g.size() != degree || !is_permutation(g))
      throw std::invalid_argument("group_from_permutations: generator is not a permutation of the common set");
  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<Index>(i);
  auto c = detail::enumerate_closure<Permutation, detail::VectorHash>(
      id, gens, [](const Permutation& a, const Permutation& b) { return compose(a, b); }, max_order);
  const std::size_t v = c.elements.size();
  auto table = detail::table_from_tree(v, gens.size(), c.right_gen, c.parent, c.parent_gen);
  std::vector<Index> gen_idx;
  for (std::size_t i = 0; i < gens.size(); ++i) gen_idx.push_back(c.right_gen[i]);
  PermutationGroup out;
  out.group = std::make_shared<FiniteGroup>(v, std::move(table), std::move(gen_idx), std::move(labels));
  out.elements = std::move(c.elements);
  return out;
}

// ---- matrices --------------------------------------------------------------

Matrix identity_matrix(const GaloisField& f, std::size_t n) {
  Matrix m{n, std::vector<FieldElem>(n * n, f.zero())};
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix mat_mul(const GaloisField& f, const Matrix& a, const Matrix& b) {
  if (a.n != b.n) throw std::invalid_argument("mat_mul: dimension mismatch");
  const std::size_t n = a.n;
  Matrix c{n, std::vector<FieldElem>(n * n, f.zero())};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      FieldElem x = a.at(i, k);
      if (x == f.zero()) continue;
      for (std::size_t j = 0; j < n; ++j) c.at(i, j) = f.add(c.at(i, j), f.mul(x, b.at(k, j)));
    }
  return c;
}

FieldElem determinant(const GaloisField& f, Matrix a) {
  const std::size_t n = a.n;
  FieldElem det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col) == f.zero()) ++piv;
    if (piv == n) return f.zero();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      det = f.neg(det);
    }
    FieldElem p = a.at(col, col);
    det = f.mul(det, p);
    FieldElem pinv = f.inv(p);
    for (std::size_t r = col + 1; r < n; ++r) {
      FieldElem factor = f.mul(a.at(r, col), pinv);
      if (factor == f.zero()) continue;
      for (std::size_t j = col; j < n; ++j) a.at(r, j) = f.sub(a.at(r, j), f.mul(factor, a.at(col, j)));
    }
  }
  return det;
}

namespace {

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : m.entries) {
      h ^= x.value;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

MatrixGroup group_from_matrices(FieldPtr field, const std::vector<Matrix>& gens, std::vector<std::string> labels,
                                std::size_t max_order) {
  if (gens.empty()) throw std::invalid_argument("group_from_matrices: no generators");
  const std::size_t n = gens.front().n;
  for (const auto& g : gens) {
    if (g.n != n || g.entries.size() != n * n) throw std::invalid_argument("group_from_matrices: dimension mismatch");
    for (auto x : g.entries)
      if (x.value >= field->order()) throw std::invalid_argument("group_from_matrices: entry outside the field");
    if (determinant(*field, g) == field->zero()) throw std::invalid_argument("group_from_matrices: singular generator");
  }
  const GaloisField& f = *field;
  auto c = detail::enumerate_closure<Matrix, MatrixHash>(
      identity_matrix(f, n), gens, [&f](const Matrix& a, const Matrix& b) { return mat_mul(f, a, b); }, max_order);
  const std::size_t v = c.elements.size();
  auto table = detail::table_from_tree(v, gens.size(), c.right_gen, c.parent, c.parent_gen);
  std::vector<Index> gen_idx;
  for (std::size_t i = 0; i < gens.size(); ++i) gen_idx.push_back(c.right_gen[i]);
  MatrixGroup out;
  out.field = std::move(field);
  out.group = std::make_shared<FiniteGroup>(v, std::move(table), std::move(gen_idx), std::move(labels));
  out.elements = std::move(c.elements);
  return out;
}

// ---- named groups ----------------------------------------------------------

GroupPtr semidirect_cp_ct(std::int64_t p, std::int64_t m) {
  if (!is_prime(p) || p % 4 != 3) throw std::invalid_argument("semidirect_cp_ct: p must be a prime = 3 mod 4");
  if (floor_mod(m, p) == 0) throw std::invalid_argument("semidirect_cp_ct: m must be a unit mod p");
  const std::int64_t t = (p - 1) / 2;
  if (multiplicative_order(m, p) != t)
    throw std::invalid_argument("semidirect_cp_ct: m must generate the quadratic residues mod p");
  using Pair = std::vector<std::int64_t>;  // (i, j) for s^i t^j
  std::vector<std::int64_t> mpow(t);
  for (std::int64_t j = 0; j < t; ++j) mpow[j] = pow_mod(m, j, p);
  auto mul = [&](const Pair& a, const Pair& b) {
    // (s^a t^b)(s^c t^d) = s^(a + m^b c) t^(b+d)
    return Pair{floor_mod(a[0] + mpow[a[1]] * b[0], p), (a[1] + b[1]) % t};
  };
  std::vector<Pair> gens{{1, 0}, {0, 1 % t}};
  auto c = detail::enumerate_closure<Pair, detail::VectorHash>(Pair{0, 0}, gens, mul, kDefaultMaxOrder);
  const std::size_t v = c.elements.size();
  auto table = detail::table_from_tree(v, 2, c.right_gen, c.parent, c.parent_gen);
  auto g = std::make_shared<FiniteGroup>(v, std::move(table), std::vector<Index>{c.right_gen[0], c.right_gen[1]},
                                         std::vector<std::string>{"s", "t"});
  std::vector<std::string> labels;
  for (const auto& e : c.elements) labels.push_back(format_word({{"s", e[0]}, {"t", e[1]}}));
  g->set_element_labels(std::move(labels));
  return g;
}

GroupPtr abelian_group(std::span<const std::int64_t> moduli) {
  if (moduli.empty()) throw std::invalid_argument("abelian_group: no factors");
  using Vec = std::vector<std::int64_t>;
  std::vector<Vec> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] < 1) throw std::invalid_argument("abelian_group: moduli must be positive");
    Vec e(moduli.size(), 0);
    e[i] = 1 % moduli[i];
    gens.push_back(e);
    names.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  auto mul = [&](const Vec& a, const Vec& b) {
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % moduli[i];
    return c;
  };
  auto c = detail::enumerate_closure<Vec, detail::VectorHash>(Vec(moduli.size(), 0), gens, mul, kDefaultMaxOrder);
  const std::size_t v = c.elements.size();
  auto table = detail::table_from_tree(v, gens.size(), c.right_gen, c.parent, c.parent_gen);
  std::vector<Index> gen_idx;
  for (std::size_t i = 0; i < gens.size(); ++i) gen_idx.push_back(c.right_gen[i]);
  auto g = std::make_shared<FiniteGroup>(v, std::move(table), std::move(gen_idx), names);
  std::vector<std::string> labels;
  for (const auto& e : c.elements) {
    std::vector<std::pair<std::string, std::int64_t>> runs;
    for (std::size_t i = 0; i < e.size(); ++i) runs.emplace_back(names[i], e[i]);
    labels.push_back(format_word(runs));
  }
  g->set_element_labels(std::move(labels));
  return g;
}

// ---- structure -------------------------------------------------------------

ConjugacyData conjugacy(const FiniteGroup& g) {
  const std::size_t n = g.order();
  ConjugacyData d;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  d.class_of.assign(n, kUnset);
  std::vector<std::uint8_t> in_class(n, 0);
  for (Index x = 0; x < n; ++x) {
    if (d.class_of[x] != kUnset) continue;
    std::vector<Index> cls;
    for (Index y = 0; y < n; ++y) {
      Index c = g.mul(g.mul(y, x), g.inv(y));
      if (!in_class[c]) {
        in_class[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    for (Index c : cls) {
      d.class_of[c] = d.classes.size();
      in_class[c] = 0;
    }
    d.centralizer_order.push_back(n / cls.size());
    d.classes.push_back(std::move(cls));
  }
  return d;
}

std::vector<Index> subgroup_closure(const FiniteGroup& g, std::span<const Index> gens) {
  std::vector<std::uint8_t> in(g.order(), 0);
  std::vector<Index> elems{0};
  in[0] = 1;
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (Index s : gens) {
      Index c = g.mul(elems[head], s);
      if (!in[c]) {
        in[c] = 1;
        elems.push_back(c);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

GroupStructure structure(const FiniteGroup& g) {
  const std::size_t n = g.order();
  GroupStructure s;
  s.is_abelian = g.is_abelian();
  for (Index x = 0; x < n; ++x) {
    bool central = true;
    for (Index gen : g.generators())
      if (g.mul(x, gen) != g.mul(gen, x)) { central = false; break; }
    if (central) s.center.push_back(x);
  }
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Index> commutators;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      Index c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        commutators.push_back(c);
      }
    }
  s.derived_subgroup = subgroup_closure(g, commutators);
  for (Index x = 0; x < n; ++x) s.exponent = lcm(s.exponent, g.element_order(x));
  return s;
}

bool is_subgroup(const FiniteGroup& g, std::span<const Index> elements) {
  std::vector<std::uint8_t> in(g.order(), 0);
  for (Index x : elements) {
    if (x >= g.order()) return false;
    in[x] = 1;
  }
  if (!in[0]) return false;
  for (Index a : elements)
    for (Index b : elements)
      if (!in[g.mul(a, g.inv(b))]) return false;
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, std::span<const Index> elements) {
  if (!is_subgroup(g, elements)) return false;
  std::vector<std::uint8_t> in(g.order(), 0);
  for (Index x : elements) in[x] = 1;
  for (Index y = 0; y < g.order(); ++y)
    for (Index x : elements)
      if (!in[g.mul(g.mul(y, x), g.inv(y))]) return false;
  return true;
}

QuotientMap quotient_map(const FiniteGroup& g, std::span<const Index> normal_subgroup) {
  if (!is_normal_subgroup(g, normal_subgroup)) throw std::invalid_argument("quotient_map: subgroup is not normal");
  const std::size_t n = g.order();
  const std::size_t h = normal_subgroup.size();
  QuotientMap q;
  constexpr Index kUnset = static_cast<Index>(-1);
  q.coset_of.assign(n, kUnset);
  for (Index x = 0; x < n; ++x) {
    if (q.coset_of[x] != kUnset) continue;
    Index id = static_cast<Index>(q.representatives.size());
    q.representatives.push_back(x);
    for (Index y : normal_subgroup) q.coset_of[g.mul(x, y)] = id;
  }
  const std::size_t m = q.representatives.size();
  if (m * h != n) throw std::logic_error("quotient_map: coset count mismatch");
  std::vector<Index> table(m * m);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      table[a * m + b] = q.coset_of[g.mul(q.representatives[a], q.representatives[b])];
  std::vector<Index> gens;
  std::vector<std::string> labels;
  auto glabels = g.generator_labels();
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    gens.push_back(q.coset_of[g.generators()[i]]);
    labels.push_back(glabels[i]);
  }
  q.quotient = std::make_shared<FiniteGroup>(m, std::move(table), std::move(gens), std::move(labels));
  return q;
}

// ---- words -----------------------------------------------------------------

std::string format_word(const std::vector<std::pair<std::string, std::int64_t>>& runs) {
  std::string out;
  for (const auto& [name, e] : runs) {
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

Index evaluate_word(const FiniteGroup& g, std::string_view word,
                    const std::map<std::string, Index, std::less<>>& alphabet, WordOrder order) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  };
  word = strip(word);
  if (word.empty()) throw std::invalid_argument("empty word");
  std::vector<Index> factors;
  std::size_t pos = 0;
  while (pos <= word.size()) {
    std::size_t star = word.find('*', pos);
    std::string_view tok = strip(word.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    if (tok.empty()) throw std::invalid_argument("malformed word '" + std::string(word) + "'");
    std::int64_t e = 1;
    std::string_view name = tok;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      name = strip(tok.substr(0, caret));
      std::string_view ex = strip(tok.substr(caret + 1));
      auto [ptr, ec] = std::from_chars(ex.data(), ex.data() + ex.size(), e);
      if (ec != std::errc() || ptr != ex.data() + ex.size())
        throw std::invalid_argument("bad exponent in word '" + std::string(word) + "'");
    }
    Index base;
    if (name == "1") {
      base = 0;
    } else {
      auto it = alphabet.find(name);
      if (it == alphabet.end()) throw std::invalid_argument("unknown generator label '" + std::string(name) + "'");
      base = it->second;
    }
    factors.push_back(g.pow(base, e));
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  if (order == WordOrder::right_to_left) std::reverse(factors.begin(), factors.end());
  Index r = 0;
  for (Index f : factors) r = g.mul(r, f);
  return r;
}

}  // namespace pdslab
