#pragma once

// Breadth-first enumeration of the closure of a generating set under right
// multiplication, and the table fill that follows from it.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pdslab/group.hpp"

namespace pdslab::detail {

template <class Elem>
struct Closure {
  std::vector<Elem> elements;
  std::vector<Index> right_gen;  // elements.size() x gens, index of e * gen_i
  std::vector<Index> parent;
  std::vector<std::uint32_t> parent_gen;
};

template <class Elem, class Hash, class Mul>
Closure<Elem> enumerate_closure(const Elem& identity, const std::vector<Elem>& gens, Mul&& mul,
                                std::size_t max_order) {
  Closure<Elem> c;
  std::unordered_map<Elem, Index, Hash> index;
  c.elements.push_back(identity);
  c.parent.push_back(0);
  c.parent_gen.push_back(0);
  index.emplace(identity, 0);
  const std::size_t ng = gens.size();
  for (std::size_t head = 0; head < c.elements.size(); ++head) {
    for (std::size_t i = 0; i < ng; ++i) {
      Elem child = mul(c.elements[head], gens[i]);
      auto it = index.find(child);
      Index idx;
      if (it == index.end()) {
        if (c.elements.size() >= max_order)
          throw std::length_error("group closure exceeds the size cap of " + std::to_string(max_order));
        idx = static_cast<Index>(c.elements.size());
        index.emplace(child, idx);
        c.elements.push_back(std::move(child));
        c.parent.push_back(static_cast<Index>(head));
        c.parent_gen.push_back(static_cast<std::uint32_t>(i));
      } else {
        idx = it->second;
      }
      c.right_gen.push_back(idx);
    }
  }
  return c;
}

/// Fills table[a][b] from the BFS tree: a*b = (a*parent(b)) * gen(b).
inline std::vector<Index> table_from_tree(std::size_t order, std::size_t ngens, const std::vector<Index>& right_gen,
                                          const std::vector<Index>& parent,
                                          const std::vector<std::uint32_t>& parent_gen) {
  std::vector<Index> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    Index* row = table.data() + a * order;
    row[0] = static_cast<Index>(a);
    for (std::size_t b = 1; b < order; ++b) row[b] = right_gen[row[parent[b]] * ngens + parent_gen[b]];
  }
  return table;
}

struct VectorHash {
  template <class T>
  std::size_t operator()(const std::vector<T>& v) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace pdslab::detail
