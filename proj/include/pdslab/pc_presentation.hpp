#pragma once

// Polycyclic presentations and a stack-based collector.
//
// Generators f1..fn with relative orders o_i. Relations:
//   f_i^{o_i} = w_i            (w_i a word in f_{i+1}..f_n)
//   [f_j, f_i] = c_{j,i}  j>i  (commutator f_j^-1 f_i^-1 f_j f_i, a word in f_{i+1}..f_n)
// Missing relations are trivial. Words are stored as letter lists
// (0-based generator indices, positive exponents only).

#include <cstdint>
#include <string>
#include <vector>

#include "pdslab/group.hpp"

namespace pdslab {

using PcWord = std::vector<std::uint32_t>;

struct PcPresentation {
  std::size_t n_gens = 0;
  std::vector<std::int64_t> relative_orders;
  std::vector<PcWord> power_relations;                 // size n_gens
  std::vector<std::vector<PcWord>> commutator_relations;  // [j][i] for j > i

  explicit PcPresentation(std::vector<std::int64_t> orders = {});
  void set_power(std::size_t i, PcWord w);
  void set_commutator(std::size_t j, std::size_t i, PcWord w);
  /// Checks index ranges and that every relation word only uses later generators.
  void validate() const;
};

inline constexpr std::size_t kCollectionBudget = 1'000'000;

/// Collects exponent vectors into normal form.
class Collector {
 public:
  explicit Collector(const PcPresentation& pc, std::size_t budget = kCollectionBudget);

  /// e <- e * word, in place. Throws std::runtime_error when the budget runs out.
  void multiply(std::vector<std::int64_t>& e, const PcWord& word) const;

 private:
  const PcPresentation& pc_;
  std::size_t budget_;
};

struct PcGroup {
  GroupPtr group;
  std::vector<std::vector<std::int64_t>> exponents;  // normal form of each element
};

/**
 * Enumerates the group breadth-first from f1..fn (labels "f1".."fn"), with
 * element labels set to the normal forms. Throws std::runtime_error when the
 * order differs from the product of the relative orders or collection does
 * not terminate; std::length_error above max_order.
 */
PcGroup group_from_pc_presentation(const PcPresentation& pc, std::size_t max_order = kDefaultMaxOrder);

}  // namespace pdslab
