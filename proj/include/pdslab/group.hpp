#pragma once

/**
 * @file group.hpp
 * @brief Finite groups as multiplication tables.
 *
 * Every group is enumerated breadth-first from its generators (taken in
 * input order, right multiplication), so element 0 is the identity and the
 * index of each element is reproducible. The product convention is the
 * composition one: for permutations (a*b)(x) = a(b(x)), for matrices the
 * ordinary matrix product acting on column vectors.
 */

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pdslab/finite_field.hpp"

namespace pdslab {

using Index = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 1'000'000;

class FiniteGroup {
 public:
  /**
   * Builds a group from a row-major table (row a holds a*b). Validates the
   * identity at index 0, the Latin-square property, that the generators
   * generate, and associativity on `assoc_samples` random triples (all
   * triples when order^3 <= assoc_samples). Throws std::invalid_argument.
   */
  FiniteGroup(std::size_t order, std::vector<Index> table, std::vector<Index> generators,
              std::vector<std::string> generator_labels = {}, std::size_t assoc_samples = 10'000);

  std::size_t order() const { return order_; }
  Index identity() const { return 0; }
  Index mul(Index a, Index b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Index inv(Index a) const { return inverse_[a]; }
  Index pow(Index a, std::int64_t n) const;
  Index commutator(Index a, Index b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  std::int64_t element_order(Index a) const;
  bool is_abelian() const;

  std::span<const Index> table() const { return table_; }
  std::span<const Index> generators() const { return generators_; }
  std::span<const std::string> generator_labels() const { return generator_labels_; }

  /// Word for an element: the override label if set, otherwise its BFS word.
  std::string label(Index a) const;
  /// Overrides element labels (e.g. normal forms). Size must equal order().
  void set_element_labels(std::vector<std::string> labels);
  void set_generator_labels(std::vector<std::string> labels);

  /// Label -> generator element, for word evaluation.
  std::map<std::string, Index, std::less<>> alphabet() const;

  /// FNV-1a over the table entries, for certificates.
  std::uint64_t table_hash() const;

 private:
  std::size_t order_ = 0;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::vector<Index> generators_;
  std::vector<std::string> generator_labels_;
  std::vector<std::string> element_labels_;
  std::vector<Index> bfs_parent_;
  std::vector<std::uint32_t> bfs_gen_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Checks associativity on `samples` pseudo-random triples (fixed seed). Throws on failure.
void check_associativity(const FiniteGroup& g, std::size_t samples);

// ---- permutation groups ----------------------------------------------------

using Permutation = std::vector<Index>;

/// (a*b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
bool is_permutation(const Permutation& a);

struct PermutationGroup {
  GroupPtr group;
  std::vector<Permutation> elements;  // elements[i] realises group element i
};

PermutationGroup group_from_permutations(const std::vector<Permutation>& gens,
                                         std::vector<std::string> labels = {},
                                         std::size_t max_order = kDefaultMaxOrder);

// ---- matrix groups ---------------------------------------------------------

struct Matrix {
  std::size_t n = 0;
  std::vector<FieldElem> entries;  // row-major
  FieldElem at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  FieldElem& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix identity_matrix(const GaloisField& f, std::size_t n);
Matrix mat_mul(const GaloisField& f, const Matrix& a, const Matrix& b);
FieldElem determinant(const GaloisField& f, Matrix a);

struct MatrixGroup {
  GroupPtr group;
  FieldPtr field;
  std::vector<Matrix> elements;
};

/// Closure of invertible matrices over `field`. Throws on singular or mismatched generators.
MatrixGroup group_from_matrices(FieldPtr field, const std::vector<Matrix>& gens,
                                std::vector<std::string> labels = {},
                                std::size_t max_order = kDefaultMaxOrder);

// ---- small named groups ----------------------------------------------------

/**
 * C_p x| C_t = <s, t | s^p = t^t = 1, t s t^-1 = s^m> with t the order of m
 * mod p. Requires p = 3 mod 4 prime and m generating the quadratic residues.
 * Element labels are the normal forms s^i*t^j.
 */
GroupPtr semidirect_cp_ct(std::int64_t p, std::int64_t m);

/// Z_{n1} x ... x Z_{nr}, generators the unit vectors labelled a, b, c, ...
GroupPtr abelian_group(std::span<const std::int64_t> moduli);

// ---- structure -------------------------------------------------------------

struct ConjugacyData {
  std::vector<std::vector<Index>> classes;  // classes[0] == {identity}; ordered by least element
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> centralizer_order;  // per class
};

ConjugacyData conjugacy(const FiniteGroup& g);

struct GroupStructure {
  bool is_abelian = false;
  std::vector<Index> center;
  std::vector<Index> derived_subgroup;
  std::int64_t exponent = 1;
};

GroupStructure structure(const FiniteGroup& g);

/// Sorted element set of the subgroup generated by `gens`.
std::vector<Index> subgroup_closure(const FiniteGroup& g, std::span<const Index> gens);
bool is_subgroup(const FiniteGroup& g, std::span<const Index> elements);
bool is_normal_subgroup(const FiniteGroup& g, std::span<const Index> elements);

struct QuotientMap {
  GroupPtr quotient;
  std::vector<Index> coset_of;         // element -> quotient index
  std::vector<Index> representatives;  // quotient index -> least element of the coset
};

/// G/N for a normal subgroup N; throws std::invalid_argument if N is not normal.
QuotientMap quotient_map(const FiniteGroup& g, std::span<const Index> normal_subgroup);

// ---- words -----------------------------------------------------------------

enum class WordOrder { left_to_right, right_to_left };

/**
 * Evaluates "a*b^2*c^-1" (or "1" for the identity) against an alphabet.
 * With right_to_left the factors are multiplied in reverse order.
 */
Index evaluate_word(const FiniteGroup& g, std::string_view word,
                    const std::map<std::string, Index, std::less<>>& alphabet,
                    WordOrder order = WordOrder::left_to_right);

/// Renders runs of (generator label, exponent) as "s^5*t".
std::string format_word(const std::vector<std::pair<std::string, std::int64_t>>& runs);

}  // namespace pdslab
