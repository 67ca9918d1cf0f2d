#pragma once

// Integer group ring Z[G] and the group-ring test for partial difference
// sets: S G = k G and S^2 = k + lambda S + mu (G - S - 1).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdslab/cyclotomic.hpp"
#include "pdslab/group.hpp"
#include "pdslab/srg_params.hpp"

namespace pdslab {

struct GroupRingElem {
  GroupPtr group;
  std::vector<std::int64_t> coeffs;

  static GroupRingElem zero(GroupPtr g);
  static GroupRingElem element(GroupPtr g, Index x);
  static GroupRingElem subset(GroupPtr g, std::span<const Index> s);
  /// The sum of all group elements.
  static GroupRingElem whole(GroupPtr g);

  GroupRingElem& operator+=(const GroupRingElem& o);
  GroupRingElem& operator-=(const GroupRingElem& o);
  GroupRingElem& operator*=(std::int64_t c);
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(std::int64_t c, GroupRingElem a) { return a *= c; }
  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
    return a.group == b.group && a.coeffs == b.coeffs;
  }
};

/// c_h = sum_g a_g b_{g^-1 h}. Throws std::invalid_argument on a group mismatch.
GroupRingElem convolve(const GroupRingElem& a, const GroupRingElem& b);

/// X^(m) = sum a_g g^m; coefficients accumulate where g -> g^m is not injective.
GroupRingElem power_map(const GroupRingElem& a, std::int64_t m);

struct PdsCandidate {
  GroupPtr group;
  std::vector<Index> subset;  // sorted, distinct

  PdsCandidate() = default;
  PdsCandidate(GroupPtr g, std::vector<Index> s);
  std::vector<std::string> words() const;
};

struct CoefficientFailure {
  Index element = 0;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
};

struct PdsCertificate {
  SrgParams params;
  bool size_ok = false;
  bool identity_excluded = false;
  bool inverse_closed = false;
  std::optional<Index> inverse_witness;  // s in S with s^-1 not in S
  std::vector<CoefficientFailure> failures;

  bool pass() const { return size_ok && identity_excluded && inverse_closed && failures.empty(); }
};

/// Checks |S| = k, 1 not in S, S = S^(-1) and S^2 coefficientwise.
/// Throws std::invalid_argument when v != |G|.
PdsCertificate verify_pds(const PdsCandidate& c, const SrgParams& p);

/// The unique (v, k, lambda, mu) for which c is a PDS, if any.
std::optional<SrgParams> infer_params(const PdsCandidate& c);

struct MultiplierResult {
  bool holds = false;
  std::vector<Index> witnesses;  // s in S with s^m not in S, ascending
};

/// S^(m) = S as sets. Requires gcd(m, |G|) = 1.
MultiplierResult multiplier_test(const PdsCandidate& c, std::int64_t m);

struct QuotientMultiplierResult {
  bool holds = false;
  std::size_t quotient_order = 0;
  std::optional<Index> witness;  // a coset (quotient index) whose multiplicity changes
};

/// Pushes S to G/G' as a multiset and compares it with its m-th power image.
/// Requires gcd(m, |G/G'|) = 1.
QuotientMultiplierResult quotient_multiplier_test(const PdsCandidate& c, std::int64_t m);

// ---- abelian characters ----------------------------------------------------

/// G as a direct product of cyclic groups <basis_i> of order moduli_i.
struct AbelianDecomposition {
  std::vector<std::int64_t> moduli;
  std::vector<Index> basis;
  std::vector<std::vector<std::int64_t>> coords;  // element -> exponents on the basis
  std::vector<Index> element_of;                  // mixed-radix coordinate index -> element
};

/// Throws std::domain_error for nonabelian input.
AbelianDecomposition abelian_decomposition(const FiniteGroup& g);

/**
 * Characters chi_y(x) = zeta_e^(sum_i c_i(x) c_i(y) e / n_i), indexed by the
 * group element y whose coordinates name the character. This identifies G*
 * with G through the decomposition.
 */
class CharacterTable {
 public:
  explicit CharacterTable(GroupPtr g);
  const AbelianDecomposition& decomposition() const { return dec_; }
  std::int64_t exponent() const { return e_; }
  std::size_t size() const { return group_->order(); }
  Cyclotomic value(Index chi, Index x) const;
  Cyclotomic sum(Index chi, std::span<const Index> s) const;

 private:
  GroupPtr group_;
  AbelianDecomposition dec_;
  std::int64_t e_ = 1;
};

enum class ThetaSelector { theta1, theta2 };

struct DualReport {
  SrgParams params;
  std::int64_t theta = 0;
  std::int64_t expected_size = 0;                 // m1 or m2
  std::vector<Index> dual_subset;                 // characters, named by group elements
  std::vector<std::int64_t> sums_by_character;    // integer chi(S) for every character
  std::optional<SrgParams> dual_params;
  bool size_ok = false;
  bool dual_is_pds = false;
  std::int64_t sqrt_delta = 0;
  std::optional<std::int64_t> dual_sqrt_delta;
  bool sqrt_delta_relation = false;               // sqrt(Delta*) = v / sqrt(Delta)
  std::vector<std::int64_t> moduli;               // the identification used
  std::vector<std::string> basis_labels;

  bool pass() const { return size_ok && dual_is_pds && sqrt_delta_relation; }
};

/**
 * S* = {chi : chi(S) = theta}. Requires an abelian group and Type II
 * parameters; throws std::domain_error if some character sum is not in
 * {k, theta1, theta2} (the input is then not a PDS).
 */
DualReport dual_pds(const PdsCandidate& c, const SrgParams& p, ThetaSelector which = ThetaSelector::theta1);

}  // namespace pdslab
