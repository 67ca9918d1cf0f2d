#pragma once

/**
 * @file srg_params.hpp
 * @brief Exact arithmetic on (v, k, lambda, mu) parameter quadruples.
 *
 * Nothing here uses floating point. The nontrivial eigenvalues are kept as
 * the pair (lambda - mu, Delta) and only materialised as integers when Delta
 * is a perfect square. Products that grow with v are overflow-checked.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdslab {

struct SrgParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;

  /// mu = 0 (disjoint cliques) or mu = k (complete multipartite).
  bool is_trivial() const { return mu == 0 || mu == k; }

  std::string to_string() const;

  /// Parses "v,k,l,m" (optionally parenthesised). Throws std::invalid_argument.
  static SrgParams parse(std::string_view text);
};

/// k(k - lambda - 1) == (v - k - 1) mu.
bool check_first_feasibility(const SrgParams& p);

/**
 * Spectrum of a feasible parameter set.
 *
 * theta1/theta2 are ((lambda-mu) +- sqrt(Delta)) / 2. When Delta is not a
 * square they are irrational and only the pair (lambda_minus_mu, delta) is
 * meaningful; multiplicities are then filled in from the conference-graph
 * formula if and only if the parameters have the Paley shape.
 */
struct Spectrum {
  std::int64_t lambda_minus_mu = 0;
  std::int64_t delta = 0;
  std::optional<std::int64_t> sqrt_delta;
  std::optional<std::int64_t> m1;
  std::optional<std::int64_t> m2;
  bool multiplicity_integral = false;

  bool is_type2() const { return sqrt_delta.has_value(); }
  /// Integral eigenvalues; nullopt unless Type II with lambda-mu+sqrt(Delta) even.
  std::optional<std::int64_t> theta1() const;
  std::optional<std::int64_t> theta2() const;
};

/// Throws std::invalid_argument when the first feasibility condition fails.
Spectrum spectrum(const SrgParams& p);

struct ConferenceCheck {
  bool conference = false;   // Delta is not a perfect square
  bool paley_shape = false;  // (4mu+1, 2mu, mu-1, mu)
  /// A non-square Delta without the Paley shape: no SRG can exist.
  bool inconsistent() const { return conference && !paley_shape; }
};

ConferenceCheck is_conference(const SrgParams& p);

/// (v, v-k-1, v-2k+mu-2, v-2k+lambda). Involutive.
SrgParams complement_params(const SrgParams& p);

enum class AbelianVerdict { possible, impossible, unknown };

std::string_view to_string(AbelianVerdict v);

struct AbelianTest {
  AbelianVerdict verdict = AbelianVerdict::unknown;
  std::int64_t sqrt_delta = 0;
  std::string reason;
};

/**
 * Discriminant test for abelian PDSs: a Type II PDS in an abelian group of
 * order v needs sqrt(Delta) | v. Conference parameters are rejected with
 * std::invalid_argument. Trivial parameter sets always get "unknown", since
 * a complete graph satisfies the group-ring identity for any mu.
 */
AbelianTest abelian_type2_test(const SrgParams& p);

/// T_n: (n(n-1)/2, 2(n-2), n-2, 4), n >= 5.
SrgParams triangular_params(std::int64_t n);

struct GodsilParams {
  SrgParams params;
  std::int64_t sqrt_delta = 0;
  bool trivial = false;               // r == 1 gives the complete graph
  bool genuinely_nonabelian = false;  // sqrt(Delta) does not divide q^3
};

/// Parameters of the Hermitian-GQ family for prime power q and r | q+1, r < q+1.
GodsilParams godsil_params(std::int64_t q, std::int64_t r);

SrgParams paley_params(std::int64_t mu);
SrgParams latin_square_pl_params(std::int64_t m, std::int64_t r);
SrgParams latin_square_nl_params(std::int64_t m, std::int64_t r);
SrgParams gq_point_params(std::int64_t s, std::int64_t t);
SrgParams payne_params(std::int64_t q);

/**
 * Family lookup by name: paley(mu), latin_square_pl(m,r),
 * latin_square_nl(m,r), gq_point(s,t), payne(q), triangular(n),
 * godsil(q,r). Throws std::invalid_argument on malformed arguments.
 */
SrgParams catalog_params(std::string_view name, std::span<const std::int64_t> args);

struct ResidueReport {
  std::int64_t sqrt_delta = 0;
  std::int64_t theta1 = 0;
  std::int64_t theta2 = 0;
  std::int64_t residue = 0;             // mu - theta2(theta1 + 1)
  std::int64_t complement_residue = 0;  // v - 2k + lambda - theta2(theta1 + 1)
  std::int64_t residue_mod = 0;         // both normalised to [0, sqrt(Delta))
  std::int64_t complement_residue_mod = 0;
  bool no_nontrivial_center = false;  // neither residue divisible
  bool genuinely_nonabelian = false;  // at least one residue not divisible
};

/// Throws std::invalid_argument for conference (non Type II) parameters.
ResidueReport swartz_tauscheck_residues(const SrgParams& p);

struct FeasibilityReason {
  std::string rule;
  bool satisfied = false;
  std::string detail;
};

struct FeasibilityVerdict {
  SrgParams params;
  bool trivial = false;
  bool first_condition = false;
  bool conference = false;
  bool type2 = false;
  bool multiplicity_integral = false;
  AbelianVerdict abelian_possible = AbelianVerdict::unknown;
  bool genuinely_nonabelian_candidate = false;
  std::vector<FeasibilityReason> reasons;

  /// Passes every feasibility filter (the abelian verdict is a flag, not a filter).
  bool feasible() const;
};

/// Runs every parameter test in this module.
FeasibilityVerdict feasibility(const SrgParams& p);

struct ScanEntry {
  SrgParams params;
  bool accepted = false;
  std::string first_failing_filter;  // empty when accepted
  FeasibilityVerdict verdict;        // populated for accepted entries
};

struct ScanResult {
  std::vector<ScanEntry> entries;  // accepted, plus rejected when requested
  std::int64_t rejected_first_condition = 0;
  std::int64_t rejected_conference = 0;
  std::int64_t rejected_multiplicity = 0;
};

/**
 * Enumerates nontrivial quadruples (0 < mu < k, lambda < k-1, k < v-1) with
 * v <= v_max. Filters run in the order first condition, conference shape,
 * multiplicity; the discriminant test only flags abelian impossibility.
 */
ScanResult scan_parameters(std::int64_t v_max, bool keep_rejected = false);

}  // namespace pdslab
