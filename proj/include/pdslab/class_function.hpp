#pragma once

// Phi(x) = |Cl(x) n S| * |C_G(x)|. For a Type II PDS every nonidentity
// class satisfies Phi(x) = mu - theta2(theta1 + 1) mod sqrt(Delta).

#include <cstdint>
#include <string>
#include <vector>

#include "pdslab/group.hpp"
#include "pdslab/group_ring.hpp"
#include "pdslab/srg_params.hpp"

namespace pdslab {

struct PhiRow {
  Index representative = 0;  // least element of the class
  std::size_t class_size = 0;
  std::size_t centralizer_order = 0;
  std::size_t meet = 0;  // |Cl(x) n S|
  std::int64_t phi = 0;
  std::int64_t phi_mod = 0;  // in [0, sqrt(Delta))
  bool identity = false;     // the identity row is reported but not tested
  bool pass = false;
};

struct PhiReport {
  SrgParams params;
  std::int64_t sqrt_delta = 0;
  std::int64_t theta1 = 0;
  std::int64_t theta2 = 0;
  std::int64_t residue = 0;         // mu - theta2(theta1 + 1)
  std::int64_t residue_target = 0;  // residue mod sqrt(Delta)
  std::vector<PhiRow> per_class;
  bool all_pass = false;
};

/**
 * Builds the per-class table for a candidate that is already known to be a
 * PDS with parameters p (it is not re-verified). Throws std::invalid_argument
 * for conference parameters or when v != |G|.
 */
PhiReport phi_report(const PdsCandidate& c, const SrgParams& p);

/// Aligned text table; element names come from the group's labels.
std::string render_phi_table(const PhiReport& r, const FiniteGroup& g);

struct ClassMeetResult {
  bool applicable = false;  // false when sqrt(Delta) divides the residue
  bool all_meet = false;
  std::vector<Index> empty_classes;  // representatives of classes missing S
  std::string reason;
};

/// Every nonidentity class meets S when sqrt(Delta) does not divide the residue.
ClassMeetResult class_meet_nonempty(const PdsCandidate& c, const SrgParams& p);

enum class CenterVerdict { impossible, inapplicable };

struct CenterObstruction {
  CenterVerdict verdict = CenterVerdict::inapplicable;
  std::size_t center_order = 0;
  std::string reason;
};

/// A group with nontrivial center has no PDS when sqrt(Delta) divides neither residue.
CenterObstruction center_obstruction(const FiniteGroup& g, const SrgParams& p);

}  // namespace pdslab
