#pragma once

// Line-oriented "key: value" certificates. Every run is deterministic, so
// identical inputs give byte-identical certificates.

#include <string>
#include <utility>
#include <vector>

#include "pdslab/cayley_graph.hpp"
#include "pdslab/class_function.hpp"
#include "pdslab/group_ring.hpp"
#include "pdslab/srg_params.hpp"

namespace pdslab {

std::string_view tool_version();

class Certificate {
 public:
  explicit Certificate(std::string kind);

  Certificate& add(std::string key, std::string value);
  const std::string& kind() const { return kind_; }
  /// First value stored under key, or empty.
  std::string get(std::string_view key) const;
  std::string to_string() const;
  static Certificate parse(std::string_view text);

 private:
  std::string kind_;
  std::vector<std::pair<std::string, std::string>> fields_;
};

/// Group descriptor lines: source, order, generator labels, table hash.
void describe_group(Certificate& c, const FiniteGroup& g, const std::string& source);

/// pds_pass / pds_fail with the subset as indices and words, plus witnesses.
Certificate pds_certificate(const PdsCandidate& c, const PdsCertificate& result, const std::string& source);
Certificate srg_certificate(const SrgCheck& check, const SrgParams& expected, const std::string& source);
Certificate feasibility_certificate(const FeasibilityVerdict& v);
Certificate phi_certificate(const PhiReport& r, const FiniteGroup& g, const std::string& source);
/// Records an abelian-impossible verdict for a parameter set.
Certificate nonexistence_certificate(const SrgParams& p, const AbelianTest& t);

}  // namespace pdslab
