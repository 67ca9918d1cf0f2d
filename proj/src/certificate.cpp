#include "pdslab/certificate.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#ifndef PDSLAB_VERSION
#define PDSLAB_VERSION "0.0.0"
#endif

namespace pdslab {

namespace {

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void add_footer(Certificate& c) {
  c.add("tool", std::string("pdslab ") + std::string(tool_version()));
  c.add("seed", "none");
}

}  // namespace

std::string_view tool_version() { return PDSLAB_VERSION; }

Certificate::Certificate(std::string kind) : kind_(std::move(kind)) {}

Certificate& Certificate::add(std::string key, std::string value) {
  if (key.find(':') != std::string::npos || key.find('\n') != std::string::npos ||
      value.find('\n') != std::string::npos)
    throw std::logic_error("certificate fields must be single-line and keys must not contain ':'");
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

std::string Certificate::get(std::string_view key) const {
  for (const auto& [k, v] : fields_)
    if (k == key) return v;
  return {};
}

std::string Certificate::to_string() const {
  std::string s = "kind: " + kind_ + "\n";
  for (const auto& [k, v] : fields_) s += k + ": " + v + "\n";
  return s;
}

Certificate Certificate::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<std::string, std::string>> fields;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto colon = line.find(": ");
    if (colon == std::string::npos) throw std::invalid_argument("certificate line without 'key: value': " + line);
    fields.emplace_back(line.substr(0, colon), line.substr(colon + 2));
  }
  if (fields.empty() || fields[0].first != "kind") throw std::invalid_argument("certificate must start with 'kind:'");
  Certificate c(fields[0].second);
  for (std::size_t i = 1; i < fields.size(); ++i) c.add(fields[i].first, fields[i].second);
  return c;
}

void describe_group(Certificate& c, const FiniteGroup& g, const std::string& source) {
  c.add("group.source", source);
  c.add("group.order", std::to_string(g.order()));
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < g.generators().size(); ++i)
    gens.push_back(g.generator_labels()[i] + "=" + std::to_string(g.generators()[i]));
  c.add("group.generators", join(gens, " "));
  c.add("group.table_hash", hex64(g.table_hash()));
}

Certificate pds_certificate(const PdsCandidate& c, const PdsCertificate& r, const std::string& source) {
  Certificate cert(r.pass() ? "pds_pass" : "pds_fail");
  cert.add("params", r.params.to_string());
  describe_group(cert, *c.group, source);
  cert.add("subset.size", std::to_string(c.subset.size()));
  std::vector<std::string> idx;
  for (Index x : c.subset) idx.push_back(std::to_string(x));
  cert.add("subset.indices", join(idx, " "));
  cert.add("subset.words", join(c.words(), ", "));
  cert.add("check.size", yes_no(r.size_ok));
  cert.add("check.identity_excluded", yes_no(r.identity_excluded));
  cert.add("check.inverse_closed", yes_no(r.inverse_closed));
  if (r.inverse_witness)
    cert.add("witness.inverse", c.group->label(*r.inverse_witness) + " in S but its inverse is not");
  cert.add("check.group_ring", r.failures.empty() ? "yes" : "no");
  cert.add("failures", std::to_string(r.failures.size()));
  if (!r.failures.empty()) {
    const auto& f = r.failures.front();
    cert.add("witness.coefficient", "coefficient of " + c.group->label(f.element) + " in S^2 is " +
                                        std::to_string(f.actual) + ", expected " + std::to_string(f.expected));
  }
  add_footer(cert);
  return cert;
}

Certificate srg_certificate(const SrgCheck& check, const SrgParams& expected, const std::string& source) {
  const bool match = check.is_srg && check.k == expected.k && check.lambda == expected.lambda &&
                     check.mu == expected.mu;
  Certificate cert(match ? "srg_pass" : "srg_fail");
  cert.add("params", expected.to_string());
  cert.add("graph.source", source);
  cert.add("observed.k", std::to_string(check.k));
  cert.add("observed.lambda", check.lambda ? std::to_string(*check.lambda) : "none");
  cert.add("observed.mu", check.mu ? std::to_string(*check.mu) : "none");
  cert.add("check.strongly_regular", yes_no(check.is_srg));
  if (check.witness)
    cert.add("witness.pair", std::to_string(check.witness->first) + " " + std::to_string(check.witness->second));
  if (!check.detail.empty()) cert.add("detail", check.detail);
  add_footer(cert);
  return cert;
}

Certificate feasibility_certificate(const FeasibilityVerdict& v) {
  Certificate cert("feasibility");
  cert.add("params", v.params.to_string());
  cert.add("feasible", yes_no(v.feasible()));
  cert.add("trivial", yes_no(v.trivial));
  cert.add("conference", yes_no(v.conference));
  cert.add("type2", yes_no(v.type2));
  cert.add("abelian", std::string(to_string(v.abelian_possible)));
  cert.add("genuinely_nonabelian_candidate", yes_no(v.genuinely_nonabelian_candidate));
  for (const auto& r : v.reasons)
    cert.add("rule." + r.rule, std::string(r.satisfied ? "pass" : "fail") + (r.detail.empty() ? "" : " (" + r.detail + ")"));
  add_footer(cert);
  return cert;
}

Certificate phi_certificate(const PhiReport& r, const FiniteGroup& g, const std::string& source) {
  Certificate cert("phi_report");
  cert.add("params", r.params.to_string());
  describe_group(cert, g, source);
  cert.add("sqrt_delta", std::to_string(r.sqrt_delta));
  cert.add("residue", std::to_string(r.residue));
  cert.add("residue_target", std::to_string(r.residue_target));
  for (const auto& row : r.per_class)
    cert.add("class." + g.label(row.representative),
             "size=" + std::to_string(row.class_size) + " centralizer=" + std::to_string(row.centralizer_order) +
                 " meet=" + std::to_string(row.meet) + " phi=" + std::to_string(row.phi) +
                 " mod=" + std::to_string(row.phi_mod) + (row.identity ? " identity" : row.pass ? " ok" : " FAIL"));
  cert.add("all_pass", yes_no(r.all_pass));
  add_footer(cert);
  return cert;
}

Certificate nonexistence_certificate(const SrgParams& p, const AbelianTest& t) {
  Certificate cert("nonexistence");
  cert.add("params", p.to_string());
  cert.add("claim", "no PDS with these parameters in any abelian group of order " + std::to_string(p.v));
  cert.add("abelian", std::string(to_string(t.verdict)));
  cert.add("sqrt_delta", std::to_string(t.sqrt_delta));
  cert.add("reason", t.reason);
  add_footer(cert);
  return cert;
}

}  // namespace pdslab
