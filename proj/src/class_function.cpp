#include "pdslab/class_function.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pdslab/number_theory.hpp"

namespace pdslab {

namespace {

ResidueReport residues_for(const SrgParams& p) {
  auto sp = spectrum(p);
  if (!sp.is_type2())
    throw std::invalid_argument("conference parameters " + p.to_string() + " have no integral sqrt(Delta)");
  return swartz_tauscheck_residues(p);
}

}  // namespace

PhiReport phi_report(const PdsCandidate& c, const SrgParams& p) {
  const FiniteGroup& g = *c.group;
  if (static_cast<std::int64_t>(g.order()) != p.v)
    throw std::invalid_argument("group order " + std::to_string(g.order()) + " != v = " + std::to_string(p.v));
  const ResidueReport res = residues_for(p);

  PhiReport r;
  r.params = p;
  r.sqrt_delta = res.sqrt_delta;
  r.theta1 = res.theta1;
  r.theta2 = res.theta2;
  r.residue = res.residue;
  r.residue_target = res.residue_mod;

  std::vector<std::uint8_t> in_s(g.order(), 0);
  for (Index s : c.subset) in_s[s] = 1;
  const ConjugacyData cd = conjugacy(g);
  r.all_pass = true;
  for (std::size_t i = 0; i < cd.classes.size(); ++i) {
    const auto& cls = cd.classes[i];
    PhiRow row;
    row.representative = cls.front();
    row.class_size = cls.size();
    row.centralizer_order = cd.centralizer_order[i];
    for (Index x : cls) row.meet += in_s[x];
    row.phi = static_cast<std::int64_t>(row.meet * row.centralizer_order);
    row.phi_mod = floor_mod(row.phi, r.sqrt_delta);
    row.identity = row.representative == g.identity();
    row.pass = row.identity || row.phi_mod == r.residue_target;
    r.all_pass = r.all_pass && row.pass;
    r.per_class.push_back(row);
  }
  return r;
}

std::string render_phi_table(const PhiReport& r, const FiniteGroup& g) {
  std::vector<std::vector<std::string>> cells{{"class", "|Cl|", "|C_G|", "|Cl n S|", "Phi", "Phi mod " +
                                                   std::to_string(r.sqrt_delta), ""}};
  for (const auto& row : r.per_class)
    cells.push_back({g.label(row.representative), std::to_string(row.class_size),
                     std::to_string(row.centralizer_order), std::to_string(row.meet), std::to_string(row.phi),
                     std::to_string(row.phi_mod), row.identity ? "-" : (row.pass ? "ok" : "FAIL")});
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& line : cells)
    for (std::size_t j = 0; j < line.size(); ++j) width[j] = std::max(width[j], line[j].size());

  std::ostringstream out;
  out << "params " << r.params.to_string() << "  sqrt(Delta) " << r.sqrt_delta << "  theta " << r.theta1 << ", "
      << r.theta2 << "\n";
  out << "target mu - theta2(theta1+1) = " << r.residue << " = " << r.residue_target << " mod " << r.sqrt_delta
      << "\n";
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (j) text += "  ";
      text += j == 0 ? line[j] + std::string(width[j] - line[j].size(), ' ')
                     : std::string(width[j] - line[j].size(), ' ') + line[j];
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << "\n";
  }
  out << (r.all_pass ? "all classes pass" : "congruence FAILS") << "\n";
  return out.str();
}

ClassMeetResult class_meet_nonempty(const PdsCandidate& c, const SrgParams& p) {
  const ResidueReport res = residues_for(p);
  ClassMeetResult out;
  if (res.residue_mod == 0) {
    out.reason = "sqrt(Delta) = " + std::to_string(res.sqrt_delta) + " divides mu - theta2(theta1+1) = " +
                 std::to_string(res.residue) + "; the test says nothing";
    return out;
  }
  out.applicable = true;
  const FiniteGroup& g = *c.group;
  std::vector<std::uint8_t> in_s(g.order(), 0);
  for (Index s : c.subset) in_s[s] = 1;
  for (const auto& cls : conjugacy(g).classes) {
    if (cls.front() == g.identity()) continue;
    if (std::none_of(cls.begin(), cls.end(), [&](Index x) { return in_s[x] != 0; }))
      out.empty_classes.push_back(cls.front());
  }
  out.all_meet = out.empty_classes.empty();
  out.reason = out.all_meet ? "every nonidentity class meets S"
                            : std::to_string(out.empty_classes.size()) + " nonidentity classes miss S";
  return out;
}

CenterObstruction center_obstruction(const FiniteGroup& g, const SrgParams& p) {
  const ResidueReport res = residues_for(p);
  CenterObstruction out;
  out.center_order = structure(g).center.size();
  if (res.residue_mod == 0 || res.complement_residue_mod == 0) {
    out.reason = "sqrt(Delta) = " + std::to_string(res.sqrt_delta) + " divides " +
                 (res.residue_mod == 0 ? "mu - theta2(theta1+1) = " + std::to_string(res.residue)
                                       : "v - 2k + lambda - theta2(theta1+1) = " +
                                             std::to_string(res.complement_residue));
  } else if (out.center_order == 1) {
    out.reason = "the group has trivial center";
  } else {
    out.verdict = CenterVerdict::impossible;
    out.reason = "center of order " + std::to_string(out.center_order) + " and sqrt(Delta) = " +
                 std::to_string(res.sqrt_delta) + " divides neither residue (" + std::to_string(res.residue_mod) +
                 ", " + std::to_string(res.complement_residue_mod) + ")";
  }
  return out;
}

}  // namespace pdslab
