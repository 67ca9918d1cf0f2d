#include "pdslab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <optional>

#include "pdslab/certificate.hpp"
#include "pdslab/class_function.hpp"
#include "pdslab/constructions.hpp"
#include "pdslab/io.hpp"

namespace pdslab {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Thrown for bad input discovered after option parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t max_order_from_env() {
  const char* s = std::getenv("PDSLAB_MAX_ORDER");
  if (!s || !*s) return kDefaultMaxOrder;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError(std::string("PDSLAB_MAX_ORDER must be a positive integer, got '") + s + "'");
  return static_cast<std::size_t>(v);
}

struct Inputs {
  std::string group_path;
  std::string set_path;
  std::string params_text;
  std::string word_order = "ltr";
};

void add_inputs(CLI::App* cmd, Inputs& in, bool with_params, bool params_required) {
  cmd->add_option("--group", in.group_path, "group-table or pc file")->required();
  cmd->add_option("--set", in.set_path, "subset file (words or indices)")->required();
  if (with_params) {
    auto* opt = cmd->add_option("--params", in.params_text, "v,k,lambda,mu");
    if (params_required) opt->required();
  }
  cmd->add_option("--word-order", in.word_order, "product order of words")
      ->check(CLI::IsMember({"ltr", "rtl"}));
}

struct Loaded {
  PdsCandidate candidate;
  std::string source;
};

Loaded load(const Inputs& in) {
  GroupPtr g = parse_any_group_file(read_file(in.group_path), max_order_from_env());
  auto order = in.word_order == "rtl" ? WordOrder::right_to_left : WordOrder::left_to_right;
  auto subset = parse_subset(read_file(in.set_path), *g, order);
  return {PdsCandidate(g, std::move(subset)), in.group_path};
}

SrgParams parse_params(const std::string& text) {
  try {
    return SrgParams::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string labels_of(const FiniteGroup& g, const std::vector<Index>& xs) {
  std::string s;
  for (Index x : xs) s += (s.empty() ? "" : ", ") + g.label(x);
  return s;
}

// ---- subcommands -----------------------------------------------------------

int cmd_feasibility(const std::string& params_text, std::ostream& out) {
  const SrgParams p = parse_params(params_text);
  const FeasibilityVerdict v = feasibility(p);
  out << feasibility_certificate(v).to_string();
  if (v.type2 && v.first_condition) {
    const auto res = swartz_tauscheck_residues(p);
    out << "residue mu - theta2(theta1+1) = " << res.residue << " = " << res.residue_mod << " mod "
        << res.sqrt_delta << "\n";
    out << "residue v - 2k + lambda - theta2(theta1+1) = " << res.complement_residue << " = "
        << res.complement_residue_mod << " mod " << res.sqrt_delta << "\n";
  }
  if (v.abelian_possible == AbelianVerdict::impossible) {
    out << "\n" << nonexistence_certificate(p, abelian_type2_test(p)).to_string();
  }
  return v.feasible() ? kPass : kFail;
}

struct ConstructOptions {
  std::string out_dir = ".";
  std::string prefix;
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::string variant = "heisenberg";
  std::int64_t cap = kDefaultGeometryCap;
};

int emit_construction(const ConstructOptions& o, const std::string& default_prefix, const PdsCandidate& c,
                      const PdsCertificate& pds, const SrgCheck& srg, const SrgParams& expected, std::ostream& out) {
  const std::string prefix = o.prefix.empty() ? default_prefix : o.prefix;
  std::filesystem::create_directories(o.out_dir);
  const auto base = (std::filesystem::path(o.out_dir) / prefix).string();
  const std::string source = "construct " + default_prefix;
  const Certificate pc = pds_certificate(c, pds, source);
  const Certificate sc = srg_certificate(srg, expected, source + " cayley graph");
  write_file(base + ".group", write_group_file(*c.group));
  write_file(base + ".set", write_subset_words(c));
  write_file(base + ".cert", pc.to_string() + "\n" + sc.to_string());
  write_file(base + ".edges", to_edge_list(cayley(*c.group, c.subset)));
  out << "params " << expected.to_string() << "\n";
  out << "S (" << c.subset.size() << "): " << labels_of(*c.group, c.subset) << "\n";
  out << "wrote " << base << ".{group,set,cert,edges}\n\n";
  out << pc.to_string() << "\n" << sc.to_string();
  return pc.kind() == "pds_pass" && sc.kind() == "srg_pass" ? kPass : kFail;
}

int cmd_verify(const Inputs& in, bool graph, std::ostream& out) {
  Loaded l = load(in);
  SrgParams p;
  if (in.params_text.empty()) {
    auto inferred = infer_params(l.candidate);
    if (!inferred) {
      out << "no parameters make this subset a PDS\n";
      return kFail;
    }
    p = *inferred;
    out << "inferred params " << p.to_string() << "\n";
  } else {
    p = parse_params(in.params_text);
  }
  if (static_cast<std::int64_t>(l.candidate.group->order()) != p.v)
    throw UsageError("group order " + std::to_string(l.candidate.group->order()) + " != v = " + std::to_string(p.v));
  const PdsCertificate r = verify_pds(l.candidate, p);
  out << pds_certificate(l.candidate, r, l.source).to_string();
  bool ok = r.pass();
  if (graph) {
    out << "\n";
    if (!r.identity_excluded || !r.inverse_closed) {
      out << "kind: srg_fail\nparams: " << p.to_string()
          << "\ndetail: no undirected Cayley graph (identity in S or S not inverse-closed)\n";
      ok = false;
    } else {
      const Certificate sc =
          srg_certificate(verify_srg(cayley(*l.candidate.group, l.candidate.subset)), p, l.source + " cayley graph");
      out << sc.to_string();
      ok = ok && sc.kind() == "srg_pass";
    }
  }
  return ok ? kPass : kFail;
}

int cmd_phi(const Inputs& in, std::ostream& out) {
  Loaded l = load(in);
  const SrgParams p = parse_params(in.params_text);
  if (static_cast<std::int64_t>(l.candidate.group->order()) != p.v)
    throw UsageError("group order " + std::to_string(l.candidate.group->order()) + " != v = " + std::to_string(p.v));
  if (!spectrum(p).is_type2()) throw UsageError("conference parameters " + p.to_string() + " have no Phi test");
  const PdsCertificate r = verify_pds(l.candidate, p);
  if (!r.pass()) {
    out << "the subset is not a PDS with these parameters; Phi needs a certified PDS\n";
    out << pds_certificate(l.candidate, r, l.source).to_string();
    return kFail;
  }
  const FiniteGroup& g = *l.candidate.group;
  const PhiReport rep = phi_report(l.candidate, p);
  out << render_phi_table(rep, g);
  const ClassMeetResult meet = class_meet_nonempty(l.candidate, p);
  out << "class meet: " << (meet.applicable ? (meet.all_meet ? "pass" : "FAIL") : "inapplicable") << " ("
      << meet.reason << ")\n";
  if (!meet.empty_classes.empty()) out << "empty classes: " << labels_of(g, meet.empty_classes) << "\n";
  const CenterObstruction co = center_obstruction(g, p);
  out << "center obstruction: " << (co.verdict == CenterVerdict::impossible ? "impossible" : "inapplicable") << " ("
      << co.reason << ")\n\n";
  out << phi_certificate(rep, g, l.source).to_string();
  return rep.all_pass && (!meet.applicable || meet.all_meet) ? kPass : kFail;
}

int cmd_multiplier(const Inputs& in, std::int64_t m, bool quotient, std::ostream& out) {
  Loaded l = load(in);
  const FiniteGroup& g = *l.candidate.group;
  if (quotient) {
    QuotientMultiplierResult r = quotient_multiplier_test(l.candidate, m);
    out << "quotient G/G' of order " << r.quotient_order << ": S^(" << m << ") "
        << (r.holds ? "=" : "!=") << " S in the quotient\n";
    if (r.witness) out << "witness: coset " << *r.witness << "\n";
    return r.holds ? kPass : kFail;
  }
  MultiplierResult r = multiplier_test(l.candidate, m);
  out << "S^(" << m << ") " << (r.holds ? "= S" : "!= S") << "\n";
  for (Index s : r.witnesses)
    out << "witness: " << g.label(s) << " in S, " << g.label(g.pow(s, m)) << " not in S\n";
  return r.holds ? kPass : kFail;
}

int cmd_dual(const Inputs& in, int theta, std::ostream& out) {
  Loaded l = load(in);
  const SrgParams p = parse_params(in.params_text);
  if (!l.candidate.group->is_abelian()) throw UsageError("dual needs an abelian group");
  const FiniteGroup& g = *l.candidate.group;
  try {
    const DualReport r = dual_pds(l.candidate, p, theta == 2 ? ThetaSelector::theta2 : ThetaSelector::theta1);
    out << "basis";
    for (std::size_t i = 0; i < r.moduli.size(); ++i) out << " " << r.basis_labels[i] << "(order " << r.moduli[i] << ")";
    out << "\ntheta " << r.theta << ": |S*| = " << r.dual_subset.size() << ", expected " << r.expected_size << "\n";
    out << "S* (characters named by elements): " << labels_of(g, r.dual_subset) << "\n";
    out << "dual params " << (r.dual_params ? r.dual_params->to_string() : "none") << "\n";
    out << "sqrt(Delta) = " << r.sqrt_delta << ", sqrt(Delta*) = "
        << (r.dual_sqrt_delta ? std::to_string(*r.dual_sqrt_delta) : "none") << ", relation v/sqrt(Delta) "
        << (r.sqrt_delta_relation ? "holds" : "fails") << "\n";
    out << (r.pass() ? "dual PDS certified" : "dual PDS FAILS") << "\n";
    return r.pass() ? kPass : kFail;
  } catch (const std::domain_error& e) {
    out << "not a PDS: " << e.what() << "\n";
    return kFail;
  }
}

int cmd_scan(std::int64_t v_max, bool show_rejected, std::ostream& out) {
  if (v_max < 1) throw UsageError("--v-max must be positive");
  const ScanResult s = scan_parameters(v_max, show_rejected);
  std::size_t accepted = 0;
  for (const auto& e : s.entries) {
    out << e.params.to_string();
    if (!e.accepted) {
      out << " rejected: " << e.first_failing_filter << "\n";
      continue;
    }
    ++accepted;
    const auto& v = e.verdict;
    out << (v.conference ? " conference" : " type2") << " abelian=" << to_string(v.abelian_possible);
    if (v.abelian_possible == AbelianVerdict::impossible) out << " abelian-impossible";
    if (v.genuinely_nonabelian_candidate) out << " genuinely-nonabelian-candidate";
    out << "\n";
  }
  out << "accepted " << accepted << "; rejected: first condition " << s.rejected_first_condition
      << ", conference shape " << s.rejected_conference << ", multiplicity " << s.rejected_multiplicity << "\n";
  return kPass;
}

int cmd_export(const std::string& path, const std::string& format, std::ostream& out) {
  const std::string text = read_file(path);
  Graph g;
  try {
    g = text.rfind("graph ", 0) == 0 ? from_edge_list(text) : from_graph6(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (format == "graph6")
    out << to_graph6(g) << "\n";
  else
    out << to_edge_list(g);
  return kPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"pdslab: partial difference sets and strongly regular Cayley graphs"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  std::string params_text;
  auto* feas = app.add_subcommand("feasibility", "run every parameter test on v,k,lambda,mu");
  feas->add_option("--params", params_text, "v,k,lambda,mu")->required();

  ConstructOptions co;
  auto* construct = app.add_subcommand("construct", "build a PDS and write group, set, certificate and graph files");
  construct->require_subcommand(1);
  construct->add_option("--out-dir", co.out_dir, "output directory");
  construct->add_option("--prefix", co.prefix, "output file prefix");
  auto* tri = construct->add_subcommand("triangular", "T_q from C_p^d x| C_t, q = 3 mod 4");
  tri->add_option("--q", co.q)->required();
  auto* god = construct->add_subcommand("godsil", "Hermitian quadrangle family, r | q+1");
  god->add_option("--q", co.q)->required();
  god->add_option("--r", co.r)->required();
  god->add_option("--cap", co.cap, "largest q for the geometry");
  auto* o27 = construct->add_subcommand("order27", "(27,10,1,5) sets");
  o27->add_option("--variant", co.variant)->check(CLI::IsMember({"heisenberg", "c9"}));
  for (auto* sub : {tri, god, o27}) {
    sub->add_option("--out-dir", co.out_dir, "output directory");
    sub->add_option("--prefix", co.prefix, "output file prefix");
  }

  Inputs vin;
  bool graph = false;
  auto* verify = app.add_subcommand("verify", "check a subset with the group ring (and optionally the graph)");
  add_inputs(verify, vin, true, false);
  verify->add_flag("--graph", graph, "also count common neighbours in Cay(G,S)");

  Inputs pin;
  auto* phi = app.add_subcommand("phi", "per-class Phi table and congruence");
  add_inputs(phi, pin, true, true);

  Inputs min;
  std::int64_t m = 0;
  bool quotient = false;
  auto* mult = app.add_subcommand("multiplier", "test S^(m) = S");
  add_inputs(mult, min, false, false);
  mult->add_option("--m", m)->required();
  mult->add_flag("--quotient", quotient, "compare in G/G' as a multiset");

  Inputs din;
  int theta = 1;
  auto* dual = app.add_subcommand("dual", "dual PDS in the character group (abelian G)");
  add_inputs(dual, din, true, true);
  dual->add_option("--theta", theta, "1 or 2")->check(CLI::IsMember({1, 2}));

  std::int64_t v_max = 0;
  bool show_rejected = false;
  auto* scan = app.add_subcommand("scan", "enumerate feasible parameter sets");
  scan->add_option("--v-max", v_max)->required();
  scan->add_flag("--show-rejected", show_rejected);

  std::string graph_path, format = "edges";
  auto* exp = app.add_subcommand("export", "convert a graph between edge list and graph6");
  exp->add_option("--graph", graph_path)->required();
  exp->add_option("--format", format)->check(CLI::IsMember({"edges", "graph6"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*feas) return cmd_feasibility(params_text, out);
    if (*construct) {
      if (*tri) {
        auto c = triangular_pds(co.q);
        return emit_construction(co, "triangular_q" + std::to_string(co.q), c.pds.candidate, c.certificate, c.srg,
                                 triangular_params(co.q), out);
      }
      if (*god) {
        auto c = godsil_pds(co.q, co.r, co.cap);
        return emit_construction(co, "godsil_q" + std::to_string(co.q) + "_r" + std::to_string(co.r),
                                 c.pds.candidate, c.certificate, c.srg, c.expected.params, out);
      }
      auto c = order27_pds(co.variant == "c9" ? Order27Variant::c9_semidirect : Order27Variant::heisenberg);
      return emit_construction(co, "order27_" + co.variant, c.pds, c.certificate, c.srg, SrgParams{27, 10, 1, 5}, out);
    }
    if (*verify) return cmd_verify(vin, graph, out);
    if (*phi) return cmd_phi(pin, out);
    if (*mult) return cmd_multiplier(min, m, quotient, out);
    if (*dual) return cmd_dual(din, theta, out);
    if (*scan) return cmd_scan(v_max, show_rejected, out);
    if (*exp) return cmd_export(graph_path, format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

}  // namespace pdslab
