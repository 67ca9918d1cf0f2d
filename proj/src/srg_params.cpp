#include "pdslab/srg_params.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "pdslab/number_theory.hpp"

namespace pdslab {

std::string SrgParams::to_string() const {
  std::ostringstream os;
  os << '(' << v << ',' << k << ',' << lambda << ',' << mu << ')';
  return os.str();
}

SrgParams SrgParams::parse(std::string_view text) {
  std::vector<std::int64_t> vals;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '(' || text[i] == ')' || text[i] == '\t')) ++i;
  };
  skip();
  while (i < text.size()) {
    std::int64_t x = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), x);
    if (ec != std::errc()) throw std::invalid_argument("malformed parameter list: " + std::string(text));
    vals.push_back(x);
    i = static_cast<std::size_t>(ptr - text.data());
    skip();
    if (i < text.size()) {
      if (text[i] != ',') throw std::invalid_argument("malformed parameter list: " + std::string(text));
      ++i;
      skip();
    }
  }
  if (vals.size() != 4) throw std::invalid_argument("expected four parameters v,k,l,m");
  SrgParams p{vals[0], vals[1], vals[2], vals[3]};
  if (p.v < 1 || p.k < 0 || p.lambda < 0 || p.mu < 0)
    throw std::invalid_argument("parameters must be nonnegative with v >= 1");
  return p;
}

bool check_first_feasibility(const SrgParams& p) {
  std::int64_t lhs = checked_mul(p.k, checked_sub(checked_sub(p.k, p.lambda), 1));
  std::int64_t rhs = checked_mul(checked_sub(checked_sub(p.v, p.k), 1), p.mu);
  return lhs == rhs;
}

std::optional<std::int64_t> Spectrum::theta1() const {
  if (!sqrt_delta) return std::nullopt;
  std::int64_t s = lambda_minus_mu + *sqrt_delta;
  if (s % 2 != 0) return std::nullopt;
  return s / 2;
}

std::optional<std::int64_t> Spectrum::theta2() const {
  if (!sqrt_delta) return std::nullopt;
  std::int64_t s = lambda_minus_mu - *sqrt_delta;
  if (s % 2 != 0) return std::nullopt;
  return s / 2;
}

namespace {

std::int64_t discriminant(const SrgParams& p) {
  std::int64_t d = checked_sub(p.lambda, p.mu);
  return checked_add(checked_mul(d, d), checked_mul(4, checked_sub(p.k, p.mu)));
}

bool paley_shape(const SrgParams& p) {
  return p.v == 4 * p.mu + 1 && p.k == 2 * p.mu && p.lambda == p.mu - 1;
}

}  // namespace

Spectrum spectrum(const SrgParams& p) {
  if (!check_first_feasibility(p))
    throw std::invalid_argument("spectrum: first feasibility condition fails for " + p.to_string());
  Spectrum s;
  s.lambda_minus_mu = p.lambda - p.mu;
  s.delta = discriminant(p);
  s.sqrt_delta = exact_sqrt(s.delta);
  if (s.sqrt_delta && *s.sqrt_delta > 0) {
    // m1 = ((v-1) - (2k + (v-1)(lambda-mu)) / sqrt(Delta)) / 2
    std::int64_t num = checked_add(checked_mul(2, p.k), checked_mul(p.v - 1, s.lambda_minus_mu));
    if (num % *s.sqrt_delta == 0) {
      std::int64_t twice_m1 = (p.v - 1) - num / *s.sqrt_delta;
      if (twice_m1 % 2 == 0 && twice_m1 >= 0 && twice_m1 / 2 <= p.v - 1) {
        s.m1 = twice_m1 / 2;
        s.m2 = p.v - 1 - *s.m1;
        s.multiplicity_integral = true;
      }
    }
  } else if (!s.sqrt_delta && paley_shape(p)) {
    s.m1 = (p.v - 1) / 2;
    s.m2 = (p.v - 1) / 2;
    s.multiplicity_integral = true;
  }
  return s;
}

ConferenceCheck is_conference(const SrgParams& p) {
  if (!check_first_feasibility(p))
    throw std::invalid_argument("is_conference: first feasibility condition fails for " + p.to_string());
  ConferenceCheck c;
  c.conference = !exact_sqrt(discriminant(p)).has_value();
  c.paley_shape = paley_shape(p);
  return c;
}

SrgParams complement_params(const SrgParams& p) {
  return SrgParams{p.v, p.v - p.k - 1, p.v - 2 * p.k + p.mu - 2, p.v - 2 * p.k + p.lambda};
}

std::string_view to_string(AbelianVerdict v) {
  switch (v) {
    case AbelianVerdict::possible: return "possible";
    case AbelianVerdict::impossible: return "impossible";
    case AbelianVerdict::unknown: return "unknown";
  }
  return "unknown";
}

AbelianTest abelian_type2_test(const SrgParams& p) {
  Spectrum s = spectrum(p);
  if (!s.is_type2()) throw std::invalid_argument("abelian_type2_test: conference parameters " + p.to_string());
  AbelianTest t;
  t.sqrt_delta = *s.sqrt_delta;
  if (p.is_trivial()) {
    t.verdict = AbelianVerdict::unknown;
    t.reason = "trivial parameter set; discriminant test not applicable";
    return t;
  }
  if (p.v % t.sqrt_delta != 0) {
    t.verdict = AbelianVerdict::impossible;
    t.reason = "sqrt(Delta)=" + std::to_string(t.sqrt_delta) + " does not divide v=" + std::to_string(p.v);
  } else {
    t.verdict = AbelianVerdict::unknown;
    t.reason = "sqrt(Delta)=" + std::to_string(t.sqrt_delta) + " divides v=" + std::to_string(p.v);
  }
  return t;
}

SrgParams triangular_params(std::int64_t n) {
  if (n < 5) throw std::invalid_argument("triangular_params: n must be at least 5");
  return SrgParams{checked_mul(n, n - 1) / 2, 2 * (n - 2), n - 2, 4};
}

GodsilParams godsil_params(std::int64_t q, std::int64_t r) {
  if (!prime_power(q)) throw std::invalid_argument("godsil_params: q must be a prime power");
  if (r < 1 || r >= q + 1 || (q + 1) % r != 0)
    throw std::invalid_argument("godsil_params: r must divide q+1 with 1 <= r < q+1");
  std::int64_t n = (q + 1) / r;                                    // (q+1)/r
  std::int64_t a = checked_sub(checked_mul(q + 1, q + 1) / r, q);  // (q+1)^2/r - q
  GodsilParams g;
  g.params.v = checked_mul(checked_mul(q, q), q);
  g.params.k = checked_mul(q - 1, a);
  g.params.lambda = checked_mul(r, checked_mul(checked_mul(n - 1, n - 1), n - 1)) + r - 3;
  g.params.mu = checked_mul(n - 1, a);
  g.sqrt_delta = checked_mul(q, q + 1) / r;
  g.trivial = r == 1;
  g.genuinely_nonabelian = !g.trivial && g.params.v % g.sqrt_delta != 0;
  return g;
}

SrgParams paley_params(std::int64_t mu) {
  if (mu < 1) throw std::invalid_argument("paley: mu must be positive");
  return SrgParams{4 * mu + 1, 2 * mu, mu - 1, mu};
}

SrgParams latin_square_pl_params(std::int64_t m, std::int64_t r) {
  if (m < 2 || r < 1 || r > m) throw std::invalid_argument("latin_square_PL: need m >= 2, 1 <= r <= m");
  return SrgParams{m * m, r * (m - 1), r * r - 3 * r + m, r * (r - 1)};
}

SrgParams latin_square_nl_params(std::int64_t m, std::int64_t r) {
  if (m < 2 || r < 1) throw std::invalid_argument("latin_square_NL: need m >= 2, r >= 1");
  SrgParams p{m * m, r * (m + 1), r * r + 3 * r - m, r * (r + 1)};
  if (p.lambda < 0 || p.k >= p.v) throw std::invalid_argument("latin_square_NL: parameters out of range");
  return p;
}

SrgParams gq_point_params(std::int64_t s, std::int64_t t) {
  if (s < 1 || t < 1) throw std::invalid_argument("gq_point: s and t must be positive");
  return SrgParams{(s + 1) * (s * t + 1), s * (t + 1), s - 1, t + 1};
}

SrgParams payne_params(std::int64_t q) {
  if (!prime_power(q)) throw std::invalid_argument("payne: q must be a prime power");
  return SrgParams{q * q * q, q * q + q - 2, q - 2, q + 2};
}

SrgParams catalog_params(std::string_view name, std::span<const std::int64_t> args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw std::invalid_argument(std::string(name) + " expects " + std::to_string(n) + " argument(s)");
  };
  if (name == "paley") { need(1); return paley_params(args[0]); }
  if (name == "latin_square_pl" || name == "latin_square_PL") { need(2); return latin_square_pl_params(args[0], args[1]); }
  if (name == "latin_square_nl" || name == "latin_square_NL") { need(2); return latin_square_nl_params(args[0], args[1]); }
  if (name == "gq_point") { need(2); return gq_point_params(args[0], args[1]); }
  if (name == "payne") { need(1); return payne_params(args[0]); }
  if (name == "triangular") { need(1); return triangular_params(args[0]); }
  if (name == "godsil") { need(2); return godsil_params(args[0], args[1]).params; }
  throw std::invalid_argument("unknown parameter family: " + std::string(name));
}

ResidueReport swartz_tauscheck_residues(const SrgParams& p) {
  Spectrum s = spectrum(p);
  if (!s.is_type2() || *s.sqrt_delta == 0)
    throw std::invalid_argument("residue test needs Type II parameters: " + p.to_string());
  ResidueReport r;
  r.sqrt_delta = *s.sqrt_delta;
  r.theta1 = *s.theta1();
  r.theta2 = *s.theta2();
  std::int64_t shift = checked_mul(r.theta2, r.theta1 + 1);
  r.residue = checked_sub(p.mu, shift);
  r.complement_residue = checked_sub(checked_add(checked_sub(p.v, 2 * p.k), p.lambda), shift);
  r.residue_mod = floor_mod(r.residue, r.sqrt_delta);
  r.complement_residue_mod = floor_mod(r.complement_residue, r.sqrt_delta);
  r.no_nontrivial_center = r.residue_mod != 0 && r.complement_residue_mod != 0;
  r.genuinely_nonabelian = r.residue_mod != 0 || r.complement_residue_mod != 0;
  return r;
}

bool FeasibilityVerdict::feasible() const {
  // an inconsistent conference shape never yields integral multiplicities
  return first_condition && multiplicity_integral;
}

FeasibilityVerdict feasibility(const SrgParams& p) {
  FeasibilityVerdict f;
  f.params = p;
  f.trivial = p.is_trivial();
  f.first_condition = check_first_feasibility(p);
  {
    std::ostringstream d;
    d << "k(k-l-1)=" << p.k * (p.k - p.lambda - 1) << " (v-k-1)mu=" << (p.v - p.k - 1) * p.mu;
    f.reasons.push_back({"first_condition", f.first_condition, d.str()});
  }
  if (!f.first_condition) return f;

  Spectrum s = spectrum(p);
  ConferenceCheck c = is_conference(p);
  f.conference = c.conference;
  f.type2 = s.is_type2();
  f.reasons.push_back({"conference_shape", !c.inconsistent(),
                       "Delta=" + std::to_string(s.delta) +
                           (c.conference ? (c.paley_shape ? " (non-square, Paley shape)" : " (non-square, not Paley shape)")
                                         : " (perfect square)")});
  f.multiplicity_integral = s.multiplicity_integral;
  f.reasons.push_back({"multiplicity", s.multiplicity_integral,
                       s.m1 ? "m1=" + std::to_string(*s.m1) + " m2=" + std::to_string(*s.m2)
                            : std::string("multiplicity formula not a nonnegative integer")});
  if (c.inconsistent() || !s.multiplicity_integral) return f;

  if (f.type2 && !f.trivial) {
    AbelianTest t = abelian_type2_test(p);
    f.abelian_possible = t.verdict;
    f.reasons.push_back({"abelian_discriminant", t.verdict != AbelianVerdict::impossible, t.reason});
    ResidueReport r = swartz_tauscheck_residues(p);
    std::ostringstream d;
    d << "residues " << r.residue << "," << r.complement_residue << " mod " << r.sqrt_delta << " = "
      << r.residue_mod << "," << r.complement_residue_mod;
    f.reasons.push_back({"class_function_residue", !r.genuinely_nonabelian, d.str()});
    if (r.genuinely_nonabelian) f.abelian_possible = AbelianVerdict::impossible;
  }
  f.genuinely_nonabelian_candidate = f.abelian_possible == AbelianVerdict::impossible;
  return f;
}

ScanResult scan_parameters(std::int64_t v_max, bool keep_rejected) {
  if (v_max < 1) throw std::invalid_argument("scan: v_max must be positive");
  ScanResult out;
  for (std::int64_t v = 2; v <= v_max; ++v) {
    for (std::int64_t k = 2; k < v - 1; ++k) {
      for (std::int64_t mu = 1; mu < k; ++mu) {
        for (std::int64_t lambda = 0; lambda < k - 1; ++lambda) {
          SrgParams p{v, k, lambda, mu};
          ScanEntry e;
          e.params = p;
          if (!check_first_feasibility(p)) {
            ++out.rejected_first_condition;
            e.first_failing_filter = "first_condition";
          } else if (is_conference(p).inconsistent()) {
            ++out.rejected_conference;
            e.first_failing_filter = "conference_shape";
          } else if (!spectrum(p).multiplicity_integral) {
            ++out.rejected_multiplicity;
            e.first_failing_filter = "multiplicity";
          } else {
            e.accepted = true;
            e.verdict = feasibility(p);
          }
          if (e.accepted || keep_rejected) out.entries.push_back(std::move(e));
        }
      }
    }
  }
  return out;
}

}  // namespace pdslab
