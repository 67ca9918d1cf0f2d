#include "pdslab/group_ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "pdslab/number_theory.hpp"

namespace pdslab {

namespace {

void require_same(const GroupRingElem& a, const GroupRingElem& b) {
  if (a.group != b.group) throw std::invalid_argument("group ring elements live in different groups");
}

}  // namespace

GroupRingElem GroupRingElem::zero(GroupPtr g) {
  const std::size_t n = g->order();
  return GroupRingElem{std::move(g), std::vector<std::int64_t>(n, 0)};
}

GroupRingElem GroupRingElem::element(GroupPtr g, Index x) {
  auto e = zero(std::move(g));
  e.coeffs.at(x) = 1;
  return e;
}

GroupRingElem GroupRingElem::subset(GroupPtr g, std::span<const Index> s) {
  auto e = zero(std::move(g));
  for (Index x : s) e.coeffs.at(x) += 1;
  return e;
}

GroupRingElem GroupRingElem::whole(GroupPtr g) {
  const std::size_t n = g->order();
  return GroupRingElem{std::move(g), std::vector<std::int64_t>(n, 1)};
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = checked_add(coeffs[i], o.coeffs[i]);
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = checked_sub(coeffs[i], o.coeffs[i]);
  return *this;
}

GroupRingElem& GroupRingElem::operator*=(std::int64_t c) {
  for (auto& x : coeffs) x = checked_mul(x, c);
  return *this;
}

GroupRingElem convolve(const GroupRingElem& a, const GroupRingElem& b) {
  require_same(a, b);
  const FiniteGroup& g = *a.group;
  auto c = GroupRingElem::zero(a.group);
  std::vector<Index> support_b;
  for (Index x = 0; x < g.order(); ++x)
    if (b.coeffs[x] != 0) support_b.push_back(x);
  for (Index x = 0; x < g.order(); ++x) {
    const std::int64_t ax = a.coeffs[x];
    if (ax == 0) continue;
    for (Index y : support_b) {
      auto& slot = c.coeffs[g.mul(x, y)];
      slot = checked_add(slot, checked_mul(ax, b.coeffs[y]));
    }
  }
  return c;
}

GroupRingElem power_map(const GroupRingElem& a, std::int64_t m) {
  const FiniteGroup& g = *a.group;
  auto c = GroupRingElem::zero(a.group);
  for (Index x = 0; x < g.order(); ++x) {
    if (a.coeffs[x] == 0) continue;
    auto& slot = c.coeffs[g.pow(x, m)];
    slot = checked_add(slot, a.coeffs[x]);
  }
  return c;
}

PdsCandidate::PdsCandidate(GroupPtr g, std::vector<Index> s) : group(std::move(g)), subset(std::move(s)) {
  std::sort(subset.begin(), subset.end());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= group->order()) throw std::invalid_argument("subset element index out of range");
    if (i > 0 && subset[i] == subset[i - 1])
      throw std::invalid_argument("subset lists element " + group->label(subset[i]) + " twice");
  }
}

std::vector<std::string> PdsCandidate::words() const {
  std::vector<std::string> out;
  out.reserve(subset.size());
  for (Index x : subset) out.push_back(group->label(x));
  return out;
}

PdsCertificate verify_pds(const PdsCandidate& c, const SrgParams& p) {
  const FiniteGroup& g = *c.group;
  if (p.v != static_cast<std::int64_t>(g.order()))
    throw std::invalid_argument("parameter v = " + std::to_string(p.v) + " but the group has order " +
                                std::to_string(g.order()));
  PdsCertificate cert;
  cert.params = p;
  cert.size_ok = static_cast<std::int64_t>(c.subset.size()) == p.k;
  cert.identity_excluded = !std::binary_search(c.subset.begin(), c.subset.end(), g.identity());
  cert.inverse_closed = true;
  for (Index s : c.subset)
    if (!std::binary_search(c.subset.begin(), c.subset.end(), g.inv(s))) {
      cert.inverse_closed = false;
      cert.inverse_witness = s;
      break;
    }

  auto s = GroupRingElem::subset(c.group, c.subset);
  auto sq = convolve(s, s);
  std::vector<std::uint8_t> in_s(g.order(), 0);
  for (Index x : c.subset) in_s[x] = 1;
  for (Index x = 0; x < g.order(); ++x) {
    std::int64_t expected = x == g.identity() ? p.k : (in_s[x] ? p.lambda : p.mu);
    if (sq.coeffs[x] != expected) cert.failures.push_back({x, expected, sq.coeffs[x]});
  }
  return cert;
}

std::optional<SrgParams> infer_params(const PdsCandidate& c) {
  const FiniteGroup& g = *c.group;
  std::vector<std::uint8_t> in_s(g.order(), 0);
  for (Index x : c.subset) in_s[x] = 1;
  if (in_s[g.identity()]) return std::nullopt;
  for (Index x : c.subset)
    if (!in_s[g.inv(x)]) return std::nullopt;

  auto s = GroupRingElem::subset(c.group, c.subset);
  auto sq = convolve(s, s);
  SrgParams p{static_cast<std::int64_t>(g.order()), static_cast<std::int64_t>(c.subset.size()), 0, 0};
  if (!c.subset.empty()) p.lambda = sq.coeffs[c.subset.front()];
  for (Index x = 1; x < g.order(); ++x)
    if (!in_s[x]) {
      p.mu = sq.coeffs[x];
      break;
    }
  if (!verify_pds(c, p).pass()) return std::nullopt;
  return p;
}

MultiplierResult multiplier_test(const PdsCandidate& c, std::int64_t m) {
  const FiniteGroup& g = *c.group;
  if (gcd(m, static_cast<std::int64_t>(g.order())) != 1)
    throw std::invalid_argument("multiplier " + std::to_string(m) + " is not coprime to |G| = " +
                                std::to_string(g.order()));
  MultiplierResult r;
  for (Index s : c.subset)
    if (!std::binary_search(c.subset.begin(), c.subset.end(), g.pow(s, m))) r.witnesses.push_back(s);
  r.holds = r.witnesses.empty();
  return r;
}

QuotientMultiplierResult quotient_multiplier_test(const PdsCandidate& c, std::int64_t m) {
  const FiniteGroup& g = *c.group;
  auto st = structure(g);
  auto q = quotient_map(g, st.derived_subgroup);
  const FiniteGroup& h = *q.quotient;
  if (gcd(m, static_cast<std::int64_t>(h.order())) != 1)
    throw std::invalid_argument("multiplier " + std::to_string(m) + " is not coprime to |G/G'| = " +
                                std::to_string(h.order()));
  std::vector<std::int64_t> image(h.order(), 0), powered(h.order(), 0);
  for (Index s : c.subset) ++image[q.coset_of[s]];
  for (Index x = 0; x < h.order(); ++x) powered[h.pow(x, m)] += image[x];
  QuotientMultiplierResult r;
  r.quotient_order = h.order();
  for (Index x = 0; x < h.order(); ++x)
    if (image[x] != powered[x]) {
      r.witness = x;
      break;
    }
  r.holds = !r.witness.has_value();
  return r;
}

// ---- abelian characters ----------------------------------------------------

AbelianDecomposition abelian_decomposition(const FiniteGroup& g) {
  if (!g.is_abelian()) throw std::domain_error("character machinery needs an abelian group");
  const std::size_t n = g.order();
  AbelianDecomposition d;
  std::vector<std::int64_t> orders(n);
  for (Index x = 0; x < n; ++x) orders[x] = g.element_order(x);

  for (std::int64_t p : n > 1 ? prime_factors(static_cast<std::int64_t>(n)) : std::vector<std::int64_t>{}) {
    std::vector<Index> sylow;
    for (Index x = 0; x < n; ++x) {
      std::int64_t o = orders[x];
      while (o % p == 0) o /= p;
      if (o == 1) sylow.push_back(x);
    }
    // Greedy basis: take an element of maximal order modulo the span so far,
    // then move it inside its coset to an element of exactly that order.
    std::vector<std::uint8_t> in_h(n, 0);
    std::vector<Index> h{0};
    in_h[0] = 1;
    while (h.size() < sylow.size()) {
      Index best = 0;
      std::int64_t best_t = 0;
      for (Index y : sylow) {
        std::int64_t t = 1;
        for (Index z = y; !in_h[z]; z = g.mul(z, y)) ++t;
        if (t > best_t) {
          best_t = t;
          best = y;
        }
      }
      std::optional<Index> chosen;
      for (Index k : h) {
        Index z = g.mul(best, k);
        if (orders[z] == best_t) {
          chosen = z;
          break;
        }
      }
      if (!chosen) throw std::logic_error("abelian decomposition: no complement element found");
      std::vector<Index> next;
      next.reserve(h.size() * best_t);
      for (Index k : h) {
        Index z = k;
        for (std::int64_t j = 0; j < best_t; ++j) {
          next.push_back(z);
          z = g.mul(z, *chosen);
        }
      }
      for (Index z : next) in_h[z] = 1;
      h = std::move(next);
      d.basis.push_back(*chosen);
      d.moduli.push_back(best_t);
    }
  }

  d.coords.assign(n, {});
  d.element_of.assign(n, 0);
  std::vector<std::int64_t> c(d.basis.size(), 0);
  std::vector<std::uint8_t> seen(n, 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    Index x = 0;
    for (std::size_t i = 0; i < c.size(); ++i) x = g.mul(x, g.pow(d.basis[i], c[i]));
    if (seen[x]) throw std::logic_error("abelian decomposition: basis is not independent");
    seen[x] = 1;
    d.element_of[idx] = x;
    d.coords[x] = c;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (++c[i] < d.moduli[i]) break;
      c[i] = 0;
    }
  }
  return d;
}

CharacterTable::CharacterTable(GroupPtr g) : group_(std::move(g)), dec_(abelian_decomposition(*group_)) {
  for (auto m : dec_.moduli) e_ = lcm(e_, m);
}

Cyclotomic CharacterTable::value(Index chi, Index x) const {
  std::int64_t a = 0;
  const auto& cy = dec_.coords.at(chi);
  const auto& cx = dec_.coords.at(x);
  for (std::size_t i = 0; i < cy.size(); ++i) a = (a + cx[i] * cy[i] % dec_.moduli[i] * (e_ / dec_.moduli[i])) % e_;
  return Cyclotomic::zeta_power(e_, a);
}

Cyclotomic CharacterTable::sum(Index chi, std::span<const Index> s) const {
  std::vector<std::int64_t> counts(e_, 0);
  const auto& cy = dec_.coords.at(chi);
  for (Index x : s) {
    const auto& cx = dec_.coords.at(x);
    std::int64_t a = 0;
    for (std::size_t i = 0; i < cy.size(); ++i)
      a = (a + cx[i] * cy[i] % dec_.moduli[i] * (e_ / dec_.moduli[i])) % e_;
    ++counts[a];
  }
  return Cyclotomic::from_coefficients(e_, std::move(counts));
}

DualReport dual_pds(const PdsCandidate& c, const SrgParams& p, ThetaSelector which) {
  const FiniteGroup& g = *c.group;
  if (p.v != static_cast<std::int64_t>(g.order())) throw std::invalid_argument("parameter v does not match |G|");
  auto sp = spectrum(p);
  if (!sp.is_type2() || !sp.theta1() || !sp.m1)
    throw std::domain_error("dual PDS needs Type II parameters with integral eigenvalues and multiplicities");
  CharacterTable table(c.group);

  DualReport r;
  r.params = p;
  r.sqrt_delta = *sp.sqrt_delta;
  const std::int64_t t1 = *sp.theta1(), t2 = *sp.theta2();
  r.theta = which == ThetaSelector::theta1 ? t1 : t2;
  r.expected_size = which == ThetaSelector::theta1 ? *sp.m1 : *sp.m2;
  r.moduli = table.decomposition().moduli;
  for (Index b : table.decomposition().basis) r.basis_labels.push_back(g.label(b));

  r.sums_by_character.resize(g.order());
  for (Index chi = 0; chi < g.order(); ++chi) {
    Cyclotomic s = table.sum(chi, c.subset);
    auto n = s.as_integer();
    bool ok = n && (chi == 0 ? *n == p.k : (*n == t1 || *n == t2));
    if (!ok)
      throw std::domain_error("character " + g.label(chi) + " takes the value " + s.to_string() +
                              " on S, outside {k, theta1, theta2}; S is not a PDS");
    r.sums_by_character[chi] = *n;
    if (chi != 0 && *n == r.theta) r.dual_subset.push_back(chi);
  }
  r.size_ok = static_cast<std::int64_t>(r.dual_subset.size()) == r.expected_size;
  r.dual_params = infer_params(PdsCandidate(c.group, r.dual_subset));
  r.dual_is_pds = r.dual_params.has_value();
  if (r.dual_params && check_first_feasibility(*r.dual_params)) {
    auto dsp = spectrum(*r.dual_params);
    r.dual_sqrt_delta = dsp.sqrt_delta;
  }
  r.sqrt_delta_relation = r.dual_sqrt_delta && checked_mul(*r.dual_sqrt_delta, r.sqrt_delta) == p.v;
  return r;
}

}  // namespace pdslab
