#include "pdslab/pc_presentation.hpp"

#include <stdexcept>

#include "pdslab/detail/closure.hpp"
#include "pdslab/number_theory.hpp"

namespace pdslab {

PcPresentation::PcPresentation(std::vector<std::int64_t> orders)
    : n_gens(orders.size()),
      relative_orders(std::move(orders)),
      power_relations(n_gens),
      commutator_relations(n_gens, std::vector<PcWord>(n_gens)) {}

void PcPresentation::set_power(std::size_t i, PcWord w) {
  if (i >= n_gens) throw std::invalid_argument("pc: power relation index out of range");
  power_relations[i] = std::move(w);
}

void PcPresentation::set_commutator(std::size_t j, std::size_t i, PcWord w) {
  if (j >= n_gens || i >= j) throw std::invalid_argument("pc: commutator relation needs j > i");
  commutator_relations[j][i] = std::move(w);
}

void PcPresentation::validate() const {
  if (relative_orders.size() != n_gens || power_relations.size() != n_gens ||
      commutator_relations.size() != n_gens)
    throw std::invalid_argument("pc: inconsistent sizes");
  for (std::size_t i = 0; i < n_gens; ++i) {
    if (relative_orders[i] < 2) throw std::invalid_argument("pc: relative orders must be >= 2");
    for (auto l : power_relations[i])
      if (l <= i || l >= n_gens)
        throw std::invalid_argument("pc: power relation of f" + std::to_string(i + 1) +
                                    " must use later generators only");
    for (std::size_t j = i + 1; j < n_gens; ++j)
      for (auto l : commutator_relations[j][i])
        if (l <= i || l >= n_gens)
          throw std::invalid_argument("pc: commutator relation [f" + std::to_string(j + 1) + ",f" +
                                      std::to_string(i + 1) + "] must use generators after f" +
                                      std::to_string(i + 1));
  }
}

Collector::Collector(const PcPresentation& pc, std::size_t budget) : pc_(pc), budget_(budget) { pc_.validate(); }

void Collector::multiply(std::vector<std::int64_t>& e, const PcWord& word) const {
  const std::size_t n = pc_.n_gens;
  std::vector<std::uint32_t> stack(word.rbegin(), word.rend());
  std::size_t steps = 0;
  while (!stack.empty()) {
    if (++steps > budget_)
      throw std::runtime_error("collection did not terminate within " + std::to_string(budget_) + " steps");
    const std::uint32_t i = stack.back();
    stack.pop_back();

    // e = head * f_i^{e_i} * tail; tail * f_i = f_i * tail^{f_i}, f_k^{f_i} = f_k [f_k, f_i].
    std::vector<std::uint32_t> pending;
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::int64_t r = 0; r < e[k]; ++r) {
        pending.push_back(static_cast<std::uint32_t>(k));
        const auto& c = pc_.commutator_relations[k][i];
        pending.insert(pending.end(), c.begin(), c.end());
      }
      e[k] = 0;
    }
    if (++e[i] == pc_.relative_orders[i]) {
      e[i] = 0;
      const auto& w = pc_.power_relations[i];
      pending.insert(pending.begin(), w.begin(), w.end());
    }
    stack.insert(stack.end(), pending.rbegin(), pending.rend());
  }
}

PcGroup group_from_pc_presentation(const PcPresentation& pc, std::size_t max_order) {
  pc.validate();
  if (pc.n_gens == 0) throw std::invalid_argument("pc: no generators");
  std::int64_t expected = 1;
  for (auto o : pc.relative_orders) expected = checked_mul(expected, o);
  if (static_cast<std::uint64_t>(expected) > max_order)
    throw std::length_error("pc group order " + std::to_string(expected) + " exceeds the size cap of " +
                            std::to_string(max_order));

  Collector collector(pc);
  using Vec = std::vector<std::int64_t>;
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < pc.n_gens; ++i) {
    Vec e(pc.n_gens, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  auto mul = [&](const Vec& a, const Vec& b) {
    PcWord w;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::int64_t r = 0; r < b[i]; ++r) w.push_back(static_cast<std::uint32_t>(i));
    Vec c = a;
    collector.multiply(c, w);
    return c;
  };
  auto c = detail::enumerate_closure<Vec, detail::VectorHash>(Vec(pc.n_gens, 0), gens, mul, max_order);
  const std::size_t v = c.elements.size();
  if (static_cast<std::int64_t>(v) != expected)
    throw std::runtime_error("inconsistent pc presentation: enumerated order " + std::to_string(v) +
                             " differs from the product of relative orders " + std::to_string(expected));
  auto table = detail::table_from_tree(v, pc.n_gens, c.right_gen, c.parent, c.parent_gen);
  std::vector<Index> gen_idx;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < pc.n_gens; ++i) {
    gen_idx.push_back(c.right_gen[i]);
    names.push_back("f" + std::to_string(i + 1));
  }
  std::shared_ptr<FiniteGroup> g;
  try {
    g = std::make_shared<FiniteGroup>(v, std::move(table), std::move(gen_idx), names);
  } catch (const std::invalid_argument& ex) {
    throw std::runtime_error(std::string("inconsistent pc presentation: ") + ex.what());
  }
  std::vector<std::string> labels;
  labels.reserve(v);
  for (const auto& e : c.elements) {
    std::vector<std::pair<std::string, std::int64_t>> runs;
    for (std::size_t i = 0; i < e.size(); ++i) runs.emplace_back(names[i], e[i]);
    labels.push_back(format_word(runs));
  }
  g->set_element_labels(std::move(labels));
  return PcGroup{g, std::move(c.elements)};
}

}  // namespace pdslab
