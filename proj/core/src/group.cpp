#include "psub/group.hpp"

#include <cassert>

#include "psub/errors.hpp"

namespace psub {

struct FiniteGroup::Rep {
  unsigned degree = 0;
  std::vector<Permutation> generators;
  std::string name;
  std::size_t element_cap = 0;

  mutable std::once_flag table_flag;
  mutable ElementTable table;
  mutable std::vector<std::pair<std::uint32_t, std::uint32_t>> provenance;
  mutable std::vector<std::uint32_t> generator_indices;

  mutable std::once_flag inverse_flag;
  mutable std::vector<std::uint32_t> inverses;

  mutable std::once_flag orders_flag;
  mutable std::vector<std::uint64_t> orders;

  mutable std::once_flag conj_flag;
  mutable std::vector<std::vector<std::uint32_t>> conj_tables;

  mutable std::mutex mult_mutex;
  mutable std::vector<std::atomic<const std::vector<std::uint32_t>*>>
      mult_tables;

  ~Rep() {
    for (auto& slot : mult_tables) delete slot.load(std::memory_order_relaxed);
  }

  void build_table() const {
    ElementTable t;
    Permutation id(degree);
    t.elems_.push_back(id);
    t.index_.emplace(std::move(id), 0u);
    provenance.emplace_back(ElementTable::npos, ElementTable::npos);
    for (std::uint32_t i = 0; i < t.elems_.size(); ++i) {
      const Permutation cur = t.elems_[i];  // table may reallocate below
      for (std::uint32_t g = 0; g < generators.size(); ++g) {
        Permutation next = cur.then(generators[g]);
        if (t.index_.contains(next)) continue;
        if (t.elems_.size() >= element_cap)
          throw cap_exceeded("group closure exceeds element cap of " +
                             std::to_string(element_cap));
        const auto idx = static_cast<std::uint32_t>(t.elems_.size());
        t.index_.emplace(next, idx);
        t.elems_.push_back(std::move(next));
        provenance.emplace_back(i, g);
      }
    }
    generator_indices.resize(generators.size());
    for (std::size_t g = 0; g < generators.size(); ++g)
      generator_indices[g] = t.index_.at(generators[g]);
    table = std::move(t);
    mult_tables = std::vector<std::atomic<const std::vector<std::uint32_t>*>>(
        table.size());
  }

  const ElementTable& elements() const {
    std::call_once(table_flag, [this] { build_table(); });
    return table;
  }
};

FiniteGroup::FiniteGroup(unsigned degree, std::vector<Permutation> generators,
                         std::string name, std::size_t element_cap)
    : rep_(std::make_shared<Rep>()) {
  if (degree == 0) throw invalid_parameter("degree must be positive");
  if (generators.empty())
    throw invalid_parameter("generator list must be nonempty");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw invalid_permutation("generator degree mismatch");
  rep_->degree = degree;
  rep_->generators = std::move(generators);
  rep_->name = std::move(name);
  rep_->element_cap = element_cap;
}

unsigned FiniteGroup::degree() const { return rep_->degree; }

const std::vector<Permutation>& FiniteGroup::generators() const {
  return rep_->generators;
}

const std::string& FiniteGroup::name() const { return rep_->name; }

std::size_t FiniteGroup::element_cap() const { return rep_->element_cap; }

const ElementTable& FiniteGroup::elements() const { return rep_->elements(); }

bool FiniteGroup::contains(const Permutation& p) const {
  return p.degree() == degree() &&
         elements().index_of(p) != ElementTable::npos;
}

std::uint32_t FiniteGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree())
    throw invalid_permutation("degree mismatch in membership lookup");
  return elements().index_of(p);
}

const Permutation& FiniteGroup::element(std::uint32_t i) const {
  return elements().at(i);
}

std::uint32_t FiniteGroup::generator_index(std::size_t k) const {
  elements();
  return rep_->generator_indices[k];
}

std::uint32_t FiniteGroup::inverse_of(std::uint32_t i) const {
  std::call_once(rep_->inverse_flag, [this] {
    const auto& t = rep_->elements();
    rep_->inverses.resize(t.size());
    for (std::uint32_t k = 0; k < t.size(); ++k)
      rep_->inverses[k] = t.index_of(t.at(k).inverse());
  });
  return rep_->inverses[i];
}

std::uint64_t FiniteGroup::element_order(std::uint32_t i) const {
  std::call_once(rep_->orders_flag, [this] {
    const auto& t = rep_->elements();
    rep_->orders.resize(t.size());
    for (std::uint32_t k = 0; k < t.size(); ++k)
      rep_->orders[k] = t.at(k).order();
  });
  return rep_->orders[i];
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>>&
FiniteGroup::provenance() const {
  elements();
  return rep_->provenance;
}

const std::vector<std::uint32_t>& FiniteGroup::right_mult_by(
    std::uint32_t j) const {
  const auto& t = elements();
  auto& slot = rep_->mult_tables[j];
  if (const auto* hit = slot.load(std::memory_order_acquire)) return *hit;
  std::lock_guard<std::mutex> lock(rep_->mult_mutex);
  if (const auto* hit = slot.load(std::memory_order_acquire)) return *hit;
  auto built = std::make_unique<std::vector<std::uint32_t>>(t.size());
  const Permutation& pj = t.at(j);
  for (std::uint32_t i = 0; i < t.size(); ++i)
    (*built)[i] = t.index_of(t.at(i).then(pj));
  const auto* raw = built.release();
  slot.store(raw, std::memory_order_release);
  return *raw;
}

const std::vector<std::uint32_t>& FiniteGroup::conj_by_generator(
    std::size_t k) const {
  std::call_once(rep_->conj_flag, [this] {
    const auto& t = rep_->elements();
    rep_->conj_tables.resize(rep_->generators.size());
    for (std::size_t g = 0; g < rep_->generators.size(); ++g) {
      const Permutation& pg = rep_->generators[g];
      const Permutation pgi = pg.inverse();
      auto& tab = rep_->conj_tables[g];
      tab.resize(t.size());
      for (std::uint32_t i = 0; i < t.size(); ++i)
        tab[i] = t.index_of(pgi.then(t.at(i)).then(pg));
    }
  });
  return rep_->conj_tables[k];
}

std::uint32_t FiniteGroup::mul(std::uint32_t i, std::uint32_t j) const {
  const auto& t = elements();
  return t.index_of(t.at(i).then(t.at(j)));
}

}  // namespace psub
