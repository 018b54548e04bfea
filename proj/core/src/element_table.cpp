#include "hallcheck/element_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace hallcheck {

ElementTable::ElementTable(const PermGroup &g, std::uint64_t max_order)
    : _group(g) {
  if (g.order() > max_order)
    throw std::domain_error("group order " + std::to_string(g.order()) +
                            " exceeds the element-table bound " +
                            std::to_string(max_order));
  if (g.order() > 0xffff)
    throw std::domain_error("element table limited to 65535 elements");

  _elements.push_back(g.identity());
  _index.emplace(_elements[0], 0);
  for (const Perm &x : g.elements()) {
    if (_index.emplace(x, static_cast<std::uint32_t>(_elements.size())).second)
      _elements.push_back(x);
  }

  const std::uint32_t n = size();
  _mul.resize(static_cast<std::size_t>(n) * n);
  _inv.resize(n);
  _order.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b)
      _mul[static_cast<std::size_t>(a) * n + b] =
          static_cast<std::uint16_t>(_index.at(_elements[a] * _elements[b]));
    _inv[a] = static_cast<std::uint16_t>(_index.at(_elements[a].inverse()));
    _order[a] = _elements[a].order();
  }
}

std::uint32_t ElementTable::index_of(const Perm &p) const {
  auto it = _index.find(p);
  if (it == _index.end())
    throw std::invalid_argument("element not in table");
  return it->second;
}

std::vector<std::uint16_t> ElementTable::extend_subgroup(
    const std::vector<std::uint16_t> &subgroup,
    const std::vector<std::uint16_t> &subgroup_gens,
    std::uint16_t new_gen) const {
  std::vector<bool> member(size(), false);
  for (std::uint16_t x : subgroup)
    member[x] = true;

  std::vector<std::uint16_t> gens = subgroup_gens;
  gens.push_back(new_gen);

  // BFS over right cosets of the old subgroup
  std::vector<std::uint16_t> coset_reps{0};
  for (std::size_t i = 0; i < coset_reps.size(); ++i) {
    for (std::uint16_t s : gens) {
      std::uint16_t t = static_cast<std::uint16_t>(mul(coset_reps[i], s));
      if (member[t])
        continue;
      coset_reps.push_back(t);
      for (std::uint16_t h : subgroup)
        member[mul(h, t)] = true;
    }
  }

  std::vector<std::uint16_t> out;
  out.reserve(subgroup.size() * coset_reps.size());
  for (std::uint32_t x = 0; x < size(); ++x)
    if (member[x])
      out.push_back(static_cast<std::uint16_t>(x));
  return out;
}

std::vector<std::uint16_t> ElementTable::closure(
    const std::vector<std::uint16_t> &seeds) const {
  std::vector<std::uint16_t> sub{0};
  std::vector<std::uint16_t> gens;
  for (std::uint16_t s : seeds) {
    bool inside = std::binary_search(sub.begin(), sub.end(), s);
    if (!inside) {
      sub = extend_subgroup(sub, gens, s);
      gens.push_back(s);
    }
  }
  return sub;
}

} // namespace hallcheck
