#include "hallcheck/subgroup_lattice.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace hallcheck {

namespace {

bool is_prime_power(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      return n == 1;
    }
  }
  return true;
}

struct IndexVectorHash {
  std::size_t operator()(const std::vector<std::uint16_t> &v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint16_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace

SubgroupLattice::SubgroupLattice(const PermGroup &g, std::uint64_t bound)
    : _table(std::make_shared<ElementTable>(g, bound)) {
  const ElementTable &t = *_table;

  // one generator per cyclic subgroup of prime-power order
  std::vector<std::uint16_t> zuppo_gens;
  {
    std::unordered_set<std::vector<std::uint16_t>, IndexVectorHash> seen;
    for (std::uint32_t x = 1; x < t.size(); ++x) {
      if (!is_prime_power(t.element_order(x)))
        continue;
      std::vector<std::uint16_t> cyc;
      std::uint16_t y = static_cast<std::uint16_t>(x);
      cyc.push_back(0);
      while (y != 0) {
        cyc.push_back(y);
        y = static_cast<std::uint16_t>(t.mul(y, static_cast<std::uint16_t>(x)));
      }
      std::sort(cyc.begin(), cyc.end());
      if (seen.insert(std::move(cyc)).second)
        zuppo_gens.push_back(static_cast<std::uint16_t>(x));
    }
  }

  std::unordered_map<std::vector<std::uint16_t>, std::size_t, IndexVectorHash>
      known;
  auto add = [&](SmallSubgroup s) -> bool {
    auto it = known.find(s.elements);
    if (it != known.end())
      return false;
    known.emplace(s.elements, _subgroups.size());
    _subgroups.push_back(std::move(s));
    return true;
  };

  add(SmallSubgroup{{0}, {}});
  for (std::size_t i = 0; i < _subgroups.size(); ++i) {
    for (std::uint16_t z : zuppo_gens) {
      // copy: _subgroups may reallocate when extended subgroups are added
      SmallSubgroup current = _subgroups[i];
      if (std::binary_search(current.elements.begin(), current.elements.end(),
                             z))
        continue;
      SmallSubgroup bigger;
      bigger.elements = t.extend_subgroup(current.elements, current.gens, z);
      bigger.gens = current.gens;
      bigger.gens.push_back(z);
      add(std::move(bigger));
    }
  }

  std::sort(_subgroups.begin(), _subgroups.end(),
            [](const SmallSubgroup &a, const SmallSubgroup &b) {
              return a.elements.size() != b.elements.size()
                         ? a.elements.size() < b.elements.size()
                         : a.elements < b.elements;
            });
}

std::vector<const SmallSubgroup *> SubgroupLattice::of_order(
    std::uint64_t order) const {
  std::vector<const SmallSubgroup *> out;
  for (const SmallSubgroup &s : _subgroups)
    if (s.order() == order)
      out.push_back(&s);
  return out;
}

PermGroup SubgroupLattice::to_perm_group(const SmallSubgroup &s) const {
  std::vector<Perm> gens;
  for (std::uint16_t g : s.gens)
    gens.push_back(_table->element(g));
  return PermGroup(_table->group().degree(), std::move(gens));
}

std::vector<std::uint16_t> SubgroupLattice::conjugate_elements(
    const std::vector<std::uint16_t> &elements, std::uint16_t g) const {
  std::vector<std::uint16_t> out;
  out.reserve(elements.size());
  for (std::uint16_t x : elements)
    out.push_back(static_cast<std::uint16_t>(_table->conj(x, g)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> SubgroupLattice::conjugacy_classes(
    const std::vector<const SmallSubgroup *> &subgroups) const {
  std::unordered_map<std::vector<std::uint16_t>, std::size_t, IndexVectorHash>
      position;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    position.emplace(subgroups[i]->elements, i);

  std::vector<bool> assigned(subgroups.size(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (assigned[i])
      continue;
    std::vector<std::size_t> cls{i};
    assigned[i] = true;
    // conjugation orbit, walking generator conjugations to closure
    std::vector<std::vector<std::uint16_t>> orbit{subgroups[i]->elements};
    std::unordered_set<std::vector<std::uint16_t>, IndexVectorHash> seen{
        subgroups[i]->elements};
    std::vector<std::uint16_t> group_gens;
    for (const Perm &gen : _table->group().generators())
      group_gens.push_back(
          static_cast<std::uint16_t>(_table->index_of(gen)));
    for (std::size_t j = 0; j < orbit.size(); ++j) {
      for (std::uint16_t g : group_gens) {
        auto img = conjugate_elements(orbit[j], g);
        if (seen.insert(img).second) {
          auto it = position.find(img);
          if (it != position.end() && !assigned[it->second]) {
            assigned[it->second] = true;
            cls.push_back(it->second);
          }
          orbit.push_back(std::move(img));
        }
      }
    }
    std::sort(cls.begin() + 1, cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool SubgroupLattice::contained_in_some_conjugate(
    const SmallSubgroup &inner, const SmallSubgroup &outer) const {
  if (inner.order() > outer.order() || outer.order() % inner.order() != 0)
    return false;
  auto subset = [](const std::vector<std::uint16_t> &a,
                   const std::vector<std::uint16_t> &b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  if (subset(inner.elements, outer.elements))
    return true;

  std::vector<std::uint16_t> group_gens;
  for (const Perm &gen : _table->group().generators())
    group_gens.push_back(static_cast<std::uint16_t>(_table->index_of(gen)));

  std::vector<std::vector<std::uint16_t>> orbit{outer.elements};
  std::unordered_set<std::vector<std::uint16_t>, IndexVectorHash> seen{
      outer.elements};
  for (std::size_t j = 0; j < orbit.size(); ++j) {
    for (std::uint16_t g : group_gens) {
      auto img = conjugate_elements(orbit[j], g);
      if (seen.insert(img).second) {
        if (subset(inner.elements, img))
          return true;
        orbit.push_back(std::move(img));
      }
    }
  }
  return false;
}

} // namespace hallcheck
