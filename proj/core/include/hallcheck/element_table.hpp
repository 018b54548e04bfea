#ifndef HALLCHECK_ELEMENT_TABLE_HPP
#define HALLCHECK_ELEMENT_TABLE_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hallcheck/perm_group.hpp"

// Dense element tables for small groups: the substrate of the exhaustive
// subgroup enumeration. Elements are indexed 0..n-1 with index 0 the
// identity; products and inverses are table lookups.

namespace hallcheck {

class ElementTable {
public:
  ElementTable(const PermGroup &g, std::uint64_t max_order);

  const PermGroup &group() const { return _group; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(_elements.size()); }

  const Perm &element(std::uint32_t i) const { return _elements[i]; }
  std::uint32_t index_of(const Perm &p) const;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return _mul[static_cast<std::size_t>(a) * size() + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return _inv[a]; }
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const {
    return mul(mul(inv(g), x), g);
  }

  std::uint64_t element_order(std::uint32_t a) const { return _order[a]; }

  // closure of a subgroup (sorted element indices) extended by one element,
  // via right-coset Dimino steps on the table
  std::vector<std::uint16_t> extend_subgroup(
      const std::vector<std::uint16_t> &subgroup,
      const std::vector<std::uint16_t> &subgroup_gens,
      std::uint16_t new_gen) const;

  // closure of an arbitrary seed set
  std::vector<std::uint16_t> closure(const std::vector<std::uint16_t> &seeds) const;

private:
  PermGroup _group;
  std::vector<Perm> _elements;
  std::unordered_map<Perm, std::uint32_t, PermHash> _index;
  std::vector<std::uint16_t> _mul;
  std::vector<std::uint16_t> _inv;
  std::vector<std::uint64_t> _order;
};

} // namespace hallcheck

#endif
