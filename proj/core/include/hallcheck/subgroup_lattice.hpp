#ifndef HALLCHECK_SUBGROUP_LATTICE_HPP
#define HALLCHECK_SUBGROUP_LATTICE_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "hallcheck/element_table.hpp"

/**
 * @file subgroup_lattice.hpp
 * @brief Exhaustive subgroup enumeration for small groups.
 *
 * Subgroups are grown from the trivial group by repeatedly adjoining
 * generators of prime-power-order cyclic subgroups. Every subgroup is
 * generated by such elements, so the closure is provably complete; this is
 * what makes the lattice usable as the oracle for the seeded Hall search.
 */

namespace hallcheck {

constexpr std::uint64_t default_exhaustive_bound = 2000;

struct SmallSubgroup {
  std::vector<std::uint16_t> elements; // sorted element indices
  std::vector<std::uint16_t> gens;     // generating indices (small set)

  std::uint64_t order() const { return elements.size(); }
};

class SubgroupLattice {
public:
  // throws std::domain_error when the group order exceeds the bound
  SubgroupLattice(const PermGroup &g,
                  std::uint64_t bound = default_exhaustive_bound);

  const ElementTable &table() const { return *_table; }
  const std::vector<SmallSubgroup> &all() const { return _subgroups; }

  std::vector<const SmallSubgroup *> of_order(std::uint64_t order) const;

  PermGroup to_perm_group(const SmallSubgroup &s) const;

  // partitions the given subgroups into conjugacy classes (indices into the
  // input), each class listed with a representative first
  std::vector<std::vector<std::size_t>> conjugacy_classes(
      const std::vector<const SmallSubgroup *> &subgroups) const;

  // true iff the subgroup `inner` is contained in some conjugate of `outer`
  bool contained_in_some_conjugate(const SmallSubgroup &inner,
                                   const SmallSubgroup &outer) const;

private:
  std::vector<std::uint16_t> conjugate_elements(
      const std::vector<std::uint16_t> &elements, std::uint16_t g) const;

  std::shared_ptr<ElementTable> _table;
  std::vector<SmallSubgroup> _subgroups;
};

} // namespace hallcheck

#endif
