#ifndef HALLCHECK_FINGERPRINT_HPP
#define HALLCHECK_FINGERPRINT_HPP

#include <string>

#include "hallcheck/perm_group.hpp"

// Isomorphism-invariant shape descriptor. Not a full isomorphism test, but
// it separates every pair of candidate types the expectation tables can
// produce at equal order (asserted by the atlas tests).

namespace hallcheck {

struct StructureFingerprint {
  std::uint64_t order = 1;
  std::uint64_t derived_order = 1;
  std::uint64_t abelianization_order = 1;
  std::uint64_t exponent = 1;
  bool nilpotent = true;
  bool solvable = true;

  bool operator==(const StructureFingerprint &rhs) const = default;

  std::string str() const;
};

StructureFingerprint fingerprint(const PermGroup &g);

} // namespace hallcheck

#endif
