#include "hallcheck/fingerprint.hpp"

#include <sstream>

#include "hallcheck/group_ops.hpp"

namespace hallcheck {

std::string StructureFingerprint::str() const {
  std::ostringstream out;
  out << "order=" << order << " derived=" << derived_order
      << " abelianization=" << abelianization_order << " exponent=" << exponent
      << " nilpotent=" << (nilpotent ? "true" : "false")
      << " solvable=" << (solvable ? "true" : "false");
  return out.str();
}

StructureFingerprint fingerprint(const PermGroup &g) {
  StructureFingerprint fp;
  fp.order = g.order();
  PermGroup derived = derived_subgroup(g);
  fp.derived_order = derived.order();
  fp.abelianization_order = g.order() / derived.order();
  fp.exponent = exponent(g);
  fp.nilpotent = is_nilpotent(g);
  fp.solvable = is_solvable(g);
  return fp;
}

} // namespace hallcheck
