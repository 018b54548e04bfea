#ifndef HALLCHECK_HALL_HPP
#define HALLCHECK_HALL_HPP

#include <optional>
#include <vector>

#include "hallcheck/perm_group.hpp"
#include "hallcheck/pi_arith.hpp"
#include "hallcheck/subgroup_lattice.hpp"

/**
 * @file hall.hpp
 * @brief pi-Hall subgroup search and E/C/D classification.
 *
 * Exhaustive mode enumerates the full subgroup lattice (provably complete,
 * bounded order). Seeded mode grows a candidate pool from Sylow subgroups,
 * their normalizers, and joins with conjugated Sylows; it reports
 * complete = false unless a provable case applies, leaving the cross-check
 * against table expectations to the verification layer.
 */

namespace hallcheck {

enum class SearchMode { automatic, exhaustive, seeded };
enum class DCheckMode { unchecked, exact, two_generated };

struct HallOptions {
  SearchMode mode = SearchMode::automatic;
  std::uint64_t exhaustive_bound = default_exhaustive_bound;
  std::uint64_t seed = 1729;
};

struct HallClassification {
  PiSet pi;
  PermGroup ambient{1};
  std::uint64_t hall_order = 1;
  std::vector<PermGroup> class_reps; // pairwise non-conjugate
  bool satisfies_e = false;
  bool satisfies_c = false;
  bool satisfies_d = false;
  DCheckMode d_mode = DCheckMode::unchecked;
  SearchMode search_mode = SearchMode::exhaustive; // mode actually used
  bool complete = false; // true iff the class list is provably complete
};

HallClassification hall_subgroups(const PermGroup &g, const PiSet &pi,
                                  const HallOptions &opts = {});

// hall_subgroups plus the D_pi flag; in seeded mode D is tested on
// 2-generated pi-subgroups only and flagged accordingly
HallClassification classify_pi_properties(const PermGroup &g, const PiSet &pi,
                                          const HallOptions &opts = {});

} // namespace hallcheck

#endif
