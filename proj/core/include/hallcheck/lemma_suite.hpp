#ifndef HALLCHECK_LEMMA_SUITE_HPP
#define HALLCHECK_LEMMA_SUITE_HPP

#include <string>
#include <vector>

#include "hallcheck/perm_group.hpp"

/**
 * @file lemma_suite.hpp
 * @brief Executable property suites for the reduction lemmas.
 *
 * Each suite instantiates a lemma's hypotheses on constructed groups
 * (products, quotients, solvable groups) and asserts its conclusion with
 * the definition-level pronormality decider. Instances whose hypotheses
 * fail to materialize are skipped, never counted.
 */

namespace hallcheck {

struct SuiteInstance {
  std::string description;
  bool passed = false;
  std::string note; // failure detail or a one-line result summary
};

struct SuiteReport {
  std::string name;
  std::vector<SuiteInstance> instances;

  bool passed() const {
    for (const SuiteInstance &instance : instances)
      if (!instance.passed)
        return false;
    return true;
  }
};

// Hall subgroups intersect and project onto normal subgroups and quotients
SuiteReport lemma_suite_hall_restriction(std::uint64_t seed = 1729);
// pi-separable groups satisfy D_pi
SuiteReport lemma_suite_separable_d(std::uint64_t seed = 1729);
// homomorphic images of pronormal subgroups are pronormal
SuiteReport lemma_suite_image(std::uint64_t seed = 1729);
// joins of pronormal subgroups across commuting normal factors
SuiteReport lemma_suite_commuting_factors(std::uint64_t seed = 1729);
// G = HA with (H cap A) pronormal in A forces H pronormal in G
SuiteReport lemma_suite_ha_lift(std::uint64_t seed = 1729);
// pronormality transfers along quotients by abelian/solvable normals
SuiteReport lemma_suite_solvable_lift(std::uint64_t seed = 1729);
// Hall subgroups with a Sylow series are pronormal
SuiteReport lemma_suite_sylow_tower(std::uint64_t seed = 1729);

std::vector<SuiteReport> all_lemma_suites(std::uint64_t seed = 1729);

} // namespace hallcheck

#endif
