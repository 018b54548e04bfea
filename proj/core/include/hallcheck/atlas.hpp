#ifndef HALLCHECK_ATLAS_HPP
#define HALLCHECK_ATLAS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hallcheck/fingerprint.hpp"
#include "hallcheck/perm_group.hpp"
#include "hallcheck/pi_arith.hpp"

/**
 * @file atlas.hpp
 * @brief Catalog group constructions and machine-checkable expectations.
 *
 * Group specs parse from compact text ("sym:8", "psl2:11", "m11", "dih:12").
 * Every builder verifies the classical order formula of the group it
 * constructs and throws on mismatch.
 */

namespace hallcheck {

enum class Family {
  symmetric,   // sym:n, n <= 10
  alternating, // alt:n, n <= 10
  dihedral,    // dih:m (order m, even), m <= 512
  cyclic,      // cyc:m, m <= 512
  psl2,        // psl2:q, q in {4,5,7,8,9,11,13,16,17,19,23,25,27}
  psl3,        // psl3:q, q in {2,3}
  sl2,         // sl2:q, q in {3,5,7,9}
  gl2,         // gl2:q, q in {3,5,7,9}
  m11,         // m11
  klein,       // klein
  sym_wr_sym,  // symwr:a,b  (Sym_a wr Sym_b)
};

struct GroupSpec {
  Family family = Family::symmetric;
  unsigned a = 1; // n, m, or q
  unsigned b = 1; // second wreath parameter

  static GroupSpec parse(const std::string &text);
  std::string str() const;

  bool operator==(const GroupSpec &rhs) const = default;
};

// builds the group and checks its classical order; throws
// std::invalid_argument for parameters outside the supported ranges
PermGroup build(const GroupSpec &spec, std::uint64_t seed = 1729);

// classical order of the spec without building it
std::uint64_t expected_order(const GroupSpec &spec);

// (-1)^((q-1)/2): +1 iff q = 1 mod 4; throws for even q
int epsilon(unsigned q);

enum class ExpectationSource { table1, table2_m11, table3, lemma12 };

std::string source_name(ExpectationSource source);

// expected shape of one conjugacy class of Hall subgroups; the fingerprint
// is present when a model group pins the full shape, otherwise the coarse
// fields carry whatever the table's structure string implies
struct ClassShape {
  std::string label; // e.g. "Alt_4", "Sym_3 x Sym_4"
  std::uint64_t order = 1;
  std::optional<StructureFingerprint> fingerprint;
  std::optional<bool> solvable;
  std::optional<std::uint64_t> derived_order;
  std::optional<std::uint64_t> abelianization_order;
  std::optional<bool> maximal;
};

struct Expectation {
  ExpectationSource source;
  GroupSpec group;
  PiSet pi;
  std::uint64_t hall_order = 1;
  std::vector<ClassShape> class_shapes;
  // class count when the source pins it; otherwise fixed by the oracle
  std::optional<std::size_t> class_count;
  // the found class must match the live fingerprint of N_G(Syl_p)
  std::optional<std::uint64_t> equals_normalizer_of_sylow;
  // Sylow-2 normalizer expectations (lemma12 cross-checks)
  bool check_sylow2_normalizer = false;
  bool normalizer_is_sylow = false; // N_G(S) = S
  std::optional<StructureFingerprint> normalizer_fingerprint;
};

// expectations for a covered (source, spec, pi) combination; an empty list
// means "covered, and no Hall subgroup exists"; uncovered combinations
// throw std::invalid_argument
std::vector<Expectation> expectations(ExpectationSource source,
                                      const GroupSpec &spec, const PiSet &pi);

// true when expectations() accepts the combination
bool expectation_covered(ExpectationSource source, const GroupSpec &spec,
                         const PiSet &pi);

// the groups Theorem 1 is verified on at desk scale
std::vector<GroupSpec> simple_group_catalog();

// a broader roster used by the property suites
std::vector<GroupSpec> standard_catalog();

} // namespace hallcheck

#endif
