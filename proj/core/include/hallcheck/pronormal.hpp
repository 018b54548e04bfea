#ifndef HALLCHECK_PRONORMAL_HPP
#define HALLCHECK_PRONORMAL_HPP

#include <optional>
#include <vector>

#include "hallcheck/group_ops.hpp"
#include "hallcheck/perm_group.hpp"

/**
 * @file pronormal.hpp
 * @brief Pronormality deciders.
 *
 * A subgroup H of G is pronormal when H and H^g are conjugate inside
 * <H, H^g> for every g in G. The definition decider tests g over a right
 * transversal of N_G(H) in G (H^g only depends on the coset). The reduced
 * decider assumes a pronormal S <= H (a Sylow subgroup of G in practice)
 * and only tests g over a transversal of N_H(S) in N_G(S). The tower
 * decider applies to Hall subgroups with a Sylow series, where conjugacy
 * inside the join is guaranteed; it still exhibits each witness.
 *
 * Conjugacy searches inside joins are exhaustive, so a not_pronormal
 * verdict is a proof, not a sampling failure.
 */

namespace hallcheck {

enum class PronormalVerdict { pronormal, not_pronormal };
enum class PronormalMethod { definition, reduced, sylow_tower };

struct PronormalityTest {
  Perm conjugator;              // g, one per transversal coset
  std::uint64_t join_order;     // |<H, H^g>|
  std::optional<Perm> witness;  // x in the join with H^x = H^g
};

struct PronormalityCertificate {
  PermGroup ambient{1};
  PermGroup subject{1};
  PronormalVerdict verdict = PronormalVerdict::pronormal;
  PronormalMethod method = PronormalMethod::definition;
  std::vector<PronormalityTest> tests;
  std::optional<Perm> counterexample; // g with no witness in the join

  bool pronormal() const { return verdict == PronormalVerdict::pronormal; }
};

PronormalityCertificate is_pronormal_definition(const PermGroup &g,
                                                const PermGroup &h);

// requires s <= h; the caller guarantees s is pronormal in g (the engine
// always supplies a Sylow subgroup of g)
PronormalityCertificate is_pronormal_reduced(const PermGroup &g,
                                             const PermGroup &h,
                                             const PermGroup &s);

// requires h to be a Hall subgroup of g; empty when h has no Sylow series
std::optional<PronormalityCertificate> is_pronormal_sylow_tower(
    const PermGroup &g, const PermGroup &h);

// re-checks every witness of a certificate from scratch: witness membership
// in the join and the conjugation identity itself
bool verify_certificate(const PronormalityCertificate &cert);

} // namespace hallcheck

#endif
