#ifndef HALLCHECK_GROUP_OPS_HPP
#define HALLCHECK_GROUP_OPS_HPP

#include <map>
#include <optional>
#include <vector>

#include "hallcheck/perm_group.hpp"

/**
 * @file group_ops.hpp
 * @brief Structural operations on permutation groups.
 *
 * Normalizers and centralizers are exhaustive scans over the ambient group,
 * pruned by orbit constraints; every target group here has order well below
 * the scan guard.
 */

namespace hallcheck {

// largest group order the element scans will walk
constexpr std::uint64_t max_scan_order = 1'000'000;

PermGroup conjugate_subgroup(const PermGroup &h, const Perm &g);

// smallest subgroup containing every listed group and permutation
PermGroup subgroup_closure(unsigned degree,
                           const std::vector<const PermGroup *> &groups,
                           const std::vector<Perm> &perms = {});
PermGroup join(const PermGroup &a, const PermGroup &b);

// shared stabilizer chains for repeated joins, keyed by the generator sets
class JoinCache {
public:
  const PermGroup &join(const PermGroup &a, const PermGroup &b);
  std::size_t size() const { return _cache.size(); }

private:
  std::map<std::vector<std::vector<std::uint16_t>>, PermGroup> _cache;
};

bool is_normal(const PermGroup &g, const PermGroup &h);

PermGroup normal_closure(const PermGroup &g, const std::vector<Perm> &seeds);

PermGroup normalizer(const PermGroup &g, const PermGroup &h);
PermGroup centralizer(const PermGroup &g, const PermGroup &h);
PermGroup center(const PermGroup &g);

PermGroup derived_subgroup(const PermGroup &g);
std::vector<PermGroup> derived_series(const PermGroup &g);
bool is_solvable(const PermGroup &g);
bool is_perfect(const PermGroup &g);
bool is_nilpotent(const PermGroup &g);

// largest normal solvable subgroup, grown from normal closures of
// prime-power-order class representatives
PermGroup solvable_radical(const PermGroup &g);

std::vector<Perm> conjugacy_class_reps(const PermGroup &g);

// lcm of element orders
std::uint64_t exponent(const PermGroup &g);

PermGroup intersection(const PermGroup &a, const PermGroup &b);

// canonical representative of the right coset N*g (minimal base images)
Perm canonical_right_coset_rep(const PermGroup &n, const Perm &g);

// right coset representatives of n in g, in deterministic BFS order;
// the representative of the coset n itself comes first
std::vector<Perm> right_transversal(const PermGroup &g, const PermGroup &n);

// true iff h < g with no intermediate subgroup (coset-representative scan)
bool is_maximal(const PermGroup &g, const PermGroup &h);

// H is subnormal in G iff the iterated normal closure of H descends to H
bool is_subnormal(const PermGroup &g, const PermGroup &h);

PermGroup direct_product(const PermGroup &a, const PermGroup &b);

// exhaustive conjugacy search: m with h^m = k, scanning a right transversal
// of the normalizer of h in m's ambient group
std::optional<Perm> are_conjugate_in(const PermGroup &m, const PermGroup &h,
                                     const PermGroup &k);

} // namespace hallcheck

#endif
