#ifndef HALLCHECK_PI_SERIES_HPP
#define HALLCHECK_PI_SERIES_HPP

#include <optional>
#include <vector>

#include "hallcheck/perm_group.hpp"
#include "hallcheck/pi_arith.hpp"

// pi-core series, pi-separability, and Sylow towers.

namespace hallcheck {

// largest normal pi-subgroup O_pi(g)
PermGroup pi_core(const PermGroup &g, const PiSet &pi);

// largest normal subgroup containing `below` whose quotient over `below` is
// a pi-group; `below` must be normal in g
PermGroup relative_pi_core(const PermGroup &g, const PiSet &pi,
                           const PermGroup &below);

struct PiSeparability {
  bool separable = false;
  // ascending witness series 1 = s_0 < s_1 < ... ; reaches g iff separable
  std::vector<PermGroup> series;
  // factor_is_pi[i]: s_{i+1}/s_i is a pi-group (else a pi'-group)
  std::vector<bool> factor_is_pi;
};

PiSeparability is_pi_separable(const PermGroup &g, const PiSet &pi);

// Sylow series ordering (p_1,...,p_n): successive normal-series factors are
// Sylow p_i-subgroups; empty when no tower exists
std::optional<std::vector<std::uint64_t>> sylow_complexion(const PermGroup &h);

} // namespace hallcheck

#endif
