#ifndef HALLCHECK_SYLOW_HPP
#define HALLCHECK_SYLOW_HPP

#include "hallcheck/perm_group.hpp"
#include "hallcheck/pi_arith.hpp"

namespace hallcheck {

// Sylow p-subgroup: ascend from a p-element, extending by p-elements of the
// normalizer until the full p-part of the order is reached. Returns the
// trivial subgroup when p does not divide the order; throws
// std::invalid_argument when p is not prime.
PermGroup sylow(const PermGroup &g, std::uint64_t p,
                std::uint64_t seed = 1729);

} // namespace hallcheck

#endif
