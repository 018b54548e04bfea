#include "hallcheck/sylow.hpp"

#include <cassert>
#include <stdexcept>

#include "hallcheck/group_ops.hpp"

namespace hallcheck {

namespace {

// p-part of x: the power of x whose order is the p-part of x's order;
// identity when p does not divide the order
Perm p_element_part(const Perm &x, std::uint64_t p) {
  std::uint64_t ord = x.order();
  std::uint64_t coprime = ord;
  while (coprime % p == 0)
    coprime /= p;
  return x.power(static_cast<long long>(coprime));
}

// a p-element of g lying outside `exclude`, or nullopt after exhausting the
// group; tries random draws first, then a deterministic scan
std::optional<Perm> find_p_element(const PermGroup &g, std::uint64_t p,
                                   const PermGroup &exclude,
                                   std::mt19937_64 &rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    Perm x = g.random_element(rng);
    Perm z = p_element_part(x, p);
    if (!z.is_identity() && !exclude.contains(z))
      return z;
  }
  for (const Perm &x : g.elements()) {
    Perm z = p_element_part(x, p);
    if (!z.is_identity() && !exclude.contains(z))
      return z;
  }
  return std::nullopt;
}

} // namespace

PermGroup sylow(const PermGroup &g, std::uint64_t p, std::uint64_t seed) {
  if (!is_prime(p))
    throw std::invalid_argument("sylow requires a prime");

  std::uint64_t target = pi_part(g.order(), PiSet({p}));
  if (target == 1)
    return PermGroup(g.degree());

  std::mt19937_64 rng(seed);
  PermGroup current(g.degree());
  {
    auto z = find_p_element(g, p, current, rng);
    assert(z.has_value());
    current = PermGroup(g.degree(), {*z});
  }

  while (current.order() < target) {
    // a proper p-subgroup grows inside its normalizer
    PermGroup n = normalizer(g, current);
    auto z = find_p_element(n, p, current, rng);
    if (!z.has_value())
      throw std::logic_error("sylow ascent stalled below the full p-part");
    current = subgroup_closure(g.degree(), {&current}, {*z});
    assert(pi_part(current.order(), PiSet({p})) == current.order());
  }
  return current;
}

} // namespace hallcheck
