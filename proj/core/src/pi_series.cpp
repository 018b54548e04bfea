#include "hallcheck/pi_series.hpp"

#include <algorithm>

#include "hallcheck/group_ops.hpp"

namespace hallcheck {

// O_pi(g) is generated by the normal closures of its elements, and every
// normal closure of a pi-element that happens to be a pi-group sits inside
// O_pi(g), so one pass over class representatives is exact.
PermGroup pi_core(const PermGroup &g, const PiSet &pi) {
  return relative_pi_core(g, pi, PermGroup(g.degree()));
}

PermGroup relative_pi_core(const PermGroup &g, const PiSet &pi,
                           const PermGroup &below) {
  std::vector<Perm> gens = below.generators();
  PermGroup current = below;
  for (const Perm &x : conjugacy_class_reps(g)) {
    if (x.is_identity() || current.contains(x))
      continue;
    std::vector<Perm> seeds = gens;
    seeds.push_back(x);
    PermGroup candidate = normal_closure(g, seeds);
    if (is_pi_number(candidate.order() / below.order(), pi)) {
      current = candidate;
      gens = current.generators();
    }
  }
  return current;
}

PiSeparability is_pi_separable(const PermGroup &g, const PiSet &pi) {
  PiSeparability result;
  result.series.push_back(PermGroup(g.degree()));
  while (result.series.back().order() < g.order()) {
    const PermGroup &bottom = result.series.back();
    bool last_was_pi =
        !result.factor_is_pi.empty() && result.factor_is_pi.back();

    // prefer alternation, but absorb whichever factor type grows
    std::vector<bool> try_order = last_was_pi ? std::vector<bool>{false, true}
                                              : std::vector<bool>{true, false};
    bool grew = false;
    for (bool use_pi : try_order) {
      PermGroup next =
          use_pi ? relative_pi_core(g, pi, bottom)
                 : [&] {
                     // pi'-core relative to the ambient group's primes
                     PiSet ambient_primes = prime_set(g.order());
                     std::vector<std::uint64_t> complement;
                     for (std::uint64_t p : ambient_primes.primes())
                       if (!pi.contains(p))
                         complement.push_back(p);
                     return relative_pi_core(g, PiSet(complement), bottom);
                   }();
      if (next.order() > bottom.order()) {
        result.series.push_back(std::move(next));
        result.factor_is_pi.push_back(use_pi);
        grew = true;
        break;
      }
    }
    if (!grew)
      break;
  }
  result.separable = result.series.back().order() == g.order();
  return result;
}

std::optional<std::vector<std::uint64_t>> sylow_complexion(
    const PermGroup &h) {
  if (h.is_trivial())
    return std::vector<std::uint64_t>{};

  // (p_1,...,p_n) works iff h has a normal p_1-complement K and the
  // remaining primes order into a complexion of K
  PiSet order_primes = prime_set(h.order());
  for (std::uint64_t p : order_primes.primes()) {
    std::vector<std::uint64_t> complement_primes;
    for (std::uint64_t q : order_primes.primes())
      if (q != p)
        complement_primes.push_back(q);
    PiSet complement(complement_primes);
    std::uint64_t complement_order = pi_part(h.order(), complement);

    PermGroup core = pi_core(h, complement);
    if (core.order() != complement_order)
      continue;
    auto rest = sylow_complexion(core);
    if (rest) {
      std::vector<std::uint64_t> out{p};
      out.insert(out.end(), rest->begin(), rest->end());
      return out;
    }
  }
  return std::nullopt;
}

} // namespace hallcheck
