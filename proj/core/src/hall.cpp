#include "hallcheck/hall.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "hallcheck/group_ops.hpp"
#include "hallcheck/sylow.hpp"

namespace hallcheck {

namespace {

std::vector<std::vector<std::uint16_t>> sorted_gen_key(const PermGroup &g) {
  std::vector<std::vector<std::uint16_t>> key;
  for (const Perm &x : g.generators())
    key.push_back(x.raw());
  std::sort(key.begin(), key.end());
  return key;
}

// pool of distinct subgroups, bucketed by order
class SubgroupPool {
public:
  bool insert(PermGroup g) {
    auto &bucket = _buckets[g.order()];
    for (const PermGroup &member : bucket)
      if (member.is_subgroup_of(g) && g.is_subgroup_of(member))
        return false;
    bucket.push_back(std::move(g));
    ++_size;
    return true;
  }

  std::vector<const PermGroup *> members() const {
    std::vector<const PermGroup *> out;
    for (const auto &[order, bucket] : _buckets)
      for (const PermGroup &g : bucket)
        out.push_back(&g);
    return out;
  }

  std::vector<const PermGroup *> of_order(std::uint64_t order) const {
    std::vector<const PermGroup *> out;
    auto it = _buckets.find(order);
    if (it != _buckets.end())
      for (const PermGroup &g : it->second)
        out.push_back(&g);
    return out;
  }

  std::size_t size() const { return _size; }

private:
  std::map<std::uint64_t, std::vector<PermGroup>> _buckets;
  std::size_t _size = 0;
};

HallClassification classify_exhaustive(const PermGroup &g, const PiSet &pi,
                                       const HallOptions &opts) {
  HallClassification out;
  out.pi = pi;
  out.ambient = g;
  out.hall_order = pi_part(g.order(), pi);
  out.search_mode = SearchMode::exhaustive;
  out.complete = true;

  SubgroupLattice lattice(g, opts.exhaustive_bound);
  auto candidates = lattice.of_order(out.hall_order);
  auto classes = lattice.conjugacy_classes(candidates);
  for (const auto &cls : classes)
    out.class_reps.push_back(lattice.to_perm_group(*candidates[cls[0]]));

  out.satisfies_e = !out.class_reps.empty();
  out.satisfies_c = out.satisfies_e && out.class_reps.size() == 1;

  // with the lattice in hand the exact D test is a subset scan;
  // D requires C in addition to containment
  out.d_mode = DCheckMode::exact;
  out.satisfies_d = out.satisfies_c;
  if (out.satisfies_d) {
    for (const SmallSubgroup &s : lattice.all()) {
      if (!is_pi_number(s.order(), pi))
        continue;
      bool covered = false;
      for (const SmallSubgroup *h : candidates) {
        if (std::includes(h->elements.begin(), h->elements.end(),
                          s.elements.begin(), s.elements.end())) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        out.satisfies_d = false;
        break;
      }
    }
  }
  return out;
}

void classify_conjugacy(const PermGroup &g,
                        std::vector<PermGroup> &survivors,
                        std::vector<PermGroup> &reps) {
  // deterministic processing order
  std::sort(survivors.begin(), survivors.end(),
            [](const PermGroup &a, const PermGroup &b) {
              return sorted_gen_key(a) < sorted_gen_key(b);
            });
  for (PermGroup &candidate : survivors) {
    bool fresh = true;
    for (const PermGroup &rep : reps) {
      if (are_conjugate_in(g, rep, candidate).has_value()) {
        fresh = false;
        break;
      }
    }
    if (fresh)
      reps.push_back(std::move(candidate));
  }
}

HallClassification classify_seeded(const PermGroup &g, const PiSet &pi,
                                   const HallOptions &opts, bool want_d) {
  HallClassification out;
  out.pi = pi;
  out.ambient = g;
  out.hall_order = pi_part(g.order(), pi);
  out.search_mode = SearchMode::seeded;

  const std::uint64_t hall_order = out.hall_order;

  if (hall_order == 1) {
    out.class_reps.push_back(PermGroup(g.degree()));
    out.satisfies_e = out.satisfies_c = out.satisfies_d = true;
    out.d_mode = DCheckMode::exact;
    out.complete = true;
    return out;
  }
  if (hall_order == g.order()) {
    out.class_reps.push_back(g);
    out.satisfies_e = out.satisfies_c = out.satisfies_d = true;
    out.d_mode = DCheckMode::exact;
    out.complete = true;
    return out;
  }

  std::vector<std::uint64_t> active_primes;
  for (std::uint64_t p : pi.primes())
    if (g.order() % p == 0)
      active_primes.push_back(p);

  // Sylow seeds and all of their conjugates
  std::vector<PermGroup> sylows;
  std::vector<std::vector<Perm>> sylow_conjugators;
  for (std::uint64_t p : active_primes) {
    PermGroup s = sylow(g, p, opts.seed);
    PermGroup n = normalizer(g, s);
    sylow_conjugators.push_back(right_transversal(g, n));
    sylows.push_back(std::move(s));
  }

  SubgroupPool pool;
  auto admit = [&](PermGroup candidate) -> bool {
    std::uint64_t o = candidate.order();
    if (o == 1 || hall_order % o != 0)
      return false;
    return pool.insert(std::move(candidate));
  };

  // iterated normalizer closure, admitted while it stays a pi-candidate
  auto normalizer_ascent = [&](const PermGroup &start) {
    PermGroup current = start;
    for (;;) {
      PermGroup n = normalizer(g, current);
      if (n.order() == current.order())
        break;
      if (!admit(n))
        break;
      current = std::move(n);
    }
  };

  for (const PermGroup &s : sylows) {
    admit(s);
    normalizer_ascent(s);
  }

  // joins with conjugated Sylow subgroups, iterated so that every Hall
  // subgroup (generated by its Sylow subgroups) is reached up to conjugacy
  std::size_t rounds = std::max<std::size_t>(2, active_primes.size());
  constexpr std::size_t pool_cap = 768;
  for (std::size_t round = 0; round < rounds; ++round) {
    bool grew = false;
    std::vector<PermGroup> snapshot;
    for (const PermGroup *member : pool.members())
      snapshot.push_back(*member);
    for (const PermGroup &member : snapshot) {
      for (std::size_t i = 0; i < sylows.size(); ++i) {
        for (const Perm &t : sylow_conjugators[i]) {
          if (pool.size() >= pool_cap)
            break;
          PermGroup conj = conjugate_subgroup(sylows[i], t);
          if (conj.is_subgroup_of(member))
            continue;
          PermGroup joined = join(member, conj);
          std::uint64_t o = joined.order();
          if (o == 1 || hall_order % o != 0)
            continue;
          PermGroup copy = joined;
          if (pool.insert(std::move(joined))) {
            grew = true;
            if (o * 2 >= hall_order)
              normalizer_ascent(copy);
          }
        }
      }
    }
    if (!grew)
      break;
  }

  std::vector<PermGroup> survivors;
  for (const PermGroup *member : pool.of_order(hall_order))
    survivors.push_back(*member);
  classify_conjugacy(g, survivors, out.class_reps);

  out.satisfies_e = !out.class_reps.empty();
  out.satisfies_c = out.satisfies_e && out.class_reps.size() == 1;
  // a lone active prime makes the Hall subgroup a Sylow subgroup: the class
  // list is complete by Sylow's theorem
  out.complete = active_primes.size() <= 1;

  if (want_d) {
    out.d_mode = DCheckMode::two_generated;
    out.satisfies_d = out.satisfies_c; // D requires C
  }
  if (want_d && out.satisfies_d) {

    // conjugates of the found representatives, reused across containment tests
    std::vector<PermGroup> hall_conjugates;
    for (const PermGroup &rep : out.class_reps) {
      PermGroup n = normalizer(g, rep);
      for (const Perm &t : right_transversal(g, n))
        hall_conjugates.push_back(conjugate_subgroup(rep, t));
    }
    auto covered = [&](const PermGroup &k) {
      for (const PermGroup &h : hall_conjugates)
        if (k.is_subgroup_of(h))
          return true;
      return false;
    };

    std::vector<Perm> pi_reps;
    for (const Perm &x : conjugacy_class_reps(g))
      if (!x.is_identity() && is_pi_number(x.order(), pi))
        pi_reps.push_back(x);

    std::vector<PermGroup> seen;
    for (const Perm &x : pi_reps) {
      if (!out.satisfies_d)
        break;
      for (const Perm &y : g.elements()) {
        if (y.is_identity() || !is_pi_number(y.order(), pi))
          continue;
        PermGroup k(g.degree(), {x, y});
        if (!is_pi_number(k.order(), pi) || k.order() > hall_order ||
            hall_order % k.order() != 0)
          continue;
        bool known = false;
        for (const PermGroup &s : seen)
          if (s.order() == k.order() && s.is_subgroup_of(k)) {
            known = true;
            break;
          }
        if (known)
          continue;
        if (!covered(k)) {
          out.satisfies_d = false;
          break;
        }
        seen.push_back(std::move(k));
      }
    }
  }
  return out;
}

} // namespace

HallClassification hall_subgroups(const PermGroup &g, const PiSet &pi,
                                  const HallOptions &opts) {
  SearchMode mode = opts.mode;
  if (mode == SearchMode::automatic)
    mode = g.order() <= opts.exhaustive_bound ? SearchMode::exhaustive
                                              : SearchMode::seeded;
  if (mode == SearchMode::exhaustive)
    return classify_exhaustive(g, pi, opts);
  return classify_seeded(g, pi, opts, false);
}

HallClassification classify_pi_properties(const PermGroup &g, const PiSet &pi,
                                          const HallOptions &opts) {
  SearchMode mode = opts.mode;
  if (mode == SearchMode::automatic)
    mode = g.order() <= opts.exhaustive_bound ? SearchMode::exhaustive
                                              : SearchMode::seeded;
  if (mode == SearchMode::exhaustive)
    return classify_exhaustive(g, pi, opts);
  return classify_seeded(g, pi, opts, true);
}

} // namespace hallcheck
