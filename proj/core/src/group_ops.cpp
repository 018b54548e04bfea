#include "hallcheck/group_ops.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace hallcheck {

namespace {

void require_subgroup(const PermGroup &g, const PermGroup &h,
                      const char *what) {
  if (!h.is_subgroup_of(g))
    throw std::invalid_argument(what);
}

void require_scannable(const PermGroup &g) {
  if (g.order() > max_scan_order)
    throw std::domain_error("group too large for exhaustive element scan");
}

std::vector<Perm> nontrivial_gens(const PermGroup &g) {
  std::vector<Perm> gens;
  for (const Perm &x : g.generators())
    if (!x.is_identity())
      gens.push_back(x);
  return gens;
}

} // namespace

PermGroup conjugate_subgroup(const PermGroup &h, const Perm &g) {
  std::vector<Perm> gens;
  for (const Perm &x : h.generators())
    gens.push_back(x.conjugated_by(g));
  return PermGroup(h.degree(), std::move(gens));
}

PermGroup subgroup_closure(unsigned degree,
                           const std::vector<const PermGroup *> &groups,
                           const std::vector<Perm> &perms) {
  std::vector<Perm> gens;
  for (const PermGroup *g : groups) {
    if (g->degree() != degree)
      throw std::invalid_argument("degree mismatch in subgroup closure");
    for (const Perm &x : g->generators())
      gens.push_back(x);
  }
  for (const Perm &x : perms) {
    if (x.degree() != degree)
      throw std::invalid_argument("degree mismatch in subgroup closure");
    gens.push_back(x);
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup join(const PermGroup &a, const PermGroup &b) {
  return subgroup_closure(a.degree(), {&a, &b});
}

const PermGroup &JoinCache::join(const PermGroup &a, const PermGroup &b) {
  std::vector<std::vector<std::uint16_t>> key;
  for (const Perm &x : a.generators())
    key.push_back(x.raw());
  for (const Perm &x : b.generators())
    key.push_back(x.raw());
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());

  auto it = _cache.find(key);
  if (it != _cache.end())
    return it->second;
  if (_cache.size() > 4096)
    _cache.clear();
  return _cache.emplace(std::move(key), hallcheck::join(a, b)).first->second;
}

bool is_normal(const PermGroup &g, const PermGroup &h) {
  require_subgroup(g, h, "is_normal: subgroup not contained in ambient group");
  for (const Perm &x : g.generators())
    for (const Perm &y : h.generators())
      if (!h.contains(y.conjugated_by(x)))
        return false;
  return true;
}

PermGroup normal_closure(const PermGroup &g, const std::vector<Perm> &seeds) {
  std::vector<Perm> gens;
  std::vector<Perm> queue;
  for (const Perm &x : seeds) {
    if (x.degree() != g.degree())
      throw std::invalid_argument("degree mismatch in normal closure");
    if (!x.is_identity()) {
      gens.push_back(x);
      queue.push_back(x);
    }
  }
  PermGroup k(g.degree(), gens);
  while (!queue.empty()) {
    Perm x = queue.back();
    queue.pop_back();
    for (const Perm &gen : g.generators()) {
      Perm c = x.conjugated_by(gen);
      if (!k.contains(c)) {
        gens.push_back(c);
        queue.push_back(c);
        k = PermGroup(g.degree(), gens);
      }
    }
  }
  return k;
}

namespace {

// g must permute the orbits of h for conjugation to stabilize h
bool maps_orbits_consistently(const std::vector<unsigned> &ids,
                              const std::vector<std::uint64_t> &sizes,
                              const Perm &g,
                              std::vector<std::int64_t> &image_of_block) {
  std::fill(image_of_block.begin(), image_of_block.end(), -1);
  for (Point x = 0; x < g.degree(); ++x) {
    unsigned from = ids[x];
    unsigned to = ids[g[x]];
    if (sizes[from] != sizes[to])
      return false;
    if (image_of_block[from] < 0)
      image_of_block[from] = to;
    else if (image_of_block[from] != static_cast<std::int64_t>(to))
      return false;
  }
  return true;
}

} // namespace

PermGroup normalizer(const PermGroup &g, const PermGroup &h) {
  require_subgroup(g, h, "normalizer: subgroup not contained in ambient group");
  if (is_normal(g, h))
    return g;
  require_scannable(g);

  std::vector<unsigned> ids = h.orbit_ids();
  unsigned n_blocks = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
  std::vector<std::uint64_t> sizes(n_blocks, 0);
  for (unsigned id : ids)
    ++sizes[id];
  std::vector<std::int64_t> block_image(n_blocks);

  std::vector<Perm> gens = nontrivial_gens(h);
  PermGroup n(g.degree(), gens);
  for (const Perm &x : g.elements()) {
    if (n.contains(x))
      continue;
    if (!maps_orbits_consistently(ids, sizes, x, block_image))
      continue;
    bool normalizes = true;
    for (const Perm &y : h.generators()) {
      if (!h.contains(y.conjugated_by(x))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) {
      gens.push_back(x);
      n = PermGroup(g.degree(), gens);
    }
  }
  return n;
}

PermGroup centralizer(const PermGroup &g, const PermGroup &h) {
  require_subgroup(g, h,
                   "centralizer: subgroup not contained in ambient group");
  require_scannable(g);
  std::vector<Perm> gens;
  PermGroup c(g.degree());
  for (const Perm &x : g.elements()) {
    if (c.contains(x))
      continue;
    bool central = true;
    for (const Perm &y : h.generators()) {
      if (x * y != y * x) {
        central = false;
        break;
      }
    }
    if (central) {
      gens.push_back(x);
      c = PermGroup(g.degree(), gens);
    }
  }
  return c;
}

PermGroup center(const PermGroup &g) {
  if (g.is_abelian())
    return g;
  return centralizer(g, g);
}

PermGroup derived_subgroup(const PermGroup &g) {
  std::vector<Perm> comms;
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity())
        comms.push_back(c);
    }
  return normal_closure(g, comms);
}

std::vector<PermGroup> derived_series(const PermGroup &g) {
  std::vector<PermGroup> series{g};
  for (;;) {
    PermGroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order())
      break;
    series.push_back(std::move(next));
    if (series.back().is_trivial())
      break;
  }
  return series;
}

bool is_solvable(const PermGroup &g) {
  return derived_series(g).back().is_trivial();
}

bool is_perfect(const PermGroup &g) {
  return derived_subgroup(g).order() == g.order();
}

bool is_nilpotent(const PermGroup &g) {
  // lower central series
  PermGroup term = g;
  for (;;) {
    std::vector<Perm> comms;
    for (const Perm &x : g.generators())
      for (const Perm &y : term.generators()) {
        Perm c = x.inverse() * y.inverse() * x * y;
        if (!c.is_identity())
          comms.push_back(c);
      }
    PermGroup next = normal_closure(g, comms);
    if (next.is_trivial())
      return true;
    if (next.order() == term.order())
      return false;
    term = std::move(next);
  }
}

std::vector<Perm> conjugacy_class_reps(const PermGroup &g) {
  require_scannable(g);
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> reps;
  for (const Perm &x : g.elements()) {
    if (seen.count(x))
      continue;
    reps.push_back(x);
    std::vector<Perm> queue{x};
    seen.insert(x);
    while (!queue.empty()) {
      Perm y = queue.back();
      queue.pop_back();
      for (const Perm &gen : g.generators()) {
        Perm c = y.conjugated_by(gen);
        if (seen.insert(c).second)
          queue.push_back(c);
      }
    }
  }
  return reps;
}

std::uint64_t exponent(const PermGroup &g) {
  std::uint64_t e = 1;
  for (const Perm &x : conjugacy_class_reps(g))
    e = std::lcm(e, x.order());
  return e;
}

namespace {

bool is_prime_power(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      return n == 1;
    }
  }
  return true; // prime
}

} // namespace

PermGroup solvable_radical(const PermGroup &g) {
  std::vector<Perm> reps = conjugacy_class_reps(g);
  PermGroup radical(g.degree());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Perm &x : reps) {
      if (!is_prime_power(x.order()))
        continue;
      if (radical.contains(x))
        continue;
      std::vector<Perm> seeds = radical.generators();
      seeds.push_back(x);
      PermGroup candidate = normal_closure(g, seeds);
      if (is_solvable(candidate)) {
        radical = std::move(candidate);
        changed = true;
      }
    }
  }
  return radical;
}

PermGroup intersection(const PermGroup &a, const PermGroup &b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch in intersection");
  const PermGroup &small = a.order() <= b.order() ? a : b;
  const PermGroup &other = a.order() <= b.order() ? b : a;
  require_scannable(small);
  std::vector<Perm> gens;
  PermGroup result(a.degree());
  for (const Perm &x : small.elements()) {
    if (result.contains(x))
      continue;
    if (other.contains(x)) {
      gens.push_back(x);
      result = PermGroup(a.degree(), gens);
    }
  }
  return result;
}

Perm canonical_right_coset_rep(const PermGroup &n, const Perm &g) {
  Perm rep = g;
  for (const BsgsLevel &lvl : n.bsgs().levels()) {
    std::size_t best = 0;
    Point best_image = rep[lvl.orbit[0]];
    for (std::size_t i = 1; i < lvl.orbit.size(); ++i) {
      Point image = rep[lvl.orbit[i]];
      if (image < best_image) {
        best_image = image;
        best = i;
      }
    }
    if (best != 0)
      rep = lvl.transversal[best] * rep;
  }
  return rep;
}

std::vector<Perm> right_transversal(const PermGroup &g, const PermGroup &n) {
  require_subgroup(g, n, "right_transversal: subgroup not contained in group");
  if (g.order() % n.order() != 0)
    throw std::logic_error("transversal: order does not divide");
  std::uint64_t index = g.order() / n.order();

  std::vector<Perm> reps;
  std::unordered_set<Perm, PermHash> seen;
  Perm start = canonical_right_coset_rep(n, g.identity());
  reps.push_back(start);
  seen.insert(start);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const Perm &gen : g.generators()) {
      Perm c = canonical_right_coset_rep(n, reps[i] * gen);
      if (seen.insert(c).second)
        reps.push_back(c);
    }
  }
  assert(reps.size() == index);
  (void)index;
  return reps;
}

bool is_maximal(const PermGroup &g, const PermGroup &h) {
  require_subgroup(g, h, "is_maximal: subgroup not contained in group");
  if (h.order() == g.order())
    return false;
  std::vector<Perm> reps = right_transversal(g, h);
  for (const Perm &rep : reps) {
    if (h.contains(rep))
      continue;
    PermGroup extended = subgroup_closure(g.degree(), {&h}, {rep});
    if (extended.order() != g.order())
      return false;
  }
  return true;
}

bool is_subnormal(const PermGroup &g, const PermGroup &h) {
  require_subgroup(g, h, "is_subnormal: subgroup not contained in group");
  PermGroup term = g;
  for (;;) {
    if (term.order() == h.order())
      return true;
    PermGroup next = normal_closure(term, h.generators());
    if (next.order() == term.order())
      return false; // closure stabilized above h
    term = std::move(next);
  }
}

PermGroup direct_product(const PermGroup &a, const PermGroup &b) {
  unsigned degree = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm &x : a.generators())
    gens.push_back(x.extended(degree));
  for (const Perm &x : b.generators())
    gens.push_back(x.shifted(a.degree(), degree));
  return PermGroup(degree, std::move(gens));
}

std::optional<Perm> are_conjugate_in(const PermGroup &m, const PermGroup &h,
                                     const PermGroup &k) {
  require_subgroup(m, h, "are_conjugate_in: first subgroup not in ambient");
  require_subgroup(m, k, "are_conjugate_in: second subgroup not in ambient");
  if (h.order() != k.order())
    return std::nullopt;
  if (h.orbit_size_signature() != k.orbit_size_signature())
    return std::nullopt;
  if (h.same_group_as(k))
    return m.identity();

  PermGroup n = normalizer(m, h);
  for (const Perm &rep : right_transversal(m, n)) {
    bool match = true;
    for (const Perm &x : h.generators()) {
      if (!k.contains(x.conjugated_by(rep))) {
        match = false;
        break;
      }
    }
    if (match)
      return rep;
  }
  return std::nullopt;
}

} // namespace hallcheck
