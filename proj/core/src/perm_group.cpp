#include "hallcheck/perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace hallcheck {

// ---------------------------------------------------------------------------
// Bsgs

Bsgs::Bsgs(unsigned degree, const std::vector<Perm> &generators,
           const BsgsOptions &opts)
    : _degree(degree) {
  for (const Perm &g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");

  for (Point b : opts.base_hint) {
    if (b >= degree)
      throw std::invalid_argument("base hint point out of range");
    insert_level(b);
  }

  std::vector<Perm> gens;
  for (const Perm &g : generators)
    if (!g.is_identity())
      gens.push_back(g);

  for (const Perm &g : gens) {
    auto [res, level] = sift(g);
    if (res.is_identity())
      continue;
    if (level == _levels.size())
      insert_level(pick_base_point(res));
    add_generator_at(res, level);
  }

  if (!gens.empty())
    randomized_warmup(gens, opts.seed);
  deterministic_closure();
  compute_order();
}

void Bsgs::insert_level(Point base_point) {
  BsgsLevel level;
  level.base = base_point;
  level.orbit = {base_point};
  level.where.assign(_degree, -1);
  level.where[base_point] = 0;
  level.transversal = {Perm(_degree)};
  _levels.push_back(std::move(level));
}

Point Bsgs::pick_base_point(const Perm &g) const {
  for (Point x = 0; x < _degree; ++x)
    if (g[x] != x)
      return x;
  throw std::logic_error("cannot pick a base point for the identity");
}

// adds g as a strong generator for every level 0..upto_level and refreshes
// the affected orbits; g must fix the base points of all earlier levels
void Bsgs::add_generator_at(const Perm &g, std::size_t upto_level) {
  assert(upto_level < _levels.size());
  for (std::size_t l = 0; l <= upto_level; ++l) {
    if (l > 0)
      assert(g[_levels[l - 1].base] == _levels[l - 1].base);
    _levels[l].gens.push_back(g);
    recompute_orbit(l);
  }
}

void Bsgs::recompute_orbit(std::size_t level) {
  BsgsLevel &lvl = _levels[level];
  lvl.orbit = {lvl.base};
  lvl.where.assign(_degree, -1);
  lvl.where[lvl.base] = 0;
  lvl.transversal = {Perm(_degree)};
  for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
    Point p = lvl.orbit[i];
    for (const Perm &s : lvl.gens) {
      Point q = s[p];
      if (lvl.where[q] < 0) {
        lvl.where[q] = static_cast<std::int32_t>(lvl.orbit.size());
        lvl.orbit.push_back(q);
        lvl.transversal.push_back(lvl.transversal[i] * s);
      }
    }
  }
}

std::pair<Perm, std::size_t> Bsgs::sift(const Perm &p) const {
  Perm res = p;
  for (std::size_t l = 0; l < _levels.size(); ++l) {
    const BsgsLevel &lvl = _levels[l];
    Point image = res[lvl.base];
    if (image == lvl.base)
      continue;
    std::int32_t idx = lvl.where[image];
    if (idx < 0)
      return {res, l};
    res = res * lvl.transversal[idx].inverse();
  }
  return {res, _levels.size()};
}

bool Bsgs::contains(const Perm &p) const {
  auto [res, level] = sift(p);
  return level == _levels.size() && res.is_identity();
}

std::vector<Point> Bsgs::base() const {
  std::vector<Point> b;
  for (const BsgsLevel &lvl : _levels)
    b.push_back(lvl.base);
  return b;
}

void Bsgs::randomized_warmup(const std::vector<Perm> &generators,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, generators.size() - 1);
  const int rounds = 24;
  for (int round = 0; round < rounds; ++round) {
    Perm w(_degree);
    int len = 2 + static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i)
      w = w * generators[pick(rng)];
    auto [res, level] = sift(w);
    if (res.is_identity())
      continue;
    if (level == _levels.size())
      insert_level(pick_base_point(res));
    add_generator_at(res, level);
  }
}

// Schreier-generator verification: on success the chain provably satisfies
// the stabilizer property at every level, making order/membership exact.
void Bsgs::deterministic_closure() {
  if (_levels.empty())
    return;
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(_levels.size()) - 1;
  while (i >= 0) {
    bool complete = true;
    BsgsLevel &lvl = _levels[static_cast<std::size_t>(i)];
    for (std::size_t idx = 0; idx < lvl.orbit.size() && complete; ++idx) {
      for (const Perm &s : lvl.gens) {
        Point p = lvl.orbit[idx];
        Point q = s[p];
        std::int32_t qidx = lvl.where[q];
        assert(qidx >= 0);
        Perm schreier =
            lvl.transversal[idx] * s * lvl.transversal[qidx].inverse();
        if (schreier.is_identity())
          continue;

        // sift below the current level
        Perm res = schreier;
        std::size_t j = static_cast<std::size_t>(i) + 1;
        for (; j < _levels.size(); ++j) {
          const BsgsLevel &deeper = _levels[j];
          Point image = res[deeper.base];
          if (image == deeper.base)
            continue;
          std::int32_t widx = deeper.where[image];
          if (widx < 0)
            break;
          res = res * deeper.transversal[widx].inverse();
        }
        if (res.is_identity())
          continue;

        if (j == _levels.size())
          insert_level(pick_base_point(res));
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          _levels[l].gens.push_back(res);
          recompute_orbit(l);
        }
        i = static_cast<std::ptrdiff_t>(j);
        complete = false;
        break;
      }
    }
    if (complete)
      --i;
  }
}

void Bsgs::compute_order() {
  _order = 1;
  for (const BsgsLevel &lvl : _levels)
    _order *= lvl.orbit.size();
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(unsigned degree) : _degree(degree) {
  _bsgs = std::make_shared<Bsgs>(degree, std::vector<Perm>{}, BsgsOptions{});
}

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators,
                     const BsgsOptions &opts)
    : _degree(degree), _generators(std::move(generators)) {
  _bsgs = std::make_shared<Bsgs>(degree, _generators, opts);
}

bool PermGroup::contains(const Perm &p) const {
  if (p.degree() != _degree)
    throw std::invalid_argument("degree mismatch in membership test");
  return _bsgs->contains(p);
}

bool PermGroup::is_subgroup_of(const PermGroup &g) const {
  if (degree() != g.degree())
    return false;
  for (const Perm &x : _generators)
    if (!g.contains(x))
      return false;
  return true;
}

bool PermGroup::same_group_as(const PermGroup &g) const {
  return order() == g.order() && is_subgroup_of(g);
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < _generators.size(); ++i)
    for (std::size_t j = i + 1; j < _generators.size(); ++j)
      if (_generators[i] * _generators[j] != _generators[j] * _generators[i])
        return false;
  return true;
}

Perm PermGroup::random_element(std::mt19937_64 &rng) const {
  Perm result(_degree);
  for (const BsgsLevel &lvl : _bsgs->levels()) {
    std::uniform_int_distribution<std::size_t> pick(0,
                                                    lvl.transversal.size() - 1);
    result = lvl.transversal[pick(rng)] * result;
  }
  return result;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(_degree, false);
  for (Point start = 0; start < _degree; ++start) {
    if (seen[start])
      continue;
    std::vector<Point> orbit{start};
    seen[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const Perm &g : _generators) {
        Point q = g[orbit[i]];
        if (!seen[q]) {
          seen[q] = true;
          orbit.push_back(q);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

std::vector<unsigned> PermGroup::orbit_ids() const {
  std::vector<unsigned> ids(_degree, 0);
  unsigned next = 0;
  for (const auto &orbit : orbits()) {
    for (Point p : orbit)
      ids[p] = next;
    ++next;
  }
  return ids;
}

std::vector<unsigned> PermGroup::orbit_size_signature() const {
  std::vector<unsigned> sizes;
  for (const auto &orbit : orbits())
    sizes.push_back(static_cast<unsigned>(orbit.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// ---------------------------------------------------------------------------
// element iteration

PermGroup::ElementIterator::ElementIterator(const PermGroup *g)
    : _group(g), _current(g->degree()), _done(false) {
  const auto &levels = g->bsgs().levels();
  _state.assign(levels.size(), 0);
  _suffix.assign(levels.size() + 1, Perm(g->degree()));
  rebuild_from(levels.size());
}

// recompute suffix products for levels < `level` downward; suffix[i] is the
// product transversal[k-1] * ... * transversal[i], applied leftmost-first
void PermGroup::ElementIterator::rebuild_from(std::size_t level) {
  const auto &levels = _group->bsgs().levels();
  for (std::size_t i = level; i-- > 0;)
    _suffix[i] = _suffix[i + 1] * levels[i].transversal[_state[i]];
  _current = _suffix.empty() ? Perm(_group->degree()) : _suffix[0];
}

PermGroup::ElementIterator &PermGroup::ElementIterator::operator++() {
  const auto &levels = _group->bsgs().levels();
  std::size_t i = 0;
  for (; i < _state.size(); ++i) {
    if (++_state[i] < levels[i].transversal.size())
      break;
    _state[i] = 0;
  }
  if (i == _state.size()) {
    _done = true;
    return *this;
  }
  rebuild_from(i + 1);
  return *this;
}

} // namespace hallcheck
