#ifndef HALLCHECK_PERM_GROUP_HPP
#define HALLCHECK_PERM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "hallcheck/perm.hpp"

/**
 * @file perm_group.hpp
 * @brief Permutation groups backed by a base and strong generating set.
 *
 * The chain is produced by a randomized Schreier-Sims warmup followed by a
 * deterministic Schreier-generator verification pass, so order and
 * membership queries are exact.
 */

namespace hallcheck {

struct BsgsOptions {
  std::uint64_t seed = 1729;
  // base points to pre-create as chain levels, in this order; used by
  // homomorphism graph groups to pin the base through one factor
  std::vector<Point> base_hint;
};

struct BsgsLevel {
  Point base = 0;
  std::vector<Point> orbit;              // orbit[0] == base
  std::vector<std::int32_t> where;       // point -> orbit index, -1 outside
  std::vector<Perm> transversal;         // transversal[i] maps base to orbit[i]
  std::vector<Perm> gens;                // strong generators active at this level
};

class Bsgs {
public:
  Bsgs() = default;
  Bsgs(unsigned degree, const std::vector<Perm> &generators,
       const BsgsOptions &opts);

  unsigned degree() const { return _degree; }
  std::uint64_t order() const { return _order; }
  const std::vector<BsgsLevel> &levels() const { return _levels; }

  // strips transversal factors; returns residue and number of levels passed
  std::pair<Perm, std::size_t> sift(const Perm &p) const;
  bool contains(const Perm &p) const;

  std::vector<Point> base() const;

private:
  void insert_level(Point base_point);
  void add_generator_at(const Perm &g, std::size_t upto_level);
  void recompute_orbit(std::size_t level);
  Point pick_base_point(const Perm &g) const;
  void randomized_warmup(const std::vector<Perm> &generators,
                         std::uint64_t seed);
  void deterministic_closure();
  void compute_order();

  unsigned _degree = 1;
  std::vector<BsgsLevel> _levels;
  std::uint64_t _order = 1;
};

class PermGroup {
public:
  // trivial group on `degree` points
  explicit PermGroup(unsigned degree = 1);

  PermGroup(unsigned degree, std::vector<Perm> generators,
            const BsgsOptions &opts = {});

  unsigned degree() const { return _degree; }
  const std::vector<Perm> &generators() const { return _generators; }
  const Bsgs &bsgs() const { return *_bsgs; }

  std::uint64_t order() const { return _bsgs->order(); }
  bool is_trivial() const { return order() == 1; }

  bool contains(const Perm &p) const;

  // true iff every generator of this group lies in g
  bool is_subgroup_of(const PermGroup &g) const;
  bool same_group_as(const PermGroup &g) const;

  bool is_abelian() const;

  Perm identity() const { return Perm(_degree); }

  Perm random_element(std::mt19937_64 &rng) const;

  // orbits of the natural action, sorted by minimal point
  std::vector<std::vector<Point>> orbits() const;
  // orbit id per point, plus sorted orbit sizes (a cheap conjugation invariant)
  std::vector<unsigned> orbit_ids() const;
  std::vector<unsigned> orbit_size_signature() const;

  class ElementIterator {
  public:
    using value_type = Perm;

    ElementIterator() : _done(true) {}
    explicit ElementIterator(const PermGroup *g);

    const Perm &operator*() const { return _current; }
    ElementIterator &operator++();

    bool operator==(const ElementIterator &rhs) const {
      return _done == rhs._done && (_done || _state == rhs._state);
    }
    bool operator!=(const ElementIterator &rhs) const {
      return !(*this == rhs);
    }

  private:
    void rebuild_from(std::size_t level);

    const PermGroup *_group = nullptr;
    std::vector<std::size_t> _state;  // transversal index per level
    std::vector<Perm> _suffix;        // _suffix[i] = product of levels >= i
    Perm _current{1};
    bool _done = false;
  };

  struct ElementRange {
    const PermGroup *group;
    ElementIterator begin() const { return ElementIterator(group); }
    ElementIterator end() const { return ElementIterator(); }
  };

  // iterates every element exactly once, deterministically
  ElementRange elements() const { return ElementRange{this}; }

private:
  unsigned _degree;
  std::vector<Perm> _generators;
  std::shared_ptr<const Bsgs> _bsgs;
};

} // namespace hallcheck

#endif
