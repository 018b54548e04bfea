#ifndef HALLCHECK_PERM_HPP
#define HALLCHECK_PERM_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

/**
 * @file perm.hpp
 * @brief Permutations on the points 0..degree-1.
 *
 * Composition is left-to-right: (f * g)(x) = g(f(x)), so conjugation
 * h.conjugated_by(g) computes g^-1 * h * g and x^(fg) = (x^f)^g.
 */

namespace hallcheck {

using Point = unsigned;

class Perm {
public:
  // Degrees beyond this are refused at construction. Large enough for the
  // widest catalog actions (cyclic groups of order up to 512) plus the
  // paired actions used internally by homomorphisms.
  static constexpr unsigned max_degree = 1024;

  // identity on `degree` points
  explicit Perm(unsigned degree = 1);

  // from an explicit image table; throws std::invalid_argument unless the
  // table is a bijection on {0,...,degree-1}
  explicit Perm(std::vector<Point> images);

  static Perm from_cycles(unsigned degree,
                          const std::vector<std::vector<Point>> &cycles);

  // parses disjoint-cycle text, e.g. "(0 1 2)(3 4)"; "()" is the identity
  static Perm parse(const std::string &text, unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(_images.size()); }

  Point operator[](Point x) const { return _images[x]; }

  bool is_identity() const;

  Perm inverse() const;

  // (f * g)(x) = g(f(x))
  Perm operator*(const Perm &rhs) const;

  // g^-1 * (*this) * g
  Perm conjugated_by(const Perm &g) const;

  Perm power(long long e) const;

  std::uint64_t order() const;

  // nontrivial cycles, each rotated to start at its minimal point,
  // sorted by starting point
  std::vector<std::vector<Point>> cycles() const;

  // sorted cycle lengths including fixed points (degree partition)
  std::vector<unsigned> cycle_type() const;

  bool is_even() const;

  std::string str() const;

  // extend identically to a larger degree / act on shifted points
  Perm extended(unsigned new_degree) const;
  Perm shifted(unsigned offset, unsigned new_degree) const;

  bool operator==(const Perm &rhs) const { return _images == rhs._images; }
  bool operator!=(const Perm &rhs) const { return _images != rhs._images; }
  bool operator<(const Perm &rhs) const { return _images < rhs._images; }

  const std::vector<std::uint16_t> &raw() const { return _images; }

private:
  std::vector<std::uint16_t> _images;
};

struct PermHash {
  std::size_t operator()(const Perm &p) const;
};

} // namespace hallcheck

#endif
