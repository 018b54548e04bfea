#ifndef HALLCHECK_HOMOMORPHISM_HPP
#define HALLCHECK_HOMOMORPHISM_HPP

#include <memory>
#include <utility>
#include <vector>

#include "hallcheck/perm_group.hpp"

/**
 * @file homomorphism.hpp
 * @brief Group homomorphisms given by generator images.
 *
 * Internally a homomorphism is the graph subgroup {(g, phi(g))} acting on
 * the disjoint union of the two point sets. A stabilizer chain whose base
 * runs through the source points computes images; one whose base runs
 * through the target points computes kernels and preimages. The map is
 * well-defined exactly when the graph has the same order as the source.
 */

namespace hallcheck {

class Homomorphism {
public:
  Homomorphism(PermGroup source, PermGroup target,
               std::vector<std::pair<Perm, Perm>> gen_images);

  const PermGroup &source() const { return _source; }
  const PermGroup &target() const { return _target; }
  const std::vector<std::pair<Perm, Perm>> &gen_images() const {
    return _gen_images;
  }

  bool well_defined() const { return _well_defined; }

  // throws std::invalid_argument if x is outside the source group
  Perm image_of(const Perm &x) const;

  PermGroup image() const;
  PermGroup image_of_subgroup(const PermGroup &h) const;

  PermGroup kernel() const;

  // preimage of a subgroup of the image: kernel-augmented closure
  PermGroup preimage_of_subgroup(const PermGroup &k) const;

private:
  Perm embed(const Perm &src_part, const Perm &tgt_part) const;
  Perm source_part(const Perm &combined) const;
  Perm target_part(const Perm &combined) const;

  PermGroup _source;
  PermGroup _target;
  std::vector<std::pair<Perm, Perm>> _gen_images;
  unsigned _combined_degree;
  bool _well_defined;

  std::shared_ptr<const Bsgs> _graph_source_first;
  std::shared_ptr<const Bsgs> _graph_target_first;
  std::size_t _target_base_levels;
};

// action of g on the right cosets of the normal subgroup a, together with
// the natural homomorphism; the kernel is exactly a
std::pair<PermGroup, Homomorphism> quotient_by_normal(const PermGroup &g,
                                                      const PermGroup &a);

} // namespace hallcheck

#endif
