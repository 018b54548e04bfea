#include "hallcheck/homomorphism.hpp"

#include <cassert>
#include <stdexcept>
#include <unordered_map>

#include "hallcheck/group_ops.hpp"

namespace hallcheck {

Perm Homomorphism::embed(const Perm &src_part, const Perm &tgt_part) const {
  std::vector<Point> images(_combined_degree);
  unsigned ds = _source.degree();
  for (Point x = 0; x < ds; ++x)
    images[x] = src_part[x];
  for (Point x = 0; x < _target.degree(); ++x)
    images[ds + x] = ds + tgt_part[x];
  return Perm(images);
}

Perm Homomorphism::source_part(const Perm &combined) const {
  std::vector<Point> images(_source.degree());
  for (Point x = 0; x < _source.degree(); ++x)
    images[x] = combined[x];
  return Perm(images);
}

Perm Homomorphism::target_part(const Perm &combined) const {
  unsigned ds = _source.degree();
  std::vector<Point> images(_target.degree());
  for (Point x = 0; x < _target.degree(); ++x)
    images[x] = combined[ds + x] - ds;
  return Perm(images);
}

Homomorphism::Homomorphism(PermGroup source, PermGroup target,
                           std::vector<std::pair<Perm, Perm>> gen_images)
    : _source(std::move(source)), _target(std::move(target)),
      _gen_images(std::move(gen_images)) {
  _combined_degree = _source.degree() + _target.degree();
  if (_combined_degree > Perm::max_degree)
    throw std::domain_error("combined degree too large for homomorphism");

  std::vector<Perm> graph_gens;
  std::vector<Perm> image_gens;
  for (const auto &[g, img] : _gen_images) {
    if (g.degree() != _source.degree() || img.degree() != _target.degree())
      throw std::invalid_argument("homomorphism generator degree mismatch");
    if (!_source.contains(g))
      throw std::invalid_argument("homomorphism generator outside source");
    if (!_target.contains(img))
      throw std::invalid_argument("homomorphism image outside target");
    graph_gens.push_back(embed(g, img));
    image_gens.push_back(img);
  }

  BsgsOptions source_first;
  source_first.base_hint = _source.bsgs().base();
  _graph_source_first = std::make_shared<Bsgs>(
      _combined_degree, graph_gens, source_first);

  PermGroup image_group(_target.degree(), image_gens);
  BsgsOptions target_first;
  for (Point b : image_group.bsgs().base())
    target_first.base_hint.push_back(_source.degree() + b);
  _target_base_levels = target_first.base_hint.size();
  _graph_target_first = std::make_shared<Bsgs>(
      _combined_degree, graph_gens, target_first);

  // the graph projects isomorphically onto the source iff the image rule
  // extends to a function on all of the source group
  _well_defined = _graph_source_first->order() == _source.order();
}

Perm Homomorphism::image_of(const Perm &x) const {
  if (!_well_defined)
    throw std::logic_error("homomorphism image rule is not well-defined");
  if (x.degree() != _source.degree())
    throw std::invalid_argument("degree mismatch in homomorphism image");

  Perm res = embed(x, Perm(_target.degree()));
  for (const BsgsLevel &lvl : _graph_source_first->levels()) {
    Point image = res[lvl.base];
    if (image == lvl.base)
      continue;
    std::int32_t idx = lvl.where[image];
    if (idx < 0)
      throw std::invalid_argument("element outside the source group");
    res = res * lvl.transversal[idx].inverse();
  }
  if (!source_part(res).is_identity())
    throw std::invalid_argument("element outside the source group");
  return target_part(res).inverse();
}

PermGroup Homomorphism::image() const {
  std::vector<Perm> gens;
  for (const auto &[g, img] : _gen_images)
    gens.push_back(img);
  return PermGroup(_target.degree(), std::move(gens));
}

PermGroup Homomorphism::image_of_subgroup(const PermGroup &h) const {
  std::vector<Perm> gens;
  for (const Perm &x : h.generators())
    gens.push_back(image_of(x));
  return PermGroup(_target.degree(), std::move(gens));
}

PermGroup Homomorphism::kernel() const {
  std::vector<Perm> gens;
  const auto &levels = _graph_target_first->levels();
  if (_target_base_levels < levels.size())
    for (const Perm &g : levels[_target_base_levels].gens)
      gens.push_back(source_part(g));
  return PermGroup(_source.degree(), std::move(gens));
}

PermGroup Homomorphism::preimage_of_subgroup(const PermGroup &k) const {
  if (k.degree() != _target.degree())
    throw std::invalid_argument("degree mismatch in preimage");

  std::vector<Perm> gens = kernel().generators();
  for (const Perm &y : k.generators()) {
    // locate a graph element whose target part is y
    Perm res = embed(Perm(_source.degree()), y);
    for (std::size_t l = 0; l < _target_base_levels; ++l) {
      const BsgsLevel &lvl = _graph_target_first->levels()[l];
      Point image = res[lvl.base];
      if (image == lvl.base)
        continue;
      std::int32_t idx = lvl.where[image];
      if (idx < 0)
        throw std::invalid_argument("subgroup not contained in the image");
      res = res * lvl.transversal[idx].inverse();
    }
    if (!target_part(res).is_identity())
      throw std::invalid_argument("subgroup not contained in the image");
    gens.push_back(source_part(res).inverse());
  }
  return PermGroup(_source.degree(), std::move(gens));
}

std::pair<PermGroup, Homomorphism> quotient_by_normal(const PermGroup &g,
                                                      const PermGroup &a) {
  if (!is_normal(g, a))
    throw std::invalid_argument("quotient requires a normal subgroup");
  if (g.order() % a.order() != 0)
    throw std::logic_error("quotient: order does not divide");
  std::uint64_t index = g.order() / a.order();
  if (index > Perm::max_degree ||
      g.degree() + index > Perm::max_degree)
    throw std::domain_error("quotient index too large for a permutation action");

  // enumerate cosets by canonical representatives
  std::vector<Perm> reps;
  std::unordered_map<Perm, unsigned, PermHash> coset_of;
  Perm start = canonical_right_coset_rep(a, g.identity());
  reps.push_back(start);
  coset_of.emplace(start, 0);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const Perm &gen : g.generators()) {
      Perm c = canonical_right_coset_rep(a, reps[i] * gen);
      if (coset_of.emplace(c, static_cast<unsigned>(reps.size())).second)
        reps.push_back(c);
    }
  }
  assert(reps.size() == index);

  unsigned n = static_cast<unsigned>(index);
  std::vector<std::pair<Perm, Perm>> gen_images;
  std::vector<Perm> q_gens;
  for (const Perm &gen : g.generators()) {
    std::vector<Point> images(n);
    for (unsigned i = 0; i < n; ++i) {
      Perm c = canonical_right_coset_rep(a, reps[i] * gen);
      images[i] = coset_of.at(c);
    }
    Perm q(images);
    q_gens.push_back(q);
    gen_images.emplace_back(gen, q);
  }

  PermGroup quotient(n, q_gens);
  assert(quotient.order() == index);
  Homomorphism hom(g, quotient, std::move(gen_images));
  assert(hom.well_defined());
  return {std::move(quotient), std::move(hom)};
}

} // namespace hallcheck
