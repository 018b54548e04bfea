#ifndef HALLCHECK_FINITE_FIELD_HPP
#define HALLCHECK_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

// Small finite fields as explicit operation tables. Elements are indices
// 0..q-1 encoding polynomial coefficients in base p; 0 and 1 are the field
// constants.

namespace hallcheck {

class FiniteField {
public:
  // supports q = p^k up to 32; throws std::invalid_argument otherwise
  explicit FiniteField(unsigned q);

  unsigned q() const { return _q; }
  unsigned characteristic() const { return _p; }
  unsigned extension_degree() const { return _k; }

  unsigned add(unsigned a, unsigned b) const { return _add[a * _q + b]; }
  unsigned mul(unsigned a, unsigned b) const { return _mul[a * _q + b]; }
  unsigned neg(unsigned a) const { return _neg[a]; }
  unsigned inv(unsigned a) const; // throws on 0

  // a multiplicative generator
  unsigned primitive_element() const { return _generator; }

  // exhaustive field-axiom check, used by construction-time validation
  bool satisfies_axioms() const;

private:
  unsigned _q, _p, _k;
  std::vector<std::uint8_t> _add;
  std::vector<std::uint8_t> _mul;
  std::vector<std::uint8_t> _neg;
  std::vector<std::uint8_t> _inv;
  unsigned _generator;
};

} // namespace hallcheck

#endif
