#include "hallcheck/finite_field.hpp"

#include <stdexcept>

namespace hallcheck {

namespace {

// polynomials over F_p as coefficient vectors, least significant first

using Poly = std::vector<unsigned>;

Poly poly_from_index(unsigned idx, unsigned p, unsigned k) {
  Poly c(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    c[i] = idx % p;
    idx /= p;
  }
  return c;
}

unsigned poly_to_index(const Poly &c, unsigned p, unsigned k) {
  unsigned idx = 0;
  for (unsigned i = k; i-- > 0;)
    idx = idx * p + (i < c.size() ? c[i] : 0);
  return idx;
}

Poly poly_mul_mod(const Poly &a, const Poly &b, const Poly &modulus,
                  unsigned p) {
  Poly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  // reduce by the monic modulus of degree k
  std::size_t k = modulus.size() - 1;
  for (std::size_t d = prod.size(); d-- > k;) {
    unsigned coeff = prod[d];
    if (coeff == 0)
      continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < k; ++i) {
      unsigned sub = (coeff * modulus[i]) % p;
      prod[d - k + i] = (prod[d - k + i] + p - sub) % p;
    }
  }
  prod.resize(k);
  return prod;
}

// irreducibility by trial division against all lower-degree monic polys
bool divides(const Poly &divisor, Poly dividend, unsigned p) {
  std::size_t dd = divisor.size() - 1;
  while (dividend.size() > dd && !(dividend.size() == 1 && dividend[0] == 0)) {
    while (!dividend.empty() && dividend.back() == 0)
      dividend.pop_back();
    if (dividend.size() <= dd)
      break;
    unsigned lead = dividend.back();
    std::size_t shift = dividend.size() - 1 - dd;
    // divisor is monic
    for (std::size_t i = 0; i <= dd; ++i) {
      unsigned sub = (lead * divisor[i]) % p;
      dividend[shift + i] = (dividend[shift + i] + p - sub) % p;
    }
  }
  while (!dividend.empty() && dividend.back() == 0)
    dividend.pop_back();
  return dividend.empty();
}

bool is_irreducible(const Poly &f, unsigned p) {
  unsigned deg = static_cast<unsigned>(f.size()) - 1;
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i)
      count *= p;
    for (unsigned tail = 0; tail < count; ++tail) {
      Poly divisor = poly_from_index(tail, p, d);
      divisor.push_back(1); // monic of degree d
      if (divides(divisor, f, p))
        return false;
    }
  }
  return true;
}

Poly find_irreducible(unsigned p, unsigned k) {
  unsigned count = 1;
  for (unsigned i = 0; i < k; ++i)
    count *= p;
  for (unsigned tail = 0; tail < count; ++tail) {
    Poly f = poly_from_index(tail, p, k);
    f.push_back(1);
    if (is_irreducible(f, p))
      return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

} // namespace

FiniteField::FiniteField(unsigned q) : _q(q) {
  if (q < 2 || q > 32)
    throw std::invalid_argument("unsupported field size " + std::to_string(q));
  unsigned p = 2;
  while (q % p != 0)
    ++p;
  unsigned k = 0;
  unsigned n = q;
  while (n > 1) {
    if (n % p != 0)
      throw std::invalid_argument(std::to_string(q) +
                                  " is not a prime power");
    n /= p;
    ++k;
  }
  _p = p;
  _k = k;

  Poly modulus = k > 1 ? find_irreducible(p, k) : Poly{0, 1};

  _add.resize(q * q);
  _mul.resize(q * q);
  _neg.resize(q);
  _inv.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    Poly pa = poly_from_index(a, p, k);
    for (unsigned b = 0; b < q; ++b) {
      Poly pb = poly_from_index(b, p, k);
      Poly sum(k, 0);
      for (unsigned i = 0; i < k; ++i)
        sum[i] = (pa[i] + pb[i]) % p;
      _add[a * q + b] = static_cast<std::uint8_t>(poly_to_index(sum, p, k));
      _mul[a * q + b] = static_cast<std::uint8_t>(
          poly_to_index(poly_mul_mod(pa, pb, modulus, p), p, k));
    }
    Poly negated(k, 0);
    for (unsigned i = 0; i < k; ++i)
      negated[i] = (p - pa[i]) % p;
    _neg[a] = static_cast<std::uint8_t>(poly_to_index(negated, p, k));
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (mul(a, b) == 1) {
        _inv[a] = static_cast<std::uint8_t>(b);
        break;
      }

  _generator = 0;
  for (unsigned g = 1; g < q; ++g) {
    unsigned x = g;
    unsigned ord = 1;
    while (x != 1) {
      x = mul(x, g);
      ++ord;
    }
    if (ord == q - 1) {
      _generator = g;
      break;
    }
  }

  if (_generator == 0 && q > 2)
    throw std::logic_error("field construction found no primitive element");
  if (q == 2)
    _generator = 1;
  if (!satisfies_axioms())
    throw std::logic_error("field tables violate the field axioms");
}

unsigned FiniteField::inv(unsigned a) const {
  if (a == 0)
    throw std::invalid_argument("inverse of 0");
  return _inv[a];
}

bool FiniteField::satisfies_axioms() const {
  unsigned q = _q;
  for (unsigned a = 0; a < q; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a)
      return false;
    if (add(a, neg(a)) != 0)
      return false;
    if (a != 0 && mul(a, _inv[a]) != 1)
      return false;
    for (unsigned b = 0; b < q; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a))
        return false;
      for (unsigned c = 0; c < q; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c)))
          return false;
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          return false;
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          return false;
      }
    }
  }
  return true;
}

} // namespace hallcheck
