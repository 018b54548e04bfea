#include "hallcheck/pi_arith.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hallcheck {

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (auto [p, e] : factors)
    for (unsigned i = 0; i < e; ++i)
      v *= p;
  return v;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("cannot factorize 0");
  Factorization f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  }
  if (n > 1)
    f.factors.emplace_back(n, 1);
  return f;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0)
      return false;
  return true;
}

PiSet::PiSet(std::vector<std::uint64_t> primes) : _primes(std::move(primes)) {
  std::sort(_primes.begin(), _primes.end());
  _primes.erase(std::unique(_primes.begin(), _primes.end()), _primes.end());
  for (std::uint64_t p : _primes)
    if (!is_prime(p))
      throw std::invalid_argument("pi-set member " + std::to_string(p) +
                                  " is not prime");
}

PiSet PiSet::parse(const std::string &text) {
  std::vector<std::uint64_t> primes;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty())
      continue;
    std::size_t pos = 0;
    unsigned long long v = std::stoull(token, &pos);
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos])))
      ++pos;
    if (pos != token.size())
      throw std::invalid_argument("bad pi-set token: " + token);
    primes.push_back(v);
  }
  return PiSet(std::move(primes));
}

bool PiSet::contains(std::uint64_t p) const {
  return std::binary_search(_primes.begin(), _primes.end(), p);
}

PiSet PiSet::intersect(const PiSet &other) const {
  std::vector<std::uint64_t> out;
  std::set_intersection(_primes.begin(), _primes.end(), other._primes.begin(),
                        other._primes.end(), std::back_inserter(out));
  return PiSet(out);
}

PiSet PiSet::unite(const PiSet &other) const {
  std::vector<std::uint64_t> out;
  std::set_union(_primes.begin(), _primes.end(), other._primes.begin(),
                 other._primes.end(), std::back_inserter(out));
  return PiSet(out);
}

bool PiSet::subset_of(const PiSet &other) const {
  return std::includes(other._primes.begin(), other._primes.end(),
                       _primes.begin(), _primes.end());
}

std::string PiSet::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < _primes.size(); ++i) {
    if (i)
      out << ',';
    out << _primes[i];
  }
  return out.str();
}

PiSet prime_set(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("prime_set(0) is undefined");
  std::vector<std::uint64_t> primes;
  for (auto [p, e] : factorize(n).factors)
    primes.push_back(p);
  return PiSet(std::move(primes));
}

std::uint64_t pi_part(std::uint64_t n, const PiSet &pi) {
  if (n == 0)
    throw std::invalid_argument("pi_part of 0 is undefined");
  std::uint64_t part = 1;
  for (auto [p, e] : factorize(n).factors)
    if (pi.contains(p))
      for (unsigned i = 0; i < e; ++i)
        part *= p;
  return part;
}

std::uint64_t pi_prime_part(std::uint64_t n, const PiSet &pi) {
  return n / pi_part(n, pi);
}

bool is_pi_number(std::uint64_t n, const PiSet &pi) {
  return pi_part(n, pi) == n;
}

bool is_pi_group(const PermGroup &g, const PiSet &pi) {
  return is_pi_number(g.order(), pi);
}

} // namespace hallcheck
