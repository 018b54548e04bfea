#ifndef HALLCHECK_PI_ARITH_HPP
#define HALLCHECK_PI_ARITH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hallcheck/perm_group.hpp"

// Prime sets and pi-parts of integers. Orders stay below 2^63, so plain
// trial division does all the factoring.

namespace hallcheck {

struct Factorization {
  // (prime, exponent) pairs sorted by prime
  std::vector<std::pair<std::uint64_t, unsigned>> factors;

  std::uint64_t value() const;
};

Factorization factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

class PiSet {
public:
  PiSet() = default;
  // throws std::invalid_argument if any member is not prime
  explicit PiSet(std::vector<std::uint64_t> primes);

  // comma-separated primes, e.g. "2,3,5"
  static PiSet parse(const std::string &text);

  const std::vector<std::uint64_t> &primes() const { return _primes; }
  bool contains(std::uint64_t p) const;
  bool empty() const { return _primes.empty(); }
  std::size_t size() const { return _primes.size(); }

  PiSet intersect(const PiSet &other) const;
  PiSet unite(const PiSet &other) const;
  bool subset_of(const PiSet &other) const;

  std::string str() const;

  bool operator==(const PiSet &rhs) const { return _primes == rhs._primes; }
  bool operator<(const PiSet &rhs) const { return _primes < rhs._primes; }

private:
  std::vector<std::uint64_t> _primes; // sorted, duplicate-free
};

// set of primes dividing n; throws on n = 0
PiSet prime_set(std::uint64_t n);

// largest divisor of n supported on pi
std::uint64_t pi_part(std::uint64_t n, const PiSet &pi);

// largest divisor of n coprime to every prime in pi
std::uint64_t pi_prime_part(std::uint64_t n, const PiSet &pi);

bool is_pi_number(std::uint64_t n, const PiSet &pi);

bool is_pi_group(const PermGroup &g, const PiSet &pi);

} // namespace hallcheck

#endif
