#include "hallcheck/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hallcheck {

namespace {

void check_degree(unsigned degree) {
  if (degree == 0)
    throw std::invalid_argument("permutation degree must be positive");
  if (degree > Perm::max_degree)
    throw std::invalid_argument("permutation degree exceeds cap of " +
                                std::to_string(Perm::max_degree));
}

} // namespace

Perm::Perm(unsigned degree) {
  check_degree(degree);
  _images.resize(degree);
  std::iota(_images.begin(), _images.end(), 0);
}

Perm::Perm(std::vector<Point> images) {
  check_degree(static_cast<unsigned>(images.size()));
  const unsigned n = static_cast<unsigned>(images.size());
  std::vector<bool> seen(n, false);
  for (Point x : images) {
    if (x >= n || seen[x])
      throw std::invalid_argument("image table is not a bijection");
    seen[x] = true;
  }
  _images.assign(images.begin(), images.end());
}

Perm Perm::from_cycles(unsigned degree,
                       const std::vector<std::vector<Point>> &cycles) {
  check_degree(degree);
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);
  for (const auto &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree)
        throw std::invalid_argument("cycle point out of range");
      if (used[from])
        throw std::invalid_argument("cycles are not disjoint");
      used[from] = true;
      images[from] = to;
    }
  }
  return Perm(images);
}

Perm Perm::parse(const std::string &text, unsigned degree) {
  check_degree(degree);
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' in permutation text: " + text);
    ++i;
    std::vector<Point> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected point in permutation text: " +
                                    text);
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        ++i;
      }
      cycle.push_back(static_cast<Point>(v));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i == text.size())
      throw std::invalid_argument("unterminated cycle in: " + text);
    ++i; // ')'
    if (cycle.size() > 1)
      cycles.push_back(cycle);
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

bool Perm::is_identity() const {
  for (Point x = 0; x < degree(); ++x)
    if (_images[x] != x)
      return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(degree());
  for (Point x = 0; x < degree(); ++x)
    inv[_images[x]] = x;
  return Perm(inv);
}

Perm Perm::operator*(const Perm &rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  std::vector<Point> images(degree());
  for (Point x = 0; x < degree(); ++x)
    images[x] = rhs._images[_images[x]];
  return Perm(images);
}

Perm Perm::conjugated_by(const Perm &g) const {
  if (degree() != g.degree())
    throw std::invalid_argument("degree mismatch in conjugation");
  // result maps g(x) -> g(p(x))
  std::vector<Point> images(degree());
  for (Point x = 0; x < degree(); ++x)
    images[g._images[x]] = g._images[_images[x]];
  return Perm(images);
}

Perm Perm::power(long long e) const {
  Perm base = e >= 0 ? *this : inverse();
  unsigned long long k = e >= 0 ? static_cast<unsigned long long>(e)
                                : static_cast<unsigned long long>(-e);
  Perm acc(degree());
  while (k) {
    if (k & 1)
      acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::uint64_t Perm::order() const {
  std::uint64_t ord = 1;
  for (unsigned len : cycle_type())
    ord = std::lcm<std::uint64_t>(ord, len);
  return ord;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(degree(), false);
  for (Point start = 0; start < degree(); ++start) {
    if (seen[start] || _images[start] == start)
      continue;
    std::vector<Point> cycle;
    Point x = start;
    do {
      cycle.push_back(x);
      seen[x] = true;
      x = _images[x];
    } while (x != start);
    result.push_back(cycle);
  }
  return result;
}

std::vector<unsigned> Perm::cycle_type() const {
  std::vector<unsigned> lengths;
  std::vector<bool> seen(degree(), false);
  for (Point start = 0; start < degree(); ++start) {
    if (seen[start])
      continue;
    unsigned len = 0;
    Point x = start;
    do {
      seen[x] = true;
      ++len;
      x = _images[x];
    } while (x != start);
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

bool Perm::is_even() const {
  unsigned transpositions = 0;
  for (const auto &cycle : cycles())
    transpositions += static_cast<unsigned>(cycle.size()) - 1;
  return transpositions % 2 == 0;
}

std::string Perm::str() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream out;
  for (const auto &cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i)
        out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  return out.str();
}

Perm Perm::extended(unsigned new_degree) const {
  if (new_degree < degree())
    throw std::invalid_argument("cannot extend to a smaller degree");
  std::vector<Point> images(new_degree);
  std::iota(images.begin(), images.end(), 0);
  for (Point x = 0; x < degree(); ++x)
    images[x] = _images[x];
  return Perm(images);
}

Perm Perm::shifted(unsigned offset, unsigned new_degree) const {
  if (new_degree < offset + degree())
    throw std::invalid_argument("shifted permutation does not fit degree");
  std::vector<Point> images(new_degree);
  std::iota(images.begin(), images.end(), 0);
  for (Point x = 0; x < degree(); ++x)
    images[offset + x] = offset + _images[x];
  return Perm(images);
}

std::size_t PermHash::operator()(const Perm &p) const {
  // FNV-1a over the image bytes
  std::size_t h = 1469598103934665603ull;
  for (std::uint16_t v : p.raw()) {
    h ^= static_cast<std::size_t>(v & 0xff);
    h *= 1099511628211ull;
    h ^= static_cast<std::size_t>(v >> 8);
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace hallcheck
