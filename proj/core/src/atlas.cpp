#include "hallcheck/atlas.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hallcheck/finite_field.hpp"
#include "hallcheck/group_ops.hpp"
#include "hallcheck/sylow.hpp"

namespace hallcheck {

namespace {

const std::vector<unsigned> supported_psl2 = {4,  5,  7,  8,  9,  11, 13,
                                              16, 17, 19, 23, 25, 27};
const std::vector<unsigned> supported_psl3 = {2, 3};
const std::vector<unsigned> supported_sl2 = {3, 5, 7, 9};

bool supported(const std::vector<unsigned> &list, unsigned q) {
  return std::find(list.begin(), list.end(), q) != list.end();
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i)
    f *= i;
  return f;
}

[[noreturn]] void unsupported(const std::string &what) {
  throw std::invalid_argument("unsupported group parameter: " + what);
}

PermGroup checked(PermGroup g, std::uint64_t expected, const char *name) {
  if (g.order() != expected)
    throw std::logic_error(std::string("construction of ") + name +
                           " produced the wrong order " +
                           std::to_string(g.order()) + ", expected " +
                           std::to_string(expected));
  return g;
}

PermGroup build_symmetric(unsigned n) {
  if (n < 1 || n > 10)
    unsupported("sym:" + std::to_string(n));
  if (n == 1)
    return PermGroup(1);
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 0);
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}}),
                         Perm::from_cycles(n, {cycle})};
  return checked(PermGroup(n, gens), factorial(n), "symmetric group");
}

PermGroup build_alternating(unsigned n) {
  if (n < 1 || n > 10)
    unsupported("alt:" + std::to_string(n));
  if (n <= 2)
    return PermGroup(n);
  std::vector<Perm> gens;
  for (Point i = 2; i < n; ++i)
    gens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  return checked(PermGroup(n, gens), factorial(n) / 2, "alternating group");
}

PermGroup build_cyclic(unsigned m) {
  if (m < 1 || m > 512)
    unsupported("cyc:" + std::to_string(m));
  if (m == 1)
    return PermGroup(1);
  // one cycle per prime-power factor keeps the degree minimal
  std::vector<std::vector<Point>> cycles;
  unsigned degree = 0;
  for (auto [p, e] : factorize(m).factors) {
    unsigned len = 1;
    for (unsigned i = 0; i < e; ++i)
      len *= static_cast<unsigned>(p);
    std::vector<Point> cycle(len);
    std::iota(cycle.begin(), cycle.end(), degree);
    degree += len;
    cycles.push_back(std::move(cycle));
  }
  return checked(PermGroup(degree, {Perm::from_cycles(degree, cycles)}), m,
                 "cyclic group");
}

PermGroup build_dihedral(unsigned m) {
  if (m < 2 || m > 512 || m % 2 != 0)
    unsupported("dih:" + std::to_string(m));
  if (m == 2)
    return checked(PermGroup(2, {Perm::from_cycles(2, {{0, 1}})}), 2,
                   "dihedral group");
  if (m == 4)
    return checked(PermGroup(4, {Perm::from_cycles(4, {{0, 1}}),
                                 Perm::from_cycles(4, {{2, 3}})}),
                   4, "dihedral group");
  unsigned n = m / 2;
  std::vector<Point> rotation(n);
  for (Point i = 0; i < n; ++i)
    rotation[i] = (i + 1) % n;
  std::vector<Point> reflection(n);
  for (Point i = 0; i < n; ++i)
    reflection[i] = n - 1 - i;
  return checked(PermGroup(n, {Perm(rotation), Perm(reflection)}), m,
                 "dihedral group");
}

PermGroup build_klein() {
  return checked(PermGroup(4, {Perm::parse("(0 1)(2 3)", 4),
                               Perm::parse("(0 2)(1 3)", 4)}),
                 4, "Klein four-group");
}

PermGroup build_m11() {
  Perm a = Perm::parse("(0 1 2 3 4 5 6 7 8 9 10)", 11);
  Perm b = Perm::parse("(2 6 10 7)(3 9 4 5)", 11);
  return checked(PermGroup(11, {a, b}), 7920, "M11");
}

PermGroup build_sym_wr_sym(unsigned a, unsigned b) {
  if (a < 2 || a > 6 || b < 2 || b > 4)
    unsupported("symwr:" + std::to_string(a) + "," + std::to_string(b));
  unsigned degree = a * b;
  std::vector<Perm> gens;
  // Sym_a on the first block; conjugates under the block action fill the base
  {
    std::vector<Point> cycle(a);
    std::iota(cycle.begin(), cycle.end(), 0);
    gens.push_back(Perm::from_cycles(degree, {{0, 1}}));
    gens.push_back(Perm::from_cycles(degree, {cycle}));
  }
  // Sym_b permuting the blocks
  auto block_perm = [&](const Perm &sigma) {
    std::vector<Point> images(degree);
    for (unsigned block = 0; block < b; ++block)
      for (unsigned off = 0; off < a; ++off)
        images[block * a + off] = sigma[block] * a + off;
    return Perm(images);
  };
  PermGroup sym_b = build_symmetric(b);
  for (const Perm &sigma : sym_b.generators())
    gens.push_back(block_perm(sigma));

  std::uint64_t order = 1;
  for (unsigned i = 0; i < b; ++i)
    order *= factorial(a);
  order *= factorial(b);
  return checked(PermGroup(degree, gens), order, "wreath product");
}

// --- matrix actions over small fields ------------------------------------

struct Mat2 {
  unsigned a, b, c, d; // row-major
};

// projective line: point 0 is infinity, point 1+x is the field element x
PermGroup build_psl2(unsigned q, std::uint64_t /*seed*/) {
  if (!supported(supported_psl2, q))
    unsupported("psl2:" + std::to_string(q));
  FiniteField f(q);
  unsigned degree = q + 1;

  auto frac_perm = [&](auto &&map) {
    // map takes (is_infinity, x) and fills (is_infinity, y)
    std::vector<Point> images(degree);
    for (unsigned pt = 0; pt < degree; ++pt) {
      bool inf = pt == 0;
      unsigned x = inf ? 0 : pt - 1;
      auto [inf_out, y] = map(inf, x);
      images[pt] = inf_out ? 0 : 1 + y;
    }
    return Perm(images);
  };

  // x -> x + 1
  Perm translate = frac_perm([&](bool inf, unsigned x) {
    return inf ? std::pair{true, 0u} : std::pair{false, f.add(x, 1)};
  });
  // x -> lambda * x with lambda generating the square classes in PSL
  unsigned g = f.primitive_element();
  unsigned lambda = q % 2 == 0 ? g : f.mul(g, g);
  Perm scale = frac_perm([&](bool inf, unsigned x) {
    return inf ? std::pair{true, 0u} : std::pair{false, f.mul(lambda, x)};
  });
  // x -> -1/x
  Perm invert = frac_perm([&](bool inf, unsigned x) -> std::pair<bool, unsigned> {
    if (inf)
      return {false, 0u};
    if (x == 0)
      return {true, 0u};
    return {false, f.neg(f.inv(x))};
  });

  std::uint64_t order = static_cast<std::uint64_t>(q) * (q - 1) * (q + 1) /
                        std::gcd(2u, q - 1);
  return checked(PermGroup(degree, {translate, scale, invert}), order,
                 "PSL2");
}

// nonzero row vectors of F_q^2; the action is faithful for SL2 and GL2
PermGroup build_linear2(unsigned q, bool general) {
  if (!supported(supported_sl2, q))
    unsupported((general ? "gl2:" : "sl2:") + std::to_string(q));
  FiniteField f(q);
  unsigned degree = q * q - 1;

  auto vec_index = [&](unsigned a, unsigned b) { return a * q + b - 1; };
  auto mat_perm = [&](Mat2 m) {
    std::vector<Point> images(degree);
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        if (a == 0 && b == 0)
          continue;
        unsigned x = f.add(f.mul(a, m.a), f.mul(b, m.c));
        unsigned y = f.add(f.mul(a, m.b), f.mul(b, m.d));
        images[vec_index(a, b)] = vec_index(x, y);
      }
    return Perm(images);
  };

  std::vector<Perm> gens;
  // transvections over a field basis generate SL2
  unsigned g = f.primitive_element();
  unsigned c = 1;
  for (unsigned i = 0; i < f.extension_degree(); ++i) {
    gens.push_back(mat_perm({1, c, 0, 1}));
    gens.push_back(mat_perm({1, 0, c, 1}));
    c = f.mul(c, g);
  }
  std::uint64_t order =
      static_cast<std::uint64_t>(q) * (q - 1) * (q + 1);
  if (general) {
    gens.push_back(mat_perm({g, 0, 0, 1}));
    order *= (q - 1);
  }
  return checked(PermGroup(degree, gens), order, general ? "GL2" : "SL2");
}

// projective plane points: nonzero vectors scaled so the first nonzero
// coordinate is 1
PermGroup build_psl3(unsigned q) {
  if (!supported(supported_psl3, q))
    unsupported("psl3:" + std::to_string(q));
  FiniteField f(q);

  std::vector<std::array<unsigned, 3>> points;
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      for (unsigned c = 0; c < q; ++c) {
        if (a == 0 && b == 0 && c == 0)
          continue;
        unsigned lead = a != 0 ? a : (b != 0 ? b : c);
        if (lead == 1)
          points.push_back({a, b, c});
      }
  unsigned degree = static_cast<unsigned>(points.size());

  auto point_index = [&](std::array<unsigned, 3> v) {
    unsigned lead = v[0] != 0 ? v[0] : (v[1] != 0 ? v[1] : v[2]);
    unsigned s = f.inv(lead);
    for (unsigned &x : v)
      x = f.mul(x, s);
    auto it = std::find(points.begin(), points.end(), v);
    return static_cast<Point>(it - points.begin());
  };

  auto transvection = [&](unsigned i, unsigned j) {
    // identity plus a 1 in entry (i, j)
    std::vector<Point> images(degree);
    for (unsigned idx = 0; idx < degree; ++idx) {
      std::array<unsigned, 3> v = points[idx];
      std::array<unsigned, 3> w = v;
      w[j] = f.add(w[j], v[i]);
      images[idx] = point_index(w);
    }
    return Perm(images);
  };

  std::vector<Perm> gens;
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j)
      if (i != j)
        gens.push_back(transvection(i, j));

  std::uint64_t q3 = static_cast<std::uint64_t>(q) * q * q;
  std::uint64_t order = q3 * (q3 - 1) * (static_cast<std::uint64_t>(q) * q - 1);
  order /= std::gcd<std::uint64_t>(3, q - 1);
  return checked(PermGroup(degree, gens), order, "PSL3");
}

} // namespace

GroupSpec GroupSpec::parse(const std::string &text) {
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);

  auto parse_one = [&](Family fam) {
    if (args.empty())
      throw std::invalid_argument("group spec needs a parameter: " + text);
    return GroupSpec{fam, static_cast<unsigned>(std::stoul(args)), 1};
  };

  if (name == "sym")
    return parse_one(Family::symmetric);
  if (name == "alt")
    return parse_one(Family::alternating);
  if (name == "dih")
    return parse_one(Family::dihedral);
  if (name == "cyc")
    return parse_one(Family::cyclic);
  if (name == "psl2")
    return parse_one(Family::psl2);
  if (name == "psl3")
    return parse_one(Family::psl3);
  if (name == "sl2")
    return parse_one(Family::sl2);
  if (name == "gl2")
    return parse_one(Family::gl2);
  if (name == "m11") {
    if (!args.empty())
      throw std::invalid_argument("m11 takes no parameter");
    return GroupSpec{Family::m11, 11, 1};
  }
  if (name == "klein") {
    if (!args.empty())
      throw std::invalid_argument("klein takes no parameter");
    return GroupSpec{Family::klein, 4, 1};
  }
  if (name == "symwr") {
    auto comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("symwr needs two parameters: " + text);
    return GroupSpec{Family::sym_wr_sym,
                     static_cast<unsigned>(std::stoul(args.substr(0, comma))),
                     static_cast<unsigned>(std::stoul(args.substr(comma + 1)))};
  }
  throw std::invalid_argument("unknown group spec: " + text);
}

std::string GroupSpec::str() const {
  std::ostringstream out;
  switch (family) {
  case Family::symmetric:
    out << "sym:" << a;
    break;
  case Family::alternating:
    out << "alt:" << a;
    break;
  case Family::dihedral:
    out << "dih:" << a;
    break;
  case Family::cyclic:
    out << "cyc:" << a;
    break;
  case Family::psl2:
    out << "psl2:" << a;
    break;
  case Family::psl3:
    out << "psl3:" << a;
    break;
  case Family::sl2:
    out << "sl2:" << a;
    break;
  case Family::gl2:
    out << "gl2:" << a;
    break;
  case Family::m11:
    out << "m11";
    break;
  case Family::klein:
    out << "klein";
    break;
  case Family::sym_wr_sym:
    out << "symwr:" << a << "," << b;
    break;
  }
  return out.str();
}

std::uint64_t expected_order(const GroupSpec &spec) {
  switch (spec.family) {
  case Family::symmetric:
    return factorial(spec.a);
  case Family::alternating:
    return spec.a <= 2 ? 1 : factorial(spec.a) / 2;
  case Family::dihedral:
    return spec.a;
  case Family::cyclic:
    return spec.a;
  case Family::psl2: {
    std::uint64_t q = spec.a;
    return q * (q - 1) * (q + 1) / std::gcd<std::uint64_t>(2, q - 1);
  }
  case Family::psl3: {
    std::uint64_t q = spec.a;
    std::uint64_t q3 = q * q * q;
    return q3 * (q3 - 1) * (q * q - 1) / std::gcd<std::uint64_t>(3, q - 1);
  }
  case Family::sl2: {
    std::uint64_t q = spec.a;
    return q * (q - 1) * (q + 1);
  }
  case Family::gl2: {
    std::uint64_t q = spec.a;
    return q * (q - 1) * (q - 1) * (q + 1);
  }
  case Family::m11:
    return 7920;
  case Family::klein:
    return 4;
  case Family::sym_wr_sym: {
    std::uint64_t order = factorial(spec.b);
    for (unsigned i = 0; i < spec.b; ++i)
      order *= factorial(spec.a);
    return order;
  }
  }
  throw std::logic_error("unreachable");
}

PermGroup build(const GroupSpec &spec, std::uint64_t seed) {
  switch (spec.family) {
  case Family::symmetric:
    return build_symmetric(spec.a);
  case Family::alternating:
    return build_alternating(spec.a);
  case Family::dihedral:
    return build_dihedral(spec.a);
  case Family::cyclic:
    return build_cyclic(spec.a);
  case Family::psl2:
    return build_psl2(spec.a, seed);
  case Family::psl3:
    return build_psl3(spec.a);
  case Family::sl2:
    return build_linear2(spec.a, false);
  case Family::gl2:
    return build_linear2(spec.a, true);
  case Family::m11:
    return build_m11();
  case Family::klein:
    return build_klein();
  case Family::sym_wr_sym:
    return build_sym_wr_sym(spec.a, spec.b);
  }
  throw std::logic_error("unreachable");
}

int epsilon(unsigned q) {
  if (q % 2 == 0)
    throw std::invalid_argument("epsilon is defined for odd q only");
  return (q - 1) % 4 == 0 ? 1 : -1;
}

std::string source_name(ExpectationSource source) {
  switch (source) {
  case ExpectationSource::table1:
    return "table1";
  case ExpectationSource::table2_m11:
    return "table2-m11";
  case ExpectationSource::table3:
    return "table3";
  case ExpectationSource::lemma12:
    return "lemma12";
  }
  throw std::logic_error("unreachable");
}

namespace {

ClassShape shape_from_model(const std::string &label, const GroupSpec &model,
                            std::optional<bool> maximal) {
  ClassShape shape;
  shape.label = label;
  PermGroup g = build(model);
  shape.order = g.order();
  shape.fingerprint = fingerprint(g);
  shape.maximal = maximal;
  return shape;
}

ClassShape shape_sym_product(std::optional<bool> maximal) {
  ClassShape shape;
  shape.label = "Sym_3 x Sym_4";
  PermGroup g = direct_product(build(GroupSpec{Family::symmetric, 3, 1}),
                               build(GroupSpec{Family::symmetric, 4, 1}));
  shape.order = g.order();
  shape.fingerprint = fingerprint(g);
  shape.maximal = maximal;
  return shape;
}

std::vector<Expectation> table1_expectations(const GroupSpec &spec,
                                             const PiSet &pi) {
  if (spec.family != Family::symmetric)
    throw std::invalid_argument("table1 covers symmetric groups only");
  unsigned n = spec.a;
  std::uint64_t order = expected_order(spec);
  PiSet relevant = pi.intersect(prime_set(order));
  if (!relevant.contains(2) || !relevant.contains(3))
    throw std::invalid_argument(
        "table1 requires 2 and 3 in pi (got pi=" + pi.str() + ")");

  Expectation exp;
  exp.source = ExpectationSource::table1;
  exp.group = spec;
  exp.pi = pi;
  exp.hall_order = pi_part(order, pi);
  exp.class_count = 1;

  if (is_prime(n) && relevant == prime_set(factorial(n - 1))) {
    exp.class_shapes.push_back(shape_from_model(
        "Sym_" + std::to_string(n - 1),
        GroupSpec{Family::symmetric, n - 1, 1}, true));
    return {exp};
  }
  if (n == 7 && relevant == PiSet({2, 3})) {
    exp.class_shapes.push_back(shape_sym_product(true));
    return {exp};
  }
  if (n == 8 && relevant == PiSet({2, 3})) {
    exp.class_shapes.push_back(shape_from_model(
        "Sym_4 wr Sym_2", GroupSpec{Family::sym_wr_sym, 4, 2}, true));
    return {exp};
  }
  // covered with 2,3 in pi: every other proper case has no Hall subgroup
  if (relevant == prime_set(order)) {
    exp.class_shapes.push_back(
        shape_from_model("Sym_" + std::to_string(n), spec, std::nullopt));
    return {exp};
  }
  return {};
}

std::vector<Expectation> table2_expectations(const GroupSpec &spec,
                                             const PiSet &pi) {
  if (spec.family != Family::m11)
    throw std::invalid_argument("table2-m11 covers m11 only");
  PiSet relevant = pi.intersect(prime_set(7920));

  Expectation exp;
  exp.source = ExpectationSource::table2_m11;
  exp.group = spec;
  exp.pi = pi;
  exp.hall_order = pi_part(7920, pi);
  exp.class_count = 1;

  if (relevant == PiSet({2, 3})) {
    // 3^2 : Q8 . 2 is exactly the Sylow-3 normalizer
    ClassShape shape;
    shape.label = "3^2:Q8.2";
    shape.order = 144;
    shape.solvable = true;
    exp.class_shapes.push_back(shape);
    exp.equals_normalizer_of_sylow = 3;
    return {exp};
  }
  if (relevant == PiSet({2, 3, 5})) {
    // Alt_6 . 2: the derived subgroup is Alt_6 and the quotient is cyclic
    ClassShape shape;
    shape.label = "Alt_6.2";
    shape.order = 720;
    shape.solvable = false;
    shape.derived_order = 360;
    shape.abelianization_order = 2;
    exp.class_shapes.push_back(shape);
    return {exp};
  }
  if (relevant.contains(2) && relevant.contains(3) &&
      relevant != prime_set(7920))
    return {}; // covered: no other proper Hall subgroup with 2,3 in pi
  throw std::invalid_argument("table2-m11: uncovered pi " + pi.str());
}

std::vector<Expectation> table3_expectations(const GroupSpec &spec,
                                             const PiSet &pi) {
  if (spec.family != Family::psl2)
    throw std::invalid_argument("table3 covers psl2 only");
  unsigned q = spec.a;
  if (q % 2 == 0)
    throw std::invalid_argument("table3 requires odd q");
  unsigned p = prime_set(q).primes().front();
  std::uint64_t order = expected_order(spec);
  PiSet relevant = pi.intersect(prime_set(order));
  if (!relevant.contains(2) || !relevant.contains(3))
    throw std::invalid_argument("table3 requires 2 and 3 in pi");
  if (pi.contains(p))
    throw std::invalid_argument(
        "table3 requires the defining characteristic outside pi");

  std::uint64_t hall_order = pi_part(order, pi);
  int eps = epsilon(q);
  std::uint64_t q_minus_eps = eps > 0 ? q - 1 : q + 1;
  std::uint64_t q2_minus_1 = static_cast<std::uint64_t>(q) * q - 1;

  std::vector<ClassShape> shapes;
  if (relevant.subset_of(prime_set(q_minus_eps))) {
    unsigned hall_in_dihedral = static_cast<unsigned>(
        pi_part(q_minus_eps, pi));
    shapes.push_back(shape_from_model(
        "D_" + std::to_string(q_minus_eps) + " Hall",
        GroupSpec{Family::dihedral, hall_in_dihedral, 1}, std::nullopt));
  }
  if (relevant == PiSet({2, 3}) && pi_part(q2_minus_1, PiSet({2, 3})) == 24)
    shapes.push_back(shape_from_model(
        "Alt_4", GroupSpec{Family::alternating, 4, 1}, std::nullopt));
  if (relevant == PiSet({2, 3}) && pi_part(q2_minus_1, PiSet({2, 3})) == 48)
    shapes.push_back(shape_from_model(
        "Sym_4", GroupSpec{Family::symmetric, 4, 1}, std::nullopt));
  if (relevant == PiSet({2, 3, 5}) &&
      pi_part(q2_minus_1, PiSet({2, 3, 5})) == 120)
    shapes.push_back(shape_from_model(
        "Alt_5", GroupSpec{Family::alternating, 5, 1}, std::nullopt));

  if (shapes.empty())
    return {}; // covered: G is not an E_pi group

  Expectation exp;
  exp.source = ExpectationSource::table3;
  exp.group = spec;
  exp.pi = pi;
  exp.hall_order = hall_order;
  exp.class_shapes = std::move(shapes);
  for (const ClassShape &shape : exp.class_shapes)
    if (shape.order != hall_order)
      throw std::logic_error("table3 shape order disagrees with pi-part");
  return {exp};
}

std::vector<Expectation> lemma12_expectations(const GroupSpec &spec) {
  Expectation exp;
  exp.source = ExpectationSource::lemma12;
  exp.group = spec;
  exp.pi = PiSet({2});
  exp.hall_order = pi_part(expected_order(spec), exp.pi);
  exp.check_sylow2_normalizer = true;

  bool self =
      (spec.family == Family::alternating &&
       (spec.a == 6 || spec.a == 7 || spec.a == 8)) ||
      (spec.family == Family::psl2 && (spec.a == 9 || spec.a == 17));
  bool alt4_shape = spec.family == Family::psl2 &&
                    (spec.a == 5 || spec.a == 11 || spec.a == 13 ||
                     spec.a == 19);
  if (self) {
    exp.normalizer_is_sylow = true;
    return {exp};
  }
  if (alt4_shape) {
    exp.normalizer_is_sylow = false;
    exp.normalizer_fingerprint =
        fingerprint(build(GroupSpec{Family::alternating, 4, 1}));
    return {exp};
  }
  throw std::invalid_argument("lemma12: uncovered group " + spec.str());
}

} // namespace

std::vector<Expectation> expectations(ExpectationSource source,
                                      const GroupSpec &spec, const PiSet &pi) {
  switch (source) {
  case ExpectationSource::table1:
    return table1_expectations(spec, pi);
  case ExpectationSource::table2_m11:
    return table2_expectations(spec, pi);
  case ExpectationSource::table3:
    return table3_expectations(spec, pi);
  case ExpectationSource::lemma12:
    return lemma12_expectations(spec);
  }
  throw std::logic_error("unreachable");
}

bool expectation_covered(ExpectationSource source, const GroupSpec &spec,
                         const PiSet &pi) {
  try {
    expectations(source, spec, pi);
    return true;
  } catch (const std::invalid_argument &) {
    return false;
  }
}

std::vector<GroupSpec> simple_group_catalog() {
  std::vector<GroupSpec> out;
  for (unsigned n = 5; n <= 8; ++n)
    out.push_back({Family::alternating, n, 1});
  for (unsigned q : supported_psl2)
    out.push_back({Family::psl2, q, 1});
  for (unsigned q : supported_psl3)
    out.push_back({Family::psl3, q, 1});
  out.push_back({Family::m11, 11, 1});
  return out;
}

std::vector<GroupSpec> standard_catalog() {
  std::vector<GroupSpec> out;
  for (unsigned n = 3; n <= 8; ++n)
    out.push_back({Family::symmetric, n, 1});
  for (unsigned n = 3; n <= 8; ++n)
    out.push_back({Family::alternating, n, 1});
  for (unsigned m : {2u, 3u, 4u, 6u, 8u, 12u, 18u, 24u, 36u, 60u, 120u, 512u})
    out.push_back({Family::cyclic, m, 1});
  for (unsigned m : {2u, 4u, 6u, 8u, 12u, 16u, 20u, 24u, 48u, 120u, 512u})
    out.push_back({Family::dihedral, m, 1});
  out.push_back({Family::klein, 4, 1});
  for (unsigned q : supported_sl2) {
    out.push_back({Family::sl2, q, 1});
    out.push_back({Family::gl2, q, 1});
  }
  for (unsigned q : supported_psl2)
    out.push_back({Family::psl2, q, 1});
  for (unsigned q : supported_psl3)
    out.push_back({Family::psl3, q, 1});
  out.push_back({Family::m11, 11, 1});
  out.push_back({Family::sym_wr_sym, 3, 2});
  out.push_back({Family::sym_wr_sym, 4, 2});
  out.push_back({Family::sym_wr_sym, 3, 3});
  return out;
}

} // namespace hallcheck
