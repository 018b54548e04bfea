#include "hallcheck/lemma_suite.hpp"

#include <numeric>
#include <sstream>

#include "hallcheck/atlas.hpp"
#include "hallcheck/group_ops.hpp"
#include "hallcheck/hall.hpp"
#include "hallcheck/homomorphism.hpp"
#include "hallcheck/pi_series.hpp"
#include "hallcheck/pronormal.hpp"
#include "hallcheck/sylow.hpp"

namespace hallcheck {

namespace {

// small solvable-ish building blocks for product instances
std::vector<GroupSpec> block_specs() {
  return {
      GroupSpec::parse("sym:3"),  GroupSpec::parse("sym:4"),
      GroupSpec::parse("alt:4"),  GroupSpec::parse("dih:12"),
      GroupSpec::parse("cyc:6"),  GroupSpec::parse("sl2:3"),
      GroupSpec::parse("dih:8"),  GroupSpec::parse("cyc:4"),
  };
}

std::vector<PiSet> small_pi_sets() {
  return {PiSet({2}), PiSet({3}), PiSet({2, 3}), PiSet({2, 5}),
          PiSet({3, 5})};
}

// nontrivial proper normal subgroups worth instantiating lemmas on
std::vector<std::pair<std::string, PermGroup>> normal_choices(
    const PermGroup &g) {
  std::vector<std::pair<std::string, PermGroup>> out;
  auto push = [&](const std::string &name, PermGroup n) {
    if (n.order() == 1 || n.order() == g.order())
      return;
    for (const auto &[existing_name, existing] : out)
      if (existing.same_group_as(n))
        return;
    out.emplace_back(name, std::move(n));
  };
  push("derived", derived_subgroup(g));
  push("center", center(g));
  push("radical", solvable_radical(g));
  push("O_2", pi_core(g, PiSet({2})));
  push("O_3", pi_core(g, PiSet({3})));
  return out;
}

PermGroup product_of(const GroupSpec &a, const GroupSpec &b) {
  return direct_product(build(a), build(b));
}

std::string describe(const std::string &what, const PermGroup &g) {
  std::ostringstream out;
  out << what << " (order " << g.order() << ")";
  return out.str();
}

} // namespace

SuiteReport lemma_suite_hall_restriction(std::uint64_t seed) {
  SuiteReport report;
  report.name = "hall-restriction";
  HallOptions opts;
  opts.seed = seed;
  opts.mode = SearchMode::exhaustive;

  auto blocks = block_specs();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i; j < blocks.size(); ++j) {
      if (report.instances.size() >= 40)
        break;
      PermGroup g = product_of(blocks[i], blocks[j]);
      auto normals = normal_choices(g);
      for (const PiSet &pi : small_pi_sets()) {
        HallClassification cls = hall_subgroups(g, pi, opts);
        if (!cls.satisfies_e || cls.class_reps.empty())
          continue;
        const PermGroup &h = cls.class_reps.front();
        for (const auto &[name, a] : normals) {
          SuiteInstance instance;
          std::ostringstream desc;
          desc << blocks[i].str() << " x " << blocks[j].str() << ", pi={"
               << pi.str() << "}, A=" << name;
          instance.description = desc.str();

          PermGroup h_cap_a = intersection(h, a);
          bool inter_ok =
              h_cap_a.order() == pi_part(a.order(), pi);
          auto [quotient, hom] = quotient_by_normal(g, a);
          PermGroup image = hom.image_of_subgroup(h);
          bool image_ok = image.order() == pi_part(quotient.order(), pi);

          instance.passed = inter_ok && image_ok;
          std::ostringstream note;
          note << "|H cap A|=" << h_cap_a.order()
               << " |HA/A|=" << image.order();
          instance.note = note.str();
          report.instances.push_back(std::move(instance));
          if (report.instances.size() >= 40)
            break;
        }
        if (report.instances.size() >= 40)
          break;
      }
    }
  }
  return report;
}

SuiteReport lemma_suite_separable_d(std::uint64_t seed) {
  SuiteReport report;
  report.name = "separable-d";
  HallOptions opts;
  opts.seed = seed;
  opts.mode = SearchMode::exhaustive;

  std::vector<PermGroup> groups;
  std::vector<std::string> names;
  for (const char *spec :
       {"sym:3", "sym:4", "alt:4", "dih:12", "dih:16", "dih:24", "cyc:12",
        "cyc:36", "sl2:3", "gl2:3", "klein", "symwr:3,2"}) {
    groups.push_back(build(GroupSpec::parse(spec)));
    names.push_back(spec);
  }
  groups.push_back(product_of(GroupSpec::parse("sym:3"),
                              GroupSpec::parse("sym:4")));
  names.push_back("sym:3 x sym:4");
  groups.push_back(product_of(GroupSpec::parse("sl2:3"),
                              GroupSpec::parse("cyc:4")));
  names.push_back("sl2:3 x cyc:4");

  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (const PiSet &pi : small_pi_sets()) {
      if (report.instances.size() >= 48)
        break;
      PiSeparability sep = is_pi_separable(groups[i], pi);
      if (!sep.separable)
        continue;
      SuiteInstance instance;
      instance.description =
          names[i] + ", pi={" + pi.str() + "}, series length " +
          std::to_string(sep.series.size());
      HallClassification cls = classify_pi_properties(groups[i], pi, opts);
      instance.passed = cls.satisfies_d && cls.d_mode == DCheckMode::exact;
      instance.note = std::string("D_pi=") + (cls.satisfies_d ? "true" : "false");
      report.instances.push_back(std::move(instance));
    }
  }
  return report;
}

SuiteReport lemma_suite_image(std::uint64_t seed) {
  SuiteReport report;
  report.name = "image";
  (void)seed;

  auto blocks = block_specs();
  for (std::size_t i = 0; i < blocks.size() && report.instances.size() < 32;
       ++i) {
    for (std::size_t j = i; j < blocks.size(); ++j) {
      PermGroup g = product_of(blocks[i], blocks[j]);
      auto normals = normal_choices(g);
      if (normals.empty())
        continue;
      for (std::uint64_t p : prime_set(g.order()).primes()) {
        PermGroup h = sylow(g, p, seed);
        PronormalityCertificate before = is_pronormal_definition(g, h);
        if (!before.pronormal())
          continue; // Sylow subgroups are pronormal; treat as hypothesis
        for (const auto &[name, a] : normals) {
          if (report.instances.size() >= 32)
            break;
          SuiteInstance instance;
          instance.description = blocks[i].str() + " x " + blocks[j].str() +
                                 ", H=Syl_" + std::to_string(p) +
                                 ", A=" + name;
          auto [quotient, hom] = quotient_by_normal(g, a);
          PermGroup image = hom.image_of_subgroup(h);
          PronormalityCertificate after =
              is_pronormal_definition(quotient, image);
          instance.passed = after.pronormal();
          instance.note = describe("image", image);
          report.instances.push_back(std::move(instance));
        }
        if (report.instances.size() >= 32)
          break;
      }
      if (report.instances.size() >= 32)
        break;
    }
  }
  return report;
}

SuiteReport lemma_suite_commuting_factors(std::uint64_t seed) {
  SuiteReport report;
  report.name = "commuting-factors";

  // direct products
  std::vector<std::pair<GroupSpec, GroupSpec>> pairs = {
      {GroupSpec::parse("sym:3"), GroupSpec::parse("sym:3")},
      {GroupSpec::parse("sym:3"), GroupSpec::parse("sym:4")},
      {GroupSpec::parse("sym:4"), GroupSpec::parse("sym:4")},
      {GroupSpec::parse("alt:4"), GroupSpec::parse("dih:12")},
      {GroupSpec::parse("sl2:3"), GroupSpec::parse("sym:3")},
      {GroupSpec::parse("dih:8"), GroupSpec::parse("dih:12")},
      {GroupSpec::parse("alt:5"), GroupSpec::parse("sym:3")},
  };
  for (const auto &[sa, sb] : pairs) {
    PermGroup a = build(sa);
    PermGroup b = build(sb);
    PermGroup g = direct_product(a, b);
    for (std::uint64_t p : {2ull, 3ull}) {
      if (report.instances.size() >= 40)
        break;
      PermGroup ha = sylow(a, p, seed);
      PermGroup hb = sylow(b, p, seed + 1);
      PermGroup h = subgroup_closure(
          g.degree(), {},
          [&] {
            std::vector<Perm> gens;
            for (const Perm &x : ha.generators())
              gens.push_back(x.extended(g.degree()));
            for (const Perm &x : hb.generators())
              gens.push_back(x.shifted(a.degree(), g.degree()));
            return gens;
          }());
      SuiteInstance instance;
      instance.description = sa.str() + " x " + sb.str() + ", H=<Syl_" +
                             std::to_string(p) + ", Syl_" +
                             std::to_string(p) + ">";
      PronormalityCertificate cert = is_pronormal_definition(g, h);
      instance.passed = cert.pronormal();
      instance.note = describe("join", h);
      report.instances.push_back(std::move(instance));
    }
  }

  // central products, where the factors commute but intersect
  std::vector<std::pair<GroupSpec, GroupSpec>> central_pairs = {
      {GroupSpec::parse("cyc:4"), GroupSpec::parse("cyc:4")},
      {GroupSpec::parse("dih:8"), GroupSpec::parse("dih:8")},
      {GroupSpec::parse("dih:8"), GroupSpec::parse("cyc:4")},
      {GroupSpec::parse("sl2:3"), GroupSpec::parse("cyc:4")},
      {GroupSpec::parse("sl2:3"), GroupSpec::parse("sl2:3")},
  };
  for (const auto &[sa, sb] : central_pairs) {
    if (report.instances.size() >= 48)
      break;
    PermGroup a = build(sa);
    PermGroup b = build(sb);
    PermGroup prod = direct_product(a, b);
    auto cp = central_product_mod2(a, b);
    if (!cp)
      continue;
    auto [quotient, hom] = quotient_by_normal(
        prod, [&] {
          PermGroup z = center(prod);
          for (const Perm &x : z.elements()) {
            if (x.order() != 2)
              continue;
            // anti-diagonal: nontrivial in both factors
            bool moves_left = false, moves_right = false;
            for (Point pt = 0; pt < a.degree(); ++pt)
              if (x[pt] != pt)
                moves_left = true;
            for (Point pt = a.degree(); pt < prod.degree(); ++pt)
              if (x[pt] != pt)
                moves_right = true;
            if (moves_left && moves_right)
              return PermGroup(prod.degree(), {x});
          }
          throw std::invalid_argument("no gluing involution");
        }());
    (void)cp;
    for (std::uint64_t p : {2ull, 3ull}) {
      if (prod.order() % p != 0)
        continue;
      PermGroup hp = sylow(prod, p, seed);
      // factor images inside the central product
      PermGroup image_factor_a = hom.image_of_subgroup(
          subgroup_closure(prod.degree(), {},
                           [&] {
                             std::vector<Perm> gens;
                             for (const Perm &x : sylow(a, p, seed).generators())
                               gens.push_back(x.extended(prod.degree()));
                             return gens;
                           }()));
      PermGroup image_factor_b = hom.image_of_subgroup(
          subgroup_closure(prod.degree(), {},
                           [&] {
                             std::vector<Perm> gens;
                             for (const Perm &x : sylow(b, p, seed).generators())
                               gens.push_back(
                                   x.shifted(a.degree(), prod.degree()));
                             return gens;
                           }()));
      PermGroup h = join(image_factor_a, image_factor_b);
      SuiteInstance instance;
      instance.description = sa.str() + " o " + sb.str() +
                             " (central), H=<Syl_" + std::to_string(p) +
                             " images>";
      PronormalityCertificate cert = is_pronormal_definition(quotient, h);
      instance.passed = cert.pronormal();
      instance.note = describe("join", h);
      report.instances.push_back(std::move(instance));
      (void)hp;
    }
  }
  return report;
}

SuiteReport lemma_suite_ha_lift(std::uint64_t seed) {
  SuiteReport report;
  report.name = "ha-lift";
  HallOptions opts;
  opts.seed = seed;
  opts.mode = SearchMode::exhaustive;

  std::vector<PermGroup> groups;
  std::vector<std::string> names;
  for (const char *spec : {"sym:4", "sym:3", "sl2:3", "gl2:3", "dih:24",
                           "symwr:3,2", "alt:4", "dih:12"}) {
    groups.push_back(build(GroupSpec::parse(spec)));
    names.push_back(spec);
  }
  groups.push_back(product_of(GroupSpec::parse("sym:3"),
                              GroupSpec::parse("sym:3")));
  names.push_back("sym:3 x sym:3");
  groups.push_back(product_of(GroupSpec::parse("sym:4"),
                              GroupSpec::parse("sym:3")));
  names.push_back("sym:4 x sym:3");

  for (std::size_t i = 0; i < groups.size(); ++i) {
    const PermGroup &g = groups[i];
    auto normals = normal_choices(g);
    for (const PiSet &pi : small_pi_sets()) {
      if (report.instances.size() >= 40)
        break;
      HallClassification cls = hall_subgroups(g, pi, opts);
      if (!cls.satisfies_e || cls.class_reps.empty())
        continue;
      const PermGroup &h = cls.class_reps.front();
      if (h.order() == g.order() || h.order() == 1)
        continue;
      for (const auto &[name, a] : normals) {
        PermGroup h_cap_a = intersection(h, a);
        // hypothesis: G = HA
        if (h.order() / h_cap_a.order() * a.order() != g.order())
          continue;
        PronormalityCertificate inner = is_pronormal_definition(a, h_cap_a);
        if (!inner.pronormal())
          continue;
        SuiteInstance instance;
        instance.description = names[i] + " = H*A, pi={" + pi.str() +
                               "}, A=" + name;
        PronormalityCertificate cert = is_pronormal_definition(g, h);
        instance.passed = cert.pronormal();
        instance.note = describe("H", h) + ", " + describe("A", a);
        report.instances.push_back(std::move(instance));
        if (report.instances.size() >= 40)
          break;
      }
    }
  }
  return report;
}

SuiteReport lemma_suite_solvable_lift(std::uint64_t seed) {
  SuiteReport report;
  report.name = "solvable-lift";
  HallOptions opts;
  opts.seed = seed;
  opts.mode = SearchMode::exhaustive;

  auto blocks = block_specs();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i; j < blocks.size(); ++j) {
      if (report.instances.size() >= 32)
        break;
      PermGroup g = product_of(blocks[i], blocks[j]);
      for (const auto &[name, a] : normal_choices(g)) {
        if (!is_solvable(a))
          continue;
        for (const PiSet &pi : small_pi_sets()) {
          if (report.instances.size() >= 32)
            break;
          HallClassification cls = hall_subgroups(g, pi, opts);
          if (!cls.satisfies_e || cls.class_reps.empty())
            continue;
          const PermGroup &h = cls.class_reps.front();
          auto [quotient, hom] = quotient_by_normal(g, a);
          PermGroup image = hom.image_of_subgroup(h);

          SuiteInstance instance;
          instance.description = blocks[i].str() + " x " + blocks[j].str() +
                                 ", pi={" + pi.str() + "}, A=" + name +
                                 " (solvable)";
          bool below = is_pronormal_definition(g, h).pronormal();
          bool above = is_pronormal_definition(quotient, image).pronormal();
          instance.passed = below == above;
          std::ostringstream note;
          note << "H prn G: " << (below ? "true" : "false")
               << ", image prn quotient: " << (above ? "true" : "false");
          instance.note = note.str();
          report.instances.push_back(std::move(instance));
        }
      }
    }
  }
  return report;
}

SuiteReport lemma_suite_sylow_tower(std::uint64_t seed) {
  SuiteReport report;
  report.name = "sylow-tower";
  HallOptions opts;
  opts.seed = seed;
  opts.mode = SearchMode::exhaustive;

  std::vector<GroupSpec> specs = {
      GroupSpec::parse("sym:4"),   GroupSpec::parse("sym:5"),
      GroupSpec::parse("alt:5"),   GroupSpec::parse("psl2:7"),
      GroupSpec::parse("psl2:11"), GroupSpec::parse("psl2:13"),
      GroupSpec::parse("dih:24"),  GroupSpec::parse("symwr:3,2"),
      GroupSpec::parse("sl2:3"),   GroupSpec::parse("gl2:3"),
      GroupSpec::parse("dih:120"),
  };
  for (const GroupSpec &spec : specs) {
    PermGroup g = build(spec);
    std::vector<PiSet> pis;
    PiSet all = prime_set(g.order());
    for (std::size_t i = 0; i < all.primes().size(); ++i)
      for (std::size_t j = i; j < all.primes().size(); ++j) {
        std::vector<std::uint64_t> primes{all.primes()[i]};
        if (j != i)
          primes.push_back(all.primes()[j]);
        pis.push_back(PiSet(primes));
      }
    for (const PiSet &pi : pis) {
      if (report.instances.size() >= 40)
        break;
      if (g.order() > opts.exhaustive_bound)
        continue;
      HallClassification cls = hall_subgroups(g, pi, opts);
      for (const PermGroup &h : cls.class_reps) {
        if (h.order() == 1 || h.order() == g.order())
          continue;
        auto tower = is_pronormal_sylow_tower(g, h);
        if (!tower)
          continue;
        SuiteInstance instance;
        instance.description = spec.str() + ", pi={" + pi.str() +
                               "}, Hall order " + std::to_string(h.order());
        bool definition = is_pronormal_definition(g, h).pronormal();
        instance.passed = tower->pronormal() && definition &&
                          verify_certificate(*tower);
        instance.note =
            "witnesses " + std::to_string(tower->tests.size());
        report.instances.push_back(std::move(instance));
        if (report.instances.size() >= 40)
          break;
      }
    }
  }
  return report;
}

std::vector<SuiteReport> all_lemma_suites(std::uint64_t seed) {
  return {
      lemma_suite_hall_restriction(seed), lemma_suite_separable_d(seed),
      lemma_suite_image(seed),            lemma_suite_commuting_factors(seed),
      lemma_suite_ha_lift(seed),          lemma_suite_solvable_lift(seed),
      lemma_suite_sylow_tower(seed),
  };
}

} // namespace hallcheck
