#include "hallcheck/pronormal.hpp"

#include <numeric>
#include <stdexcept>

#include "hallcheck/pi_series.hpp"

namespace hallcheck {

namespace {

// runs the inner definition test for each conjugator, stopping at the first
// coset with no witness
PronormalityCertificate run_tests(const PermGroup &g, const PermGroup &h,
                                  const std::vector<Perm> &conjugators,
                                  PronormalMethod method) {
  PronormalityCertificate cert;
  cert.ambient = g;
  cert.subject = h;
  cert.method = method;

  JoinCache joins;
  for (const Perm &rep : conjugators) {
    PermGroup conj = conjugate_subgroup(h, rep);
    const PermGroup &join = joins.join(h, conj);
    std::optional<Perm> witness = are_conjugate_in(join, h, conj);
    if (!witness) {
      cert.verdict = PronormalVerdict::not_pronormal;
      cert.counterexample = rep;
      cert.tests.push_back({rep, join.order(), std::nullopt});
      return cert;
    }
    cert.tests.push_back({rep, join.order(), std::move(witness)});
  }
  cert.verdict = PronormalVerdict::pronormal;
  return cert;
}

} // namespace

PronormalityCertificate is_pronormal_definition(const PermGroup &g,
                                                const PermGroup &h) {
  if (!h.is_subgroup_of(g))
    throw std::invalid_argument("pronormality: subject not in ambient group");
  PermGroup n = normalizer(g, h);
  return run_tests(g, h, right_transversal(g, n),
                   PronormalMethod::definition);
}

PronormalityCertificate is_pronormal_reduced(const PermGroup &g,
                                             const PermGroup &h,
                                             const PermGroup &s) {
  if (!h.is_subgroup_of(g))
    throw std::invalid_argument("pronormality: subject not in ambient group");
  if (!s.is_subgroup_of(h))
    throw std::invalid_argument("reduced decider: S not contained in H");

  PermGroup n_g = normalizer(g, s);
  PermGroup n_h = intersection(n_g, h); // N_H(S)
  return run_tests(g, h, right_transversal(n_g, n_h),
                   PronormalMethod::reduced);
}

std::optional<PronormalityCertificate> is_pronormal_sylow_tower(
    const PermGroup &g, const PermGroup &h) {
  if (!h.is_subgroup_of(g))
    throw std::invalid_argument("pronormality: subject not in ambient group");
  if (std::gcd(h.order(), g.order() / h.order()) != 1)
    throw std::invalid_argument("tower decider requires a Hall subgroup");

  if (!sylow_complexion(h).has_value())
    return std::nullopt;

  PermGroup n = normalizer(g, h);
  PronormalityCertificate cert = run_tests(
      g, h, right_transversal(g, n), PronormalMethod::sylow_tower);
  if (!cert.pronormal())
    throw std::logic_error(
        "Hall subgroup with a Sylow series lacked a conjugating witness");
  return cert;
}

bool verify_certificate(const PronormalityCertificate &cert) {
  for (const PronormalityTest &test : cert.tests) {
    PermGroup conj = conjugate_subgroup(cert.subject, test.conjugator);
    PermGroup joined = join(cert.subject, conj);
    if (joined.order() != test.join_order)
      return false;
    if (cert.pronormal()) {
      if (!test.witness)
        return false;
      if (!joined.contains(*test.witness))
        return false;
      PermGroup moved = conjugate_subgroup(cert.subject, *test.witness);
      if (!moved.same_group_as(conj))
        return false;
    }
  }
  if (!cert.pronormal()) {
    if (!cert.counterexample)
      return false;
    PermGroup conj = conjugate_subgroup(cert.subject, *cert.counterexample);
    PermGroup joined = join(cert.subject, conj);
    if (are_conjugate_in(joined, cert.subject, conj).has_value())
      return false;
  }
  return true;
}

} // namespace hallcheck
