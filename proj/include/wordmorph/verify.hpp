#pragma once

#include <string>
#include <vector>

#include "wordmorph/fixedpoint.hpp"
#include "wordmorph/nonuniformize.hpp"
#include "wordmorph/periodicity.hpp"

namespace wordmorph {

struct Check {
  std::string name;
  bool passed = false;
  std::string witness;  // empty on pass; finite witness otherwise
};

/// Reports are data: the CLI renders them, tests assert on them.
struct VerificationReport {
  std::vector<Check> checks;

  bool overall() const {
    for (const Check& c : checks)
      if (!c.passed) return false;
    return true;
  }

  void pass(std::string name) { checks.push_back({std::move(name), true, {}}); }
  void fail_with(std::string name, std::string witness) {
    checks.push_back({std::move(name), false, std::move(witness)});
  }
  void add(std::string name, bool ok, std::string witness) {
    checks.push_back({std::move(name), ok, ok ? std::string{} : std::move(witness)});
  }
};

/// Pass iff both presentations agree on their first n coded letters; on
/// failure the witness is the first disagreeing index.
inline VerificationReport verify_prefix_equal(const MorphicPresentation& p1,
                                              const MorphicPresentation& p2,
                                              std::size_t n) {
  VerificationReport report;
  Word a = p1.prefix(n);
  Word b = p2.prefix(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a[i] == b[i])) {
      report.fail_with("prefix-equal",
                       "index " + std::to_string(i) + ": '" + a[i].name() + "' vs '" +
                           b[i].name() + "'");
      return report;
    }
  }
  report.pass("prefix-equal");
  return report;
}

/// Checks D(gamma_prime(P_k)) = gamma(D(P_k)) for k = 1..kmax, where P_k is
/// the shortest fixed-point prefix ending at the k-th occurrence of c_prime,
/// plus the per-letter identities on the shared letters.
inline VerificationReport verify_commutation(const Morphism& gamma,
                                             const Morphism& gamma_prime,
                                             const Coding& d, Symbol start,
                                             std::size_t kmax, Symbol c_prime,
                                             std::size_t letter_budget = std::size_t{1} << 20) {
  VerificationReport report;
  for (Symbol x : gamma.domain()) {
    Word lhs = d.apply(gamma_prime.image(x));
    Word rhs = gamma.image(d.letter_image(x));
    report.add("letter-image " + x.name(), lhs == rhs,
               "D(gamma'(" + x.name() + ")) != gamma(" + x.name() + ")");
  }

  FixedPointStream stream(gamma_prime, start);
  std::vector<std::size_t> ends;
  {
    std::size_t request = 1024;
    std::size_t scanned = 0;
    while (ends.size() < kmax) {
      if (request > letter_budget)
        fail(errc::insufficient_occurrences,
             "fewer than " + std::to_string(kmax) + " occurrences of '" + c_prime.name() +
                 "' within the generation budget");
      const Word& prefix = stream.ensure(request);
      for (; scanned < prefix.size() && ends.size() < kmax; ++scanned)
        if (prefix[scanned] == c_prime) ends.push_back(scanned);
      request *= 2;
    }
  }

  for (std::size_t k = 1; k <= kmax; ++k) {
    Word pk = stream.take(ends[k - 1] + 1);
    Word lhs = d.apply(gamma_prime.apply(pk));
    Word rhs = gamma.apply(d.apply(pk));
    report.add("P_" + std::to_string(k), lhs == rhs,
               "D(gamma'(P_k)) != gamma(D(P_k)) at k = " + std::to_string(k) +
                   ", |P_k| = " + std::to_string(pk.size()));
  }
  return report;
}

/// Pass iff every domain letter actually occurs in the fixed point; the
/// witness lists the unreachable letters.
inline VerificationReport verify_minimal_alphabet(const Morphism& m, Symbol start) {
  VerificationReport report;
  Alphabet occ = occurring_letters(m, start);  // throws not_prolongable
  std::string unreachable;
  for (Symbol s : m.domain()) {
    if (!occ.contains(s)) {
      if (!unreachable.empty()) unreachable += ' ';
      unreachable += s.name();
    }
  }
  report.add("minimal-alphabet", unreachable.empty(), "unreachable: " + unreachable);
  return report;
}

/// Aggregate check of a non-uniformization result against its input: six
/// obligations, each reported separately.
inline VerificationReport verify_nonuniform_presentation(const NonUniformizationResult& r,
                                                         const MorphicPresentation& original,
                                                         std::size_t n) {
  VerificationReport report;

  report.add("non-uniform", !r.gamma_prime.uniform_arity().has_value(),
             "gamma' is uniform");

  bool prolongable = is_prolongable(r.gamma_prime, r.start);
  report.add("prolongable", prolongable, "gamma' not prolongable from " + r.start.name());
  if (!prolongable) return report;

  {
    VerificationReport minimal = verify_minimal_alphabet(r.gamma_prime, r.start);
    report.checks.push_back(minimal.checks.front());
  }

  {
    VerificationReport prefix = verify_prefix_equal(r.presentation(), original, n);
    report.checks.push_back(prefix.checks.front());
  }

  {
    // every b' immediately followed by c', every c' immediately preceded by b'
    Word fp = fixed_point_prefix(r.gamma_prime, r.start, n + 1);
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < n; ++i) {
      if (fp[i] == r.trace.b_prime && !(fp[i + 1] == r.trace.c_prime)) {
        ok = false;
        witness = "unpaired b' at index " + std::to_string(i);
        break;
      }
      if (fp[i] == r.trace.c_prime && (i == 0 || !(fp[i - 1] == r.trace.b_prime))) {
        ok = false;
        witness = "unpaired c' at index " + std::to_string(i);
        break;
      }
    }
    report.add("pairing", ok, witness);
  }

  {
    std::size_t original_occ = occurring_letters(original.morphism(), original.start()).size();
    std::size_t added = r.gamma_prime.domain().size() - original_occ;
    bool ok = (added == 2 || added == 3) && (added == 3) == r.trace.fresh_start.has_value();
    report.add("cardinality", ok,
               std::to_string(added) + " letters added, fresh start " +
                   (r.trace.fresh_start ? "present" : "absent"));
  }

  return report;
}

}  // namespace wordmorph
