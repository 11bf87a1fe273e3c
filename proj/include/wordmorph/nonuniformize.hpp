#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordmorph/fixedpoint.hpp"
#include "wordmorph/periodicity.hpp"

namespace wordmorph {

namespace detail {

/// Restricts an endomorphism to a sub-alphabet closed under taking images.
inline Morphism restrict_endomorphism(const Morphism& m, const Alphabet& sub) {
  std::vector<std::pair<Symbol, Word>> rules;
  for (Symbol s : sub) rules.emplace_back(s, m.image(s));
  return Morphism(sub, sub, std::move(rules));
}

inline Coding restrict_coding(const Coding& coding, const Alphabet& sub) {
  std::vector<std::pair<Symbol, Word>> rules;
  for (Symbol s : sub) rules.emplace_back(s, Word::single(coding.letter_image(s)));
  return Coding(Morphism(sub, coding.codomain(), std::move(rules)));
}

inline Symbol fresh_prime(const std::string& base, const Alphabet& domain,
                          const std::vector<Symbol>& also_taken) {
  std::string candidate = base + "'";
  auto collides = [&](const std::string& name) {
    Symbol s{name};
    if (domain.contains(s)) return true;
    for (Symbol t : also_taken)
      if (t == s) return true;
    return false;
  };
  while (collides(candidate)) candidate += "'";
  return Symbol(candidate);
}

}  // namespace detail

struct UniquifyResult {
  Morphism morphism;
  Coding coding;  // sends the (possibly fresh) start back to the original letters
  Symbol start;
  bool fresh;  // true when a fresh start letter was introduced
};

/// Ensures the start letter occurs only at index 0 of the fixed point. The
/// recurrence test is exact: a0 recurs iff it appears at a non-initial
/// position of some occurring letter's image, or at the initial position of
/// the image of an occurring letter other than a0.
inline UniquifyResult uniquify_first_letter(const Morphism& m, Symbol a0) {
  auto arity = m.uniform_arity();
  if (!arity) fail(errc::not_uniform, "uniquify_first_letter requires a uniform morphism");
  if (*arity < 2) fail(errc::arity_one, "uniquify_first_letter requires arity >= 2");
  if (!is_prolongable(m, a0))
    fail(errc::not_prolongable, "morphism is not prolongable from '" + a0.name() + "'");

  Alphabet occ = occurring_letters(m, a0);
  bool recurs = false;
  for (Symbol y : occ) {
    const Word& img = m.image(y);
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (!(img[i] == a0)) continue;
      if (i > 0 || !(y == a0)) {
        recurs = true;
        break;
      }
    }
    if (recurs) break;
  }
  if (!recurs)
    return UniquifyResult{m, Coding::identity(m.domain()), a0, false};

  Symbol alpha = fresh_symbol("alpha", m.domain());
  const Word& start_image = m.image(a0);
  Word alpha_image = Word::single(alpha);
  alpha_image.append(start_image.subword(1, start_image.size()));

  std::vector<Symbol> extended;
  for (Symbol s : m.domain()) extended.push_back(s);
  extended.push_back(alpha);
  Alphabet new_domain(std::move(extended));

  std::vector<std::pair<Symbol, Word>> rules;
  for (Symbol s : m.domain()) rules.emplace_back(s, m.image(s));
  rules.emplace_back(alpha, std::move(alpha_image));
  Morphism extended_m(new_domain, new_domain, std::move(rules));

  std::vector<std::pair<Symbol, Word>> code_rules;
  for (Symbol s : m.domain()) code_rules.emplace_back(s, Word::single(s));
  code_rules.emplace_back(alpha, Word::single(a0));
  Coding eraser(Morphism(new_domain, m.domain(), std::move(code_rules)));

  return UniquifyResult{std::move(extended_m), std::move(eraser), alpha, true};
}

struct ExpandingLetter {
  Symbol letter;
  unsigned exponent;
};

/// Least exponent e <= bound (then alphabet order among occurring letters)
/// such that the e-th power maps the letter to a word containing it at least
/// twice. Occurrence counts come from incidence-matrix powers, so no image
/// word is materialized.
inline ExpandingLetter find_expanding_letter(const Morphism& m, Symbol a0, unsigned bound) {
  Alphabet occ = occurring_letters(m, a0);  // throws not_prolongable
  IncidenceMatrix base = incidence_matrix(m);
  IncidenceMatrix current = base;
  for (unsigned e = 1; e <= bound; ++e) {
    if (e > 1) current = multiply(base, current);
    for (Symbol b : occ) {
      std::size_t i = *m.domain().index_of(b);
      if (current.at(i, i) >= 2) return ExpandingLetter{b, e};
    }
  }
  fail(errc::not_found,
       "no expanding letter within exponent bound " + std::to_string(bound));
}

struct InteriorOccurrence {
  Morphism morphism;
  std::size_t index;
  unsigned squarings;
};

/// Squares the morphism until image(b) contains b at an index i with
/// 1 <= i <= L-3, so that both flanks of the b c pair are nonempty.
inline InteriorOccurrence ensure_interior_occurrence(const Morphism& m, Symbol b,
                                                     unsigned bound) {
  if (occurrences(m.image(b), b).size() < 2)
    fail(errc::precondition,
         "ensure_interior_occurrence: image of '" + b.name() +
             "' lacks a second occurrence of it");
  Morphism current = m;
  for (unsigned s = 0; s <= bound; ++s) {
    const Word& img = current.image(b);
    if (img.size() >= 4) {
      for (std::size_t i : occurrences(img, b)) {
        if (i >= 1 && i + 3 <= img.size())
          return InteriorOccurrence{std::move(current), i, s};
      }
    }
    if (s < bound) current = compose(current, current);
  }
  fail(errc::not_found,
       "no interior occurrence within " + std::to_string(bound) + " squarings");
}

struct BcSplit {
  Word w1;
  Symbol c;
  Word w2;
};

/// Splits image(b) = w1 b c w2 around the occurrence of b at `index`.
inline BcSplit locate_bc(const Morphism& m, Symbol b, std::size_t index) {
  const Word& img = m.image(b);
  if (index + 3 > img.size() || index < 1 || !(img[index] == b))
    fail(errc::index_out_of_range,
         "locate_bc: index " + std::to_string(index) +
             " is not an interior occurrence of '" + b.name() + "'");
  return BcSplit{img.subword(0, index), img[index + 1], img.subword(index + 2, img.size())};
}

/// z = first letter, t = remainder; always nonempty words of unequal length.
inline std::pair<Word, Word> split_unequal(const Word& w) {
  if (w.size() < 3)
    fail(errc::too_short, "cannot split a word of length " + std::to_string(w.size()) +
                              " into nonempty parts of unequal length");
  return {w.subword(0, 1), w.subword(1, w.size())};
}

struct NonUniformBuild {
  Morphism gamma_prime;
  Coding pair_coding;  // D: identity on old letters, b' -> b, c' -> c
  Symbol b_prime;
  Symbol c_prime;
  Word z;
  Word t;
};

/// Replaces the interior b c pair of image(b) with fresh letters b' c' and
/// gives them the unequal split of image(b c) as images, making the result
/// non-uniform by construction.
inline NonUniformBuild build_nonuniform(const Morphism& m, Symbol b, const Word& w1,
                                        Symbol c, const Word& w2) {
  if (w1.empty() || w2.empty())
    fail(errc::precondition, "build_nonuniform: w1 and w2 must be nonempty");
  Word expected = w1;
  expected.push_back(b);
  expected.push_back(c);
  expected.append(w2);
  if (!(m.image(b) == expected))
    fail(errc::precondition, "build_nonuniform: image(b) != w1 b c w2");

  Symbol b_prime = detail::fresh_prime(b.name(), m.domain(), {});
  Symbol c_prime = detail::fresh_prime(c.name(), m.domain(), {b_prime});

  Word bc;
  bc.push_back(b);
  bc.push_back(c);
  auto [z, t] = split_unequal(m.apply(bc));

  std::vector<Symbol> letters;
  for (Symbol s : m.domain()) letters.push_back(s);
  letters.push_back(b_prime);
  letters.push_back(c_prime);
  Alphabet domain(std::move(letters));

  Word b_image = w1;
  b_image.push_back(b_prime);
  b_image.push_back(c_prime);
  b_image.append(w2);

  std::vector<std::pair<Symbol, Word>> rules;
  for (Symbol s : m.domain()) rules.emplace_back(s, s == b ? b_image : m.image(s));
  rules.emplace_back(b_prime, z);
  rules.emplace_back(c_prime, t);
  Morphism gamma_prime(domain, domain, std::move(rules));

  std::vector<std::pair<Symbol, Word>> code_rules;
  for (Symbol s : m.domain()) code_rules.emplace_back(s, Word::single(s));
  code_rules.emplace_back(b_prime, Word::single(b));
  code_rules.emplace_back(c_prime, Word::single(c));
  Coding d(Morphism(domain, m.domain(), std::move(code_rules)));

  return NonUniformBuild{std::move(gamma_prime), std::move(d), b_prime, c_prime,
                         std::move(z), std::move(t)};
}

struct NonUniformizeOptions {
  unsigned expanding_bound = 64;
  unsigned squaring_bound = 16;
  std::size_t guard_prefix = 4096;
  std::size_t guard_max_preperiod = 64;
  std::size_t guard_max_period = 64;
  bool assert_aperiodic = false;  // caller vouches; skips the periodicity guard
  // Refuse rather than materialize a raised power with images past this size.
  std::size_t max_image_letters = std::size_t{1} << 26;
};

struct NonUniformizationTrace {
  std::optional<Symbol> fresh_start;
  std::uint64_t power_applied = 1;
  Symbol b;
  Symbol c;
  Symbol b_prime;
  Symbol c_prime;
  Word w1;
  Word w2;
  Word z;
  Word t;
};

struct NonUniformizationResult {
  Morphism gamma_prime;
  Coding coding;  // composed: original coding, then the fresh-start eraser, then D
  Symbol start;
  Morphism base;       // the raised uniform morphism gamma that gamma_prime refines
  Coding pair_coding;  // D
  NonUniformizationTrace trace;

  MorphicPresentation presentation() const {
    return MorphicPresentation(gamma_prime, start, coding);
  }
};

/// Turns a uniform-morphism presentation into a non-uniform presentation of
/// the same sequence: trim to occurring letters, make the start letter unique,
/// raise to an expanding power, square until the self-occurrence is interior,
/// then replace the interior b c pair by fresh letters with an unequal split.
inline NonUniformizationResult nonuniformize(const MorphicPresentation& p,
                                             const NonUniformizeOptions& opts = {}) {
  auto arity = p.morphism().uniform_arity();
  if (!arity) fail(errc::not_uniform, "nonuniformize requires a uniform morphism");
  if (*arity < 2) fail(errc::arity_one, "nonuniformize requires uniform arity >= 2");

  if (!opts.assert_aperiodic) {
    Word sample = p.prefix(opts.guard_prefix);
    if (auto form = bounded_period_check(sample, opts.guard_max_preperiod,
                                         opts.guard_max_period)) {
      fail(errc::likely_periodic,
           "presented prefix matches preperiod " +
               std::to_string(form->preperiod.size()) + ", period " +
               std::to_string(form->period.size()) +
               "; use periodic_fixed_point, or assert aperiodicity to override");
    }
  }

  Alphabet occ = occurring_letters(p.morphism(), p.start());
  Morphism trimmed = detail::restrict_endomorphism(p.morphism(), occ);
  Coding trimmed_coding = detail::restrict_coding(p.coding(), occ);

  UniquifyResult uniq = uniquify_first_letter(trimmed, p.start());

  ExpandingLetter expanding =
      find_expanding_letter(uniq.morphism, uniq.start, opts.expanding_bound);

  // Image lengths of the raised power are arity^(e * 2^s); bail out before
  // materializing something enormous.
  {
    std::uint64_t image_len = 1;
    for (unsigned i = 0; i < expanding.exponent; ++i)
      image_len = detail::sat_mul(image_len, *arity);
    if (image_len > opts.max_image_letters)
      fail(errc::not_found, "expanding power too large to materialize");
  }

  Morphism raised = power(uniq.morphism, expanding.exponent);
  InteriorOccurrence interior =
      ensure_interior_occurrence(raised, expanding.letter, opts.squaring_bound);
  BcSplit split = locate_bc(interior.morphism, expanding.letter, interior.index);
  NonUniformBuild build = build_nonuniform(interior.morphism, expanding.letter,
                                           split.w1, split.c, split.w2);

  Coding coding = compose(compose(trimmed_coding, uniq.coding), build.pair_coding);

  NonUniformizationTrace trace{
      uniq.fresh ? std::optional<Symbol>(uniq.start) : std::nullopt,
      static_cast<std::uint64_t>(expanding.exponent) << interior.squarings,
      expanding.letter,
      split.c,
      build.b_prime,
      build.c_prime,
      split.w1,
      split.w2,
      build.z,
      build.t};

  NonUniformizationResult result{std::move(build.gamma_prime),
                                 std::move(coding),
                                 uniq.start,
                                 std::move(interior.morphism),
                                 std::move(build.pair_coding),
                                 std::move(trace)};

  if (result.gamma_prime.uniform_arity())
    fail(errc::precondition, "internal: gamma_prime turned out uniform");
  if (!is_prolongable(result.gamma_prime, result.start))
    fail(errc::precondition, "internal: gamma_prime lost prolongability");
  return result;
}

/// Presentation of the ultimately periodic sequence u v v v ... as the
/// iterative fixed point of first(u) -> u, a -> v^j with j |v| != |u|.
inline MorphicPresentation periodic_fixed_point(const PeriodicForm& pf,
                                                const Alphabet& ambient) {
  if (pf.period.empty()) fail(errc::empty_period, "period must be nonempty");
  Word u = pf.preperiod;
  if (u.empty()) fail(errc::bad_preperiod, "preperiod must be nonempty");
  if (u.size() == 1) u.append(pf.period);  // same sequence, workable length

  Symbol head = u[0];
  for (std::size_t i = 1; i < u.size(); ++i)
    if (u[i] == head)
      fail(errc::bad_preperiod, "preperiod head '" + head.name() + "' recurs in it");
  for (Symbol s : pf.period)
    if (s == head)
      fail(errc::bad_preperiod, "preperiod head '" + head.name() + "' occurs in the period");

  std::size_t j = 1;
  while (j * pf.period.size() == u.size()) ++j;
  Word period_power;
  for (std::size_t i = 0; i < j; ++i) period_power.append(pf.period);

  std::vector<Symbol> letters{head};
  for (Symbol s : ambient)
    if (!(s == head)) letters.push_back(s);
  Alphabet domain(std::move(letters));
  for (Symbol s : u)
    if (!domain.contains(s))
      fail(errc::alien_symbol, "preperiod letter '" + s.name() + "' outside the ambient alphabet");
  for (Symbol s : pf.period)
    if (!domain.contains(s))
      fail(errc::alien_symbol, "period letter '" + s.name() + "' outside the ambient alphabet");

  std::vector<std::pair<Symbol, Word>> rules;
  rules.emplace_back(head, u);
  for (Symbol s : domain)
    if (!(s == head)) rules.emplace_back(s, period_power);
  Morphism m(domain, domain, std::move(rules));
  return MorphicPresentation(m, head, Coding::identity(domain));
}

}  // namespace wordmorph
