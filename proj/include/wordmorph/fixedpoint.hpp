#pragma once

#include <unordered_set>
#include <utility>
#include <vector>

#include "wordmorph/morphism.hpp"

namespace wordmorph {

/// Letters whose iterated image eventually becomes the empty word: the least
/// fixed point of "mortal iff every image letter is mortal". Converges in at
/// most |domain| rounds.
inline std::vector<Symbol> mortal_letters(const Morphism& m) {
  if (!m.is_endomorphism())
    fail(errc::domain_mismatch, "mortal_letters: codomain not contained in domain");
  const Alphabet& a = m.domain();
  std::vector<bool> mortal(a.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mortal[i]) continue;
      bool all_mortal = true;
      for (Symbol s : m.image(a[i]))
        if (!mortal[*a.index_of(s)]) {
          all_mortal = false;
          break;
        }
      if (all_mortal) {
        mortal[i] = true;
        changed = true;
      }
    }
  }
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (mortal[i]) out.push_back(a[i]);
  return out;
}

/// True iff image(a0) = a0 x with x nonempty and x containing at least one
/// immortal letter, so every iterate of x stays nonempty.
inline bool is_prolongable(const Morphism& m, Symbol a0) {
  if (!m.is_endomorphism())
    fail(errc::domain_mismatch, "is_prolongable: codomain not contained in domain");
  if (!m.domain().contains(a0))
    fail(errc::alien_symbol, "is_prolongable: '" + a0.name() + "' not in domain");
  const Word& img = m.image(a0);
  if (img.size() < 2 || !(img[0] == a0)) return false;
  auto mortal = mortal_letters(m);
  std::unordered_set<std::uint32_t> mortal_ids;
  for (Symbol s : mortal) mortal_ids.insert(s.id());
  for (std::size_t i = 1; i < img.size(); ++i)
    if (!mortal_ids.contains(img[i].id())) return true;
  return false;
}

/// The word x with image(a0) = a0 x.
inline Word prolongation_tail(const Morphism& m, Symbol a0) {
  if (!is_prolongable(m, a0))
    fail(errc::not_prolongable, "'" + a0.name() + "' is not a prolongable start letter");
  const Word& img = m.image(a0);
  return img.subword(1, img.size());
}

/// Lazy prefix generator for the iterative fixed point, built from the block
/// decomposition a0 x phi(x) phi^2(x) ...; already-produced letters are never
/// re-derived.
class FixedPointStream {
public:
  FixedPointStream(Morphism m, Symbol start) : m_(std::move(m)), start_(start) {
    Word tail = prolongation_tail(m_, start_);  // throws not_prolongable
    buffer_ = Word::single(start_);
    buffer_.append(tail);
    block_ = std::move(tail);
  }

  Symbol start() const noexcept { return start_; }

  /// Grows the internal prefix to at least n letters and returns it
  /// (possibly longer than n).
  const Word& ensure(std::size_t n) {
    while (buffer_.size() < n) {
      block_ = m_.apply(block_);  // nonempty: the tail holds an immortal letter
      buffer_.append(block_);
    }
    return buffer_;
  }

  Word take(std::size_t n) { return ensure(n).subword(0, n); }

private:
  Morphism m_;
  Symbol start_;
  Word buffer_;
  Word block_;
};

/// First n letters of the iterative fixed point of m from a0.
inline Word fixed_point_prefix(const Morphism& m, Symbol a0, std::size_t n) {
  return FixedPointStream(m, a0).take(n);
}

/// The least set containing a0 and closed under taking image letters; equals
/// the set of letters occurring in the iterative fixed point. Returned in
/// domain order.
inline Alphabet occurring_letters(const Morphism& m, Symbol a0) {
  if (!is_prolongable(m, a0))
    fail(errc::not_prolongable, "occurring_letters requires a prolongable start");
  std::unordered_set<std::uint32_t> reached{a0.id()};
  std::vector<Symbol> frontier{a0};
  while (!frontier.empty()) {
    Symbol current = frontier.back();
    frontier.pop_back();
    for (Symbol s : m.image(current))
      if (reached.insert(s.id()).second) frontier.push_back(s);
  }
  std::vector<Symbol> ordered;
  for (Symbol s : m.domain())
    if (reached.contains(s.id())) ordered.push_back(s);
  return Alphabet(std::move(ordered));
}

/// (morphism, start, coding): names the infinite sequence obtained by coding
/// the iterative fixed point pointwise.
class MorphicPresentation {
public:
  MorphicPresentation(Morphism morphism, Symbol start, Coding coding)
      : morphism_(std::move(morphism)), start_(start), coding_(std::move(coding)) {
    if (!morphism_.is_endomorphism())
      fail(errc::domain_mismatch, "presentation morphism must map its domain to itself");
    if (!is_prolongable(morphism_, start_))
      fail(errc::not_prolongable,
           "morphism is not prolongable from '" + start_.name() + "'");
    if (!morphism_.domain().subset_of(coding_.domain()))
      fail(errc::domain_mismatch, "coding is not total on the morphism domain");
  }

  const Morphism& morphism() const noexcept { return morphism_; }
  Symbol start() const noexcept { return start_; }
  const Coding& coding() const noexcept { return coding_; }

  Word prefix(std::size_t n) const {
    return coding_.apply(fixed_point_prefix(morphism_, start_, n));
  }

private:
  Morphism morphism_;
  Symbol start_;
  Coding coding_;
};

inline Word presented_prefix(const MorphicPresentation& p, std::size_t n) {
  return p.prefix(n);
}

}  // namespace wordmorph
