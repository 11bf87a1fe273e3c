#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "wordmorph/words.hpp"

namespace wordmorph {

/// A monoid morphism, stored as its image table: one image word per domain
/// letter, every image letter drawn from the codomain.
class Morphism {
public:
  Morphism(Alphabet domain, Alphabet codomain, std::vector<std::pair<Symbol, Word>> rules)
      : domain_(std::move(domain)), codomain_(std::move(codomain)) {
    images_.resize(domain_.size());
    std::vector<bool> seen(domain_.size(), false);
    for (auto& [letter, image] : rules) {
      auto idx = domain_.index_of(letter);
      if (!idx) fail(errc::alien_symbol, "rule for '" + letter.name() + "' outside the domain");
      if (seen[*idx]) fail(errc::invalid_alphabet, "duplicate rule for '" + letter.name() + "'");
      for (Symbol s : image)
        if (!codomain_.contains(s))
          fail(errc::alien_symbol, "image letter '" + s.name() + "' outside the codomain");
      images_[*idx] = std::move(image);
      seen[*idx] = true;
    }
    for (std::size_t i = 0; i < domain_.size(); ++i)
      if (!seen[i]) fail(errc::missing_rule, "no rule for '" + domain_[i].name() + "'");
  }

  const Alphabet& domain() const noexcept { return domain_; }
  const Alphabet& codomain() const noexcept { return codomain_; }

  const Word& image(Symbol a) const {
    auto idx = domain_.index_of(a);
    if (!idx) fail(errc::alien_symbol, "'" + a.name() + "' is not in the domain");
    return images_[*idx];
  }

  Word apply(const Word& w) const {
    std::size_t total = 0;
    for (Symbol s : w) total += image(s).size();
    Word out;
    out.reserve(total);
    for (Symbol s : w) out.append(image(s));
    return out;
  }

  /// k when every image has length k, absent otherwise.
  std::optional<std::size_t> uniform_arity() const {
    std::size_t k = images_.front().size();
    for (const Word& img : images_)
      if (img.size() != k) return std::nullopt;
    return k;
  }

  bool is_endomorphism() const { return codomain_.subset_of(domain_); }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.images_ == b.images_;
  }

private:
  Alphabet domain_;
  Alphabet codomain_;
  std::vector<Word> images_;  // parallel to domain order
};

inline Morphism identity_morphism(const Alphabet& alphabet) {
  std::vector<std::pair<Symbol, Word>> rules;
  for (Symbol s : alphabet) rules.emplace_back(s, Word::single(s));
  return Morphism(alphabet, alphabet, std::move(rules));
}

/// result(a) = outer(inner(a)); requires inner's codomain inside outer's domain.
inline Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (!inner.codomain().subset_of(outer.domain()))
    fail(errc::domain_mismatch, "compose: inner codomain not contained in outer domain");
  std::vector<std::pair<Symbol, Word>> rules;
  for (Symbol s : inner.domain()) rules.emplace_back(s, outer.apply(inner.image(s)));
  return Morphism(inner.domain(), outer.codomain(), std::move(rules));
}

/// exponent-fold composition; exponent 0 is the identity on the domain.
inline Morphism power(const Morphism& m, unsigned exponent) {
  if (!m.is_endomorphism())
    fail(errc::domain_mismatch, "power: codomain not contained in domain");
  Morphism out = identity_morphism(m.domain());
  for (unsigned i = 0; i < exponent; ++i) out = compose(m, out);
  return out;
}

/// A 1-uniform morphism.
class Coding {
public:
  explicit Coding(Morphism m) : m_(std::move(m)) {
    if (m_.uniform_arity() != std::optional<std::size_t>{1})
      fail(errc::not_uniform, "a coding must be 1-uniform");
  }

  static Coding identity(const Alphabet& alphabet) {
    return Coding(identity_morphism(alphabet));
  }

  const Morphism& morphism() const noexcept { return m_; }
  const Alphabet& domain() const noexcept { return m_.domain(); }
  const Alphabet& codomain() const noexcept { return m_.codomain(); }

  Symbol letter_image(Symbol a) const { return m_.image(a)[0]; }
  Word apply(const Word& w) const { return m_.apply(w); }

  bool is_identity() const {
    for (Symbol s : domain())
      if (!(letter_image(s) == s)) return false;
    return true;
  }

private:
  Morphism m_;
};

inline Coding compose(const Coding& outer, const Coding& inner) {
  return Coding(compose(outer.morphism(), inner.morphism()));
}

namespace detail {

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  return a > kMax - b ? kMax : a + b;
}

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (a == 0 || b == 0) return 0;
  return a > kMax / b ? kMax : a * b;
}

}  // namespace detail

/// Square integer matrix counting, at (a, b), the occurrences of letter a in
/// the image of letter b. Arithmetic saturates instead of wrapping; entries
/// grow like k^l and a wrapped value would corrupt the expanding-letter search.
class IncidenceMatrix {
public:
  IncidenceMatrix(Alphabet index, std::vector<std::uint64_t> entries)
      : index_(std::move(index)), entries_(std::move(entries)) {
    if (entries_.size() != index_.size() * index_.size())
      fail(errc::domain_mismatch, "incidence matrix entry count mismatch");
  }

  std::size_t dimension() const noexcept { return index_.size(); }
  const Alphabet& index() const noexcept { return index_; }

  std::uint64_t at(std::size_t row, std::size_t col) const {
    return entries_[row * dimension() + col];
  }

  friend bool operator==(const IncidenceMatrix& a, const IncidenceMatrix& b) {
    return a.index_ == b.index_ && a.entries_ == b.entries_;
  }

private:
  Alphabet index_;
  std::vector<std::uint64_t> entries_;
};

inline IncidenceMatrix incidence_matrix(const Morphism& m) {
  if (!m.is_endomorphism())
    fail(errc::domain_mismatch, "incidence_matrix: codomain not contained in domain");
  const Alphabet& a = m.domain();
  const std::size_t n = a.size();
  std::vector<std::uint64_t> entries(n * n, 0);
  for (std::size_t col = 0; col < n; ++col)
    for (Symbol letter : m.image(a[col]))
      entries[*a.index_of(letter) * n + col] += 1;
  return IncidenceMatrix(a, std::move(entries));
}

inline IncidenceMatrix multiply(const IncidenceMatrix& a, const IncidenceMatrix& b) {
  if (!(a.index() == b.index()))
    fail(errc::domain_mismatch, "incidence matrix index mismatch");
  const std::size_t n = a.dimension();
  std::vector<std::uint64_t> entries(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        entries[i * n + j] =
            detail::sat_add(entries[i * n + j], detail::sat_mul(aik, b.at(k, j)));
    }
  return IncidenceMatrix(a.index(), std::move(entries));
}

inline IncidenceMatrix matrix_power(const IncidenceMatrix& m, unsigned exponent) {
  const std::size_t n = m.dimension();
  std::vector<std::uint64_t> id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
  IncidenceMatrix out(m.index(), std::move(id));
  for (unsigned i = 0; i < exponent; ++i) out = multiply(m, out);
  return out;
}

}  // namespace wordmorph
