#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wordmorph/fixedpoint.hpp"

namespace wordmorph {

struct CatalogEntry {
  std::string name;
  MorphicPresentation presentation;
  std::string notes;
};

namespace detail {

inline Word char_word(std::string_view chars) {
  Word w;
  for (char ch : chars) w.push_back(Symbol(std::string_view(&ch, 1)));
  return w;
}

inline Morphism char_morphism(std::string_view alphabet_chars,
                              std::vector<std::pair<char, std::string>> rules) {
  std::vector<Symbol> letters;
  for (char ch : alphabet_chars) letters.push_back(Symbol(std::string_view(&ch, 1)));
  Alphabet a(std::move(letters));
  std::vector<std::pair<Symbol, Word>> image_rules;
  for (auto& [lhs, rhs] : rules)
    image_rules.emplace_back(Symbol(std::string_view(&lhs, 1)), char_word(rhs));
  return Morphism(a, a, std::move(image_rules));
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  {
    Morphism mu = char_morphism("01", {{'0', "01"}, {'1', "10"}});
    out.push_back({"thue-morse",
                   MorphicPresentation(mu, Symbol("0"), Coding::identity(mu.domain())),
                   "Thue-Morse substitution 0 -> 01, 1 -> 10, started at 0"});
  }
  {
    Morphism tau = char_morphism("ab", {{'a', "ab"}, {'b', "a"}});
    out.push_back({"fibonacci",
                   MorphicPresentation(tau, Symbol("a"), Coding::identity(tau.domain())),
                   "Fibonacci substitution a -> ab, b -> a, started at a"});
  }
  {
    Morphism sigma = char_morphism("210", {{'2', "210"}, {'1', "20"}, {'0', "1"}});
    out.push_back({"z-nonuniform",
                   MorphicPresentation(sigma, Symbol("2"), Coding::identity(sigma.domain())),
                   "block-length sequence of 1-runs between Thue-Morse zeros, "
                   "as the fixed point of 2 -> 210, 1 -> 20, 0 -> 1"});
  }
  {
    Morphism psi = char_morphism(
        "0123", {{'0', "01"}, {'1', "20"}, {'2', "23"}, {'3', "02"}});
    Coding kappa(char_morphism("0123", {{'0', "2"}, {'1', "1"}, {'2', "0"}, {'3', "1"}}));
    out.push_back({"z-automatic",
                   MorphicPresentation(psi, Symbol("0"), kappa),
                   "the same block-length sequence as z-nonuniform, presented as a "
                   "coded fixed point of the 2-uniform map 0 -> 01, 1 -> 20, "
                   "2 -> 23, 3 -> 02 under 0 -> 2, 1 -> 1, 2 -> 0, 3 -> 1"});
  }
  {
    Morphism junk = char_morphism("012", {{'0', "01"}, {'1', "10"}, {'2', "1101"}});
    out.push_back({"thue-morse-junk",
                   MorphicPresentation(junk, Symbol("0"), Coding::identity(junk.domain())),
                   "Thue-Morse with an unreachable extra rule 2 -> 1101; its domain "
                   "is larger than the minimal alphabet of its fixed point"});
  }

  return out;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog();
  return entries;
}

inline const CatalogEntry& catalog_get(std::string_view name) {
  for (const CatalogEntry& entry : catalog_entries())
    if (entry.name == name) return entry;
  fail(errc::unknown_name, "no catalog entry named '" + std::string(name) + "'");
}

/// [u_0, ..., u_n] with u_0 = a, u_1 = ab, u_{n+2} = u_{n+1} u_n.
inline std::vector<Word> fibonacci_recurrence_words(std::size_t n) {
  std::vector<Word> out;
  out.push_back(detail::char_word("a"));
  if (n >= 1) out.push_back(detail::char_word("ab"));
  for (std::size_t i = 2; i <= n; ++i) out.push_back(concat(out[i - 1], out[i - 2]));
  return out;
}

}  // namespace wordmorph
