#pragma once

// Test-only helpers: compact constructors for words and morphisms over
// single-character alphabets, a naive string-rewriting oracle that is
// independent of the library's application path, and the random uniform
// presentation generator shared by the property and acceptance suites.

#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "wordmorph/wordmorph.hpp"

namespace support {

inline wordmorph::Symbol S(std::string_view name) { return wordmorph::Symbol(name); }

/// Word from single-character names: cw("0110") = 0 1 1 0.
inline wordmorph::Word cw(std::string_view chars) {
  wordmorph::Word w;
  for (char ch : chars) w.push_back(wordmorph::Symbol(std::string_view(&ch, 1)));
  return w;
}

inline wordmorph::Alphabet ca(std::string_view chars) {
  std::vector<wordmorph::Symbol> symbols;
  for (char ch : chars) symbols.emplace_back(std::string_view(&ch, 1));
  return wordmorph::Alphabet(std::move(symbols));
}

inline wordmorph::Morphism cm(std::string_view alphabet_chars,
                              std::vector<std::pair<char, std::string>> rules) {
  wordmorph::Alphabet a = ca(alphabet_chars);
  std::vector<std::pair<wordmorph::Symbol, wordmorph::Word>> image_rules;
  for (auto& [lhs, rhs] : rules)
    image_rules.emplace_back(wordmorph::Symbol(std::string_view(&lhs, 1)), cw(rhs));
  return wordmorph::Morphism(a, a, std::move(image_rules));
}

/// Plain std::string rewriting, used as the oracle for derived expectations.
inline std::string naive_rewrite(const std::map<char, std::string>& rules,
                                 std::string word, int times) {
  for (int i = 0; i < times; ++i) {
    std::string next;
    for (char ch : word) next += rules.at(ch);
    word = std::move(next);
  }
  return word;
}

inline std::string names_concat(const wordmorph::Word& w) {
  std::string out;
  for (wordmorph::Symbol s : w) out += s.name();
  return out;
}

/// A random prolongable k-uniform presentation: k in {2,3}, 2-4 letters,
/// uniformly random images except that the start image begins with the start
/// letter. Roughly half the draws get a random non-identity coding onto a
/// two-letter output alphabet.
inline wordmorph::MorphicPresentation random_uniform_presentation(std::mt19937& rng) {
  using namespace wordmorph;
  static const std::string pool = "wxyz";
  std::uniform_int_distribution<int> size_dist(2, 4);
  std::uniform_int_distribution<int> arity_dist(2, 3);
  const int size = size_dist(rng);
  const int k = arity_dist(rng);

  std::vector<Symbol> letters;
  for (int i = 0; i < size; ++i)
    letters.emplace_back(std::string_view(&pool[static_cast<std::size_t>(i)], 1));
  Alphabet alphabet(letters);

  std::uniform_int_distribution<int> letter_dist(0, size - 1);
  std::vector<std::pair<Symbol, Word>> rules;
  for (int i = 0; i < size; ++i) {
    Word image;
    for (int j = 0; j < k; ++j) {
      if (i == 0 && j == 0)
        image.push_back(letters[0]);  // prolongable from the first letter
      else
        image.push_back(letters[static_cast<std::size_t>(letter_dist(rng))]);
    }
    rules.emplace_back(letters[static_cast<std::size_t>(i)], std::move(image));
  }
  Morphism m(alphabet, alphabet, std::move(rules));

  std::bernoulli_distribution coin(0.5);
  if (coin(rng)) {
    Alphabet output = ca("PQ");
    std::vector<std::pair<Symbol, Word>> code_rules;
    for (Symbol s : alphabet)
      code_rules.emplace_back(s, Word::single(output[coin(rng) ? 1 : 0]));
    return MorphicPresentation(m, letters[0],
                               Coding(Morphism(alphabet, output, std::move(code_rules))));
  }
  return MorphicPresentation(m, letters[0], Coding::identity(alphabet));
}

/// Random presentation passing the same aperiodicity guard the pipeline uses.
inline wordmorph::MorphicPresentation random_guarded_presentation(std::mt19937& rng) {
  for (;;) {
    wordmorph::MorphicPresentation p = random_uniform_presentation(rng);
    if (!wordmorph::bounded_period_check(p.prefix(4096), 64, 64)) return p;
  }
}

}  // namespace support
