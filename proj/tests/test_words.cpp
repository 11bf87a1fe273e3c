#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace wordmorph;
using support::S;
using support::cw;

TEST_CASE("symbol names are validated and interned") {
  CHECK(S("0") == S("0"));
  CHECK_FALSE(S("0") == S("1"));
  CHECK(S("b'").name() == "b'");
  CHECK_THROWS_AS(Symbol(""), error);
  CHECK_THROWS_AS(Symbol("a b"), error);
  CHECK_THROWS_AS(Symbol("->"), error);
  CHECK_THROWS_AS(Symbol("a#b"), error);
}

TEST_CASE("alphabets reject duplicates and keep order") {
  Alphabet a = support::ca("210");
  CHECK(a.size() == 3);
  CHECK(a[0] == S("2"));
  CHECK(a.index_of(S("0")) == 2);
  CHECK_FALSE(a.contains(S("9")));
  CHECK_THROWS_AS(Alphabet({S("0"), S("0")}), error);
  CHECK_THROWS_AS(Alphabet(std::vector<Symbol>{}), error);
}

TEST_CASE("concat basics") {
  CHECK(concat(cw("01"), cw("10")) == cw("0110"));
  CHECK(concat(Word{}, cw("abaab")) == cw("abaab"));
  CHECK(concat(cw("abaab"), Word{}) == cw("abaab"));

  // a1 a2 . b1 b2 b3 with multi-character names
  Word left({S("a1"), S("a2")});
  Word right({S("b1"), S("b2"), S("b3")});
  Word glued = concat(left, right);
  CHECK(glued.size() == 5);
  CHECK(glued == Word({S("a1"), S("a2"), S("b1"), S("b2"), S("b3")}));
}

TEST_CASE("concat is associative with length additivity") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 8);
  std::uniform_int_distribution<int> bit(0, 1);
  auto random_word = [&] {
    Word w;
    for (int i = len(rng); i > 0; --i) w.push_back(bit(rng) ? S("1") : S("0"));
    return w;
  };
  for (int i = 0; i < 200; ++i) {
    Word a = random_word(), b = random_word(), c = random_word();
    CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
    CHECK(concat(a, b).size() == a.size() + b.size());
  }
}

TEST_CASE("is_prefix") {
  CHECK(is_prefix(cw("ab"), cw("abaab")));
  CHECK(is_prefix(Word{}, cw("anything-goes")) == true);
  CHECK(is_prefix(Word{}, Word{}));
  CHECK_FALSE(is_prefix(cw("ba"), cw("abaab")));
  CHECK_FALSE(is_prefix(cw("abaab"), cw("ab")));
}

TEST_CASE("prefix splits reconstruct the word") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(0, 12);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int i = 0; i < 100; ++i) {
    Word w;
    for (int j = len(rng); j > 0; --j) w.push_back(bit(rng) ? S("1") : S("0"));
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
      Word p = w.subword(0, cut);
      CHECK(is_prefix(p, w));
      CHECK(concat(p, w.subword(cut, w.size())) == w);
    }
  }
}

TEST_CASE("occurrences") {
  // mu^2(0) and mu^4(0) by the naive rewriting oracle
  std::map<char, std::string> mu{{'0', "01"}, {'1', "10"}};
  CHECK(support::naive_rewrite(mu, "0", 2) == "0110");
  CHECK(occurrences(cw("0110"), S("0")) == std::vector<std::size_t>{0, 3});

  CHECK(occurrences(cw("aaa"), S("b")).empty());

  std::string mu4 = support::naive_rewrite(mu, "0", 4);
  CHECK(mu4 == "0110100110010110");
  CHECK(occurrences(cw(mu4), S("0")) ==
        std::vector<std::size_t>{0, 3, 5, 6, 9, 10, 12, 15});
}

TEST_CASE("runs_between_zeros") {
  CHECK(runs_between_zeros(cw("0110100110010110"), S("0"), S("1")) ==
        std::vector<std::size_t>{2, 1, 0, 2, 0, 1, 2});
  CHECK(runs_between_zeros(cw("000"), S("0"), S("1")) == std::vector<std::size_t>{0, 0});
  CHECK(runs_between_zeros(cw("0"), S("0"), S("1")).empty());
  CHECK(runs_between_zeros(cw("111"), S("0"), S("1")).empty());
  CHECK_THROWS_AS(runs_between_zeros(cw("01x0"), S("0"), S("1")), error);
}

TEST_CASE("runs_between_zeros conserves letters") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> len(0, 40);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    Word w;
    for (int j = len(rng); j > 0; --j) w.push_back(bit(rng) ? S("1") : S("0"));
    auto counts = runs_between_zeros(w, S("0"), S("1"));
    std::size_t zeros = occurrences(w, S("0")).size();
    std::size_t interior_ones = 0;
    for (std::size_t c : counts) interior_ones += c;
    // ones outside the zero-to-zero stretch
    std::size_t boundary_ones = 0;
    auto zero_positions = occurrences(w, S("0"));
    if (zero_positions.empty()) {
      boundary_ones = w.size();
    } else {
      boundary_ones = zero_positions.front() + (w.size() - 1 - zero_positions.back());
    }
    CHECK(interior_ones + zeros + boundary_ones == w.size());
  }
}

TEST_CASE("to_string joins names with spaces") {
  CHECK(to_string(cw("011")) == "0 1 1");
  CHECK(to_string(Word{}) == "");
  CHECK(to_string(Word({S("alpha"), S("0'")})) == "alpha 0'");
}
