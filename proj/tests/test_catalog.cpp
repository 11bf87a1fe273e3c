#include "doctest.h"
#include "support.hpp"

using namespace wordmorph;
using support::S;
using support::cw;

TEST_CASE("catalog entries exist with the expected rules") {
  const CatalogEntry& tm = catalog_get("thue-morse");
  CHECK(tm.presentation.morphism().image(S("0")) == cw("01"));
  CHECK(tm.presentation.morphism().image(S("1")) == cw("10"));
  CHECK(tm.presentation.start() == S("0"));
  CHECK(tm.presentation.coding().is_identity());

  const CatalogEntry& za = catalog_get("z-automatic");
  CHECK(za.presentation.morphism().image(S("0")) == cw("01"));
  CHECK(za.presentation.coding().letter_image(S("0")) == S("2"));
  CHECK(za.presentation.coding().letter_image(S("3")) == S("1"));

  CHECK(catalog_entries().size() == 5);
  CHECK_THROWS_AS(catalog_get("nope"), error);
}

TEST_CASE("fibonacci recurrence words") {
  auto words = fibonacci_recurrence_words(2);
  REQUIRE(words.size() == 3);
  CHECK(words[0] == cw("a"));
  CHECK(words[1] == cw("ab"));
  CHECK(words[2] == cw("aba"));

  CHECK(fibonacci_recurrence_words(4).back() == cw("abaababa"));
  CHECK(fibonacci_recurrence_words(0) == std::vector<Word>{cw("a")});
}

TEST_CASE("recurrence words are prefixes of the fibonacci fixed point") {
  const MorphicPresentation& fib = catalog_get("fibonacci").presentation;
  auto words = fibonacci_recurrence_words(12);
  Word stream = fib.prefix(words.back().size());
  std::size_t fib_prev = 1, fib_curr = 2;  // |u_0| = 1, |u_1| = 2
  for (std::size_t i = 0; i < words.size(); ++i) {
    CHECK(is_prefix(words[i], stream));
    if (i >= 2) {
      std::size_t next = fib_prev + fib_curr;
      fib_prev = fib_curr;
      fib_curr = next;
    }
    CHECK(words[i].size() == (i == 0 ? 1 : i == 1 ? 2 : fib_curr));
  }
}

TEST_CASE("the three Z presentations agree") {
  const MorphicPresentation& tm = catalog_get("thue-morse").presentation;
  const MorphicPresentation& zn = catalog_get("z-nonuniform").presentation;
  const MorphicPresentation& za = catalog_get("z-automatic").presentation;

  // runs of ones between zeros in a Thue-Morse prefix long enough for 10^3 runs
  Word tm_prefix = tm.prefix(5000);
  auto counts = runs_between_zeros(tm_prefix, S("0"), S("1"));
  REQUIRE(counts.size() >= 1000);

  Word from_sigma = zn.prefix(1000);
  Word from_psi = za.prefix(1000);
  CHECK(from_sigma == from_psi);
  for (std::size_t i = 0; i < 1000; ++i)
    CHECK(std::to_string(counts[i]) == from_sigma[i].name());
}

TEST_CASE("thue-morse-junk matches Thue-Morse but fails minimal alphabet") {
  const MorphicPresentation& junk = catalog_get("thue-morse-junk").presentation;
  const MorphicPresentation& tm = catalog_get("thue-morse").presentation;
  CHECK(verify_prefix_equal(junk, tm, 1000).overall());
  VerificationReport minimal =
      verify_minimal_alphabet(junk.morphism(), junk.start());
  CHECK_FALSE(minimal.overall());
  CHECK(minimal.checks.front().witness.find("2") != std::string::npos);
}
