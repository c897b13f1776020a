#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "boolfn/truth_table.hpp"
#include "support/oracles.hpp"

using namespace boolfn;

TEST_CASE("evaluate matches stored bits") {
  TruthTable and2 = TruthTable::parse("n=2 tt=8");
  CHECK(and2.evaluate(0b11) == 1);
  CHECK(and2.evaluate(0b01) == 0);

  TruthTable nae3 = TruthTable::parse("n=3 tt=7e");
  CHECK(nae3.evaluate(0b000) == 0);
  CHECK(nae3.evaluate(0b001) == 1);
  // Whole table against the semantic oracle.
  for (std::uint32_t x = 0; x < 8; ++x)
    CHECK(nae3.evaluate(x) == test::nae_value(3, x));

  CHECK_THROWS_AS(nae3.evaluate(8), std::out_of_range);
}

TEST_CASE("flip complements exactly the block") {
  CHECK(flip(0b0000, BlockFlip{0b0101}) == 0b0101);
  CHECK(flip(0b111, BlockFlip{0b111}) == 0b000);
  // Involution and untouched bits outside the block, exhaustively for n = 4.
  for (std::uint32_t x = 0; x < 16; ++x)
    for (std::uint32_t r = 0; r < 16; ++r) {
      CHECK(flip(flip(x, BlockFlip{r}), BlockFlip{r}) == x);
      CHECK((flip(x, BlockFlip{r}) & ~r) == (x & ~r));
    }
}

TEST_CASE("composition") {
  TruthTable nae3 = make_nae(3);
  TruthTable composed = compose(nae3, nae3);
  CHECK(composed.num_vars() == 9);
  CHECK(composed.evaluate(0) == 0);

  // OR_2 over AND_2 blocks equals (x1 and x2) or (x3 and x4), enumerated.
  TruthTable or_of_ands = compose(make_or(2), make_and(2));
  for (std::uint32_t y = 0; y < 16; ++y) {
    bool left = (y & 0b0011) == 0b0011;
    bool right = (y & 0b1100) == 0b1100;
    CHECK(or_of_ands.evaluate(y) == (left || right));
  }

  // Dictators are identities on both sides.
  TruthTable dict1 = make_dictator(1, 1);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    TruthTable f = test::random_table(4, rng);
    CHECK(compose(f, dict1) == f);
    CHECK(compose(dict1, f) == f);
  }

  CHECK_THROWS_AS(compose(make_or(6), make_or(6)), std::invalid_argument);
}

TEST_CASE("families") {
  CHECK(make_nae(3).hex() == "7e");
  CHECK(family("nae", 3).to_text() == "n=3 tt=7e");
  CHECK(make_or(2).hex() == "e");
  CHECK(make_constant(3, false).hex() == "00");
  CHECK(make_constant(3, true).hex() == "ff");
  CHECK(make_and(2).hex() == "8");
  for (std::uint32_t x = 0; x < 16; ++x)
    CHECK(make_xor(4).evaluate(x) == (std::popcount(x) % 2 == 1));
  CHECK(make_dictator(3, 2).evaluate(0b010) == 1);
  CHECK(make_dictator(3, 2).evaluate(0b101) == 0);
  CHECK_THROWS_AS(family("majority", 3), std::invalid_argument);
  CHECK_THROWS_AS(make_dictator(3, 4), std::invalid_argument);
}

TEST_CASE("weight profile") {
  auto nae = weight_profile(make_nae(3));
  CHECK(nae.ones == std::vector<std::uint64_t>{0, 3, 3, 0});
  CHECK(nae.totals == std::vector<std::uint64_t>{1, 3, 3, 1});

  auto or2 = weight_profile(make_or(2));
  CHECK(or2.ones == std::vector<std::uint64_t>{0, 2, 1});

  auto ones5 = weight_profile(make_constant(5, true));
  CHECK(ones5.ones == ones5.totals);

  // Sum of the per-weight counts is the number of ones in the table.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    TruthTable f = test::random_table(5, rng);
    auto profile = weight_profile(f);
    std::uint64_t total = 0;
    for (auto v : profile.ones) total += v;
    CHECK(total == f.ones_count());
  }
}

TEST_CASE("hex round-trip is identity") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 10; ++n)
    for (int trial = 0; trial < 8; ++trial) {
      TruthTable f = test::random_table(n, rng);
      CHECK(TruthTable::parse(f.to_text()) == f);
    }
  // Case-insensitive hex, canonical lowercase output.
  CHECK(TruthTable::parse("n=3 tt=7E").hex() == "7e");
}

TEST_CASE("text format errors") {
  CHECK_THROWS_AS(TruthTable::parse("n=3 7e"), std::invalid_argument);
  CHECK_THROWS_AS(TruthTable::parse("n=3 tt=zz"), std::invalid_argument);
  CHECK_THROWS_AS(TruthTable::parse("n=3 tt=7e1"), std::invalid_argument);
  CHECK_THROWS_AS(TruthTable::parse("n=0 tt=0"), std::invalid_argument);
  CHECK_THROWS_AS(TruthTable::parse("n=25 tt=0"), std::invalid_argument);
  CHECK_THROWS_AS(TruthTable::parse("n=1 tt=5"), std::invalid_argument);  // bit beyond 2^1
}

TEST_CASE("restriction and complement") {
  TruthTable or3 = make_or(3);
  CHECK(or3.restricted(0, false) == make_or(2));
  CHECK(or3.restricted(2, true) == make_constant(2, true));
  CHECK(or3.complemented().ones_count() == 1);
  CHECK(is_symmetric(or3));
  CHECK(!is_symmetric(make_dictator(2, 1)));
}
