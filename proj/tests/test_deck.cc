#include <array>
#include <map>
#include <random>
#include <sstream>

#include "doctest.h"
#include "vpoker/canonical.h"
#include "vpoker/pay_table.h"

using namespace vpoker;

namespace {

Category job(const char* hand) { return categorize(parse_hand(hand), Game::kJacksOrBetter); }
Category db(const char* hand) { return categorize(parse_hand(hand), Game::kDoubleBonus); }

template <typename Visit>
void for_each_hand(Visit&& visit) {
  std::array<Card, kHandSize> h{};
  for (int a = 0; a < kDeckSize; ++a)
    for (int b = a + 1; b < kDeckSize; ++b)
      for (int c = b + 1; c < kDeckSize; ++c)
        for (int d = c + 1; d < kDeckSize; ++d)
          for (int e = d + 1; e < kDeckSize; ++e) {
            h = {Card::from_index(a), Card::from_index(b), Card::from_index(c),
                 Card::from_index(d), Card::from_index(e)};
            visit(std::span<const Card, kHandSize>(h));
          }
}

}  // namespace

TEST_CASE("cards parse and print") {
  CHECK(to_string(parse_card("Tc")) == "Tc");
  CHECK(parse_card("10c") == parse_card("Tc"));
  CHECK(parse_card("As") == Card(kAce, 3));
  CHECK(parse_card("2d") == Card(2, 1));
  CHECK_THROWS_AS(parse_card("1c"), ConfigError);
  CHECK_THROWS_AS(parse_card("Ax"), ConfigError);
  CHECK_THROWS_AS(parse_card("A"), ConfigError);
  CHECK_THROWS_AS(parse_hand("Ac Kc Qc Jc"), ConfigError);
  CHECK_THROWS_AS(parse_hand("Ac Kc Qc Jc Ac"), ConfigError);
  CHECK_THROWS_AS(parse_hand("Ac Kc Qc Jc Tc 9c"), ConfigError);
  CHECK(to_string(parse_hand("Kc 8c Qc Tc Jc")) == "8c Tc Jc Qc Kc");
}

TEST_CASE("hand categories") {
  CHECK(job("Tc Jc Qc Kc Ac") == Category::kRoyalFlush);
  CHECK(job("Ad 2d 3d 4d 5d") == Category::kStraightFlush);
  CHECK(job("9h Th Jh Qh Kh") == Category::kStraightFlush);
  CHECK(job("7c 7d 7h 7s 2c") == Category::kFourOfAKind);
  CHECK(job("7c 7d 7h 2s 2c") == Category::kFullHouse);
  CHECK(job("2c 5c 7c 9c Jc") == Category::kFlush);
  CHECK(job("Ac 2d 3h 4s 5c") == Category::kStraight);
  CHECK(job("Tc Jd Qh Ks Ac") == Category::kStraight);
  CHECK(job("Jc Qd Kh As 2c") == Category::kOther);
  CHECK(job("7c 7d 7h 2s 3c") == Category::kThreeOfAKind);
  CHECK(job("7c 7d 3h 2s 3c") == Category::kTwoPair);
  CHECK(job("Jc Jd 3h 2s 4c") == Category::kJacksOrBetter);
  CHECK(job("Ac Ad 3h 2s 4c") == Category::kJacksOrBetter);
  CHECK(job("Tc Td 3h 2s 4c") == Category::kOther);
  CHECK(db("Ac Ad Ah As 2c") == Category::kFourAces);
  CHECK(db("3c 3d 3h 3s Kc") == Category::kFourTwosThroughFours);
  CHECK(db("Kc Kd Kh Ks 3c") == Category::kFourFivesThroughKings);
  CHECK(db("Tc Jc Qc Kc Ac") == Category::kRoyalFlush);
}

TEST_CASE("category frequencies over every hand") {
  std::map<Category, std::uint64_t> job_counts;
  std::map<Category, std::uint64_t> db_counts;
  for_each_hand([&](std::span<const Card, kHandSize> h) {
    ++job_counts[categorize(h, Game::kJacksOrBetter)];
    ++db_counts[categorize(h, Game::kDoubleBonus)];
  });
  const std::map<Category, std::uint64_t> expected = {
      {Category::kRoyalFlush, 4},        {Category::kStraightFlush, 36},
      {Category::kFourOfAKind, 624},     {Category::kFullHouse, 3'744},
      {Category::kFlush, 5'108},         {Category::kStraight, 10'200},
      {Category::kThreeOfAKind, 54'912}, {Category::kTwoPair, 123'552},
      {Category::kJacksOrBetter, 337'920}, {Category::kOther, 2'062'860},
  };
  CHECK(job_counts == expected);
  auto db_expected = expected;
  db_expected.erase(Category::kFourOfAKind);
  db_expected[Category::kFourAces] = 48;
  db_expected[Category::kFourTwosThroughFours] = 144;
  db_expected[Category::kFourFivesThroughKings] = 432;
  CHECK(db_counts == db_expected);
}

TEST_CASE("categories are invariant under suit relabeling") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, 23);
  for (int trial = 0; trial < 5000; ++trial) {
    std::array<int, kDeckSize> deck{};
    for (int i = 0; i < kDeckSize; ++i) deck[static_cast<std::size_t>(i)] = i;
    std::shuffle(deck.begin(), deck.end(), rng);
    std::array<Card, kHandSize> h{};
    for (int i = 0; i < kHandSize; ++i) h[static_cast<std::size_t>(i)] = Card::from_index(deck[static_cast<std::size_t>(i)]);
    const auto& perm = suit_permutations()[static_cast<std::size_t>(pick(rng))];
    std::array<Card, kHandSize> g{};
    for (int i = 0; i < kHandSize; ++i) g[static_cast<std::size_t>(i)] = apply(perm, h[static_cast<std::size_t>(i)]);
    for (Game game : {Game::kJacksOrBetter, Game::kDoubleBonus}) {
      CHECK(categorize(std::span<const Card, kHandSize>(h), game) ==
            categorize(std::span<const Card, kHandSize>(g), game));
    }
  }
}

TEST_CASE("builtin pay tables") {
  const PayTable t = jacks_or_better_9_6();
  CHECK(t.payout(Category::kRoyalFlush) == 800);
  CHECK(t.payout(Category::kFullHouse) == 9);
  CHECK(t.payout(Category::kFlush) == 6);
  CHECK(jacks_or_better_8_5().payout(Category::kFullHouse) == 8);
  CHECK(jacks_or_better_8_5().payout(Category::kFlush) == 5);
  const PayTable d = double_bonus_10_7();
  CHECK(d.payout(Category::kFourAces) == 160);
  CHECK(d.payout(Category::kFullHouse) == 10);
  CHECK(d.payout(Category::kTwoPair) == 1);
  CHECK(resolve_pay_table("job96") == t);
  CHECK(resolve_pay_table("double-bonus") == d);
  CHECK_THROWS_AS(resolve_pay_table("no-such-table"), ConfigError);
  for (const auto& builtin : {t, jacks_or_better_8_5(), d}) {
    CHECK(parse_pay_table(builtin.to_config()) == builtin);
    CHECK(load_pay_table(std::string(VPOKER_DATA_DIR) + "/paytables/" + builtin.name() + ".txt") ==
          builtin);
  }
}

TEST_CASE("pay table config errors") {
  const std::string good = jacks_or_better_9_6().to_config();
  CHECK_NOTHROW(parse_pay_table(good));
  CHECK_THROWS_AS(parse_pay_table(good + "flush = 6\n"), ConfigError);
  CHECK_THROWS_AS(parse_pay_table(good + "five_of_a_kind = 6\n"), ConfigError);
  auto without = [&](const std::string& key) {
    std::string out;
    std::istringstream in(good);
    for (std::string line; std::getline(in, line);) {
      if (line.rfind(key + " ", 0) != 0) out += line + "\n";
    }
    return out;
  };
  CHECK_THROWS_AS(parse_pay_table(without("name")), ConfigError);
  CHECK_THROWS_AS(parse_pay_table(without("game")), ConfigError);
  CHECK_THROWS_AS(parse_pay_table(without("flush")), ConfigError);
  CHECK_THROWS_AS(parse_pay_table(without("other") + "other = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_pay_table(without("flush") + "flush = six\n"), ConfigError);
  CHECK_THROWS_AS(parse_pay_table(without("game") + "game = keno\n"), ConfigError);
  CHECK_THROWS_AS(parse_pay_table(without("flush") + "flush\n"), ConfigError);
  CHECK_THROWS_AS(load_pay_table("/nonexistent/table.txt"), ConfigError);
}
