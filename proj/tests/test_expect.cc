#include <random>

#include "doctest.h"
#include "test_support.h"
#include "vpoker/canonical.h"
#include "vpoker/expect.h"

using namespace vpoker;
using vpoker::testing::all_classes;
using vpoker::testing::job96_results;
using vpoker::testing::mask_of;

namespace {

const CompletionMemo& job96_memo() {
  static const CompletionMemo memo(jacks_or_better_9_6());
  return memo;
}

ScaledCE fast_ce(const char* hand, std::initializer_list<const char*> held) {
  const Hand h = parse_hand(hand);
  return ce_fast(std::span<const Card, kHandSize>(h.cards()), mask_of(h, held),
                 jacks_or_better_9_6(), job96_memo());
}

}  // namespace

TEST_CASE("scale and draw multipliers") {
  CHECK(kScale == 7'669'695);
  CHECK(kScale == 5 * binomial(47, 5));
  const std::array<std::uint64_t, 6> expected{5, 43, 473, 7'095, 163'185, 7'669'695};
  for (int k = 0; k <= kHandSize; ++k) CHECK(draw_multiplier(k) == expected[static_cast<std::size_t>(k)]);
  CHECK(binomial(52, 5) == kNumHands);
}

TEST_CASE("checked arithmetic") {
  CHECK(checked_mul(1ull << 31, 1ull << 31) == 1ull << 62);
  CHECK_THROWS_AS(checked_mul(1ull << 32, 1ull << 32), std::overflow_error);
  CHECK_THROWS_AS(checked_add(~0ull, 1), std::overflow_error);
}

TEST_CASE("known conditional expectations") {
  CHECK(fast_ce("Tc Jc Qc Kc Ac", {"Tc", "Jc", "Qc", "Kc", "Ac"}) == 6'135'756'000ull);
  CHECK(fast_ce("2s 3s 4s 5s 6d", {"2s", "3s", "4s", "5s", "6d"}) == 30'678'780ull);
  CHECK(fast_ce("5h 6d 8c 9s Th", {}) == 2'741'080ull);
  CHECK(fast_ce("2d Tc Jc Qc Kc", {"Tc", "Jc", "Qc", "Kc"}) == 150'946'125ull);
  CHECK(fast_ce("Ac Ad Ah As 9d", {"Ac", "Ad", "Ah", "As"}) == 191'742'375ull);
}

TEST_CASE("optimal holds") {
  const Hand h = parse_hand("8c Tc Jc Qc Kc");
  const auto r = make_result(
      EquivClass{canonicalize(h), 4, 0, Shape::kFiveDistinct},
      ce_all_fast(std::span<const Card, kHandSize>(canonicalize(h).cards), job96_memo()));
  CHECK(r.unique);
  // Canonical order is ascending here, so bit 0 is the 8.
  CHECK(r.best_mask == HoldMask(0b11110));
  // The discarded 8 is a flush card.
  CHECK(r.best() == 149'967'015ull);
}

TEST_CASE("naive and fast backends agree") {
  const auto& classes = all_classes();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
  const CompletionMemo db_memo(double_bonus_10_7());
  for (int trial = 0; trial < 6; ++trial) {
    const auto& c = classes[pick(rng)];
    std::span<const Card, kHandSize> cards(c.canonical.cards);
    CHECK(ce_all_naive(cards, jacks_or_better_9_6()) == ce_all_fast(cards, job96_memo()));
    CHECK(ce_all_naive(cards, double_bonus_10_7()) == ce_all_fast(cards, db_memo));
    for (unsigned m : {0u, 5u, 31u}) {
      CHECK(ce_fast(cards, HoldMask(m), jacks_or_better_9_6(), job96_memo()) ==
            ce_naive(cards, HoldMask(m), jacks_or_better_9_6()));
    }
  }
}

TEST_CASE("a memo built for another pay table is rejected") {
  const Hand h = parse_hand("5h 6d 8c 9s Th");
  std::span<const Card, kHandSize> cards(h.cards());
  CHECK_THROWS_AS(ce_fast(cards, HoldMask::none(), double_bonus_10_7(), job96_memo()),
                  ConfigError);
  CHECK_THROWS_AS(solve_class(all_classes()[0], double_bonus_10_7(), Backend::kFast, &job96_memo()),
                  ConfigError);
  CHECK_THROWS_AS(ce_fast(std::span<const Card, kHandSize>(parse_hand("5h 6d 8c 9s Th").cards()),
                          HoldMask(0), jacks_or_better_9_6(), CompletionMemo(jacks_or_better_8_5())),
                  ConfigError);
}

TEST_CASE("raising payouts never lowers a conditional expectation") {
  const CompletionMemo low(jacks_or_better_8_5());
  const auto& classes = all_classes();
  for (std::size_t i = 0; i < classes.size(); i += 97) {
    std::span<const Card, kHandSize> cards(classes[i].canonical.cards);
    const auto hi = ce_all_fast(cards, job96_memo());
    const auto lo = ce_all_fast(cards, low);
    for (std::size_t m = 0; m < kNumMasks; ++m) CHECK(hi[m] >= lo[m]);
  }
}

TEST_CASE("suit relabeling and card order do not change conditional expectations") {
  std::mt19937_64 rng(5);
  const auto& classes = all_classes();
  std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
  std::uniform_int_distribution<int> perm_pick(0, 23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& c = classes[pick(rng)];
    const auto& perm = suit_permutations()[static_cast<std::size_t>(perm_pick(rng))];
    std::array<Card, kHandSize> moved{};
    for (int i = 0; i < kHandSize; ++i) moved[static_cast<std::size_t>(i)] = apply(perm, c.canonical.cards[static_cast<std::size_t>(i)]);
    const Hand h(moved);
    const auto canon = canonicalize_with_source(h);
    const auto base = ce_all_fast(std::span<const Card, kHandSize>(c.canonical.cards), job96_memo());
    const auto raw = ce_all_fast(std::span<const Card, kHandSize>(h.cards()), job96_memo());
    for (unsigned m = 0; m < kNumMasks; ++m) {
      unsigned hm = 0;
      for (int i = 0; i < kHandSize; ++i) {
        if (m & (1u << i)) hm |= 1u << canon.source[static_cast<std::size_t>(i)];
      }
      CHECK(raw[hm] == base[m]);
    }
  }
}

TEST_CASE("non-unique optima are the quads and the split ten-to-king straights") {
  std::size_t flagged = 0;
  for (const auto& r : job96_results()) {
    const auto d = r.cls.canonical.denominations();
    const bool quads = r.cls.shape == Shape::kFourOfAKind;
    bool ttjqk = d == std::array<int, kHandSize>{10, 10, 11, 12, 13};
    if (ttjqk) {
      std::array<int, kNumSuits> per_suit{};
      for (const Card c : r.cls.canonical.cards) ++per_suit[static_cast<std::size_t>(c.suit)];
      ttjqk = *std::max_element(per_suit.begin(), per_suit.end()) <= 2;
    }
    CHECK_MESSAGE(r.unique != (quads || ttjqk), "class " << r.cls.class_index);
    flagged += !r.unique;
  }
  CHECK(flagged > 156);
}
