#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "doctest.h"
#include "test_support.h"
#include "vpoker/canonical.h"

using namespace vpoker;
using vpoker::testing::all_classes;

namespace {

Hand random_hand(std::mt19937_64& rng) {
  std::array<int, kDeckSize> deck{};
  for (int i = 0; i < kDeckSize; ++i) deck[static_cast<std::size_t>(i)] = i;
  std::shuffle(deck.begin(), deck.end(), rng);
  std::array<Card, kHandSize> h{};
  for (int i = 0; i < kHandSize; ++i) {
    h[static_cast<std::size_t>(i)] = Card::from_index(deck[static_cast<std::size_t>(i)]);
  }
  return Hand(h);
}

std::vector<int> pattern_of(const char* hand) {
  const auto c = canonicalize(parse_hand(hand));
  return {c.pattern.begin(), c.pattern.end()};
}

}  // namespace

TEST_CASE("shape order and first-use labels") {
  const auto fh = canonicalize(parse_hand("3c Kd 3h Ks 3s"));
  CHECK(fh.denominations() == std::array<int, kHandSize>{3, 3, 3, 13, 13});
  CHECK(pattern_of("Ah Kh Qh Jh Th") == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(canonicalize(parse_hand("Ah Kh Qh Jh Th")).cards[0] == parse_card("Tc"));
  CHECK(pattern_of("2s 3s 4s 5s 6d") == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(pattern_of("5h 6d 8c 9s Th") == std::vector<int>{1, 2, 3, 4, 1});
  CHECK(pattern_of("Ac Ad Ah As 9d") == std::vector<int>{1, 2, 3, 4, 1});
  const auto pair = canonicalize(parse_hand("2c 9d 9h Kc Ad"));
  CHECK(pair.denominations() == std::array<int, kHandSize>{9, 9, 2, 13, 14});
}

TEST_CASE("orbit sizes") {
  CHECK(orbit_size(canonicalize(parse_hand("Ah Kh Qh Jh Th"))) == 4);
  CHECK(orbit_size(canonicalize(parse_hand("2s 3s 4s 5s 6d"))) == 12);
  CHECK(orbit_size(canonicalize(parse_hand("5h 6d 8c 9s Th"))) == 24);
  CHECK(orbit_size(canonicalize(parse_hand("Ac Ad Ah As 9d"))) == 4);
}

TEST_CASE("canonicalization is idempotent and orbit-invariant") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, 23);
  for (int trial = 0; trial < 10'000; ++trial) {
    const Hand h = random_hand(rng);
    const auto c = canonicalize(h);
    CHECK(canonicalize(c.hand()) == c);
    std::array<Card, kHandSize> moved{};
    const auto& perm = suit_permutations()[static_cast<std::size_t>(pick(rng))];
    for (int i = 0; i < kHandSize; ++i) moved[static_cast<std::size_t>(i)] = apply(perm, h[static_cast<std::size_t>(i)]);
    CHECK(canonicalize(Hand(moved)) == c);
    CHECK(canonical_key(h.card_set()) == canonical_key(Hand(moved).card_set()));

    const auto with_source = canonicalize_with_source(h);
    CHECK(with_source.canonical == c);
    // The source map is a bijection that some suit relabeling realizes.
    bool realized = false;
    for (const auto& p : suit_permutations()) {
      bool all = true;
      for (int i = 0; i < kHandSize; ++i) {
        all &= apply(p, h[with_source.source[static_cast<std::size_t>(i)]]) ==
               c.cards[static_cast<std::size_t>(i)];
      }
      realized |= all;
    }
    CHECK(realized);
  }
}

TEST_CASE("enumeration census") {
  const auto& classes = all_classes();
  CHECK(classes.size() == static_cast<std::size_t>(kNumClasses));
  std::uint64_t hands = 0;
  std::map<Shape, std::set<std::array<std::uint8_t, kHandSize>>> patterns;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    CHECK(c.class_index == static_cast<int>(i) + 1);
    hands += static_cast<std::uint64_t>(c.orbit_size);
    patterns[c.shape].insert(c.canonical.pattern);
  }
  CHECK(hands == kNumHands);
  CHECK(patterns[Shape::kFiveDistinct].size() == 51);
  CHECK(patterns[Shape::kOnePair].size() == 20);
  CHECK(patterns[Shape::kTwoPairs].size() == 8);
  CHECK(patterns[Shape::kThreeOfAKind].size() == 5);
  CHECK(patterns[Shape::kFullHouse].size() == 2);
  CHECK(patterns[Shape::kFourOfAKind].size() == 1);
}

TEST_CASE("every hand lands in exactly one class of the right size") {
  const auto& classes = all_classes();
  std::unordered_map<CardSet, std::size_t> index;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    index.emplace(classes[i].canonical.hand().card_set(), i);
  }
  REQUIRE(index.size() == classes.size());
  std::vector<int> members(classes.size());
  std::array<Card, kHandSize> h{};
  for (int a = 0; a < kDeckSize; ++a)
    for (int b = a + 1; b < kDeckSize; ++b)
      for (int c = b + 1; c < kDeckSize; ++c)
        for (int d = c + 1; d < kDeckSize; ++d)
          for (int e = d + 1; e < kDeckSize; ++e) {
            h = {Card::from_index(a), Card::from_index(b), Card::from_index(c),
                 Card::from_index(d), Card::from_index(e)};
            const auto it = index.find(canonicalize(Hand(h)).hand().card_set());
            REQUIRE(it != index.end());
            ++members[it->second];
          }
  bool sizes_match = true;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    sizes_match &= members[i] == classes[i].orbit_size;
  }
  CHECK(sizes_match);
}
