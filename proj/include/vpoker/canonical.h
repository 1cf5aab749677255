#ifndef VPOKER_CANONICAL_H_
#define VPOKER_CANONICAL_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "vpoker/card.h"

namespace vpoker {

// Denomination shape of a five-card hand, in enumeration order.
enum class Shape : std::uint8_t {
  kFiveDistinct,
  kOnePair,
  kTwoPairs,
  kThreeOfAKind,
  kFullHouse,
  kFourOfAKind,
};
inline constexpr int kNumShapes = 6;

Shape shape_of(std::span<const Card> cards);

// The 24 permutations of the four suits; perm[s] is the image of suit s.
using SuitPermutation = std::array<std::int8_t, kNumSuits>;
const std::array<SuitPermutation, 24>& suit_permutations();

Card apply(const SuitPermutation& perm, Card c);

// Canonical member of a suit-permutation orbit.
//
// Cards are listed in shape order: larger denomination groups first (the pair
// of a one-pair hand, the trips of a full house), ties by ascending
// denomination, then ascending suit. The suits are the lexicographic minimum
// of that suit sequence over all 24 relabelings, which makes `pattern` (the
// 1-based suit labels) a first-use sequence: pattern[0] == 1 and every label is
// at most one more than the largest label before it.
struct CanonicalHand {
  std::array<Card, kHandSize> cards{};
  std::array<std::uint8_t, kHandSize> pattern{};

  Hand hand() const { return Hand(cards); }
  std::array<int, kHandSize> denominations() const;

  friend bool operator==(const CanonicalHand&, const CanonicalHand&) = default;
};

CanonicalHand canonicalize(const Hand& hand);

// canonicalize() plus, for each canonical position, the index into
// hand.cards() of the card that landed there.
struct Canonicalization {
  CanonicalHand canonical;
  std::array<std::uint8_t, kHandSize> source{};
};
Canonicalization canonicalize_with_source(const Hand& hand);

// Number of distinct hands among the 24 suit relabelings (4, 12 or 24).
int orbit_size(const CanonicalHand& c);

// Orbit-invariant key of a set of 0..5 distinct cards: the smallest CardSet
// among its 24 suit relabelings.
CardSet canonical_key(std::span<const Card> cards);
CardSet canonical_key(CardSet cards);

struct EquivClass {
  CanonicalHand canonical;
  int orbit_size = 0;
  int class_index = 0;  // 1-based, enumeration order
  Shape shape = Shape::kFiveDistinct;
};

// Every equivalence class exactly once: shapes in Shape order, then
// ascending denomination tuple (in shape order), then ascending pattern.
std::vector<EquivClass> enumerate_classes();

inline constexpr int kNumClasses = 134'459;
inline constexpr std::uint64_t kNumHands = 2'598'960;

}  // namespace vpoker

#endif  // VPOKER_CANONICAL_H_
