#ifndef VPOKER_CARD_H_
#define VPOKER_CARD_H_

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vpoker {

// Thrown for malformed user input (card strings, config files, tables).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a caller breaks an operation's precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr int kNumSuits = 4;
inline constexpr int kNumDenominations = 13;
inline constexpr int kDeckSize = 52;
inline constexpr int kHandSize = 5;

inline constexpr int kTen = 10;
inline constexpr int kJack = 11;
inline constexpr int kQueen = 12;
inline constexpr int kKing = 13;
inline constexpr int kAce = 14;

// A playing card. Denomination runs 2..14 (11..14 = J, Q, K, A); suit 0..3
// maps to clubs, diamonds, hearts, spades.
struct Card {
  std::int8_t denomination = 2;
  std::int8_t suit = 0;

  constexpr Card() = default;
  constexpr Card(int denom, int s)
      : denomination(static_cast<std::int8_t>(denom)),
        suit(static_cast<std::int8_t>(s)) {}

  // Dense index in [0, 52): (denomination - 2) * 4 + suit.
  constexpr int index() const { return (denomination - 2) * kNumSuits + suit; }
  static constexpr Card from_index(int i) {
    return Card(i / kNumSuits + 2, i % kNumSuits);
  }

  constexpr bool valid() const {
    return denomination >= 2 && denomination <= kAce && suit >= 0 &&
           suit < kNumSuits;
  }

  friend constexpr bool operator==(Card a, Card b) = default;
  friend constexpr auto operator<=>(Card a, Card b) {
    return a.index() <=> b.index();
  }
};

// Parses "Tc", "As", "9h" (also accepts "10c").
Card parse_card(std::string_view text);
std::string to_string(Card c);
char denomination_char(int denomination);
int parse_denomination(char c);  // returns 0 on failure

using CardSet = std::uint64_t;  // bit Card::index() set per card
constexpr CardSet card_bit(Card c) { return CardSet{1} << c.index(); }

// Five distinct cards, stored sorted by denomination then suit.
class Hand {
 public:
  explicit Hand(std::array<Card, kHandSize> cards);
  explicit Hand(std::span<const Card> cards);

  const std::array<Card, kHandSize>& cards() const { return cards_; }
  Card operator[](std::size_t i) const { return cards_[i]; }
  auto begin() const { return cards_.begin(); }
  auto end() const { return cards_.end(); }
  CardSet card_set() const;

  friend bool operator==(const Hand&, const Hand&) = default;

 private:
  std::array<Card, kHandSize> cards_;
};

// Whitespace-separated five-card string, e.g. "8c Tc Jc Qc Kc".
Hand parse_hand(std::string_view text);
std::string to_string(const Hand& hand);
std::string to_string(std::span<const Card> cards);

}  // namespace vpoker

#endif  // VPOKER_CARD_H_
