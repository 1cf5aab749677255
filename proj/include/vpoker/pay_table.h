#ifndef VPOKER_PAY_TABLE_H_
#define VPOKER_PAY_TABLE_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vpoker/card.h"

namespace vpoker {

enum class Game : std::uint8_t { kJacksOrBetter, kDoubleBonus };

// Union of the final-hand categories of every supported game. A game uses
// the subset returned by game_categories(), in pay-table order.
enum class Category : std::uint8_t {
  kRoyalFlush,
  kStraightFlush,
  kFourOfAKind,
  kFourAces,
  kFourTwosThroughFours,
  kFourFivesThroughKings,
  kFullHouse,
  kFlush,
  kStraight,
  kThreeOfAKind,
  kTwoPair,
  kJacksOrBetter,
  kOther,
};
inline constexpr int kNumCategories = 13;

std::span<const Category> game_categories(Game game);
std::string_view category_key(Category c);   // config-file key, e.g. "full_house"
std::string_view category_name(Category c);  // display name
std::string_view game_key(Game g);
Game parse_game(std::string_view key);

// Final-hand category of five distinct cards. Order of cards is irrelevant.
Category categorize(std::span<const Card, kHandSize> cards, Game game);
inline Category categorize(const Hand& hand, Game game) {
  return categorize(std::span<const Card, kHandSize>(hand.cards()), game);
}

class PayTable {
 public:
  PayTable(std::string name, Game game,
           const std::vector<std::pair<Category, std::uint32_t>>& payouts);

  const std::string& name() const { return name_; }
  Game game() const { return game_; }
  std::uint32_t payout(Category c) const {
    return by_category_[static_cast<std::size_t>(c)];
  }
  std::uint32_t max_payout() const;
  // (category, payout) in the game's canonical order.
  std::vector<std::pair<Category, std::uint32_t>> entries() const;

  std::uint32_t payout(std::span<const Card, kHandSize> cards) const {
    return payout(categorize(cards, game_));
  }
  std::uint32_t payout(const Hand& hand) const {
    return payout(categorize(hand, game_));
  }

  // Serialized in the line-based config format accepted by parse_pay_table.
  std::string to_config() const;

  friend bool operator==(const PayTable&, const PayTable&) = default;

 private:
  std::string name_;
  Game game_;
  std::array<std::uint32_t, kNumCategories> by_category_{};
};

// `key = value` per line; '#' starts a comment. Required keys: name, game and
// one entry per category of the game. Unknown or repeated keys are rejected.
PayTable parse_pay_table(std::string_view text);
PayTable load_pay_table(const std::string& path);

PayTable jacks_or_better_9_6();
PayTable jacks_or_better_8_5();
PayTable double_bonus_10_7();
std::vector<std::string> builtin_pay_table_names();
// Loads `name_or_path` as a file when it exists, else as a builtin name.
PayTable resolve_pay_table(const std::string& name_or_path);

}  // namespace vpoker

#endif  // VPOKER_PAY_TABLE_H_
