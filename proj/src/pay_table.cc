#include "vpoker/pay_table.h"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace vpoker {

namespace {

constexpr std::array kJacksCategories = {
    Category::kRoyalFlush,   Category::kStraightFlush, Category::kFourOfAKind,
    Category::kFullHouse,    Category::kFlush,         Category::kStraight,
    Category::kThreeOfAKind, Category::kTwoPair,       Category::kJacksOrBetter,
    Category::kOther,
};

constexpr std::array kDoubleBonusCategories = {
    Category::kRoyalFlush,
    Category::kStraightFlush,
    Category::kFourAces,
    Category::kFourTwosThroughFours,
    Category::kFourFivesThroughKings,
    Category::kFullHouse,
    Category::kFlush,
    Category::kStraight,
    Category::kThreeOfAKind,
    Category::kTwoPair,
    Category::kJacksOrBetter,
    Category::kOther,
};

struct CategoryInfo {
  std::string_view key;
  std::string_view name;
};

constexpr std::array<CategoryInfo, kNumCategories> kCategoryInfo = {{
    {"royal_flush", "royal flush"},
    {"straight_flush", "straight flush"},
    {"four_of_a_kind", "four of a kind"},
    {"four_aces", "four aces"},
    {"four_2_4", "four 2-4"},
    {"four_5_k", "four 5-K"},
    {"full_house", "full house"},
    {"flush", "flush"},
    {"straight", "straight"},
    {"three_of_a_kind", "three of a kind"},
    {"two_pair", "two pairs"},
    {"jacks_or_better", "jacks or better"},
    {"other", "other"},
}};

constexpr std::uint32_t kRoyalBits = 0x1fu << kTen;
constexpr std::uint32_t kWheelBits = (1u << kAce) | (0xfu << 2);

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::span<const Category> game_categories(Game game) {
  if (game == Game::kDoubleBonus) return kDoubleBonusCategories;
  return kJacksCategories;
}

std::string_view category_key(Category c) {
  return kCategoryInfo[static_cast<std::size_t>(c)].key;
}

std::string_view category_name(Category c) {
  return kCategoryInfo[static_cast<std::size_t>(c)].name;
}

std::string_view game_key(Game g) {
  return g == Game::kDoubleBonus ? "double_bonus" : "jacks_or_better";
}

Game parse_game(std::string_view key) {
  if (key == "jacks_or_better") return Game::kJacksOrBetter;
  if (key == "double_bonus") return Game::kDoubleBonus;
  throw ConfigError("unknown game '" + std::string(key) + "'");
}

Category categorize(std::span<const Card, kHandSize> cards, Game game) {
  std::array<std::uint8_t, 15> counts{};
  std::uint32_t denoms = 0;
  const int suit = cards[0].suit;
  bool flush = true;
  for (Card c : cards) {
    ++counts[static_cast<std::size_t>(c.denomination)];
    denoms |= 1u << c.denomination;
    flush &= c.suit == suit;
  }
  const int distinct = std::popcount(denoms);
  if (distinct == kHandSize) {
    const bool straight = denoms == kWheelBits ||
                          (denoms >> std::countr_zero(denoms)) == 0x1fu;
    if (flush && denoms == kRoyalBits) return Category::kRoyalFlush;
    if (flush && straight) return Category::kStraightFlush;
    if (flush) return Category::kFlush;
    if (straight) return Category::kStraight;
    return Category::kOther;
  }
  if (distinct == 4) {
    for (int d = kJack; d <= kAce; ++d) {
      if (counts[static_cast<std::size_t>(d)] == 2) {
        return Category::kJacksOrBetter;
      }
    }
    return Category::kOther;
  }
  int top = 0;
  int top_denom = 0;
  for (Card c : cards) {
    if (counts[static_cast<std::size_t>(c.denomination)] > top) {
      top = counts[static_cast<std::size_t>(c.denomination)];
      top_denom = c.denomination;
    }
  }
  if (distinct == 3) {
    return top == 3 ? Category::kThreeOfAKind : Category::kTwoPair;
  }
  if (top == 3) return Category::kFullHouse;
  if (game == Game::kDoubleBonus) {
    if (top_denom == kAce) return Category::kFourAces;
    if (top_denom <= 4) return Category::kFourTwosThroughFours;
    return Category::kFourFivesThroughKings;
  }
  return Category::kFourOfAKind;
}

PayTable::PayTable(std::string name, Game game,
                   const std::vector<std::pair<Category, std::uint32_t>>& payouts)
    : name_(std::move(name)), game_(game) {
  auto cats = game_categories(game);
  std::array<bool, kNumCategories> seen{};
  for (auto [c, pay] : payouts) {
    if (std::find(cats.begin(), cats.end(), c) == cats.end()) {
      throw ConfigError("category '" + std::string(category_key(c)) +
                        "' does not belong to game " +
                        std::string(game_key(game)));
    }
    auto i = static_cast<std::size_t>(c);
    if (seen[i]) {
      throw ConfigError("category '" + std::string(category_key(c)) +
                        "' listed twice");
    }
    seen[i] = true;
    by_category_[i] = pay;
  }
  for (Category c : cats) {
    if (!seen[static_cast<std::size_t>(c)]) {
      throw ConfigError("missing payout for '" +
                        std::string(category_key(c)) + "'");
    }
  }
  if (payout(Category::kOther) != 0) {
    throw ConfigError("'other' must pay 0");
  }
}

std::uint32_t PayTable::max_payout() const {
  return *std::max_element(by_category_.begin(), by_category_.end());
}

std::vector<std::pair<Category, std::uint32_t>> PayTable::entries() const {
  std::vector<std::pair<Category, std::uint32_t>> out;
  for (Category c : game_categories(game_)) out.emplace_back(c, payout(c));
  return out;
}

std::string PayTable::to_config() const {
  std::ostringstream out;
  out << "name = " << name_ << "\n";
  out << "game = " << game_key(game_) << "\n";
  for (auto [c, pay] : entries()) out << category_key(c) << " = " << pay << "\n";
  return out.str();
}

PayTable parse_pay_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::map<std::string, std::string> kv;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::string body = trim(line);
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected 'key = value'");
    }
    std::string key = trim(std::string_view(body).substr(0, eq));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": empty key or value");
    }
    if (!kv.emplace(key, value).second) {
      throw ConfigError("line " + std::to_string(lineno) + ": repeated key '" +
                        key + "'");
    }
  }
  auto take = [&](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ConfigError("missing key '" + key + "'");
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  std::string name = take("name");
  Game game = parse_game(take("game"));
  std::vector<std::pair<Category, std::uint32_t>> payouts;
  for (Category c : game_categories(game)) {
    std::string key(category_key(c));
    std::string v = take(key);
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos ||
        v.size() > 9) {
      throw ConfigError("payout for '" + key + "' must be a non-negative integer");
    }
    payouts.emplace_back(c, static_cast<std::uint32_t>(std::stoul(v)));
  }
  if (!kv.empty()) {
    throw ConfigError("unknown key '" + kv.begin()->first + "'");
  }
  return PayTable(std::move(name), game, payouts);
}

PayTable load_pay_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read pay table '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_pay_table(buf.str());
}

PayTable jacks_or_better_9_6() {
  using C = Category;
  return PayTable("jacks-or-better-9-6", Game::kJacksOrBetter,
                  {{C::kRoyalFlush, 800},
                   {C::kStraightFlush, 50},
                   {C::kFourOfAKind, 25},
                   {C::kFullHouse, 9},
                   {C::kFlush, 6},
                   {C::kStraight, 4},
                   {C::kThreeOfAKind, 3},
                   {C::kTwoPair, 2},
                   {C::kJacksOrBetter, 1},
                   {C::kOther, 0}});
}

PayTable jacks_or_better_8_5() {
  using C = Category;
  return PayTable("jacks-or-better-8-5", Game::kJacksOrBetter,
                  {{C::kRoyalFlush, 800},
                   {C::kStraightFlush, 50},
                   {C::kFourOfAKind, 25},
                   {C::kFullHouse, 8},
                   {C::kFlush, 5},
                   {C::kStraight, 4},
                   {C::kThreeOfAKind, 3},
                   {C::kTwoPair, 2},
                   {C::kJacksOrBetter, 1},
                   {C::kOther, 0}});
}

PayTable double_bonus_10_7() {
  using C = Category;
  return PayTable("double-bonus-10-7", Game::kDoubleBonus,
                  {{C::kRoyalFlush, 800},
                   {C::kStraightFlush, 50},
                   {C::kFourAces, 160},
                   {C::kFourTwosThroughFours, 80},
                   {C::kFourFivesThroughKings, 50},
                   {C::kFullHouse, 10},
                   {C::kFlush, 7},
                   {C::kStraight, 5},
                   {C::kThreeOfAKind, 3},
                   {C::kTwoPair, 1},
                   {C::kJacksOrBetter, 1},
                   {C::kOther, 0}});
}

std::vector<std::string> builtin_pay_table_names() {
  return {"jacks-or-better-9-6", "jacks-or-better-8-5", "double-bonus-10-7"};
}

PayTable resolve_pay_table(const std::string& name_or_path) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(name_or_path, ec)) return load_pay_table(name_or_path);
  if (name_or_path == "jacks-or-better-9-6" || name_or_path == "job96") {
    return jacks_or_better_9_6();
  }
  if (name_or_path == "jacks-or-better-8-5" || name_or_path == "job85") {
    return jacks_or_better_8_5();
  }
  if (name_or_path == "double-bonus-10-7" || name_or_path == "double-bonus") {
    return double_bonus_10_7();
  }
  throw ConfigError("no pay table file or builtin named '" + name_or_path + "'");
}

}  // namespace vpoker
