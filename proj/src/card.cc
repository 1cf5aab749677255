#include "vpoker/card.h"

#include <algorithm>
#include <sstream>
#include <vector>

namespace vpoker {

namespace {
constexpr std::string_view kSuitChars = "cdhs";
constexpr std::string_view kDenomChars = "23456789TJQKA";
}  // namespace

char denomination_char(int denomination) {
  if (denomination < 2 || denomination > kAce) return '?';
  return kDenomChars[static_cast<std::size_t>(denomination - 2)];
}

int parse_denomination(char c) {
  if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  auto pos = kDenomChars.find(c);
  return pos == std::string_view::npos ? 0 : static_cast<int>(pos) + 2;
}

Card parse_card(std::string_view text) {
  std::string_view denom = text.substr(0, text.empty() ? 0 : text.size() - 1);
  if (text.size() < 2 || text.size() > 3) {
    throw ConfigError("bad card token '" + std::string(text) + "'");
  }
  int d = 0;
  if (denom == "10") {
    d = kTen;
  } else if (denom.size() == 1) {
    d = parse_denomination(denom[0]);
  }
  char sc = text.back();
  if (sc >= 'A' && sc <= 'Z') sc = static_cast<char>(sc - 'A' + 'a');
  auto s = kSuitChars.find(sc);
  if (d == 0 || s == std::string_view::npos) {
    throw ConfigError("bad card token '" + std::string(text) + "'");
  }
  return Card(d, static_cast<int>(s));
}

std::string to_string(Card c) {
  std::string out;
  out += denomination_char(c.denomination);
  out += c.suit >= 0 && c.suit < kNumSuits
             ? kSuitChars[static_cast<std::size_t>(c.suit)]
             : '?';
  return out;
}

Hand::Hand(std::array<Card, kHandSize> cards) : cards_(cards) {
  for (Card c : cards_) {
    if (!c.valid()) throw ContractError("invalid card in hand");
  }
  std::sort(cards_.begin(), cards_.end());
  if (std::adjacent_find(cards_.begin(), cards_.end()) != cards_.end()) {
    throw ContractError("duplicate card in hand " + to_string(*this));
  }
}

Hand::Hand(std::span<const Card> cards)
    : Hand([&] {
        if (cards.size() != kHandSize) {
          throw ContractError("hand needs exactly five cards");
        }
        std::array<Card, kHandSize> a{};
        std::copy(cards.begin(), cards.end(), a.begin());
        return a;
      }()) {}

CardSet Hand::card_set() const {
  CardSet s = 0;
  for (Card c : cards_) s |= card_bit(c);
  return s;
}

Hand parse_hand(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Card> cards;
  std::string token;
  while (in >> token) cards.push_back(parse_card(token));
  if (cards.size() != kHandSize) {
    throw ConfigError("expected five cards, got " +
                      std::to_string(cards.size()));
  }
  std::vector<Card> sorted = cards;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ConfigError("duplicate card in '" + std::string(text) + "'");
  }
  return Hand(std::span<const Card>(cards));
}

std::string to_string(std::span<const Card> cards) {
  std::string out;
  for (Card c : cards) {
    if (!out.empty()) out += ' ';
    out += to_string(c);
  }
  return out;
}

std::string to_string(const Hand& hand) {
  return to_string(std::span<const Card>(hand.cards()));
}

}  // namespace vpoker
