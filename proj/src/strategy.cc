#include "vpoker/strategy.h"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <sstream>

#include "vpoker/parallel.h"

namespace vpoker {

namespace {

// Window w covers denominations w..w+4, with 1 standing for the ace.
constexpr int kLowestWindow = 1;
constexpr int kHighestWindow = kTen;

bool window_contains(int low, int denom) {
  if (denom == kAce && low == kLowestWindow) return true;
  return denom >= low && denom <= low + 4;
}

struct HeldSummary {
  std::array<int, kHandSize> denoms{};
  int n = 0;
  bool distinct = true;
  bool suited = true;
  int suit = -1;
};

HeldSummary summarize(std::span<const Card, kHandSize> cards, HoldMask held) {
  HeldSummary s;
  DenomSet seen = 0;
  for (int i = 0; i < kHandSize; ++i) {
    if (!held.held(i)) continue;
    Card c = cards[static_cast<std::size_t>(i)];
    s.denoms[static_cast<std::size_t>(s.n++)] = c.denomination;
    if (seen & denom_bit(c.denomination)) s.distinct = false;
    seen |= denom_bit(c.denomination);
    if (s.suit < 0) s.suit = c.suit;
    s.suited &= c.suit == s.suit;
  }
  return s;
}

int metric_value(Metric m, int s, int h) {
  switch (m) {
    case Metric::kS:
      return s;
    case Metric::kH:
      return h;
    case Metric::kSPlusH:
      return s + h;
  }
  return 0;
}

bool compare(Compare op, int lhs, int rhs) {
  switch (op) {
    case Compare::kEq:
      return lhs == rhs;
    case Compare::kGe:
      return lhs >= rhs;
    case Compare::kLe:
      return lhs <= rhs;
  }
  return false;
}

// Masks grouped by number of held cards, each group ascending.
const std::array<std::vector<HoldMask>, kHandSize + 1>& masks_by_count() {
  static const auto table = [] {
    std::array<std::vector<HoldMask>, kHandSize + 1> t;
    for (unsigned m = 0; m < kNumMasks; ++m) {
      t[static_cast<std::size_t>(std::popcount(m))].push_back(HoldMask(m));
    }
    return t;
  }();
  return table;
}

}  // namespace

DenomSet denom_range(int lo, int hi) {
  DenomSet s = 0;
  for (int d = lo; d <= hi; ++d) s |= denom_bit(d);
  return s;
}

int straights_count(std::span<const int> held) {
  DenomSet seen = 0;
  for (int d : held) {
    if (seen & denom_bit(d)) return 0;
    seen |= denom_bit(d);
  }
  int count = 0;
  for (int low = kLowestWindow; low <= kHighestWindow; ++low) {
    bool all = std::all_of(held.begin(), held.end(),
                           [&](int d) { return window_contains(low, d); });
    count += all;
  }
  return count;
}

int high_count(std::span<const int> held) {
  return static_cast<int>(
      std::count_if(held.begin(), held.end(), [](int d) { return d >= kJack; }));
}

PenaltyFlags penalty_flags(std::span<const Card, kHandSize> cards, HoldMask held,
                           bool need_flush) {
  const HeldSummary s = summarize(cards, held);
  if (need_flush && s.n > 0 && !s.suited) {
    throw ContractError("flush penalty asked of a hold with mixed suits");
  }
  std::span<const int> held_denoms(s.denoms.data(), static_cast<std::size_t>(s.n));
  std::vector<int> windows;
  if (s.n > 0 && s.distinct) {
    for (int low = kLowestWindow; low <= kHighestWindow; ++low) {
      if (std::all_of(held_denoms.begin(), held_denoms.end(),
                      [&](int d) { return window_contains(low, d); })) {
        windows.push_back(low);
      }
    }
  }
  PenaltyFlags f;
  for (int i = 0; i < kHandSize; ++i) {
    if (held.held(i)) continue;
    Card c = cards[static_cast<std::size_t>(i)];
    if (s.n > 0 && s.suited && c.suit == s.suit) f.flush = true;
    if (c.denomination == 9) f.nine = true;
    bool is_held_denom = std::find(held_denoms.begin(), held_denoms.end(),
                                   c.denomination) != held_denoms.end();
    if (!is_held_denom) {
      for (int low : windows) {
        if (window_contains(low, c.denomination)) f.straight = true;
      }
    }
  }
  return f;
}

std::string kind_label(HoldKind kind, int n) {
  std::string suffix;
  switch (kind) {
    case HoldKind::kRoyal:
      suffix = "RF";
      break;
    case HoldKind::kStraightFlush:
      suffix = "SF";
      break;
    case HoldKind::kFlush:
      suffix = "F";
      break;
    case HoldKind::kStraight:
      suffix = "S";
      break;
    case HoldKind::kQuads:
      suffix = "4K";
      break;
    case HoldKind::kFullHouse:
      suffix = "FH";
      break;
    case HoldKind::kTrips:
      suffix = "3K";
      break;
    case HoldKind::kTwoPair:
      suffix = "2P";
      break;
    case HoldKind::kHighPair:
      suffix = "HP";
      break;
    case HoldKind::kLowPair:
      suffix = "LP";
      break;
    case HoldKind::kNone:
      return "none";
  }
  return std::to_string(n) + "-" + suffix;
}

std::optional<HoldKind> hold_kind(std::span<const Card, kHandSize> cards,
                                  HoldMask held) {
  const HeldSummary s = summarize(cards, held);
  if (s.n == 0) return HoldKind::kNone;
  std::span<const int> denoms(s.denoms.data(), static_cast<std::size_t>(s.n));
  if (!s.distinct) {
    std::array<int, 15> counts{};
    int top = 0;
    int pairs = 0;
    for (int d : denoms) top = std::max(top, ++counts[static_cast<std::size_t>(d)]);
    for (int c : counts) pairs += c == 2;
    if (s.n == 5 && top == 4) return HoldKind::kQuads;
    if (s.n == 5 && top == 3 && pairs == 1) return HoldKind::kFullHouse;
    if (s.n == 4 && pairs == 2) return HoldKind::kTwoPair;
    if (s.n == 3 && top == 3) return HoldKind::kTrips;
    if (s.n == 2) return denoms[0] >= kJack ? HoldKind::kHighPair : HoldKind::kLowPair;
    return std::nullopt;
  }
  const int straights = straights_count(denoms);
  if (s.suited) {
    if (std::all_of(denoms.begin(), denoms.end(), [](int d) { return d >= kTen; })) {
      return HoldKind::kRoyal;
    }
    return straights > 0 ? HoldKind::kStraightFlush : HoldKind::kFlush;
  }
  if (straights > 0) return HoldKind::kStraight;
  return std::nullopt;
}

bool HandPattern::match(std::span<const Card, kHandSize> cards, std::uint8_t among,
                        bool check_suits) const {
  if (static_cast<int>(slots.size()) != std::popcount(unsigned{among})) return false;
  std::array<int, kHandSize> group_suit{-1, -1, -1, -1, -1};
  std::array<int, kNumSuits> suit_group{-1, -1, -1, -1};
  std::array<int, kNumSuits> loose{};  // unbraced cards per suit
  auto rec = [&](auto&& self, std::size_t slot, unsigned free) -> bool {
    if (slot == slots.size()) return true;
    const PatternSlot& ps = slots[slot];
    const auto g = static_cast<std::size_t>(ps.group);
    for (int i = 0; i < kHandSize; ++i) {
      if (!(free & (1u << i))) continue;
      Card c = cards[static_cast<std::size_t>(i)];
      if (!(ps.denoms & denom_bit(c.denomination))) continue;
      const auto suit = static_cast<std::size_t>(c.suit);
      bool bound_here = false;
      if (check_suits && ps.braced) {
        if (group_suit[g] >= 0 && group_suit[g] != c.suit) continue;
        if (suit_group[suit] >= 0 && suit_group[suit] != ps.group) continue;
        if (loose[suit] > 0) continue;
        if (group_suit[g] < 0) {
          group_suit[g] = c.suit;
          suit_group[suit] = ps.group;
          bound_here = true;
        }
      } else if (check_suits) {
        if (suit_group[suit] >= 0) continue;
        ++loose[suit];
      }
      if (self(self, slot + 1, free & ~(1u << i))) return true;
      if (bound_here) {
        group_suit[g] = -1;
        suit_group[suit] = -1;
      }
      if (check_suits && !ps.braced) --loose[suit];
    }
    return false;
  };
  return rec(rec, 0, among);
}

bool HoldCategory::matches(std::span<const Card, kHandSize> cards, HoldMask mask) const {
  if (mask.count() != n) return false;
  const auto k = hold_kind(cards, mask);
  if (!k || *k != kind) return false;
  if (!metrics.empty()) {
    const HeldSummary s = summarize(cards, mask);
    std::span<const int> denoms(s.denoms.data(), static_cast<std::size_t>(s.n));
    const int straights = straights_count(denoms);
    const int highs = high_count(denoms);
    for (const auto& m : metrics) {
      if (!compare(m.op, metric_value(m.metric, straights, highs), m.value)) return false;
    }
  }
  if (!held.empty() &&
      std::none_of(held.begin(), held.end(), [&](const HandPattern& p) {
        return p.match(cards, mask.bits, /*check_suits=*/false);
      })) {
    return false;
  }
  if (no_straight_penalty && penalty_flags(cards, mask, false).straight) return false;
  for (const auto& alt : alt_penalties) {
    bool found = false;
    for (HoldMask m : masks_by_count()[alt.pattern.slots.size()]) {
      if (!alt.pattern.match(cards, m.bits)) continue;
      PenaltyFlags f = penalty_flags(cards, m, false);
      if ((!alt.flush || f.flush) && (!alt.nine || f.nine)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  if (!hand.empty() && std::none_of(hand.begin(), hand.end(), [&](const HandPattern& p) {
        return p.match(cards, 31);
      })) {
    return false;
  }
  return std::none_of(exceptions.begin(), exceptions.end(),
                      [&](const HandPattern& p) { return p.match(cards, 31); });
}

std::string RankRow::label() const {
  std::string p = category.params();
  std::string out = kind_label(category.kind, category.n);
  if (!p.empty()) out += " " + p;
  std::string e = category.exceptions_text();
  if (!e.empty()) out += " except " + e;
  return out;
}

const RankRow& RankTable::row(int rank) const {
  for (const auto& r : rows) {
    if (r.rank == rank) return r;
  }
  throw ContractError("table '" + name + "' has no rank " + std::to_string(rank));
}

Classification classify(std::span<const Card, kHandSize> cards, const RankTable& table) {
  for (const auto& row : table.rows) {
    const int n = row.category.n;
    if (n < 0 || n > kHandSize) continue;
    for (HoldMask m : masks_by_count()[static_cast<std::size_t>(n)]) {
      if (row.category.matches(cards, m)) return {m, row.rank};
    }
  }
  // A table without a matching row draws five.
  return {HoldMask::none(), 0};
}

std::string VerificationReport::describe(std::size_t max_lines) const {
  std::ostringstream out;
  out << classes_checked << " classes checked, " << violations.size()
      << " violations\n";
  std::size_t shown = 0;
  for (const auto& v : violations) {
    if (shown++ == max_lines) {
      out << "... " << violations.size() - max_lines << " more\n";
      break;
    }
    const auto& cards = v.cls.canonical.cards;
    auto held = [&](HoldMask m) {
      std::string s;
      for (int i = 0; i < kHandSize; ++i) {
        if (!m.held(i)) continue;
        if (!s.empty()) s += ' ';
        s += to_string(cards[static_cast<std::size_t>(i)]);
      }
      return s.empty() ? std::string("-") : s;
    };
    out << "class " << v.cls.class_index << " [" << to_string(std::span<const Card>(cards))
        << "] rank " << v.rank << " holds [" << held(v.table_mask) << "] "
        << v.table_ce << " (" << scaled_to_decimal(v.table_ce) << "), optimum ["
        << held(v.best_mask) << "] " << v.best_ce << " (" << scaled_to_decimal(v.best_ce)
        << ")\n";
  }
  return out.str();
}

VerificationReport verify_table(const RankTable& table,
                                std::span<const HoldResult> results,
                                unsigned workers) {
  std::vector<std::optional<Violation>> found(results.size());
  parallel_for(results.size(), workers, [&](std::size_t i) {
    const HoldResult& r = results[i];
    std::span<const Card, kHandSize> cards(r.cls.canonical.cards);
    Classification c = classify(cards, table);
    if (r.ce[c.mask.bits] != r.best()) {
      found[i] = Violation{r.cls, c.rank, c.mask, r.best_mask, r.ce[c.mask.bits], r.best()};
    }
  });
  VerificationReport report;
  report.classes_checked = results.size();
  for (auto& v : found) {
    if (v) report.violations.push_back(std::move(*v));
  }
  return report;
}

const RankRow& categorize_hold(std::span<const Card, kHandSize> cards, HoldMask held,
                               const RankTable& categories) {
  const RankRow* hit = nullptr;
  for (const auto& row : categories.rows) {
    if (!row.category.matches(cards, held)) continue;
    if (hit != nullptr) {
      throw std::logic_error("held cards fit both '" + hit->label() + "' and '" +
                             row.label() + "'");
    }
    hit = &row;
  }
  if (hit == nullptr) {
    std::string held_text;
    for (int i = 0; i < kHandSize; ++i) {
      if (held.held(i)) held_text += to_string(cards[static_cast<std::size_t>(i)]) + " ";
    }
    throw ClassificationError("no category of '" + categories.name + "' fits held [" +
                              held_text + "] of " + to_string(std::span<const Card>(cards)));
  }
  return *hit;
}

std::vector<PreliminaryRow> derive_preliminary(std::span<const HoldResult> results,
                                               const CEDistribution& distribution,
                                               const RankTable& categories) {
  std::map<int, std::vector<int>> numbers_by_rank;
  for (const auto& r : results) {
    std::span<const Card, kHandSize> cards(r.cls.canonical.cards);
    const RankRow& row = categorize_hold(cards, r.best_mask, categories);
    const int number = distribution.ce_number(r.best());
    if (number == 0) throw ContractError("result missing from distribution");
    numbers_by_rank[row.rank].push_back(number);
  }
  std::vector<PreliminaryRow> out;
  for (auto& [rank, numbers] : numbers_by_rank) {
    std::sort(numbers.begin(), numbers.end());
    numbers.erase(std::unique(numbers.begin(), numbers.end()), numbers.end());
    out.push_back({rank, categories.row(rank).label(), numbers});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.ce_numbers.front() < b.ce_numbers.front();
  });
  return out;
}

std::string format_ranges(std::span<const int> numbers) {
  std::string out;
  for (std::size_t i = 0; i < numbers.size();) {
    std::size_t j = i;
    while (j + 1 < numbers.size() && numbers[j + 1] == numbers[j] + 1) ++j;
    if (!out.empty()) out += ", ";
    out += std::to_string(numbers[i]);
    if (j > i) out += "-" + std::to_string(numbers[j]);
    i = j + 1;
  }
  return out;
}

}  // namespace vpoker
