#include "vpoker/expect.h"

#include <bit>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "vpoker/parallel.h"

namespace vpoker {

namespace {

// Visits every `r`-subset of `pool`, writing it into out[offset..offset+r).
template <typename Visit>
void for_each_combination(std::span<const Card> pool, int r,
                          std::array<Card, kHandSize>& out, int offset,
                          Visit&& visit) {
  const int n = static_cast<int>(pool.size());
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == r) {
      visit(out);
      return;
    }
    for (int i = start; i <= n - (r - depth); ++i) {
      out[static_cast<std::size_t>(offset + depth)] =
          pool[static_cast<std::size_t>(i)];
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
}

std::vector<Card> cards_outside(CardSet excluded) {
  std::vector<Card> out;
  for (int i = 0; i < kDeckSize; ++i) {
    if (!(excluded & (CardSet{1} << i))) out.push_back(Card::from_index(i));
  }
  return out;
}

std::uint64_t completion_total(CardSet fixed, const PayTable& table) {
  std::array<Card, kHandSize> hand{};
  int k = 0;
  for (CardSet rest = fixed; rest; rest &= rest - 1) {
    hand[static_cast<std::size_t>(k++)] = Card::from_index(std::countr_zero(rest));
  }
  const auto pool = cards_outside(fixed);
  std::uint64_t total = 0;
  for_each_combination(pool, kHandSize - k, hand, k, [&](const auto& h) {
    total += table.payout(std::span<const Card, kHandSize>(h));
  });
  return total;
}

CardSet subset_cards(std::span<const Card, kHandSize> cards, unsigned mask) {
  CardSet s = 0;
  for (int i = 0; i < kHandSize; ++i) {
    if (mask & (1u << i)) s |= card_bit(cards[static_cast<std::size_t>(i)]);
  }
  return s;
}

void check_hand(std::span<const Card, kHandSize> cards) {
  CardSet s = 0;
  for (Card c : cards) {
    if (!c.valid() || (s & card_bit(c))) {
      throw ContractError("hold evaluation needs five distinct valid cards");
    }
    s |= card_bit(c);
  }
}

// Signed inclusion-exclusion sum for one mask over precomputed subset totals.
std::uint64_t combine(const std::array<std::uint64_t, kNumMasks>& totals,
                      unsigned mask) {
  const unsigned discards = ~mask & 31u;
  std::int64_t sum = 0;
  // Enumerate every subset of the discards, including the empty one.
  for (unsigned sub = discards;; sub = (sub - 1) & discards) {
    auto t = static_cast<std::int64_t>(totals[mask | sub]);
    sum += (std::popcount(sub) & 1) ? -t : t;
    if (sub == 0) break;
  }
  if (sum < 0) throw std::logic_error("negative completion total");
  return static_cast<std::uint64_t>(sum);
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t draw_multiplier(int held) {
  static const std::array<std::uint64_t, kHandSize + 1> table = [] {
    std::array<std::uint64_t, kHandSize + 1> t{};
    for (int k = 0; k <= kHandSize; ++k) {
      std::uint64_t draws = binomial(kDeckSize - kHandSize, kHandSize - k);
      if (kScale % draws != 0) throw std::logic_error("scale not divisible");
      t[static_cast<std::size_t>(k)] = kScale / draws;
    }
    return t;
  }();
  return table.at(static_cast<std::size_t>(held));
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("64-bit overflow multiplying " +
                              std::to_string(a) + " by " + std::to_string(b));
  }
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("64-bit overflow adding " + std::to_string(a) +
                              " and " + std::to_string(b));
  }
  return r;
}

ScaledCE ce_naive(std::span<const Card, kHandSize> cards, HoldMask mask,
                  const PayTable& table) {
  check_hand(cards);
  std::array<Card, kHandSize> final_hand{};
  int k = 0;
  for (int i = 0; i < kHandSize; ++i) {
    if (mask.held(i)) final_hand[static_cast<std::size_t>(k++)] = cards[static_cast<std::size_t>(i)];
  }
  CardSet dealt = subset_cards(cards, 31u);
  const auto unseen = cards_outside(dealt);
  std::uint64_t total = 0;
  for_each_combination(unseen, kHandSize - k, final_hand, k, [&](const auto& h) {
    total = checked_add(total, table.payout(std::span<const Card, kHandSize>(h)));
  });
  return checked_mul(total, draw_multiplier(k));
}

std::array<ScaledCE, kNumMasks> ce_all_naive(std::span<const Card, kHandSize> cards,
                                             const PayTable& table) {
  std::array<ScaledCE, kNumMasks> out{};
  for (unsigned m = 0; m < kNumMasks; ++m) out[m] = ce_naive(cards, HoldMask(m), table);
  return out;
}

CompletionMemo::CompletionMemo(const PayTable& table) : table_(table) {
  totals_.emplace(CardSet{0}, completion_total(0, table_));
  std::array<int, 4> idx{};
  for (int k = 1; k <= 4; ++k) {
    // Walk all k-subsets of the deck in index order.
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
      CardSet s = 0;
      for (int i = 0; i < k; ++i) s |= CardSet{1} << idx[static_cast<std::size_t>(i)];
      CardSet key = canonical_key(s);
      if (!totals_.contains(key)) totals_.emplace(key, completion_total(key, table_));
      int pos = k - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == kDeckSize - k + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < k; ++i) {
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
      }
    }
  }
}

std::uint64_t CompletionMemo::total(CardSet cards) const {
  const int k = std::popcount(cards);
  if (k == kHandSize) {
    std::array<Card, kHandSize> hand{};
    int i = 0;
    for (CardSet rest = cards; rest; rest &= rest - 1) {
      hand[static_cast<std::size_t>(i++)] = Card::from_index(std::countr_zero(rest));
    }
    return table_.payout(std::span<const Card, kHandSize>(hand));
  }
  auto it = totals_.find(canonical_key(cards));
  if (it == totals_.end()) {
    throw std::logic_error("completion memo has no entry for a " +
                           std::to_string(k) + "-card set");
  }
  return it->second;
}

ScaledCE ce_fast(std::span<const Card, kHandSize> cards, HoldMask mask,
                 const PayTable& table, const CompletionMemo& memo) {
  if (!(memo.table() == table)) {
    throw ConfigError("completion memo was built for pay table '" +
                      memo.table().name() + "', not '" + table.name() + "'");
  }
  check_hand(cards);
  std::array<std::uint64_t, kNumMasks> totals{};
  const unsigned discards = ~unsigned{mask.bits} & 31u;
  for (unsigned sub = discards;; sub = (sub - 1) & discards) {
    totals[mask.bits | sub] = memo.total(subset_cards(cards, mask.bits | sub));
    if (sub == 0) break;
  }
  return checked_mul(combine(totals, mask.bits), draw_multiplier(mask.count()));
}

std::array<ScaledCE, kNumMasks> ce_all_fast(std::span<const Card, kHandSize> cards,
                                            const CompletionMemo& memo) {
  check_hand(cards);
  std::array<std::uint64_t, kNumMasks> totals{};
  for (unsigned m = 0; m < kNumMasks; ++m) totals[m] = memo.total(subset_cards(cards, m));
  std::array<ScaledCE, kNumMasks> out{};
  for (unsigned m = 0; m < kNumMasks; ++m) {
    out[m] = checked_mul(combine(totals, m), draw_multiplier(std::popcount(m)));
  }
  return out;
}

HoldResult make_result(const EquivClass& cls,
                       const std::array<ScaledCE, kNumMasks>& ce) {
  HoldResult r;
  r.cls = cls;
  r.ce = ce;
  ScaledCE best = 0;
  for (ScaledCE v : ce) best = std::max(best, v);
  int ties = 0;
  for (unsigned m = 0; m < kNumMasks; ++m) {
    if (ce[m] == best) {
      ++ties;
      r.best_mask = HoldMask(m);  // ascending scan leaves the largest mask
    }
  }
  r.unique = ties == 1;
  return r;
}

HoldResult solve_class(const EquivClass& cls, const PayTable& table,
                       Backend backend, const CompletionMemo* memo) {
  std::span<const Card, kHandSize> cards(cls.canonical.cards);
  if (backend == Backend::kNaive) return make_result(cls, ce_all_naive(cards, table));
  if (memo == nullptr) throw ContractError("fast backend needs a completion memo");
  if (!(memo->table() == table)) {
    throw ConfigError("completion memo was built for pay table '" +
                      memo->table().name() + "', not '" + table.name() + "'");
  }
  return make_result(cls, ce_all_fast(cards, *memo));
}

std::vector<HoldResult> solve_all(std::span<const EquivClass> classes,
                                  const PayTable& table,
                                  const SolveOptions& options,
                                  const CompletionMemo* memo) {
  std::optional<CompletionMemo> owned;
  if (options.backend == Backend::kFast && memo == nullptr) {
    owned.emplace(table);
    memo = &*owned;
  }
  std::vector<HoldResult> results(classes.size());
  parallel_for(classes.size(), options.workers, [&](std::size_t i) {
    results[i] = solve_class(classes[i], table, options.backend, memo);
  });
  return results;
}

std::vector<HoldResult> solve_all(const PayTable& table,
                                  const SolveOptions& options) {
  const auto classes = enumerate_classes();
  return solve_all(classes, table, options);
}

}  // namespace vpoker
