#ifndef VPOKER_EXPECT_H_
#define VPOKER_EXPECT_H_

#include <array>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "vpoker/canonical.h"
#include "vpoker/card.h"
#include "vpoker/pay_table.h"

namespace vpoker {

// Which of the five cards are kept; bit i refers to position i of the card
// sequence the mask was computed against.
struct HoldMask {
  std::uint8_t bits = 0;

  constexpr HoldMask() = default;
  constexpr explicit HoldMask(unsigned b) : bits(static_cast<std::uint8_t>(b & 31u)) {}

  static constexpr HoldMask all() { return HoldMask(31); }
  static constexpr HoldMask none() { return HoldMask(0); }

  constexpr bool held(int i) const { return (bits >> i) & 1u; }
  constexpr int count() const { return __builtin_popcount(bits); }

  friend constexpr bool operator==(HoldMask, HoldMask) = default;
  friend constexpr auto operator<=>(HoldMask, HoldMask) = default;
};
inline constexpr int kNumMasks = 32;

// Conditional expected return times kScale; always an exact integer.
using ScaledCE = std::uint64_t;
// lcm of C(47,k) for k = 1..5, which equals 5 * C(47,5).
inline constexpr std::uint64_t kScale = 7'669'695;

// kScale / C(47, 5 - k) for a hold of k cards.
std::uint64_t draw_multiplier(int held);
std::uint64_t binomial(int n, int k);

// Multiplication that aborts the computation on 64-bit overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

// Reference evaluator: walks all C(47, 5-k) replacement draws.
ScaledCE ce_naive(std::span<const Card, kHandSize> cards, HoldMask mask,
                  const PayTable& table);
inline ScaledCE ce_naive(const Hand& hand, HoldMask mask, const PayTable& table) {
  return ce_naive(std::span<const Card, kHandSize>(hand.cards()), mask, table);
}

// Payout totals T(X) = sum of payout over every five-card hand containing X,
// keyed by the orbit of X under suit relabeling. Covers |X| = 0..4; five-card
// sets are evaluated directly. Immutable after construction.
class CompletionMemo {
 public:
  explicit CompletionMemo(const PayTable& table);

  const PayTable& table() const { return table_; }
  std::uint64_t total(CardSet cards) const;
  std::size_t size() const { return totals_.size(); }

 private:
  PayTable table_;
  std::unordered_map<CardSet, std::uint64_t> totals_;
};

// Inclusion-exclusion over discards against the memo. Throws ConfigError when
// the memo was built for a different pay table.
ScaledCE ce_fast(std::span<const Card, kHandSize> cards, HoldMask mask,
                 const PayTable& table, const CompletionMemo& memo);
inline ScaledCE ce_fast(const Hand& hand, HoldMask mask, const PayTable& table,
                        const CompletionMemo& memo) {
  return ce_fast(std::span<const Card, kHandSize>(hand.cards()), mask, table,
                 memo);
}

// All 32 holds at once; shares the subset totals across masks.
std::array<ScaledCE, kNumMasks> ce_all_fast(std::span<const Card, kHandSize> cards,
                                            const CompletionMemo& memo);
std::array<ScaledCE, kNumMasks> ce_all_naive(std::span<const Card, kHandSize> cards,
                                             const PayTable& table);

enum class Backend : std::uint8_t { kNaive, kFast };

struct HoldResult {
  EquivClass cls;
  std::array<ScaledCE, kNumMasks> ce{};
  HoldMask best_mask;
  bool unique = true;

  ScaledCE best() const { return ce[best_mask.bits]; }
};

// Picks the maximum; among co-optimal masks the numerically largest wins.
HoldResult make_result(const EquivClass& cls,
                       const std::array<ScaledCE, kNumMasks>& ce);

// `memo` is required for Backend::kFast and ignored otherwise.
HoldResult solve_class(const EquivClass& cls, const PayTable& table,
                       Backend backend, const CompletionMemo* memo = nullptr);

struct SolveOptions {
  Backend backend = Backend::kFast;
  unsigned workers = 0;  // 0 = hardware concurrency
};

// One result per class, in the order of `classes`, independent of `workers`.
std::vector<HoldResult> solve_all(std::span<const EquivClass> classes,
                                  const PayTable& table,
                                  const SolveOptions& options = {},
                                  const CompletionMemo* memo = nullptr);
std::vector<HoldResult> solve_all(const PayTable& table,
                                  const SolveOptions& options = {});

}  // namespace vpoker

#endif  // VPOKER_EXPECT_H_
