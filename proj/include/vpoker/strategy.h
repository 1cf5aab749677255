#ifndef VPOKER_STRATEGY_H_
#define VPOKER_STRATEGY_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vpoker/distribution.h"
#include "vpoker/expect.h"

namespace vpoker {

// A held subset that fits no row of a category table.
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Denominations as a bit set: bit d set for denomination d (2..14).
using DenomSet = std::uint16_t;
constexpr DenomSet denom_bit(int d) { return static_cast<DenomSet>(1u << d); }
DenomSet denom_range(int lo, int hi);

// Number of five-long straight windows (ace low or high) that contain every
// denomination in `held`. Duplicated denominations give 0.
int straights_count(std::span<const int> held);
// Number of denominations J, Q, K or A.
int high_count(std::span<const int> held);

struct PenaltyFlags {
  bool flush = false;     // a discard shares the held cards' suit
  bool straight = false;  // a discarded denomination fills a window the hold can still make
  bool nine = false;      // a 9 is discarded

  friend bool operator==(PenaltyFlags, PenaltyFlags) = default;
};

// Penalties incurred by discarding the cards outside `held`. The flush flag
// needs a single-suited hold; for a mixed-suit hold with `need_flush` set this
// throws ContractError.
PenaltyFlags penalty_flags(std::span<const Card, kHandSize> cards, HoldMask held,
                           bool need_flush = true);
inline PenaltyFlags penalty_flags(const Hand& hand, HoldMask held,
                                  bool need_flush = true) {
  return penalty_flags(std::span<const Card, kHandSize>(hand.cards()), held,
                       need_flush);
}

// What a held subset is. Draw kinds (royal, straight flush, flush, straight)
// are exclusive: a suited hold that is a royal draw is not a straight-flush
// draw, a straight-flush draw is not a flush draw, and a straight draw is
// never single-suited.
enum class HoldKind : std::uint8_t {
  kRoyal,          // n-RF
  kStraightFlush,  // n-SF
  kFlush,          // n-F
  kStraight,       // n-S
  kQuads,          // 5-4K
  kFullHouse,      // 5-FH
  kTrips,          // 3-3K
  kTwoPair,        // 4-2P
  kHighPair,       // 2-HP
  kLowPair,        // 2-LP
  kNone,           // draw five
};

std::string kind_label(HoldKind kind, int n);  // "4-RF", "5-4K", "none"

// A row of a hand pattern: a sequence of card slots, each allowing a set of
// denominations. Slots inside one brace group share a suit and distinct brace
// groups have distinct suits. An unbraced slot avoids every brace group's suit
// but may share a suit with another unbraced slot.
struct PatternSlot {
  DenomSet denoms = 0;
  int group = 0;
  bool braced = false;

  friend bool operator==(const PatternSlot&, const PatternSlot&) = default;
};
struct HandPattern {
  std::vector<PatternSlot> slots;

  // True when the cards selected by `among` can be assigned one-to-one to the
  // slots, honoring denominations and, if `check_suits`, suit grouping.
  bool match(std::span<const Card, kHandSize> cards, std::uint8_t among,
             bool check_suits = true) const;
  std::string str() const;

  friend bool operator==(const HandPattern&, const HandPattern&) = default;
};
HandPattern parse_hand_pattern(std::string_view text);

enum class Metric : std::uint8_t { kS, kH, kSPlusH };
enum class Compare : std::uint8_t { kEq, kGe, kLe };
struct MetricConstraint {
  Metric metric = Metric::kS;
  Compare op = Compare::kEq;
  int value = 0;

  friend bool operator==(const MetricConstraint&, const MetricConstraint&) = default;
};

// "if {TJ} fp": the hand holds a subset matching `pattern`, and keeping that
// subset instead would incur the listed penalties.
struct AltPenalty {
  HandPattern pattern;
  bool flush = false;
  bool nine = false;

  friend bool operator==(const AltPenalty&, const AltPenalty&) = default;
};

struct HoldCategory {
  HoldKind kind = HoldKind::kNone;
  int n = 0;
  std::vector<MetricConstraint> metrics;
  std::vector<HandPattern> held;        // alternatives for the held denominations
  bool no_straight_penalty = false;
  std::vector<AltPenalty> alt_penalties;
  std::vector<HandPattern> hand;        // alternatives the whole hand must match
  std::vector<HandPattern> exceptions;  // whole-hand patterns that disqualify

  // Does keeping exactly `held` cards of this hand fit the category?
  bool matches(std::span<const Card, kHandSize> cards, HoldMask held) const;
  std::string params() const;      // table-file params column
  std::string exceptions_text() const;

  friend bool operator==(const HoldCategory&, const HoldCategory&) = default;
};

struct RankRow {
  int rank = 0;
  HoldCategory category;

  std::string label() const;  // "4-S s=2 h=3"

  friend bool operator==(const RankRow&, const RankRow&) = default;
};

struct RankTable {
  std::string name;
  std::vector<RankRow> rows;

  const RankRow& row(int rank) const;

  friend bool operator==(const RankTable&, const RankTable&) = default;
};

// Line-based table format:
//   name = <table name>
//   <rank> | <kind> | <params> | <exceptions>
// '#' starts a comment. See data/rank_tables/ for the grammar in use.
RankTable parse_rank_table(std::string_view text);
std::string serialize_rank_table(const RankTable& table);
RankTable load_rank_table(const std::string& path);

// Built-in tables for full-pay Jacks or Better.
RankTable optimal_rank_table();      // "job-optimal": plays every hand optimally
RankTable preliminary_rank_table();  // "job-preliminary": categories ordered by first CE number
std::vector<std::string> builtin_rank_table_names();
// Loads `name_or_path` as a file when it exists, else as a builtin name.
RankTable resolve_rank_table(const std::string& name_or_path);

// Kind of a held subset, or nothing when the subset fits no kind (a pair
// kept with kickers, say).
std::optional<HoldKind> hold_kind(std::span<const Card, kHandSize> cards, HoldMask held);
inline std::optional<HoldKind> hold_kind(const Hand& hand, HoldMask held) {
  return hold_kind(std::span<const Card, kHandSize>(hand.cards()), held);
}

struct Classification {
  HoldMask mask;
  int rank = 0;  // the row that fired
};

// First row (in rank order) with a matching held subset; inside a row the
// lowest matching mask wins. Rank 0 with an empty hold when nothing matches.
Classification classify(std::span<const Card, kHandSize> cards, const RankTable& table);
inline Classification classify(const Hand& hand, const RankTable& table) {
  return classify(std::span<const Card, kHandSize>(hand.cards()), table);
}

struct Violation {
  EquivClass cls;
  int rank = 0;  // row that fired
  HoldMask table_mask;
  HoldMask best_mask;
  ScaledCE table_ce = 0;
  ScaledCE best_ce = 0;
};
struct VerificationReport {
  std::size_t classes_checked = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string describe(std::size_t max_lines = 50) const;
};

VerificationReport verify_table(const RankTable& table,
                                std::span<const HoldResult> results,
                                unsigned workers = 0);

// The unique row of `categories` whose category fits the held cards exactly.
// Throws ClassificationError if none fits and std::logic_error if several do.
const RankRow& categorize_hold(std::span<const Card, kHandSize> cards, HoldMask held,
                               const RankTable& categories);
inline const RankRow& categorize_hold(const Hand& hand, HoldMask held,
                                      const RankTable& categories) {
  return categorize_hold(std::span<const Card, kHandSize>(hand.cards()), held,
                         categories);
}

struct PreliminaryRow {
  int source_rank = 0;          // row number in the category table
  std::string label;
  std::vector<int> ce_numbers;  // ascending CE numbers whose optimum is this category
};

// Orders the categories of `categories` by the smallest CE number at which
// they are optimal. The last row collects garbage hands ("none").
std::vector<PreliminaryRow> derive_preliminary(std::span<const HoldResult> results,
                                               const CEDistribution& distribution,
                                               const RankTable& categories);

// "1-5, 7, 9-11"
std::string format_ranges(std::span<const int> numbers);

}  // namespace vpoker

#endif  // VPOKER_STRATEGY_H_
