#include "vpoker/canonical.h"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace vpoker {

namespace {

std::array<SuitPermutation, 24> make_permutations() {
  std::array<SuitPermutation, 24> out{};
  SuitPermutation p{0, 1, 2, 3};
  std::size_t i = 0;
  do {
    out[i++] = p;
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

using PermutedIndex = std::array<std::array<std::int8_t, kDeckSize>, 24>;

PermutedIndex make_permuted_index() {
  PermutedIndex out{};
  const auto& perms = suit_permutations();
  for (std::size_t p = 0; p < perms.size(); ++p) {
    for (int i = 0; i < kDeckSize; ++i) {
      out[p][static_cast<std::size_t>(i)] = static_cast<std::int8_t>(
          apply(perms[p], Card::from_index(i)).index());
    }
  }
  return out;
}

const PermutedIndex& permuted_index() {
  static const PermutedIndex table = make_permuted_index();
  return table;
}

// Restricted-growth suit sequences of length 5 over at most four labels.
std::vector<std::array<std::int8_t, kHandSize>> first_use_sequences() {
  std::vector<std::array<std::int8_t, kHandSize>> out;
  std::array<std::int8_t, kHandSize> seq{};
  auto rec = [&](auto&& self, int pos, int max_label) -> void {
    if (pos == kHandSize) {
      out.push_back(seq);
      return;
    }
    for (int s = 0; s <= std::min(max_label + 1, kNumSuits - 1); ++s) {
      seq[static_cast<std::size_t>(pos)] = static_cast<std::int8_t>(s);
      self(self, pos + 1, std::max(max_label, s));
    }
  };
  seq[0] = 0;
  rec(rec, 1, 0);
  return out;
}

}  // namespace

const std::array<SuitPermutation, 24>& suit_permutations() {
  static const std::array<SuitPermutation, 24> perms = make_permutations();
  return perms;
}

Card apply(const SuitPermutation& perm, Card c) {
  return Card(c.denomination, perm[static_cast<std::size_t>(c.suit)]);
}

Shape shape_of(std::span<const Card> cards) {
  std::array<int, 15> counts{};
  for (Card c : cards) ++counts[static_cast<std::size_t>(c.denomination)];
  int pairs = 0;
  int top = 0;
  for (int n : counts) {
    pairs += n == 2;
    top = std::max(top, n);
  }
  switch (top) {
    case 4:
      return Shape::kFourOfAKind;
    case 3:
      return pairs ? Shape::kFullHouse : Shape::kThreeOfAKind;
    case 2:
      return pairs == 2 ? Shape::kTwoPairs : Shape::kOnePair;
    default:
      return Shape::kFiveDistinct;
  }
}

std::array<int, kHandSize> CanonicalHand::denominations() const {
  std::array<int, kHandSize> out{};
  for (std::size_t i = 0; i < kHandSize; ++i) out[i] = cards[i].denomination;
  return out;
}

Canonicalization canonicalize_with_source(const Hand& hand) {
  const auto& cards = hand.cards();
  std::array<int, 15> counts{};
  for (Card c : cards) ++counts[static_cast<std::size_t>(c.denomination)];

  // Shape order of positions; suits inside a denomination group get sorted
  // per relabeling below.
  std::array<std::uint8_t, kHandSize> order{};
  std::iota(order.begin(), order.end(), std::uint8_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    int ca = counts[static_cast<std::size_t>(cards[a].denomination)];
    int cb = counts[static_cast<std::size_t>(cards[b].denomination)];
    if (ca != cb) return ca > cb;
    return cards[a].denomination < cards[b].denomination;
  });

  std::array<std::int8_t, kHandSize> best_suits{};
  std::array<std::uint8_t, kHandSize> best_source{};
  bool have_best = false;
  for (const auto& perm : suit_permutations()) {
    std::array<std::int8_t, kHandSize> suits{};
    std::array<std::uint8_t, kHandSize> source = order;
    for (std::size_t i = 0; i < kHandSize; ++i) {
      suits[i] = perm[static_cast<std::size_t>(cards[order[i]].suit)];
    }
    // Insertion sort by suit within runs of equal denomination.
    for (std::size_t i = 1; i < kHandSize; ++i) {
      for (std::size_t j = i; j > 0; --j) {
        bool same = cards[source[j]].denomination ==
                    cards[source[j - 1]].denomination;
        if (!same || suits[j - 1] <= suits[j]) break;
        std::swap(suits[j - 1], suits[j]);
        std::swap(source[j - 1], source[j]);
      }
    }
    if (!have_best || suits < best_suits) {
      best_suits = suits;
      best_source = source;
      have_best = true;
    }
  }

  Canonicalization out;
  out.source = best_source;
  for (std::size_t i = 0; i < kHandSize; ++i) {
    out.canonical.cards[i] =
        Card(cards[best_source[i]].denomination, best_suits[i]);
    out.canonical.pattern[i] = static_cast<std::uint8_t>(best_suits[i] + 1);
  }
  return out;
}

CanonicalHand canonicalize(const Hand& hand) {
  return canonicalize_with_source(hand).canonical;
}

int orbit_size(const CanonicalHand& c) {
  std::array<CardSet, 24> images{};
  const auto& perms = suit_permutations();
  for (std::size_t p = 0; p < perms.size(); ++p) {
    CardSet s = 0;
    for (Card card : c.cards) s |= card_bit(apply(perms[p], card));
    images[p] = s;
  }
  std::sort(images.begin(), images.end());
  return static_cast<int>(std::unique(images.begin(), images.end()) -
                          images.begin());
}

CardSet canonical_key(CardSet cards) {
  const auto& table = permuted_index();
  std::array<int, kDeckSize> idx{};
  int n = 0;
  for (CardSet rest = cards; rest; rest &= rest - 1) {
    idx[static_cast<std::size_t>(n++)] = std::countr_zero(rest);
  }
  CardSet best = ~CardSet{0};
  for (const auto& row : table) {
    CardSet s = 0;
    for (int i = 0; i < n; ++i) {
      s |= CardSet{1} << row[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    }
    best = std::min(best, s);
  }
  return best;
}

CardSet canonical_key(std::span<const Card> cards) {
  CardSet s = 0;
  for (Card c : cards) s |= card_bit(c);
  return canonical_key(s);
}

std::vector<EquivClass> enumerate_classes() {
  static const auto sequences = first_use_sequences();
  std::vector<EquivClass> out;
  out.reserve(kNumClasses);

  auto emit_tuple = [&](Shape shape, std::array<int, kHandSize> denoms) {
    std::vector<CanonicalHand> found;
    for (const auto& seq : sequences) {
      std::array<Card, kHandSize> cards{};
      CardSet seen = 0;
      bool ok = true;
      for (std::size_t i = 0; i < kHandSize; ++i) {
        cards[i] = Card(denoms[i], seq[i]);
        if (seen & card_bit(cards[i])) ok = false;
        seen |= card_bit(cards[i]);
      }
      if (!ok) continue;
      found.push_back(canonicalize(Hand(cards)));
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.pattern < b.pattern; });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    for (const auto& c : found) {
      EquivClass ec;
      ec.canonical = c;
      ec.orbit_size = orbit_size(c);
      ec.class_index = static_cast<int>(out.size()) + 1;
      ec.shape = shape;
      out.push_back(ec);
    }
  };

  constexpr int lo = 2;
  constexpr int hi = kAce;
  for (int a = lo; a <= hi; ++a)
    for (int b = a + 1; b <= hi; ++b)
      for (int c = b + 1; c <= hi; ++c)
        for (int d = c + 1; d <= hi; ++d)
          for (int e = d + 1; e <= hi; ++e)
            emit_tuple(Shape::kFiveDistinct, {a, b, c, d, e});

  for (int p = lo; p <= hi; ++p)
    for (int x = lo; x <= hi; ++x)
      for (int y = x + 1; y <= hi; ++y)
        for (int z = y + 1; z <= hi; ++z) {
          if (x == p || y == p || z == p) continue;
          emit_tuple(Shape::kOnePair, {p, p, x, y, z});
        }

  for (int p = lo; p <= hi; ++p)
    for (int q = p + 1; q <= hi; ++q)
      for (int k = lo; k <= hi; ++k) {
        if (k == p || k == q) continue;
        emit_tuple(Shape::kTwoPairs, {p, p, q, q, k});
      }

  for (int t = lo; t <= hi; ++t)
    for (int x = lo; x <= hi; ++x)
      for (int y = x + 1; y <= hi; ++y) {
        if (x == t || y == t) continue;
        emit_tuple(Shape::kThreeOfAKind, {t, t, t, x, y});
      }

  for (int t = lo; t <= hi; ++t)
    for (int p = lo; p <= hi; ++p) {
      if (p == t) continue;
      emit_tuple(Shape::kFullHouse, {t, t, t, p, p});
    }

  for (int q = lo; q <= hi; ++q)
    for (int k = lo; k <= hi; ++k) {
      if (k == q) continue;
      emit_tuple(Shape::kFourOfAKind, {q, q, q, q, k});
    }

  return out;
}

}  // namespace vpoker
