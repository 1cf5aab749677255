#ifndef VPOKER_SOLVE_CSV_H_
#define VPOKER_SOLVE_CSV_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vpoker/expect.h"

namespace vpoker {

// One line of the class CSV:
//   index,orbit,d1..d5,s1..s5,h1..h5,scaled_ce,u|n
// Suits are first-use labels 1..4; h is 1 for a held card.
struct SolveRow {
  int class_index = 0;
  int orbit_size = 0;
  std::array<int, kHandSize> denominations{};
  std::array<int, kHandSize> suit_labels{};
  std::array<int, kHandSize> hold_flags{};
  ScaledCE scaled_ce = 0;
  char uniqueness = 'u';

  friend bool operator==(const SolveRow&, const SolveRow&) = default;
};

SolveRow to_solve_row(const HoldResult& result);
std::string format_solve_row(const SolveRow& row);  // no trailing newline
SolveRow parse_solve_row(std::string_view line);     // throws ConfigError

// All rows, LF-terminated, no header.
std::string solve_csv(std::span<const HoldResult> results);
std::vector<SolveRow> parse_solve_csv(std::string_view text);

}  // namespace vpoker

#endif  // VPOKER_SOLVE_CSV_H_
