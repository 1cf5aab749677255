#include "vpoker/solve_csv.h"

#include <charconv>
#include <sstream>

namespace vpoker {

namespace {

constexpr std::size_t kColumns = 19;

template <typename Int>
Int parse_field(std::string_view s, std::string_view line) {
  Int v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw ConfigError("bad CSV field '" + std::string(s) + "' in '" + std::string(line) + "'");
  }
  return v;
}

}  // namespace

SolveRow to_solve_row(const HoldResult& r) {
  SolveRow row;
  row.class_index = r.cls.class_index;
  row.orbit_size = r.cls.orbit_size;
  for (int i = 0; i < kHandSize; ++i) {
    const auto k = static_cast<std::size_t>(i);
    row.denominations[k] = r.cls.canonical.cards[k].denomination;
    row.suit_labels[k] = r.cls.canonical.pattern[k];
    row.hold_flags[k] = r.best_mask.held(i) ? 1 : 0;
  }
  row.scaled_ce = r.best();
  row.uniqueness = r.unique ? 'u' : 'n';
  return row;
}

std::string format_solve_row(const SolveRow& row) {
  std::string out = std::to_string(row.class_index) + "," + std::to_string(row.orbit_size);
  for (int d : row.denominations) out += "," + std::to_string(d);
  for (int s : row.suit_labels) out += "," + std::to_string(s);
  for (int h : row.hold_flags) out += "," + std::to_string(h);
  out += "," + std::to_string(row.scaled_ce) + "," + row.uniqueness;
  return out;
}

SolveRow parse_solve_row(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != kColumns) {
    throw ConfigError("expected 19 CSV fields in '" + std::string(line) + "'");
  }
  SolveRow row;
  row.class_index = parse_field<int>(fields[0], line);
  row.orbit_size = parse_field<int>(fields[1], line);
  for (std::size_t i = 0; i < kHandSize; ++i) {
    row.denominations[i] = parse_field<int>(fields[2 + i], line);
    row.suit_labels[i] = parse_field<int>(fields[7 + i], line);
    row.hold_flags[i] = parse_field<int>(fields[12 + i], line);
    if (row.denominations[i] < 2 || row.denominations[i] > kAce ||
        row.suit_labels[i] < 1 || row.suit_labels[i] > kNumSuits ||
        (row.hold_flags[i] != 0 && row.hold_flags[i] != 1)) {
      throw ConfigError("CSV field out of range in '" + std::string(line) + "'");
    }
  }
  row.scaled_ce = parse_field<ScaledCE>(fields[17], line);
  if (fields[18] != "u" && fields[18] != "n") {
    throw ConfigError("uniqueness flag must be u or n in '" + std::string(line) + "'");
  }
  row.uniqueness = fields[18][0];
  return row;
}

std::string solve_csv(std::span<const HoldResult> results) {
  std::string out;
  out.reserve(results.size() * 48);
  for (const auto& r : results) {
    out += format_solve_row(to_solve_row(r));
    out += '\n';
  }
  return out;
}

std::vector<SolveRow> parse_solve_csv(std::string_view text) {
  std::vector<SolveRow> rows;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    if (nl > start) rows.push_back(parse_solve_row(text.substr(start, nl - start)));
    start = nl + 1;
  }
  return rows;
}

}  // namespace vpoker
