#include "vpoker/strategy.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

namespace vpoker {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ConfigError("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

int denom_from(char c, std::string_view context) {
  const int d = parse_denomination(c);
  if (d == 0) {
    throw ConfigError("bad denomination '" + std::string(1, c) + "' in pattern '" +
                      std::string(context) + "'");
  }
  return d;
}

std::string denoms_text(DenomSet set) {
  const int bits = std::popcount(unsigned{set});
  if (set == denom_range(2, kAce)) return "*";
  if (bits == 1) return std::string(1, denomination_char(std::countr_zero(unsigned{set})));
  std::string out = "(";
  for (int d = 2; d <= kAce;) {
    if (!(set & denom_bit(d))) {
      ++d;
      continue;
    }
    int e = d;
    while (e + 1 <= kAce && (set & denom_bit(e + 1))) ++e;
    if (out.size() > 1) out += ",";
    out += denomination_char(d);
    if (e == d + 1) {
      out += ",";
      out += denomination_char(e);
    } else if (e > d + 1) {
      out += "-";
      out += denomination_char(e);
    }
    d = e + 1;
  }
  return out + ")";
}

std::string patterns_text(const std::vector<HandPattern>& ps) {
  std::string out;
  for (const auto& p : ps) {
    if (!out.empty()) out += ";";
    out += p.str();
  }
  return out;
}

std::vector<HandPattern> parse_patterns(std::string_view text) {
  std::vector<HandPattern> out;
  for (const auto& alt : split(text, ';')) out.push_back(parse_hand_pattern(alt));
  return out;
}

HoldKind parse_kind_suffix(std::string_view s) {
  static const std::pair<std::string_view, HoldKind> kinds[] = {
      {"RF", HoldKind::kRoyal},  {"SF", HoldKind::kStraightFlush},
      {"F", HoldKind::kFlush},   {"S", HoldKind::kStraight},
      {"4K", HoldKind::kQuads},  {"FH", HoldKind::kFullHouse},
      {"3K", HoldKind::kTrips},  {"2P", HoldKind::kTwoPair},
      {"HP", HoldKind::kHighPair}, {"LP", HoldKind::kLowPair},
  };
  for (auto [name, kind] : kinds) {
    if (s == name) return kind;
  }
  throw ConfigError("unknown hold kind '" + std::string(s) + "'");
}

void parse_param(std::string_view token, HoldCategory& cat) {
  const auto eq = token.find('=');
  auto op_at = token.find_first_of("<>=");
  if (eq == std::string_view::npos || op_at == std::string_view::npos) {
    throw ConfigError("bad parameter '" + std::string(token) + "'");
  }
  const std::string key(token.substr(0, op_at));
  const std::string op(token.substr(op_at, eq + 1 - op_at));
  const std::string_view value = token.substr(eq + 1);
  if (key == "s" || key == "h" || key == "s+h") {
    MetricConstraint m;
    m.metric = key == "s" ? Metric::kS : key == "h" ? Metric::kH : Metric::kSPlusH;
    if (op == "=") {
      m.op = Compare::kEq;
    } else if (op == ">=") {
      m.op = Compare::kGe;
    } else if (op == "<=") {
      m.op = Compare::kLe;
    } else {
      throw ConfigError("bad comparison in '" + std::string(token) + "'");
    }
    m.value = parse_int(value, "metric value");
    cat.metrics.push_back(m);
    return;
  }
  if (op != "=") throw ConfigError("bad parameter '" + std::string(token) + "'");
  if (key == "held") {
    cat.held = parse_patterns(value);
  } else if (key == "hand") {
    cat.hand = parse_patterns(value);
  } else if (key == "sp") {
    if (value != "no") throw ConfigError("sp takes only 'no'");
    cat.no_straight_penalty = true;
  } else if (key == "if") {
    const auto colon = value.rfind(':');
    if (colon == std::string_view::npos) {
      throw ConfigError("'if' needs pattern:penalties in '" + std::string(token) + "'");
    }
    AltPenalty alt;
    alt.pattern = parse_hand_pattern(value.substr(0, colon));
    for (const auto& flag : split(value.substr(colon + 1), '+')) {
      if (flag == "fp") {
        alt.flush = true;
      } else if (flag == "9sp") {
        alt.nine = true;
      } else {
        throw ConfigError("unknown penalty '" + flag + "'");
      }
    }
    cat.alt_penalties.push_back(std::move(alt));
  } else {
    throw ConfigError("unknown parameter '" + key + "'");
  }
}

}  // namespace

HandPattern parse_hand_pattern(std::string_view text) {
  HandPattern p;
  int next_group = 0;
  int open_group = -1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '{') {
      if (open_group >= 0) throw ConfigError("nested brace in '" + std::string(text) + "'");
      open_group = next_group++;
      continue;
    }
    if (c == '}') {
      if (open_group < 0) throw ConfigError("unmatched brace in '" + std::string(text) + "'");
      open_group = -1;
      continue;
    }
    PatternSlot slot;
    if (c == '*') {
      slot.denoms = denom_range(2, kAce);
    } else if (c == '(') {
      const auto close = text.find(')', i);
      if (close == std::string_view::npos) {
        throw ConfigError("unclosed '(' in '" + std::string(text) + "'");
      }
      for (const auto& part : split(text.substr(i + 1, close - i - 1), ',')) {
        if (part.size() == 1) {
          slot.denoms |= denom_bit(denom_from(part[0], text));
        } else if (part.size() == 3 && part[1] == '-') {
          const int lo = denom_from(part[0], text);
          const int hi = denom_from(part[2], text);
          if (lo > hi) throw ConfigError("empty range in '" + std::string(text) + "'");
          slot.denoms |= denom_range(lo, hi);
        } else {
          throw ConfigError("bad slot '" + part + "' in '" + std::string(text) + "'");
        }
      }
      i = close;
    } else {
      slot.denoms = denom_bit(denom_from(c, text));
    }
    slot.braced = open_group >= 0;
    slot.group = open_group >= 0 ? open_group : next_group++;
    p.slots.push_back(slot);
  }
  if (open_group >= 0) throw ConfigError("unclosed brace in '" + std::string(text) + "'");
  if (p.slots.empty() || p.slots.size() > kHandSize) {
    throw ConfigError("pattern '" + std::string(text) + "' needs 1 to 5 cards");
  }
  return p;
}

std::string HandPattern::str() const {
  std::string out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const auto& s = slots[i];
    const bool opens = s.braced && (i == 0 || !slots[i - 1].braced || slots[i - 1].group != s.group);
    const bool closes =
        s.braced && (i + 1 == slots.size() || !slots[i + 1].braced || slots[i + 1].group != s.group);
    if (opens) out += "{";
    out += denoms_text(s.denoms);
    if (closes) out += "}";
  }
  return out;
}

std::string HoldCategory::params() const {
  std::vector<std::string> tokens;
  for (const auto& m : metrics) {
    std::string t = m.metric == Metric::kS ? "s" : m.metric == Metric::kH ? "h" : "s+h";
    t += m.op == Compare::kEq ? "=" : m.op == Compare::kGe ? ">=" : "<=";
    tokens.push_back(t + std::to_string(m.value));
  }
  if (!held.empty()) tokens.push_back("held=" + patterns_text(held));
  if (no_straight_penalty) tokens.push_back("sp=no");
  for (const auto& alt : alt_penalties) {
    std::string t = "if=" + alt.pattern.str() + ":";
    if (alt.flush) t += "fp";
    if (alt.nine) t += alt.flush ? "+9sp" : "9sp";
    tokens.push_back(t);
  }
  if (!hand.empty()) tokens.push_back("hand=" + patterns_text(hand));
  std::string out;
  for (const auto& t : tokens) out += (out.empty() ? "" : " ") + t;
  return out;
}

std::string HoldCategory::exceptions_text() const { return patterns_text(exceptions); }

RankTable parse_rank_table(std::string_view text) {
  RankTable table;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    const auto where = " (line " + std::to_string(line_no) + ")";
    if (line.find('|') == std::string::npos) {
      const auto eq = line.find('=');
      if (eq == std::string::npos || trim(line.substr(0, eq)) != "name") {
        throw ConfigError("expected 'name = ...' or a table row" + where);
      }
      if (!table.name.empty()) throw ConfigError("repeated name" + where);
      table.name = trim(line.substr(eq + 1));
      continue;
    }
    const auto cols = split(line, '|');
    if (cols.size() != 4) throw ConfigError("a row needs 4 '|'-separated columns" + where);
    RankRow row;
    try {
      row.rank = parse_int(cols[0], "rank");
      if (cols[1] == "none") {
        row.category.kind = HoldKind::kNone;
        row.category.n = 0;
      } else {
        const auto dash = cols[1].find('-');
        if (dash == std::string::npos) throw ConfigError("bad kind '" + cols[1] + "'");
        row.category.n = parse_int(std::string_view(cols[1]).substr(0, dash), "card count");
        row.category.kind = parse_kind_suffix(std::string_view(cols[1]).substr(dash + 1));
        if (row.category.n < 1 || row.category.n > kHandSize) {
          throw ConfigError("card count out of range in '" + cols[1] + "'");
        }
      }
      std::istringstream params(cols[2]);
      std::string token;
      while (params >> token) parse_param(token, row.category);
      if (!cols[3].empty()) row.category.exceptions = parse_patterns(cols[3]);
    } catch (const ConfigError& e) {
      throw ConfigError(e.what() + where);
    }
    if (!table.rows.empty() && row.rank <= table.rows.back().rank) {
      throw ConfigError("ranks must increase" + where);
    }
    table.rows.push_back(std::move(row));
  }
  if (table.name.empty()) throw ConfigError("rank table has no name");
  if (table.rows.empty()) throw ConfigError("rank table '" + table.name + "' has no rows");
  return table;
}

std::string serialize_rank_table(const RankTable& table) {
  std::ostringstream out;
  out << "name = " << table.name << "\n";
  for (const auto& r : table.rows) {
    out << r.rank << " | " << kind_label(r.category.kind, r.category.n) << " | "
        << r.category.params() << " | " << r.category.exceptions_text() << "\n";
  }
  return out.str();
}

RankTable load_rank_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open rank table '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rank_table(buf.str());
}

RankTable resolve_rank_table(const std::string& name_or_path) {
  if (std::ifstream(name_or_path)) return load_rank_table(name_or_path);
  if (name_or_path == "job-optimal") return optimal_rank_table();
  if (name_or_path == "job-preliminary") return preliminary_rank_table();
  std::string names;
  for (const auto& n : builtin_rank_table_names()) names += " " + n;
  throw ConfigError("no rank table file or builtin named '" + name_or_path + "' (builtins:" +
                    names + ")");
}

std::vector<std::string> builtin_rank_table_names() {
  return {"job-optimal", "job-preliminary"};
}

}  // namespace vpoker
