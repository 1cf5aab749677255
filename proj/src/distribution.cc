#include "vpoker/distribution.h"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace vpoker {

namespace {

std::size_t size_slot(int orbit) {
  switch (orbit) {
    case 4:
      return 0;
    case 12:
      return 1;
    case 24:
      return 2;
    default:
      throw std::logic_error("orbit size " + std::to_string(orbit));
  }
}

}  // namespace

ExactRational::ExactRational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw ContractError("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string ExactRational::to_decimal(int places) const {
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = num_ < 0;
  BigInt mag = negative ? BigInt(-num_) : num_;
  BigInt scaled = (mag * scale * 2 + den_) / (den_ * 2);  // half-up
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string f = frac.str();
  if (places > 0) f.insert(0, static_cast<std::size_t>(places) - f.size(), '0');
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (places > 0) out += "." + f;
  return out;
}

std::string ExactRational::str() const { return num_.str() + "/" + den_.str(); }

double ExactRational::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string scaled_to_decimal(ScaledCE value, int places) {
  return ExactRational(BigInt(value), BigInt(kScale)).to_decimal(places);
}

int CEDistribution::ce_number(ScaledCE value) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), value,
      [](const CEEntry& e, ScaledCE v) { return e.value > v; });
  if (it == entries.end() || it->value != value) return 0;
  return static_cast<int>(it - entries.begin()) + 1;
}

std::size_t CEDistribution::held_values() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const auto& e) { return !e.all_garbage(); }));
}

std::size_t CEDistribution::garbage_values() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const auto& e) { return e.all_garbage(); }));
}

std::uint64_t CEDistribution::total_weight() const {
  std::uint64_t w = 0;
  for (const auto& e : entries) w += e.weight;
  return w;
}

std::uint64_t CEDistribution::total_classes() const {
  std::uint64_t n = 0;
  for (const auto& e : entries) n += e.classes;
  return n;
}

CEDistribution build_distribution(std::span<const HoldResult> results) {
  std::map<ScaledCE, CEEntry, std::greater<>> grouped;
  for (const auto& r : results) {
    CEEntry& e = grouped[r.best()];
    e.value = r.best();
    ++e.classes;
    ++e.by_size[size_slot(r.cls.orbit_size)];
    e.weight += static_cast<std::uint64_t>(r.cls.orbit_size);
    if (r.best_mask == HoldMask::none()) ++e.garbage_classes;
  }
  CEDistribution d;
  d.entries.reserve(grouped.size());
  for (auto& [value, e] : grouped) d.entries.push_back(e);
  return d;
}

BigInt weighted_sum(const CEDistribution& d) {
  BigInt sum = 0;
  for (const auto& e : d.entries) sum += BigInt(e.weight) * e.value;
  return sum;
}

ExactRational expected_return(const CEDistribution& d) {
  const std::uint64_t hands = d.total_weight();
  if (hands == 0) throw ContractError("empty distribution");
  return ExactRational(weighted_sum(d), BigInt(hands) * kScale);
}

MedianReport median_report(const CEDistribution& d) {
  const std::uint64_t total = d.total_weight();
  if (total == 0) throw ContractError("empty distribution");
  std::uint64_t cumulative = 0;
  for (std::size_t i = 0; i < d.entries.size(); ++i) {
    const auto& e = d.entries[i];
    MedianReport r;
    r.weight_before = cumulative;
    cumulative += e.weight;
    // First value whose cumulative weight reaches half of the total.
    if (2 * cumulative >= total) {
      r.weight_through = cumulative;
      r.value = e.value;
      r.ce_number = static_cast<int>(i) + 1;
      r.median = ExactRational(BigInt(e.value), BigInt(kScale));
      r.next_value = i + 1 < d.entries.size() ? d.entries[i + 1].value : e.value;
      return r;
    }
  }
  throw std::logic_error("median not reached");
}

ExactRational median_ce(const CEDistribution& d) { return median_report(d).median; }

std::uint64_t garbage_hands(std::span<const HoldResult> results) {
  std::uint64_t hands = 0;
  for (const auto& r : results) {
    if (r.best_mask == HoldMask::none()) hands += static_cast<std::uint64_t>(r.cls.orbit_size);
  }
  return hands;
}

ExactRational garbage_probability(std::span<const HoldResult> results) {
  std::uint64_t total = 0;
  for (const auto& r : results) total += static_cast<std::uint64_t>(r.cls.orbit_size);
  if (total == 0) throw ContractError("no results");
  return ExactRational(BigInt(garbage_hands(results)), BigInt(total));
}

bool CountCheckReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok(); });
}

std::string CountCheckReport::describe() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << "CE number " << c.ce_number << " (scaled " << c.value << "): "
        << c.actual_classes << " classes, expected " << c.expected_classes
        << (c.ok() ? " ok" : " MISMATCH") << "\n";
  }
  return out.str();
}

CountCheckReport class_count_checks(const CEDistribution& d) {
  CountCheckReport report;
  for (auto [number, expected] : {std::pair{80, 1909ull}, std::pair{83, 271ull}}) {
    CountCheck c;
    c.ce_number = number;
    c.expected_classes = expected;
    if (static_cast<std::size_t>(number) <= d.size()) {
      c.actual_classes = d.by_ce_number(number).classes;
      c.value = d.by_ce_number(number).value;
    }
    report.checks.push_back(c);
  }
  return report;
}

CountCheckReport class_count_checks(std::span<const HoldResult> results) {
  return class_count_checks(build_distribution(results));
}

std::string distribution_text(const CEDistribution& d) {
  std::ostringstream out;
  out << std::setw(5) << "no." << std::setw(8) << "classes" << "  "
      << std::setw(20) << "sizes (4,12,24)" << std::setw(9) << "weight"
      << std::setw(12) << "scaled CE" << std::setw(12) << "CE" << "\n";
  for (std::size_t i = 0; i < d.entries.size(); ++i) {
    const auto& e = d.entries[i];
    std::string sizes = "(" + std::to_string(e.by_size[0]) + "," +
                        std::to_string(e.by_size[1]) + "," +
                        std::to_string(e.by_size[2]) + ")";
    out << std::setw(5) << i + 1 << std::setw(8) << e.classes << "  "
        << std::setw(20) << sizes << std::setw(9) << e.weight << std::setw(12)
        << e.value << std::setw(12) << scaled_to_decimal(e.value) << "\n";
  }
  return out.str();
}

std::string distribution_csv(const CEDistribution& d) {
  std::ostringstream out;
  out << "scaled_ce,classes,size4,size12,size24,weight,ce\n";
  for (const auto& e : d.entries) {
    out << e.value << "," << e.classes << "," << e.by_size[0] << ","
        << e.by_size[1] << "," << e.by_size[2] << "," << e.weight << ","
        << scaled_to_decimal(e.value) << "\n";
  }
  return out.str();
}

}  // namespace vpoker
