#ifndef VPOKER_DISTRIBUTION_H_
#define VPOKER_DISTRIBUTION_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vpoker/expect.h"

namespace vpoker {

using BigInt = boost::multiprecision::cpp_int;

// Reduced fraction with a positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(BigInt numerator, BigInt denominator);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  // Decimal expansion rounded half-up to `places` digits.
  std::string to_decimal(int places) const;
  std::string str() const;  // "num/den"
  double to_double() const;

  friend bool operator==(const ExactRational&, const ExactRational&) = default;

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;
};

// Scaled CE rendered as a decimal, rounded half-up.
std::string scaled_to_decimal(ScaledCE value, int places = 6);

struct CEEntry {
  ScaledCE value = 0;
  std::uint64_t classes = 0;
  std::array<std::uint64_t, 3> by_size{};  // orbit sizes 4, 12, 24
  std::uint64_t weight = 0;                // hands: 4*n4 + 12*n12 + 24*n24
  std::uint64_t garbage_classes = 0;       // classes whose optimum holds nothing

  bool all_garbage() const { return garbage_classes == classes; }
  bool none_garbage() const { return garbage_classes == 0; }
};

// Distinct optimal scaled CEs, strictly descending. Entry i has CE number i+1.
struct CEDistribution {
  std::vector<CEEntry> entries;

  std::size_t size() const { return entries.size(); }
  const CEEntry& by_ce_number(int n) const { return entries.at(static_cast<std::size_t>(n - 1)); }
  // 1-based CE number of a value, or 0 when absent.
  int ce_number(ScaledCE value) const;

  std::size_t held_values() const;     // values where some card is held
  std::size_t garbage_values() const;  // values where five cards are drawn
  std::uint64_t total_weight() const;
  std::uint64_t total_classes() const;
};

CEDistribution build_distribution(std::span<const HoldResult> results);

// Sum of weight * scaled value, before division.
BigInt weighted_sum(const CEDistribution& d);
ExactRational expected_return(const CEDistribution& d);

struct MedianReport {
  ExactRational median;         // value/kScale where cumulative weight first reaches half
  ScaledCE value = 0;
  int ce_number = 0;
  std::uint64_t weight_before = 0;     // cumulative weight of earlier entries
  std::uint64_t weight_through = 0;    // ... including this entry
  ScaledCE next_value = 0;             // the following entry's value (neighbor)
};
MedianReport median_report(const CEDistribution& d);
ExactRational median_ce(const CEDistribution& d);

std::uint64_t garbage_hands(std::span<const HoldResult> results);
ExactRational garbage_probability(std::span<const HoldResult> results);

struct CountCheck {
  int ce_number = 0;
  std::uint64_t expected_classes = 0;
  std::uint64_t actual_classes = 0;
  ScaledCE value = 0;
  bool ok() const { return expected_classes == actual_classes; }
};
struct CountCheckReport {
  std::vector<CountCheck> checks;
  bool ok() const;
  std::string describe() const;
};
// Class counts for CE numbers that can also be derived combinatorially for
// full-pay Jacks or Better: number 80 (four-card flushes) has 1,909 classes,
// number 83 (open-ended straights with three high cards) has 271.
CountCheckReport class_count_checks(const CEDistribution& d);
CountCheckReport class_count_checks(std::span<const HoldResult> results);

// Aligned text and CSV renderings.
std::string distribution_text(const CEDistribution& d);
std::string distribution_csv(const CEDistribution& d);

}  // namespace vpoker

#endif  // VPOKER_DISTRIBUTION_H_
