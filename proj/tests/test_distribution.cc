#include <algorithm>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "test_support.h"
#include "vpoker/distribution.h"

using namespace vpoker;
using vpoker::testing::double_bonus_results;
using vpoker::testing::job96_results;

namespace {

const CEDistribution& job96() {
  static const auto d = build_distribution(job96_results());
  return d;
}

// The reference prints whole values without a fraction.
std::string strip_zeros(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("exact rationals") {
  const ExactRational half(1, 2);
  CHECK(half.str() == "1/2");
  CHECK(half.to_decimal(0) == "1");
  CHECK(ExactRational(5, 8).to_decimal(2) == "0.63");
  CHECK(ExactRational(-5, 8).to_decimal(2) == "-0.63");
  CHECK(ExactRational(6, -4).str() == "-3/2");
  CHECK(ExactRational(1, 3).to_decimal(6) == "0.333333");
  CHECK(ExactRational(2, 3).to_decimal(6) == "0.666667");
  CHECK(ExactRational(7, 1).to_decimal(3) == "7.000");
  CHECK(ExactRational(10, 20) == half);
  CHECK_THROWS_AS(ExactRational(1, 0), ContractError);
  CHECK(scaled_to_decimal(6'135'756'000ull) == "800.000000");
  CHECK(scaled_to_decimal(2'741'080ull) == "0.357391");
}

TEST_CASE("full-pay jacks or better aggregates") {
  const auto& d = job96();
  CHECK(d.size() == 1153);
  CHECK(d.held_values() == 387);
  CHECK(d.garbage_values() == 766);
  CHECK(d.total_classes() == static_cast<std::uint64_t>(kNumClasses));
  CHECK(d.total_weight() == kNumHands);
  CHECK(weighted_sum(d) == BigInt("19842315923796"));
  const auto er = expected_return(d);
  CHECK(er == ExactRational(BigInt("1653526326983"), BigInt("1661102543100")));
  CHECK(er.to_decimal(6) == "0.995439");
  const auto median = median_report(d);
  CHECK(median.median == ExactRational(4452, 5405));
  CHECK(median.median.to_decimal(6) == "0.823682");
  CHECK(2 * median.weight_before < d.total_weight());
  CHECK(2 * median.weight_through >= d.total_weight());
  const auto garbage = garbage_probability(job96_results());
  CHECK(garbage == ExactRational(703, 21658));
  CHECK(garbage.to_decimal(7) == "0.0324591");
  CHECK(d.ce_number(d.by_ce_number(80).value) == 80);
  CHECK(d.ce_number(1) == 0);
}

TEST_CASE("every row matches the reference distribution") {
  std::ifstream in(VPOKER_GOLDEN_DISTRIBUTION);
  REQUIRE(in);
  std::string line;
  std::getline(in, line);
  CHECK(line == "ce_number,classes,size4,size12,size24,weight,scaled_ce,rounded");
  const auto& d = job96();
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string f;
    std::vector<std::string> v;
    while (std::getline(fields, f, ',')) v.push_back(f);
    REQUIRE(v.size() == 8);
    const int n = std::stoi(v[0]);
    REQUIRE(static_cast<std::size_t>(n) <= d.size());
    const auto& e = d.by_ce_number(n);
    INFO("CE number " << n);
    CHECK(std::to_string(e.classes) == v[1]);
    CHECK(std::to_string(e.by_size[0]) == v[2]);
    CHECK(std::to_string(e.by_size[1]) == v[3]);
    CHECK(std::to_string(e.by_size[2]) == v[4]);
    CHECK(std::to_string(e.weight) == v[5]);
    CHECK(std::to_string(e.value) == v[6]);
    CHECK(strip_zeros(scaled_to_decimal(e.value)) == strip_zeros(v[7]));
    ++rows;
  }
  CHECK(rows == 1153);
}

TEST_CASE("class counts at CE numbers 80 and 83") {
  const auto report = class_count_checks(job96());
  CHECK(report.ok());
  REQUIRE(report.checks.size() == 2);
  CHECK(report.checks[0].actual_classes == 1909);
  CHECK(report.checks[1].actual_classes == 271);
  CHECK(report.checks[1].value == 6'690'585ull);
}

TEST_CASE("double bonus aggregates") {
  const auto d = build_distribution(double_bonus_results());
  CHECK(d.size() == 773);
  CHECK(d.held_values() == 469);
  CHECK(expected_return(d).to_decimal(6) == "1.001725");
}

TEST_CASE("renderings") {
  const auto& d = job96();
  const auto csv = distribution_csv(d);
  CHECK(csv.rfind("scaled_ce,classes,size4,size12,size24,weight,ce\n6135756000,1,1,0,0,4,800.000000\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1154);
  const auto text = distribution_text(d);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1154);
  CHECK(text.find("0.357391") != std::string::npos);
}
