#include "doctest.h"
#include "test_support.h"
#include "vpoker/solve_csv.h"

using namespace vpoker;
using vpoker::testing::job96_results;

TEST_CASE("class CSV round trip") {
  const auto& results = job96_results();
  const std::string csv = solve_csv(results);
  CHECK(csv.find('\r') == std::string::npos);
  const auto rows = parse_solve_csv(csv);
  REQUIRE(rows.size() == static_cast<std::size_t>(kNumClasses));
  std::string again;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i] == to_solve_row(results[i]));
    again += format_solve_row(rows[i]) + "\n";
  }
  CHECK(again == csv);
}

TEST_CASE("class CSV rows") {
  const auto& results = job96_results();
  bool found_royal = false;
  for (const auto& r : results) {
    const auto row = format_solve_row(to_solve_row(r));
    if (r.cls.shape == Shape::kFourOfAKind) {
      CHECK(row.substr(row.size() - 12) == ",191742375,n");
    }
    if (row.find(",10,11,12,13,14,1,1,1,1,1,1,1,1,1,1,6135756000,u") != std::string::npos) {
      found_royal = true;
      CHECK(r.cls.orbit_size == 4);
    }
  }
  CHECK(found_royal);
  CHECK(to_solve_row(results.back()).denominations == std::array<int, kHandSize>{14, 14, 14, 14, 13});
}

TEST_CASE("malformed CSV rows") {
  const std::string good = "1,4,2,3,4,5,6,1,1,1,1,1,1,1,1,1,1,383484750,u";
  CHECK(format_solve_row(parse_solve_row(good)) == good);
  CHECK_THROWS_AS(parse_solve_row("1,4,2,3"), ConfigError);
  CHECK_THROWS_AS(parse_solve_row("1,4,2,3,4,5,6,1,1,1,1,1,1,1,1,1,1,383484750,x"), ConfigError);
  CHECK_THROWS_AS(parse_solve_row("1,4,2,3,4,5,6,1,1,1,1,5,1,1,1,1,1,383484750,u"), ConfigError);
  CHECK_THROWS_AS(parse_solve_row("1,4,2,3,4,5,6,1,1,1,1,1,1,1,1,1,2,383484750,u"), ConfigError);
  CHECK_THROWS_AS(parse_solve_row("1,4,2,3,4,5,6,1,1,1,1,1,1,1,1,1,1,-5,u"), ConfigError);
  CHECK_THROWS_AS(parse_solve_row("1,4,2,3,4,5,6,1,1,1,1,1,1,1,1,1,1,,u"), ConfigError);
}
