#include "trib/oracle.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

#include "trib/counts.hpp"

using trib::Int;
using trib::RepetitionKind;

TEST_CASE("distinct squares: small prefixes") {
  CHECK(trib::brute_distinct_squares(0).empty());
  CHECK(trib::brute_distinct_squares(3).empty());
  CHECK(trib::brute_distinct_squares(7).empty());

  const auto at8 = trib::brute_distinct_squares(8);
  REQUIRE(at8.size() == 1);
  CHECK(at8[0].root_word.str() == "a");
  CHECK(at8[0].root_length == 1);
  CHECK(at8[0].end_position == 8);

  const auto at10 = trib::brute_distinct_squares(10);
  REQUIRE(at10.size() == 2);
  CHECK(at10[1].root_word.str() == "aba");
  CHECK(at10[1].end_position == 10);
}

TEST_CASE("distinct cubes: small prefixes and a worked example") {
  CHECK(trib::brute_distinct_cubes(57).empty());
  const auto at58 = trib::brute_distinct_cubes(58);
  REQUIRE(at58.size() == 1);
  CHECK(at58[0].root_length == 7);
  CHECK(at58[0].end_position == 58);
  CHECK(trib::brute_distinct_cubes(365).size() == 11);
}

TEST_CASE("new repetition positions") {
  CHECK(trib::new_repetition_positions(13, RepetitionKind::square) ==
        std::set<std::int64_t>{8, 10});
  CHECK(trib::new_repetition_positions(16, RepetitionKind::square) ==
        std::set<std::int64_t>{8, 10, 14, 15, 16});
  CHECK(trib::new_repetition_positions(60, RepetitionKind::cube) ==
        std::set<std::int64_t>{58});
}

TEST_CASE("records are sorted, verified squares, with minimal end positions") {
  const std::int64_t n = 400;
  const auto records = trib::brute_distinct_squares(n);
  const auto text = trib::prefix(n).str();
  std::set<std::string> roots;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (i > 0) CHECK(records[i - 1].end_position <= r.end_position);
    roots.insert(r.root_word.str());
    // the recorded occurrence really is that square
    const auto start = static_cast<std::size_t>(r.end_position - 2 * r.root_length);
    CHECK(text.compare(start, r.root_length, r.root_word.str()) == 0);
    CHECK(text.compare(start + r.root_length, r.root_length, r.root_word.str()) == 0);
    // and no earlier occurrence of it exists
    const std::string doubled = r.root_word.str() + r.root_word.str();
    CHECK(static_cast<std::int64_t>(text.find(doubled)) + 2 * r.root_length ==
          r.end_position);
  }
  CHECK(roots.size() == records.size());  // distinctness by the literal word
}

TEST_CASE("formula equivalence over a moderate range") {
  const std::int64_t n = 600;
  const auto squares = trib::brute_distinct_squares(n);
  const auto cubes = trib::brute_distinct_cubes(n);
  std::vector<std::int64_t> square_ends, cube_ends;
  for (const auto& r : squares) square_ends.push_back(r.end_position);
  for (const auto& r : cubes) cube_ends.push_back(r.end_position);
  for (std::int64_t i = 0; i <= n; ++i) {
    const auto at_most = [i](const std::vector<std::int64_t>& ends) {
      return std::upper_bound(ends.begin(), ends.end(), i) - ends.begin();
    };
    CHECK(Int(at_most(square_ends)) == trib::count_squares(i).value);
    CHECK(Int(at_most(cube_ends)) == trib::count_cubes(i).value);
  }

  // new-square ends are exactly the indicator's support
  std::set<std::int64_t> expected;
  for (std::int64_t i = 1; i <= n; ++i) {
    if (trib::a_indicator(i) == 1) expected.insert(i);
  }
  CHECK(trib::new_repetition_positions(n, RepetitionKind::square) == expected);
}

TEST_CASE("every repetition found has an admissible length") {
  const std::int64_t n = 600;
  const auto square_classes = trib::square_length_classes(n);
  for (const auto& r : trib::brute_distinct_squares(n)) {
    CHECK(square_classes.count(Int(2 * r.root_length)) == 1);
  }
  const auto cube_classes = trib::cube_length_classes(n);
  for (const auto& r : trib::brute_distinct_cubes(n)) {
    CHECK(cube_classes.count(Int(3 * r.root_length)) == 1);
  }
}

TEST_CASE("no fourth powers") {
  CHECK(trib::assert_no_fourth_power(1));
  CHECK(trib::assert_no_fourth_power(100));
  CHECK(trib::assert_no_fourth_power(2000));
}

TEST_CASE("oracle cap") {
  CHECK_THROWS_AS(trib::brute_distinct_squares(trib::kDefaultOracleCap + 1),
                  trib::resource_error);
  CHECK_THROWS_AS(trib::brute_distinct_squares(200, 150), trib::resource_error);
  CHECK(trib::brute_distinct_squares(100, 150).size() ==
        trib::brute_distinct_squares(100).size());
  CHECK_THROWS_AS(trib::brute_distinct_cubes(-1), std::domain_error);
}
