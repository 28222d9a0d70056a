// Acceptance suite. Runs each criterion and prints exactly one PASS/FAIL
// line per criterion; the process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trib/counts.hpp"
#include "trib/kernel.hpp"
#include "trib/oracle.hpp"

namespace {

using trib::Int;

constexpr std::int64_t kOracleRange = 5000;

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool expect(bool condition, std::string& detail, const std::string& message) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

std::vector<std::int64_t> record_ends(const std::vector<trib::RepetitionRecord>& records) {
  std::vector<std::int64_t> ends;
  ends.reserve(records.size());
  for (const auto& r : records) ends.push_back(r.end_position);
  return ends;
}

Int count_at_most(const std::vector<std::int64_t>& ends, std::int64_t n) {
  return Int(std::upper_bound(ends.begin(), ends.end(), n) - ends.begin());
}

// Shared one-pass oracle scans over prefix(5000).
const std::vector<trib::RepetitionRecord>& square_records() {
  static const auto records = trib::brute_distinct_squares(kOracleRange);
  return records;
}
const std::vector<trib::RepetitionRecord>& cube_records() {
  static const auto records = trib::brute_distinct_cubes(kOracleRange);
  return records;
}

bool criterion_worked_examples(std::string& detail) {
  bool ok = true;
  ok &= expect(trib::count_squares(355).value == 190, detail,
               "A(355) = " + trib::count_squares(355).value.str() + ", expected 190");
  ok &= expect(trib::count_cubes(365).value == 11, detail,
               "B(365) = " + trib::count_cubes(365).value.str() + ", expected 11");
  if (!ok) return false;
  // timing: average over repeated queries, warm tables included above
  const int repetitions = 1000;
  const auto start = std::chrono::steady_clock::now();
  Int sink = 0;
  for (int i = 0; i < repetitions; ++i) {
    sink += trib::count_squares(355).value + trib::count_cubes(365).value;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  const double us_per_query =
      std::chrono::duration<double, std::micro>(elapsed).count() / (2.0 * repetitions);
  std::ostringstream timing;
  timing << "average query time " << us_per_query << " us, budget 1000 us";
  ok &= expect(us_per_query < 1000.0 && sink == repetitions * Int(201), detail,
               timing.str());
  return ok;
}

bool criterion_small_n_literals(std::string& detail) {
  bool ok = true;
  for (int n = 0; n <= 7; ++n) {
    ok &= expect(trib::count_squares(n).value == 0, detail,
                 "A(" + std::to_string(n) + ") != 0");
  }
  ok &= expect(trib::count_squares(8).value == 1, detail, "A(8) != 1");
  ok &= expect(trib::count_squares(9).value == 1, detail, "A(9) != 1");
  for (int n = 10; n <= 13; ++n) {
    ok &= expect(trib::count_squares(n).value == 2, detail,
                 "A(" + std::to_string(n) + ") != 2");
  }
  for (int n = 0; n <= 57; ++n) {
    ok &= expect(trib::count_cubes(n).value == 0, detail,
                 "B(" + std::to_string(n) + ") != 0");
  }
  return ok;
}

bool criterion_oracle_equivalence(std::string& detail) {
  const auto square_ends = record_ends(square_records());
  const auto cube_ends = record_ends(cube_records());
  for (std::int64_t n = 0; n <= kOracleRange; ++n) {
    const Int a = trib::count_squares(n).value;
    const Int a_oracle = count_at_most(square_ends, n);
    if (a != a_oracle) {
      detail = "A(" + std::to_string(n) + "): formula " + a.str() + ", oracle " +
               a_oracle.str();
      return false;
    }
    const Int b = trib::count_cubes(n).value;
    const Int b_oracle = count_at_most(cube_ends, n);
    if (b != b_oracle) {
      detail = "B(" + std::to_string(n) + "): formula " + b.str() + ", oracle " +
               b_oracle.str();
      return false;
    }
  }
  return true;
}

bool criterion_indicator_equivalence(std::string& detail) {
  std::set<std::int64_t> oracle_ends;
  for (const auto& r : square_records()) oracle_ends.insert(r.end_position);
  std::set<std::int64_t> indicator_support;
  for (std::int64_t n = 1; n <= kOracleRange; ++n) {
    if (trib::a_indicator(n) == 1) indicator_support.insert(n);
  }
  if (indicator_support != oracle_ends) {
    for (std::int64_t n = 1; n <= kOracleRange; ++n) {
      if (indicator_support.count(n) != oracle_ends.count(n)) {
        detail = "first disagreement at n = " + std::to_string(n) + " (indicator " +
                 std::to_string(indicator_support.count(n)) + ", oracle " +
                 std::to_string(oracle_ends.count(n)) + ")";
        break;
      }
    }
    return false;
  }
  std::set<std::int64_t> below14;
  for (const std::int64_t n : oracle_ends) {
    if (n < 14) below14.insert(n);
  }
  return expect(below14 == std::set<std::int64_t>{8, 10}, detail,
                "new-square ends below 14 differ from {8, 10}");
}

bool criterion_identity_suite(std::string& detail) {
  bool ok = true;
  Int t2 = 0, t1 = 1, t0 = 1;
  for (int m = 1; m <= 60 && ok; ++m) {
    const Int next = t0 + t1 + t2;
    ok &= expect(trib::tribonacci_number(m) == next, detail,
                 "t recurrence fails at m=" + std::to_string(m));
    t2 = t1;
    t1 = t0;
    t0 = next;
  }
  Int k2 = 0, k1 = 1, k0 = 1;
  for (int m = 3; m <= 60 && ok; ++m) {
    const Int next = k0 + k1 + k2 - 1;
    ok &= expect(trib::kernel_number(m) == next, detail,
                 "k recurrence fails at m=" + std::to_string(m));
    k2 = k1;
    k1 = k0;
    k0 = next;
  }
  for (int m = 3; m <= 60 && ok; ++m) {
    ok &= expect(trib::kernel_number(m) ==
                     trib::kernel_number(m - 3) + trib::tribonacci_number(m - 4),
                 detail, "k_m = k_{m-3} + t_{m-4} fails at m=" + std::to_string(m));
  }
  Int sum_t = 0;
  for (int m = 0; m <= 60 && ok; ++m) {
    sum_t += trib::tribonacci_number(m);
    ok &= expect(2 * sum_t == trib::tribonacci_number(m) +
                                  trib::tribonacci_number(m + 2) - 3,
                 detail, "t partial sums fail at m=" + std::to_string(m));
  }
  Int sum_k = 0;
  for (int m = 1; m <= 60 && ok; ++m) {
    sum_k += trib::kernel_number(m);
    ok &= expect(2 * sum_k == trib::tribonacci_number(m - 2) +
                                  trib::tribonacci_number(m - 3) + m,
                 detail, "k partial sums fail at m=" + std::to_string(m));
  }
  for (int m = 0; m <= 15 && ok; ++m) {
    const auto k4 = trib::to_int64(trib::kernel_number(m + 4));
    const auto k5 = trib::to_int64(trib::kernel_number(m + 5));
    const auto k6 = trib::to_int64(trib::kernel_number(m + 6));
    ok &= expect(trib::word_tm(m) + trib::word_tm(m + 1).slice(1, k4 - 2) ==
                     trib::word_tm(m + 2).slice(1, k5 - 2),
                 detail, "prefix identity (1) fails at m=" + std::to_string(m));
    ok &= expect(trib::word_tm(m + 3).slice(1, k6 - 2) ==
                     trib::word_tm(m + 1) + trib::word_tm(m) +
                         trib::word_tm(m + 1).slice(1, k4 - 2),
                 detail, "prefix identity (2) fails at m=" + std::to_string(m));
  }
  for (int m = 1; m <= 15 && ok; ++m) {
    const auto kernel = trib::kernel_word(m);
    ok &= expect(Int(kernel.size()) == trib::kernel_number(m) &&
                     trib::is_palindrome(kernel),
                 detail, "kernel palindromicity fails at m=" + std::to_string(m));
  }
  for (int m = 1; m <= 12 && ok; ++m) {
    const Int p = trib::first_end_position(m);
    ok &= expect(p == trib::kernel_number(m + 3) - 1, detail,
                 "P(K_m,1) = k_{m+3} - 1 fails at m=" + std::to_string(m));
    const auto occ =
        trib::find_occurrences(trib::kernel_word(m), trib::to_int64(2 * p));
    ok &= expect(!occ.empty() &&
                     Int(occ.front()) + trib::kernel_number(m) - 1 == p,
                 detail, "P(K_m,1) text scan fails at m=" + std::to_string(m));
  }
  return ok;
}

bool criterion_structural_suite(std::string& detail) {
  bool ok = true;
  for (int m = 4; m <= 30 && ok; ++m) {
    const auto c1 = trib::position_range(trib::SquareCase::case1, m);
    const auto c2 = trib::position_range(trib::SquareCase::case2, m);
    const auto c3 = trib::position_range(trib::SquareCase::case3, m);
    const auto next3 = trib::position_range(trib::SquareCase::case3, m + 1);
    ok &= expect(c1.count() == trib::kernel_number(m) - 1 &&
                     c2.count() == trib::kernel_number(m) - 1 &&
                     c3.count() == trib::tribonacci_number(m - 4) -
                                       trib::kernel_number(m - 3) + 1,
                 detail, "cardinalities fail at m=" + std::to_string(m));
    ok &= expect(c3.hi < c2.lo && c2.hi < c1.lo && c1.hi + 1 == next3.lo, detail,
                 "chain adjacency/disjointness fails at m=" + std::to_string(m));
  }
  for (int m = 4; m <= 30 && ok; ++m) {
    const auto b = trib::breakpoints(m);
    const Int a_alpha = trib::count_squares(b.alpha).value;
    const Int a_beta = trib::count_squares(b.beta).value;
    ok &= expect(a_alpha == trib::delta_cum(m - 1) + trib::delta_cum(m) +
                                trib::theta_cum(m) + 1,
                 detail, "A(alpha_m) fails at m=" + std::to_string(m));
    ok &= expect(a_beta == 2 * trib::delta_cum(m) + trib::theta_cum(m + 1), detail,
                 "A(beta_m) fails at m=" + std::to_string(m));
    ok &= expect(trib::count_squares(b.gamma).value == a_beta + 1, detail,
                 "A(gamma_m) fails at m=" + std::to_string(m));
    ok &= expect(trib::count_squares(b.theta).value ==
                     trib::count_squares(trib::breakpoints(m + 1).alpha).value - 1,
                 detail, "A(theta_m) fails at m=" + std::to_string(m));
  }
  return ok;
}

bool criterion_closed_form_cross_checks(std::string& detail) {
  bool ok = true;
  for (int m = 0; m <= 40 && ok; ++m) {
    const Int t_m = trib::tribonacci_number(m);
    ok &= expect(trib::count_squares_at_tm(m) == trib::count_squares(t_m).value,
                 detail, "A(t_m) mismatch at m=" + std::to_string(m));
    ok &= expect(trib::count_cubes_at_tm(m) == trib::count_cubes(t_m).value, detail,
                 "B(t_m) mismatch at m=" + std::to_string(m));
    if (m >= 3) {
      ok &= expect(trib::count_squares_at_tm_partial_sums(m) == trib::count_squares_at_tm(m),
                   detail, "partial-sum form mismatch at m=" + std::to_string(m));
    }
  }
  // the oracle confirms every m whose t_m fits in the scanned range
  const auto square_ends = record_ends(square_records());
  const auto cube_ends = record_ends(cube_records());
  for (int m = 0; trib::tribonacci_number(m) <= kOracleRange && ok; ++m) {
    const auto t_m = trib::to_int64(trib::tribonacci_number(m));
    ok &= expect(trib::count_squares_at_tm(m) == count_at_most(square_ends, t_m),
                 detail, "oracle A(t_m) mismatch at m=" + std::to_string(m));
    ok &= expect(trib::count_cubes_at_tm(m) == count_at_most(cube_ends, t_m),
                 detail, "oracle B(t_m) mismatch at m=" + std::to_string(m));
  }
  return ok;
}

bool criterion_length_classes(std::string& detail) {
  bool ok = true;
  const auto square_classes = trib::square_length_classes(kOracleRange);
  for (const auto& r : square_records()) {
    ok &= expect(square_classes.count(Int(2 * r.root_length)) == 1, detail,
                 "square total length " + std::to_string(2 * r.root_length) +
                     " not of the form 2 t_m or 2 t_m + 2 t_{m-1}");
    if (!ok) break;
  }
  const auto cube_classes = trib::cube_length_classes(kOracleRange);
  for (const auto& r : cube_records()) {
    ok &= expect(cube_classes.count(Int(3 * r.root_length)) == 1, detail,
                 "cube total length " + std::to_string(3 * r.root_length) +
                     " not of the form 3 t_m");
    if (!ok) break;
  }
  ok &= expect(trib::assert_no_fourth_power(kOracleRange), detail,
               "a fourth power occurs within prefix(5000)");
  return ok;
}

bool criterion_big_integers(std::string& detail) {
  const Int n100 = trib::tribonacci_number(100);
  const Int n99 = trib::tribonacci_number(99);
  const auto a100 = trib::count_squares(n100);
  const auto b100 = trib::count_cubes(n100);
  bool ok = true;
  ok &= expect(a100.value >= trib::count_squares(n99).value, detail,
               "A not monotone between t_99 and t_100");
  ok &= expect(b100.value >= trib::count_cubes(n99).value, detail,
               "B not monotone between t_99 and t_100");
  ok &= expect(a100.value == trib::count_squares_at_tm(100), detail,
               "A(t_100) disagrees with the closed form");
  ok &= expect(b100.value == trib::count_cubes_at_tm(100), detail,
               "B(t_100) disagrees with the closed form");
  ok &= expect(a100.value > Int(std::numeric_limits<std::int64_t>::max()), detail,
               "A(t_100) unexpectedly fits in 64 bits");
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 worked examples A(355)=190, B(365)=11 under 1 ms", criterion_worked_examples},
      {"2 small-n literal values of A and B", criterion_small_n_literals},
      {"3 oracle equivalence for all n <= 5000", criterion_oracle_equivalence},
      {"4 indicator support equals oracle new-square ends", criterion_indicator_equivalence},
      {"5 identity suite", criterion_identity_suite},
      {"6 structural suite", criterion_structural_suite},
      {"7 closed-form cross-checks", criterion_closed_form_cross_checks},
      {"8 length classes and no fourth powers", criterion_length_classes},
      {"9 big-integer soundness at t_100", criterion_big_integers},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (ok) {
      std::cout << "PASS criterion " << criterion.name << "\n";
    } else {
      ++failures;
      std::cout << "FAIL criterion " << criterion.name;
      if (!detail.empty()) std::cout << ": " << detail;
      std::cout << "\n";
    }
  }
  if (failures == 0) {
    std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
  } else {
    std::cout << "acceptance: " << failures << " criteria failed\n";
  }
  return failures == 0 ? 0 : 1;
}
