#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "trib/core.hpp"

namespace trib {

// Brute-force ground truth: enumerate the distinct squares / cubes of
// prefix(n) by scanning the text itself. This module shares only prefix(n)
// with the rest of the library; it knows nothing about kernels, length
// classes, or closed forms.

struct RepetitionRecord {
  std::int64_t root_length = 0;
  std::int64_t end_position = 0;  // 1-based end of the FIRST occurrence
  Word root_word;
};

enum class RepetitionKind { square, cube };

inline constexpr std::int64_t kDefaultOracleCap = 20000;

// One record per distinct root word w with ww (resp. www) occurring in
// prefix(n); sorted by end_position, then root_length. Every candidate is
// confirmed by direct letter comparison; fingerprints only prune.
std::vector<RepetitionRecord> brute_distinct_squares(
    std::int64_t n, std::int64_t cap = kDefaultOracleCap);
std::vector<RepetitionRecord> brute_distinct_cubes(
    std::int64_t n, std::int64_t cap = kDefaultOracleCap);

// End positions at which a new distinct square (resp. cube) first appears.
std::set<std::int64_t> new_repetition_positions(
    std::int64_t n, RepetitionKind kind, std::int64_t cap = kDefaultOracleCap);

// True iff no word w with wwww in prefix(n) exists.
bool assert_no_fourth_power(std::int64_t n, std::int64_t cap = kDefaultOracleCap);

}  // namespace trib
