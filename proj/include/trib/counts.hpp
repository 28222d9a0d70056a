#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "trib/core.hpp"

namespace trib {

// Closed-form census of distinct squares and cubes in prefixes T[1,n].
// Squares whose double has kernel K_m fall into three cases; the end
// positions of their first occurrences form one contiguous interval per
// case and order, and those intervals chain as
//   <3,K_4>, <2,K_4>, <1,K_4>, <3,K_5>, <2,K_5>, <1,K_5>, ...

enum class SquareCase : int { case1 = 1, case2 = 2, case3 = 3 };

// Gap between consecutive kernel occurrences driving the case:
// case 1: t_m - k_m (m >= 3); case 2: t_{m-2} + t_{m-1} - k_m (m >= 2);
// case 3: t_{m-1} - k_m (m >= 1).
Int square_gap_length(SquareCase c, std::int64_t m);

// Root length |w| of the squares ww of the case: t_m, t_{m-2} + t_{m-1},
// t_{m-1} respectively; always gap + k_m.
Int square_root_length(SquareCase c, std::int64_t m);

// Inclusive interval of end positions P(ww,1) of first occurrences of the
// squares of one case whose double has kernel K_m (defined for m >= 4).
struct PositionRange {
  SquareCase case_id = SquareCase::case1;
  std::int64_t kernel_order = 0;
  Int lo;
  Int hi;

  Int count() const { return hi - lo + 1; }
};

PositionRange position_range(SquareCase c, std::int64_t m);  // m >= 4

// Band [alpha_m, alpha_{m+1}) of the piecewise count, m >= 4:
//   alpha_m = 2 t_{m-1}            first end position of a case-1 square
//   beta_m  = t_m + 2 t_{m-3} - 1  last of <1,K_m> u <3,K_{m+1}>
//   gamma_m = 2 t_m - t_{m-1}      first of <2,K_{m+1}>
//   theta_m = t_m + k_{m+3} - 2    last of <2,K_{m+1}>
struct Breakpoints {
  std::int64_t m = 0;
  Int alpha;
  Int beta;
  Int gamma;
  Int theta;
};

Breakpoints breakpoints(std::int64_t m);  // m >= 4

Int delta_cum(std::int64_t m);  // Delta_m = sum over 4..m of #<1,K_i>, m >= 3
Int theta_cum(std::int64_t m);  // Theta_m = sum over 4..m of #<3,K_i>, m >= 3

// 1 exactly when a new distinct square's first occurrence ends at n.
int a_indicator(const Int& n);  // n >= 1

enum class Regime {
  literal,   // small-n literal values
  rise1,     // [alpha_m, beta_m): count grows by 1 per position
  plateau1,  // [beta_m, gamma_m): count constant
  rise2,     // [gamma_m, theta_m): count grows by 1 per position
  plateau2,  // [theta_m, alpha_{m+1}): count constant
};

const char* regime_name(Regime r);

struct CountResult {
  Int n;
  Int value;
  Regime regime = Regime::literal;
  std::optional<std::int64_t> order;  // located band m, when one applies
};

CountResult count_squares(const Int& n);  // A(n), n >= 0
CountResult count_cubes(const Int& n);    // B(n), n >= 0; two regimes rise1/plateau1

Int count_squares_at_tm(std::int64_t m);       // A(t_m), m >= 0
Int count_squares_at_tm_partial_sums(std::int64_t m);  // equivalent partial-sum form, m >= 3
Int count_cubes_at_tm(std::int64_t m);         // B(t_m), m >= 0

// Admissible total lengths within [1, n_max]: squares have length 2 t_m or
// 2 t_m + 2 t_{m-1} (m >= 0), cubes 3 t_m (m >= 3).
std::set<Int> square_length_classes(const Int& n_max);
std::set<Int> cube_length_classes(const Int& n_max);

}  // namespace trib
