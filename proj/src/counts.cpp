#include "trib/counts.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <vector>

namespace trib {

namespace {

Int t(std::int64_t m) { return tribonacci_number(m); }
Int k(std::int64_t m) { return kernel_number(m); }

// Band locator shared by squares (bands start at alpha_m = 2 t_{m-1},
// m >= 4) and cubes (bands start at t_{m-1} + 2 t_{m-4}, m >= 7). The
// start positions are memoized; the vector only ever grows.
class BandTable {
 public:
  BandTable(std::int64_t first_order, Int (*start_of)(std::int64_t))
      : first_order_(first_order), start_of_(start_of) {}

  // Largest m with start(m) <= n. Requires n >= start(first_order).
  std::int64_t locate(const Int& n) {
    std::lock_guard lock(mu_);
    if (starts_.empty()) starts_.push_back(start_of_(first_order_));
    while (starts_.back() <= n) {
      starts_.push_back(start_of_(first_order_ +
                                  static_cast<std::int64_t>(starts_.size())));
    }
    const auto it = std::upper_bound(starts_.begin(), starts_.end(), n);
    return first_order_ + (it - starts_.begin()) - 1;
  }

 private:
  std::mutex mu_;
  std::int64_t first_order_;
  Int (*start_of_)(std::int64_t);
  std::vector<Int> starts_;
};

std::int64_t locate_square_band(const Int& n) {  // n >= 14
  static BandTable table(4, [](std::int64_t m) { return Int(2 * t(m - 1)); });
  return table.locate(n);
}

std::int64_t locate_cube_band(const Int& n) {  // n >= 58
  static BandTable table(7, [](std::int64_t m) { return Int(t(m - 1) + 2 * t(m - 4)); });
  return table.locate(n);
}

// Partial sums d_i = t_0 + ... + t_{i-1} = (t_{i+1} + t_{i-1} - 3) / 2,
// extended downwards by d_{-1} = d_{-2} = d_{-3} = -1.
Int partial_sum_d(std::int64_t i) {
  if (i < -3) throw std::domain_error("partial_sum_d: index must be >= -3");
  if (i < 0) return -1;
  if (i == 0) return 0;
  return exact_half(t(i + 1) + t(i - 1) - 3);
}

}  // namespace

Int square_gap_length(SquareCase c, std::int64_t m) {
  switch (c) {
    case SquareCase::case1:
      if (m < 3) throw std::domain_error("square_gap_length: case 1 needs m >= 3");
      return t(m) - k(m);
    case SquareCase::case2:
      if (m < 2) throw std::domain_error("square_gap_length: case 2 needs m >= 2");
      return t(m - 2) + t(m - 1) - k(m);
    default:
      if (m < 1) throw std::domain_error("square_gap_length: case 3 needs m >= 1");
      return t(m - 1) - k(m);
  }
}

Int square_root_length(SquareCase c, std::int64_t m) {
  return square_gap_length(c, m) + k(m);
}

PositionRange position_range(SquareCase c, std::int64_t m) {
  if (m < 4) throw std::domain_error("position_range: the sets are defined for m >= 4");
  PositionRange r;
  r.case_id = c;
  r.kernel_order = m;
  Int expected;
  switch (c) {
    case SquareCase::case1:
      r.lo = 2 * t(m - 1);
      r.hi = k(m + 4) - 2;
      expected = k(m) - 1;
      break;
    case SquareCase::case2:
      r.lo = 2 * t(m - 1) - t(m - 2);
      r.hi = t(m - 1) + k(m + 2) - 2;
      expected = k(m) - 1;
      break;
    default:
      r.lo = k(m + 3) - 1;
      r.hi = t(m - 1) + 2 * t(m - 4) - 1;
      expected = t(m - 4) - k(m - 3) + 1;
      break;
  }
  if (r.count() != expected) {
    throw std::logic_error("position_range: interval width disagrees with its cardinality at m = " +
                           std::to_string(m));
  }
  return r;
}

Breakpoints breakpoints(std::int64_t m) {
  if (m < 4) throw std::domain_error("breakpoints: m must be >= 4");
  Breakpoints b;
  b.m = m;
  b.alpha = 2 * t(m - 1);
  b.beta = t(m) + 2 * t(m - 3) - 1;
  b.gamma = 2 * t(m) - t(m - 1);
  b.theta = t(m) + k(m + 3) - 2;
  if (b.theta != exact_half(3 * t(m) + t(m - 2) - 3)) {
    throw std::logic_error("breakpoints: the two theta expressions disagree at m = " +
                           std::to_string(m));
  }
  return b;
}

Int delta_cum(std::int64_t m) {
  if (m < 3) throw std::domain_error("delta_cum: m must be >= 3");
  if (m == 3) return 0;
  return exact_half(t(m - 2) + t(m - 3) - m);
}

Int theta_cum(std::int64_t m) {
  if (m < 3) throw std::domain_error("theta_cum: m must be >= 3");
  if (m == 3) return 0;
  return exact_half(t(m - 2) - t(m - 3) + 2 * t(m - 4) + m - 6);
}

int a_indicator(const Int& n) {
  if (n < 1) throw std::domain_error("a_indicator: n must be >= 1");
  if (n < 14) return (n == 8 || n == 10) ? 1 : 0;
  const Breakpoints b = breakpoints(locate_square_band(n));
  return (n <= b.beta || (b.gamma <= n && n <= b.theta)) ? 1 : 0;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::literal: return "literal";
    case Regime::rise1: return "rise-1";
    case Regime::plateau1: return "plateau-1";
    case Regime::rise2: return "rise-2";
    default: return "plateau-2";
  }
}

CountResult count_squares(const Int& n) {
  if (n < 0) throw std::domain_error("count_squares: n must be >= 0");
  if (n <= 13) {
    Int value = 0;
    if (n >= 8) value = 1;
    if (n >= 10) value = 2;
    return CountResult{n, value, Regime::literal, std::nullopt};
  }
  const std::int64_t m = locate_square_band(n);
  const Breakpoints b = breakpoints(m);
  CountResult result{n, 0, Regime::literal, m};
  if (n < b.beta) {
    result.value = n - exact_half(t(m) + t(m - 3) + m + 3);
    result.regime = Regime::rise1;
  } else if (n < b.gamma) {
    result.value = exact_half(t(m - 1) + t(m - 2) + 4 * t(m - 3) - m - 5);
    result.regime = Regime::plateau1;
  } else if (n < b.theta) {
    result.value = n - exact_half(t(m - 1) + 3 * t(m - 2) + m + 3);
    result.regime = Regime::rise2;
  } else {
    result.value = exact_half(2 * t(m - 1) + t(m - 2) + 3 * t(m - 3) - m - 6);
    result.regime = Regime::plateau2;
  }
  return result;
}

CountResult count_cubes(const Int& n) {
  if (n < 0) throw std::domain_error("count_cubes: n must be >= 0");
  if (n <= 57) return CountResult{n, 0, Regime::literal, std::nullopt};
  const std::int64_t m = locate_cube_band(n);
  CountResult result{n, 0, Regime::literal, m};
  if (2 * n <= 3 * t(m - 1) - t(m - 3) - 3) {
    result.value = n - exact_half(4 * t(m - 1) - t(m - 2) - 3 * t(m - 3) + m - 6);
    result.regime = Regime::rise1;
  } else {
    result.value = exact_half(t(m - 5) + t(m - 6) - m + 3);
    result.regime = Regime::plateau1;
  }
  return result;
}

Int count_squares_at_tm(std::int64_t m) {
  if (m < 0) throw std::domain_error("count_squares_at_tm: m must be >= 0");
  if (m <= 2) return 0;
  return exact_half(2 * t(m - 2) + t(m - 3) + 3 * t(m - 4) - m - 5);
}

Int count_squares_at_tm_partial_sums(std::int64_t m) {
  if (m < 3) throw std::domain_error("count_squares_at_tm_partial_sums: m must be >= 3");
  Int sum = 0;
  for (std::int64_t i = 0; i <= m - 3; ++i) sum += partial_sum_d(i) + 1;
  return sum + partial_sum_d(m - 5) + partial_sum_d(m - 6) + 1;
}

Int count_cubes_at_tm(std::int64_t m) {
  if (m < 0) throw std::domain_error("count_cubes_at_tm: m must be >= 0");
  if (m <= 6) return 0;
  return exact_half(t(m - 5) + t(m - 6) - m + 3);
}

std::set<Int> square_length_classes(const Int& n_max) {
  if (n_max < 0) throw std::domain_error("square_length_classes: n_max must be >= 0");
  std::set<Int> lengths;
  for (std::int64_t m = 0; 2 * t(m) <= n_max; ++m) lengths.insert(2 * t(m));
  for (std::int64_t m = 0; 2 * t(m) + 2 * t(m - 1) <= n_max; ++m) {
    lengths.insert(2 * t(m) + 2 * t(m - 1));
  }
  return lengths;
}

std::set<Int> cube_length_classes(const Int& n_max) {
  if (n_max < 0) throw std::domain_error("cube_length_classes: n_max must be >= 0");
  std::set<Int> lengths;
  for (std::int64_t m = 3; 3 * t(m) <= n_max; ++m) lengths.insert(3 * t(m));
  return lengths;
}

}  // namespace trib
