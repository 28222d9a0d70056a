#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trib/core.hpp"

namespace trib {

// Kernel words: K_1 = a, K_2 = b, K_3 = c and K_m = delta_{m-1} T_{m-3}[1, k_m - 1]
// for m >= 4. Every K_m is a palindrome of length k_m. The maximal-order kernel
// word occurring in a factor occurs in it exactly once and anchors the factor's
// unique decomposition
//
//   w = T_{m-1}[i, t_{m-1} - 1]  K_m  T_m[k_m, k_m + j - 1],
//
// with 1 <= i <= t_{m-1} and 0 <= j <= t_{m-1} - 1.

class not_a_factor_error : public std::runtime_error {
 public:
  enum class Reason {
    // Contains one of bb, bc, cb, cc. In the fixed point every b and c is
    // followed by a, so these blocks never occur at any horizon.
    impossible_block,
    // Absent from prefix(horizon); either not a factor at all, or the
    // horizon was too small to reach its first occurrence.
    not_found_within_horizon,
  };

  not_a_factor_error(Reason reason, std::string message)
      : std::runtime_error(std::move(message)), reason_(reason) {}

  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

struct KernelDescriptor {
  std::int64_t order = 0;  // m
  Word word;               // K_m, |K_m| = k_m
  Int end_position_first;  // P(K_m,1) = t_{m-1} + k_m - 1 = k_{m+3} - 1
};

// The maximal kernel word of a factor plus its unique position inside it.
struct KernelInFactor {
  KernelDescriptor kernel;
  std::int64_t start = 0;  // 1-based start of the kernel within the factor
};

struct Decomposition {
  std::int64_t kernel_order = 0;  // m
  std::int64_t i = 0;             // 1 <= i <= t_{m-1}; i = t_{m-1} means empty left wing
  std::int64_t j = 0;             // 0 <= j <= t_{m-1} - 1; j = 0 means empty right wing
  bool operator==(const Decomposition&) const = default;
};

Word kernel_word(std::int64_t m);        // m >= 1
Int first_end_position(std::int64_t m);  // P(K_m,1), m >= 1
KernelDescriptor kernel_descriptor(std::int64_t m);

// Search window for the factor-membership check: max(1024, 64 * length).
std::int64_t default_horizon(std::int64_t length);

// Maximal kernel word occurring in w. Verifies that w is a factor by
// scanning prefix(horizon) first.
KernelInFactor ker(const Word& w,
                   std::optional<std::int64_t> horizon = std::nullopt);

// Unique (m, i, j) factorization of w around its maximal kernel. The result
// is validated by reassembling it and comparing with w.
Decomposition decompose(const Word& w,
                        std::optional<std::int64_t> horizon = std::nullopt);

// Inverse of decompose: T_{m-1}[i, t_{m-1}-1] K_m T_m[k_m, k_m+j-1].
Word reassemble(const Decomposition& d);

// 1-based start positions of all (possibly overlapping) occurrences of w
// in prefix(n), ascending.
std::vector<std::int64_t> find_occurrences(const Word& w, std::int64_t n);

}  // namespace trib
