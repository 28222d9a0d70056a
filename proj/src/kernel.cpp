#include "trib/kernel.hpp"

#include <algorithm>
#include <string>

namespace trib {

namespace {

// Largest m with k_m <= len. Kernel orders 1..3 all have k_m = 1, so any
// nonempty factor admits at least order 3 as a candidate.
std::int64_t largest_kernel_order_fitting(std::int64_t len) {
  std::int64_t m = 3;
  while (kernel_number(m + 1) <= len) ++m;
  return m;
}

}  // namespace

Word kernel_word(std::int64_t m) {
  if (m < 1) throw std::domain_error("kernel_word: m must be >= 1");
  switch (m) {
    case 1: return Word::from_ascii("a");
    case 2: return Word::from_ascii("b");
    case 3: return Word::from_ascii("c");
    default: break;
  }
  // T_{m-3}[1, k_m - 1] is a prefix of the fixed point because m - 3 >= 1
  // and k_m - 1 <= t_{m-3}.
  const Int len = kernel_number(m) - 1;
  if (len >= kMaxWordLetters) {
    throw resource_error("kernel_word: K_" + std::to_string(m) +
                         " exceeds the word size limit");
  }
  const std::string head(1, to_char(last_letter(m - 1)));
  return detail::trusted_word(head + prefix(to_int64(len)).str());
}

Int first_end_position(std::int64_t m) {
  if (m < 1) throw std::domain_error("first_end_position: m must be >= 1");
  const Int via_t = tribonacci_number(m - 1) + kernel_number(m) - 1;
  const Int via_k = kernel_number(m + 3) - 1;
  if (via_t != via_k) {
    throw std::logic_error("first_end_position: the two closed forms disagree at m = " +
                           std::to_string(m));
  }
  return via_t;
}

KernelDescriptor kernel_descriptor(std::int64_t m) {
  return KernelDescriptor{m, kernel_word(m), first_end_position(m)};
}

std::int64_t default_horizon(std::int64_t length) {
  return std::max<std::int64_t>(1024, 64 * length);
}

KernelInFactor ker(const Word& w, std::optional<std::int64_t> horizon) {
  if (w.empty()) throw std::domain_error("ker: the factor must be nonempty");
  const std::int64_t h = horizon.value_or(default_horizon(w.size()));
  const Word window = prefix(std::max<std::int64_t>(h, 0));
  if (window.str().find(w.str()) == std::string::npos) {
    for (const char* block : {"bb", "bc", "cb", "cc"}) {
      if (w.str().find(block) != std::string::npos) {
        throw not_a_factor_error(
            not_a_factor_error::Reason::impossible_block,
            std::string("not a factor: contains the block '") + block +
                "', and every b or c in the fixed point is followed by a");
      }
    }
    throw not_a_factor_error(
        not_a_factor_error::Reason::not_found_within_horizon,
        "not found in prefix(" + std::to_string(h) +
            "): either not a factor, or the horizon is too small");
  }

  for (std::int64_t m = largest_kernel_order_fitting(w.size()); m >= 1; --m) {
    const Word kernel = kernel_word(m);
    const std::size_t pos = w.str().find(kernel.str());
    if (pos == std::string::npos) continue;
    if (w.str().find(kernel.str(), pos + 1) != std::string::npos) {
      throw std::logic_error("ker: maximal kernel K_" + std::to_string(m) +
                             " occurs more than once in the factor");
    }
    return KernelInFactor{kernel_descriptor(m), static_cast<std::int64_t>(pos) + 1};
  }
  throw std::logic_error("ker: factor contains no kernel word");
}

Decomposition decompose(const Word& w, std::optional<std::int64_t> horizon) {
  const KernelInFactor fit = ker(w, horizon);
  const std::int64_t m = fit.kernel.order;
  const std::int64_t t_prev = to_int64(tribonacci_number(m - 1));
  const std::int64_t left = fit.start - 1;
  const std::int64_t right = w.size() - (fit.start + fit.kernel.word.size() - 1);

  const Decomposition d{m, t_prev - left, right};
  if (d.i < 1 || d.i > t_prev || d.j < 0 || d.j > t_prev - 1) {
    throw std::logic_error("decompose: wing lengths out of range for kernel order " +
                           std::to_string(m));
  }
  if (reassemble(d) != w) {
    throw std::logic_error("decompose: reassembly does not reproduce the factor");
  }
  return d;
}

Word reassemble(const Decomposition& d) {
  const std::int64_t m = d.kernel_order;
  if (m < 1) throw std::domain_error("reassemble: kernel order must be >= 1");
  const std::int64_t t_prev = to_int64(tribonacci_number(m - 1));
  const std::int64_t k_m = to_int64(kernel_number(m));
  if (d.i < 1 || d.i > t_prev) {
    throw std::domain_error("reassemble: i must satisfy 1 <= i <= t_{m-1}");
  }
  if (d.j < 0 || d.j > t_prev - 1) {
    throw std::domain_error("reassemble: j must satisfy 0 <= j <= t_{m-1} - 1");
  }
  const Word left = word_tm(m - 1).slice(d.i, t_prev - 1);
  const Word right = word_tm(m).slice(k_m, k_m + d.j - 1);
  return left + kernel_word(m) + right;
}

std::vector<std::int64_t> find_occurrences(const Word& w, std::int64_t n) {
  if (w.empty()) throw std::domain_error("find_occurrences: pattern must be nonempty");
  if (n < 0) throw std::domain_error("find_occurrences: n must be >= 0");
  std::vector<std::int64_t> starts;
  if (n < w.size()) return starts;
  const Word text = prefix(n);
  std::size_t from = 0;
  while (true) {
    const std::size_t pos = text.str().find(w.str(), from);
    if (pos == std::string::npos) break;
    starts.push_back(static_cast<std::int64_t>(pos) + 1);
    from = pos + 1;
  }
  return starts;
}

}  // namespace trib
