#pragma once

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace trib {

// Exact unbounded integer. t_m grows like 1.839^m and leaves the 64-bit
// range near m = 74, so every formula-level quantity is an Int.
using Int = boost::multiprecision::cpp_int;

// Thrown when an operation would materialize a word too large for memory,
// or when the brute-force oracle is asked to exceed its cap.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest concrete word, in letters, that the library will materialize.
inline constexpr std::int64_t kMaxWordLetters = std::int64_t{1} << 30;

enum class Letter : char { a = 'a', b = 'b', c = 'c' };

char to_char(Letter l);
Letter letter_from_char(char c);  // throws std::invalid_argument off-alphabet

class Word;
namespace detail {
Word trusted_word(std::string text);  // no alphabet validation
}

// A finite word over {a,b,c}. Positions are 1-based throughout, matching
// the slicing convention tau[i,j] = x_i ... x_j with tau[i,i-1] = empty.
class Word {
 public:
  Word() = default;
  static Word from_ascii(std::string_view text);  // validates the alphabet

  std::int64_t size() const { return static_cast<std::int64_t>(text_.size()); }
  bool empty() const { return text_.empty(); }

  Letter at(std::int64_t i) const;                    // tau[i], 1 <= i <= size
  Word slice(std::int64_t i, std::int64_t j) const;   // tau[i,j]; j = i-1 gives empty
  bool contains(const Word& needle) const;
  const std::string& str() const { return text_; }

  friend Word operator+(const Word& lhs, const Word& rhs);
  bool operator==(const Word&) const = default;

 private:
  struct unchecked_t {};
  Word(std::string text, unchecked_t) : text_(std::move(text)) {}

  std::string text_;

  friend Word detail::trusted_word(std::string text);
};

bool is_palindrome(const Word& w);

// Memoized t_m / k_m tables, shared process-wide. Safe for concurrent
// callers: every access happens under the table lock.
class TribTables {
 public:
  static TribTables& instance();

  Int t(std::int64_t m);  // t_m, m >= -2
  Int k(std::int64_t m);  // k_m, m >= 0

 private:
  TribTables();

  std::mutex mu_;
  std::vector<Int> t_;  // t_[i] holds t(i - 2)
  std::vector<Int> k_;  // k_[i] holds k(i)
};

// t_{-2} = 0, t_{-1} = t_0 = 1, t_m = t_{m-1} + t_{m-2} + t_{m-3}.
Int tribonacci_number(std::int64_t m);

// k_0 = 0, k_1 = k_2 = 1, k_m = k_{m-1} + k_{m-2} + k_{m-3} - 1.
Int kernel_number(std::int64_t m);

// delta_m, the last letter of T_m: a, b, c according to m mod 3 = 0, 1, 2.
Letter last_letter(std::int64_t m);  // m >= -1

// The substitution a -> ab, b -> ac, c -> a applied letterwise.
Word substitute(const Word& w);

// T_m: the empty word for m = -2, "c" for m = -1, sigma^m(a) for m >= 0.
Word word_tm(std::int64_t m);

// T[1,n], the length-n prefix of the infinite fixed point starting with a.
Word prefix(std::int64_t n);

Int exact_half(const Int& v);          // v must be even
std::int64_t to_int64(const Int& v);   // throws std::overflow_error

}  // namespace trib
