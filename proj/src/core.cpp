#include "trib/core.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace trib {

char to_char(Letter l) { return static_cast<char>(l); }

Letter letter_from_char(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'b': return Letter::b;
    case 'c': return Letter::c;
    default:
      throw std::invalid_argument(std::string("letter must be one of a, b, c; got '") +
                                  c + "'");
  }
}

namespace detail {
Word trusted_word(std::string text) {
  return Word(std::move(text), Word::unchecked_t{});
}
}  // namespace detail

Word Word::from_ascii(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != 'a' && c != 'b' && c != 'c') {
      throw std::invalid_argument("word contains '" + std::string(1, c) +
                                  "' at position " + std::to_string(i + 1) +
                                  "; the alphabet is {a, b, c}");
    }
  }
  return Word(std::string(text), unchecked_t{});
}

Letter Word::at(std::int64_t i) const {
  if (i < 1 || i > size()) {
    throw std::out_of_range("Word::at: position " + std::to_string(i) +
                            " outside [1, " + std::to_string(size()) + "]");
  }
  return static_cast<Letter>(text_[static_cast<std::size_t>(i - 1)]);
}

Word Word::slice(std::int64_t i, std::int64_t j) const {
  if (j == i - 1 && i >= 1 && i <= size() + 1) return Word();
  if (i < 1 || j < i || j > size()) {
    throw std::out_of_range("Word::slice: [" + std::to_string(i) + ", " +
                            std::to_string(j) + "] invalid for length " +
                            std::to_string(size()));
  }
  return Word(text_.substr(static_cast<std::size_t>(i - 1),
                           static_cast<std::size_t>(j - i + 1)),
              unchecked_t{});
}

bool Word::contains(const Word& needle) const {
  return text_.find(needle.text_) != std::string::npos;
}

Word operator+(const Word& lhs, const Word& rhs) {
  return Word(lhs.text_ + rhs.text_, Word::unchecked_t{});
}

bool is_palindrome(const Word& w) {
  const std::string& s = w.str();
  return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2),
                    s.rbegin());
}

TribTables& TribTables::instance() {
  static TribTables tables;
  return tables;
}

TribTables::TribTables() : t_{0, 1, 1}, k_{0, 1, 1} {}

Int TribTables::t(std::int64_t m) {
  if (m < -2) throw std::domain_error("tribonacci_number: m must be >= -2");
  std::lock_guard lock(mu_);
  while (static_cast<std::int64_t>(t_.size()) <= m + 2) {
    const std::size_t s = t_.size();
    t_.push_back(t_[s - 1] + t_[s - 2] + t_[s - 3]);
  }
  return t_[static_cast<std::size_t>(m + 2)];
}

Int TribTables::k(std::int64_t m) {
  if (m < 0) throw std::domain_error("kernel_number: m must be >= 0");
  std::lock_guard lock(mu_);
  while (static_cast<std::int64_t>(k_.size()) <= m) {
    const std::size_t s = k_.size();
    k_.push_back(k_[s - 1] + k_[s - 2] + k_[s - 3] - 1);
  }
  return k_[static_cast<std::size_t>(m)];
}

Int tribonacci_number(std::int64_t m) { return TribTables::instance().t(m); }

Int kernel_number(std::int64_t m) { return TribTables::instance().k(m); }

Letter last_letter(std::int64_t m) {
  if (m < -1) throw std::domain_error("last_letter: m must be >= -1");
  switch (((m % 3) + 3) % 3) {
    case 0: return Letter::a;
    case 1: return Letter::b;
    default: return Letter::c;
  }
}

Word substitute(const Word& w) {
  std::string out;
  out.reserve(w.str().size() * 2);
  for (const char c : w.str()) {
    switch (c) {
      case 'a': out += "ab"; break;
      case 'b': out += "ac"; break;
      default: out += 'a'; break;
    }
  }
  if (static_cast<std::int64_t>(out.size()) > kMaxWordLetters) {
    throw resource_error("substitute: result exceeds the word size limit");
  }
  return detail::trusted_word(std::move(out));
}

Word word_tm(std::int64_t m) {
  if (m < -2) throw std::domain_error("word_tm: m must be >= -2");
  if (m == -2) return Word();
  if (m == -1) return detail::trusted_word("c");
  if (tribonacci_number(m) > kMaxWordLetters) {
    throw resource_error("word_tm: T_" + std::to_string(m) +
                         " has more than " + std::to_string(kMaxWordLetters) +
                         " letters");
  }
  Word w = detail::trusted_word("a");
  for (std::int64_t step = 0; step < m; ++step) w = substitute(w);
  return w;
}

Word prefix(std::int64_t n) {
  if (n < 0) throw std::domain_error("prefix: n must be >= 0");
  if (n > kMaxWordLetters) {
    throw resource_error("prefix: n exceeds the word size limit of " +
                         std::to_string(kMaxWordLetters) + " letters");
  }
  std::string w = "a";
  while (static_cast<std::int64_t>(w.size()) < n) {
    w = substitute(detail::trusted_word(std::move(w))).str();
  }
  w.resize(static_cast<std::size_t>(n));
  return detail::trusted_word(std::move(w));
}

Int exact_half(const Int& v) {
  if (v % 2 != 0) {
    throw std::logic_error("exact_half: " + v.str() + " is odd");
  }
  return v / 2;
}

std::int64_t to_int64(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v < lo || v > hi) {
    throw std::overflow_error("value " + v.str() + " does not fit in 64 bits");
  }
  return v.convert_to<std::int64_t>();
}

}  // namespace trib
