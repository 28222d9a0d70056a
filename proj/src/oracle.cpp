#include "trib/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace trib {

namespace {

constexpr std::uint64_t kMod1 = 1'000'000'007ULL;
constexpr std::uint64_t kBase1 = 131;
constexpr std::uint64_t kMod2 = 998'244'353ULL;
constexpr std::uint64_t kBase2 = 137;

// Polynomial fingerprints under two independent moduli. A fingerprint match
// is only ever a candidate; acceptance always re-checks the letters.
class PrefixHashes {
 public:
  explicit PrefixHashes(const std::string& s) {
    const std::size_t n = s.size();
    h1_.resize(n + 1);
    h2_.resize(n + 1);
    pw1_.resize(n + 1);
    pw2_.resize(n + 1);
    h1_[0] = h2_[0] = 0;
    pw1_[0] = pw2_[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t c = static_cast<unsigned char>(s[i]);
      h1_[i + 1] = (h1_[i] * kBase1 + c) % kMod1;
      h2_[i + 1] = (h2_[i] * kBase2 + c) % kMod2;
      pw1_[i + 1] = (pw1_[i] * kBase1) % kMod1;
      pw2_[i + 1] = (pw2_[i] * kBase2) % kMod2;
    }
  }

  // Fingerprints of s[pos, pos + len), 0-based.
  std::uint64_t sub1(std::int64_t pos, std::int64_t len) const {
    return (h1_[pos + len] + kMod1 - h1_[pos] * pw1_[len] % kMod1) % kMod1;
  }
  std::uint64_t sub2(std::int64_t pos, std::int64_t len) const {
    return (h2_[pos + len] + kMod2 - h2_[pos] * pw2_[len] % kMod2) % kMod2;
  }

  bool equal(std::int64_t x, std::int64_t y, std::int64_t len) const {
    return sub1(x, len) == sub1(y, len) && sub2(x, len) == sub2(y, len);
  }

 private:
  std::vector<std::uint64_t> h1_, h2_, pw1_, pw2_;
};

std::uint64_t mix_key(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const std::uint64_t v : {a, b, c}) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// All distinct words w with w repeated `copies` times occurring in text,
// each with the minimal end position of such an occurrence. Exhaustive over
// every root length.
std::vector<RepetitionRecord> distinct_power_records(const std::string& text,
                                                     int copies) {
  const std::int64_t n = static_cast<std::int64_t>(text.size());
  const PrefixHashes hashes(text);
  // key (length, fingerprints) -> 0-based starts of distinct roots seen
  std::unordered_map<std::uint64_t, std::vector<std::int64_t>> roots_seen;
  std::vector<RepetitionRecord> records;

  for (std::int64_t len = 1; len * copies <= n; ++len) {
    const std::int64_t body = (copies - 1) * len;
    for (std::int64_t s = 0; s + copies * len <= n; ++s) {
      // text[s, s + copies*len) is a power of period len iff it equals its
      // own shift by len.
      if (!hashes.equal(s, s + len, body)) continue;
      if (text.compare(s, body, text, s + len, body) != 0) continue;

      const std::uint64_t key =
          mix_key(static_cast<std::uint64_t>(len), hashes.sub1(s, len), hashes.sub2(s, len));
      auto& bucket = roots_seen[key];
      bool seen = false;
      for (const std::int64_t canonical : bucket) {
        if (text.compare(canonical, len, text, s, len) == 0) {
          seen = true;  // same root word; its earlier end position stands
          break;
        }
      }
      if (seen) continue;
      bucket.push_back(s);
      records.push_back(RepetitionRecord{
          len, s + copies * len,
          Word::from_ascii(std::string_view(text).substr(s, len))});
    }
  }

  std::sort(records.begin(), records.end(),
            [](const RepetitionRecord& a, const RepetitionRecord& b) {
              return a.end_position != b.end_position
                         ? a.end_position < b.end_position
                         : a.root_length < b.root_length;
            });
  return records;
}

std::string oracle_text(std::int64_t n, std::int64_t cap) {
  if (n < 0) throw std::domain_error("oracle: n must be >= 0");
  if (n > cap) {
    throw resource_error("oracle: n = " + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(cap));
  }
  return prefix(n).str();
}

}  // namespace

std::vector<RepetitionRecord> brute_distinct_squares(std::int64_t n, std::int64_t cap) {
  return distinct_power_records(oracle_text(n, cap), 2);
}

std::vector<RepetitionRecord> brute_distinct_cubes(std::int64_t n, std::int64_t cap) {
  return distinct_power_records(oracle_text(n, cap), 3);
}

std::set<std::int64_t> new_repetition_positions(std::int64_t n, RepetitionKind kind,
                                                std::int64_t cap) {
  const auto records = distinct_power_records(
      oracle_text(n, cap), kind == RepetitionKind::square ? 2 : 3);
  std::set<std::int64_t> ends;
  for (const auto& record : records) ends.insert(record.end_position);
  return ends;
}

bool assert_no_fourth_power(std::int64_t n, std::int64_t cap) {
  return distinct_power_records(oracle_text(n, cap), 4).empty();
}

}  // namespace trib
