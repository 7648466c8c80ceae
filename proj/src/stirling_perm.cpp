#include "eulerian/stirling_perm.hpp"

#include <algorithm>

#include "eulerian/simd/kernels.hpp"

namespace eulerian {

StirlingWord::StirlingWord(unsigned m, unsigned n, std::vector<std::uint8_t> letters)
    : m_(m), n_(n), letters_(std::move(letters)) {
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be positive");
  if (n > 255) throw std::invalid_argument("alphabet too large for byte letters");
  if (letters_.size() != static_cast<std::size_t>(m) * n) throw std::invalid_argument("word length is not m*n");
  std::vector<unsigned> seen(n + 1, 0);
  for (auto a : letters_) {
    if (a == 0 || a > n) throw std::invalid_argument("letter outside 1..n");
    ++seen[a];
  }
  for (unsigned x = 1; x <= n; ++x) {
    if (seen[x] != m) throw std::invalid_argument("letter " + std::to_string(x) + " does not appear exactly m times");
  }
}

StirlingWord StirlingWord::parse(unsigned m, unsigned n, const std::string& digits) {
  std::vector<std::uint8_t> letters;
  letters.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '9') throw std::invalid_argument("word letters must be digits 1..9");
    letters.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return StirlingWord(m, n, std::move(letters));
}

bool is_valid_letters(const std::vector<std::uint8_t>& letters, unsigned n) {
  std::vector<long> first(n + 1, -1);
  std::vector<long> last(n + 1, -1);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    auto a = letters[i];
    if (first[a] < 0) first[a] = static_cast<long>(i);
    last[a] = static_cast<long>(i);
  }
  for (unsigned x = 1; x <= n; ++x) {
    for (long v = first[x] + 1; v < last[x]; ++v) {
      if (letters[static_cast<std::size_t>(v)] > x) return false;
    }
  }
  return true;
}

bool is_valid(const StirlingWord& w) { return is_valid_letters(w.letters(), w.n()); }

unsigned descent_count(const StirlingWord& w) { return simd::count_descents(w.letters()); }

BigInt multiset_permutation_count(unsigned m, unsigned n) {
  BigInt den = pow(factorial(m), n);
  return factorial(static_cast<unsigned long>(m) * n) / den;
}

bool within_enumeration_guard(unsigned m, unsigned n) {
  return multiset_permutation_count(m, n) <= kEnumerationGuard;
}

namespace {

std::vector<std::uint8_t> sorted_word(unsigned m, unsigned n) {
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be positive");
  if (!within_enumeration_guard(m, n)) {
    throw GuardError("enumeration of Q_{" + std::to_string(m) + "*" + std::to_string(n) + "} exceeds " +
                     std::to_string(kEnumerationGuard) + " multiset permutations");
  }
  std::vector<std::uint8_t> word;
  word.reserve(static_cast<std::size_t>(m) * n);
  for (unsigned x = 1; x <= n; ++x) word.insert(word.end(), m, static_cast<std::uint8_t>(x));
  return word;
}

}  // namespace

std::vector<BigInt> enumerate_triangle(unsigned m, unsigned n) {
  auto word = sorted_word(m, n);
  std::vector<unsigned long> tally(word.size(), 0);
  // std::next_permutation visits each distinct multiset arrangement once.
  do {
    if (is_valid_letters(word, n)) ++tally[simd::count_descents(word)];
  } while (std::next_permutation(word.begin(), word.end()));
  if (std::any_of(tally.begin() + n, tally.end(), [](auto c) { return c != 0; })) {
    throw std::logic_error("valid word with n or more descents");
  }
  std::vector<BigInt> row;
  row.reserve(n);
  for (unsigned k = 0; k < n; ++k) row.emplace_back(tally[k]);
  return row;
}

std::vector<StirlingWord> enumerate_words(unsigned m, unsigned n) {
  auto word = sorted_word(m, n);
  std::vector<StirlingWord> out;
  do {
    if (is_valid_letters(word, n)) out.emplace_back(m, n, word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

}  // namespace eulerian
