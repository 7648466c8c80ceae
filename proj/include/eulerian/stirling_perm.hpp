#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerian/bigint.hpp"

namespace eulerian {

/// Raised when an exhaustive enumeration would exceed the size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A word over {1..n} in which every letter appears exactly m times.
///
/// The constructor checks the multiset content only; whether the word is an
/// m-Stirling permutation is a separate question answered by is_valid().
class StirlingWord {
 public:
  StirlingWord(unsigned m, unsigned n, std::vector<std::uint8_t> letters);

  /// Parses digits, e.g. "113223"; letters must be 1..9.
  static StirlingWord parse(unsigned m, unsigned n, const std::string& digits);

  unsigned m() const { return m_; }
  unsigned n() const { return n_; }
  const std::vector<std::uint8_t>& letters() const { return letters_; }

 private:
  unsigned m_;
  unsigned n_;
  std::vector<std::uint8_t> letters_;
};

/// True iff for all u < v < w with a_u == a_w we have a_u >= a_v, i.e. no
/// letter strictly larger than x sits between two copies of x.
bool is_valid(const StirlingWord& w);
bool is_valid_letters(const std::vector<std::uint8_t>& letters, unsigned n);

/// Interior strict descents: positions j in 1..mn-1 with a_j > a_{j+1}.
unsigned descent_count(const StirlingWord& w);

/// (mn)! / (m!)^n, the number of distinct rearrangements of the multiset.
BigInt multiset_permutation_count(unsigned m, unsigned n);

inline constexpr unsigned long kEnumerationGuard = 10'000'000;

/// True when (m, n) is small enough for enumerate_triangle.
bool within_enumeration_guard(unsigned m, unsigned n);

/// Counts of valid words by descent number, found by walking every distinct
/// multiset permutation in lexicographic order. Row has length n.
/// Throws GuardError above the guard and std::invalid_argument for m or n 0.
std::vector<BigInt> enumerate_triangle(unsigned m, unsigned n);

/// Every valid word of Q_{mn}, lexicographic. Same guard as above.
std::vector<StirlingWord> enumerate_words(unsigned m, unsigned n);

}  // namespace eulerian
