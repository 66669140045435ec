#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace acyl {

// A letter in a free factor: +i / -i for the i-th generator (1-based) and its
// inverse. Words are freely reduced unless stated otherwise.
using Letter = int32_t;
using Word = std::vector<Letter>;

inline Letter inv(Letter l) { return -l; }

// Rank used for ShortLex comparisons: x1 < x1^-1 < x2 < x2^-1 < ...
inline int letter_rank(Letter l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }

bool is_reduced(const Word& w);
Word reduced(Word w);

// Reduced concatenation of two reduced words.
Word concat(const Word& a, const Word& b);

Word inverse(const Word& w);

// w^n for cyclically reduced w (concatenation needs no reduction then).
Word power(const Word& w, long long n);

bool is_cyclically_reduced(const Word& w);

// ShortLex order: length first, then letter ranks.
bool shortlex_less(const Word& a, const Word& b);

// If x == w^n for some n (w cyclically reduced, nonempty), return n.
std::optional<long long> power_of(const Word& x, const Word& w);

// Largest p such that w = r^p; returns (r, p). w must be cyclically reduced.
std::pair<Word, int> primitive_root(const Word& w);

std::string word_to_string(const Word& w, const std::vector<std::string>& names);

} // namespace acyl
