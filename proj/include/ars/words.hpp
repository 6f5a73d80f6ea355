#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ars {

/// A letter of a free-group word: +k is the k-th generator (1-based),
/// -k its inverse. Zero is not a letter.
using Letter = int;
using Word = std::vector<Letter>;

inline Letter letter_inverse(Letter x) { return -x; }

/// Letters render as lowercase/uppercase pairs: +1 'a', -1 'A', +2 'b', ...
/// This caps the printable alphabet at 26 generators.
constexpr int kMaxPrintableGenerators = 26;

char letter_to_char(Letter x);
Letter letter_from_char(char c, int generators);

std::string word_to_string(const Word& w);
Word word_from_string(std::string_view s, int generators);

bool is_reduced(const Word& w);

/// Stack-based cancellation of adjacent inverse pairs. The output has no
/// adjacent inverse pair and the function is idempotent.
Word reduce_word(const Word& w);

std::string reduce_word(std::string_view s, int generators);

}  // namespace ars
