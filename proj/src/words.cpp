#include "ars/words.hpp"

#include <cstdlib>

#include "ars/errors.hpp"

namespace ars {

char letter_to_char(Letter x) {
  const int k = std::abs(x);
  if (x == 0 || k > kMaxPrintableGenerators) {
    throw ParseError("letter " + std::to_string(x) + " has no printable form");
  }
  return static_cast<char>((x > 0 ? 'a' : 'A') + (k - 1));
}

Letter letter_from_char(char c, int generators) {
  int value = 0;
  if (c >= 'a' && c <= 'z') {
    value = (c - 'a') + 1;
  } else if (c >= 'A' && c <= 'Z') {
    value = -((c - 'A') + 1);
  } else {
    throw ParseError(std::string("invalid letter '") + c + "'");
  }
  if (std::abs(value) > generators) {
    throw ParseError(std::string("letter '") + c + "' is outside the " +
                     std::to_string(generators) + "-generator alphabet");
  }
  return value;
}

std::string word_to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(letter_to_char(x));
  return out;
}

Word word_from_string(std::string_view s, int generators) {
  Word out;
  out.reserve(s.size());
  for (char c : s) out.push_back(letter_from_char(c, generators));
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == letter_inverse(w[i + 1])) return false;
  }
  return true;
}

Word reduce_word(const Word& w) {
  Word stack;
  stack.reserve(w.size());
  for (Letter x : w) {
    if (!stack.empty() && stack.back() == letter_inverse(x)) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return stack;
}

std::string reduce_word(std::string_view s, int generators) {
  return word_to_string(reduce_word(word_from_string(s, generators)));
}

}  // namespace ars
