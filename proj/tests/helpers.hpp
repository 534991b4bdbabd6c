#pragma once

#include <random>
#include <string>
#include <vector>

#include "earring/words.hpp"

namespace earring::testing {

// Reference reduction: iterate the one-pass map to its fixed point. Kept
// deliberately naive and separate from the library's single-pass reduce.
inline Word oracle_reduce(const GroupFamily &family, Word w) {
  for (;;) {
    Word next = k_step(family, w);
    if (next == w)
      return w;
    w = std::move(next);
  }
}

// Every word (reduced or not) of length <= max_len over the given letters,
// shortest first.
inline std::vector<Word> all_words(const std::vector<Letter> &alphabet,
                                   int max_len) {
  std::vector<Word> out{{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (const Letter &a : alphabet) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    level_begin = level_end;
  }
  return out;
}

// Deterministic random words. Values are drawn from -value_bound ..
// value_bound and stored canonically; identity letters are allowed, words
// need not be reduced.
inline std::vector<Word> random_words(const GroupFamily &family, int count,
                                      int max_len, int max_type,
                                      Value value_bound, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> type_dist(1, max_type);
  std::uniform_int_distribution<long long> value_dist(-value_bound,
                                                      value_bound);
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Word w;
    const int len = len_dist(rng);
    w.reserve(static_cast<std::size_t>(len));
    for (int j = 0; j < len; ++j) {
      const int type = type_dist(rng);
      w.push_back({type, family.canonical(type, value_dist(rng))});
    }
    out.push_back(std::move(w));
  }
  return out;
}

} // namespace earring::testing
