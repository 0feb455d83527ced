#pragma once
// Group elements carried around as their canonical reduced word. The canonical
// word is the ShortLex minimum over all reduced words, so equality of elements
// is equality of words.

#include "cox/types.hpp"

namespace cox {

struct Element {
  Word word;          // canonical reduced word
  GenSet support = 0; // generators occurring in any (hence every) reduced word

  int length() const { return static_cast<int>(word.size()); }
  bool is_identity() const { return word.empty(); }

  friend bool operator==(const Element& a, const Element& b) { return a.word == b.word; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  // ShortLex: by length, then lexicographically.
  friend bool operator<(const Element& a, const Element& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  }
};

struct ElementHash {
  std::size_t operator()(const Element& e) const { return PackedWordHash{}(pack_word(e.word)); }
};

inline GenSet word_support(const Word& w) {
  GenSet s = 0;
  for (Gen g : w) s = set_add(s, g);
  return s;
}

}  // namespace cox
