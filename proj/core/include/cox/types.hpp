#pragma once
// Basic vocabulary shared by every module: generator indices, words, generator
// subsets as bitmasks, and a packable word key used by the hash-heavy word engine.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace cox {

using Gen = std::uint8_t;        // generator index into CoxeterMatrix::names()
using Word = std::vector<Gen>;   // a word in the generators (not necessarily reduced)
using GenSet = std::uint32_t;    // subset of generators as a bitmask

// Sentinel for an infinite bond order m_st. Finite orders compare below it.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

inline bool set_contains(GenSet s, Gen g) { return (s >> g) & 1u; }
inline GenSet set_add(GenSet s, Gen g) { return s | (GenSet{1} << g); }
inline GenSet set_remove(GenSet s, Gen g) { return s & ~(GenSet{1} << g); }
inline int set_size(GenSet s) { return __builtin_popcount(s); }

inline std::vector<Gen> set_members(GenSet s) {
  std::vector<Gen> out;
  for (Gen g = 0; s; ++g, s >>= 1)
    if (s & 1u) out.push_back(g);
  return out;
}

// Orders GenSets by (size, then lexicographically as ascending index lists),
// which matches iteration "in input generator order".
inline bool set_less(GenSet a, GenSet b) {
  int sa = set_size(a), sb = set_size(b);
  if (sa != sb) return sa < sb;
  while (a && b) {
    int ga = __builtin_ctz(a), gb = __builtin_ctz(b);
    if (ga != gb) return ga < gb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : Error {
  using Error::Error;
};
// Raised by operations that are only defined for even systems.
struct EvennessError : Error {
  using Error::Error;
};
// Precondition violations: not a face, not spherical, unsafe vertex, ...
struct DomainError : Error {
  using Error::Error;
};
// Desk-scale engine limits (rank/word-length of the packed word key).
struct ScaleError : Error {
  using Error::Error;
};

// Words are packed into 32 nibbles (letter index + 1, zero-terminated), which
// covers rank <= 15 and length <= 32 -- comfortably above everything the
// bundled systems need, and cheap to hash.
struct PackedWord {
  std::uint64_t lo = 0, hi = 0;
  friend bool operator==(const PackedWord&, const PackedWord&) = default;
};

inline PackedWord pack_word(const Word& w) {
  if (w.size() > 32) throw ScaleError("word too long for the packed engine (max 32 letters)");
  PackedWord k;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= 15) throw ScaleError("rank too large for the packed engine (max 15 generators)");
    std::uint64_t nib = std::uint64_t(w[i]) + 1;
    if (i < 16)
      k.lo |= nib << (4 * i);
    else
      k.hi |= nib << (4 * (i - 16));
  }
  return k;
}

struct PackedWordHash {
  std::size_t operator()(const PackedWord& k) const {
    // splitmix64-style mixing of the two halves
    std::uint64_t x = k.lo * 0x9e3779b97f4a7c15ull ^ (k.hi + 0xbf58476d1ce4e5b9ull);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return static_cast<std::size_t>(x);
  }
};

}  // namespace cox
