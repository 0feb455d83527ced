#pragma once
// The word engine. Normal forms are computed by exhausting braid classes:
// repeatedly walk all words reachable by braid moves, cancel adjacent equal
// letters when one appears, and take the ShortLex-least word of the final
// class. Results are memoized word -> element, so repeated products are cheap.

#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "cox/element.hpp"
#include "cox/matrix.hpp"
#include "cox/types.hpp"

namespace cox {

class GroupBall;

class CoxeterSystem {
 public:
  explicit CoxeterSystem(CoxeterMatrix m);

  const CoxeterMatrix& matrix() const { return mat_; }
  int rank() const { return mat_.rank(); }

  Element identity() const { return Element{}; }
  Element generator_element(Gen s) const;
  Element from_names(const std::vector<std::string>& letters) const;

  bool is_reduced(const Word& w) const;
  // All reduced words of the element of w (w must be reduced), ShortLex order.
  std::vector<Word> reduced_words(const Word& w) const;
  Element normal_form(const Word& w) const;

  Element multiply(const Element& a, const Element& b) const;
  Element right_mul(const Element& a, Gen s) const;
  Element left_mul(Gen s, const Element& a) const;
  Element inverse(const Element& a) const;
  Element power(const Element& a, int k) const;

  GenSet right_descents(const Element& a) const;
  GenSet left_descents(const Element& a) const;
  // No left descent in X and no right descent in Y ("(X,Y)-reduced").
  bool is_reduced_for_cosets(const Element& w, GenSet X, GenSet Y) const;
  // The unique shortest element of the coset w W_T.
  Element coset_min_rep(const Element& w, GenSet T) const;
  // The unique longest element of W_T; T must be spherical.
  Element longest_element(GenSet T) const;

  // Deleting every letter outside T from any word for w. For even systems this
  // is a well-defined retraction homomorphism onto W_T.
  Element erase_generators_outside(const Element& w, GenSet T) const;
  // Number of occurrences of t in a reduced word for w; the parity is
  // braid-invariant in an even system.
  int letter_count(const Element& w, Gen t) const;
  bool occurs_evenly(const Element& w, Gen t) const;

  // Breadth-first enumeration of all elements of length <= radius, with the
  // right multiplication table restricted to the ball.
  GroupBall ball(int radius) const;

  std::size_t memo_size() const;

 private:
  void require_even(const char* op) const;

  CoxeterMatrix mat_;
  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<PackedWord, Element, PackedWordHash> memo_;
  mutable std::unordered_map<PackedWord, std::uint32_t, PackedWordHash> descent_memo_;
};

}  // namespace cox
