#pragma once
// A radius-R ball in the Cayley graph: every element of length <= R, indexed
// breadth-first (ids sorted by length, then canonical word), together with the
// right multiplication table. Table entries leaving the ball are kOutside.

#include <unordered_map>
#include <vector>

#include "cox/element.hpp"
#include "cox/types.hpp"

namespace cox {

class CoxeterSystem;

class GroupBall {
 public:
  static constexpr int kOutside = -1;

  const CoxeterSystem& system() const { return *sys_; }
  int radius() const { return radius_; }
  int size() const { return static_cast<int>(elems_.size()); }

  const Element& element(int id) const { return elems_[id]; }
  int length(int id) const { return elems_[id].length(); }
  int find(const Element& w) const;  // id, or kOutside if longer than radius

  // id of w*s within the ball, or kOutside.
  int right(int id, Gen s) const { return table_[std::size_t(id) * rank_ + s]; }

  // ids of length l occupy [layer_begin(l), layer_end(l))
  int layer_begin(int l) const { return layer_start_[l]; }
  int layer_end(int l) const { return layer_start_[l + 1]; }
  int max_length() const { return static_cast<int>(layer_start_.size()) - 2; }

  // Walks descents inside T down to the shortest element of id's coset id*W_T.
  // Descent steps always shorten, so they never leave the ball.
  int min_rep_in_coset(int id, GenSet T) const;
  // Expands the coset rep*W_T through the table. Returns false as soon as a
  // member falls outside the ball; on success fills vertices (sorted by id).
  bool coset_in_ball(int rep, GenSet T, std::vector<int>* vertices = nullptr) const;

 private:
  friend class CoxeterSystem;
  const CoxeterSystem* sys_ = nullptr;
  int radius_ = 0;
  int rank_ = 0;
  std::vector<Element> elems_;
  std::vector<std::int32_t> table_;  // size * rank, kOutside beyond the ball
  std::vector<int> layer_start_;
  std::unordered_map<PackedWord, std::int32_t, PackedWordHash> index_;
};

}  // namespace cox
