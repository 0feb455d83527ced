#pragma once
// Finite truncations of the cell complex whose poset is the set of spherical
// cosets w W_T. A coset is a cell of the radius-R truncation exactly when all
// of its members have length <= R, so cells are never partial; checks that
// need a full star around a vertex are restricted to "safe" vertices, those of
// length <= R - D with D the largest longest-element length.

#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cox/ball.hpp"
#include "cox/matrix.hpp"
#include "cox/nerve.hpp"
#include "cox/system.hpp"

namespace cox {

// Element-level coset naming, independent of any ball.
struct SphericalCoset {
  Element rep;  // the unique shortest member
  GenSet type = 0;
  friend bool operator==(const SphericalCoset&, const SphericalCoset&) = default;
};
SphericalCoset canonical_coset(const CoxeterSystem& W, const Element& w, GenSet T);

// Cell naming inside a ball: the coset minimum as a vertex id plus the type.
struct CellKey {
  std::int32_t rep = 0;
  GenSet type = 0;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};
struct CellKeyHash {
  std::size_t operator()(const CellKey& c) const {
    std::uint64_t x = (std::uint64_t(std::uint32_t(c.rep)) << 32) | c.type;
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};
// Deterministic order: type (size, lex), then rep id.
inline bool cell_less(const CellKey& a, const CellKey& b) {
  if (a.type != b.type) return set_less(a.type, b.type);
  return a.rep < b.rep;
}

using CellSet = std::unordered_set<CellKey, CellKeyHash>;

class BallComplex {
 public:
  explicit BallComplex(GroupBall ball);

  const GroupBall& ball() const { return ball_; }
  const CoxeterSystem& system() const { return ball_.system(); }
  const CoxeterMatrix& matrix() const { return system().matrix(); }
  int radius() const { return ball_.radius(); }

  // Spherical types in (size, lex) order, the empty set first.
  const std::vector<GenSet>& types() const { return types_; }
  // All cells in cell_less order.
  const std::vector<CellKey>& cells() const { return cells_; }
  const std::vector<CellKey>& cells_of_type(GenSet T) const;

  bool has_cell(const CellKey& c) const { return cell_set_.count(c) != 0; }
  // The cell naming vertex's T-coset, whether or not it lies in the ball.
  CellKey canonical(int vertex, GenSet T) const;
  bool cell_in_ball(int vertex, GenSet T) const { return has_cell(canonical(vertex, T)); }

  std::vector<int> vertices_of(const CellKey& c) const;  // sorted ids
  // Proper faces (all strictly smaller types, the empty type included).
  std::vector<CellKey> faces_of(const CellKey& c) const;
  // Cells properly containing c, any codimension.
  std::vector<CellKey> cofaces_of(const CellKey& c) const;
  bool cell_subset(const CellKey& a, const CellKey& b) const;

  // Cosets through a vertex, one per type (restricted to `filter` when given).
  // With in_ball_only, only cells of the truncation are returned.
  std::vector<CellKey> chamber(int vertex, const std::vector<GenSet>* filter = nullptr,
                               bool in_ball_only = true) const;
  // The 2^|T| subcosets {canonical(w, V) : V subset of T}; c must be a cell.
  std::vector<CellKey> cube(const CellKey& c) const;

  int safe_bound() const { return radius() - matrix().spherical_poset().max_longest; }
  bool vertex_safe(int vertex) const { return ball_.length(vertex) <= safe_bound(); }
  // Complex on the generator set with face T iff the T-cell at the vertex is
  // in the ball; only meaningful (and only allowed) for safe vertices.
  SimplicialComplex vertex_link(int vertex) const;

  // Chains of the containment order on the given cells. Simplex entries index
  // into the returned (cell_less-sorted) cell list.
  struct OrderComplex {
    std::vector<CellKey> cells;
    std::vector<Simplex> simplices;
  };
  OrderComplex order_complex(std::vector<CellKey> subset) const;

  std::string format_cell(const CellKey& c) const;

 private:
  GroupBall ball_;
  std::vector<GenSet> types_;
  std::unordered_map<GenSet, int> type_index_;
  std::vector<std::vector<CellKey>> by_type_;
  std::vector<CellKey> cells_;
  CellSet cell_set_;
};

// Types T with T ∪ {t} spherical inside U; equivalently every type below a
// member of the spherical filter above t within U. Chamber pieces of these
// types make up collar bodies.
std::vector<GenSet> chamber_filter_types(const CoxeterMatrix& M, GenSet U, Gen t);

}  // namespace cox
