#include "cox/complex.hpp"

#include <algorithm>

namespace cox {

SphericalCoset canonical_coset(const CoxeterSystem& W, const Element& w, GenSet T) {
  if (!W.matrix().is_spherical(T))
    throw DomainError("coset type " + W.matrix().format_set(T) + " is not spherical");
  return SphericalCoset{W.coset_min_rep(w, T), T};
}

BallComplex::BallComplex(GroupBall ball) : ball_(std::move(ball)) {
  const auto& poset = matrix().spherical_poset();
  types_ = poset.sets;
  by_type_.resize(types_.size());
  for (std::size_t ti = 0; ti < types_.size(); ++ti) {
    GenSet T = types_[ti];
    type_index_[T] = static_cast<int>(ti);
    const auto expected = poset.orders[ti];
    for (int v = 0; v < ball_.size(); ++v) {
      if (ball_.min_rep_in_coset(v, T) != v) continue;
      std::vector<int> verts;
      if (!ball_.coset_in_ball(v, T, &verts)) continue;
      if (verts.size() != expected) throw Error("coset expansion has the wrong size");
      by_type_[ti].push_back(CellKey{v, T});
    }
    cells_.insert(cells_.end(), by_type_[ti].begin(), by_type_[ti].end());
    cell_set_.insert(by_type_[ti].begin(), by_type_[ti].end());
  }
  // types_ is (size, lex) sorted and reps ascend within a type, so cells_ is
  // already in cell_less order.
}

const std::vector<CellKey>& BallComplex::cells_of_type(GenSet T) const {
  auto it = type_index_.find(T);
  if (it == type_index_.end()) throw DomainError("type is not spherical");
  return by_type_[it->second];
}

CellKey BallComplex::canonical(int vertex, GenSet T) const {
  if (!type_index_.count(T)) throw DomainError("type is not spherical");
  return CellKey{ball_.min_rep_in_coset(vertex, T), T};
}

std::vector<int> BallComplex::vertices_of(const CellKey& c) const {
  if (!has_cell(c)) throw DomainError("not a cell of this truncation");
  std::vector<int> verts;
  ball_.coset_in_ball(c.rep, c.type, &verts);
  return verts;
}

std::vector<CellKey> BallComplex::faces_of(const CellKey& c) const {
  auto verts = vertices_of(c);
  std::vector<CellKey> out;
  if (c.type == 0) return out;  // vertices have no proper faces
  // proper subsets of the type, empty included
  for (GenSet V = (c.type - 1) & c.type;; V = (V - 1) & c.type) {
    for (int v : verts) {
      CellKey f = canonical(v, V);
      if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
    if (V == 0) break;
  }
  std::sort(out.begin(), out.end(), cell_less);
  return out;
}

std::vector<CellKey> BallComplex::cofaces_of(const CellKey& c) const {
  if (!has_cell(c)) throw DomainError("not a cell of this truncation");
  std::vector<CellKey> out;
  for (GenSet T : matrix().spherical_poset().at_least(c.type)) {
    if (T == c.type) continue;
    CellKey up = canonical(c.rep, T);
    if (has_cell(up)) out.push_back(up);
  }
  std::sort(out.begin(), out.end(), cell_less);
  return out;
}

bool BallComplex::cell_subset(const CellKey& a, const CellKey& b) const {
  if ((a.type & b.type) != a.type) return false;
  return canonical(a.rep, b.type).rep == b.rep;
}

std::vector<CellKey> BallComplex::chamber(int vertex, const std::vector<GenSet>* filter,
                                          bool in_ball_only) const {
  std::vector<CellKey> out;
  const std::vector<GenSet>& ts = filter ? *filter : types_;
  for (GenSet T : ts) {
    CellKey c = canonical(vertex, T);
    if (!in_ball_only || has_cell(c)) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), cell_less);
  return out;
}

std::vector<CellKey> BallComplex::cube(const CellKey& c) const {
  if (!has_cell(c)) throw DomainError("not a cell of this truncation");
  std::vector<CellKey> out;
  GenSet T = c.type;
  for (GenSet V = T;; V = (V - 1) & T) {
    out.push_back(canonical(c.rep, V));
    if (V == 0) break;
  }
  std::sort(out.begin(), out.end(), cell_less);
  return out;
}

SimplicialComplex BallComplex::vertex_link(int vertex) const {
  if (!vertex_safe(vertex))
    throw DomainError("vertex at length " + std::to_string(ball_.length(vertex)) +
                      " is unsafe at radius " + std::to_string(radius()) +
                      " (its star may be truncated)");
  std::vector<GenSet> faces;
  for (GenSet T : types_)
    if (T != 0 && cell_in_ball(vertex, T)) faces.push_back(T);
  return SimplicialComplex::from_faces(std::move(faces));
}

BallComplex::OrderComplex BallComplex::order_complex(std::vector<CellKey> subset) const {
  OrderComplex O;
  std::sort(subset.begin(), subset.end(), cell_less);
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  O.cells = std::move(subset);
  std::unordered_map<CellKey, std::int32_t, CellKeyHash> index;
  for (std::size_t i = 0; i < O.cells.size(); ++i)
    index[O.cells[i]] = static_cast<std::int32_t>(i);
  // strictly-containing neighbors inside the subset
  std::vector<GenSet> present_types;
  for (const CellKey& c : O.cells)
    if (present_types.empty() || present_types.back() != c.type)
      present_types.push_back(c.type);
  present_types.erase(std::unique(present_types.begin(), present_types.end()),
                      present_types.end());
  std::vector<std::vector<std::int32_t>> up(O.cells.size());
  for (std::size_t i = 0; i < O.cells.size(); ++i)
    for (GenSet T : present_types) {
      if (T == O.cells[i].type || (T & O.cells[i].type) != O.cells[i].type) continue;
      auto it = index.find(canonical(O.cells[i].rep, T));
      if (it != index.end()) up[i].push_back(it->second);
    }
  // depth-first chain enumeration; containment is transitive along paths
  std::vector<std::int32_t> chain;
  auto emit = [&](auto&& self, std::int32_t at) -> void {
    chain.push_back(at);
    O.simplices.emplace_back(chain.begin(), chain.end());
    for (std::int32_t nxt : up[at]) self(self, nxt);
    chain.pop_back();
  };
  for (std::size_t i = 0; i < O.cells.size(); ++i)
    emit(emit, static_cast<std::int32_t>(i));
  std::sort(O.simplices.begin(), O.simplices.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return O;
}

std::string BallComplex::format_cell(const CellKey& c) const {
  return "(" + matrix().format_word(ball_.element(c.rep).word) + "," +
         matrix().format_set(c.type) + ")";
}

std::vector<GenSet> chamber_filter_types(const CoxeterMatrix& M, GenSet U, Gen t) {
  std::vector<GenSet> out;
  for (GenSet T : M.spherical_poset().sets)
    if ((T & U) == T && M.is_spherical(set_add(T, t)) && (U & set_add(T, t)) == set_add(T, t))
      out.push_back(T);
  return out;
}

}  // namespace cox
