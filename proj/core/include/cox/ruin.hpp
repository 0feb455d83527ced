#pragma once

#include <map>
#include <string>
#include <vector>

#include "cox/complex.hpp"

namespace cox {

// The cells of a ball truncation that survive when every reflection outside the
// parabolic generated by U is discarded and only cells whose type can be
// extended by T are kept.  omega is face-closed; boundary = omega ∩ hat.
struct Ruin {
  GenSet U = 0;
  GenSet T = 0;
  std::vector<CellKey> omega;     // faces of in-ball cells whose type contains T
  std::vector<CellKey> boundary;  // omega cells whose type does not contain T
  std::vector<CellKey> hat;       // cells with type inside U not containing T
  const BallComplex* ball = nullptr;
};

// Type-filters the ball's cells.  Throws DomainError unless T is a spherical
// subset of U.  T = {} degenerates to omega = everything inside U, boundary = {}.
Ruin build_ruin(const BallComplex& B, GenSet U, GenSet T);

// One connected piece of the one-letter ruin of t.  All its vertices lie in a
// single coset w·W_U where U is the finite-bond neighborhood of t; coset_rep is
// the shortest element of that coset.
struct RuinComponent {
  Gen t = 0;
  GenSet U = 0;
  Element coset_rep;
  int rep_id = -1;
  std::vector<CellKey> cells;  // sorted by cell_less
  std::vector<int> vertices;   // sorted ids of the component's vertex cells
};

// Connected components (union-find over codimension-1 face incidence) of the
// set of in-ball cells whose type stays spherical after adding t.  Sorted so
// that the component containing the identity comes first.
std::vector<RuinComponent> ruin_components(const BallComplex& B, Gen t);

// A neighborhood of one connected piece of the component's boundary: the cells
// of the boundary piece, every chamber cell its vertices carry (restricted to
// types that extend by t), and the inner rim made of the t-bearing cells.
struct Collar {
  std::vector<CellKey> boundary_component;
  std::vector<int> vertices;
  std::vector<CellKey> body;
  std::vector<CellKey> inner;
};

std::vector<Collar> collars(const BallComplex& B, const RuinComponent& comp);

// Vertex painting: one coordinate per spherical type containing t, holding the
// canonical shortest representative of the retracted element's W_{T-t}-coset.
// Vertices with equal tuples always have equal t-letter parity; the parity map
// is keyed by the printable color and checked during construction.
struct Coloring {
  Gen t = 0;
  std::vector<GenSet> coordinates;  // ordered by (size, sorted generator names)
  std::map<int, std::vector<Element>> tuples;
  std::map<int, std::string> colors;
  std::map<std::string, int> parity;  // color -> t-letter parity (0 even, 1 odd)
  std::string trivial_color;

  const std::string& color_at(int vertex) const;
};

Coloring color_vertices(const BallComplex& B, const std::vector<int>& vertices, Gen t);
Coloring color_vertices(const BallComplex& B, const RuinComponent& comp);

// Partition of collars (given by index) by the shared color of their boundary
// vertices.  Throws DomainError if some collar's boundary is not monochromatic.
std::map<std::string, std::vector<int>> color_classes(const Coloring& coloring,
                                                      const std::vector<Collar>& cs);

// Intersection of the two unions of collar bodies, as a sorted cell list.
std::vector<CellKey> color_intersection(const std::vector<Collar>& all,
                                        const std::vector<int>& F,
                                        const std::vector<int>& Fprime);

}  // namespace cox
