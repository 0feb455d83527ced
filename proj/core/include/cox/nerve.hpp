#pragma once
// Simplicial complexes on the generator set (faces as bitmasks), the nerve of
// a Coxeter system, flagness, links, a sphere-recognition battery for
// dimensions 0..3, generator neighborhood data, and the orbihedral Euler
// characteristic.

#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cox/homology.hpp"
#include "cox/matrix.hpp"
#include "cox/types.hpp"

namespace cox {

struct SimplicialComplex {
  GenSet vertices = 0;
  std::vector<GenSet> faces;  // nonempty, closed under subsets, (size, lex) order
  std::unordered_set<GenSet> face_set;

  // Validates downward closure and sorts deterministically.
  static SimplicialComplex from_faces(std::vector<GenSet> faces);

  bool has_face(GenSet F) const { return face_set.count(F) != 0; }
  bool empty() const { return faces.empty(); }
  int dim() const;
  std::vector<int> f_vector() const;  // f_vector()[k] = number of k-faces
  long long euler_characteristic() const;
  bool connected() const;  // via edges; true when empty or a single vertex
  ChainComplex chain_complex() const;
};

// Faces = nonempty spherical subsets of the generating set.
SimplicialComplex build_nerve(const CoxeterMatrix& M);

// Every pairwise-connected vertex set spans a face. On failure, the smallest
// missing face is reported through `witness` if given.
bool is_flag(const SimplicialComplex& K, GenSet* witness = nullptr);

SimplicialComplex link_of(const SimplicialComplex& K, GenSet F);

// Battery of local and global conditions consistent with the n-sphere:
// purity, vertex/edge/triangle incidence counts, recursive link checks,
// connectivity, Euler characteristic, integer homology. n <= 3.
struct SphereCheck {
  int n = -1;
  bool pass = false;
  std::vector<std::string> failures;
  std::vector<std::pair<std::string, std::string>> facts;
};
SphereCheck sphere_check(const SimplicialComplex& K, int n);

// Neighborhood data of a generator t:
//   U               t together with all finite-bond partners
//   heavy           partners s with 4 <= m_st < infinity
//   pair_commuters  for each heavy s, members of U - {s,t} commuting with both
struct GenNeighborhood {
  Gen t = 0;
  GenSet U = 0;
  GenSet heavy = 0;
  std::map<Gen, GenSet> pair_commuters;
};
GenNeighborhood neighborhood(const CoxeterMatrix& M, Gen t);

// Sum of (-1)^|T| / |W_T| over all spherical subsets T.
Rat orbihedral_euler_characteristic(const CoxeterMatrix& M);

}  // namespace cox
