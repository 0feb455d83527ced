#pragma once
// Integer simplicial homology. Complexes are presented by explicit simplex
// lists (strictly increasing vertex ids, closed under faces); boundary maps
// use the alternating-sign convention and are checked to compose to zero.
// Betti numbers and torsion come from Smith normal forms computed exactly,
// escalating from 64-bit to arbitrary precision integers when needed.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "cox/types.hpp"

namespace cox {

using Simplex = std::vector<std::int32_t>;

class ChainComplex {
 public:
  // Every nonempty simplex, faces included. Validates closure and dd = 0.
  explicit ChainComplex(std::vector<Simplex> simplices);

  int top_dim() const { return static_cast<int>(basis_.size()) - 1; }
  long long size(int k) const;
  long long total_size() const;
  const std::vector<Simplex>& basis(int k) const { return basis_[k]; }
  // Column c of the k-th boundary map as (row in basis(k-1), sign) pairs.
  const std::vector<std::vector<std::pair<std::int32_t, std::int8_t>>>& boundary(int k) const {
    return boundary_[k];
  }
  long long euler_characteristic() const;

  // Quotient by the subcomplex selected by `in_sub`: simplices inside the
  // subcomplex are dropped from the basis and from boundary images.
  ChainComplex relative(const std::function<bool(const Simplex&)>& in_sub) const;

 private:
  ChainComplex() = default;
  void check_boundary_squared() const;

  std::vector<std::vector<Simplex>> basis_;
  std::vector<std::vector<std::vector<std::pair<std::int32_t, std::int8_t>>>> boundary_;
};

struct HomologyResult {
  std::vector<long long> betti;                 // degrees 0..top_dim
  std::vector<std::vector<long long>> torsion;  // elementary divisors > 1 by degree

  bool reduced_trivial() const;  // one component, nothing else
  std::string to_string() const;
};

HomologyResult homology(const ChainComplex& C);

// Smith normal form diagonal of an integer matrix: nonnegative, each entry
// dividing the next, padded with zeros up to min(rows, cols).
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> M);

using Rat = boost::rational<long long>;
std::string rational_string(const Rat& r);

}  // namespace cox
