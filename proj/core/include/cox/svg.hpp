#pragma once
// Strip diagram of the identity component of a one-letter ruin, for rank-3
// systems: collars appear left to right as vertical strips in coset order,
// even-colored strips are filled (one fill per color), odd strips are hollow,
// and a collar with a nonempty inner rim carries a bold vertical on its right
// edge. The output is a standalone SVG document; identical inputs produce
// identical bytes.

#include <string>

#include "cox/complex.hpp"
#include "cox/types.hpp"

namespace cox {

// Throws DomainError unless the system has rank 3; colors additionally
// require an even system.
std::string render_ruin_strips(const BallComplex& B, Gen t);

}  // namespace cox
