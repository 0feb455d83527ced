#pragma once
// Exhaustive finite check batteries over balls and ruins: word-level
// factorization constraints, color structure of ruin components, collar
// intersections, the identification of an even color overlap with a commuting
// subsystem's own truncation, codimension-1 face classification in two-letter
// ruins, and the boundary-collapse identities behind relative chain groups.
//
// Every battery walks its full finite instance space and records each
// counterexample; a battery passes iff no counterexample was found. Batteries
// carry stable ids ("2.1", "3.5", "excision", ...) used by the CLI verdicts.

#include <string>
#include <vector>

#include "cox/complex.hpp"
#include "cox/ruin.hpp"

namespace cox {

struct CheckReport {
  std::string id;     // stable battery name used in CLI verdicts
  std::string title;  // what the battery establishes
  long long instances = 0;          // hypothesis matches examined
  std::vector<std::string> failures;
  std::vector<std::string> facts;   // non-failure observations worth reporting

  bool pass() const { return failures.empty(); }
};

// "2.1": for every in-ball factorization g = w t v (reduced, w free of t) and
// every letter r of w absent from v with m_rt != 2, every reduced word of g
// keeps every r strictly left of every t.
CheckReport check_blockers_stay_left(const CoxeterSystem& W, int radius);

// "2.2": whenever some reduced word of g starts t s t (s a heavy partner of t)
// and g = w t v is a reduced split with w free of t and v supported in the
// pair commuters plus {s, t}, then w is supported in the pair commuters plus s.
CheckReport check_prefix_confinement(const CoxeterSystem& W, int radius);

// "3.1": when the nerve is flag, two distinct heavy partners of the same
// generator never span a finite bond. A non-flag nerve voids the hypothesis.
CheckReport check_heavy_partners_unbonded(const CoxeterMatrix& M);

// "3.2": spherical types containing a heavy pair {s, t} extend it only by
// letters commuting with both; on the identity component of the t-ruin, cells
// with two colors carry t, and cells with two even colors carry exactly one
// heavy partner s, with every even color difference supported on {s, t} and
// using t an even number (>= 2) of times.
CheckReport check_two_even_colors(const BallComplex& B, Gen t);

// "3.3": alternating words t s t ... t of odd length <= min(7, m_st - 1) are
// (U - t, U - t)-reduced, U the finite-bond neighborhood of t.
CheckReport check_alternating_words_reduced(const CoxeterSystem& W);

// "3.5": distinct same-colored collars of the identity component of the
// t-ruin have disjoint bodies.
CheckReport check_same_color_disjoint(const BallComplex& B, Gen t);

// "3.6"/"3.7": the overlap of the identity collar body and the t s t collar
// body equals the cells spanned by the pair-commuter subsystem, matches that
// subsystem's own radius-(R - m_st) truncation cell-for-cell with containment
// preserved both ways, and (when that subsystem is two-dimensional) forms a
// surface piece: every interior edge lies in exactly two 2-cells. Below
// radius m_st the overlap must be empty and only that is checked.
// Throws DomainError unless s is a heavy partner of t.
CheckReport verify_evens_isomorphism(const BallComplex& B, Gen s, Gen t);

// "3.10": every odd collar of the identity component meets the union of the
// even collar bodies in exactly its inner rim.
CheckReport check_odd_meets_evens(const BallComplex& B, Gen t);

// "4.1": classifies the codimension-1 faces of the 4-dimensional cells of a
// two-letter ruin as shared (exactly two tops) or free (one top); faces whose
// type drops a filter letter must be free; each shared pattern determines two
// extending letters whose bond must be infinite, and whose alternation drives
// a top-cell walk that the check materializes in both directions until it
// leaves the ball, reporting its length. Throws DomainError unless |T| = 2.
CheckReport classify_codim1_faces(const Ruin& r);

// "excision": cellwise identities behind the relative chain groups of a ruin
// over (V, T) inside the V-truncation:
//   omega(V,T) - boundary(V,T)  ==  cells(V) - hat(V,T), and for each s in T:
//   cells(V-s) - hat(V-s,T-s)   ==  hat(V,T) - hat(V,T-s).
// Throws DomainError unless T is a spherical subset of V.
CheckReport verify_excision(const BallComplex& B, GenSet V, GenSet T);

}  // namespace cox
