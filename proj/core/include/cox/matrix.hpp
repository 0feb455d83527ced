#pragma once
// Coxeter matrices: the .cox text format, evenness, recognition of finite
// (spherical) subsystems with their orders and longest-element lengths, and the
// poset of spherical generator subsets.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cox/types.hpp"

namespace cox {

// Order and longest-element length of a finite Coxeter group.
struct FiniteType {
  std::uint64_t order = 1;
  int longest = 0;  // number of positive roots = l(w0)
};

// All spherical subsets of the generating set, listed by (size, lex) in input
// generator order. max_longest is the largest l(w0(T)) over the list, the
// "vertex depth" bound used for safe-vertex arguments in balls.
struct SphericalPoset {
  std::vector<GenSet> sets;            // includes the empty set
  std::vector<std::uint64_t> orders;   // |W_T|
  std::vector<int> longest;            // l(w0(T))
  int max_longest = 0;
  std::unordered_map<GenSet, int> index;

  bool contains(GenSet T) const { return index.count(T) != 0; }
  int index_of(GenSet T) const;
  // Members of the poset that contain T, in (size, lex) order.
  std::vector<GenSet> at_least(GenSet T) const;
};

class CoxeterMatrix {
 public:
  // Parses the .cox format:
  //   generators: s t r ...
  //   m: s t 4
  //   # comment
  // Unlisted pairs default to infinity; diagonal entries are always 1.
  static CoxeterMatrix parse(const std::string& text);
  static CoxeterMatrix parse_file(const std::string& path);
  static CoxeterMatrix from_orders(std::vector<std::string> names,
                                   std::vector<std::vector<int>> orders);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Gen g) const { return names_.at(g); }
  Gen generator(const std::string& name) const;  // throws DomainError if unknown
  int order(Gen a, Gen b) const { return orders_[a][b]; }

  GenSet full_set() const { return rank() >= 32 ? ~GenSet{0} : (GenSet{1} << rank()) - 1; }
  // Every finite off-diagonal order is even.
  bool is_even() const;
  // Generator names joined by commas, in input order ("{t,s}" without braces).
  std::string format_set(GenSet T) const;
  std::string format_word(const Word& w) const;
  GenSet parse_set(const std::vector<std::string>& names) const;

  bool is_spherical(GenSet T) const;
  // Throw DomainError when T is not spherical.
  std::uint64_t spherical_order(GenSet T) const;
  int longest_length(GenSet T) const;

  const SphericalPoset& spherical_poset() const;  // cached after first use

  // The induced subsystem on U; generators keep their relative input order.
  CoxeterMatrix restrict_to(GenSet U) const;

  // Neighbors of g in the defining graph: finite order >= 3 (the edges of the
  // Coxeter diagram), used by finite-type recognition.
  // For the nerve one needs "finite order at all", which is a different graph.

 private:
  CoxeterMatrix() = default;
  void validate() const;
  std::optional<FiniteType> finite_type(GenSet T) const;  // nullopt if infinite

  std::vector<std::string> names_;
  std::vector<std::vector<int>> orders_;
  std::unordered_map<std::string, Gen> by_name_;
  mutable std::optional<SphericalPoset> poset_;
};

// Recognition table for connected Coxeter diagrams (edges = pairs with order
// >= 3). Exposed for direct testing against the classification.
std::optional<FiniteType> classify_connected_diagram(
    const std::vector<int>& verts, const std::vector<std::vector<int>>& order);

}  // namespace cox
