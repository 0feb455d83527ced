#include <algorithm>
#include <random>
#include <set>

#include "cox/nerve.hpp"
#include "cox/ruin.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"

using namespace cox;

namespace {

bool contains_cell(const std::vector<CellKey>& sorted, const CellKey& c) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), c, cell_less);
  return it != sorted.end() && *it == c;
}

std::set<int> coset_mins(const GroupBall& ball, const std::vector<int>& verts, GenSet X) {
  std::set<int> reps;
  for (int v : verts) reps.insert(ball.min_rep_in_coset(v, X));
  return reps;
}

}  // namespace

TEST_CASE("type filtering of a one-letter family") {
  auto W = coxtest::load_system("sysb.cox");
  const auto& M = W.matrix();
  BallComplex B(W.ball(4));
  GenSet S = M.full_set();
  Gen t = M.generator("t");
  auto r = build_ruin(B, S, set_add(0, t));

  std::set<GenSet> omega_types, bd_types, hat_types;
  for (const auto& c : r.omega) omega_types.insert(c.type);
  for (const auto& c : r.boundary) bd_types.insert(c.type);
  for (const auto& c : r.hat) hat_types.insert(c.type);
  std::set<GenSet> expected_omega{0, M.parse_set({"t"}), M.parse_set({"s"}),
                                  M.parse_set({"q"}), M.parse_set({"t", "s"}),
                                  M.parse_set({"t", "q"})};
  CHECK(omega_types == expected_omega);
  CHECK(bd_types == std::set<GenSet>{0, M.parse_set({"s"}), M.parse_set({"q"})});
  // the complement side also carries the r-cells the family never sees
  CHECK(hat_types.count(M.parse_set({"r"})) == 1);
  CHECK(hat_types.count(M.parse_set({"s", "r"})) == 1);

  // at radius 4 only the identity coset of the order-8 type fits
  int big = 0;
  for (const auto& c : r.omega)
    if (c.type == M.parse_set({"t", "s"})) ++big;
  CHECK(big == 1);

  // face-closed, and boundary = omega ∩ hat
  for (const auto& c : r.omega)
    for (const auto& f : B.faces_of(c)) CHECK(contains_cell(r.omega, f));
  std::vector<CellKey> meet;
  std::set_intersection(r.omega.begin(), r.omega.end(), r.hat.begin(), r.hat.end(),
                        std::back_inserter(meet), cell_less);
  CHECK(meet == r.boundary);
}

TEST_CASE("empty filter keeps everything") {
  auto W = coxtest::load_system("sysb.cox");
  BallComplex B(W.ball(3));
  auto r = build_ruin(B, W.matrix().full_set(), 0);
  CHECK(r.omega == B.cells());
  CHECK(r.boundary.empty());
  CHECK(r.hat.empty());
}

TEST_CASE("restricting the ambient generator set") {
  auto W = coxtest::load_system("sysb.cox");
  const auto& M = W.matrix();
  BallComplex B(W.ball(3));
  GenSet U = M.parse_set({"t", "s", "q"});
  auto r = build_ruin(B, U, M.parse_set({"t"}));
  for (const auto& c : r.omega) CHECK((c.type & U) == c.type);
  for (const auto& c : r.hat) CHECK((c.type & U) == c.type);

  CHECK_THROWS_AS(build_ruin(B, M.full_set(), M.parse_set({"t", "r"})), DomainError);
  CHECK_THROWS_AS(build_ruin(B, M.parse_set({"s", "q"}), M.parse_set({"t"})), DomainError);
}

TEST_CASE("two-letter filter in the product system") {
  auto D = coxtest::load_system("sysd.cox");
  const auto& M = D.matrix();
  BallComplex B(D.ball(4));
  GenSet T = M.parse_set({"t1", "s1"});
  auto r = build_ruin(B, M.full_set(), T);
  REQUIRE(!r.omega.empty());
  for (const auto& c : r.omega) {
    GenSet K = c.type | T;
    CHECK(M.is_spherical(K));
    CHECK(B.has_cell(B.canonical(c.rep, K)));
  }
  for (const auto& c : r.boundary) CHECK((c.type & T) != T);
  std::vector<CellKey> meet;
  std::set_intersection(r.omega.begin(), r.omega.end(), r.hat.begin(), r.hat.end(),
                        std::back_inserter(meet), cell_less);
  CHECK(meet == r.boundary);
}

TEST_CASE("components are the visible cosets of the neighborhood group") {
  auto W = coxtest::load_system("sysb.cox");
  const auto& M = W.matrix();
  Gen t = M.generator("t");
  GenSet U = neighborhood(M, t).U;
  CHECK(U == M.parse_set({"t", "s", "q"}));

  BallComplex B(W.ball(4));
  auto comps = ruin_components(B, t);
  REQUIRE(!comps.empty());
  CHECK(comps.front().rep_id == 0);
  CHECK(comps.front().coset_rep == W.identity());

  // every ball vertex is painted into exactly one component
  std::vector<int> owner(B.ball().size(), -1);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (int v : comps[i].vertices) {
      CHECK(owner[v] == -1);
      owner[v] = static_cast<int>(i);
    }
  for (int v = 0; v < B.ball().size(); ++v) CHECK(owner[v] >= 0);

  // component count = number of distinct coset minima; vertex sets match cosets
  std::vector<int> all(B.ball().size());
  for (int v = 0; v < B.ball().size(); ++v) all[v] = v;
  auto reps = coset_mins(B.ball(), all, U);
  CHECK(comps.size() == reps.size());
  for (const auto& comp : comps) {
    CHECK(reps.count(comp.rep_id) == 1);
    for (int v : comp.vertices) CHECK(B.ball().min_rep_in_coset(v, U) == comp.rep_id);
  }

  // the identity component holds the whole visible neighborhood group
  std::vector<int> expected;
  for (int v = 0; v < B.ball().size(); ++v)
    if (B.ball().min_rep_in_coset(v, U) == 0) expected.push_back(v);
  CHECK(comps.front().vertices == expected);
}

TEST_CASE("radius-zero ball gives one vertex component") {
  auto W = coxtest::load_system("sysb.cox");
  BallComplex B(W.ball(0));
  auto comps = ruin_components(B, W.matrix().generator("t"));
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].vertices == std::vector<int>{0});
  CHECK(comps[0].cells == std::vector<CellKey>{CellKey{0, 0}});
}

TEST_CASE("components in the right-angled pentagon") {
  auto W = coxtest::load_system("sysc.cox");
  const auto& M = W.matrix();
  Gen a = M.generator("a");
  GenSet U = neighborhood(M, a).U;
  CHECK(set_size(U) == 3);  // a and its two cycle neighbors
  BallComplex B(W.ball(3));
  auto comps = ruin_components(B, a);
  std::vector<int> all(B.ball().size());
  for (int v = 0; v < B.ball().size(); ++v) all[v] = v;
  CHECK(comps.size() == coset_mins(B.ball(), all, U).size());
}

TEST_CASE("collars are coset strips with prism bodies") {
  auto W = coxtest::load_system("sysb.cox");
  const auto& M = W.matrix();
  Gen t = M.generator("t");
  GenSet side = M.parse_set({"s", "q"});
  BallComplex B(W.ball(4));
  auto comps = ruin_components(B, t);
  const auto& omega = comps.front();
  auto cs = collars(B, omega);

  // one collar per visible coset of the infinite side group <s,q>
  auto reps = coset_mins(B.ball(), omega.vertices, side);
  CHECK(cs.size() == reps.size());
  std::set<int> seen;
  for (const auto& col : cs) {
    REQUIRE(!col.vertices.empty());
    int rep = B.ball().min_rep_in_coset(col.vertices.front(), side);
    CHECK(seen.insert(rep).second);
    for (int v : col.vertices) CHECK(B.ball().min_rep_in_coset(v, side) == rep);

    // structural containments
    for (const auto& c : col.boundary_component) {
      CHECK((c.type & set_add(0, t)) == 0);
      CHECK(contains_cell(col.body, c));
    }
    for (const auto& c : col.inner) CHECK(set_contains(c.type, t));
    std::vector<CellKey> overlap;
    std::set_intersection(col.inner.begin(), col.inner.end(),
                          col.boundary_component.begin(), col.boundary_component.end(),
                          std::back_inserter(overlap), cell_less);
    CHECK(overlap.empty());
  }

  // the collar bodies cover the whole component
  for (const auto& c : omega.cells) {
    bool covered = false;
    for (const auto& col : cs) covered = covered || contains_cell(col.body, c);
    CHECK(covered);
  }
}

TEST_CASE("painting the identity component") {
  auto W = coxtest::load_system("sysb.cox");
  const auto& M = W.matrix();
  Gen t = M.generator("t");
  BallComplex B(W.ball(4));
  auto comps = ruin_components(B, t);
  auto col = color_vertices(B, comps.front());

  REQUIRE(col.coordinates.size() == 3);  // {t}, then {s,t}, {q,t} by name order
  CHECK(col.coordinates[0] == M.parse_set({"t"}));
  CHECK(col.coordinates[1] == M.parse_set({"t", "q"}));
  CHECK(col.coordinates[2] == M.parse_set({"t", "s"}));

  CHECK(col.color_at(0) == col.trivial_color);
  CHECK(col.parity.at(col.trivial_color) == 0);

  // the side group <s,q> is painted trivially
  for (int v : comps.front().vertices) {
    Element w = B.ball().element(v);
    bool side_only = !set_contains(w.support, t);
    if (side_only) CHECK(col.color_at(v) == col.trivial_color);
  }

  // t and tst get different colors; tst is even despite being nontrivial
  int vt = B.ball().find(W.from_names({"t"}));
  int vtst = B.ball().find(W.from_names({"t", "s", "t"}));
  REQUIRE(vt >= 0);
  REQUIRE(vtst >= 0);
  CHECK(col.color_at(vt) != col.color_at(vtst));
  CHECK(col.color_at(vtst) != col.trivial_color);
  CHECK(col.parity.at(col.color_at(vt)) == 1);
  CHECK(col.parity.at(col.color_at(vtst)) == 0);

  // translating by the side group never changes the color
  for (int v : comps.front().vertices) {
    Element w = B.ball().element(v);
    for (const std::string& h : {"s", "q"}) {
      Element wh = W.multiply(w, W.from_names({h}));
      int vh = B.ball().find(wh);
      if (vh >= 0 && B.ball().min_rep_in_coset(vh, comps.front().U) == 0)
        CHECK(col.color_at(vh) == col.color_at(v));
    }
  }
}

TEST_CASE("colors do not depend on the chosen word") {
  auto W = coxtest::load_system("sysb.cox");
  const auto& M = W.matrix();
  Gen t = M.generator("t");
  BallComplex B(W.ball(4));
  auto comps = ruin_components(B, t);
  auto col = color_vertices(B, comps.front());

  std::mt19937 rng(987);
  for (int v : comps.front().vertices) {
    Element w = B.ball().element(v);
    auto words = W.reduced_words(w.word);
    std::shuffle(words.begin(), words.end(), rng);
    for (std::size_t k = 0; k < words.size() && k < 3; ++k) {
      std::vector<Element> tuple;
      for (GenSet T : col.coordinates) {
        Word kept;
        for (Gen g : words[k])
          if (set_contains(T, g)) kept.push_back(g);
        tuple.push_back(W.coset_min_rep(W.normal_form(kept), set_remove(T, t)));
      }
      CHECK(tuple == col.tuples.at(v));
    }
  }
}

TEST_CASE("painting requires an even system") {
  auto A2 = CoxeterMatrix::from_orders({"a", "b"}, {{1, 3}, {3, 1}});
  CoxeterSystem W(A2);
  BallComplex B(W.ball(2));
  CHECK_THROWS_AS(color_vertices(B, {0}, 0), EvennessError);
}

TEST_CASE("collar classes in the pentagon: one even and one odd") {
  auto W = coxtest::load_system("sysc.cox");
  const auto& M = W.matrix();
  Gen a = M.generator("a");
  BallComplex B(W.ball(4));
  auto comps = ruin_components(B, a);
  auto cs = collars(B, comps.front());
  auto col = color_vertices(B, comps.front());
  auto classes = color_classes(col, cs);
  REQUIRE(classes.size() == 2);
  std::set<int> parities;
  for (const auto& [key, members] : classes) parities.insert(col.parity.at(key));
  CHECK(parities == std::set<int>{0, 1});
}

TEST_CASE("alternation produces several classes of each parity") {
  auto W = coxtest::load_system("sysb.cox");
  Gen t = W.matrix().generator("t");
  BallComplex B(W.ball(5));
  auto comps = ruin_components(B, t);
  auto cs = collars(B, comps.front());
  auto col = color_vertices(B, comps.front());
  auto classes = color_classes(col, cs);
  int even = 0, odd = 0;
  for (const auto& [key, members] : classes)
    (col.parity.at(key) == 0 ? even : odd)++;
  CHECK(even >= 2);
  CHECK(odd >= 2);

  // same color on distinct collars forces disjoint bodies
  for (const auto& [key, members] : classes)
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        CHECK(color_intersection(cs, {members[i]}, {members[j]}).empty());

  // a collar body meets itself in itself
  auto self = color_intersection(cs, {0}, {0});
  CHECK(self == cs[0].body);
}

TEST_CASE("radius zero has a single trivial class") {
  auto W = coxtest::load_system("sysb.cox");
  Gen t = W.matrix().generator("t");
  BallComplex B(W.ball(0));
  auto comps = ruin_components(B, t);
  auto cs = collars(B, comps.front());
  auto col = color_vertices(B, comps.front());
  auto classes = color_classes(col, cs);
  REQUIRE(classes.size() == 1);
  CHECK(classes.begin()->first == col.trivial_color);
  CHECK(cs.size() == 1);
}
