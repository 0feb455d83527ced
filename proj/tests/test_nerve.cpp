#include <algorithm>

#include "cox/nerve.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"

using namespace cox;

TEST_CASE("nerve of the quadrilateral system is a 4-cycle") {
  auto M = coxtest::load_matrix("sysb.cox");
  auto K = build_nerve(M);
  CHECK(K.f_vector() == std::vector<int>{4, 4});
  CHECK(K.dim() == 1);
  CHECK(K.connected());
  CHECK(K.euler_characteristic() == 0);
  CHECK(K.has_face(M.parse_set({"t", "s"})));
  CHECK_FALSE(K.has_face(M.parse_set({"t", "r"})));
  auto sc = sphere_check(K, 1);
  CHECK(sc.pass);
  CHECK(is_flag(K));
}

TEST_CASE("nerves of the larger bundled systems") {
  auto pent = build_nerve(coxtest::load_matrix("sysc.cox"));
  CHECK(pent.f_vector() == std::vector<int>{5, 5});
  CHECK(sphere_check(pent, 1).pass);
  CHECK(is_flag(pent));

  // both rank-8 systems have the boundary of the 16-cell as nerve
  for (const char* name : {"sysd.cox", "syse.cox"}) {
    CAPTURE(name);
    auto K = build_nerve(coxtest::load_matrix(name));
    CHECK(K.f_vector() == std::vector<int>{8, 24, 32, 16});
    CHECK(K.euler_characteristic() == 0);
    auto sc = sphere_check(K, 3);
    CAPTURE(sc.failures.empty() ? "" : sc.failures.front().c_str());
    CHECK(sc.pass);
    CHECK(is_flag(K));
  }
}

TEST_CASE("hollow triangle: a circle that is not flag") {
  auto M = coxtest::load_matrix("hollow.cox");
  auto K = build_nerve(M);
  CHECK(K.f_vector() == std::vector<int>{3, 3});
  CHECK(sphere_check(K, 1).pass);
  GenSet witness = 0;
  CHECK_FALSE(is_flag(K, &witness));
  CHECK(witness == M.full_set());
}

TEST_CASE("full simplex nerve fails the circle battery") {
  auto K = build_nerve(coxtest::load_matrix("sysa.cox"));
  CHECK(K.f_vector() == std::vector<int>{2, 1});
  CHECK(K.euler_characteristic() == 1);
  auto sc = sphere_check(K, 1);
  CHECK_FALSE(sc.pass);
  CHECK_FALSE(sc.failures.empty());
  CHECK(is_flag(K));
}

TEST_CASE("links inside the 16-cell nerve") {
  auto M = coxtest::load_matrix("sysd.cox");
  auto K = build_nerve(M);
  // link of a vertex: a 2-sphere (suspension of a 4-cycle)
  auto L = link_of(K, M.parse_set({"t1"}));
  CHECK(L.f_vector() == std::vector<int>{6, 12, 8});
  CHECK(sphere_check(L, 2).pass);
  // link of an edge: a 4-cycle
  auto L2 = link_of(K, M.parse_set({"t1", "s1"}));
  CHECK(L2.f_vector() == std::vector<int>{4, 4});
  CHECK(sphere_check(L2, 1).pass);
  // link of a top face is empty
  auto L4 = link_of(K, M.parse_set({"t1", "s1", "t2", "s2"}));
  CHECK(L4.empty());
  CHECK_THROWS_AS(link_of(K, M.parse_set({"t1", "r1"})), DomainError);
}

TEST_CASE("sphere battery rejects near misses") {
  // two triangles glued along an edge: right homology in low degrees, wrong
  // local structure
  auto strip = SimplicialComplex::from_faces(
      {1, 2, 4, 8, 3, 5, 6, 10, 12, 7, 14});  // vertices 0..3, faces 012, 123
  CHECK_FALSE(sphere_check(strip, 2).pass);
  // disjoint pair of circles: local structure fine, global counts wrong
  std::vector<GenSet> two;
  auto cyc = [&](std::vector<Gen> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      two.push_back(GenSet{1} << vs[i]);
      two.push_back((GenSet{1} << vs[i]) | (GenSet{1} << vs[(i + 1) % vs.size()]));
    }
  };
  cyc({0, 1, 2});
  cyc({3, 4, 5});
  CHECK_FALSE(sphere_check(SimplicialComplex::from_faces(two), 1).pass);
  // a single circle passes
  two.clear();
  cyc({0, 1, 2, 3});
  CHECK(sphere_check(SimplicialComplex::from_faces(two), 1).pass);
  // 0-sphere
  CHECK(sphere_check(SimplicialComplex::from_faces({1, 8}), 0).pass);
  CHECK_FALSE(sphere_check(SimplicialComplex::from_faces({1}), 0).pass);
}

TEST_CASE("downward closure is enforced") {
  CHECK_THROWS_AS(SimplicialComplex::from_faces({3}), DomainError);
  CHECK_NOTHROW(SimplicialComplex::from_faces({1, 2, 3}));
}

TEST_CASE("generator neighborhoods") {
  auto B = coxtest::load_matrix("sysb.cox");
  auto N = neighborhood(B, B.generator("t"));
  CHECK(N.U == B.parse_set({"t", "s", "q"}));
  CHECK(N.heavy == B.parse_set({"s"}));
  REQUIRE(N.pair_commuters.size() == 1);
  CHECK(N.pair_commuters.at(B.generator("s")) == 0u);

  auto D = coxtest::load_matrix("sysd.cox");
  auto N1 = neighborhood(D, D.generator("t1"));
  CHECK(N1.U == D.parse_set({"t1", "s1", "q1", "t2", "s2", "r2", "q2"}));
  CHECK(N1.heavy == D.parse_set({"s1"}));
  CHECK(N1.pair_commuters.at(D.generator("s1")) ==
        D.parse_set({"t2", "s2", "r2", "q2"}));

  // s1 sees t1 as its heavy partner symmetrically
  auto Ns = neighborhood(D, D.generator("s1"));
  CHECK(Ns.heavy == D.parse_set({"t1"}));
  CHECK(Ns.pair_commuters.at(D.generator("t1")) ==
        D.parse_set({"t2", "s2", "r2", "q2"}));

  // in the right-angled pentagon no bond is heavy
  auto C = coxtest::load_matrix("sysc.cox");
  for (Gen g = 0; g < C.rank(); ++g) {
    auto Nc = neighborhood(C, g);
    CHECK(Nc.heavy == 0u);
    CHECK(set_size(Nc.U) == 3);
  }
}

TEST_CASE("orbihedral euler characteristic") {
  CHECK(rational_string(orbihedral_euler_characteristic(coxtest::load_matrix("sysa.cox"))) == "1/8");
  CHECK(rational_string(orbihedral_euler_characteristic(coxtest::load_matrix("sysb.cox"))) == "-1/4");
  CHECK(rational_string(orbihedral_euler_characteristic(coxtest::load_matrix("sysc.cox"))) == "-1/4");
  CHECK(rational_string(orbihedral_euler_characteristic(coxtest::load_matrix("sysd.cox"))) == "1/16");
  CHECK(rational_string(orbihedral_euler_characteristic(coxtest::load_matrix("syse.cox"))) == "0");
  CHECK(rational_string(orbihedral_euler_characteristic(coxtest::load_matrix("hollow.cox"))) == "-1/8");
}
