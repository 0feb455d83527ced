#include <algorithm>
#include <random>
#include <set>

#include "cox/system.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace cox;
using coxtest::DihedralOracle;

namespace {

CoxeterSystem dihedral_system(int m) {
  return CoxeterSystem(
      CoxeterMatrix::parse("generators: s t\nm: s t " + std::to_string(m)));
}

Word random_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> d(0, rank - 1);
  Word w(len);
  for (auto& g : w) g = static_cast<Gen>(d(rng));
  return w;
}

}  // namespace

TEST_CASE("dihedral engines agree with the symmetry-group model") {
  // Exhaustive: every word up to length 8 over {s,t}, several orders m.
  for (int m : {2, 4, 6, 8, 3, 5}) {
    CAPTURE(m);
    CoxeterSystem W = dihedral_system(m);
    DihedralOracle O(m);
    auto dist = O.lengths();
    for (int len = 0; len <= 8; ++len) {
      for (unsigned bits = 0; bits < (1u << len); ++bits) {
        Word w;
        for (int i = 0; i < len; ++i) w.push_back((bits >> i) & 1);
        auto model = O.eval(w);
        Element e = W.normal_form(w);
        REQUIRE(e.length() == dist.at(model));
        REQUIRE(O.eval(e.word) == model);
        REQUIRE(W.is_reduced(w) == (static_cast<int>(w.size()) == dist.at(model)));
      }
    }
  }
}

TEST_CASE("braid class matches the exhaustive dihedral word list") {
  for (int m : {4, 6}) {
    CAPTURE(m);
    CoxeterSystem W = dihedral_system(m);
    DihedralOracle O(m);
    for (auto x : O.all()) {
      auto expected = O.reduced_words(x);
      std::sort(expected.begin(), expected.end());
      Element e = W.normal_form(expected.front());
      auto got = W.reduced_words(e.word);
      REQUIRE(got == expected);
    }
  }
}

TEST_CASE("canonical form is the ShortLex minimum of the braid class") {
  auto W = coxtest::load_system("sysb.cox");
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 300; ++trial) {
    Element e = W.normal_form(random_word(rng, 4, 9));
    auto words = W.reduced_words(e.word);
    CHECK(e.word == words.front());
    for (const auto& u : words) CHECK(W.normal_form(u) == e);
  }
  CHECK_THROWS_AS(W.reduced_words(Word{0, 0}), DomainError);
}

TEST_CASE("group laws under random words") {
  auto W = coxtest::load_system("sysb.cox");
  std::mt19937 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    Element a = W.normal_form(random_word(rng, 4, 7));
    Element b = W.normal_form(random_word(rng, 4, 7));
    Element c = W.normal_form(random_word(rng, 4, 5));
    // multiplication agrees with concatenation
    Word ab = a.word;
    ab.insert(ab.end(), b.word.begin(), b.word.end());
    CHECK(W.multiply(a, b) == W.normal_form(ab));
    // associativity, inverses, identity
    CHECK(W.multiply(W.multiply(a, b), c) == W.multiply(a, W.multiply(b, c)));
    CHECK(W.multiply(a, W.inverse(a)).is_identity());
    CHECK(W.multiply(a, W.identity()) == a);
    // length is subadditive and congruent mod 2
    int la = a.length(), lb = b.length(), lab = W.multiply(a, b).length();
    CHECK(lab <= la + lb);
    CHECK((lab - la - lb) % 2 == 0);
    CHECK(W.inverse(a).length() == la);
  }
}

TEST_CASE("descent sets") {
  auto W = coxtest::load_system("sysb.cox");
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 150; ++trial) {
    Element a = W.normal_form(random_word(rng, 4, 8));
    GenSet rd = W.right_descents(a), ld = W.left_descents(a);
    for (Gen g = 0; g < 4; ++g) {
      CHECK(set_contains(rd, g) == (W.right_mul(a, g).length() < a.length()));
      CHECK(set_contains(ld, g) == (W.left_mul(g, a).length() < a.length()));
    }
  }
  CHECK(W.right_descents(W.identity()) == 0u);
}

TEST_CASE("coset minima") {
  auto W = coxtest::load_system("sysb.cox");
  const auto& M = W.matrix();
  Gen t = M.generator("t"), s = M.generator("s");
  GenSet ts = set_add(set_add(0, t), s);
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Element w = W.normal_form(random_word(rng, 4, 8));
    Element rep = W.coset_min_rep(w, ts);
    CHECK(W.is_reduced_for_cosets(rep, 0, ts));
    // rep and w differ by an element of the subgroup on the right
    Element d = W.multiply(W.inverse(rep), w);
    CHECK((d.support & ~ts) == 0);
    // every coset member has length l(rep) + l(member of W_T)
    for (const Element& x : {W.normal_form({t}), W.normal_form({t, s}), W.normal_form({s, t})})
      CHECK(W.multiply(rep, x).length() == rep.length() + x.length());
  }
}

TEST_CASE("longest elements of spherical subsets") {
  auto W = coxtest::load_system("sysb.cox");
  const auto& M = W.matrix();
  GenSet ts = M.parse_set({"t", "s"});
  Element w0 = W.longest_element(ts);
  CHECK(w0.length() == 4);
  CHECK(W.right_descents(w0) == ts);
  // w0 is an involution here
  CHECK(W.multiply(w0, w0).is_identity());
  CHECK_THROWS_AS(W.longest_element(M.parse_set({"t", "r"})), DomainError);
  auto D = coxtest::load_system("sysd.cox");
  GenSet big = D.matrix().parse_set({"t1", "s1", "t2", "s2"});
  CHECK(D.longest_element(big).length() == 8);
}

TEST_CASE("letter parity and erasure in even systems") {
  auto W = coxtest::load_system("sysb.cox");
  const auto& M = W.matrix();
  Gen t = M.generator("t");
  GenSet keep = M.parse_set({"t", "s"});
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    Element a = W.normal_form(random_word(rng, 4, 7));
    Element b = W.normal_form(random_word(rng, 4, 7));
    // parity of each letter is the same across the whole braid class
    for (const auto& u : W.reduced_words(a.word))
      CHECK(std::count(u.begin(), u.end(), t) % 2 == W.letter_count(a, t) % 2);
    // erasure is a homomorphism onto the subgroup
    Element ea = W.erase_generators_outside(a, keep);
    Element eb = W.erase_generators_outside(b, keep);
    CHECK(W.erase_generators_outside(W.multiply(a, b), keep) == W.multiply(ea, eb));
    CHECK((ea.support & ~keep) == 0);
    // erasure fixes what it keeps
    CHECK(W.erase_generators_outside(ea, keep) == ea);
  }
  // parity needs evenness
  CoxeterSystem odd = dihedral_system(3);
  CHECK_THROWS_AS(odd.occurs_evenly(odd.generator_element(0), 0), EvennessError);
  CHECK_THROWS_AS(odd.erase_generators_outside(odd.generator_element(0), 1), EvennessError);
}

TEST_CASE("exchange style sanity in a product system") {
  // SYS-D is the direct product of two quadrilateral factors; letters of
  // different factors commute, and lengths add across factors.
  auto D = coxtest::load_system("sysd.cox");
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Element a = D.normal_form(random_word(rng, 4, 6));              // factor 1
    Word shifted = random_word(rng, 4, 6);
    for (auto& g : shifted) g = static_cast<Gen>(g + 4);            // factor 2
    Element b = D.normal_form(shifted);
    CHECK(D.multiply(a, b) == D.multiply(b, a));
    CHECK(D.multiply(a, b).length() == a.length() + b.length());
  }
}

TEST_CASE("packed word limits raise scale errors") {
  auto W = coxtest::load_system("sysa.cox");
  Word long_word(40, 0);
  CHECK_THROWS_AS(W.normal_form(long_word), ScaleError);
}
