#include <map>
#include <set>

#include "doctest.h"
#include "modrep/grp.hpp"
#include "modrep/util.hpp"

using namespace modrep;
using namespace modrep::grp;
using gf::FieldTower;
using gf::Level;

TEST_CASE("group orders match (q^2-1)(q^2-q)") {
  for (auto [p, f, n] : {std::tuple<long, int, std::size_t>{2, 1, 6}, {3, 1, 48}, {5, 1, 480}}) {
    auto tw = FieldTower::build(p, f);
    CHECK(enumerate_group(tw).size() == n);
    long q = tw->q();
    CHECK(n == static_cast<std::size_t>((q * q - 1) * (q * q - q)));
  }
}

TEST_CASE("group axioms on the full enumeration for q in {2,3}") {
  for (long p : {2L, 3L}) {
    auto tw = FieldTower::build(p, 1);
    auto G = enumerate_group(tw);
    auto id = identity(tw);
    std::set<std::uint64_t> keys;
    for (const auto& g : G) keys.insert(g.key());
    for (const auto& g : G) {
      CHECK(g.mul(id) == g);
      CHECK(g.mul(g.inverse()) == id);
      for (const auto& h : G) CHECK(keys.count(g.mul(h).key()) == 1);
    }
  }
}

TEST_CASE("borel coset representatives") {
  auto tw = FieldTower::build(2, 1);
  CHECK(borel_coset_reps(tw).size() == 3);  // index q+1

  SUBCASE("Weyl factors as identity times the Weyl representative") {
    auto t3 = FieldTower::build(3, 1);
    auto [b, k] = factor_borel(t3, weyl(t3));
    CHECK(b == identity(t3));
    CHECK(k == 3);  // last representative
  }

  SUBCASE("unique factorization covers the group; |B| * #reps = |G|") {
    auto t3 = FieldTower::build(3, 1);
    auto G = enumerate_group(t3);
    auto reps = borel_coset_reps(t3);
    long nB = 0;
    for (const auto& g : G)
      if (g.is_upper_triangular()) ++nB;
    CHECK(nB == (3 - 1) * (3 - 1) * 3);  // (q-1)^2 q
    CHECK(static_cast<long>(G.size()) == nB * static_cast<long>(reps.size()));
    std::map<int, int> counts;
    for (const auto& g : G) {
      auto [b, k] = factor_borel(t3, g);
      CHECK(b.is_upper_triangular());
      CHECK(b.mul(reps[k]) == g);
      counts[k]++;
    }
    for (auto [k, n] : counts) CHECK(n == nB);
  }
}

TEST_CASE("torus embedding") {
  auto tw = FieldTower::build(5, 1);
  auto c2 = tw->ctx(Level::top_q2);

  SUBCASE("one maps to the identity; alpha to (0 alpha^2; 1 0)") {
    CHECK(torus_embed(tw, 1) == identity(tw));
    auto t = torus_embed(tw, tw->alpha());
    CHECK(t.a == 0);
    CHECK(t.d == 0);
    CHECK(t.c == 1);
    CHECK(t.b == tw->alpha_sq_in_q());
  }

  SUBCASE("zero is rejected") { CHECK_THROWS_AS(torus_embed(tw, 0), Error); }

  SUBCASE("multiplicative on 50 random pairs in F_25^*") {
    Rng rng(4242);
    for (int t = 0; t < 50; ++t) {
      auto x = static_cast<std::uint32_t>(1 + rng.below(24));
      auto y = static_cast<std::uint32_t>(1 + rng.below(24));
      CHECK(torus_embed(tw, c2.mul(x, y)) == torus_embed(tw, x).mul(torus_embed(tw, y)));
    }
  }

  SUBCASE("determinant is the norm x^{q+1}") {
    for (long p : {3L, 5L}) {
      auto t = FieldTower::build(p, 1);
      auto cc = t->ctx(Level::top_q2);
      for (std::uint32_t x = 1; x < cc.size(); ++x) {
        std::uint32_t norm = cc.mul(x, cc.frobenius(x, 1));  // x * x^q
        // the norm lands in F_q
        auto emb = t->embed(Level::mid_q, Level::top_q2, torus_embed(t, x).det());
        CHECK(emb == norm);
      }
    }
  }
}

TEST_CASE("torus cosets") {
  SUBCASE("index p^2 - p") {
    auto t3 = FieldTower::build(3, 1);
    CHECK(torus_coset_reps(t3).size() == 6);
    auto t5 = FieldTower::build(5, 1);
    CHECK(torus_coset_reps(t5).size() == 20);
  }

  SUBCASE("unique factorization partitions GL_2(F_3)") {
    auto tw = FieldTower::build(3, 1);
    TorusCosets cosets(tw);
    auto G = enumerate_group(tw);
    std::map<int, int> counts;
    for (const auto& g : G) {
      auto [x, k] = cosets.factor(g);
      CHECK(torus_embed(tw, x).mul(cosets.reps()[k]) == g);
      counts[k]++;
    }
    CHECK(counts.size() == 6);
    for (auto [k, n] : counts) CHECK(n == 8);  // |T| = q^2 - 1
  }

  SUBCASE("rejected in characteristic 2") {
    auto t2 = FieldTower::build(2, 1);
    CHECK_THROWS_AS(TorusCosets{t2}, Error);
  }
}

TEST_CASE("matrix parse and print round trip") {
  auto tw = FieldTower::build(3, 1);
  auto g = parse_matrix(tw, "[[0,1],[1,0]]");
  CHECK(g == weyl(tw));
  CHECK(parse_matrix(tw, g.to_string()) == g);
  CHECK_THROWS_AS(parse_matrix(tw, "[[1,1],[1,1]]"), Error);  // singular
  auto t9 = FieldTower::build(3, 2);
  auto h = parse_matrix(t9, "[[[1,1],[0,2]],[[0,0],[1,0]]]");
  CHECK(h.a == 4);
  CHECK(h.b == 6);
  CHECK(h.c == 0);
  CHECK(h.d == 1);
}
