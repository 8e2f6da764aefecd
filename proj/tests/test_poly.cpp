#include "doctest.h"
#include "modrep/poly.hpp"
#include "modrep/util.hpp"

using namespace modrep;
using namespace modrep::poly;
using gf::FieldTower;
using gf::Level;

namespace {

MultiPoly dickson_poly(gf::FieldCtx ctx, long e) {
  // X^e Y - X Y^e as a single-slot polynomial of degree e+1
  Profile prof{static_cast<int>(e + 1)};
  MultiPoly P(ctx, prof);
  int i1[] = {1};
  int ie[] = {static_cast<int>(e)};
  P.set_coeff(std::span<const int>(i1, 1), 1);
  P.set_coeff(std::span<const int>(ie, 1), ctx.neg(1));
  return P;
}

}  // namespace

TEST_CASE("falling factorial basics") {
  CHECK(falling(7, 0, 5) == 1);
  CHECK(falling(5, 2, 23) == 20);  // 5*4
  CHECK(falling(9, -3, 5) == 0);
  CHECK(falling(-2, 2, 5) == mod_residue((-2) * (-3), 5));
}

TEST_CASE("binomial sum identity for falling factorials") {
  // sum_m C(k,m) [r-j]_{t-l-m} [j]_{l+m} = [r-t+k]_k [r-j]_{t-k-l} [j]_l,
  // exhaustively over the range it is applied in (0 <= l <= t-k; it is false
  // for l > t-k, e.g. p=3, t=k=l=j=1, r=0)
  for (long p : {3L, 5L, 7L}) {
    for (int t = 0; t <= 6; ++t)
      for (int k = 0; k <= t; ++k)
        for (int l = 0; l <= t - k; ++l)
          for (int j = 0; j <= 6; ++j)
            for (int r = 0; r <= 14; ++r) {
              long lhs = 0;
              for (int m = 0; m <= k; ++m)
                lhs = mod_residue(
                    lhs + binom(k, m, p) * falling(r - j, t - l - m, p) % p * falling(j, l + m, p),
                    p);
              long rhs = falling(r - t + k, k, p) * falling(r - j, t - k - l, p) % p *
                         falling(j, l, p) % p;
              REQUIRE(lhs == mod_residue(rhs, p));
            }
  }
}

TEST_CASE("derivatives") {
  auto tw = FieldTower::build(5, 1);
  auto ctx = tw->ctx(Level::mid_q);
  SUBCASE("d/dX of X^r is r X^{r-1}") {
    int i0[] = {0};
    auto P = MultiPoly::monomial(ctx, {7}, std::span<const int>(i0, 1));
    auto D = P.derive(0, 0);
    CHECK(D.profile()[0] == 6);
    CHECK(D.coeff(std::span<const int>(i0, 1)) == 7 % 5);
  }
  SUBCASE("d/dY of theta drops the Y^{p-1} term mod p") {
    auto th = dickson_poly(ctx, 5);
    auto D = th.derive(0, 1);
    // X^5 remains; 5 X Y^4 vanishes
    int i0[] = {0};
    CHECK(D.coeff(std::span<const int>(i0, 1)) == 1);
    for (int i = 1; i <= 5; ++i) {
      int ii[] = {i};
      CHECK(D.coeff(std::span<const int>(ii, 1)) == 0);
    }
  }
  SUBCASE("second derivative of X^2 Y^2") {
    auto t7 = FieldTower::build(7, 1);
    auto c7 = t7->ctx(Level::mid_q);
    int i2[] = {2};
    auto P = MultiPoly::monomial(c7, {4}, std::span<const int>(i2, 1));
    auto D = P.derive(0, 0).derive(0, 1);
    int i1[] = {1};
    CHECK(D.coeff(std::span<const int>(i1, 1)) == 4);  // 2*2 = 4
    CHECK(D.profile()[0] == 2);
  }
}

TEST_CASE("evaluation of Dickson polynomials vanishes on rational points") {
  auto tw = FieldTower::build(5, 1);
  auto ctx = tw->ctx(Level::mid_q);
  auto th = dickson_poly(ctx, 5);
  for (std::uint32_t c = 0; c < 5; ++c)
    for (std::uint32_t d = 0; d < 5; ++d) {
      EvalPoint pt{ctx, {{c, d}}};
      CHECK(th.evaluate(pt).is_zero());
    }

  auto t9 = FieldTower::build(3, 2);
  auto c9 = t9->ctx(Level::mid_q);
  auto thq = dickson_poly(c9, 9);
  for (std::uint32_t c = 0; c < 9; ++c)
    for (std::uint32_t d = 0; d < 9; ++d) {
      EvalPoint pt{c9, {{c, d}}};
      CHECK(thq.evaluate(pt).is_zero());
    }

  int i0[] = {0};
  auto X7 = MultiPoly::monomial(ctx, {7}, std::span<const int>(i0, 1));
  EvalPoint one{ctx, {{1, 0}}};
  CHECK(X7.evaluate(one).idx() == 1);
}

TEST_CASE("eval_diff") {
  auto tw = FieldTower::build(5, 1);
  auto c2 = tw->ctx(Level::top_q2);
  int i0[] = {0};
  auto P = MultiPoly::monomial(c2, {6}, std::span<const int>(i0, 1));  // X^{p+1}
  std::uint32_t A = tw->alpha();                                      // A in F_25 \ F_5
  std::uint32_t Ap = c2.pow(A, 5);
  EvalPoint a{c2, {{A, 1}}};
  CHECK(P.eval_diff(a, a).is_zero());
  EvalPoint b{c2, {{Ap, 1}}};
  // X^{p+1} at (A^p, *) minus at (A, *): A^{p(p+1)} - A^{p+1} = 0 since p+1 | p^2-1
  CHECK(P.eval_diff(a, b).is_zero());
  // X^p Y + X Y^p between the same two points (with Y = B, B^p)
  std::uint32_t B = c2.add(1, A);  // 1 + alpha
  MultiPoly Q(c2, {6});
  int j1[] = {1}, j5[] = {5};
  Q.set_coeff(std::span<const int>(j1, 1), 1);
  Q.set_coeff(std::span<const int>(j5, 1), 1);
  EvalPoint lo{c2, {{A, B}}};
  EvalPoint hi{c2, {{Ap, c2.pow(B, 5)}}};
  CHECK(Q.eval_diff(lo, hi).is_zero());
}

TEST_CASE("substitute_linear") {
  auto tw = FieldTower::build(3, 1);
  auto ctx = tw->ctx(Level::mid_q);
  auto th = dickson_poly(ctx, 3);
  SUBCASE("identity fixes polynomials") {
    auto g = grp::identity(tw);
    CHECK(substitute_linear(th, g) == th);
  }
  SUBCASE("every g scales theta by its determinant") {
    for (const auto& g : grp::enumerate_group(tw)) {
      auto moved = substitute_linear(th, g);
      CHECK(moved == th.scale(g.det()));
    }
  }
  SUBCASE("Weyl element swaps variables") {
    int i0[] = {0};
    auto X5 = MultiPoly::monomial(ctx, {5}, std::span<const int>(i0, 1));
    int i5[] = {5};
    auto Y5 = MultiPoly::monomial(ctx, {5}, std::span<const int>(i5, 1));
    CHECK(substitute_linear(X5, grp::weyl(tw)) == Y5);
  }
}

TEST_CASE("substitution is a left action") {
  Rng rng(777);
  for (auto [p, f] : {std::pair<long, int>{3, 1}, {3, 2}}) {
    auto tw = FieldTower::build(p, f);
    auto ctx = tw->ctx(Level::mid_q);
    auto G = grp::enumerate_group(tw);
    Profile prof(f, 0);
    for (int j = 0; j < f; ++j) prof[j] = 2 + static_cast<int>(rng.below(3));
    for (int trial = 0; trial < 20; ++trial) {
      MultiPoly P(ctx, prof);
      for (auto& c : P.coeffs_mut()) c = static_cast<std::uint32_t>(rng.below(ctx.size()));
      const auto& g = G[rng.below(G.size())];
      const auto& h = G[rng.below(G.size())];
      auto lhs = substitute_linear(substitute_linear(P, h), g);
      auto rhs = substitute_linear(P, g.mul(h));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("evaluate after substitution equals evaluation at the transformed point") {
  auto tw = FieldTower::build(5, 1);
  auto ctx = tw->ctx(Level::mid_q);
  Rng rng(99);
  auto G = grp::enumerate_group(tw);
  for (int trial = 0; trial < 50; ++trial) {
    MultiPoly P(ctx, {6});
    for (auto& c : P.coeffs_mut()) c = static_cast<std::uint32_t>(rng.below(5));
    const auto& g = G[rng.below(G.size())];
    auto c = static_cast<std::uint32_t>(rng.below(5));
    auto d = static_cast<std::uint32_t>(rng.below(5));
    auto gP = substitute_linear(P, g);
    EvalPoint pt{ctx, {{c, d}}};
    std::uint32_t xs = ctx.add(ctx.mul(g.a, c), ctx.mul(g.c, d));
    std::uint32_t ys = ctx.add(ctx.mul(g.b, c), ctx.mul(g.d, d));
    EvalPoint moved{ctx, {{xs, ys}}};
    CHECK(gP.evaluate(pt) == P.evaluate(moved));
  }
}

TEST_CASE("multiply adds profiles and distributes over evaluation") {
  auto tw = FieldTower::build(3, 2);
  auto ctx = tw->ctx(Level::mid_q);
  Rng rng(5);
  MultiPoly A(ctx, {2, 1}), B(ctx, {1, 2});
  for (auto& c : A.coeffs_mut()) c = static_cast<std::uint32_t>(rng.below(9));
  for (auto& c : B.coeffs_mut()) c = static_cast<std::uint32_t>(rng.below(9));
  auto C = A.multiply(B);
  CHECK(C.profile() == Profile{3, 3});
  for (int t = 0; t < 20; ++t) {
    EvalPoint pt{ctx,
                 {{static_cast<std::uint32_t>(rng.below(9)), static_cast<std::uint32_t>(rng.below(9))},
                  {static_cast<std::uint32_t>(rng.below(9)), static_cast<std::uint32_t>(rng.below(9))}}};
    CHECK(C.evaluate(pt) == A.evaluate(pt) * B.evaluate(pt));
  }
}

TEST_CASE("text round trip") {
  auto tw = FieldTower::build(3, 1);
  auto ctx = tw->ctx(Level::mid_q);
  auto P = MultiPoly::parse(ctx, "X0^3*Y0 + 2*X0*Y0^3");
  CHECK(P.profile() == Profile{4});
  CHECK(MultiPoly::parse(ctx, P.to_string()) == P);
  auto Q = MultiPoly::parse(ctx, "X0^3*Y0 - X0*Y0^3");
  CHECK(P == Q);
  CHECK_THROWS_AS(MultiPoly::parse(ctx, "X0^2 + X0"), Error);  // not homogeneous

  auto t9 = FieldTower::build(3, 2);
  auto c9 = t9->ctx(Level::mid_q);
  auto R = MultiPoly::parse(c9, "[1,2]*X0*X1^2 + Y0*X1*Y1");
  CHECK(MultiPoly::parse(c9, R.to_string()) == R);
}
