#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "modrep/gf.hpp"
#include "modrep/util.hpp"

namespace modrep::grp {

// Invertible 2x2 matrix over F_q, entries as raw indices at level mid_q.
struct GroupElem {
  gf::FieldCtx ctx;
  std::uint32_t a = 1, b = 0, c = 0, d = 1;  // [[a,b],[c,d]]

  std::uint32_t det() const { return ctx.sub(ctx.mul(a, d), ctx.mul(b, c)); }

  GroupElem mul(const GroupElem& o) const {
    return GroupElem{ctx, ctx.add(ctx.mul(a, o.a), ctx.mul(b, o.c)),
                     ctx.add(ctx.mul(a, o.b), ctx.mul(b, o.d)),
                     ctx.add(ctx.mul(c, o.a), ctx.mul(d, o.c)),
                     ctx.add(ctx.mul(c, o.b), ctx.mul(d, o.d))};
  }

  GroupElem inverse() const {
    std::uint32_t di = ctx.inv(det());
    return GroupElem{ctx, ctx.mul(di, d), ctx.mul(di, ctx.neg(b)), ctx.mul(di, ctx.neg(c)),
                     ctx.mul(di, a)};
  }

  bool operator==(const GroupElem& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }

  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(a) << 48) | (static_cast<std::uint64_t>(b) << 32) |
           (static_cast<std::uint64_t>(c) << 16) | d;
  }

  bool is_upper_triangular() const { return c == 0; }

  // "[[a,b],[c,d]]" with field-element coordinate syntax
  std::string to_string() const;
};

GroupElem identity(const gf::TowerPtr& tower);
GroupElem weyl(const gf::TowerPtr& tower);
// parse "[[a,b],[c,d]]"; entries integers or coordinate vectors
GroupElem parse_matrix(const gf::TowerPtr& tower, const std::string& text);

// All (q^2-1)(q^2-q) invertible matrices, entries iterated in field
// enumeration order (a outermost). TooLarge when q exceeds the tower guard
// (build_tower already enforces it).
std::vector<GroupElem> enumerate_group(const gf::TowerPtr& tower);

// Lower-unipotent representatives (1 0; c 1) for c in enumeration order,
// then the Weyl element; every g factors uniquely as b * rep with b upper
// triangular.
std::vector<GroupElem> borel_coset_reps(const gf::TowerPtr& tower);

// factor g = b * rep_k with b upper triangular; returns (b, k)
std::pair<GroupElem, int> factor_borel(const gf::TowerPtr& tower, const GroupElem& g);

// anisotropic torus: x = u + v*alpha in F_{q^2}^* embeds as (u v*alpha^2; v u)
GroupElem torus_embed(const gf::TowerPtr& tower, std::uint32_t x_q2);
bool in_torus(const gf::TowerPtr& tower, const GroupElem& g);

// Precomputed torus coset structure: representatives of T\G in first-seen
// enumeration order and the factorization table g = torus_embed(x) * rep_k.
class TorusCosets {
 public:
  explicit TorusCosets(const gf::TowerPtr& tower);

  const std::vector<GroupElem>& reps() const { return reps_; }
  // returns (x in F_{q^2}^*, k) with g = torus_embed(x) * reps()[k]
  std::pair<std::uint32_t, int> factor(const GroupElem& g) const;

 private:
  gf::TowerPtr tower_;
  std::vector<GroupElem> reps_;
  std::unordered_map<std::uint64_t, std::pair<std::uint32_t, int>> table_;
};

std::vector<GroupElem> torus_coset_reps(const gf::TowerPtr& tower);

}  // namespace modrep::grp
