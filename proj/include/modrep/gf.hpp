#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modrep/error.hpp"

namespace modrep::gf {

enum class Level : int { base_p = 0, mid_q = 1, top_q2 = 2 };

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

// Field operations on raw element indices at a fixed tower level. An element
// index encodes its coordinate vector over F_p little-endian in base p.
struct FieldCtx {
  const FieldTower* tower = nullptr;
  Level level = Level::base_p;

  bool operator==(const FieldCtx&) const = default;

  int degree() const;
  std::uint32_t size() const;
  long characteristic() const;

  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return 1; }
  std::uint32_t from_int(long long n) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  // a^e with e reduced mod (size-1) for a != 0; 0^0 = 1.
  std::uint32_t pow(std::uint32_t a, long long e) const;
  // a^(p^i)
  std::uint32_t frobenius(std::uint32_t a, long long i) const;

  std::string to_string(std::uint32_t a) const;
};

// The chain F_p ⊂ F_q ⊂ F_{q^2} with deterministic moduli, a fixed embedding,
// and (for odd p) the distinguished alpha with alpha^2 in F_q, alpha not in F_q.
class FieldTower : public std::enable_shared_from_this<FieldTower> {
 public:
  // Moduli are the first irreducible monic polynomials in counting order
  // (constant coefficient least significant). Guard: q <= max_q, overridable
  // via the MODREP_MAX_Q environment variable.
  static TowerPtr build(long p, int f);

  long p() const { return p_; }
  int f() const { return f_; }
  long q() const { return q_; }

  FieldCtx ctx(Level l) const { return FieldCtx{this, l}; }

  int degree(Level l) const { return levels_[static_cast<int>(l)].degree; }
  std::uint32_t size(Level l) const { return levels_[static_cast<int>(l)].size; }
  const std::vector<int>& modulus(Level l) const { return levels_[static_cast<int>(l)].modulus; }

  // All elements, zero first, then coordinate-vector lexicographic (c0 compared first).
  const std::vector<std::uint32_t>& enumerate(Level l) const {
    return levels_[static_cast<int>(l)].enum_order;
  }

  // Field embeddings along the tower. Identity when from == to.
  std::uint32_t embed(Level from, Level to, std::uint32_t x) const;

  bool has_alpha() const { return alpha_.has_value(); }
  // alpha in F_{q^2}; EvenCharacteristic if p = 2.
  std::uint32_t alpha() const;
  // the element s of F_q with embed(s) = alpha^2 (the least non-square of F_q^*)
  std::uint32_t alpha_sq_in_q() const;
  // write x in F_{q^2} as embed(u) + embed(v)*alpha; requires alpha.
  std::pair<std::uint32_t, std::uint32_t> decompose_alpha(std::uint32_t x) const;

 private:
  friend struct FieldCtx;

  struct LevelData {
    int degree = 1;
    std::uint32_t size = 0;
    std::vector<int> modulus;            // little-endian, monic
    std::vector<std::uint32_t> exp_tab;  // size-1
    std::vector<std::uint32_t> log_tab;  // size (log of 0 unused)
    std::vector<std::uint32_t> add_tab;  // size*size when small enough
    std::vector<std::uint32_t> enum_order;
  };

  FieldTower() = default;
  void init_level(LevelData& ld, int degree);
  std::uint32_t mul_slow(const LevelData& ld, std::uint32_t a, std::uint32_t b) const;
  std::uint32_t add_digits(const LevelData& ld, std::uint32_t a, std::uint32_t b) const;

  long p_ = 0;
  int f_ = 0;
  long q_ = 0;
  LevelData levels_[3];
  std::vector<std::uint32_t> embed_q_to_q2_;  // size q
  std::optional<std::uint32_t> alpha_;
  std::uint32_t alpha_sq_q_ = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> alpha_decomp_;  // size q^2
};

// A field element carrying its context; the user-facing value type.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldCtx ctx, std::uint32_t idx) : ctx_(ctx), idx_(idx) {}

  FieldCtx ctx() const { return ctx_; }
  std::uint32_t idx() const { return idx_; }
  bool is_zero() const { return idx_ == 0; }

  FieldElem operator+(const FieldElem& o) const { return with(ctx_.add(idx_, check(o))); }
  FieldElem operator-(const FieldElem& o) const { return with(ctx_.sub(idx_, check(o))); }
  FieldElem operator*(const FieldElem& o) const { return with(ctx_.mul(idx_, check(o))); }
  FieldElem operator/(const FieldElem& o) const { return with(ctx_.div(idx_, check(o))); }
  FieldElem operator-() const { return with(ctx_.neg(idx_)); }
  bool operator==(const FieldElem& o) const { return ctx_ == o.ctx_ && idx_ == o.idx_; }

  FieldElem pow(long long e) const { return with(ctx_.pow(idx_, e)); }
  FieldElem frobenius(long long i) const { return with(ctx_.frobenius(idx_, i)); }
  FieldElem inv() const { return with(ctx_.inv(idx_)); }

  // "[c0,c1,...]" little-endian in the power basis of the level's modulus
  std::string to_string() const { return ctx_.to_string(idx_); }

 private:
  FieldElem with(std::uint32_t idx) const { return FieldElem(ctx_, idx); }
  std::uint32_t check(const FieldElem& o) const {
    if (!(ctx_ == o.ctx_)) fail(ErrorKind::LevelMismatch, "field elements at different levels");
    return o.idx_;
  }

  FieldCtx ctx_{};
  std::uint32_t idx_ = 0;
};

// find_alpha as a standalone operation: the alpha of the tower (EvenCharacteristic if p = 2).
FieldElem find_alpha(const TowerPtr& tower);

}  // namespace modrep::gf
