#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "modrep/gf.hpp"
#include "modrep/util.hpp"
#include "modrep/grp.hpp"

namespace modrep::poly {

// Per-slot degrees (r_0, ..., r_{k-1}). The number of slots is not tied to the
// tower's f: single-pair spaces use one slot, tensor products of a polynomial
// part and a second factor use 2f slots.
using Profile = std::vector<int>;

inline long profile_dim(const Profile& prof) {
  long d = 1;
  for (int r : prof) d *= r + 1;
  return d;
}

// twisted total degree r = sum r_j p^j (also used for (m_0,...,m_{f-1}))
long twisted_degree(const Profile& prof, long p);

// Evaluation point: one (x, y) pair per slot, raw indices at a fixed level.
struct EvalPoint {
  gf::FieldCtx ctx;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> xy;
};

// Multihomogeneous polynomial in slot variable pairs (X_j, Y_j). Dense
// coefficient table indexed by exponent vectors (i_0,...,i_{k-1}) with
// 0 <= i_j <= r_j and i_0 fastest; entry c[I] is the coefficient of
// prod_j X_j^{r_j - i_j} Y_j^{i_j}.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(gf::FieldCtx ctx, Profile prof);

  static MultiPoly zero(gf::FieldCtx ctx, Profile prof) { return MultiPoly(ctx, std::move(prof)); }
  static MultiPoly monomial(gf::FieldCtx ctx, Profile prof, std::span<const int> exps,
                            std::uint32_t coeff = 1);

  const Profile& profile() const { return prof_; }
  gf::FieldCtx ctx() const { return ctx_; }
  int nslots() const { return static_cast<int>(prof_.size()); }
  long table_size() const { return static_cast<long>(coef_.size()); }
  std::span<const std::uint32_t> coeffs() const { return coef_; }
  std::span<std::uint32_t> coeffs_mut() { return coef_; }

  long flat_index(std::span<const int> exps) const;
  void unflatten(long idx, std::span<int> exps) const;

  std::uint32_t coeff(std::span<const int> exps) const { return coef_[flat_index(exps)]; }
  void set_coeff(std::span<const int> exps, std::uint32_t c) { coef_[flat_index(exps)] = c; }

  bool is_zero() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scale(std::uint32_t c) const;

  // product; profiles add slot-wise
  MultiPoly multiply(const MultiPoly& o) const;

  // formal partial derivative with respect to X (var = 0) or Y (var = 1) of
  // slot j; the slot degree drops by one (zero polynomial for degree-0 slots)
  MultiPoly derive(int slot, int var) const;

  gf::FieldElem evaluate(const EvalPoint& pt) const;
  // evaluate(b) - evaluate(a)
  gf::FieldElem eval_diff(const EvalPoint& a, const EvalPoint& b) const;

  // coefficient-wise embedding into a higher tower level
  MultiPoly embed_to(gf::FieldCtx target) const;

  // tensor product into disjoint slot blocks: this in slots [0, k), o appended
  MultiPoly tensor(const MultiPoly& o) const { return multiply_disjoint(o); }

  std::string to_string() const;
  static MultiPoly parse(gf::FieldCtx ctx, const std::string& text);

  bool operator==(const MultiPoly& o) const {
    return ctx_ == o.ctx_ && prof_ == o.prof_ && coef_ == o.coef_;
  }

 private:
  MultiPoly multiply_disjoint(const MultiPoly& o) const;

  gf::FieldCtx ctx_{};
  Profile prof_;
  std::vector<std::uint32_t> coef_;
};

// falling factorial and binomial residues (see util.hpp); re-exported here as
// the polynomial-layer operations
inline long falling(long long n, long long m, long p) { return falling_factorial(n, m, p); }
inline long binom(long long n, long long k, long p) { return binom_mod(n, k, p); }

// Substitution matrix for one slot of degree r under g = (u v; w z) with
// Frobenius twist t: S[i][i'] is the coefficient of X^{r-i'}Y^{i'} in
// (u^{p^t} X + w^{p^t} Y)^{r-i} (v^{p^t} X + z^{p^t} Y)^i. Entries live in
// ctx (the matrix entries of g are embedded if ctx sits above mid_q).
// Flat row-major layout, size (r+1)^2.
std::vector<std::uint32_t> subst_matrix(gf::FieldCtx ctx, int r, const grp::GroupElem& g,
                                        int twist);

// In-place mode product along one axis of a dense tensor with axis sizes
// sizes[]; if transposed, out[i'] = sum_i S[i][i'] in[i], else
// out[i] = sum_{i'} S[i][i'] in[i'].
void mode_apply(gf::FieldCtx ctx, std::span<std::uint32_t> data, std::span<const int> sizes,
                int axis, std::span<const std::uint32_t> S, bool transposed);

// The twisted group action on polynomials: slot j receives the substitution
// with Frobenius exponent twists[j]. With no twists given, slot j uses p^j.
MultiPoly substitute_linear(const MultiPoly& P, const grp::GroupElem& g,
                            std::span<const int> twists);
MultiPoly substitute_linear(const MultiPoly& P, const grp::GroupElem& g);

}  // namespace modrep::poly
