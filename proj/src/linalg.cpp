#include "modrep/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace modrep::linalg {

Mat Mat::identity(gf::FieldCtx c, long n) {
  Mat m(c, n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::mul(const Mat& o) const {
  Mat r(ctx, rows, o.cols);
  for (long i = 0; i < rows; ++i)
    for (long k = 0; k < cols; ++k) {
      std::uint32_t c = at(i, k);
      if (!c) continue;
      for (long j = 0; j < o.cols; ++j)
        r.at(i, j) = ctx.add(r.at(i, j), ctx.mul(c, o.at(k, j)));
    }
  return r;
}

Mat Mat::transpose() const {
  Mat r(ctx, cols, rows);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

long Echelon::reduce(std::span<std::uint32_t> v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::uint32_t c = v[pivots_[k]];
    if (!c) continue;
    const auto& e = rows_[k];
    for (long j = 0; j < cols_; ++j)
      if (e[j]) v[j] = ctx_.sub(v[j], ctx_.mul(c, e[j]));
  }
  for (long j = 0; j < cols_; ++j)
    if (v[j]) return j;
  return -1;
}

bool Echelon::add(std::vector<std::uint32_t> v) {
  long lead = reduce(v);
  if (lead < 0) return false;
  std::uint32_t inv = ctx_.inv(v[lead]);
  for (long j = 0; j < cols_; ++j) v[j] = ctx_.mul(v[j], inv);
  // clear this pivot column from existing rows to stay fully reduced
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::uint32_t c = rows_[k][lead];
    if (!c) continue;
    for (long j = 0; j < cols_; ++j)
      rows_[k][j] = ctx_.sub(rows_[k][j], ctx_.mul(c, v[j]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(static_cast<int>(lead));
  return true;
}

bool Echelon::contains(std::span<const std::uint32_t> v) const {
  std::vector<std::uint32_t> w(v.begin(), v.end());
  return reduce(w) < 0;
}

std::optional<std::vector<std::uint32_t>> Echelon::coordinates(
    std::span<const std::uint32_t> v) const {
  std::vector<std::uint32_t> w(v.begin(), v.end());
  std::vector<std::uint32_t> coord(rows_.size(), 0);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::uint32_t c = w[pivots_[k]];
    if (!c) continue;
    coord[k] = c;
    const auto& e = rows_[k];
    for (long j = 0; j < cols_; ++j)
      if (e[j]) w[j] = ctx_.sub(w[j], ctx_.mul(c, e[j]));
  }
  for (long j = 0; j < cols_; ++j)
    if (w[j]) return std::nullopt;
  return coord;
}

Mat Echelon::basis() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return pivots_[x] < pivots_[y];
  });
  Mat m(ctx_, static_cast<long>(rows_.size()), cols_);
  for (std::size_t k = 0; k < order.size(); ++k)
    std::copy(rows_[order[k]].begin(), rows_[order[k]].end(), m.row_mut(static_cast<long>(k)).begin());
  return m;
}

long rank(const Mat& m) {
  Echelon e(m.ctx, m.cols);
  for (long i = 0; i < m.rows; ++i) e.add_row(m.row(i));
  return e.rank();
}

Mat kernel_basis(const Mat& m) {
  Echelon e(m.ctx, m.cols);
  for (long i = 0; i < m.rows; ++i) e.add_row(m.row(i));
  Mat ech = e.basis();
  std::vector<char> is_pivot(m.cols, 0);
  std::vector<int> pivot_row(m.cols, -1);
  {
    std::vector<int> piv = e.pivots();
    std::sort(piv.begin(), piv.end());
    for (std::size_t k = 0; k < piv.size(); ++k) {
      is_pivot[piv[k]] = 1;
      pivot_row[piv[k]] = static_cast<int>(k);
    }
  }
  Mat ker(m.ctx, m.cols - ech.rows, m.cols);
  long kr = 0;
  for (long j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    ker.at(kr, j) = 1;
    for (long pc = 0; pc < m.cols; ++pc)
      if (is_pivot[pc]) ker.at(kr, pc) = m.ctx.neg(ech.at(pivot_row[pc], j));
    ++kr;
  }
  return ker;
}

Mat row_space(const Mat& m) {
  Echelon e(m.ctx, m.cols);
  for (long i = 0; i < m.rows; ++i) e.add_row(m.row(i));
  return e.basis();
}

bool same_row_space(const Mat& a, const Mat& b) { return row_space(a) == row_space(b); }

std::optional<std::vector<std::uint32_t>> solve(const Mat& m, std::span<const std::uint32_t> rhs) {
  // eliminate on [M | rhs]
  Mat aug(m.ctx, m.rows, m.cols + 1);
  for (long i = 0; i < m.rows; ++i) {
    std::copy(m.row(i).begin(), m.row(i).end(), aug.row_mut(i).begin());
    aug.at(i, m.cols) = rhs[i];
  }
  Echelon e(m.ctx, m.cols + 1);
  for (long i = 0; i < aug.rows; ++i) e.add_row(aug.row(i));
  Mat ech = e.basis();
  std::vector<std::uint32_t> x(m.cols, 0);
  for (long r = ech.rows - 1; r >= 0; --r) {
    long lead = -1;
    for (long j = 0; j <= m.cols; ++j)
      if (ech.at(r, j)) {
        lead = j;
        break;
      }
    if (lead < 0) continue;
    if (lead == m.cols) return std::nullopt;  // inconsistent
    // reduced form: row reads x[lead] + sum(free terms) = rhs-part
    std::uint32_t val = ech.at(r, m.cols);
    for (long j = lead + 1; j < m.cols; ++j)
      if (ech.at(r, j)) val = m.ctx.sub(val, m.ctx.mul(ech.at(r, j), x[j]));
    x[lead] = val;
  }
  // verify (free variables are zero)
  for (long i = 0; i < m.rows; ++i) {
    std::uint32_t acc = 0;
    for (long j = 0; j < m.cols; ++j) acc = m.ctx.add(acc, m.ctx.mul(m.at(i, j), x[j]));
    if (acc != rhs[i]) return std::nullopt;
  }
  return x;
}

}  // namespace modrep::linalg
