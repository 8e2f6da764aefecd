#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "modrep/gf.hpp"

namespace modrep::linalg {

// Dense matrix over one tower level, row-major raw indices.
struct Mat {
  gf::FieldCtx ctx;
  long rows = 0, cols = 0;
  std::vector<std::uint32_t> a;

  Mat() = default;
  Mat(gf::FieldCtx c, long r, long n) : ctx(c), rows(r), cols(n), a(static_cast<std::size_t>(r) * n, 0) {}

  std::uint32_t& at(long r, long c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  std::uint32_t at(long r, long c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  std::span<const std::uint32_t> row(long r) const {
    return {a.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)};
  }
  std::span<std::uint32_t> row_mut(long r) {
    return {a.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)};
  }

  static Mat identity(gf::FieldCtx c, long n);
  Mat mul(const Mat& o) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Maintains a reduced row-echelon basis of a growing span.
class Echelon {
 public:
  Echelon(gf::FieldCtx ctx, long cols) : ctx_(ctx), cols_(cols) {}

  // reduce v against the basis in place; returns the leading column or -1 if v reduced to zero
  long reduce(std::span<std::uint32_t> v) const;
  // add v to the span; returns true if the rank grew
  bool add(std::vector<std::uint32_t> v);
  bool add_row(std::span<const std::uint32_t> v) {
    return add(std::vector<std::uint32_t>(v.begin(), v.end()));
  }

  long rank() const { return static_cast<long>(rows_.size()); }
  long cols() const { return cols_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool contains(std::span<const std::uint32_t> v) const;
  // coordinates of v in span coordinates; nullopt if v is outside
  std::optional<std::vector<std::uint32_t>> coordinates(std::span<const std::uint32_t> v) const;

  // rows sorted by pivot, fully reduced (canonical for the row space)
  Mat basis() const;

 private:
  gf::FieldCtx ctx_;
  long cols_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<int> pivots_;
};

long rank(const Mat& m);
// basis of { v : M v = 0 }, rows of the result
Mat kernel_basis(const Mat& m);
// canonical reduced-echelon basis of the row space
Mat row_space(const Mat& m);
bool same_row_space(const Mat& a, const Mat& b);
// one solution x of M x = rhs, if any
std::optional<std::vector<std::uint32_t>> solve(const Mat& m, std::span<const std::uint32_t> rhs);

}  // namespace modrep::linalg
