#include "hfdts/f2_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hfdts/error.hpp"

namespace hfdts {

namespace {
constexpr int kWordBits = 64;
}

F2Matrix::F2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + kWordBits - 1) / kWordBits),
      bits_(static_cast<std::size_t>(rows) * words_, 0) {
  if (rows < 0 || cols < 0) throw Error(ErrorCode::InvalidInput, "negative matrix dimension");
}

F2Matrix F2Matrix::identity(int n) {
  F2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

F2Matrix F2Matrix::from_entries(int rows, int cols, const std::vector<std::pair<int, int>>& entries) {
  F2Matrix m(rows, cols);
  for (auto [r, c] : entries) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
      throw Error(ErrorCode::InvalidInput, "matrix entry out of bounds");
    if (m.get(r, c)) throw Error(ErrorCode::InvalidInput, "duplicate matrix entry");
    m.set(r, c, true);
  }
  return m;
}

bool F2Matrix::get(int r, int c) const {
  return (row_data(r)[c / kWordBits] >> (c % kWordBits)) & 1u;
}

void F2Matrix::set(int r, int c, bool v) {
  auto& w = row_data(r)[c / kWordBits];
  const std::uint64_t bit = std::uint64_t{1} << (c % kWordBits);
  if (v)
    w |= bit;
  else
    w &= ~bit;
}

void F2Matrix::flip(int r, int c) { row_data(r)[c / kWordBits] ^= std::uint64_t{1} << (c % kWordBits); }

std::vector<std::pair<int, int>> F2Matrix::entries() const {
  std::vector<std::pair<int, int>> out;
  for (int r = 0; r < rows_; ++r) {
    const auto* row = row_data(r);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        out.emplace_back(r, w * kWordBits + b);
        bits &= bits - 1;
      }
    }
  }
  return out;
}

bool F2Matrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::InvalidInput, "matrix product dimension mismatch");
  F2Matrix out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r) {
    auto* dst = out.row_data(r);
    for (int k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      const auto* src = rhs.row_data(k);
      for (int w = 0; w < out.words_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

F2Matrix F2Matrix::operator+(const F2Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorCode::InvalidInput, "matrix sum dimension mismatch");
  F2Matrix out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] ^= rhs.bits_[i];
  return out;
}

bool F2Matrix::operator==(const F2Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && bits_ == rhs.bits_;
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix out(cols_, rows_);
  for (auto [r, c] : entries()) out.set(c, r, true);
  return out;
}

F2Matrix F2Matrix::block(int r0, int c0, int nr, int nc) const {
  F2Matrix out(nr, nc);
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c)
      if (get(r0 + r, c0 + c)) out.set(r, c, true);
  return out;
}

void F2Matrix::set_block(int r0, int c0, const F2Matrix& b) {
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) set(r0 + r, c0 + c, b.get(r, c));
}

std::vector<bool> F2Matrix::column(int c) const {
  std::vector<bool> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = get(r, c);
  return v;
}

std::vector<bool> F2Matrix::apply(const std::vector<bool>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error(ErrorCode::InvalidInput, "vector length mismatch");
  std::vector<bool> out(rows_, false);
  for (int r = 0; r < rows_; ++r) {
    bool acc = false;
    for (int c = 0; c < cols_; ++c)
      if (v[c] && get(r, c)) acc = !acc;
    out[r] = acc;
  }
  return out;
}

void F2Matrix::add_row(int dst, int src) {
  auto* d = row_data(dst);
  const auto* s = row_data(src);
  for (int w = 0; w < words_; ++w) d[w] ^= s[w];
}

void F2Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  std::swap_ranges(row_data(a), row_data(a) + words_, row_data(b));
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(F2Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m.get(r, c)) {
        p = r;
        break;
      }
    if (p < 0) continue;
    m.swap_rows(row, p);
    for (int r = 0; r < m.rows(); ++r)
      if (r != row && m.get(r, c)) m.add_row(r, row);
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(const F2Matrix& m) {
  F2Matrix work = m;
  int row = 0;
  for (int c = 0; c < work.cols() && row < work.rows(); ++c) {
    int p = -1;
    for (int r = row; r < work.rows(); ++r)
      if (work.get(r, c)) {
        p = r;
        break;
      }
    if (p < 0) continue;
    work.swap_rows(row, p);
    for (int r = row + 1; r < work.rows(); ++r)
      if (work.get(r, c)) work.add_row(r, row);
    ++row;
  }
  return row;
}

std::vector<std::vector<bool>> kernel_basis(const F2Matrix& m) {
  F2Matrix work = m;
  const auto pivots = rref(work);
  std::vector<int> pivot_row(m.cols(), -1);
  for (std::size_t i = 0; i < pivots.size(); ++i) pivot_row[pivots[i]] = static_cast<int>(i);
  std::vector<std::vector<bool>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (pivot_row[free] >= 0) continue;
    std::vector<bool> v(m.cols(), false);
    v[free] = true;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (work.get(static_cast<int>(i), free)) v[pivots[i]] = true;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<bool>> column_space_basis(const F2Matrix& m) {
  F2Matrix work = m;
  const auto pivots = rref(work);
  std::vector<std::vector<bool>> basis;
  basis.reserve(pivots.size());
  for (int c : pivots) basis.push_back(m.column(c));
  return basis;
}

std::optional<std::vector<bool>> solve(const F2Matrix& m, const std::vector<bool>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw Error(ErrorCode::InvalidInput, "rhs length mismatch");
  F2Matrix aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (int r = 0; r < m.rows(); ++r) aug.set(r, m.cols(), b[r]);
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<bool> x(m.cols(), false);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.get(static_cast<int>(i), m.cols());
  return x;
}

F2Matrix from_columns(int rows, const std::vector<std::vector<bool>>& cols) {
  F2Matrix out(rows, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < rows; ++r)
      if (cols[c][r]) out.set(r, static_cast<int>(c), true);
  return out;
}

}  // namespace hfdts
