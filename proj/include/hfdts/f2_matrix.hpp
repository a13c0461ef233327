#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hfdts {

/// Dense bit-packed matrix over F2. The sparse (row, col) list is the
/// interchange form; see entries() and from_entries().
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(int rows, int cols);

  static F2Matrix identity(int n);
  static F2Matrix from_entries(int rows, int cols, const std::vector<std::pair<int, int>>& entries);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  bool get(int r, int c) const;
  void set(int r, int c, bool v);
  void flip(int r, int c);

  std::vector<std::pair<int, int>> entries() const;
  bool is_zero() const;

  F2Matrix operator*(const F2Matrix& rhs) const;
  F2Matrix operator+(const F2Matrix& rhs) const;
  bool operator==(const F2Matrix& rhs) const;

  F2Matrix transpose() const;
  F2Matrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const F2Matrix& b);

  std::vector<bool> column(int c) const;
  std::vector<bool> apply(const std::vector<bool>& v) const;

  // Row-level access used by elimination kernels.
  const std::uint64_t* row_data(int r) const { return bits_.data() + static_cast<std::size_t>(r) * words_; }
  std::uint64_t* row_data(int r) { return bits_.data() + static_cast<std::size_t>(r) * words_; }
  int words_per_row() const noexcept { return words_; }
  void add_row(int dst, int src);
  void swap_rows(int a, int b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

int rank(const F2Matrix& m);

/// Basis (as column vectors) of {v : m v = 0}.
std::vector<std::vector<bool>> kernel_basis(const F2Matrix& m);

/// Columns forming a basis of the column space (returned as vectors).
std::vector<std::vector<bool>> column_space_basis(const F2Matrix& m);

/// Some x with m x = b, if one exists.
std::optional<std::vector<bool>> solve(const F2Matrix& m, const std::vector<bool>& b);

F2Matrix from_columns(int rows, const std::vector<std::vector<bool>>& cols);

}  // namespace hfdts
