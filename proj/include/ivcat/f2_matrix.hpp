#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace ivcat {

/// Dense matrix over GF(2), rows packed into 64-bit words.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);
  /// Row-major 0/1 literal, e.g. {{1,1},{1,1}}.
  F2Matrix(std::initializer_list<std::initializer_list<int>> entries);

  static F2Matrix identity(std::size_t k);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return ((row_ptr(r)[c / 64] >> (c % 64)) & 1U) != 0;
  }
  void set(std::size_t r, std::size_t c, bool value) noexcept;
  bool is_zero() const noexcept;

  F2Matrix operator*(const F2Matrix& rhs) const;
  F2Matrix operator+(const F2Matrix& rhs) const;
  F2Matrix transpose() const;
  /// [this | rhs].
  F2Matrix hconcat(const F2Matrix& rhs) const;
  F2Matrix column(std::size_t c) const;

  std::size_t rank() const;
  /// Columns form a basis of the null space {v : M v = 0}; shape cols x nullity.
  F2Matrix kernel_basis() const;
  /// Columns form a basis of the column space; shape rows x rank.
  F2Matrix column_space_basis() const;

  /// Some X with (*this) X = rhs, or nullopt if the system is inconsistent.
  std::optional<F2Matrix> solve(const F2Matrix& rhs) const;

  /// "RxC" followed by one line of 0/1 per row.
  std::string to_string() const;

  friend bool operator==(const F2Matrix& x, const F2Matrix& y) noexcept {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::uint64_t* row_ptr(std::size_t r) noexcept { return data_.data() + r * words_; }
  const std::uint64_t* row_ptr(std::size_t r) const noexcept { return data_.data() + r * words_; }
  void xor_row(std::size_t dst, std::size_t src) noexcept;
  void swap_rows(std::size_t r1, std::size_t r2) noexcept;
  /// In-place reduced row echelon form; returns the pivot column of each pivot row.
  std::vector<std::size_t> reduce();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace ivcat
