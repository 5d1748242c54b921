#include "ivcat/f2_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace ivcat {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

F2Matrix::F2Matrix(std::initializer_list<std::initializer_list<int>> entries)
    : F2Matrix(entries.size(), entries.size() == 0 ? 0 : entries.begin()->size()) {
  std::size_t r = 0;
  for (const auto& row : entries) {
    if (row.size() != cols_) throw std::invalid_argument("ragged F2Matrix literal");
    std::size_t c = 0;
    for (int v : row) set(r, c++, (v & 1) != 0);
    ++r;
  }
}

F2Matrix F2Matrix::identity(std::size_t k) {
  F2Matrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.set(i, i, true);
  return m;
}

void F2Matrix::set(std::size_t r, std::size_t c, bool value) noexcept {
  auto& word = row_ptr(r)[c / 64];
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  word = value ? (word | bit) : (word & ~bit);
}

bool F2Matrix::is_zero() const noexcept {
  for (auto w : data_) {
    if (w != 0) return false;
  }
  return true;
}

void F2Matrix::xor_row(std::size_t dst, std::size_t src) noexcept {
  auto* d = row_ptr(dst);
  const auto* s = row_ptr(src);
  for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
}

void F2Matrix::swap_rows(std::size_t r1, std::size_t r2) noexcept {
  if (r1 == r2) return;
  auto* a = row_ptr(r1);
  auto* b = row_ptr(r2);
  for (std::size_t w = 0; w < words_; ++w) std::swap(a[w], b[w]);
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("F2Matrix product: shape mismatch");
  F2Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto* dst = out.row_ptr(r);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      const auto* src = rhs.row_ptr(k);
      for (std::size_t w = 0; w < out.words_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

F2Matrix F2Matrix::operator+(const F2Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("F2Matrix sum: shape mismatch");
  }
  F2Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] ^= rhs.data_[i];
  return out;
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) out.set(c, r, true);
    }
  }
  return out;
}

F2Matrix F2Matrix::hconcat(const F2Matrix& rhs) const {
  if (rows_ != rhs.rows_) throw std::invalid_argument("F2Matrix hconcat: row mismatch");
  F2Matrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, get(r, c));
    for (std::size_t c = 0; c < rhs.cols_; ++c) out.set(r, cols_ + c, rhs.get(r, c));
  }
  return out;
}

F2Matrix F2Matrix::column(std::size_t c) const {
  F2Matrix out(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) out.set(r, 0, get(r, c));
  return out;
}

std::vector<std::size_t> F2Matrix::reduce() {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols_ && pivot_row < rows_; ++c) {
    std::size_t r = pivot_row;
    while (r < rows_ && !get(r, c)) ++r;
    if (r == rows_) continue;
    swap_rows(pivot_row, r);
    for (std::size_t other = 0; other < rows_; ++other) {
      if (other != pivot_row && get(other, c)) xor_row(other, pivot_row);
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return pivots;
}

std::size_t F2Matrix::rank() const {
  F2Matrix work = *this;
  return work.reduce().size();
}

F2Matrix F2Matrix::kernel_basis() const {
  F2Matrix work = *this;
  const auto pivots = work.reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;

  F2Matrix basis(cols_, cols_ - pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    basis.set(free, k, true);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (work.get(i, free)) basis.set(pivots[i], k, true);
    }
    ++k;
  }
  return basis;
}

F2Matrix F2Matrix::column_space_basis() const {
  F2Matrix work = *this;
  const auto pivots = work.reduce();
  F2Matrix basis(rows_, pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    for (std::size_t r = 0; r < rows_; ++r) basis.set(r, k, get(r, pivots[k]));
  }
  return basis;
}

std::optional<F2Matrix> F2Matrix::solve(const F2Matrix& rhs) const {
  if (rhs.rows_ != rows_) throw std::invalid_argument("F2Matrix solve: row mismatch");
  F2Matrix work = hconcat(rhs);
  const auto pivots = work.reduce();
  F2Matrix x(cols_, rhs.cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    // A pivot inside the right-hand block means 0 = 1 in that row.
    if (pivots[i] >= cols_) return std::nullopt;
    for (std::size_t c = 0; c < rhs.cols_; ++c) x.set(pivots[i], c, work.get(i, cols_ + c));
  }
  return x;
}

std::string F2Matrix::to_string() const {
  std::string out = std::to_string(rows_) + "x" + std::to_string(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out += '\n';
    for (std::size_t c = 0; c < cols_; ++c) out += get(r, c) ? '1' : '0';
  }
  return out;
}

}  // namespace ivcat
