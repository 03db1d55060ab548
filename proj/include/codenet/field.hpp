#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace codenet {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Arithmetic in F_q for prime q.
class PrimeField {
 public:
  /// Throws InputError unless q is prime.
  explicit PrimeField(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }
  bool contains(Symbol a) const noexcept { return a < q_; }

  Symbol add(Symbol a, Symbol b) const noexcept {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Symbol>(s >= q_ ? s - q_ : s);
  }
  Symbol sub(Symbol a, Symbol b) const noexcept { return a >= b ? a - b : a + (q_ - b); }
  Symbol neg(Symbol a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Symbol mul(Symbol a, Symbol b) const noexcept {
    return static_cast<Symbol>((std::uint64_t{a} * b) % q_);
  }
  /// Multiplicative inverse; throws InputError for zero.
  Symbol inv(Symbol a) const;
  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

  /// Throws InputError if any symbol is outside [0, q-1].
  void check(std::span<const Symbol> word) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Number of positions where a and b differ. Throws InputError on length mismatch.
std::size_t hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b);

/// Number of nonzero symbols.
std::size_t weight(std::span<const Symbol> a) noexcept;

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static Matrix from_rows(const std::vector<std::vector<Symbol>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Symbol& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Symbol operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Symbol> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Symbol> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Word column(std::size_t c) const;

  Matrix transposed() const;
  bool is_zero() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Symbol> data_;
};

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);
Word multiply(const PrimeField& f, const Matrix& a, std::span<const Symbol> v);

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(const PrimeField& f, Matrix& m);
std::size_t rank(const PrimeField& f, Matrix m);

/// Rows form a basis of { x : a x = 0 }.
Matrix null_space(const PrimeField& f, const Matrix& a);

/// For a full-column-rank n x k matrix m, a k x n matrix l with l m = I_k.
Matrix left_inverse(const PrimeField& f, const Matrix& m);

}  // namespace codenet
