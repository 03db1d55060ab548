#include "codenet/field.hpp"

#include <string>

#include "codenet/errors.hpp"

namespace codenet {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (!is_prime(q)) throw InputError("field order " + std::to_string(q) + " is not prime");
}

Symbol PrimeField::inv(Symbol a) const {
  if (a % q_ == 0) throw InputError("zero has no multiplicative inverse");
  // Extended Euclid on (a, q).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = q_, new_r = a % q_;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += q_;
  return static_cast<Symbol>(t);
}

void PrimeField::check(std::span<const Symbol> word) const {
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i] >= q_)
      throw InputError("symbol " + std::to_string(word[i]) + " at position " + std::to_string(i + 1) +
                       " is outside F_" + std::to_string(q_));
}

std::size_t hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() != b.size())
    throw InputError("hamming distance of words with lengths " + std::to_string(a.size()) + " and " +
                     std::to_string(b.size()));
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::size_t weight(std::span<const Symbol> a) noexcept {
  std::size_t w = 0;
  for (Symbol s : a) w += s != 0;
  return w;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Symbol>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Word Matrix::column(std::size_t c) const {
  Word out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const noexcept {
  for (Symbol s : data_)
    if (s != 0) return false;
  return true;
}

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Symbol acc = 0;
      for (std::size_t t = 0; t < a.cols(); ++t) acc = f.add(acc, f.mul(a(i, t), b(t, j)));
      out(i, j) = acc;
    }
  return out;
}

Word multiply(const PrimeField& f, const Matrix& a, std::span<const Symbol> v) {
  if (a.cols() != v.size()) throw InputError("matrix/vector dimension mismatch");
  Word out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t acc = 0;
    const auto row = a.row(i);
    for (std::size_t t = 0; t < v.size(); ++t) acc += std::uint64_t{row[t]} * v[t] % f.order();
    out[i] = static_cast<Symbol>(acc % f.order());
  }
  return out;
}

std::vector<std::size_t> row_reduce(const PrimeField& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead_row, c));
    const Symbol scale = f.inv(m(lead_row, col));
    for (std::size_t c = 0; c < m.cols(); ++c) m(lead_row, c) = f.mul(m(lead_row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col) == 0) continue;
      const Symbol factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c)
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(lead_row, c)));
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return pivots;
}

std::size_t rank(const PrimeField& f, Matrix m) { return row_reduce(f, m).size(); }

Matrix null_space(const PrimeField& f, const Matrix& a) {
  Matrix r = a;
  const auto pivots = row_reduce(f, r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  Matrix basis(a.cols() - pivots.size(), a.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(out, free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(out, pivots[i]) = f.neg(r(i, free));
    ++out;
  }
  return basis;
}

Matrix left_inverse(const PrimeField& f, const Matrix& m) {
  const std::size_t n = m.rows();
  const std::size_t k = m.cols();
  Matrix t = m.transposed();
  const auto independent_rows = row_reduce(f, t);
  if (independent_rows.size() != k) throw InputError("matrix does not have full column rank");

  // Invert the k x k submatrix formed by the independent rows via [R | I] -> [I | R^-1].
  Matrix aug(k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = m(independent_rows[i], j);
    aug(i, k + i) = 1;
  }
  row_reduce(f, aug);

  Matrix out(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out(i, independent_rows[j]) = aug(i, k + j);
  return out;
}

}  // namespace codenet
