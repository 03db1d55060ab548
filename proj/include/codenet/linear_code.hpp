#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>

#include "codenet/field.hpp"

namespace codenet {

struct Capacities {
  unsigned detect = 0;   // d - 1
  unsigned correct = 0;  // floor((d - 1) / 2)
  friend bool operator==(const Capacities&, const Capacities&) = default;
};

/// Error detection and correction capacities of a code with minimum distance d >= 1.
Capacities capacities(unsigned d);

struct DecodeResult {
  Word codeword;
  std::size_t corrected_symbols = 0;
  /// Set when more than one codeword sits at the minimum distance; the
  /// lexicographically smallest one is returned.
  bool ambiguous = false;
};

/// Largest q^k for which codewords are enumerated exhaustively.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 24;

/// A q-ary [n, k, d] linear block code. The generator is n x k and a message m
/// encodes to generator * m. Immutable after construction.
class LinearCode {
 public:
  /// Validates rank and (if supplied) the parity matrix; derives the parity
  /// matrix otherwise. Computes d when q^k <= kEnumerationLimit.
  LinearCode(PrimeField field, Matrix generator, std::optional<Matrix> parity = std::nullopt);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return generator_.rows(); }
  std::size_t dimension() const noexcept { return generator_.cols(); }
  const Matrix& generator() const noexcept { return generator_; }

  bool has_parity() const noexcept { return has_parity_; }
  /// Throws CodeTooLarge when the parity matrix was too large to materialise.
  const Matrix& parity() const;

  bool has_min_distance() const noexcept { return min_distance_.has_value(); }
  /// Throws CodeTooLarge when q^k exceeds the enumeration guard.
  unsigned min_distance() const;
  Capacities capacities() const { return codenet::capacities(min_distance()); }

  /// q^k, saturating at UINT64_MAX.
  std::uint64_t codeword_count() const noexcept;

  Word encode(std::span<const Symbol> message) const;
  Word syndrome(std::span<const Symbol> word) const;
  bool is_codeword(std::span<const Symbol> word) const;

  /// Nearest codeword: syndrome table for patterns up to the correction radius,
  /// exhaustive search otherwise.
  DecodeResult decode_nearest(std::span<const Symbol> word) const;

  /// Recovers m from generator * m.
  Word extract_message(std::span<const Symbol> codeword) const;

  /// Largest error weight w such that every pattern of weight <= w has a table entry.
  unsigned syndrome_table_radius() const noexcept { return table_radius_; }

  /// Visits every codeword once (q^k of them). The callback receives a span
  /// that is only valid during the call.
  template <class Visitor>
  void for_each_codeword(Visitor&& visit) const;

  /// Constructs a code whose minimum distance is known analytically.
  static LinearCode with_known_distance(PrimeField field, Matrix generator, unsigned d);

 private:
  struct KnownDistance {};
  LinearCode(KnownDistance, PrimeField field, Matrix generator, unsigned d);

  void init_parity(std::optional<Matrix> parity);
  void build_syndrome_table();
  std::optional<std::uint64_t> syndrome_key(std::span<const Symbol> word) const;
  DecodeResult decode_exhaustive(std::span<const Symbol> word) const;
  void check_word(std::span<const Symbol> word, std::size_t expected, const char* what) const;

  PrimeField field_;
  Matrix generator_;
  Matrix generator_columns_;  // k x n, column i of the generator as a contiguous row
  Matrix parity_;
  bool has_parity_ = false;
  Matrix message_extractor_;
  std::optional<unsigned> min_distance_;
  std::unordered_map<std::uint64_t, Word> syndrome_table_;
  bool syndrome_keys_fit_ = false;
  unsigned table_radius_ = 0;
};

template <class Visitor>
void LinearCode::for_each_codeword(Visitor&& visit) const {
  const std::size_t n = length();
  const std::size_t k = dimension();
  const Symbol q = field_.order();
  Word codeword(n, 0);
  std::vector<Symbol> digits(k, 0);
  while (true) {
    visit(std::span<const Symbol>(codeword));
    // Odometer over messages; adding column i once more when digit i wraps
    // contributes q * column_i = 0, so the codeword stays M * digits.
    std::size_t i = 0;
    for (; i < k; ++i) {
      const auto col = generator_columns_.row(i);
      for (std::size_t t = 0; t < n; ++t) codeword[t] = field_.add(codeword[t], col[t]);
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
    if (i == k) return;
  }
}

/// Binary simplex code: the 2^m - 1 generator rows are all nonzero m-bit vectors.
/// Every nonzero codeword has weight 2^(m-1). Requires 2 <= m <= 20.
LinearCode simplex_code(unsigned m);

/// [n, 1, n] repetition code over the given field.
LinearCode repetition_code(PrimeField field, std::size_t n);

}  // namespace codenet
