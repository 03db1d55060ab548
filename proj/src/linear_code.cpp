#include "codenet/linear_code.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "codenet/errors.hpp"

namespace codenet {

namespace {

// Parity matrices above this many entries are not materialised.
constexpr std::uint64_t kParityEntryLimit = std::uint64_t{1} << 26;
// Syndrome table budget, in stored symbols.
constexpr std::uint64_t kTableSymbolLimit = std::uint64_t{1} << 22;

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

}  // namespace

Capacities capacities(unsigned d) {
  if (d == 0) throw InputError("minimum distance must be at least 1");
  return {d - 1, (d - 1) / 2};
}

LinearCode::LinearCode(PrimeField field, Matrix generator, std::optional<Matrix> parity)
    : field_(field), generator_(std::move(generator)) {
  const std::size_t n = generator_.rows();
  const std::size_t k = generator_.cols();
  if (n == 0 || k == 0) throw InputError("generator must be a non-empty n x k matrix");
  if (k > n) throw InputError("generator has more columns (k) than rows (n)");
  for (std::size_t r = 0; r < n; ++r) field_.check(generator_.row(r));
  if (rank(field_, generator_) != k)
    throw InputError("generator is rank deficient (rank " + std::to_string(rank(field_, generator_)) + " < k = " +
                     std::to_string(k) + ")");

  generator_columns_ = generator_.transposed();
  message_extractor_ = left_inverse(field_, generator_);
  init_parity(std::move(parity));

  if (codeword_count() <= kEnumerationLimit) {
    std::size_t best = n;
    bool first = true;
    for_each_codeword([&](std::span<const Symbol> c) {
      if (first) {  // the zero codeword
        first = false;
        return;
      }
      best = std::min(best, weight(c));
    });
    min_distance_ = static_cast<unsigned>(best);
  }
  build_syndrome_table();
}

LinearCode::LinearCode(KnownDistance, PrimeField field, Matrix generator, unsigned d)
    : field_(field), generator_(std::move(generator)) {
  if (rank(field_, generator_) != generator_.cols()) throw InputError("generator is rank deficient");
  generator_columns_ = generator_.transposed();
  message_extractor_ = left_inverse(field_, generator_);
  init_parity(std::nullopt);
  min_distance_ = d;
  build_syndrome_table();
}

LinearCode LinearCode::with_known_distance(PrimeField field, Matrix generator, unsigned d) {
  return LinearCode(KnownDistance{}, field, std::move(generator), d);
}

void LinearCode::init_parity(std::optional<Matrix> parity) {
  const std::size_t n = length();
  const std::size_t k = dimension();
  if (parity) {
    if (parity->rows() != n - k || (n > k && parity->cols() != n))
      throw InputError("parity matrix must be (n-k) x n = " + std::to_string(n - k) + " x " + std::to_string(n));
    for (std::size_t r = 0; r < parity->rows(); ++r) field_.check(parity->row(r));
    if (rank(field_, *parity) != n - k) throw InputError("parity matrix is rank deficient");
    if (!multiply(field_, *parity, generator_).is_zero())
      throw InputError("parity * generator is not the zero matrix");
    parity_ = std::move(*parity);
    has_parity_ = true;
  } else if (std::uint64_t{n} * (n - k) <= kParityEntryLimit) {
    parity_ = null_space(field_, generator_columns_);
    has_parity_ = true;
  }
  if (has_parity_) {
    syndrome_keys_fit_ = saturating_pow(field_.order(), n - k) < (std::uint64_t{1} << 63);
  }
}

const Matrix& LinearCode::parity() const {
  if (!has_parity_) throw CodeTooLarge("parity matrix too large to materialise");
  return parity_;
}

unsigned LinearCode::min_distance() const {
  if (!min_distance_)
    throw CodeTooLarge("q^k = " + std::to_string(codeword_count()) + " exceeds the enumeration limit 2^24");
  return *min_distance_;
}

std::uint64_t LinearCode::codeword_count() const noexcept {
  return saturating_pow(field_.order(), dimension());
}

void LinearCode::check_word(std::span<const Symbol> word, std::size_t expected, const char* what) const {
  if (word.size() != expected)
    throw InputError(std::string(what) + " has length " + std::to_string(word.size()) + ", expected " +
                     std::to_string(expected));
  field_.check(word);
}

Word LinearCode::encode(std::span<const Symbol> message) const {
  check_word(message, dimension(), "message");
  return multiply(field_, generator_, message);
}

Word LinearCode::syndrome(std::span<const Symbol> word) const {
  check_word(word, length(), "word");
  return multiply(field_, parity(), word);
}

bool LinearCode::is_codeword(std::span<const Symbol> word) const {
  if (has_parity_) return weight(syndrome(word)) == 0;
  check_word(word, length(), "word");
  return multiply(field_, generator_, extract_message(word)) == Word(word.begin(), word.end());
}

Word LinearCode::extract_message(std::span<const Symbol> codeword) const {
  check_word(codeword, length(), "codeword");
  return multiply(field_, message_extractor_, codeword);
}

std::optional<std::uint64_t> LinearCode::syndrome_key(std::span<const Symbol> word) const {
  if (!syndrome_keys_fit_) return std::nullopt;
  const std::uint64_t q = field_.order();
  std::uint64_t key = 0;
  for (std::size_t r = parity_.rows(); r-- > 0;) {
    const auto row = parity_.row(r);
    std::uint64_t acc = 0;
    for (std::size_t t = 0; t < word.size(); ++t) acc += std::uint64_t{row[t]} * word[t] % q;
    key = key * q + acc % q;
  }
  return key;
}

void LinearCode::build_syndrome_table() {
  if (!has_parity_ || !syndrome_keys_fit_ || !min_distance_) return;
  const std::size_t n = length();
  const unsigned t = capacities().correct;
  const Symbol q = field_.order();

  // Count patterns per weight up front so the table is either complete for a
  // weight or not built for it.
  std::uint64_t budget = kTableSymbolLimit / std::max<std::size_t>(n, 1);
  unsigned radius = 0;
  std::uint64_t binom = 1;  // C(n, w)
  for (unsigned w = 1; w <= t; ++w) {
    binom = binom * (n - w + 1) / w;
    const std::uint64_t count = binom * saturating_pow(q - 1, w);
    if (count > budget) break;
    budget -= count;
    radius = w;
  }

  Word pattern(n, 0);
  // Depth-first over supports in increasing position order, then over nonzero values.
  auto recurse = [&](auto&& self, std::size_t start, unsigned remaining) -> void {
    if (remaining == 0) {
      const auto key = *syndrome_key(pattern);
      syndrome_table_.try_emplace(key, pattern);
      return;
    }
    for (std::size_t pos = start; pos + remaining <= n; ++pos) {
      for (Symbol v = 1; v < q; ++v) {
        pattern[pos] = v;
        self(self, pos + 1, remaining - 1);
      }
      pattern[pos] = 0;
    }
  };
  for (unsigned w = 1; w <= radius; ++w) recurse(recurse, 0, w);
  table_radius_ = radius;
}

DecodeResult LinearCode::decode_nearest(std::span<const Symbol> word) const {
  check_word(word, length(), "word");
  if (auto key = syndrome_key(word)) {
    if (*key == 0) return {Word(word.begin(), word.end()), 0, false};
    if (auto it = syndrome_table_.find(*key); it != syndrome_table_.end()) {
      DecodeResult out{Word(word.begin(), word.end()), weight(it->second), false};
      for (std::size_t i = 0; i < out.codeword.size(); ++i)
        out.codeword[i] = field_.sub(out.codeword[i], it->second[i]);
      return out;
    }
  }
  return decode_exhaustive(word);
}

DecodeResult LinearCode::decode_exhaustive(std::span<const Symbol> word) const {
  if (codeword_count() > kEnumerationLimit)
    throw CodeTooLarge("nearest-codeword search over " + std::to_string(codeword_count()) + " codewords");
  DecodeResult best{Word{}, std::numeric_limits<std::size_t>::max(), false};
  for_each_codeword([&](std::span<const Symbol> c) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < c.size(); ++i) d += c[i] != word[i];
    if (d < best.corrected_symbols) {
      best.codeword.assign(c.begin(), c.end());
      best.corrected_symbols = d;
      best.ambiguous = false;
    } else if (d == best.corrected_symbols) {
      best.ambiguous = true;
      if (std::lexicographical_compare(c.begin(), c.end(), best.codeword.begin(), best.codeword.end()))
        best.codeword.assign(c.begin(), c.end());
    }
  });
  return best;
}

LinearCode simplex_code(unsigned m) {
  if (m < 2 || m > 20) throw InputError("simplex code order m must lie in [2, 20]");
  const std::size_t n = (std::size_t{1} << m) - 1;
  Matrix g(n, m);
  for (std::size_t r = 0; r < n; ++r)
    for (unsigned c = 0; c < m; ++c) g(r, c) = static_cast<Symbol>(((r + 1) >> (m - 1 - c)) & 1U);
  return LinearCode::with_known_distance(PrimeField(2), std::move(g), 1U << (m - 1));
}

LinearCode repetition_code(PrimeField field, std::size_t n) {
  if (n == 0) throw InputError("repetition code length must be positive");
  Matrix g(n, 1);
  for (std::size_t r = 0; r < n; ++r) g(r, 0) = 1;
  return LinearCode(field, std::move(g));
}

}  // namespace codenet
