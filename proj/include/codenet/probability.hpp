#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace codenet {

using Rational = boost::multiprecision::cpp_rational;

/// An error probability in [0, 1]. Ratios such as "3/4" are kept exact so that
/// downstream expectations can be computed in rational arithmetic; decimals are
/// held as doubles.
class Probability {
 public:
  Probability() = default;
  explicit Probability(double p);
  explicit Probability(const Rational& p);

  /// Accepts "a/b" (exact) or a decimal literal. Throws InputError otherwise.
  static Probability parse(std::string_view text);

  double value() const noexcept { return value_; }
  bool is_exact() const noexcept { return exact_.has_value(); }
  const std::optional<Rational>& exact() const noexcept { return exact_; }

  /// "3/4" for exact values, shortest round-trip decimal otherwise.
  std::string str() const;

  friend bool operator==(const Probability& a, const Probability& b);

 private:
  double value_ = 0.0;
  std::optional<Rational> exact_;
};

/// A real-valued result that may also carry its exact rational value.
struct Expectation {
  double value = 0.0;
  std::optional<Rational> exact;

  static Expectation of(const Rational& r);
  static Expectation of(double v) { return {v, std::nullopt}; }

  std::string str() const;
};

std::string format_double(double v);
std::string format_rational(const Rational& r);

}  // namespace codenet
