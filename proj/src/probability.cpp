#include "codenet/probability.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "codenet/errors.hpp"

namespace codenet {

namespace {

void require_unit_interval(double p, std::string_view text) {
  if (!(p >= 0.0 && p <= 1.0))
    throw InputError("probability " + std::string(text) + " is outside [0, 1]");
}

boost::multiprecision::cpp_int parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw InputError("malformed probability '" + std::string(whole) + "'");
  for (char c : digits)
    if (c < '0' || c > '9') throw InputError("malformed probability '" + std::string(whole) + "'");
  return boost::multiprecision::cpp_int(std::string(digits));
}

}  // namespace

Probability::Probability(double p) : value_(p) { require_unit_interval(p, format_double(p)); }

Probability::Probability(const Rational& p) : value_(p.convert_to<double>()), exact_(p) {
  if (p < 0 || p > 1) throw InputError("probability " + format_rational(p) + " is outside [0, 1]");
}

Probability Probability::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_integer(text.substr(0, slash), text);
    const auto den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InputError("probability '" + std::string(text) + "' has a zero denominator");
    return Probability(Rational(num, den));
  }
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || text.empty())
    throw InputError("malformed probability '" + std::string(text) + "'");
  return Probability(v);
}

std::string Probability::str() const { return exact_ ? format_rational(*exact_) : format_double(value_); }

bool operator==(const Probability& a, const Probability& b) {
  if (a.exact_ && b.exact_) return *a.exact_ == *b.exact_;
  return a.value_ == b.value_;
}

Expectation Expectation::of(const Rational& r) { return {r.convert_to<double>(), r}; }

std::string Expectation::str() const { return exact ? format_rational(*exact) : format_double(value); }

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::to_string(v);
}

std::string format_rational(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace codenet
