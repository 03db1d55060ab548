#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "codenet/coded_network.hpp"
#include "codenet/errors.hpp"
#include "codenet/probability.hpp"

namespace codenet {

/// Ordered from best to worst so that the class of a set of paths is the max.
enum class Efficiency { Efficient = 0, SemiEfficient = 1, Inefficient = 2 };
std::string_view to_string(Efficiency e) noexcept;

/// Which per-symbol recurrence to run. AsPrinted drops the "already wrong and
/// no new error" term and does not conserve probability; it exists only for
/// comparison.
enum class RecurrenceForm { Corrected, AsPrinted };

/// Per-symbol state after j channels: probability the symbol differs from the
/// original (A_j) and agrees with it (B_j).
template <class T>
struct FlipState {
  T differs{0};
  T agrees{1};
};

/// One channel use with error probability p over F_q.
template <class T>
FlipState<T> step_flip_state(const FlipState<T>& s, const T& p, unsigned q,
                             RecurrenceForm form = RecurrenceForm::Corrected) {
  const T q1 = T(q - 1);
  const T stay_wrong = p * T(q - 2) / q1;  // wrong symbol hit by an error that misses the original
  FlipState<T> next;
  if (form == RecurrenceForm::Corrected)
    next.differs = s.differs * ((T(1) - p) + stay_wrong) + s.agrees * p;
  else
    next.differs = s.differs * stay_wrong + s.agrees * p;
  next.agrees = s.differs * p / q1 + s.agrees * (T(1) - p);
  return next;
}

/// Probability that a binary symbol differs after l independent flip channels,
/// as the sum over odd error counts.
template <class T>
T flip_prob_binary(const T& p, unsigned l);

/// Same quantity via (1 - (1 - 2p)^l) / 2.
template <class T>
T flip_prob_binary_closed(const T& p, unsigned l) {
  T base = T(1) - T(2) * p;
  T power = T(1);
  for (unsigned i = 0; i < l; ++i) power *= base;
  return (T(1) - power) / T(2);
}

/// A_l of the per-symbol recurrence over F_q with constant p. Throws InputError
/// when q is not prime.
template <class T>
T flip_prob_qary(const T& p, unsigned q, unsigned l, RecurrenceForm form = RecurrenceForm::Corrected) {
  if (!is_prime(q)) throw InputError("field order " + std::to_string(q) + " is not prime");
  FlipState<T> s;
  for (unsigned j = 0; j < l; ++j) s = step_flip_state(s, p, q, form);
  return s.differs;
}

/// (q-1)/q * (1 - (1 - pq/(q-1))^l).
double flip_prob_qary_closed(double p, unsigned q, unsigned l);

/// Per-symbol flip probability over a sequence of channels with the given
/// probabilities; exact when every probability is exact.
Expectation flip_probability(std::span<const Probability> channel_probabilities, unsigned q,
                             RecurrenceForm form = RecurrenceForm::Corrected);

/// Constant-probability form over l channels.
Expectation flip_probability(const Probability& p, unsigned q, unsigned l,
                             RecurrenceForm form = RecurrenceForm::Corrected);

/// Classifies an expected Hamming distance against a code of minimum distance d.
/// Floating-point values get a 1e-12 tolerance on both thresholds.
Efficiency classify_expectation(const Expectation& expected, unsigned d);

inline constexpr double kComparisonTolerance = 1e-12;

struct PathReport {
  Path path;
  Expectation expected_hamming;
  Efficiency classification = Efficiency::Efficient;

  /// Efficient paths also satisfy the semi-efficient bound.
  bool within_detection_capacity() const noexcept { return classification != Efficiency::Inefficient; }
};

/// n times the per-symbol flip probability accumulated edge by edge. Empty and
/// single-vertex paths give 0.
Expectation expected_hamming(const CodedNetwork& net, const Path& path);

PathReport classify_path(const CodedNetwork& net, const Path& path);

struct LengthReport {
  unsigned length = 0;
  Expectation flip_probability;
  Expectation expected_hamming;
  Efficiency classification = Efficiency::Efficient;
};

/// Constant-probability reports for every path length 1..max_length.
std::vector<LengthReport> classify_lengths(std::size_t n, unsigned d, unsigned q, const Probability& p,
                                           unsigned max_length);

struct NetworkReport {
  Efficiency classification = Efficiency::Efficient;
  unsigned critical_value = 0;
  /// True when the constant-probability length criterion was used.
  bool constant_shortcut = false;
  std::vector<LengthReport> per_length;
  /// With varying probabilities: the shortest path with the largest expectation.
  std::optional<PathReport> worst_path;
};

/// Classifies every vertex pair's shortest path; with a constant probability
/// only lengths 1..critical value are evaluated. Requires a connected graph.
NetworkReport classify_network(const CodedNetwork& net);

// ---- template definitions ----

namespace detail {
double flip_prob_binary_double(double p, unsigned l);
Rational flip_prob_binary_rational(const Rational& p, unsigned l);
}  // namespace detail

template <>
inline double flip_prob_binary<double>(const double& p, unsigned l) {
  return detail::flip_prob_binary_double(p, l);
}

template <>
inline Rational flip_prob_binary<Rational>(const Rational& p, unsigned l) {
  return detail::flip_prob_binary_rational(p, l);
}

}  // namespace codenet
