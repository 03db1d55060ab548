#include "codenet/efficiency.hpp"

#include <algorithm>
#include <cmath>

namespace codenet {

std::string_view to_string(Efficiency e) noexcept {
  switch (e) {
    case Efficiency::Efficient: return "Efficient";
    case Efficiency::SemiEfficient: return "SemiEfficient";
    case Efficiency::Inefficient: return "Inefficient";
  }
  return "?";
}

namespace detail {

double flip_prob_binary_double(double p, unsigned l) {
  if (p == 0.0 || l == 0) return 0.0;
  if (p == 1.0) return (l % 2 == 1) ? 1.0 : 0.0;
  double sum = 0.0;
  if (l <= 1000) {
    // C(l, j) <= C(1000, 500) ~ 2.7e299 stays finite.
    double binom = 1.0;  // C(l, j)
    for (unsigned j = 0; j <= l; ++j) {
      if (j > 0) binom = binom * (l - j + 1) / j;
      if (j % 2 == 1) sum += binom * std::pow(p, j) * std::pow(1.0 - p, l - j);
    }
    return sum;
  }
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  const double lf = std::lgamma(l + 1.0);
  for (unsigned j = 1; j <= l; j += 2)
    sum += std::exp(lf - std::lgamma(j + 1.0) - std::lgamma(l - j + 1.0) + j * lp + (l - j) * lq);
  return sum;
}

Rational flip_prob_binary_rational(const Rational& p, unsigned l) {
  const Rational q = Rational(1) - p;
  std::vector<Rational> p_pow(l + 1, Rational(1)), q_pow(l + 1, Rational(1));
  for (unsigned j = 1; j <= l; ++j) {
    p_pow[j] = p_pow[j - 1] * p;
    q_pow[j] = q_pow[j - 1] * q;
  }
  Rational sum = 0;
  boost::multiprecision::cpp_int binom = 1;
  for (unsigned j = 0; j <= l; ++j) {
    if (j > 0) binom = binom * (l - j + 1) / j;
    if (j % 2 == 1) sum += Rational(binom) * p_pow[j] * q_pow[l - j];
  }
  return sum;
}

}  // namespace detail

double flip_prob_qary_closed(double p, unsigned q, unsigned l) {
  if (!is_prime(q)) throw InputError("field order " + std::to_string(q) + " is not prime");
  const double c = static_cast<double>(q - 1) / q;
  return c * (1.0 - std::pow(1.0 - p / c, static_cast<double>(l)));
}

Expectation flip_probability(std::span<const Probability> channel_probabilities, unsigned q, RecurrenceForm form) {
  if (!is_prime(q)) throw InputError("field order " + std::to_string(q) + " is not prime");
  const bool exact = std::all_of(channel_probabilities.begin(), channel_probabilities.end(),
                                 [](const Probability& p) { return p.is_exact(); });
  if (exact) {
    FlipState<Rational> s;
    for (const auto& p : channel_probabilities) s = step_flip_state(s, *p.exact(), q, form);
    return Expectation::of(s.differs);
  }
  FlipState<double> s;
  for (const auto& p : channel_probabilities) s = step_flip_state(s, p.value(), q, form);
  return Expectation::of(s.differs);
}

Expectation flip_probability(const Probability& p, unsigned q, unsigned l, RecurrenceForm form) {
  if (p.is_exact()) return Expectation::of(flip_prob_qary(*p.exact(), q, l, form));
  return Expectation::of(flip_prob_qary(p.value(), q, l, form));
}

namespace {

Expectation scale(const Expectation& e, std::size_t n) {
  if (e.exact) return Expectation::of(*e.exact * Rational(n));
  return Expectation::of(e.value * static_cast<double>(n));
}

}  // namespace

Efficiency classify_expectation(const Expectation& expected, unsigned d) {
  const auto cap = capacities(d);
  if (expected.exact) {
    if (*expected.exact <= Rational(cap.correct)) return Efficiency::Efficient;
    if (*expected.exact <= Rational(cap.detect)) return Efficiency::SemiEfficient;
    return Efficiency::Inefficient;
  }
  if (expected.value <= cap.correct + kComparisonTolerance) return Efficiency::Efficient;
  if (expected.value <= cap.detect + kComparisonTolerance) return Efficiency::SemiEfficient;
  return Efficiency::Inefficient;
}

Expectation expected_hamming(const CodedNetwork& net, const Path& path) {
  validate_path(net.graph(), path);
  const auto probs = net.path_probabilities(path);
  if (probs.empty()) return Expectation::of(Rational(0));
  return scale(flip_probability(probs, net.code().field().order()), net.code().length());
}

PathReport classify_path(const CodedNetwork& net, const Path& path) {
  PathReport report{path, expected_hamming(net, path), Efficiency::Efficient};
  report.classification = classify_expectation(report.expected_hamming, net.code().min_distance());
  return report;
}

std::vector<LengthReport> classify_lengths(std::size_t n, unsigned d, unsigned q, const Probability& p,
                                           unsigned max_length) {
  if (!is_prime(q)) throw InputError("field order " + std::to_string(q) + " is not prime");
  std::vector<LengthReport> out;
  out.reserve(max_length);
  // Step the recurrence once per length rather than restarting it.
  if (p.is_exact()) {
    FlipState<Rational> s;
    for (unsigned l = 1; l <= max_length; ++l) {
      s = step_flip_state(s, *p.exact(), q);
      auto flip = Expectation::of(s.differs);
      auto expected = scale(flip, n);
      out.push_back({l, flip, expected, classify_expectation(expected, d)});
    }
  } else {
    FlipState<double> s;
    for (unsigned l = 1; l <= max_length; ++l) {
      s = step_flip_state(s, p.value(), q);
      auto flip = Expectation::of(s.differs);
      auto expected = scale(flip, n);
      out.push_back({l, flip, expected, classify_expectation(expected, d)});
    }
  }
  return out;
}

NetworkReport classify_network(const CodedNetwork& net) {
  const auto& g = net.graph();
  NetworkReport report;
  report.critical_value = critical_value(g);
  const unsigned d = net.code().min_distance();
  const unsigned q = net.code().field().order();

  if (const auto& p = net.constant_probability()) {
    report.constant_shortcut = true;
    report.per_length = classify_lengths(net.code().length(), d, q, *p, report.critical_value);
    for (const auto& row : report.per_length)
      report.classification = std::max(report.classification, row.classification);
    return report;
  }

  for (VertexId a = 0; a < g.vertex_count(); ++a)
    for (VertexId b = 0; b < g.vertex_count(); ++b) {
      if (a == b) continue;
      auto pr = classify_path(net, shortest_path(g, a, b));
      report.classification = std::max(report.classification, pr.classification);
      if (!report.worst_path || pr.expected_hamming.value > report.worst_path->expected_hamming.value)
        report.worst_path = std::move(pr);
    }
  return report;
}

}  // namespace codenet
