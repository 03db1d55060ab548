#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "codenet/coded_network.hpp"
#include "codenet/covering.hpp"
#include "codenet/field.hpp"

namespace codenet {

/// xoshiro256** seeded through SplitMix64. Satisfies UniformRandomBitGenerator.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
  result_type operator()() noexcept;

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t s_[4];
};

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// The generator for one trial, derived from (seed, trial) only.
Xoshiro256 trial_stream(std::uint64_t seed, std::uint64_t trial) noexcept;

/// Symbol error events at probability p, decided by a 64-bit threshold.
class ErrorEvent {
 public:
  explicit ErrorEvent(double p) noexcept;
  bool operator()(Xoshiro256& rng) const noexcept { return always_ || rng() < threshold_; }

 private:
  std::uint64_t threshold_ = 0;
  bool always_ = false;
};

/// Each symbol independently, with probability p, becomes a uniformly chosen
/// different element of F_q. Returns the number of error events.
std::size_t transmit_edge_inplace(Word& word, const ErrorEvent& event, unsigned q, Xoshiro256& rng);
Word transmit_edge(std::span<const Symbol> word, double p, unsigned q, Xoshiro256& rng);

struct HopRecord {
  VertexId from = 0;
  VertexId to = 0;
  Word received;
};

struct CorrectionRecord {
  VertexId vertex = 0;
  std::size_t corrected_symbols = 0;
  bool ambiguous = false;
};

struct TransmissionTrace {
  Word message;
  Word sent;
  std::vector<HopRecord> hops;  // empty unless recorded
  std::vector<CorrectionRecord> corrections;
  /// Word reaching the target, before the target decodes it.
  Word arrived;
  std::size_t final_hamming = 0;
  Word decoded_message;
  std::size_t error_events = 0;

  bool success() const { return decoded_message == message; }
};

/// Encodes at the source, sends the codeword edge by edge without intermediate
/// correction, and decodes once at the receiver. Throws InputError for an
/// invalid path or message.
TransmissionTrace simulate_path(const CodedNetwork& net, const Path& path, std::span<const Symbol> message,
                                Xoshiro256& rng, bool record_hops = true);

/// Follows the plan's legs along each member's label routes and decodes at
/// every correction point. Throws InputError when a leg does not fit its member.
TransmissionTrace simulate_protocol(const CodedNetwork& net, const TransmissionPlan& plan,
                                    std::span<const MemberRouter> routers, std::span<const Symbol> message,
                                    Xoshiro256& rng, bool record_hops = true);

struct SimStats {
  std::uint64_t trials = 0;
  double mean_hamming = 0;
  /// Sample standard deviation over sqrt(trials).
  double std_error = 0;
  double decode_success_rate = 0;
};

/// Draws a uniform message from the trial's stream, then runs the trial on
/// that same stream.
Word random_message(std::size_t k, unsigned q, Xoshiro256& rng);

/// Trace of one trial as the estimators run it.
TransmissionTrace path_trial(const CodedNetwork& net, const Path& path, std::uint64_t seed, std::uint64_t trial,
                             bool record_hops = true);
TransmissionTrace protocol_trial(const CodedNetwork& net, const TransmissionPlan& plan,
                                 std::span<const MemberRouter> routers, std::uint64_t seed, std::uint64_t trial,
                                 bool record_hops = true);

/// Statistics are identical for any thread count (0 picks the hardware count).
SimStats estimate_expected_hamming(const CodedNetwork& net, const Path& path, std::uint64_t trials,
                                   std::uint64_t seed, unsigned threads = 0);
SimStats estimate_protocol(const CodedNetwork& net, const TransmissionPlan& plan,
                           std::span<const MemberRouter> routers, std::uint64_t trials, std::uint64_t seed,
                           unsigned threads = 0);

inline constexpr std::uint64_t kDefaultTrials = 100000;

}  // namespace codenet
