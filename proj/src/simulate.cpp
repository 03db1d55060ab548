#include "codenet/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "codenet/errors.hpp"

namespace codenet {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

struct Accumulator {
  std::uint64_t sum = 0;
  std::uint64_t sum_squares = 0;
  std::uint64_t successes = 0;
};

SimStats run_trials(std::uint64_t trials, unsigned threads,
                    const std::function<void(std::uint64_t first, std::uint64_t last, Accumulator&)>& body) {
  if (trials == 0) throw InputError("trials must be at least 1");
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));
  std::vector<Accumulator> parts(threads);
  if (threads == 1) {
    body(0, trials, parts[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (trials + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t first = std::min(trials, t * chunk);
      const std::uint64_t last = std::min(trials, first + chunk);
      pool.emplace_back([&, t, first, last] { body(first, last, parts[t]); });
    }
    for (auto& th : pool) th.join();
  }
  Accumulator total;
  for (const auto& a : parts) {
    total.sum += a.sum;
    total.sum_squares += a.sum_squares;
    total.successes += a.successes;
  }
  SimStats s;
  s.trials = trials;
  const long double n = static_cast<long double>(trials);
  const long double mean = static_cast<long double>(total.sum) / n;
  s.mean_hamming = static_cast<double>(mean);
  if (trials > 1) {
    const long double ss = static_cast<long double>(total.sum_squares) - n * mean * mean;
    const long double var = std::max(0.0L, ss / (n - 1));
    s.std_error = static_cast<double>(std::sqrt(var / n));
  }
  s.decode_success_rate = static_cast<double>(static_cast<long double>(total.successes) / n);
  return s;
}

void check_message(const CodedNetwork& net, std::span<const Symbol> message) {
  if (message.size() != net.code().dimension())
    throw InputError("message length " + std::to_string(message.size()) + " does not match k = " +
                     std::to_string(net.code().dimension()));
}

void send_along(const CodedNetwork& net, const Path& path, Word& word, Xoshiro256& rng, TransmissionTrace& trace,
                bool record_hops) {
  const unsigned q = net.code().field().order();
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    const VertexId a = path.vertices[i];
    const VertexId b = path.vertices[i + 1];
    const ErrorEvent event(net.edge_probability(a, b).value());
    trace.error_events += transmit_edge_inplace(word, event, q, rng);
    if (record_hops) trace.hops.push_back({a, b, word});
  }
}

void decode_at(const CodedNetwork& net, VertexId v, Word& word, TransmissionTrace& trace) {
  auto result = net.code().decode_nearest(word);
  trace.corrections.push_back({v, result.corrected_symbols, result.ambiguous});
  word = std::move(result.codeword);
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) noexcept {
  for (auto& word : s_) word = splitmix64(seed);
}

Xoshiro256::result_type Xoshiro256::operator()() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Xoshiro256::below(std::uint64_t bound) noexcept {
  // Lemire's multiply-shift with rejection of the biased low range.
  u128 m = static_cast<u128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t floor = (0 - bound) % bound;
    while (low < floor) {
      m = static_cast<u128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

Xoshiro256 trial_stream(std::uint64_t seed, std::uint64_t trial) noexcept {
  std::uint64_t state = seed;
  const std::uint64_t a = splitmix64(state);
  state = trial ^ 0x6a09e667f3bcc909ULL;
  const std::uint64_t b = splitmix64(state);
  return Xoshiro256(a ^ rotl(b, 23));
}

ErrorEvent::ErrorEvent(double p) noexcept {
  if (p >= 1.0)
    always_ = true;
  else if (p > 0.0)
    threshold_ = static_cast<std::uint64_t>(std::ldexp(p, 64));
}

std::size_t transmit_edge_inplace(Word& word, const ErrorEvent& event, unsigned q, Xoshiro256& rng) {
  std::size_t events = 0;
  for (auto& s : word) {
    if (!event(rng)) continue;
    ++events;
    const auto r = static_cast<Symbol>(rng.below(q - 1));
    s = r < s ? r : r + 1;
  }
  return events;
}

Word transmit_edge(std::span<const Symbol> word, double p, unsigned q, Xoshiro256& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("error probability must lie in [0, 1]");
  if (q < 2) throw InputError("field order must be at least 2");
  Word out(word.begin(), word.end());
  for (Symbol s : out)
    if (s >= q) throw InputError("symbol outside the field");
  transmit_edge_inplace(out, ErrorEvent(p), q, rng);
  return out;
}

Word random_message(std::size_t k, unsigned q, Xoshiro256& rng) {
  Word m(k);
  for (auto& s : m) s = static_cast<Symbol>(rng.below(q));
  return m;
}

TransmissionTrace simulate_path(const CodedNetwork& net, const Path& path, std::span<const Symbol> message,
                                Xoshiro256& rng, bool record_hops) {
  validate_path(net.graph(), path);
  check_message(net, message);
  if (path.vertices.empty()) throw InputError("path has no vertices");
  TransmissionTrace trace;
  trace.message.assign(message.begin(), message.end());
  trace.sent = net.code().encode(message);
  Word word = trace.sent;
  send_along(net, path, word, rng, trace, record_hops);
  trace.arrived = word;
  trace.final_hamming = hamming_distance(trace.sent, word);
  decode_at(net, path.vertices.back(), word, trace);
  trace.decoded_message = net.code().extract_message(word);
  return trace;
}

TransmissionTrace simulate_protocol(const CodedNetwork& net, const TransmissionPlan& plan,
                                    std::span<const MemberRouter> routers, std::span<const Symbol> message,
                                    Xoshiro256& rng, bool record_hops) {
  check_message(net, message);
  TransmissionTrace trace;
  trace.message.assign(message.begin(), message.end());
  trace.sent = net.code().encode(message);
  Word word = trace.sent;
  const auto legs = plan.legs();
  for (std::size_t i = 0; i < legs.size(); ++i) {
    const auto& leg = legs[i];
    if (leg.member >= routers.size()) throw InputError("plan refers to an unknown member");
    const auto& router = routers[leg.member];
    if (!router.contains(leg.from) || !router.contains(leg.to)) throw InputError("plan leg leaves its member");
    send_along(net, router.route(leg.from, leg.to), word, rng, trace, record_hops);
    if (i + 1 < legs.size()) decode_at(net, leg.to, word, trace);
  }
  trace.arrived = word;
  trace.final_hamming = hamming_distance(trace.sent, word);
  decode_at(net, plan.target, word, trace);
  trace.decoded_message = net.code().extract_message(word);
  return trace;
}

TransmissionTrace path_trial(const CodedNetwork& net, const Path& path, std::uint64_t seed, std::uint64_t trial,
                             bool record_hops) {
  auto rng = trial_stream(seed, trial);
  const auto message = random_message(net.code().dimension(), net.code().field().order(), rng);
  return simulate_path(net, path, message, rng, record_hops);
}

TransmissionTrace protocol_trial(const CodedNetwork& net, const TransmissionPlan& plan,
                                 std::span<const MemberRouter> routers, std::uint64_t seed, std::uint64_t trial,
                                 bool record_hops) {
  auto rng = trial_stream(seed, trial);
  const auto message = random_message(net.code().dimension(), net.code().field().order(), rng);
  return simulate_protocol(net, plan, routers, message, rng, record_hops);
}

SimStats estimate_expected_hamming(const CodedNetwork& net, const Path& path, std::uint64_t trials,
                                   std::uint64_t seed, unsigned threads) {
  validate_path(net.graph(), path);
  return run_trials(trials, threads, [&](std::uint64_t first, std::uint64_t last, Accumulator& acc) {
    for (std::uint64_t t = first; t < last; ++t) {
      const auto trace = path_trial(net, path, seed, t, false);
      acc.sum += trace.final_hamming;
      acc.sum_squares += trace.final_hamming * trace.final_hamming;
      acc.successes += trace.success() ? 1 : 0;
    }
  });
}

SimStats estimate_protocol(const CodedNetwork& net, const TransmissionPlan& plan,
                           std::span<const MemberRouter> routers, std::uint64_t trials, std::uint64_t seed,
                           unsigned threads) {
  return run_trials(trials, threads, [&](std::uint64_t first, std::uint64_t last, Accumulator& acc) {
    for (std::uint64_t t = first; t < last; ++t) {
      const auto trace = protocol_trial(net, plan, routers, seed, t, false);
      acc.sum += trace.final_hamming;
      acc.sum_squares += trace.final_hamming * trace.final_hamming;
      acc.successes += trace.success() ? 1 : 0;
    }
  });
}

}  // namespace codenet
