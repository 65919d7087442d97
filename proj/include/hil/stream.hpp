#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hil/core.hpp"

// Round generation under the paper's information structure. Correctness and
// cost are pre-sampled per round regardless of the decision eventually taken
// ("would-be" values): every policy and the optimal benchmark then face
// identical randomness, which pairs the Monte-Carlo comparisons without
// changing any marginal (decisions cannot depend on unrevealed values).

namespace hil {

struct Round {
  std::uint64_t t = 0;    // 1-based round index
  std::uint32_t bin = 0;  // grid index of the arriving confidence value
  bool correct = false;   // would the local inference be correct
  double cost = 0.0;      // would-be offload cost Gamma_t
};

struct Feedback {
  bool revealed = false;
  std::optional<bool> correct;
  std::optional<double> cost;
};

struct ArrivalProcess {
  enum class Kind { Stochastic, Adversarial, TraceReplay };

  Kind kind = Kind::Stochastic;
  std::vector<double> weights;          // Stochastic
  std::vector<std::uint32_t> sequence;  // Adversarial bin indices
  // TraceReplay: (bin, correct) pairs replayed in file order.
  std::vector<std::pair<std::uint32_t, std::uint8_t>> replay_rows;

  static ArrivalProcess stochastic(std::vector<double> weights);
  static ArrivalProcess adversarial(std::vector<std::uint32_t> sequence);
  static ArrivalProcess trace_replay(
      std::vector<std::pair<std::uint32_t, std::uint8_t>> rows);

  void validate(std::size_t bins) const;
};

// One 0-based grid index per line.
ArrivalProcess load_adversarial_sequence(const std::string& path);

class RoundStream {
 public:
  // Pre-samples all rounds. Sub-streams per (seed, purpose): "arrival",
  // "correct", "cost". Throws on horizon < 1 or arrivals inconsistent with
  // the instance.
  RoundStream(InstanceSpec instance, ArrivalProcess arrivals,
              std::uint64_t seed, std::uint64_t horizon);

  // Hand-built rounds, for replay checks.
  static RoundStream from_rounds(InstanceSpec instance,
                                 std::vector<Round> rounds);

  const InstanceSpec& instance() const { return instance_; }
  const std::vector<Round>& rounds() const { return rounds_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t horizon() const { return rounds_.size(); }

 private:
  RoundStream() = default;

  InstanceSpec instance_;
  std::vector<Round> rounds_;
  std::uint64_t seed_ = 0;
};

inline RoundStream make_stream(InstanceSpec instance, ArrivalProcess arrivals,
                               std::uint64_t seed, std::uint64_t horizon) {
  return RoundStream(std::move(instance), std::move(arrivals), seed, horizon);
}

// Offload reveals the round's correctness and cost; Accept reveals nothing.
Feedback realize_feedback(const Round& round, Decision d);

// Realized per-round loss: cost on Offload, 1{incorrect} on Accept.
double realized_loss(const Round& round, Decision d);

}  // namespace hil
