#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hil/core.hpp"
#include "hil/rng.hpp"
#include "hil/stream.hpp"

// Online offloading policies. All share one loop: observe the round's grid
// index, emit a Decision, then receive Feedback (empty unless the sample was
// offloaded). The LCB policies learn f(.) and gamma from offload feedback
// only; the Hedge baseline gets full information each round, matching the
// information structure assumed by the exponential-weights family it stands
// in for. Both LCB policies are deterministic and anytime (no horizon input).

namespace hil {

struct PolicyConfig {
  enum class Kind { HiLcb, HiLcbLite, Optimal, Hedge, AlwaysOffload, AlwaysAccept };
  enum class CostMode { Iid, Fixed };

  Kind kind = Kind::HiLcb;
  double alpha = 0.52;  // exploration parameter, must be > 0.5 for LCB kinds
  CostMode cost_mode = CostMode::Iid;
  double fixed_gamma = std::numeric_limits<double>::quiet_NaN();
  std::optional<double> eta;                  // Hedge rate; nullopt = auto
  std::optional<std::uint64_t> horizon_hint;  // needed by auto eta
  // Alternative reading of the forced-offload rule: offload whenever the
  // arriving bin itself is unobserved, even if a lower bin already pins the
  // prefix-max LCB. Off by default.
  bool strict_force_offload = false;

  std::string label() const;  // "hi-lcb", "hedge", ...
};

// Learner state shared by HI-LCB and HI-LCB-lite.
struct LcbState {
  std::vector<std::uint64_t> offloads;  // O_i per bin
  std::vector<double> fhat;             // empirical mean of revealed correctness
  std::uint64_t total_offloads = 0;     // O_gamma = sum of offloads
  double gamma_hat = 0.0;               // empirical mean of revealed costs
  std::uint64_t t = 1;                  // round index at decision time, 1-based

  explicit LcbState(std::size_t bins)
      : offloads(bins, 0), fhat(bins, 0.0) {}
};

// fhat_i - sqrt(alpha * ln t / O_i). Natural log, no clamping: comparisons
// downstream use the raw value. Requires O_i >= 1.
double lcb_phi_lite(const LcbState& state, std::size_t index, double alpha);

// Running max of lcb_phi_lite over observed bins j <= index; unobserved bins
// are skipped inside the max. Empty when no bin j <= index has been observed,
// in which case the caller must force an offload.
std::optional<double> lcb_phi(const LcbState& state, std::size_t index,
                              double alpha);

// gamma_hat - sqrt(alpha * ln t / O_gamma). Requires O_gamma >= 1. Fixed-cost
// variants bypass this and use gamma itself.
double lcb_gamma(const LcbState& state, double alpha);

class Policy {
 public:
  virtual ~Policy() = default;

  virtual std::string_view name() const = 0;
  virtual std::size_t bin_count() const = 0;
  virtual Decision decide(std::uint32_t bin) = 0;
  // Partial-feedback contract: fb.revealed iff d == Offload. Violations are
  // programming errors and throw std::logic_error.
  virtual void update(std::uint32_t bin, Decision d, const Feedback& fb) = 0;

  // Full-information baselines additionally observe the whole round.
  virtual bool wants_full_info() const { return false; }
  virtual void observe_round(const Round&) {}
};

class LcbPolicy final : public Policy {
 public:
  LcbPolicy(PolicyConfig config, std::size_t bins);

  std::string_view name() const override { return name_; }
  std::size_t bin_count() const override { return state.offloads.size(); }
  Decision decide(std::uint32_t bin) override;
  void update(std::uint32_t bin, Decision d, const Feedback& fb) override;

  const PolicyConfig& config() const { return config_; }

  LcbState state;  // exposed for invariant checks

 private:
  PolicyConfig config_;
  std::string name_;
};

Decision optimal_decide(const Partition& partition, std::size_t index);

class OptimalPolicy final : public Policy {
 public:
  explicit OptimalPolicy(Partition partition);

  std::string_view name() const override { return "optimal"; }
  std::size_t bin_count() const override { return partition_.accept_mask.size(); }
  Decision decide(std::uint32_t bin) override;
  void update(std::uint32_t, Decision, const Feedback&) override {}

 private:
  Partition partition_;
};

// Exponential weights over K+1 threshold experts: expert j offloads iff
// bin < j, so expert 0 never offloads and expert K always does.
struct HedgeState {
  std::vector<double> weights;   // strictly positive, sum 1
  std::vector<double> cum_loss;  // per expert
  double eta = 0.0;

  HedgeState(std::size_t bins, double eta_value)
      : weights(bins + 1, 1.0 / static_cast<double>(bins + 1)),
        cum_loss(bins + 1, 0.0),
        eta(eta_value) {}
};

Decision hedge_decide(const HedgeState& state, std::uint32_t bin, SplitMix64& rng);
void hedge_update(HedgeState& state, const Round& round);

class HedgePolicy final : public Policy {
 public:
  HedgePolicy(const PolicyConfig& config, std::size_t bins, std::uint64_t seed);

  std::string_view name() const override { return "hedge"; }
  std::size_t bin_count() const override { return state.weights.size() - 1; }
  Decision decide(std::uint32_t bin) override;
  void update(std::uint32_t, Decision, const Feedback&) override {}
  bool wants_full_info() const override { return true; }
  void observe_round(const Round& round) override;

  HedgeState state;

 private:
  SplitMix64 rng_;
};

class AlwaysOffloadPolicy final : public Policy {
 public:
  explicit AlwaysOffloadPolicy(std::size_t bins) : bins_(bins) {}
  std::string_view name() const override { return "always-offload"; }
  std::size_t bin_count() const override { return bins_; }
  Decision decide(std::uint32_t) override { return Decision::Offload; }
  void update(std::uint32_t, Decision, const Feedback&) override {}

 private:
  std::size_t bins_;
};

class AlwaysAcceptPolicy final : public Policy {
 public:
  explicit AlwaysAcceptPolicy(std::size_t bins) : bins_(bins) {}
  std::string_view name() const override { return "always-accept"; }
  std::size_t bin_count() const override { return bins_; }
  Decision decide(std::uint32_t) override { return Decision::Accept; }
  void update(std::uint32_t, Decision, const Feedback&) override {}

 private:
  std::size_t bins_;
};

// Builds a fresh policy for one episode. `policy_seed` only matters for the
// randomized Hedge baseline. Fixed-cost LCB configs default their gamma to
// the instance cost mean when none was given.
std::unique_ptr<Policy> make_policy(const PolicyConfig& config,
                                    const InstanceSpec& instance,
                                    std::uint64_t policy_seed);

}  // namespace hil
