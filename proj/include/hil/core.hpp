#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Core domain types for hierarchical-inference offloading: the quantized
// confidence grid, the per-bin accuracy profile f(.), the offload cost model,
// and the instance-level quantities derived from them (accept/offload
// partition, per-bin decision gaps, expected one-step costs).
//
// Everything here is a plain value type; all policy logic downstream works on
// grid *indices*, never on the raw confidence values.

namespace hil {

enum class Decision : std::uint8_t { Accept = 0, Offload = 1 };

struct ConfidenceGrid {
  std::vector<double> values;  // phi_1 <= ... <= phi_K, each in (0, 1]

  std::size_t size() const { return values.size(); }
  void validate() const;  // throws std::invalid_argument

  // K uniform bins represented by their midpoints (b + 0.5) / K.
  static ConfidenceGrid uniform(std::size_t bins);
};

struct AccuracyProfile {
  std::vector<double> f;  // per grid index, in [0, 1]
  // True iff f is non-decreasing over the grid. Recorded, never silently
  // fixed: trace-derived profiles may violate it.
  bool monotone = true;

  static AccuracyProfile from_values(std::vector<double> values);
  void validate(std::size_t bins) const;
};

struct CostModel {
  enum class Kind { FixedKnown, IidBernoulli, IidDiscrete };

  Kind kind = Kind::FixedKnown;
  double gamma = 0.0;  // mean, for FixedKnown and IidBernoulli
  std::vector<std::pair<double, double>> support;  // (value, prob), IidDiscrete

  static CostModel fixed_known(double gamma);
  static CostModel iid_bernoulli(double gamma);
  static CostModel iid_discrete(std::vector<std::pair<double, double>> support);

  double mean() const;
  void validate() const;
};

struct InstanceSpec {
  ConfidenceGrid grid;
  AccuracyProfile profile;
  // Arrival distribution (sums to 1); absent for purely adversarial use.
  std::optional<std::vector<double>> weights;
  CostModel cost;

  std::size_t bins() const { return grid.size(); }
  void validate() const;
};

// Delta_i = |1 - f(phi_i) - gamma|, one entry per grid index.
struct GapVector {
  std::vector<double> deltas;
};

// Split of the grid into accept-optimal (phi_h) and offload-optimal (phi_l)
// indices. A tie 1 - f = gamma lands in phi_l: the optimal rule accepts only
// under strict "<", matching the learner's ">=" offload rule.
struct Partition {
  std::vector<std::size_t> phi_h;  // ascending
  std::vector<std::size_t> phi_l;  // ascending
  std::vector<bool> accept_mask;   // accept_mask[i] == (i in phi_h)
};

Partition partition_phi(const InstanceSpec& instance);
GapVector gap_vector(const InstanceSpec& instance);

// Expected per-round cost of taking decision d on a sample with grid index
// `index`: 1 - f(phi_i) on Accept, cost.mean() on Offload.
double expected_step_cost(const InstanceSpec& instance, std::size_t index,
                          Decision d);

}  // namespace hil
