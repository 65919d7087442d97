#include "hil/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hil {

namespace {

constexpr double kSumTolerance = 1e-12;

void check(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void ConfidenceGrid::validate() const {
  check(!values.empty(), "grid: must be non-empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    check(values[i] > 0.0 && values[i] <= 1.0,
          "grid: value " + std::to_string(i) + " outside (0,1]");
    if (i > 0) {
      check(values[i - 1] <= values[i], "grid: values must be non-decreasing");
    }
  }
}

ConfidenceGrid ConfidenceGrid::uniform(std::size_t bins) {
  if (bins == 0) throw std::invalid_argument("grid: bins must be >= 1");
  ConfidenceGrid g;
  g.values.reserve(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    g.values.push_back((static_cast<double>(b) + 0.5) / static_cast<double>(bins));
  }
  return g;
}

AccuracyProfile AccuracyProfile::from_values(std::vector<double> values) {
  AccuracyProfile p;
  p.f = std::move(values);
  p.monotone = true;
  for (std::size_t i = 1; i < p.f.size(); ++i) {
    if (p.f[i] < p.f[i - 1]) {
      p.monotone = false;
      break;
    }
  }
  return p;
}

void AccuracyProfile::validate(std::size_t bins) const {
  check(f.size() == bins, "profile: f must have one entry per grid index");
  for (std::size_t i = 0; i < f.size(); ++i) {
    check(f[i] >= 0.0 && f[i] <= 1.0,
          "profile: f[" + std::to_string(i) + "] outside [0,1]");
  }
}

CostModel CostModel::fixed_known(double gamma) {
  CostModel c;
  c.kind = Kind::FixedKnown;
  c.gamma = gamma;
  c.validate();
  return c;
}

CostModel CostModel::iid_bernoulli(double gamma) {
  CostModel c;
  c.kind = Kind::IidBernoulli;
  c.gamma = gamma;
  c.validate();
  return c;
}

CostModel CostModel::iid_discrete(std::vector<std::pair<double, double>> support) {
  CostModel c;
  c.kind = Kind::IidDiscrete;
  c.support = std::move(support);
  c.validate();
  return c;
}

double CostModel::mean() const {
  switch (kind) {
    case Kind::FixedKnown:
    case Kind::IidBernoulli:
      return gamma;
    case Kind::IidDiscrete: {
      double m = 0.0;
      for (const auto& [value, prob] : support) m += value * prob;
      return m;
    }
  }
  return gamma;
}

void CostModel::validate() const {
  switch (kind) {
    case Kind::FixedKnown:
    case Kind::IidBernoulli:
      check(gamma >= 0.0 && gamma <= 1.0, "cost: gamma outside [0,1]");
      break;
    case Kind::IidDiscrete: {
      check(!support.empty(), "cost: discrete support must be non-empty");
      double total = 0.0;
      for (const auto& [value, prob] : support) {
        check(value >= 0.0 && value <= 1.0, "cost: support value outside [0,1]");
        check(prob >= 0.0, "cost: support prob must be >= 0");
        total += prob;
      }
      check(std::abs(total - 1.0) <= kSumTolerance,
            "cost: support probs must sum to 1");
      break;
    }
  }
}

void InstanceSpec::validate() const {
  grid.validate();
  profile.validate(grid.size());
  cost.validate();
  if (weights) {
    check(weights->size() == grid.size(),
          "instance: weights length must equal grid length");
    double total = 0.0;
    for (double w : *weights) {
      check(w >= 0.0, "instance: weights must be >= 0");
      total += w;
    }
    check(std::abs(total - 1.0) <= kSumTolerance,
          "instance: weights must sum to 1");
  }
}

Partition partition_phi(const InstanceSpec& instance) {
  const double gamma = instance.cost.mean();
  const std::size_t k = instance.bins();
  Partition part;
  part.accept_mask.resize(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    const bool accept = (1.0 - instance.profile.f[i]) < gamma;  // tie offloads
    part.accept_mask[i] = accept;
    (accept ? part.phi_h : part.phi_l).push_back(i);
  }
  return part;
}

GapVector gap_vector(const InstanceSpec& instance) {
  const double gamma = instance.cost.mean();
  GapVector gaps;
  gaps.deltas.reserve(instance.bins());
  for (double f : instance.profile.f) {
    gaps.deltas.push_back(std::abs(1.0 - f - gamma));
  }
  return gaps;
}

double expected_step_cost(const InstanceSpec& instance, std::size_t index,
                          Decision d) {
  if (index >= instance.bins()) {
    throw std::invalid_argument("expected_step_cost: index out of range");
  }
  return d == Decision::Accept ? 1.0 - instance.profile.f[index]
                               : instance.cost.mean();
}

}  // namespace hil
