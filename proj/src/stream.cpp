#include "hil/stream.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "hil/rng.hpp"

namespace hil {

ArrivalProcess ArrivalProcess::stochastic(std::vector<double> weights) {
  ArrivalProcess a;
  a.kind = Kind::Stochastic;
  a.weights = std::move(weights);
  return a;
}

ArrivalProcess ArrivalProcess::adversarial(std::vector<std::uint32_t> sequence) {
  ArrivalProcess a;
  a.kind = Kind::Adversarial;
  a.sequence = std::move(sequence);
  return a;
}

ArrivalProcess ArrivalProcess::trace_replay(
    std::vector<std::pair<std::uint32_t, std::uint8_t>> rows) {
  ArrivalProcess a;
  a.kind = Kind::TraceReplay;
  a.replay_rows = std::move(rows);
  return a;
}

void ArrivalProcess::validate(std::size_t bins) const {
  switch (kind) {
    case Kind::Stochastic: {
      if (weights.size() != bins) {
        throw std::invalid_argument("arrivals: weights length must equal grid length");
      }
      double total = 0.0;
      for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("arrivals: weights must be >= 0");
        total += w;
      }
      if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("arrivals: weights must sum to 1");
      }
      break;
    }
    case Kind::Adversarial:
      for (std::uint32_t i : sequence) {
        if (i >= bins) throw std::invalid_argument("arrivals: sequence index out of range");
      }
      break;
    case Kind::TraceReplay:
      for (const auto& [bin, correct] : replay_rows) {
        if (bin >= bins) throw std::invalid_argument("arrivals: replay bin out of range");
        if (correct > 1) throw std::invalid_argument("arrivals: replay correct flag must be 0/1");
      }
      break;
  }
}

ArrivalProcess load_adversarial_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("arrivals: cannot open " + path);
  std::vector<std::uint32_t> seq;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(line, &pos);
      if (pos != line.size() || v < 0) throw std::invalid_argument("");
      seq.push_back(static_cast<std::uint32_t>(v));
    } catch (...) {
      throw std::runtime_error("arrivals: bad index at line " + std::to_string(line_no));
    }
  }
  return ArrivalProcess::adversarial(std::move(seq));
}

namespace {

// Inverse-CDF sampler over a fixed distribution.
class CdfSampler {
 public:
  explicit CdfSampler(const std::vector<double>& probs) {
    cdf_.reserve(probs.size());
    double acc = 0.0;
    for (double p : probs) {
      acc += p;
      cdf_.push_back(acc);
    }
    if (!cdf_.empty()) cdf_.back() = 1.0;  // guard against rounding
  }

  std::size_t sample(double u) const {
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return static_cast<std::size_t>(
        std::min<std::ptrdiff_t>(it - cdf_.begin(),
                                 static_cast<std::ptrdiff_t>(cdf_.size()) - 1));
  }

 private:
  std::vector<double> cdf_;
};

}  // namespace

RoundStream::RoundStream(InstanceSpec instance, ArrivalProcess arrivals,
                         std::uint64_t seed, std::uint64_t horizon) {
  instance.validate();
  arrivals.validate(instance.bins());
  if (horizon < 1) throw std::invalid_argument("stream: horizon must be >= 1");
  if (arrivals.kind == ArrivalProcess::Kind::Adversarial &&
      arrivals.sequence.size() < horizon) {
    throw std::invalid_argument("stream: adversarial sequence shorter than horizon");
  }
  if (arrivals.kind == ArrivalProcess::Kind::TraceReplay &&
      arrivals.replay_rows.size() < horizon) {
    throw std::invalid_argument("stream: trace shorter than horizon");
  }

  instance_ = std::move(instance);
  seed_ = seed;

  SplitMix64 arrival_rng(substream_seed(seed, "arrival"));
  SplitMix64 correct_rng(substream_seed(seed, "correct"));
  SplitMix64 cost_rng(substream_seed(seed, "cost"));

  const CostModel& cost = instance_.cost;
  std::vector<double> cost_probs;
  if (cost.kind == CostModel::Kind::IidDiscrete) {
    for (const auto& [value, prob] : cost.support) cost_probs.push_back(prob);
  }
  const CdfSampler cost_sampler(cost_probs);
  const CdfSampler arrival_sampler(arrivals.weights);

  rounds_.resize(horizon);
  for (std::uint64_t n = 0; n < horizon; ++n) {
    Round& r = rounds_[n];
    r.t = n + 1;

    switch (arrivals.kind) {
      case ArrivalProcess::Kind::Stochastic:
        r.bin = static_cast<std::uint32_t>(arrival_sampler.sample(arrival_rng.next_double()));
        break;
      case ArrivalProcess::Kind::Adversarial:
        r.bin = arrivals.sequence[n];
        break;
      case ArrivalProcess::Kind::TraceReplay:
        r.bin = arrivals.replay_rows[n].first;
        break;
    }

    if (arrivals.kind == ArrivalProcess::Kind::TraceReplay) {
      r.correct = arrivals.replay_rows[n].second != 0;
    } else {
      r.correct = correct_rng.next_double() < instance_.profile.f[r.bin];
    }

    switch (cost.kind) {
      case CostModel::Kind::FixedKnown:
        r.cost = cost.gamma;
        break;
      case CostModel::Kind::IidBernoulli:
        r.cost = cost_rng.next_double() < cost.gamma ? 1.0 : 0.0;
        break;
      case CostModel::Kind::IidDiscrete:
        r.cost = cost.support[cost_sampler.sample(cost_rng.next_double())].first;
        break;
    }
  }
}

RoundStream RoundStream::from_rounds(InstanceSpec instance,
                                     std::vector<Round> rounds) {
  instance.validate();
  if (rounds.empty()) throw std::invalid_argument("stream: need at least one round");
  for (const Round& r : rounds) {
    if (r.bin >= instance.bins()) {
      throw std::invalid_argument("stream: round bin out of range");
    }
  }
  RoundStream s;
  s.instance_ = std::move(instance);
  s.rounds_ = std::move(rounds);
  return s;
}

Feedback realize_feedback(const Round& round, Decision d) {
  Feedback fb;
  if (d == Decision::Offload) {
    fb.revealed = true;
    fb.correct = round.correct;
    fb.cost = round.cost;
  }
  return fb;
}

double realized_loss(const Round& round, Decision d) {
  if (d == Decision::Offload) return round.cost;
  return round.correct ? 0.0 : 1.0;
}

}  // namespace hil
