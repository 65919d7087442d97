#include "hil/instance_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hil {

using nlohmann::json;

namespace {

json cost_to_json(const CostModel& cost) {
  json j;
  switch (cost.kind) {
    case CostModel::Kind::FixedKnown:
      j["variant"] = "fixed";
      j["gamma"] = cost.gamma;
      break;
    case CostModel::Kind::IidBernoulli:
      j["variant"] = "bernoulli";
      j["gamma"] = cost.gamma;
      break;
    case CostModel::Kind::IidDiscrete:
      j["variant"] = "discrete";
      j["support"] = json::array();
      for (const auto& [value, prob] : cost.support) {
        j["support"].push_back(json::array({value, prob}));
      }
      break;
  }
  return j;
}

CostModel cost_from_json(const json& j) {
  const std::string variant = j.at("variant").get<std::string>();
  if (variant == "fixed") {
    return CostModel::fixed_known(j.at("gamma").get<double>());
  }
  if (variant == "bernoulli") {
    return CostModel::iid_bernoulli(j.at("gamma").get<double>());
  }
  if (variant == "discrete") {
    std::vector<std::pair<double, double>> support;
    for (const auto& entry : j.at("support")) {
      support.emplace_back(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
    return CostModel::iid_discrete(std::move(support));
  }
  throw std::invalid_argument("cost: unknown variant '" + variant + "'");
}

json to_json(const InstanceSpec& instance) {
  json j;
  j["grid"] = instance.grid.values;
  j["f"] = instance.profile.f;
  j["weights"] = instance.weights ? json(*instance.weights) : json(nullptr);
  j["cost"] = cost_to_json(instance.cost);
  return j;
}

}  // namespace

InstanceSpec instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("instance: bad JSON: ") + e.what());
  }
  InstanceSpec instance;
  instance.grid.values = j.at("grid").get<std::vector<double>>();
  instance.profile = AccuracyProfile::from_values(j.at("f").get<std::vector<double>>());
  if (j.contains("weights") && !j.at("weights").is_null()) {
    instance.weights = j.at("weights").get<std::vector<double>>();
  }
  instance.cost = cost_from_json(j.at("cost"));
  instance.validate();
  return instance;
}

InstanceSpec load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("instance: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str());
}

std::string instance_to_json(const InstanceSpec& instance, int indent) {
  return to_json(instance).dump(indent);
}

void save_instance(const InstanceSpec& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("instance: cannot write " + path);
  out << instance_to_json(instance) << '\n';
}

std::string instance_hash(const InstanceSpec& instance) {
  const std::string canonical = to_json(instance).dump();
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : canonical) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001B3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace hil
