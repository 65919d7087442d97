#pragma once

#include <string>

#include "hil/core.hpp"

// JSON (de)serialization of instances. Schema:
//   {"grid":[...], "f":[...], "weights":[...]|null,
//    "cost":{"variant":"fixed"|"bernoulli"|"discrete",
//            "gamma":g | "support":[[value,prob],...]}}

namespace hil {

InstanceSpec instance_from_json(const std::string& text);
InstanceSpec load_instance(const std::string& path);

std::string instance_to_json(const InstanceSpec& instance, int indent = 2);
void save_instance(const InstanceSpec& instance, const std::string& path);

// FNV-1a 64 over the canonical (sorted-key, compact) JSON form, hex-encoded.
std::string instance_hash(const InstanceSpec& instance);

}  // namespace hil
