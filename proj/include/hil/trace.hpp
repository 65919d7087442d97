#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "hil/core.hpp"

// Ingest of real model logs: CSV rows of (confidence, correct) become a
// quantized trace over K uniform bins plus an estimated instance (empirical
// f-hat per bin, empirical arrival weights).

namespace hil {

struct TraceRow {
  double confidence = 0.0;  // in [0, 1]
  std::uint8_t correct = 0; // 0/1
};

struct QuantizedTrace {
  ConfidenceGrid grid;  // K uniform bins, midpoint representatives
  std::vector<std::pair<std::uint32_t, std::uint8_t>> rows;  // (bin, correct)
  std::vector<std::uint64_t> bin_counts;
  std::vector<std::uint64_t> bin_correct_counts;
};

// CSV columns `confidence,correct`; an optional header is detected by a
// non-numeric first field. Malformed rows raise std::runtime_error with the
// 1-based line number. An empty input is a valid empty trace.
std::vector<TraceRow> parse_trace(std::istream& in);
std::vector<TraceRow> parse_trace_file(const std::string& path);

// bin(c) = min(floor(c*K), K-1); representative of bin b is (b+0.5)/K.
QuantizedTrace quantize(const std::vector<TraceRow>& rows, std::size_t bins);

// f-hat(bin) = correct/count on non-empty bins, weights = count/total. Empty
// bins get weight 0 and f-hat interpolated as the mean of the nearest
// non-empty neighbours (single neighbour at the edges). The monotone flag is
// set from the resulting f-hat, never forced. Throws when all bins are empty.
InstanceSpec estimate_instance(const QuantizedTrace& qt, CostModel cost);

// Quantized trace file: "# bins=<K>" header, then "bin,correct" CSV rows.
void save_qtrace(const QuantizedTrace& qt, const std::string& path);
QuantizedTrace load_qtrace(const std::string& path);

}  // namespace hil
