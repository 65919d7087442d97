#include "hil/trace.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hil {

namespace {

std::string trim(std::string s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

bool parse_double(const std::string& s, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("trace: line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::vector<TraceRow> parse_trace(std::istream& in) {
  std::vector<TraceRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;

    const auto comma = line.find(',');
    if (comma == std::string::npos) fail(line_no, "expected `confidence,correct`");
    const std::string first = trim(line.substr(0, comma));
    const std::string second = trim(line.substr(comma + 1));

    double confidence = 0.0;
    if (!parse_double(first, confidence)) {
      if (first_content_line) {  // header row
        first_content_line = false;
        continue;
      }
      fail(line_no, "malformed confidence '" + first + "'");
    }
    first_content_line = false;

    if (confidence < 0.0 || confidence > 1.0) {
      fail(line_no, "confidence outside [0,1]");
    }
    double correct = 0.0;
    if (!parse_double(second, correct) || (correct != 0.0 && correct != 1.0)) {
      fail(line_no, "correct flag must be 0 or 1");
    }
    rows.push_back(TraceRow{confidence, static_cast<std::uint8_t>(correct)});
  }
  return rows;
}

std::vector<TraceRow> parse_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("trace: cannot open " + path);
  return parse_trace(in);
}

QuantizedTrace quantize(const std::vector<TraceRow>& rows, std::size_t bins) {
  if (bins < 1) throw std::invalid_argument("quantize: bins must be >= 1");
  QuantizedTrace qt;
  qt.grid = ConfidenceGrid::uniform(bins);
  qt.bin_counts.assign(bins, 0);
  qt.bin_correct_counts.assign(bins, 0);
  qt.rows.reserve(rows.size());
  const double k = static_cast<double>(bins);
  for (const TraceRow& row : rows) {
    auto bin = static_cast<std::size_t>(row.confidence * k);
    if (bin >= bins) bin = bins - 1;  // c = 1.0 clamps into the top bin
    qt.rows.emplace_back(static_cast<std::uint32_t>(bin), row.correct);
    ++qt.bin_counts[bin];
    if (row.correct) ++qt.bin_correct_counts[bin];
  }
  return qt;
}

InstanceSpec estimate_instance(const QuantizedTrace& qt, CostModel cost) {
  const std::size_t bins = qt.grid.size();
  std::uint64_t total = 0;
  for (std::uint64_t c : qt.bin_counts) total += c;
  if (total == 0) throw std::invalid_argument("estimate: all bins empty");

  std::vector<double> fhat(bins, 0.0);
  std::vector<double> weights(bins, 0.0);
  for (std::size_t b = 0; b < bins; ++b) {
    if (qt.bin_counts[b] > 0) {
      fhat[b] = static_cast<double>(qt.bin_correct_counts[b]) /
                static_cast<double>(qt.bin_counts[b]);
      weights[b] = static_cast<double>(qt.bin_counts[b]) / static_cast<double>(total);
    }
  }

  // Interpolate empty bins from the nearest non-empty neighbour on each side.
  for (std::size_t b = 0; b < bins; ++b) {
    if (qt.bin_counts[b] > 0) continue;
    double left = NAN, right = NAN;
    for (std::size_t i = b; i-- > 0;) {
      if (qt.bin_counts[i] > 0) { left = fhat[i]; break; }
    }
    for (std::size_t i = b + 1; i < bins; ++i) {
      if (qt.bin_counts[i] > 0) { right = fhat[i]; break; }
    }
    if (std::isnan(left)) fhat[b] = right;
    else if (std::isnan(right)) fhat[b] = left;
    else fhat[b] = 0.5 * (left + right);
  }

  InstanceSpec instance;
  instance.grid = qt.grid;
  instance.profile = AccuracyProfile::from_values(std::move(fhat));
  instance.weights = std::move(weights);
  instance.cost = std::move(cost);
  instance.validate();
  return instance;
}

void save_qtrace(const QuantizedTrace& qt, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("trace: cannot write " + path);
  out << "# bins=" << qt.grid.size() << "\n";
  out << "bin,correct\n";
  for (const auto& [bin, correct] : qt.rows) {
    out << bin << ',' << static_cast<int>(correct) << '\n';
  }
}

QuantizedTrace load_qtrace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("trace: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("trace: empty qtrace " + path);
  line = trim(line);
  const std::string prefix = "# bins=";
  if (line.rfind(prefix, 0) != 0) {
    throw std::runtime_error("trace: missing `# bins=` header in " + path);
  }
  const std::size_t bins = std::stoull(line.substr(prefix.size()));

  QuantizedTrace qt;
  qt.grid = ConfidenceGrid::uniform(bins);
  qt.bin_counts.assign(bins, 0);
  qt.bin_correct_counts.assign(bins, 0);

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line == "bin,correct") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) fail(line_no, "expected `bin,correct`");
    std::uint64_t bin = 0;
    int correct = -1;
    try {
      bin = std::stoull(trim(line.substr(0, comma)));
      correct = std::stoi(trim(line.substr(comma + 1)));
    } catch (...) {
      fail(line_no, "malformed row");
    }
    if (bin >= bins || (correct != 0 && correct != 1)) fail(line_no, "row out of range");
    qt.rows.emplace_back(static_cast<std::uint32_t>(bin),
                         static_cast<std::uint8_t>(correct));
    ++qt.bin_counts[bin];
    if (correct) ++qt.bin_correct_counts[bin];
  }
  return qt;
}

}  // namespace hil
