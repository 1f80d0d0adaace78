#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "huffman/huffman.hpp"

namespace huffman::cli {

enum ExitCode : int { kSuccess = 0, kPropertyFailure = 1, kUsageError = 2 };

/// Entry point; everything the process would print goes to `out` / `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Exact values become "p/q" strings, floats JSON numbers, infinity "inf".
nlohmann::json to_json(const Numeric& value);
Numeric numeric_from_json(const nlohmann::json& value);

/// {family, length, scale:{exact, value}, elements, rotation_offset, label, report}
nlohmann::json sequence_to_json(const HuffmanSequence& seq, std::optional<double> tol = std::nullopt);

/// JSON (object with "elements" or a bare array) or CSV (optional header;
/// a "value" column is used when present).
HuffmanSequence read_sequence(const std::filesystem::path& path);
HuffmanSequence parse_sequence_text(const std::string& text, bool json);

/// Builds a family member; for "tangent" the length is the spectrum length.
HuffmanSequence build_family(const std::string& family, int length, const std::string& scale);

struct SweepSpec {
  std::string family;
  std::vector<int> lengths;
  std::vector<Scale> scales;
  double tolerance = -1.0;  ///< < 0: exact zero for exact rows, 1e-8 otherwise
};

/// "a:b:c" (inclusive) or a comma list. Exact when every token is exact.
std::vector<Scale> parse_scale_range(const std::string& text);
std::vector<int> parse_length_range(const std::string& text);

struct SweepRow {
  int length = 0;
  Scale scale = Scale(0);
  bool canonical = false;
  std::string peak, max_interior, end_value, flatness, flatness_bound, error;
};

/// Rows sorted by (N, s); independent of `jobs`.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int jobs);
std::string sweep_csv(const std::string& family, const std::vector<SweepRow>& rows);

}  // namespace huffman::cli
