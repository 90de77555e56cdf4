#pragma once

#include "qgcat/category.hpp"
#include "qgcat/frame.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qgcat::cli {

// Input of every command: a frame, generators and cutoffs. Plain specs carry
// fix-space generators; specs with a modulus carry extended-word generators.
struct QGSpec {
  int N = 2;
  Frame frame;
  std::vector<FixGenerator> generators;
  std::vector<ExtGenerator> ext_generators;
  std::optional<std::int64_t> modulus;
  int report_cutoff = 6;
  int work_cutoff = 8;
  // Canonical JSON of the input (after overrides), hashed into reports.
  nlohmann::json canonical;
};

// Command-line overrides; unset fields keep the file's values.
struct SpecOverrides {
  std::string preset;
  std::optional<int> N;
  std::optional<int> report_cutoff;
  std::optional<int> work_cutoff;
};

// Parses a spec document. Syntax errors are reported as ParseError with line
// and column; inconsistent shapes as ShapeError.
QGSpec parse_spec(const std::string& text, const SpecOverrides& overrides);
// Reads and parses a spec file; an empty path means an empty document.
QGSpec load_spec(const std::string& path, const SpecOverrides& overrides);

}  // namespace qgcat::cli
