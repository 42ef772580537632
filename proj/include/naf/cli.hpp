#pragma once

// Command-line front end. Reports are ordered (key, value) lists rendered
// either as `key = value` lines or as one JSON object with the same keys.

#include "naf/digit_set.hpp"
#include "naf/lattice.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace naf::cli {

struct InstanceSpec {
  std::optional<IntPoly> min_poly;
  std::optional<IntMatrix> matrix;
  unsigned w = 1;
  DigitFamily digitset = DigitFamily::minimal_norm;
  unsigned precision_cap = 4096;
};

/// Throws InputError; syntax errors carry line and column.
InstanceSpec parse_instance(const std::string& text);

/// "3" or "5,-1".
LatticePoint parse_point(const std::string& text);

/// Exit codes: 0 success, 1 counterexample, cycle or weight violation,
/// 2 malformed input, 3 precision or size cap exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace naf::cli
