#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "puregaps/generating_set.hpp"

namespace puregaps::io {

/// Text format:
///   # comment
///   period <pi>
///   <beta>\t<tau>
///   ...
/// Blank lines and '#' lines may appear anywhere.
struct GammaFile {
  std::int64_t period = 0;
  std::size_t period_line = 0;
  std::vector<LatticePoint> points;
  /// 1-based source line of each point.
  std::vector<std::size_t> lines;
};

class GammaFileError : public std::runtime_error {
 public:
  GammaFileError(std::size_t line, const std::string& message)
      : std::runtime_error(message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Syntax only; throws GammaFileError with the line number.
GammaFile parse_gamma_file(std::istream& in);

/// Parses and validates. Validation failures are reported as
/// "<Kind> at line N: <detail>".
GeneratingSet load_gamma_file(std::istream& in);

void write_gamma_file(std::ostream& out, const GeneratingSet& gamma);

}  // namespace puregaps::io
