#include "puregaps/gamma_file.hpp"

#include <charconv>
#include <sstream>

namespace puregaps::io {

namespace {

bool parse_int(std::string_view token, std::int64_t& value) {
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc{} && ptr == last;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    fields.push_back(line.substr(start, pos - start));
  }
  return fields;
}

}  // namespace

GammaFile parse_gamma_file(std::istream& in) {
  GammaFile file;
  bool have_period = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;

    if (!have_period) {
      std::int64_t period = 0;
      if (fields.size() != 2 || fields[0] != "period" || !parse_int(fields[1], period)) {
        throw GammaFileError(line_no, "expected header \"period <int>\" at line " + std::to_string(line_no));
      }
      file.period = period;
      file.period_line = line_no;
      have_period = true;
      continue;
    }

    std::int64_t beta = 0, tau = 0;
    if (fields.size() != 2 || !parse_int(fields[0], beta) || !parse_int(fields[1], tau)) {
      throw GammaFileError(line_no, "expected \"<beta>\\t<tau>\" at line " + std::to_string(line_no));
    }
    if (beta < 0 || tau < 0) {
      throw GammaFileError(line_no, "ZeroOrNegativeCoordinate at line " + std::to_string(line_no));
    }
    file.points.emplace_back(beta, tau);
    file.lines.push_back(line_no);
  }
  if (!have_period) throw GammaFileError(line_no, "missing \"period <int>\" header");
  return file;
}

GeneratingSet load_gamma_file(std::istream& in) {
  const GammaFile file = parse_gamma_file(in);
  try {
    return validate_generating_set(file.points, file.period);
  } catch (const ValidationError& e) {
    const std::size_t line =
        e.kind() == ValidationErrorKind::NonPositivePeriod ? file.period_line : file.lines.at(e.index());
    std::ostringstream os;
    os << to_string(e.kind());
    os << " at line " << line;
    os << ": " << e.what();
    throw GammaFileError(line, os.str());
  }
}

void write_gamma_file(std::ostream& out, const GeneratingSet& gamma) {
  out << "period " << gamma.period() << '\n';
  for (const auto& p : gamma.points()) out << p.a << '\t' << p.b << '\n';
}

}  // namespace puregaps::io
