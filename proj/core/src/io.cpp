#include "wpnum/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace wpnum {

namespace {

using ordered_json = nlohmann::ordered_json;

int line_of_byte(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view field, int line) {
  const std::string tmp(trim(field));
  if (tmp.empty()) throw ParseError("empty numeric field", line);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(tmp.c_str(), &end);
  if (end != tmp.c_str() + tmp.size() || errno == ERANGE)
    throw ParseError("malformed number '" + tmp + "'", line);
  if (!std::isfinite(v)) throw ParseError("non-finite value '" + tmp + "'", line);
  return v;
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

std::string to_string(CoefficientKind kind) {
  switch (kind) {
    case CoefficientKind::taylor:
      return "taylor";
    case CoefficientKind::laurent:
      return "laurent";
    case CoefficientKind::harmonic_beltrami:
      return "harmonic_beltrami";
  }
  return "unknown";
}

CoefficientFile parse_coefficient_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("coefficient file: ") + e.what(), line_of_byte(text, e.byte));
  }
  if (!j.is_object()) throw ParseError("coefficient file: top level must be an object", 1);
  CoefficientFile out;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "taylor")
      out.kind = CoefficientKind::taylor;
    else if (kind == "laurent")
      out.kind = CoefficientKind::laurent;
    else if (kind == "harmonic_beltrami")
      out.kind = CoefficientKind::harmonic_beltrami;
    else
      throw ParseError("coefficient file: unknown kind '" + kind + "'", 0);
    out.offset = j.at("offset").get<int>();
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != im.size()) throw ParseError("coefficient file: re and im lengths differ", 0);
    if (re.empty()) throw ParseError("coefficient file: no coefficients", 0);
    out.coeffs.resize(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (!std::isfinite(re[i]) || !std::isfinite(im[i]))
        throw ParseError("coefficient file: non-finite entry at index " + std::to_string(i), 0);
      out.coeffs[i] = {re[i], im[i]};
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("coefficient file: ") + e.what(), 0);
  }
  return out;
}

CoefficientFile read_coefficient_file(const std::filesystem::path& path) {
  return parse_coefficient_json(slurp(path));
}

std::string to_json(const CoefficientFile& file) {
  ordered_json j;
  j["kind"] = to_string(file.kind);
  j["offset"] = file.offset;
  std::vector<double> re, im;
  re.reserve(file.coeffs.size());
  im.reserve(file.coeffs.size());
  for (const Complex c : file.coeffs) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  j["re"] = re;
  j["im"] = im;
  return j.dump(2) + "\n";
}

void write_coefficient_file(const std::filesystem::path& path, const CoefficientFile& file) {
  spit(path, to_json(file));
}

CoefficientFile coefficient_file(const PowerSeries& s) {
  return {CoefficientKind::taylor, 0, {s.coefficients().begin(), s.coefficients().end()}};
}

CoefficientFile coefficient_file(const LaurentSeries& s) {
  return {CoefficientKind::laurent, s.n_min(), {s.coefficients().begin(), s.coefficients().end()}};
}

CoefficientFile coefficient_file(const HarmonicBeltrami& h) {
  const auto c = h.phi().coefficients();
  return {CoefficientKind::harmonic_beltrami, 0, {c.begin(), c.end()}};
}

PowerSeries to_power_series(const CoefficientFile& file) {
  if (file.kind == CoefficientKind::laurent)
    throw ParameterError("to_power_series: laurent data is not a Taylor series");
  if (file.offset < 0) throw ParameterError("to_power_series: negative offset");
  std::vector<Complex> c(static_cast<std::size_t>(file.offset), Complex{});
  c.insert(c.end(), file.coeffs.begin(), file.coeffs.end());
  return PowerSeries(std::move(c));
}

LaurentSeries to_laurent_series(const CoefficientFile& file, double inner, double outer) {
  return LaurentSeries(file.offset, file.coeffs, inner, outer);
}

HarmonicBeltrami to_harmonic_beltrami(const CoefficientFile& file) {
  if (file.kind != CoefficientKind::harmonic_beltrami)
    throw ParameterError("to_harmonic_beltrami: kind must be harmonic_beltrami");
  return HarmonicBeltrami(to_power_series(file));
}

SampledGrid parse_grid_csv(std::string_view text) {
  std::vector<Complex> nodes;
  std::vector<double> weights;
  std::vector<Complex> values;
  bool header_seen = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.size() - start : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!header_seen) {
      if (fields.size() != 5 || fields[0] != "x" || fields[1] != "y" || fields[2] != "weight" ||
          fields[3] != "re" || fields[4] != "im")
        throw ParseError("grid csv: expected header x,y,weight,re,im", line_no);
      header_seen = true;
      continue;
    }
    if (fields.size() != 5) throw ParseError("grid csv: expected 5 fields", line_no);
    const Complex z{parse_double(fields[0], line_no), parse_double(fields[1], line_no)};
    const double w = parse_double(fields[2], line_no);
    const Complex v{parse_double(fields[3], line_no), parse_double(fields[4], line_no)};
    if (!(std::norm(z) < 1.0)) throw ParseError("grid csv: node outside the unit disk", line_no);
    if (!(w > 0.0)) throw ParseError("grid csv: weight must be positive", line_no);
    nodes.push_back(z);
    weights.push_back(w);
    values.push_back(v);
  }
  if (!header_seen) throw ParseError("grid csv: empty input", 1);
  if (nodes.empty()) throw ParseError("grid csv: no samples", line_no);
  return {QuadratureRule(DiskRegion{1.0}, std::move(nodes), std::move(weights)), std::move(values)};
}

SampledGrid read_grid_csv(const std::filesystem::path& path) { return parse_grid_csv(slurp(path)); }

std::string to_csv(const QuadratureRule& rule, std::span<const Complex> values) {
  if (values.size() != rule.size()) throw ParameterError("to_csv: sample count mismatch");
  std::string out = "x,y,weight,re,im\n";
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Complex z = rule.nodes()[i];
    out += format_double(z.real()) + "," + format_double(z.imag()) + "," +
           format_double(rule.weights()[i]) + "," + format_double(values[i].real()) + "," +
           format_double(values[i].imag()) + "\n";
  }
  return out;
}

}  // namespace wpnum
