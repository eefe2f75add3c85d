#include "cvinv/report_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cvinv/errors.hpp"

namespace cvinv {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string json_real(double value) {
  if (std::isfinite(value)) return format_real(value);
  return '"' + format_real(value) + '"';
}

std::string json_complex(Complex value) {
  return '[' + json_real(value.real()) + ',' + json_real(value.imag()) + ']';
}

std::string format_complex_csv(Complex value) {
  const double im = value.imag();
  const std::string sign = std::signbit(im) ? "-" : "+";
  return format_real(value.real()) + sign + format_real(std::abs(im)) + 'j';
}

double parse_real(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty number");
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) {
    throw Error(ErrorKind::InvalidArgument, "malformed number '" + s + "'");
  }
  return value;
}

Complex parse_complex_csv(std::string_view text) {
  if (text.size() < 4 || text.back() != 'j') {
    throw Error(ErrorKind::InvalidArgument, "malformed complex '" + std::string(text) + "'");
  }
  const std::string_view body = text.substr(0, text.size() - 1);
  // The separating sign is the last '+'/'-' not directly following an exponent marker.
  for (std::size_t pos = body.size() - 1; pos > 0; --pos) {
    const char c = body[pos];
    if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
      const double re = parse_real(body.substr(0, pos));
      const double im_mag = parse_real(body.substr(pos + 1));
      return {re, c == '-' ? -im_mag : im_mag};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "malformed complex '" + std::string(text) + "'");
}

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& message) {
  throw Error(ErrorKind::InvalidArgument, field + ": " + message);
}

}  // namespace

NodeConfiguration parse_config_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    field_error("config", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) field_error("config", "expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "nodes" && key != "multiplicities") field_error(key, "unknown field");
  }
  if (!doc.contains("nodes")) field_error("nodes", "missing");
  if (!doc.contains("multiplicities")) field_error("multiplicities", "missing");

  const auto& jnodes = doc["nodes"];
  const auto& jmult = doc["multiplicities"];
  if (!jnodes.is_array()) field_error("nodes", "expected an array of [re, im] pairs");
  if (!jmult.is_array()) field_error("multiplicities", "expected an array of integers");

  std::vector<Complex> nodes;
  for (std::size_t i = 0; i < jnodes.size(); ++i) {
    const auto& pair = jnodes[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      field_error("nodes[" + std::to_string(i) + "]", "expected a [re, im] pair of numbers");
    }
    nodes.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  std::vector<int> multiplicities;
  for (std::size_t i = 0; i < jmult.size(); ++i) {
    const auto& m = jmult[i];
    if (!m.is_number_integer()) {
      field_error("multiplicities[" + std::to_string(i) + "]", "expected an integer");
    }
    const auto value = m.get<long long>();
    if (value > kMaxTotalMultiplicity || value < -kMaxTotalMultiplicity) {
      field_error("multiplicities[" + std::to_string(i) + "]", "out of range");
    }
    multiplicities.push_back(static_cast<int>(value));
  }
  return NodeConfiguration::validate(std::move(nodes), std::move(multiplicities));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) field_error(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

NodeConfiguration load_config_file(const std::filesystem::path& path) {
  return parse_config_json(read_text_file(path));
}

}  // namespace cvinv
