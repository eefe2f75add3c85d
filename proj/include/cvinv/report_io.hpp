#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cvinv/node_config.hpp"

namespace cvinv {

/// 17 significant digits ("%.17g"); "inf", "-inf" and "nan" for non-finite values.
std::string format_real(double value);

/// A JSON number, or a quoted string for non-finite values.
std::string json_real(double value);

/// [re,im]
std::string json_complex(Complex value);

/// "re+imj" / "re-imj"
std::string format_complex_csv(Complex value);

/// Inverse of format_complex_csv. Throws Error(InvalidArgument) on malformed text.
Complex parse_complex_csv(std::string_view text);

/// Strict strtod over the whole string; accepts "inf"/"nan".
double parse_real(std::string_view text);

/**
 * Configuration document: {"nodes": [[re, im], ...], "multiplicities": [int, ...]}.
 * Errors name the offending field, e.g. "nodes[2]: expected a [re, im] pair".
 */
NodeConfiguration parse_config_json(std::string_view text);

NodeConfiguration load_config_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace cvinv
