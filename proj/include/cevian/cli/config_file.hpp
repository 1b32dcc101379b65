#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cevian/arrangement.hpp"
#include "cevian/rational.hpp"

namespace cevian::cli {

/// Reading or writing a file failed. Maps to exit code 3.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Comma-separated fractions, optionally wrapped in [ ] and with each item
/// optionally double-quoted: `1/3, 1/2` and `["1/3","1/2"]` are equivalent.
/// An empty string (or `[]`) is an empty list.
std::vector<Rational> parse_fraction_list(std::string_view text);

/// Config text grammar, one entry per line:
///
///   line   := blank | comment | entry
///   comment:= '#' anything
///   entry  := key '=' list
///   key    := feet_a | feet_b | feet_c      (case-insensitive)
///
/// Missing keys mean no cevians from that vertex. Unknown or repeated keys
/// and malformed lists raise ValidationError with the line number.
CevianConfig parse_config_text(std::string_view text);

/// Throws IoError if the file cannot be read.
CevianConfig load_config_file(const std::filesystem::path& path);

/// Inverse of parse_config_text (used for fixtures).
std::string format_config(const CevianConfig& config);

}  // namespace cevian::cli
