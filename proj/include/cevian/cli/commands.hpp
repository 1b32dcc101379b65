#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include "cevian/arrangement.hpp"
#include "cevian/oracle.hpp"

namespace cevian::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitInternal = 2,  // formula and oracle disagree
  kExitIo = 3,
};

/// Exactly one of: inline lists (any of a/b/c), a config file, or --equal n.
struct ConfigSource {
  std::optional<std::string> feet_a;
  std::optional<std::string> feet_b;
  std::optional<std::string> feet_c;
  std::optional<std::string> file;
  std::optional<long> equal;
};

CevianConfig resolve_config(const ConfigSource& source);

/// CEVIAN_MAX_SEGMENTS if set to a positive integer, otherwise the default.
std::size_t max_segments_from_env();

struct CountOptions {
  ConfigSource source;
  bool oracle = false;
  bool json = false;
  bool force = false;
  bool affine_check = false;
};
int cmd_count(const CountOptions& options, std::ostream& out, std::ostream& err);

enum class OutputFormat { Table, Csv, Json, Lines };

struct TableOptions {
  long n_min = 2;
  long n_max = 12;
  OutputFormat format = OutputFormat::Table;
};
int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err);

struct ScanOptions {
  int family = 1;
  long p_max = 13;
  bool count_all = false;
  bool json = false;
};
int cmd_scan(const ScanOptions& options, std::ostream& out, std::ostream& err);

struct RenderOptions {
  ConfigSource source;
  std::string out_path;  // "-" for stdout
  std::string highlight = "none";  // none | all-triangles | triple
  std::string triple;              // "A1,B1,CA" when highlight == triple
  bool force = false;
};
int cmd_render(const RenderOptions& options, std::ostream& out, std::ostream& err);

struct SeqOptions {
  std::string name = "d-of-n";  // d-of-n | odd-positive
  long limit = 20;
  OutputFormat format = OutputFormat::Lines;
};
int cmd_seq(const SeqOptions& options, std::ostream& out, std::ostream& err);

struct FanOptions {
  long apex = 4;
  long parallel = 3;
  bool verify = false;
};
int cmd_fan(const FanOptions& options, std::ostream& out, std::ostream& err);

}  // namespace cevian::cli
