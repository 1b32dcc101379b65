// cevian: count triangles in cevian arrangements and explore the
// concurrency equation ijk = (n-i)(n-j)(n-k).

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cevian/cli/commands.hpp"

namespace {

using namespace cevian::cli;

void add_config_source(CLI::App* cmd, ConfigSource& src) {
  cmd->add_option("--a", src.feet_a, "Feet of the A-cevians on BC, e.g. \"1/3,1/2\"");
  cmd->add_option("--b", src.feet_b, "Feet of the B-cevians on CA");
  cmd->add_option("--c", src.feet_c, "Feet of the C-cevians on AB");
  cmd->add_option("--config", src.file, "Config file with feet_a/feet_b/feet_c lines");
  cmd->add_option("--equal", src.equal, "Divide every side into N equal pieces");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact triangle counting in cevian arrangements"};
  app.require_subcommand(1);

  CountOptions count;
  auto* count_cmd = app.add_subcommand("count", "Count triangles for one arrangement");
  add_config_source(count_cmd, count.source);
  count_cmd->add_flag("--oracle", count.oracle, "Cross-check with the brute-force enumerator");
  count_cmd->add_flag("--json", count.json, "Emit a JSON report");
  count_cmd->add_flag("--force", count.force, "Ignore the oracle's segment limit");
  count_cmd->add_flag("--affine-check", count.affine_check,
                      "Rebuild on a second triangle and compare d and the oracle count");

  const std::map<std::string, OutputFormat> formats{{"table", OutputFormat::Table},
                                                    {"csv", OutputFormat::Csv},
                                                    {"json", OutputFormat::Json},
                                                    {"lines", OutputFormat::Lines}};

  TableOptions table;
  std::vector<long> range{2, 12};
  auto* table_cmd = app.add_subcommand("table", "d(n) and counts for equal-division arrangements");
  table_cmd->add_option("--equal-range", range, "n_min n_max")->expected(2)->required();
  table_cmd->add_option("--format", table.format, "table, csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  ScanOptions scan;
  auto* scan_cmd = app.add_subcommand("scan", "Scan a conjectured family for triple points");
  scan_cmd->add_option("--family", scan.family, "1: p(2p-1), 2: p^2(2p+1)")->required();
  scan_cmd->add_option("--p-max", scan.p_max, "Largest p to test")->required();
  scan_cmd->add_flag("--count-all", scan.count_all, "Count every solution, not just existence");
  scan_cmd->add_flag("--json", scan.json, "Emit JSON");

  RenderOptions render;
  auto* render_cmd = app.add_subcommand("render", "Draw an arrangement as SVG");
  add_config_source(render_cmd, render.source);
  render_cmd->add_option("--out", render.out_path, "Output file (\"-\" for stdout)")->required();
  render_cmd->add_option("--highlight", render.highlight, "none, all-triangles or triple");
  render_cmd->add_option("--triple", render.triple, "Three segments for --highlight triple, e.g. A1,B1,CA");
  render_cmd->add_flag("--force", render.force, "Ignore the oracle's segment limit");

  SeqOptions seq;
  auto* seq_cmd = app.add_subcommand("seq", "Emit a concurrency sequence");
  seq_cmd->add_option("--name", seq.name, "d-of-n or odd-positive")->required();
  seq_cmd->add_option("--limit", seq.limit, "Largest n")->required();
  seq_cmd->add_option("--format", seq.format, "lines or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  FanOptions fan;
  auto* fan_cmd = app.add_subcommand("fan", "Triangles formed by apex lines and base parallels");
  fan_cmd->add_option("--apex", fan.apex, "Lines through the apex, including the two sides")->required();
  fan_cmd->add_option("--parallel", fan.parallel, "Lines parallel to the base, including the base")
      ->required();
  fan_cmd->add_flag("--verify", fan.verify, "Cross-check with a geometric brute-force count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  if (*count_cmd) return cmd_count(count, std::cout, std::cerr);
  if (*table_cmd) {
    table.n_min = range[0];
    table.n_max = range[1];
    return cmd_table(table, std::cout, std::cerr);
  }
  if (*scan_cmd) return cmd_scan(scan, std::cout, std::cerr);
  if (*render_cmd) return cmd_render(render, std::cout, std::cerr);
  if (*seq_cmd) return cmd_seq(seq, std::cout, std::cerr);
  if (*fan_cmd) return cmd_fan(fan, std::cout, std::cerr);
  return kExitValidation;
}
