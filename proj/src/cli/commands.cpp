#include "cevian/cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "cevian/ceva_numbers.hpp"
#include "cevian/cli/config_file.hpp"
#include "cevian/cli/svg.hpp"
#include "cevian/counting.hpp"
#include "cevian/errors.hpp"

namespace cevian::cli {

namespace {

using nlohmann::ordered_json;

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const GuardRailError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

OracleOptions oracle_options(bool force) {
  OracleOptions opts;
  opts.force = force;
  opts.max_segments = max_segments_from_env();
  return opts;
}

struct PrimePower {
  std::uint64_t p;
  unsigned m;
};

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) return PrimePower{n, 1};
  unsigned m = 0;
  while (n % p == 0) {
    n /= p;
    ++m;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, m};
}

std::string witness_text(const std::optional<CevaSolution>& w) {
  if (!w) return "-";
  return "(" + std::to_string(w->i) + "," + std::to_string(w->j) + "," + std::to_string(w->k) + ")";
}

}  // namespace

std::size_t max_segments_from_env() {
  const char* raw = std::getenv("CEVIAN_MAX_SEGMENTS");
  if (!raw || !*raw) return kDefaultMaxSegments;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    throw ValidationError(std::string("CEVIAN_MAX_SEGMENTS must be a positive integer, got \"") +
                          raw + "\"");
  }
  return static_cast<std::size_t>(value);
}

CevianConfig resolve_config(const ConfigSource& source) {
  const bool inline_lists = source.feet_a || source.feet_b || source.feet_c;
  const int chosen = int(inline_lists) + int(source.file.has_value()) + int(source.equal.has_value());
  if (chosen != 1) {
    throw ValidationError("give exactly one config source: --a/--b/--c, --config FILE or --equal N");
  }
  if (source.equal) return CevianConfig::equal_division(*source.equal);
  if (source.file) return load_config_file(*source.file);

  auto list = [](const std::optional<std::string>& text, const char* name) {
    try {
      return text ? parse_fraction_list(*text) : std::vector<Rational>{};
    } catch (const ValidationError& e) {
      throw ValidationError(std::string("--") + name + ": " + e.what());
    }
  };
  return CevianConfig::create(list(source.feet_a, "a"), list(source.feet_b, "b"),
                              list(source.feet_c, "c"));
}

int cmd_count(const CountOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CevianConfig config = resolve_config(options.source);

    CountReport report;
    if (options.source.equal) {
      const auto d = count_concurrencies(*options.source.equal);
      report = theorem1_count(config.a(), config.b(), config.c(), BigInt(static_cast<unsigned long>(d)),
                              DProvenance::CevaEquation);
    } else {
      const auto d = concurrency_points(build_arrangement(config)).size();
      report = theorem1_count(config.a(), config.b(), config.c(), BigInt(static_cast<unsigned long>(d)),
                              DProvenance::Geometric);
    }

    std::optional<std::uint64_t> oracle_count;
    bool agrees = true;
    if (options.oracle) {
      const OracleResult found = enumerate_triangles(build_arrangement(config), oracle_options(options.force));
      oracle_count = found.triangle_count;
      agrees = BigInt(static_cast<unsigned long>(found.triangle_count)) == report.triangle_count &&
               BigInt(static_cast<unsigned long>(found.tally.interior)) == report.d;
    }
    std::optional<AffineCheck> affine;
    if (options.affine_check) {
      affine = check_affine_invariance(config, oracle_options(options.force));
      agrees = agrees && affine->holds();
    }

    if (options.json) {
      ordered_json j;
      j["a"] = report.a.get_str();
      j["b"] = report.b.get_str();
      j["c"] = report.c.get_str();
      j["d"] = report.d.get_str();
      j["d_provenance"] = to_string(report.d_provenance);
      j["triangle_count"] = report.triangle_count.get_str();
      if (oracle_count) {
        j["oracle_count"] = std::to_string(*oracle_count);
        j["oracle_agrees"] = agrees;
      }
      if (affine) j["affine_invariant"] = affine->holds();
      out << j.dump(2) << '\n';
    } else {
      out << "a = " << report.a << '\n'
          << "b = " << report.b << '\n'
          << "c = " << report.c << '\n'
          << "d = " << report.d << " (" << to_string(report.d_provenance) << ")\n"
          << "triangles = " << report.triangle_count << '\n';
      if (oracle_count) {
        out << "oracle = " << *oracle_count << (agrees ? " (agrees)" : " (MISMATCH)") << '\n';
      }
      if (affine) {
        out << "affine check: d " << affine->d_reference << "/" << affine->d_alternate
            << ", oracle " << affine->count_reference << "/" << affine->count_alternate
            << (affine->holds() ? " (invariant)" : " (MISMATCH)") << '\n';
      }
    }
    if (!agrees) {
      err << "internal error: closed-form count and brute-force enumeration disagree\n";
      return static_cast<int>(kExitInternal);
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (options.n_min < 2 || options.n_max < options.n_min) {
      throw ValidationError("need 2 <= n_min <= n_max");
    }
    const auto ds = d_sequence(options.n_min, options.n_max);

    struct Row {
      long n;
      std::uint64_t d;
      BigInt triangles;
      std::optional<PrimePower> pp;
      std::optional<BigInt> closed;
      bool match = false;
    };
    std::vector<Row> rows;
    bool all_match = true;
    for (long n = options.n_min; n <= options.n_max; ++n) {
      Row row{n, ds[static_cast<std::size_t>(n - options.n_min)], 0, std::nullopt, std::nullopt};
      const BigInt side = n - 1;
      row.triangles = theorem1_count(side, side, side, BigInt(static_cast<unsigned long>(row.d)),
                                     DProvenance::CevaEquation)
                          .triangle_count;
      row.pp = as_prime_power(static_cast<std::uint64_t>(n));
      if (row.pp) {
        row.closed = theorem2_count(row.pp->p, row.pp->m).triangle_count;
        row.match = *row.closed == row.triangles;
        all_match = all_match && row.match;
      }
      rows.push_back(std::move(row));
    }

    auto pp_text = [](const Row& r) {
      return r.pp ? std::to_string(r.pp->p) + "^" + std::to_string(r.pp->m) : std::string("-");
    };
    switch (options.format) {
      case OutputFormat::Json: {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
          ordered_json j;
          j["n"] = r.n;
          j["d"] = std::to_string(r.d);
          j["triangle_count"] = r.triangles.get_str();
          j["prime_power"] = r.pp ? ordered_json(pp_text(r)) : ordered_json(nullptr);
          j["closed_form"] = r.closed ? ordered_json(r.closed->get_str()) : ordered_json(nullptr);
          j["match"] = r.pp ? ordered_json(r.match) : ordered_json(nullptr);
          arr.push_back(std::move(j));
        }
        out << arr.dump(2) << '\n';
        break;
      }
      case OutputFormat::Csv:
        out << "n,d,triangles,prime_power,closed_form,match\n";
        for (const auto& r : rows) {
          out << r.n << ',' << r.d << ',' << r.triangles << ',' << pp_text(r) << ','
              << (r.closed ? r.closed->get_str() : "-") << ','
              << (r.pp ? (r.match ? "yes" : "no") : "-") << '\n';
        }
        break;
      default:
        out << std::setw(8) << "n" << std::setw(10) << "d" << std::setw(16) << "triangles"
            << std::setw(10) << "p^m" << std::setw(16) << "closed form" << std::setw(7) << "match"
            << '\n';
        for (const auto& r : rows) {
          out << std::setw(8) << r.n << std::setw(10) << r.d << std::setw(16) << r.triangles.get_str()
              << std::setw(10) << pp_text(r) << std::setw(16)
              << (r.closed ? r.closed->get_str() : "-") << std::setw(7)
              << (r.pp ? (r.match ? "yes" : "NO") : "-") << '\n';
        }
        break;
    }
    return static_cast<int>(all_match ? kExitOk : kExitInternal);
  });
}

int cmd_scan(const ScanOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (options.family != 1 && options.family != 2) throw ValidationError("--family must be 1 or 2");
    if (options.p_max < 2) throw ValidationError("--p-max must be >= 2");
    const auto records = scan_family(static_cast<Family>(options.family), options.p_max, options.count_all);

    if (options.json) {
      ordered_json arr = ordered_json::array();
      for (const auto& r : records) {
        ordered_json j;
        j["p"] = r.p;
        j["n"] = r.n;
        j["companion_prime"] = r.companion_prime;
        j["has_solution"] = r.has_solution;
        j["witness"] = r.witness ? ordered_json::array({r.witness->i, r.witness->j, r.witness->k})
                                 : ordered_json(nullptr);
        if (r.solution_count) j["solution_count"] = std::to_string(*r.solution_count);
        arr.push_back(std::move(j));
      }
      out << arr.dump(2) << '\n';
      return static_cast<int>(kExitOk);
    }

    out << "# family " << options.family << ": n = "
        << (options.family == 1 ? "p(2p-1), p and 2p-1 prime"
                                : "p^2(2p+1), p a Sophie Germain prime")
        << '\n';
    out << std::setw(8) << "p" << std::setw(12) << "n" << std::setw(11) << "companion"
        << std::setw(14) << "has_solution" << std::setw(22) << "witness";
    if (options.count_all) out << std::setw(12) << "solutions";
    out << '\n';
    for (const auto& r : records) {
      out << std::setw(8) << r.p << std::setw(12) << r.n << std::setw(11) << r.companion_prime
          << std::setw(14) << (r.has_solution ? "true" : "false") << std::setw(22)
          << witness_text(r.witness);
      if (r.solution_count) out << std::setw(12) << *r.solution_count;
      out << '\n';
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_render(const RenderOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Arrangement arr = build_arrangement(resolve_config(options.source));
    SvgOptions svg;
    svg.oracle = oracle_options(options.force);
    if (options.highlight == "none") {
      svg.highlight = Highlight::None;
    } else if (options.highlight == "all-triangles") {
      svg.highlight = Highlight::AllTriangles;
    } else if (options.highlight == "triple") {
      svg.highlight = Highlight::Triple;
      std::vector<std::string> refs;
      std::stringstream ss(options.triple);
      for (std::string item; std::getline(ss, item, ',');) refs.push_back(item);
      if (refs.size() != 3) throw ValidationError("--triple needs three segments, e.g. A1,B1,CA");
      for (std::size_t i = 0; i < 3; ++i) svg.triple[i] = parse_segment_ref(arr, refs[i]);
      if (svg.triple[0] == svg.triple[1] || svg.triple[0] == svg.triple[2] ||
          svg.triple[1] == svg.triple[2]) {
        throw ValidationError("--triple names the same segment twice");
      }
    } else {
      throw ValidationError("--highlight must be none, all-triangles or triple");
    }

    const SvgFigure fig = render_svg(arr, svg);
    if (options.out_path.empty() || options.out_path == "-") {
      out << fig.text;
      return static_cast<int>(kExitOk);
    }
    std::ofstream file(options.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + options.out_path + " for writing");
    file << fig.text;
    file.close();
    if (!file) throw IoError("failed writing " + options.out_path);
    out << "wrote " << options.out_path << ": " << arr.segments().size() << " segments, "
        << fig.concurrency_points << " concurrency points, " << fig.panels << " panel"
        << (fig.panels == 1 ? "" : "s") << '\n';
    return static_cast<int>(kExitOk);
  });
}

int cmd_seq(const SeqOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (options.limit < 2) throw ValidationError("--limit must be >= 2");
    std::vector<std::int64_t> values;
    std::int64_t offset = 2;
    if (options.name == "d-of-n") {
      for (auto v : d_sequence(2, options.limit)) values.push_back(static_cast<std::int64_t>(v));
    } else if (options.name == "odd-positive") {
      values = odd_positive_list(options.limit);
      offset = 1;
    } else {
      throw ValidationError("--name must be d-of-n or odd-positive");
    }

    if (options.format == OutputFormat::Json) {
      ordered_json j;
      j["name"] = options.name;
      j["offset"] = offset;
      j["limit"] = options.limit;
      j["values"] = values;
      out << j.dump(2) << '\n';
    } else {
      for (auto v : values) out << v << '\n';
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_fan(const FanOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const FanBreakdown f = fan_parallel_breakdown(options.apex, options.parallel);
    out << "lines = " << options.apex << " through apex + " << options.parallel << " parallel\n"
        << "triples = " << f.total_triples << '\n'
        << "apex-concurrent = " << f.apex_concurrent << '\n'
        << "all-parallel = " << f.all_parallel << '\n'
        << "two-parallel-plus-apex-line = " << f.two_parallel_apex << '\n'
        << "triangles = " << f.total_triples << " - " << f.apex_concurrent << " - "
        << f.all_parallel << " - " << f.two_parallel_apex << " = " << f.triangles << '\n';
    if (options.verify) {
      const FanTally t = enumerate_fan_triangles(options.apex, options.parallel);
      const bool ok = BigInt(static_cast<unsigned long>(t.triangles)) == f.triangles &&
                      BigInt(static_cast<unsigned long>(t.apex_concurrent)) == f.apex_concurrent &&
                      BigInt(static_cast<unsigned long>(t.all_parallel)) == f.all_parallel &&
                      BigInt(static_cast<unsigned long>(t.two_parallel_apex)) == f.two_parallel_apex;
      out << "brute force = " << t.triangles << (ok ? " (agrees)" : " (MISMATCH)") << '\n';
      if (!ok) return static_cast<int>(kExitInternal);
    }
    return static_cast<int>(kExitOk);
  });
}

}  // namespace cevian::cli
