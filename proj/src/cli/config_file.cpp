#include "cevian/cli/config_file.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "cevian/errors.hpp"

namespace cevian::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

}  // namespace

std::vector<Rational> parse_fraction_list(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ValidationError("unterminated '[' in list: " + std::string(text));
    body = trim(body.substr(1, body.size() - 2));
  }
  std::vector<Rational> out;
  if (body.empty()) return out;

  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = body.find(',', pos);
    std::string_view item = trim(body.substr(pos, comma == std::string_view::npos ? body.npos
                                                                                  : comma - pos));
    if (item.size() >= 2 && item.front() == '"' && item.back() == '"') {
      item = trim(item.substr(1, item.size() - 2));
    }
    if (item.empty()) throw ValidationError("empty entry in list: " + std::string(text));
    out.push_back(Rational::parse(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

CevianConfig parse_config_text(std::string_view text) {
  std::array<std::optional<std::vector<Rational>>, 3> lists;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ValidationError(where + "expected key = list");

    const std::string key = lower(trim(line.substr(0, eq)));
    int slot = -1;
    if (key == "feet_a") slot = 0;
    if (key == "feet_b") slot = 1;
    if (key == "feet_c") slot = 2;
    if (slot < 0) throw ValidationError(where + "unknown key \"" + key + "\"");
    if (lists[static_cast<std::size_t>(slot)]) throw ValidationError(where + "repeated key " + key);
    try {
      lists[static_cast<std::size_t>(slot)] = parse_fraction_list(line.substr(eq + 1));
    } catch (const ValidationError& e) {
      throw ValidationError(where + e.what());
    }
  }
  return CevianConfig::create(lists[0].value_or(std::vector<Rational>{}),
                              lists[1].value_or(std::vector<Rational>{}),
                              lists[2].value_or(std::vector<Rational>{}));
}

CevianConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error reading config file " + path.string());
  return parse_config_text(buffer.str());
}

std::string format_config(const CevianConfig& config) {
  std::ostringstream out;
  constexpr const char* keys[3] = {"feet_a", "feet_b", "feet_c"};
  for (int v = 0; v < 3; ++v) {
    out << keys[v] << " = ";
    const auto& feet = config.feet(static_cast<Vertex>(v));
    for (std::size_t i = 0; i < feet.size(); ++i) out << (i ? ", " : "") << feet[i].to_string();
    out << '\n';
  }
  return out.str();
}

}  // namespace cevian::cli
