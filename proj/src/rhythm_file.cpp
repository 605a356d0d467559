#include "compas/rhythm_file.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "compas/errors.h"
#include "text_util.h"

namespace compas {

bool is_valid_label(std::string_view name) {
  if (name.empty()) return false;
  for (unsigned char c : name) {
    bool ok = std::isalnum(c) || c == '_' || c == '-' || c == '.' || c >= 0x80;
    if (!ok) return false;
  }
  return true;
}

RhythmFile parse_rhythm_file(std::istream& in) {
  std::optional<RhythmFormat> format;
  std::optional<int> beats;
  RhythmFile file;
  std::set<std::string> names;
  std::string line;
  int line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;

    auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      auto colon = body.find(':');
      if (colon == std::string_view::npos) throw ParseError("expected 'name = pattern'", line_no);
      if (!file.patterns.empty()) throw ParseError("header after first entry", line_no);
      std::string key = detail::lower(detail::trim(body.substr(0, colon)));
      std::string_view value = detail::trim(body.substr(colon + 1));
      if (key == "format") {
        try {
          format = parse_format_name(value);
        } catch (const ParseError& e) {
          throw ParseError(e.what(), line_no);
        }
      } else if (key == "n") {
        int n = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
        if (ec != std::errc() || ptr != value.data() + value.size() || n < 1) {
          throw ParseError("n must be a positive integer", line_no);
        }
        beats = n;
      } else {
        throw ParseError("unknown header '" + key + "'", line_no);
      }
      continue;
    }

    if (!format) throw ParseError("missing 'format:' header before first entry", line_no);
    if (*format == RhythmFormat::onset_list && !beats) {
      throw ParseError("onset_list files need an 'n:' header", line_no);
    }
    std::string name(detail::trim(body.substr(0, eq)));
    if (!is_valid_label(name)) throw ParseError("invalid pattern name '" + name + "'", line_no);
    if (!names.insert(name).second) throw ParseError("duplicate name '" + name + "'", line_no);

    RhythmPattern pattern = [&] {
      try {
        return parse_rhythm(body.substr(eq + 1), *format, beats.value_or(kDefaultBeats), name);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
    }();

    if (beats && pattern.beats() != *beats) {
      throw LengthMismatch("line " + std::to_string(line_no) + ": pattern '" + name + "' has " +
                           std::to_string(pattern.beats()) + " beats, expected " +
                           std::to_string(*beats));
    }
    if (!beats) {
      beats = pattern.beats();
    }
    file.patterns.push_back(std::move(pattern));
  }

  if (file.patterns.empty()) throw ParseError("no patterns in rhythm file");
  file.format = *format;
  file.beats = *beats;
  return file;
}

RhythmFile parse_rhythm_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_rhythm_file(in);
}

RhythmFile read_rhythm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_rhythm_file(in);
}

std::string serialize_rhythm_file(const RhythmFile& file) {
  std::string out = "format: " + std::string(format_name(file.format)) + "\n";
  out += "n: " + std::to_string(file.beats) + "\n";
  for (const auto& p : file.patterns) {
    out += p.name() + " = " + serialize_rhythm(p, file.format) + "\n";
  }
  return out;
}

}  // namespace compas
