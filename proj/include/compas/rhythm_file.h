// Rhythm collection files.
//
// Grammar (UTF-8, one item per line):
//
//   file    := { blank | comment | header } { blank | comment | entry }
//   comment := '#' any*
//   header  := "format:" ( "binary" | "onset_list" | "grid" )
//            | "n:" positive-integer
//   entry   := name '=' pattern
//   name    := 1*( ALPHA / DIGIT / '_' / '-' / '.' / non-ASCII byte )
//
// Both headers must appear before the first entry. `format:` is required.
// `n:` is required for onset_list (1-based beats) and optional for binary and
// grid, where it must agree with every pattern's length. All patterns in a
// file share one cycle length. Names must be unique.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "compas/notation.h"

namespace compas {

struct RhythmFile {
  RhythmFormat format = RhythmFormat::binary;
  int beats = kDefaultBeats;
  std::vector<RhythmPattern> patterns;
};

/// Throws ParseError naming the offending line, or LengthMismatch when the
/// patterns of a binary/grid file disagree on cycle length.
RhythmFile parse_rhythm_file(std::istream& in);
RhythmFile parse_rhythm_file(std::string_view text);
RhythmFile read_rhythm_file(const std::string& path);

std::string serialize_rhythm_file(const RhythmFile& file);

bool is_valid_label(std::string_view name);

}  // namespace compas
