#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "sgdim/codes.hpp"
#include "sgdim/dimension.hpp"
#include "sgdim/game.hpp"
#include "sgdim/weighted.hpp"

namespace sgdim::io {

// All formats: '#' starts a comment line, blank lines are skipped, bit
// vectors use the textual form (position 1 first). Writers emit `header`
// as leading comment lines when it is non-empty.

/// One word per line.
Code read_code(std::istream& in);
void write_code(std::ostream& out, const Code& c, std::string_view header = {});

/// "n=<int>", then one minimal winning coalition per line.
SimpleGame read_game(std::istream& in);
void write_game(std::ostream& out, const SimpleGame& g, std::string_view header = {});

/// "n=<int>", then one game per line as "q; w_1 w_2 ... w_n".
IntersectionRep read_weighted(std::istream& in);
void write_weighted(std::ostream& out, const IntersectionRep& r, std::string_view header = {});

/// Sections LOWER, UPPER, EXACT, CERTIFICATES and WITNESSES; the witness
/// section is a weighted-representation file.
void write_report(std::ostream& out, const DimensionReport& report, std::string_view header = {});

struct ParsedReport {
  int lower = 0;
  int upper = 0;
  std::optional<int> exact;
  std::size_t certificates = 0;
  std::optional<IntersectionRep> witnesses;
};
ParsedReport read_report(std::istream& in);

Code read_code_file(const std::string& path);
SimpleGame read_game_file(const std::string& path);
IntersectionRep read_weighted_file(const std::string& path);

}  // namespace sgdim::io
