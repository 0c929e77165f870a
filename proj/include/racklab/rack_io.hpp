// rack_io.hpp
//
// ".rack" text format:
//   line 1:        n
//   lines 2..n+1:  n space-separated integers in 0..n-1; row x lists
//                  x|>0 ... x|>(n-1)
// Trailing blank lines are allowed. Anything else is a ParseError carrying
// the 1-based line and column of the offending token.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "racklab/rack.hpp"

namespace racklab {

/// Shape and range are checked here; axioms are not.
Table parse_table(std::istream& in);
Table parse_table(const std::string& text);
Table read_table_file(const std::filesystem::path& path);

std::string format_table(const Table& table);
void write_table_file(const std::filesystem::path& path, const Table& table);

}  // namespace racklab
