#pragma once

// GridFunction CSV: a header line "# dim,N,L" carrying the three values,
// followed by one sample per line (row-major for dim = 2), 17 significant digits.

#include "biharm/grid.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace biharm {

void write_grid_csv(std::ostream& os, const GridFunction& f);
/// Throws DomainError on a malformed header, a bad sample or a count mismatch.
GridFunction read_grid_csv(std::istream& is);

GridFunction load_grid_csv(const std::filesystem::path& path);

/// Shortest round-trip-safe decimal with at least 17 significant digits.
std::string format_real(double v);

/// Writes `content` to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace biharm
