#pragma once

#include <optional>
#include <string>

#include "lgf/lattice.hpp"

namespace lgf {

// Text format: "lgf-cache v1 <family> <dim> <count>", then one decimal
// integer per line in index order.
std::string cache_to_text(const CoeffTable& t);
CoeffTable cache_from_text(const std::string& text);  // throws ParseError

std::string cache_path(const std::string& dir, const LatticeSpec& spec);  // <dir>/<family>-<dim>.txt

// Write to a temporary file in the same directory, then rename.
void write_cache(const std::string& path, const CoeffTable& t);
CoeffTable read_cache(const std::string& path);  // throws ParseError

// Table for indices 0..N from the cache directory, if it holds enough entries.
std::optional<CoeffTable> cache_lookup(const std::string& dir, const LatticeSpec& spec, int N);
// Stores t unless the cache already holds a longer table.
void cache_store(const std::string& dir, const CoeffTable& t);

}  // namespace lgf
