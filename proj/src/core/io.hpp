#pragma once

#include <string>

#include "complex.hpp"
#include "tiling.hpp"

namespace htile {

/// Complex text format: one construct per line, `#` comments,
/// whitespace-separated decimal vertex ids.
///   facet v1 v2 ... vk
///   removed v1 v2 ... vk
/// Files are written canonically (facet lines then removed lines, each group
/// sorted lexicographically), so write(read(write(x))) is byte-identical.
std::string complex_to_text(const RelativeComplex& s);
RelativeComplex complex_from_text(const std::string& text);
RelativeComplex read_complex(const std::string& path);
void write_complex(const RelativeComplex& s, const std::string& path);

/// Tiling file: a `target <complex-file>` header then one tile line per
/// shelling position:
///   tile <facet> ; opp <vertices|-> ; morse <vertices|-> ; critical <0|1>
std::string tiling_to_text(const Tiling& t, const std::string& target_ref);
Tiling tiling_from_text(const std::string& text, const std::string& base_dir);
Tiling read_tiling(const std::string& path);
void write_tiling(const Tiling& t, const std::string& path, const std::string& target_ref);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace htile
