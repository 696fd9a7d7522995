#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "olss/access.hpp"
#include "olss/online.hpp"
#include "olss/scheme.hpp"

namespace olss {

/// Structure text format:
///
///     # optional comments
///     n 5
///     e 0 1
///     e 1 2
///
/// Edges are written in canonical order, so write(read(text)) reproduces any
/// canonically written file byte for byte. Throws Parse.
AccessStructure parse_structure(std::string_view text);
std::string format_structure(const AccessStructure& gamma);

/// Scheme dump:
///
///     p 7
///     b 3
///     secret 1
///     1 0 0 0
///     participant 0 2
///     ...
///
/// Every form is one line of b coefficients followed by its constant.
/// Throws Parse.
LinearScheme parse_scheme(std::string_view text);
std::string format_scheme(const LinearScheme& scheme);

/// Permutation line, then per step the arriving vertex, its backward edges
/// (over arrival indices) and the forms it received, padded to the final
/// dimension; closes with the final scheme dump.
std::string format_transcript(const Transcript& transcript);

/// Throws IO.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace olss
