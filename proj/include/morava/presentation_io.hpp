#pragma once

#include <filesystem>
#include <string>

#include "morava/rings.hpp"

namespace morava {

/// Reads a presentation file.
///
/// The file is a JSON object with integer fields "prime", "height", "precision",
/// "truncation", polynomial fields "f", "tr1" and (for truncation > 1) "p_of_a",
/// and an optional "fixtures" list. A polynomial is a list of
/// [z_exponent, [c_0, c_1, ...]] pairs where c_i is the coefficient of a^i; each
/// fixture is {"power": k, "expect": polynomial} recording z^k modulo f.
/// Throws std::runtime_error on unreadable or malformed input.
PresentationData load_presentation_file(const std::filesystem::path& path);
PresentationData parse_presentation(const std::string& text);

/// Finds a presentation by path, else by name under $MORAVA_DATA_DIR or the
/// data directory the library was built with. Throws std::runtime_error if absent.
std::filesystem::path resolve_presentation_path(const std::string& name);

std::string format_terms(const std::vector<PresentationTerm>& terms);

}  // namespace morava
