#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

namespace bdiv {

/// Order-preserving JSON document; object keys keep their file order.
using Json = nlohmann::ordered_json;

/// Throws PARSE_ERROR with the parser's position on malformed input.
Json parse_json(const std::string& text);

/// Throws INVALID_ARGUMENT if the file cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace bdiv
