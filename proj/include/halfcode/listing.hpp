#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "halfcode/code.hpp"

namespace halfcode {

/// Text listing: per code a header line "# <index>" (1-based), then k rows of
/// space-separated digits, blank line between codes.
std::string format_listing(const std::vector<LinearCode>& codes);

/// Parses the text listing format; throws parse_error with the offending
/// 1-based line number on malformed input.
std::vector<LinearCode> parse_listing(const std::string& text, PrimeModulus p);

nlohmann::json matrix_to_json(const MatrixFp& m);
MatrixFp matrix_from_json(const nlohmann::json& j, PrimeModulus p);

/// Listing document: {"p", "k", "n", "f" (descending coefficients),
/// "xi" (coordinates), "codes" (array of k x n integer arrays)}.
nlohmann::json listing_to_json(const DecompositionCtx& ctx, const std::vector<LinearCode>& codes);

/// Reads back the "p" and "codes" fields of a listing document.
std::vector<LinearCode> listing_from_json(const nlohmann::json& doc);

} // namespace halfcode
