#pragma once

// Germ descriptions: expression text "x; y; z" in u and v, or a JSON document
// {"components": [[{"i":..,"j":..,"c":..}, ...] x3], "order": N}.

#include <optional>
#include <string>
#include <string_view>

#include "axial/jet.hpp"

namespace axial::io {

/// Three ';'-separated polynomials in u, v. Terms: [coefficient] [monomial] [/q], where a
/// coefficient is a decimal (optionally with exponent) or p/q, a monomial is a product of
/// u^k and v^k factors, and factors may be separated by '*' or whitespace.
MapGerm parse_expression(std::string_view text, int order = kDefaultOrder);

/// The structured document. Coefficients are numbers or "p/q" strings.
MapGerm parse_document(std::string_view json_text, std::optional<int> order_override = std::nullopt);

/// Dispatches on the first non-blank character: '{' means a document.
MapGerm parse_germ(std::string_view src, std::optional<int> order_override = std::nullopt);

/// Expression text that parses back to the identical germ (17 significant digits).
std::string serialize_expression(const MapGerm& f);

std::string serialize_document(const MapGerm& f);

}  // namespace axial::io
