#pragma once

// The full analysis of a germ as a JSON record.

#include <string>

#include <nlohmann/json.hpp>

#include "axial/jet.hpp"
#include "axial/tolerance.hpp"

namespace axial::io {

struct AnalyzeOptions {
    Tolerance tolerance{};
};

/// Hex SHA-256 of the canonical expression text of the germ.
std::string germ_hash(const MapGerm& f);

/// Corank, Monge coefficients and parabola class only.
nlohmann::ordered_json classify_report(const MapGerm& f, const AnalyzeOptions& opt = {});

/// Every invariant; fields that do not apply hold {"not_applicable": reason}.
/// Throws for corank != 1.
nlohmann::ordered_json analyze(const MapGerm& f, const AnalyzeOptions& opt = {});

/// Flattens a report into "path,value" CSV rows.
std::string report_to_csv(const nlohmann::ordered_json& report);

}  // namespace axial::io
