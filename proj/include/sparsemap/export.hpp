#pragma once

#include <string>

#include "sparsemap/lattice_map.hpp"

namespace sparsemap {

enum class ExportFormat { svg, obj, json };

ExportFormat parse_export_format(const std::string& name);

/// svg needs n = 2 and d <= 1; obj needs n = 3 and d <= 2; json takes anything.
/// Coordinates are written in lattice units, unscaled.
std::string export_map(const LatticeMap& map, ExportFormat format);

}  // namespace sparsemap
