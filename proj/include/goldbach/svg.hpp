// svg.hpp
// Deterministic SVG 1.1 scatter rendering: one circle per point, colors
// from a stratum palette or a per-layer fallback, linear axes, bytewise
// reproducible output for a fixed input and spec.

#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace goldbach {

struct PlotPoint {
    double n = 0;
    double y = 0;
    std::optional<uint32_t> stratum;
};

struct PlotLayer {
    std::vector<PlotPoint> points;
    std::string fallback_color = "black";   // when no stratum/palette applies
};

struct PlotSpec {
    double n_lo = 0, n_hi = 0;              // both 0: take range from the data
    int width = 1200;
    int height = 800;
    double point_size = 1.0;
    std::string palette_id = "mono";        // mono | m6 | m30 | m210 | m2310
};

// Colors for a palette id, indexed by stratum rank; empty for mono.
// Throws on an unknown id.
std::vector<std::string> palette_by_id(const std::string& id);

// Layers are drawn back-to-front (the first layer ends up on top). A point
// whose stratum has no palette entry raises an error naming the missing key.
std::string render_svg(const std::vector<PlotLayer>& layers, const PlotSpec& spec);

} // namespace goldbach
