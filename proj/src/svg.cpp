// svg.cpp

#include "goldbach/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "goldbach/residue.hpp"

namespace goldbach {

std::vector<std::string> palette_by_id(const std::string& id) {
    if (id == "mono") return {};
    if (id == "m6") return stratum_palette(2);
    if (id == "m30") return stratum_palette(4);
    if (id == "m210") return stratum_palette(8);
    if (id == "m2310") return stratum_palette(14);
    throw std::invalid_argument("render: unknown palette id '" + id + "'");
}

namespace {

std::string fmt2(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string render_svg(const std::vector<PlotLayer>& layers, const PlotSpec& spec) {
    if (spec.width < 100 || spec.height < 100)
        throw std::invalid_argument("render: canvas must be at least 100x100");
    auto palette = palette_by_id(spec.palette_id);

    double n_lo = spec.n_lo, n_hi = spec.n_hi;
    double y_max = 0.0;
    bool any = false;
    for (const auto& layer : layers)
        for (const auto& p : layer.points) {
            if (spec.n_lo == 0 && spec.n_hi == 0) {
                n_lo = any ? std::min(n_lo, p.n) : p.n;
                n_hi = any ? std::max(n_hi, p.n) : p.n;
            }
            y_max = std::max(y_max, p.y);
            any = true;
        }
    if (!any) { n_lo = 0; n_hi = 1; }
    if (n_hi <= n_lo) n_hi = n_lo + 1;
    if (y_max <= 0) y_max = 1;

    const double pad = 48.0;
    const double W = spec.width, H = spec.height;
    auto sx = [&](double n) { return pad + (n - n_lo) / (n_hi - n_lo) * (W - 2 * pad); };
    auto sy = [&](double v) { return H - pad - v / y_max * (H - 2 * pad); };

    std::string out;
    out.reserve(1024 + 64 * [&] {
        size_t c = 0;
        for (const auto& l : layers) c += l.points.size();
        return c;
    }());
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(spec.width) +
           "\" height=\"" + std::to_string(spec.height) + "\" viewBox=\"0 0 " +
           std::to_string(spec.width) + " " + std::to_string(spec.height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    out += "<line x1=\"" + fmt2(pad) + "\" y1=\"" + fmt2(H - pad) + "\" x2=\"" + fmt2(W - pad) +
           "\" y2=\"" + fmt2(H - pad) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out += "<line x1=\"" + fmt2(pad) + "\" y1=\"" + fmt2(pad) + "\" x2=\"" + fmt2(pad) +
           "\" y2=\"" + fmt2(H - pad) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + fmt2(pad) + "\" y=\"" + fmt2(H - pad + 16) +
           "\" font-size=\"12\" fill=\"black\">" + fmt2(n_lo) + "</text>\n";
    out += "<text x=\"" + fmt2(W - pad) + "\" y=\"" + fmt2(H - pad + 16) +
           "\" font-size=\"12\" fill=\"black\" text-anchor=\"end\">" + fmt2(n_hi) + "</text>\n";
    out += "<text x=\"" + fmt2(pad - 4) + "\" y=\"" + fmt2(pad) +
           "\" font-size=\"12\" fill=\"black\" text-anchor=\"end\">" + fmt2(y_max) + "</text>\n";

    // back-to-front so the first layer lands on top
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
        for (const auto& p : it->points) {
            const std::string* color = &it->fallback_color;
            if (p.stratum && !palette.empty()) {
                if (*p.stratum >= palette.size())
                    throw std::out_of_range("render: palette '" + spec.palette_id +
                                            "' has no entry for stratum " +
                                            std::to_string(*p.stratum));
                color = &palette[*p.stratum];
            }
            out += "<circle cx=\"" + fmt2(sx(p.n)) + "\" cy=\"" + fmt2(sy(p.y)) + "\" r=\"" +
                   fmt2(spec.point_size) + "\" fill=\"" + *color + "\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

} // namespace goldbach
