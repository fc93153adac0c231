#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "lfsr/errors.hpp"

namespace lfsr {

/// Dense single-channel image, row-major doubles.
struct Image {
    int height = 0;
    int width = 0;
    std::vector<double> pixels;

    Image() = default;
    Image(int h, int w, double fill = 0.0)
        : height(h), width(w), pixels(static_cast<std::size_t>(h) * static_cast<std::size_t>(w), fill) {
        if (h < 1 || w < 1) {
            throw DimensionError("Image dimensions must be positive");
        }
    }

    double& at(int y, int x) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    double at(int y, int x) const { return pixels[static_cast<std::size_t>(y) * width + x]; }

    std::size_t size() const { return pixels.size(); }

    bool same_shape(const Image& other) const {
        return height == other.height && width == other.width;
    }
};

inline bool all_finite(const std::vector<double>& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

inline double clamp01(double x) {
    if (x < 0.0) return 0.0;
    if (x > 1.0) return 1.0;
    return x;
}

} // namespace lfsr
