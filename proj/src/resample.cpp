#include "lfsr/resample.hpp"

#include <algorithm>
#include <cmath>

namespace lfsr {

namespace {

inline int clamp_index(int i, int n) {
    return std::clamp(i, 0, n - 1);
}

} // namespace

double bicubic_sample(const Image& img, double sy, double sx) {
    const int iy = static_cast<int>(std::floor(sy));
    const int ix = static_cast<int>(std::floor(sx));
    const double dy = sy - iy;
    const double dx = sx - ix;

    double wy[4];
    double wx[4];
    for (int m = -1; m <= 2; ++m) {
        wy[m + 1] = cubic_weight(dy - m);
        wx[m + 1] = cubic_weight(dx - m);
    }

    double acc = 0.0;
    for (int m = -1; m <= 2; ++m) {
        const int y = clamp_index(iy + m, img.height);
        double row = 0.0;
        for (int n = -1; n <= 2; ++n) {
            const int x = clamp_index(ix + n, img.width);
            row += wx[n + 1] * img.at(y, x);
        }
        acc += wy[m + 1] * row;
    }
    return acc;
}

Image bicubic_resize_unclamped(const Image& img, int out_h, int out_w) {
    if (out_h < 1 || out_w < 1) {
        throw DimensionError("bicubic_resize: target dimensions must be positive");
    }
    Image out(out_h, out_w);
    const double sy_scale = static_cast<double>(img.height) / out_h;
    const double sx_scale = static_cast<double>(img.width) / out_w;
    for (int i = 0; i < out_h; ++i) {
        const double sy = (i + 0.5) * sy_scale - 0.5;
        for (int j = 0; j < out_w; ++j) {
            const double sx = (j + 0.5) * sx_scale - 0.5;
            out.at(i, j) = bicubic_sample(img, sy, sx);
        }
    }
    return out;
}

Image bicubic_resize(const Image& img, int out_h, int out_w) {
    Image out = bicubic_resize_unclamped(img, out_h, out_w);
    for (double& p : out.pixels) {
        p = clamp01(p);
    }
    return out;
}

Image gamma_correct(const Image& img, double gamma) {
    if (!(gamma > 0.0)) {
        throw ParameterError("gamma_correct: gamma must be positive");
    }
    Image out = img;
    for (double& p : out.pixels) {
        p = std::pow(p, gamma);
    }
    return out;
}

} // namespace lfsr
