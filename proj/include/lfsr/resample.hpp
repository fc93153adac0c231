#pragma once

#include "lfsr/image.hpp"
#include "lfsr/light_field.hpp"
#include "lfsr/rng.hpp"

namespace lfsr {

// Keys cubic kernel with a = -0.5 (Catmull-Rom). Support is (-2, 2).
inline double cubic_weight(double t) {
    constexpr double a = -0.5;
    const double x = t < 0.0 ? -t : t;
    if (x <= 1.0) {
        return ((a + 2.0) * x - (a + 3.0)) * x * x + 1.0;
    }
    if (x < 2.0) {
        return ((a * x - 5.0 * a) * x + 8.0 * a) * x - 4.0 * a;
    }
    return 0.0;
}

/// Cubic interpolation of `img` at real coordinates (sy, sx), clamp-to-edge
/// borders, no range clamping of the value.
double bicubic_sample(const Image& img, double sy, double sx);

/// Resize with the center-aligned mapping src = (i + 0.5) * in/out - 0.5.
/// Values can overshoot [0, 1]; the clamped variant below is what the
/// pipeline uses.
Image bicubic_resize_unclamped(const Image& img, int out_h, int out_w);

/// bicubic_resize_unclamped followed by a clamp to [0, 1].
Image bicubic_resize(const Image& img, int out_h, int out_w);

/// Element-wise power. gamma must be positive.
Image gamma_correct(const Image& img, double gamma);

} // namespace lfsr
