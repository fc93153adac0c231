#include "lfsr/light_field.hpp"

#include <cmath>
#include <string>

#include "lfsr/resample.hpp"

namespace lfsr {

LightField::LightField(int angular_u, int angular_v, int height, int width, double fill)
    : angular_u_(angular_u), angular_v_(angular_v), height_(height), width_(width) {
    if (angular_u < 1 || angular_v < 1 || height < 1 || width < 1) {
        throw DimensionError("LightField dimensions must be positive");
    }
    samples_.assign(static_cast<std::size_t>(angular_u) * angular_v * height * width, fill);
}

Image LightField::view(int u, int v) const {
    check_view_index(u, v);
    Image img(height_, width_);
    for (int y = 0; y < height_; ++y) {
        for (int x = 0; x < width_; ++x) {
            img.at(y, x) = at(u, v, y, x);
        }
    }
    return img;
}

void LightField::set_view(int u, int v, const Image& img) {
    check_view_index(u, v);
    if (img.height != height_ || img.width != width_) {
        throw DimensionError("set_view: image does not match the light field's spatial dims");
    }
    for (int y = 0; y < height_; ++y) {
        for (int x = 0; x < width_; ++x) {
            at(u, v, y, x) = img.at(y, x);
        }
    }
}

void LightField::check_view_index(int u, int v) const {
    if (u < 0 || u >= angular_u_ || v < 0 || v >= angular_v_) {
        throw IndexError("view index (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") out of range for " + std::to_string(angular_u_) + "x" +
                         std::to_string(angular_v_) + " light field");
    }
}

void LightField::validate() const {
    for (double s : samples_) {
        if (!std::isfinite(s)) {
            throw ValidationError("light field contains non-finite samples");
        }
        if (s < 0.0 || s > 1.0) {
            throw ValidationError("light field samples must lie in [0, 1]");
        }
    }
}

Image rgb_to_luminance(const RgbImage& rgb) {
    Image out(rgb.height, rgb.width);
    for (int y = 0; y < rgb.height; ++y) {
        for (int x = 0; x < rgb.width; ++x) {
            const double r = rgb.at(y, x, 0);
            const double g = rgb.at(y, x, 1);
            const double b = rgb.at(y, x, 2);
            if (!std::isfinite(r) || !std::isfinite(g) || !std::isfinite(b)) {
                throw ValidationError("rgb_to_luminance: non-finite input sample");
            }
            out.at(y, x) = clamp01(0.299 * r + 0.587 * g + 0.114 * b);
        }
    }
    return out;
}

LightField select_topleft_views(const LightField& lf) {
    constexpr int kept = 7;
    if (lf.angular_u() < 8 || lf.angular_v() < 8) {
        throw DimensionError("select_topleft_views: angular dims must be at least 8x8");
    }
    LightField out(kept, kept, lf.height(), lf.width());
    for (int u = 0; u < kept; ++u) {
        for (int v = 0; v < kept; ++v) {
            for (int y = 0; y < lf.height(); ++y) {
                for (int x = 0; x < lf.width(); ++x) {
                    out.at(u, v, y, x) = lf.at(u, v, y, x);
                }
            }
        }
    }
    return out;
}

EpiSlice extract_epi(const LightField& lf, EpiOrientation orientation, int fixed_angular,
                     int fixed_spatial) {
    EpiSlice slice;
    slice.orientation = orientation;
    slice.fixed_angular = fixed_angular;
    slice.fixed_spatial = fixed_spatial;
    if (orientation == EpiOrientation::horizontal) {
        // fixed_angular = v, fixed_spatial = y; rows over u, columns over x.
        if (fixed_angular < 0 || fixed_angular >= lf.angular_v() || fixed_spatial < 0 ||
            fixed_spatial >= lf.height()) {
            throw IndexError("extract_epi: (v, y) index out of range");
        }
        slice.data = Image(lf.angular_u(), lf.width());
        for (int u = 0; u < lf.angular_u(); ++u) {
            for (int x = 0; x < lf.width(); ++x) {
                slice.data.at(u, x) = lf.at(u, fixed_angular, fixed_spatial, x);
            }
        }
    } else {
        // fixed_angular = u, fixed_spatial = x; rows over v, columns over y.
        if (fixed_angular < 0 || fixed_angular >= lf.angular_u() || fixed_spatial < 0 ||
            fixed_spatial >= lf.width()) {
            throw IndexError("extract_epi: (u, x) index out of range");
        }
        slice.data = Image(lf.angular_v(), lf.height());
        for (int v = 0; v < lf.angular_v(); ++v) {
            for (int y = 0; y < lf.height(); ++y) {
                slice.data.at(v, y) = lf.at(fixed_angular, v, y, fixed_spatial);
            }
        }
    }
    return slice;
}

LightField synth_lf(const Image& texture, double disparity, int angular_u, int angular_v) {
    if (texture.height < 8 || texture.width < 8) {
        throw DimensionError("synth_lf: texture must be at least 8x8");
    }
    const double max_shift = std::abs(disparity) * (std::max(angular_u, angular_v) / 2.0);
    if (!(max_shift < std::min(texture.height, texture.width) / 4.0)) {
        throw DimensionError("synth_lf: disparity too large for the texture size");
    }
    const int uc = (angular_u - 1) / 2;
    const int vc = (angular_v - 1) / 2;
    LightField lf(angular_u, angular_v, texture.height, texture.width);
    for (int u = 0; u < angular_u; ++u) {
        const double sy_off = disparity * (u - uc);
        for (int v = 0; v < angular_v; ++v) {
            const double sx_off = disparity * (v - vc);
            if (sy_off == 0.0 && sx_off == 0.0) {
                lf.set_view(u, v, texture);
                continue;
            }
            for (int y = 0; y < texture.height; ++y) {
                for (int x = 0; x < texture.width; ++x) {
                    lf.at(u, v, y, x) = clamp01(bicubic_sample(texture, y + sy_off, x + sx_off));
                }
            }
        }
    }
    return lf;
}

} // namespace lfsr
