#pragma once

#include <vector>

#include "lfsr/image.hpp"

namespace lfsr {

struct ViewIndex {
    int u = 0;
    int v = 0;
};

enum class EpiOrientation {
    horizontal, // fixes (v, y), varies (u, x)
    vertical,   // fixes (u, x), varies (v, y)
};

/// One epipolar plane image: rows run over the angular axis, columns over
/// the spatial axis.
struct EpiSlice {
    EpiOrientation orientation = EpiOrientation::horizontal;
    int fixed_angular = 0;
    int fixed_spatial = 0;
    Image data;
};

/// 4D grid of luminance sub-aperture views, samples in [0, 1].
/// Layout is [u][v][y][x], row-major.
class LightField {
public:
    LightField() = default;
    LightField(int angular_u, int angular_v, int height, int width, double fill = 0.0);

    int angular_u() const { return angular_u_; }
    int angular_v() const { return angular_v_; }
    int height() const { return height_; }
    int width() const { return width_; }

    double& at(int u, int v, int y, int x) { return samples_[flat(u, v, y, x)]; }
    double at(int u, int v, int y, int x) const { return samples_[flat(u, v, y, x)]; }

    const std::vector<double>& samples() const { return samples_; }
    std::vector<double>& samples() { return samples_; }

    Image view(int u, int v) const;
    void set_view(int u, int v, const Image& img);

    ViewIndex central() const { return {angular_u_ / 2, angular_v_ / 2}; }

    void check_view_index(int u, int v) const;

    /// Enforces the type invariants: finite samples within [0, 1].
    void validate() const;

    bool same_dims(const LightField& other) const {
        return angular_u_ == other.angular_u_ && angular_v_ == other.angular_v_ &&
               height_ == other.height_ && width_ == other.width_;
    }

private:
    std::size_t flat(int u, int v, int y, int x) const {
        return ((static_cast<std::size_t>(u) * angular_v_ + v) * height_ + y) * width_ + x;
    }

    int angular_u_ = 0;
    int angular_v_ = 0;
    int height_ = 0;
    int width_ = 0;
    std::vector<double> samples_;
};

/// 3-channel image stored interleaved, values in [0, 1].
struct RgbImage {
    int height = 0;
    int width = 0;
    std::vector<double> pixels; // [y][x][c]

    RgbImage(int h, int w) : height(h), width(w), pixels(static_cast<std::size_t>(h) * w * 3, 0.0) {}
    double& at(int y, int x, int c) { return pixels[(static_cast<std::size_t>(y) * width + x) * 3 + c]; }
    double at(int y, int x, int c) const { return pixels[(static_cast<std::size_t>(y) * width + x) * 3 + c]; }
};

/// BT.601 luma: Y = 0.299 R + 0.587 G + 0.114 B.
Image rgb_to_luminance(const RgbImage& rgb);

/// Keeps the top-left 7x7 angular block. Input must be at least 8x8.
LightField select_topleft_views(const LightField& lf);

EpiSlice extract_epi(const LightField& lf, EpiOrientation orientation, int fixed_angular,
                     int fixed_spatial);

/// Builds a light field whose view (u, v) is `texture` translated by
/// disparity * (u - uc, v - vc), cubic sub-pixel interpolation, clamp-to-edge
/// borders. The zero-shift view is at (uc, vc) = ((U-1)/2, (V-1)/2), which
/// for odd U, V is the central view; this choice makes the top-left 7x7
/// block of an 8x8 synthetic field identical to the directly generated 7x7
/// one.
LightField synth_lf(const Image& texture, double disparity, int angular_u, int angular_v);

} // namespace lfsr
