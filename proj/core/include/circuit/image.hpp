#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "circuit/box.hpp"
#include "circuit/errors.hpp"

namespace circuit {

enum class ColorSpace { RGB8, HSV, LAB, GRAY };

int channels(ColorSpace space);
const char* to_string(ColorSpace space);
ColorSpace color_space_from_string(const std::string& name);

/// Immutable-after-construction raster. RGB8 stores 8-bit channels; HSV, LAB
/// and GRAY store floats (H in degrees [0,360), S/V and GRAY in [0,1], LAB in
/// CIE units: L [0,100], a/b roughly [-128,128]).
class Image {
public:
    Image() = default;

    static Image rgb8(int width, int height);
    static Image floating(ColorSpace space, int width, int height);

    int width() const { return width_; }
    int height() const { return height_; }
    ColorSpace color_space() const { return space_; }
    int channels() const { return circuit::channels(space_); }
    bool is_rgb8() const { return space_ == ColorSpace::RGB8; }
    std::int64_t pixel_count() const { return std::int64_t(width_) * height_; }

    std::uint8_t u8(int x, int y, int c) const { return u8_[idx(x, y, c)]; }
    std::uint8_t& u8(int x, int y, int c) { return u8_[idx(x, y, c)]; }
    float f32(int x, int y, int c) const { return f32_[idx(x, y, c)]; }
    float& f32(int x, int y, int c) { return f32_[idx(x, y, c)]; }

    /// Channel value regardless of storage; RGB8 yields raw 0..255.
    float value(int x, int y, int c) const {
        return is_rgb8() ? static_cast<float>(u8_[idx(x, y, c)]) : f32_[idx(x, y, c)];
    }

    std::span<const std::uint8_t> u8_data() const { return u8_; }
    std::span<std::uint8_t> u8_data() { return u8_; }
    std::span<const float> f32_data() const { return f32_; }
    std::span<float> f32_data() { return f32_; }

    bool in_bounds(const BBox& box) const {
        return box.x >= 0 && box.y >= 0 && box.w >= 1 && box.h >= 1 &&
               box.right() <= width_ && box.bottom() <= height_;
    }

private:
    std::size_t idx(int x, int y, int c) const {
        return (std::size_t(y) * width_ + x) * channels() + c;
    }

    int width_ = 0;
    int height_ = 0;
    ColorSpace space_ = ColorSpace::RGB8;
    std::vector<std::uint8_t> u8_;
    std::vector<float> f32_;
};

// ---- color conversion ----

/// RGB8 -> target. HSV per the hexcone model, LAB via sRGB/D65, GRAY via
/// luma (0.299 R + 0.587 G + 0.114 B) / 255. Converting to RGB8 is a copy.
Image convert(const Image& img, ColorSpace target);

/// Inverse of convert(img, HSV), with channel rounding to 8 bits.
Image hsv_to_rgb8(const Image& img);

void rgb_to_hsv(std::uint8_t r, std::uint8_t g, std::uint8_t b,
                float& h, float& s, float& v);
void hsv_to_rgb(float h, float s, float v,
                std::uint8_t& r, std::uint8_t& g, std::uint8_t& b);
void rgb_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b,
                float& l, float& a, float& bb);

// ---- geometry ----

/// Bilinear resample to an exact size (aspect ratio not preserved).
Image resize(const Image& img, int out_width, int out_height);

struct ResizeResult {
    Image image;
    double scale = 1.0;  // original long side / target long side
};

/// Scale so the longer side equals target_long; the shorter side is rounded
/// to nearest (minimum 1). scale maps thumbnail coordinates back to the
/// original image.
ResizeResult resize_long_side(const Image& img, int target_long);

/// Copy of the sub-image under box, which must lie within img.
Image crop(const Image& img, const BBox& box);

// ---- integral image ----

/// (width+1) x (height+1) cumulative-sum table over a GRAY image.
class IntegralImage {
public:
    explicit IntegralImage(const Image& gray);

    int width() const { return width_; }
    int height() const { return height_; }

    /// Sum over the half-open pixel rectangle [x0,x1) x [y0,y1).
    double rect_sum(int x0, int y0, int x1, int y1) const {
        const std::size_t stride = width_ + 1;
        return table_[std::size_t(y1) * stride + x1] - table_[std::size_t(y0) * stride + x1] -
               table_[std::size_t(y1) * stride + x0] + table_[std::size_t(y0) * stride + x0];
    }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<double> table_;
};

IntegralImage integral(const Image& gray);

// ---- file I/O ----

/// Decode PNG, JPEG or binary PPM (P6), sniffed from the file contents.
Image load_image(const std::filesystem::path& path);

void save_ppm(const Image& rgb, const std::filesystem::path& path);
void save_png(const Image& rgb, const std::filesystem::path& path);

Image decode_ppm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_ppm(const Image& rgb);

} // namespace circuit
