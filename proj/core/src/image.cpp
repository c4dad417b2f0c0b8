#include "circuit/image.hpp"

#include <cmath>
#include <stdexcept>

namespace circuit {

int channels(ColorSpace space) {
    return space == ColorSpace::GRAY ? 1 : 3;
}

const char* to_string(ColorSpace space) {
    switch (space) {
        case ColorSpace::RGB8: return "rgb";
        case ColorSpace::HSV: return "hsv";
        case ColorSpace::LAB: return "lab";
        case ColorSpace::GRAY: return "gray";
    }
    return "?";
}

ColorSpace color_space_from_string(const std::string& name) {
    if (name == "rgb" || name == "RGB") return ColorSpace::RGB8;
    if (name == "hsv" || name == "HSV") return ColorSpace::HSV;
    if (name == "lab" || name == "LAB") return ColorSpace::LAB;
    if (name == "gray" || name == "GRAY" || name == "grey") return ColorSpace::GRAY;
    throw ConfigError("unknown color space: " + name);
}

Image Image::rgb8(int width, int height) {
    if (width < 1 || height < 1) throw std::invalid_argument("image dimensions must be >= 1");
    Image img;
    img.width_ = width;
    img.height_ = height;
    img.space_ = ColorSpace::RGB8;
    img.u8_.assign(std::size_t(width) * height * 3, 0);
    return img;
}

Image Image::floating(ColorSpace space, int width, int height) {
    if (space == ColorSpace::RGB8) throw std::invalid_argument("RGB8 is byte-backed");
    if (width < 1 || height < 1) throw std::invalid_argument("image dimensions must be >= 1");
    Image img;
    img.width_ = width;
    img.height_ = height;
    img.space_ = space;
    img.f32_.assign(std::size_t(width) * height * channels(space), 0.0f);
    return img;
}

// ---- color conversion ----

void rgb_to_hsv(std::uint8_t r8, std::uint8_t g8, std::uint8_t b8,
                float& h, float& s, float& v) {
    const float r = r8 / 255.0f, g = g8 / 255.0f, b = b8 / 255.0f;
    const float mx = std::max({r, g, b});
    const float mn = std::min({r, g, b});
    const float d = mx - mn;
    v = mx;
    s = mx > 0.0f ? d / mx : 0.0f;
    if (d <= 0.0f) {
        h = 0.0f;  // achromatic: hue 0 by convention
        return;
    }
    if (mx == r) {
        h = 60.0f * ((g - b) / d);
    } else if (mx == g) {
        h = 60.0f * ((b - r) / d + 2.0f);
    } else {
        h = 60.0f * ((r - g) / d + 4.0f);
    }
    if (h < 0.0f) h += 360.0f;
    if (h >= 360.0f) h -= 360.0f;
}

void hsv_to_rgb(float h, float s, float v,
                std::uint8_t& r8, std::uint8_t& g8, std::uint8_t& b8) {
    float r, g, b;
    if (s <= 0.0f) {
        r = g = b = v;
    } else {
        float hh = h / 60.0f;
        if (hh >= 6.0f) hh -= 6.0f;
        if (hh < 0.0f) hh += 6.0f;
        const int sector = static_cast<int>(hh);
        const float f = hh - sector;
        const float p = v * (1.0f - s);
        const float q = v * (1.0f - s * f);
        const float t = v * (1.0f - s * (1.0f - f));
        switch (sector) {
            case 0: r = v; g = t; b = p; break;
            case 1: r = q; g = v; b = p; break;
            case 2: r = p; g = v; b = t; break;
            case 3: r = p; g = q; b = v; break;
            case 4: r = t; g = p; b = v; break;
            default: r = v; g = p; b = q; break;
        }
    }
    auto to8 = [](float x) {
        const float y = std::round(x * 255.0f);
        return static_cast<std::uint8_t>(y < 0.0f ? 0.0f : (y > 255.0f ? 255.0f : y));
    };
    r8 = to8(r);
    g8 = to8(g);
    b8 = to8(b);
}

namespace {

inline double srgb_to_linear(double c) {
    return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}

// CIE f(t) with the standard epsilon/kappa constants.
inline double lab_f(double t) {
    constexpr double eps = 216.0 / 24389.0;
    constexpr double kappa = 24389.0 / 27.0;
    return t > eps ? std::cbrt(t) : (kappa * t + 16.0) / 116.0;
}

} // namespace

void rgb_to_lab(std::uint8_t r8, std::uint8_t g8, std::uint8_t b8,
                float& l, float& a, float& bb) {
    const double r = srgb_to_linear(r8 / 255.0);
    const double g = srgb_to_linear(g8 / 255.0);
    const double b = srgb_to_linear(b8 / 255.0);
    // sRGB -> XYZ, D65 white.
    const double x = 0.4124564 * r + 0.3575761 * g + 0.1804375 * b;
    const double y = 0.2126729 * r + 0.7151522 * g + 0.0721750 * b;
    const double z = 0.0193339 * r + 0.1191920 * g + 0.9503041 * b;
    constexpr double xn = 0.95047, yn = 1.0, zn = 1.08883;
    const double fx = lab_f(x / xn), fy = lab_f(y / yn), fz = lab_f(z / zn);
    l = static_cast<float>(116.0 * fy - 16.0);
    a = static_cast<float>(500.0 * (fx - fy));
    bb = static_cast<float>(200.0 * (fy - fz));
}

Image convert(const Image& img, ColorSpace target) {
    if (!img.is_rgb8()) throw std::invalid_argument("convert expects an RGB8 source");
    if (target == ColorSpace::RGB8) return img;

    Image out = Image::floating(target, img.width(), img.height());
    const auto src = img.u8_data();
    auto dst = out.f32_data();
    const std::size_t n = img.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t r = src[i * 3], g = src[i * 3 + 1], b = src[i * 3 + 2];
        switch (target) {
            case ColorSpace::HSV: {
                float h, s, v;
                rgb_to_hsv(r, g, b, h, s, v);
                dst[i * 3] = h;
                dst[i * 3 + 1] = s;
                dst[i * 3 + 2] = v;
                break;
            }
            case ColorSpace::LAB: {
                float l, a, bb;
                rgb_to_lab(r, g, b, l, a, bb);
                dst[i * 3] = l;
                dst[i * 3 + 1] = a;
                dst[i * 3 + 2] = bb;
                break;
            }
            case ColorSpace::GRAY:
                dst[i] = (0.299f * r + 0.587f * g + 0.114f * b) / 255.0f;
                break;
            case ColorSpace::RGB8:
                break;
        }
    }
    return out;
}

Image hsv_to_rgb8(const Image& img) {
    if (img.color_space() != ColorSpace::HSV) throw std::invalid_argument("expected an HSV image");
    Image out = Image::rgb8(img.width(), img.height());
    const auto src = img.f32_data();
    auto dst = out.u8_data();
    const std::size_t n = img.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        hsv_to_rgb(src[i * 3], src[i * 3 + 1], src[i * 3 + 2],
                   dst[i * 3], dst[i * 3 + 1], dst[i * 3 + 2]);
    }
    return out;
}

// ---- geometry ----

Image resize(const Image& img, int out_width, int out_height) {
    if (out_width < 1 || out_height < 1) throw std::invalid_argument("resize target must be >= 1");
    if (out_width == img.width() && out_height == img.height()) return img;

    const int ch = img.channels();
    Image out = img.is_rgb8() ? Image::rgb8(out_width, out_height)
                              : Image::floating(img.color_space(), out_width, out_height);

    const double sx = static_cast<double>(img.width()) / out_width;
    const double sy = static_cast<double>(img.height()) / out_height;

    for (int oy = 0; oy < out_height; ++oy) {
        double fy = (oy + 0.5) * sy - 0.5;
        if (fy < 0.0) fy = 0.0;
        int y0 = static_cast<int>(fy);
        if (y0 > img.height() - 1) y0 = img.height() - 1;
        const int y1 = std::min(y0 + 1, img.height() - 1);
        const double wy = fy - y0;
        for (int ox = 0; ox < out_width; ++ox) {
            double fx = (ox + 0.5) * sx - 0.5;
            if (fx < 0.0) fx = 0.0;
            int x0 = static_cast<int>(fx);
            if (x0 > img.width() - 1) x0 = img.width() - 1;
            const int x1 = std::min(x0 + 1, img.width() - 1);
            const double wx = fx - x0;
            for (int c = 0; c < ch; ++c) {
                const double v00 = img.value(x0, y0, c), v10 = img.value(x1, y0, c);
                const double v01 = img.value(x0, y1, c), v11 = img.value(x1, y1, c);
                const double top = v00 + (v10 - v00) * wx;
                const double bot = v01 + (v11 - v01) * wx;
                const double v = top + (bot - top) * wy;
                if (img.is_rgb8()) {
                    const double r = std::round(v);
                    out.u8(ox, oy, c) = static_cast<std::uint8_t>(r < 0 ? 0 : (r > 255 ? 255 : r));
                } else {
                    out.f32(ox, oy, c) = static_cast<float>(v);
                }
            }
        }
    }
    return out;
}

ResizeResult resize_long_side(const Image& img, int target_long) {
    if (target_long < 1) throw std::invalid_argument("target_long must be >= 1");
    const int long_side = std::max(img.width(), img.height());
    const int short_side = std::min(img.width(), img.height());
    const double scale = static_cast<double>(long_side) / target_long;
    int target_short = static_cast<int>(std::lround(static_cast<double>(short_side) * target_long / long_side));
    if (target_short < 1) target_short = 1;
    const bool wide = img.width() >= img.height();
    Image resized = resize(img, wide ? target_long : target_short, wide ? target_short : target_long);
    return {std::move(resized), scale};
}

Image crop(const Image& img, const BBox& box) {
    if (!img.in_bounds(box)) throw std::invalid_argument("crop box outside image");
    const int ch = img.channels();
    Image out = img.is_rgb8() ? Image::rgb8(box.w, box.h)
                              : Image::floating(img.color_space(), box.w, box.h);
    for (int y = 0; y < box.h; ++y) {
        for (int x = 0; x < box.w; ++x) {
            for (int c = 0; c < ch; ++c) {
                if (img.is_rgb8()) {
                    out.u8(x, y, c) = img.u8(box.x + x, box.y + y, c);
                } else {
                    out.f32(x, y, c) = img.f32(box.x + x, box.y + y, c);
                }
            }
        }
    }
    return out;
}

// ---- integral image ----

IntegralImage::IntegralImage(const Image& gray) {
    if (gray.color_space() != ColorSpace::GRAY) throw std::invalid_argument("integral expects a GRAY image");
    width_ = gray.width();
    height_ = gray.height();
    const std::size_t stride = width_ + 1;
    table_.assign(stride * (height_ + 1), 0.0);
    for (int y = 0; y < height_; ++y) {
        double row = 0.0;
        for (int x = 0; x < width_; ++x) {
            row += gray.f32(x, y, 0);
            table_[(y + 1) * stride + (x + 1)] = table_[y * stride + (x + 1)] + row;
        }
    }
}

IntegralImage integral(const Image& gray) {
    return IntegralImage(gray);
}

} // namespace circuit
