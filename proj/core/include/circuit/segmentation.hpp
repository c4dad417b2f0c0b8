#pragma once

#include <vector>

#include "circuit/image.hpp"

namespace circuit {

/// Dense per-pixel region labels. Ids are contiguous in [0, num_regions),
/// assigned in row-major order of first occurrence, and every region is a
/// single 4-connected component.
struct LabelMap {
    int width = 0;
    int height = 0;
    std::vector<int> labels;  // row-major, one id per pixel
    int num_regions = 0;

    int at(int x, int y) const { return labels[std::size_t(y) * width + x]; }
};

struct SegmentationParams {
    float sigma = 0.8f;  // Gaussian pre-smoothing std-dev, pixels
    float k = 200.0f;    // scale constant of the merge predicate
    int min_size = 50;   // minimum region area, pixels

    void validate() const;
};

/// Graph-based over-segmentation (Felzenszwalb-Huttenlocher). The pixel graph
/// is 8-connected; edge weight is the Euclidean distance between smoothed
/// channel values in the image's own color space (RGB8 on the raw 0..255
/// scale). Components with fewer than min_size pixels are merged into a
/// neighbor, and the result is deterministic for identical inputs.
LabelMap segment(const Image& img, const SegmentationParams& params);

} // namespace circuit
