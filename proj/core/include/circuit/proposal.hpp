#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "circuit/box.hpp"
#include "circuit/image.hpp"
#include "circuit/segmentation.hpp"

namespace circuit {

inline constexpr int kHistBinsPerChannel = 25;
inline constexpr int kHistSize = 3 * kHistBinsPerChannel;

/// A connected segment with the features the similarity measures consume.
struct Region {
    int id = 0;
    std::int64_t size = 0;                     // pixel count
    BBox bbox;                                 // tight bounding box
    std::array<float, kHistSize> hist{};       // 3 x 25 bins, jointly L1-normalized
    std::vector<int> neighbors;                // sorted, symmetric
};

struct SimilarityConfig {
    bool use_colour = true;
    bool use_size = true;
    bool use_fill = true;
    ColorSpace color_space = ColorSpace::RGB8;
    double merge_threshold = 0.2;   // overlap rate that triggers box grouping
    int thumbnail_long_side = 400;
    double min_box_frac = 0.001;    // of thumbnail area
    double max_box_frac = 0.9;

    void validate() const;
};

/// One Region per label id. Histograms are per-channel 25-bin counts over the
/// region's pixels, normalized jointly; neighbors are regions sharing a
/// 4-connected boundary.
std::vector<Region> build_regions(const LabelMap& labels, const Image& img);

/// Histogram intersection, in [0,1] for L1-normalized inputs.
double sim_colour(const Region& a, const Region& b);

/// 1 - (|a| + |b|) / |image|: small regions merge first.
double sim_size(const Region& a, const Region& b, std::int64_t im_area);

/// 1 - (|union bbox| - |a| - |b|) / |image|: regions that tile their joint
/// box merge first.
double sim_fill(const Region& a, const Region& b, std::int64_t im_area);

double combined_similarity(const Region& a, const Region& b,
                           const SimilarityConfig& cfg, std::int64_t im_area);

/// The merged region the grouping loop produces: sizes add, histograms
/// combine size-weighted, boxes union. Neighbor lists are handled by the loop.
Region merge_regions(const Region& a, const Region& b, int new_id);

struct GroupResult {
    std::vector<BBox> candidates;  // deduplicated, area-filtered
    int merge_count = 0;
};

/// Greedy hierarchical grouping: repeatedly merge the most similar neighbor
/// pair (ties: smallest (min id, max id)), recording every region's box along
/// the way. Exact duplicates are dropped, as are boxes outside the
/// [min_box_frac, max_box_frac] area band.
GroupResult hierarchical_group(const std::vector<Region>& regions,
                               const SimilarityConfig& cfg, std::int64_t im_area);

/// Fixed point of: while some pair overlaps more than threshold, replace the
/// first such pair (index order) with its union box.
std::vector<BBox> merge_overlapping(std::vector<BBox> boxes, double threshold);

/// Map thumbnail boxes back to original coordinates: multiply by scale, round
/// to nearest, clamp into the original bounds.
std::vector<BBox> rescale_boxes(const std::vector<BBox>& boxes, double scale,
                                int orig_width, int orig_height);

struct ProposeResult {
    std::vector<BBox> boxes;   // final, original-image coordinates
    int pre_merge_count = 0;   // candidates entering the box-grouping pass
    int post_merge_count = 0;
    double scale = 1.0;
    int num_regions = 0;       // initial over-segmentation size
};

/// End-to-end proposal pipeline: thumbnail, color-space conversion,
/// over-segmentation, hierarchical grouping, box grouping, rescale.
ProposeResult propose(const Image& rgb, const SimilarityConfig& cfg,
                      const SegmentationParams& seg_params);

} // namespace circuit
