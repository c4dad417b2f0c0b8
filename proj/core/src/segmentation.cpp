#include "circuit/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace circuit {

void SegmentationParams::validate() const {
    if (sigma < 0.0f) throw ConfigError("segmentation sigma must be >= 0");
    if (k <= 0.0f) throw ConfigError("segmentation k must be > 0");
    if (min_size < 1) throw ConfigError("segmentation min_size must be >= 1");
}

namespace {

struct Edge {
    int a;
    int b;
    float weight;
};

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), rank_(n, 0), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        int root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            const int next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    int merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        if (rank_[a] == rank_[b]) ++rank_[a];
        return a;
    }

    int size(int x) { return size_[find(x)]; }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<int> size_;
};

// Per-channel float planes, optionally Gaussian-smoothed.
std::vector<std::vector<float>> smoothed_planes(const Image& img, float sigma) {
    const int w = img.width(), h = img.height(), ch = img.channels();
    std::vector<std::vector<float>> planes(ch, std::vector<float>(std::size_t(w) * h));
    for (int c = 0; c < ch; ++c) {
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                planes[c][std::size_t(y) * w + x] = img.value(x, y, c);
            }
        }
    }
    if (sigma <= 0.0f) return planes;

    const int radius = std::max(1, static_cast<int>(std::ceil(sigma * 3.0f)));
    std::vector<float> kernel(2 * radius + 1);
    float sum = 0.0f;
    for (int i = -radius; i <= radius; ++i) {
        kernel[i + radius] = std::exp(-0.5f * (i * i) / (sigma * sigma));
        sum += kernel[i + radius];
    }
    for (auto& v : kernel) v /= sum;

    std::vector<float> tmp(std::size_t(w) * h);
    for (int c = 0; c < ch; ++c) {
        auto& plane = planes[c];
        // horizontal pass (clamped borders)
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                float acc = 0.0f;
                for (int i = -radius; i <= radius; ++i) {
                    const int xx = std::clamp(x + i, 0, w - 1);
                    acc += kernel[i + radius] * plane[std::size_t(y) * w + xx];
                }
                tmp[std::size_t(y) * w + x] = acc;
            }
        }
        // vertical pass
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                float acc = 0.0f;
                for (int i = -radius; i <= radius; ++i) {
                    const int yy = std::clamp(y + i, 0, h - 1);
                    acc += kernel[i + radius] * tmp[std::size_t(yy) * w + x];
                }
                plane[std::size_t(y) * w + x] = acc;
            }
        }
    }
    return planes;
}

} // namespace

LabelMap segment(const Image& img, const SegmentationParams& params) {
    params.validate();
    const int w = img.width(), h = img.height(), ch = img.channels();
    const int n = w * h;

    const auto planes = smoothed_planes(img, params.sigma);

    auto dist = [&](int p, int q) {
        float acc = 0.0f;
        for (int c = 0; c < ch; ++c) {
            const float d = planes[c][p] - planes[c][q];
            acc += d * d;
        }
        return std::sqrt(acc);
    };

    // Edges in construction order: row-major pixels, E / SE / S / SW.
    std::vector<Edge> edges;
    edges.reserve(std::size_t(n) * 4);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int p = y * w + x;
            if (x + 1 < w) edges.push_back({p, p + 1, dist(p, p + 1)});
            if (x + 1 < w && y + 1 < h) edges.push_back({p, p + w + 1, dist(p, p + w + 1)});
            if (y + 1 < h) edges.push_back({p, p + w, dist(p, p + w)});
            if (x - 1 >= 0 && y + 1 < h) edges.push_back({p, p + w - 1, dist(p, p + w - 1)});
        }
    }
    // Stable sort keeps construction order among equal weights.
    std::stable_sort(edges.begin(), edges.end(),
                     [](const Edge& a, const Edge& b) { return a.weight < b.weight; });

    UnionFind uf(n);
    // Merge threshold per component: Int(C) + k/|C|, Int starts at 0.
    std::vector<float> threshold(n, params.k);
    for (const Edge& e : edges) {
        const int a = uf.find(e.a);
        const int b = uf.find(e.b);
        if (a == b) continue;
        if (e.weight <= threshold[a] && e.weight <= threshold[b]) {
            const int root = uf.merge(a, b);
            threshold[root] = e.weight + params.k / static_cast<float>(uf.size(root));
        }
    }

    // Absorb undersized components along the sorted edge list.
    const int min_size = std::min(params.min_size, n);
    for (const Edge& e : edges) {
        const int a = uf.find(e.a);
        const int b = uf.find(e.b);
        if (a == b) continue;
        if (uf.size(a) < min_size || uf.size(b) < min_size) uf.merge(a, b);
    }

    // The 8-connected merges may leave a component that is not 4-connected.
    // Split into 4-connected pieces first, then re-absorb any piece that fell
    // below min_size into its most similar 4-neighbor.
    std::vector<int> label(n, -1);
    int next = 0;
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
        if (label[i] != -1) continue;
        const int comp = uf.find(i);
        const int id = next++;
        stack.push_back(i);
        label[i] = id;
        while (!stack.empty()) {
            const int p = stack.back();
            stack.pop_back();
            const int x = p % w, y = p / w;
            const int neigh[4] = {x > 0 ? p - 1 : -1, x + 1 < w ? p + 1 : -1,
                                  y > 0 ? p - w : -1, y + 1 < h ? p + w : -1};
            for (const int q : neigh) {
                if (q >= 0 && label[q] == -1 && uf.find(q) == comp) {
                    label[q] = id;
                    stack.push_back(q);
                }
            }
        }
    }

    std::vector<int> area(next, 0);
    std::vector<double> mean(std::size_t(next) * ch, 0.0);
    for (int i = 0; i < n; ++i) {
        ++area[label[i]];
        for (int c = 0; c < ch; ++c) mean[std::size_t(label[i]) * ch + c] += planes[c][i];
    }
    for (int r = 0; r < next; ++r) {
        for (int c = 0; c < ch; ++c) mean[std::size_t(r) * ch + c] /= area[r];
    }

    // Region adjacency under 4-connectivity.
    auto region_neighbors = [&](int target) {
        std::vector<int> out;
        for (int i = 0; i < n; ++i) {
            if (label[i] != target) continue;
            const int x = i % w, y = i / w;
            const int neigh[4] = {x > 0 ? i - 1 : -1, x + 1 < w ? i + 1 : -1,
                                  y > 0 ? i - w : -1, y + 1 < h ? i + w : -1};
            for (const int q : neigh) {
                if (q >= 0 && label[q] != target &&
                    std::find(out.begin(), out.end(), label[q]) == out.end()) {
                    out.push_back(label[q]);
                }
            }
        }
        return out;
    };

    bool changed = true;
    while (changed && next > 1) {
        changed = false;
        for (int r = 0; r < next; ++r) {
            if (area[r] == 0 || area[r] >= min_size) continue;
            const auto neigh = region_neighbors(r);
            if (neigh.empty()) continue;
            int best = neigh.front();
            double best_d = std::numeric_limits<double>::max();
            for (const int q : neigh) {
                double d = 0.0;
                for (int c = 0; c < ch; ++c) {
                    const double diff = mean[std::size_t(r) * ch + c] - mean[std::size_t(q) * ch + c];
                    d += diff * diff;
                }
                if (d < best_d || (d == best_d && q < best)) {
                    best_d = d;
                    best = q;
                }
            }
            for (int i = 0; i < n; ++i) {
                if (label[i] == r) label[i] = best;
            }
            for (int c = 0; c < ch; ++c) {
                mean[std::size_t(best) * ch + c] =
                    (mean[std::size_t(best) * ch + c] * area[best] + mean[std::size_t(r) * ch + c] * area[r]) /
                    (area[best] + area[r]);
            }
            area[best] += area[r];
            area[r] = 0;
            changed = true;
        }
    }

    // Dense relabel in row-major first-occurrence order.
    std::vector<int> remap(next, -1);
    LabelMap out;
    out.width = w;
    out.height = h;
    out.labels.resize(n);
    int dense = 0;
    for (int i = 0; i < n; ++i) {
        int& m = remap[label[i]];
        if (m == -1) m = dense++;
        out.labels[i] = m;
    }
    out.num_regions = dense;
    return out;
}

} // namespace circuit
