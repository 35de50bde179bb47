#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

namespace holder {

/// Static kd-tree over points in R^Dim with squared-Euclidean queries.
/// Indices returned refer to the order points were supplied in.
template <std::size_t Dim>
class KdTree {
  public:
    using Point = std::array<double, Dim>;

    KdTree() = default;

    explicit KdTree(std::vector<Point> pts) : pts_(std::move(pts)) {
        index_.resize(pts_.size());
        std::iota(index_.begin(), index_.end(), std::size_t{0});
        if (!pts_.empty()) build(0, pts_.size(), 0);
    }

    std::size_t size() const { return pts_.size(); }

    struct Hit {
        std::size_t index = 0;
        double dist2 = std::numeric_limits<double>::infinity();
    };

    /// Nearest neighbor; tree must be nonempty.
    Hit nearest(const Point& q) const {
        Hit best;
        search(q, 0, pts_.size(), 0, best);
        return best;
    }

    /// Up to k nearest neighbors, ascending by distance.
    std::vector<Hit> nearest_k(const Point& q, std::size_t k) const {
        std::vector<Hit> heap;  // max-heap on dist2
        search_k(q, 0, pts_.size(), 0, k, heap);
        std::sort(heap.begin(), heap.end(),
                  [](const Hit& a, const Hit& b) { return a.dist2 < b.dist2; });
        return heap;
    }

  private:
    static double dist2(const Point& a, const Point& b) {
        double s = 0;
        for (std::size_t d = 0; d < Dim; ++d) s += (a[d] - b[d]) * (a[d] - b[d]);
        return s;
    }

    void build(std::size_t lo, std::size_t hi, std::size_t axis) {
        if (hi - lo <= 1) return;
        const std::size_t mid = (lo + hi) / 2;
        std::nth_element(index_.begin() + lo, index_.begin() + mid, index_.begin() + hi,
                         [&](std::size_t a, std::size_t b) {
                             return pts_[a][axis] < pts_[b][axis];
                         });
        const std::size_t next = (axis + 1) % Dim;
        build(lo, mid, next);
        build(mid + 1, hi, next);
    }

    void search(const Point& q, std::size_t lo, std::size_t hi, std::size_t axis,
                Hit& best) const {
        if (lo >= hi) return;
        const std::size_t mid = (lo + hi) / 2;
        const std::size_t i = index_[mid];
        const double d2 = dist2(q, pts_[i]);
        if (d2 < best.dist2) best = {i, d2};
        const double dx = q[axis] - pts_[i][axis];
        const std::size_t next = (axis + 1) % Dim;
        if (dx < 0) {
            search(q, lo, mid, next, best);
            if (dx * dx < best.dist2) search(q, mid + 1, hi, next, best);
        } else {
            search(q, mid + 1, hi, next, best);
            if (dx * dx < best.dist2) search(q, lo, mid, next, best);
        }
    }

    void search_k(const Point& q, std::size_t lo, std::size_t hi, std::size_t axis,
                  std::size_t k, std::vector<Hit>& heap) const {
        if (lo >= hi) return;
        const std::size_t mid = (lo + hi) / 2;
        const std::size_t i = index_[mid];
        const double d2 = dist2(q, pts_[i]);
        auto cmp = [](const Hit& a, const Hit& b) { return a.dist2 < b.dist2; };
        if (heap.size() < k) {
            heap.push_back({i, d2});
            std::push_heap(heap.begin(), heap.end(), cmp);
        } else if (d2 < heap.front().dist2) {
            std::pop_heap(heap.begin(), heap.end(), cmp);
            heap.back() = {i, d2};
            std::push_heap(heap.begin(), heap.end(), cmp);
        }
        const double dx = q[axis] - pts_[i][axis];
        const std::size_t next = (axis + 1) % Dim;
        auto bound = [&] {
            return heap.size() < k ? std::numeric_limits<double>::infinity()
                                   : heap.front().dist2;
        };
        if (dx < 0) {
            search_k(q, lo, mid, next, k, heap);
            if (dx * dx < bound()) search_k(q, mid + 1, hi, next, k, heap);
        } else {
            search_k(q, mid + 1, hi, next, k, heap);
            if (dx * dx < bound()) search_k(q, lo, mid, next, k, heap);
        }
    }

    std::vector<Point> pts_;
    std::vector<std::size_t> index_;
};

}  // namespace holder
