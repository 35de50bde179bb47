#include "holder/quasihyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace holder {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-call grid graph; never shared between calls.
struct Grid {
    const GridRegion& region;
    double cell;
    int nx, ny;
    std::vector<double> inv_dist;  // 1/boundary_dist at member centers, 0 for non-members
    std::vector<bool> member;

    Grid(const GridRegion& r, int depth) : region(r), cell(r.cell_size(depth)) {
        nx = std::max(2, int(std::ceil((r.xmax - r.xmin) / cell)));
        ny = std::max(2, int(std::ceil((r.ymax - r.ymin) / cell)));
        member.assign(std::size_t(nx) * ny, false);
        inv_dist.assign(std::size_t(nx) * ny, 0.0);
        for (int iy = 0; iy < ny; ++iy) {
            for (int ix = 0; ix < nx; ++ix) {
                const Complex c = center(ix, iy);
                if (!region.contains(c)) continue;
                const double d = region.boundary_dist(c);
                if (!(d > 0.0)) continue;
                const std::size_t id = index(ix, iy);
                member[id] = true;
                inv_dist[id] = 1.0 / d;
            }
        }
    }

    std::size_t index(int ix, int iy) const { return std::size_t(iy) * nx + ix; }

    Complex center(int ix, int iy) const {
        return {region.xmin + (ix + 0.5) * cell, region.ymin + (iy + 0.5) * cell};
    }

    // Nearest member node by expanding square rings around w's cell.
    std::size_t snap(Complex w) const {
        const int cx = std::clamp(int((w.real() - region.xmin) / cell), 0, nx - 1);
        const int cy = std::clamp(int((w.imag() - region.ymin) / cell), 0, ny - 1);
        const int max_ring = std::max(nx, ny);
        double best_d2 = kInf;
        std::size_t best = SIZE_MAX;
        for (int ring = 0; ring <= max_ring; ++ring) {
            if (best != SIZE_MAX && double(ring - 1) * cell > std::sqrt(best_d2)) break;
            for (int iy = cy - ring; iy <= cy + ring; ++iy) {
                if (iy < 0 || iy >= ny) continue;
                for (int ix = cx - ring; ix <= cx + ring; ++ix) {
                    if (ix < 0 || ix >= nx) continue;
                    if (std::max(std::abs(ix - cx), std::abs(iy - cy)) != ring) continue;
                    const std::size_t id = index(ix, iy);
                    if (!member[id]) continue;
                    const double d2 = std::norm(center(ix, iy) - w);
                    if (d2 < best_d2) {
                        best_d2 = d2;
                        best = id;
                    }
                }
            }
        }
        return best;
    }

    double snap_cost(Complex w, std::size_t node) const {
        const Complex c = center(node % nx, node / nx);
        const double len = std::abs(c - w);
        if (len == 0.0) return 0.0;
        const double dw = region.boundary_dist(w);
        return len * 0.5 * (1.0 / dw + inv_dist[node]);
    }

    // Single-source Dijkstra over the 8-connected member graph.
    std::vector<double> dijkstra(std::size_t source) const {
        std::vector<double> dist(member.size(), kInf);
        using Item = std::pair<double, std::size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
        dist[source] = 0.0;
        pq.push({0.0, source});
        static constexpr int dx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
        static constexpr int dy[8] = {0, 0, 1, -1, 1, -1, 1, -1};
        const double diag = cell * std::sqrt(2.0);
        while (!pq.empty()) {
            const auto [d, id] = pq.top();
            pq.pop();
            if (d > dist[id]) continue;
            const int ix = int(id % nx), iy = int(id / nx);
            for (int k = 0; k < 8; ++k) {
                const int jx = ix + dx[k], jy = iy + dy[k];
                if (jx < 0 || jx >= nx || jy < 0 || jy >= ny) continue;
                const std::size_t jd = index(jx, jy);
                if (!member[jd]) continue;
                const double len = k < 4 ? cell : diag;
                const double nd = d + len * 0.5 * (inv_dist[id] + inv_dist[jd]);
                if (nd < dist[jd]) {
                    dist[jd] = nd;
                    pq.push({nd, jd});
                }
            }
        }
        return dist;
    }
};

double qh_once(const GridRegion& region, Complex w1, Complex w2, int depth) {
    const Grid grid(region, depth);
    const std::size_t a = grid.snap(w1);
    const std::size_t b = grid.snap(w2);
    if (a == SIZE_MAX || b == SIZE_MAX)
        throw DisconnectedEndpoints("quasihyperbolic: no member node near endpoint");
    if (a == b)
        return grid.snap_cost(w1, a) + grid.snap_cost(w2, b);
    const auto dist = grid.dijkstra(a);
    if (!std::isfinite(dist[b]))
        throw DisconnectedEndpoints("quasihyperbolic: endpoints not grid-connected");
    return grid.snap_cost(w1, a) + dist[b] + grid.snap_cost(w2, b);
}

}  // namespace

double GridRegion::cell_size(int depth) const {
    const double side = std::max(xmax - xmin, ymax - ymin);
    return side / (double(base_cells) * std::exp2(double(depth)));
}

QhResult quasihyperbolic_distance(const GridRegion& region, Complex w1, Complex w2,
                                  int depth) {
    if (depth < 0) throw BadParameter("quasihyperbolic: depth must be >= 0");
    if (!region.contains(w1) || !region.contains(w2))
        throw NotInRegion("quasihyperbolic: endpoint outside region");
    const double fine = qh_once(region, w1, w2, depth);
    if (depth == 0) return {fine, std::abs(fine)};
    const double coarse = qh_once(region, w1, w2, depth - 1);
    return {fine, std::abs(fine - coarse)};
}

std::vector<double> quasihyperbolic_distances(const GridRegion& region, Complex source,
                                              const std::vector<Complex>& targets,
                                              int depth) {
    if (!region.contains(source))
        throw NotInRegion("quasihyperbolic: source outside region");
    const Grid grid(region, depth);
    const std::size_t a = grid.snap(source);
    if (a == SIZE_MAX)
        throw DisconnectedEndpoints("quasihyperbolic: no member node near source");
    const auto dist = grid.dijkstra(a);
    const double source_cost = grid.snap_cost(source, a);
    std::vector<double> out;
    out.reserve(targets.size());
    for (const Complex& t : targets) {
        if (!region.contains(t)) {
            out.push_back(kInf);
            continue;
        }
        const std::size_t b = grid.snap(t);
        if (b == SIZE_MAX || !std::isfinite(dist[b])) {
            out.push_back(kInf);
            continue;
        }
        out.push_back(source_cost + dist[b] + grid.snap_cost(t, b));
    }
    return out;
}

}  // namespace holder
