#pragma once

#include <cstddef>
#include <vector>

#include "holder/extended_complex.hpp"

namespace holder {

/// Discretized path. Vertices are finite except possibly the endpoints;
/// each segment carries a subdivision count used by quadrature.
struct PolylinePath {
    std::vector<ExtendedComplex> vertices;
    std::vector<int> subdivisions;  // one per segment; empty means all 1

    static PolylinePath through(std::vector<ExtendedComplex> vs, int subdiv = 1) {
        PolylinePath p;
        p.vertices = std::move(vs);
        p.validate();
        p.subdivisions.assign(p.vertices.size() - 1, subdiv);
        return p;
    }

    std::size_t segment_count() const { return vertices.size() - 1; }

    int subdivision(std::size_t seg) const {
        return subdivisions.empty() ? 1 : subdivisions[seg];
    }

    void validate() const {
        if (vertices.size() < 2)
            throw BadParameter("PolylinePath: needs at least 2 vertices");
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
            if (!vertices[i].is_finite() && !vertices[i + 1].is_finite())
                throw BadParameter("PolylinePath: consecutive infinite vertices");
            if (vertices[i] == vertices[i + 1])
                throw BadParameter("PolylinePath: consecutive vertices equal");
            if (i > 0 && i + 1 < vertices.size() - 1 && !vertices[i].is_finite())
                throw BadParameter("PolylinePath: interior vertex at infinity");
        }
    }

    /// Total Euclidean length; requires all vertices finite.
    double euclidean_length() const {
        double l = 0;
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
            l += std::abs(vertices[i + 1].value() - vertices[i].value());
        return l;
    }
};

}  // namespace holder
