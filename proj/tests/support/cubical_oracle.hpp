/**
 * Brute-force relative homology H_*(N, L) of a 1-D pair from its cubical
 * chain complex on a subdivided grid, with ranks from rational elimination.
 */
#ifndef ISYS_TEST_CUBICAL_ORACLE_HPP
#define ISYS_TEST_CUBICAL_ORACLE_HPP

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "isys/geometry.hpp"

namespace oracle {

using isys::Scalar;

inline std::size_t rank_of(std::vector<std::vector<Scalar>> a)
{
    std::size_t rank = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            Scalar m = a[r][c] / a[rank][c];
            for (std::size_t k = 0; k < cols; ++k)
                a[r][k] -= m * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Betti numbers {b0, b1} of the pair.
inline std::array<std::size_t, 2> relative_betti(const isys::CompactPair& p, int subdivisions = 2)
{
    const bool circle = p.space() == isys::Space::Circle;
    std::set<Scalar> pts;
    for (const auto* r : {&p.N, &p.L})
        for (const auto& c : r->cells())
            for (const auto& x : {c.lo, c.hi})
                pts.insert(circle ? isys::frac(x) : x);
    if (circle)
        pts.insert(0);
    if (pts.empty())
        return {0, 0};

    std::vector<Scalar> grid(pts.begin(), pts.end());
    for (int s = 0; s < subdivisions; ++s) {
        std::vector<Scalar> finer;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            finer.push_back(grid[i]);
            if (i + 1 < grid.size())
                finer.push_back((grid[i] + grid[i + 1]) / 2);
            else if (circle)
                finer.push_back((grid[i] + grid[0] + 1) / 2);
        }
        grid = std::move(finer);
    }

    auto in = [&](const isys::RegionSet& r, const Scalar& x) { return r.contains(x); };

    std::vector<std::size_t> verts;  // grid indices of relative vertices
    std::vector<long> vpos(grid.size(), -1);
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (in(p.N, grid[i]) && !in(p.L, grid[i])) {
            vpos[i] = static_cast<long>(verts.size());
            verts.push_back(i);
        }

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    const std::size_t n_edges = circle ? grid.size() : grid.size() - 1;
    for (std::size_t i = 0; i < n_edges; ++i) {
        std::size_t j = (i + 1) % grid.size();
        Scalar hi = j == 0 ? grid[j] + 1 : grid[j];
        Scalar mid = (grid[i] + hi) / 2;
        if (in(p.N, mid) && !in(p.L, mid))
            edges.emplace_back(i, j);
    }

    std::vector<std::vector<Scalar>> d(verts.size(), std::vector<Scalar>(edges.size(), 0));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [i, j] = edges[e];
        if (vpos[j] >= 0)
            d[vpos[j]][e] += 1;
        if (vpos[i] >= 0)
            d[vpos[i]][e] -= 1;
    }
    std::size_t r = verts.empty() || edges.empty() ? 0 : rank_of(d);
    return {verts.size() - r, edges.size() - r};
}

}  // namespace oracle

#endif
