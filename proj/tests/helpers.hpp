#ifndef POLYSURF_TESTS_HELPERS_HPP
#define POLYSURF_TESTS_HELPERS_HPP

#include <random>
#include <set>
#include <vector>

#include "polysurf/polysurf.hpp"

namespace testutil {

inline polysurf::PolygonalPresentation random_presentation(std::mt19937& rng, int max_faces = 12,
                                                           int max_generators = 8) {
    std::uniform_int_distribution<int> face_count(1, max_faces);
    std::uniform_int_distribution<int> gen(1, max_generators);
    polysurf::PolygonalPresentation p;
    p.name = "random";
    int faces = face_count(rng);
    for (int f = 0; f < faces; ++f) {
        polysurf::TriangleWord t{{gen(rng), gen(rng), gen(rng)}};
        p.triangles.push_back(t);
        for (int g : t.sides) p.generator_count = std::max(p.generator_count, g);
    }
    return p;
}

inline std::set<std::string> bitstring_set(const std::vector<polysurf::TwoCycle>& cycles) {
    std::set<std::string> out;
    for (const auto& c : cycles) out.insert(polysurf::format_bitstring(c));
    return out;
}

// Independent naive GF(2) elimination over int vectors (oracle path).
inline int naive_rank(std::vector<std::vector<int>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[row]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != row && rows[r][col])
                for (std::size_t c = 0; c < cols; ++c) rows[r][c] ^= rows[row][c];
        ++row;
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<int>> to_int_rows(const polysurf::Gf2Matrix& m) {
    std::vector<std::vector<int>> rows(m.rows(), std::vector<int>(m.cols(), 0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c) ? 1 : 0;
    return rows;
}

// Sample simple cycles of a fixed length in a link graph by DFS; stops
// after `limit` cycles. Returned circles have arcs aligned with nodes.
inline std::vector<polysurf::Circle> sample_circles(const polysurf::LinkGraph& g, int length,
                                                    int limit) {
    std::vector<polysurf::Circle> found;
    std::vector<int> path_nodes, path_arcs;
    std::vector<bool> in_path(g.nodes.size(), false);

    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(found.size()) >= limit) return;
        int u = path_nodes.back();
        for (int ai : g.incident[u]) {
            if (static_cast<int>(found.size()) >= limit) return;
            int w = g.arc_other(ai, u);
            if (static_cast<int>(path_nodes.size()) == length) {
                if (w == path_nodes.front() && ai != path_arcs.back()) {
                    polysurf::Circle c;
                    c.nodes = path_nodes;
                    c.arcs = path_arcs;
                    c.arcs.erase(c.arcs.begin());  // drop placeholder
                    c.arcs.push_back(ai);
                    found.push_back(std::move(c));
                }
            } else if (!in_path[w] && w > path_nodes.front()) {
                path_nodes.push_back(w);
                path_arcs.push_back(ai);
                in_path[w] = true;
                self(self);
                in_path[w] = false;
                path_nodes.pop_back();
                path_arcs.pop_back();
            }
        }
    };

    for (std::size_t s = 0; s < g.nodes.size(); ++s) {
        if (static_cast<int>(found.size()) >= limit) break;
        path_nodes = {static_cast<int>(s)};
        path_arcs = {-1};  // placeholder so arcs[i] pairs with nodes[i] transitions
        std::fill(in_path.begin(), in_path.end(), false);
        in_path[s] = true;
        dfs(dfs);
    }
    return found;
}

}  // namespace testutil

#endif
