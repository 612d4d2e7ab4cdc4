#ifndef POLYSURF_GEOMETRY_HPP
#define POLYSURF_GEOMETRY_HPP

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "polysurf/complex.hpp"
#include "polysurf/cycles.hpp"

namespace polysurf {

// A simple circle in a link graph. arcs[i] joins nodes[i] and
// nodes[(i+1) % size]. Canonical form: minimal node first, direction
// chosen so the node sequence is lexicographically smallest.
struct Circle {
    std::vector<int> nodes;
    std::vector<int> arcs;

    int size() const { return static_cast<int>(nodes.size()); }
};

struct LinkDecomposition {
    int vertex = 0;
    std::vector<Circle> circles;
    std::vector<int> lengths;  // circle lengths, sorted ascending
};

namespace detail {

inline Circle canonicalize_circle(Circle c) {
    const int n = c.size();
    if (n == 0) return c;
    Circle best;
    auto consider = [&](const Circle& cand) {
        if (best.nodes.empty() || cand.nodes < best.nodes ||
            (cand.nodes == best.nodes && cand.arcs < best.arcs))
            best = cand;
    };
    for (int r = 0; r < n; ++r) {
        Circle fwd, rev;
        for (int i = 0; i < n; ++i) {
            fwd.nodes.push_back(c.nodes[(r + i) % n]);
            fwd.arcs.push_back(c.arcs[(r + i) % n]);
            // reversed traversal starting at the same node: the arc
            // leaving nodes[r] backwards is arcs[r-1]
            rev.nodes.push_back(c.nodes[(r - i + 2 * n) % n]);
            rev.arcs.push_back(c.arcs[(r - i - 1 + 2 * n) % n]);
        }
        consider(fwd);
        consider(rev);
    }
    return best;
}

}  // namespace detail

// The corner subgraph of a 2-cycle at one vertex, decomposed into
// disjoint simple circles. In a thickness-3 complex every link node has
// chain-corner degree 0 or 2, so the decomposition always exists;
// degree 1 means the input was not a cycle.
inline LinkDecomposition chain_link_subgraph(const LinkGraph& link, const BitChain& chain) {
    LinkDecomposition d;
    d.vertex = link.vertex;

    std::vector<std::vector<int>> selected(link.nodes.size());
    for (std::size_t ai = 0; ai < link.arcs.size(); ++ai) {
        const auto& arc = link.arcs[ai];
        if (!chain.test(arc.face)) continue;
        selected[arc.a].push_back(static_cast<int>(ai));
        selected[arc.b].push_back(static_cast<int>(ai));
    }
    for (std::size_t n = 0; n < selected.size(); ++n) {
        if (selected[n].size() == 1)
            throw std::invalid_argument("chain is not a 2-cycle: link node of degree 1");
        if (selected[n].size() > 2)
            throw std::logic_error("link node of chain-degree > 2 (thickness violated)");
    }

    std::vector<bool> used(link.arcs.size(), false);
    for (std::size_t start = 0; start < selected.size(); ++start) {
        if (selected[start].empty() || used[selected[start][0]]) continue;
        Circle c;
        int cur = static_cast<int>(start);
        int via = selected[start][0];
        while (true) {
            c.nodes.push_back(cur);
            c.arcs.push_back(via);
            used[via] = true;
            cur = link.arc_other(via, cur);
            if (cur == static_cast<int>(start)) break;
            via = selected[cur][0] == via ? selected[cur][1] : selected[cur][0];
        }
        d.circles.push_back(detail::canonicalize_circle(std::move(c)));
    }
    for (const auto& c : d.circles) d.lengths.push_back(c.size());
    std::sort(d.lengths.begin(), d.lengths.end());
    return d;
}

inline LinkDecomposition chain_link_subgraph(const CellComplex& x, const BitChain& chain,
                                             int v) {
    return chain_link_subgraph(link_graph(x, v), chain);
}

// Edge labels along the circle's nodes, in circle order.
inline std::vector<int> circle_labels(const CellComplex& x, const LinkGraph& link,
                                      const Circle& c) {
    std::vector<int> out;
    out.reserve(c.nodes.size());
    for (int n : c.nodes) out.push_back(x.edges[link.nodes[n].edge].label);
    return out;
}

inline bool cyclic_equal_mod_rotation_reflection(const std::vector<int>& a,
                                                 const std::vector<int>& b) {
    const int n = static_cast<int>(a.size());
    if (n != static_cast<int>(b.size())) return false;
    if (n == 0) return true;
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<int> d = a;
        if (dir) std::reverse(d.begin(), d.end());
        for (int r = 0; r < n; ++r) {
            bool eq = true;
            for (int i = 0; i < n && eq; ++i) eq = d[(r + i) % n] == b[i];
            if (eq) return true;
        }
    }
    return false;
}

// An ambient path between circle nodes that leaves the circle's arcs.
struct PathViolation {
    std::vector<int> nodes;  // endpoints are circle nodes
    std::vector<int> arcs;
};

// All simple paths of <= max_len arcs between circle nodes; a violation
// is any such path not contained in the circle's own arc set.
inline std::vector<PathViolation> shortcut_check(const LinkGraph& link, const Circle& circle,
                                                 int max_len = 3) {
    std::unordered_set<int> on_circle(circle.nodes.begin(), circle.nodes.end());
    std::unordered_set<int> circle_arcs(circle.arcs.begin(), circle.arcs.end());

    std::vector<PathViolation> out;
    std::vector<int> path_nodes, path_arcs;
    std::vector<bool> visited(link.nodes.size(), false);

    auto dfs = [&](auto&& self, int u) -> void {
        if (static_cast<int>(path_arcs.size()) >= max_len) return;
        for (int ai : link.incident[u]) {
            int w = link.arc_other(ai, u);
            if (visited[w]) continue;
            path_nodes.push_back(w);
            path_arcs.push_back(ai);
            visited[w] = true;
            if (on_circle.count(w)) {
                if (path_nodes.front() < w) {  // count each undirected path once
                    bool inside = true;
                    for (int a : path_arcs)
                        if (!circle_arcs.count(a)) inside = false;
                    if (!inside) out.push_back({path_nodes, path_arcs});
                }
            }
            self(self, w);
            visited[w] = false;
            path_nodes.pop_back();
            path_arcs.pop_back();
        }
    };

    for (int start : circle.nodes) {
        path_nodes = {start};
        path_arcs.clear();
        std::fill(visited.begin(), visited.end(), false);
        visited[start] = true;
        dfs(dfs, start);
    }
    return out;
}

struct GeodesicViolation {
    int node_a = 0;
    int node_b = 0;
    int ambient_distance = 0;
    int required = 0;  // min(circle-arc distance, 4)
};

// The circle is geodesic up to the threshold when every node pair is at
// ambient distance >= min(circle-arc distance, 4).
inline std::vector<GeodesicViolation> geodesic_check(const LinkGraph& link,
                                                     const Circle& circle) {
    std::vector<GeodesicViolation> out;
    const int n = circle.size();
    for (int i = 0; i < n; ++i) {
        auto dist = bfs_distances(link, circle.nodes[i]);
        for (int j = i + 1; j < n; ++j) {
            int arc_dist = std::min(j - i, n - (j - i));
            int required = std::min(arc_dist, 4);
            int ambient = dist[circle.nodes[j]];
            if (ambient >= 0 && ambient < required)
                out.push_back({circle.nodes[i], circle.nodes[j], ambient, required});
        }
    }
    return out;
}

struct SurfaceShape {
    int faces = 0;
    int edges = 0;
    int vertices = 0;
    int euler = 0;
};

// V - E + F of the closed surface carried by a 2-cycle: F selected
// faces, E = 3F/2 (each edge of the chain is doubled), V = total number
// of link circles over all vertices.
inline SurfaceShape surface_shape(const CellComplex& x, const BitChain& chain) {
    SurfaceShape s;
    s.faces = chain.popcount();
    int side_slots = 0;
    for (int m : edge_multiplicities(x, chain)) {
        if (m != 0 && m != 2)
            throw std::logic_error("surface edge multiplicity " + std::to_string(m) +
                                   " (2-cycle in a thickness-3 complex expected)");
        side_slots += m;
    }
    s.edges = side_slots / 2;
    for (int v = 0; v < x.vertex_count; ++v)
        s.vertices += static_cast<int>(chain_link_subgraph(x, chain, v).circles.size());
    s.euler = s.vertices - s.edges + s.faces;
    return s;
}

inline int euler_characteristic(const CellComplex& x, const BitChain& chain) {
    return surface_shape(x, chain).euler;
}

// Structural orientability test. Every face traverses its sides
// forward, so two faces glued along a doubled edge must carry opposite
// orientations; the surface is orientable iff this 2-coloring of the
// chain's faces is consistent. An edge doubled within a single face
// forces non-orientability.
inline bool orientable(const CellComplex& x, const BitChain& chain) {
    std::vector<std::vector<int>> occurrences(x.edges.size());
    for (int f = 0; f < chain.width(); ++f)
        if (chain.test(f))
            for (int e : x.faces[f].sides) occurrences[e].push_back(f);

    std::vector<std::vector<int>> adjacent(x.faces.size());
    for (const auto& occ : occurrences) {
        if (occ.empty()) continue;
        if (occ.size() != 2)
            throw std::logic_error("surface edge multiplicity != 2 in orientability check");
        if (occ[0] == occ[1]) return false;
        adjacent[occ[0]].push_back(occ[1]);
        adjacent[occ[1]].push_back(occ[0]);
    }

    std::vector<int> color(x.faces.size(), -1);
    for (int f = 0; f < chain.width(); ++f) {
        if (!chain.test(f) || color[f] >= 0) continue;
        color[f] = 0;
        std::deque<int> queue{f};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adjacent[u]) {
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

struct VertexGeometry {
    LinkDecomposition decomposition;
    std::vector<PathViolation> shortcut_violations;
    std::vector<GeodesicViolation> geodesic_violations;
};

struct SurfaceCertificate {
    TwoCycle cycle;
    std::vector<VertexGeometry> links;  // one entry per vertex
    bool all_eight = false;
    int shortcut_violation_count = 0;
    int geodesic_violation_count = 0;
    SurfaceShape shape;
    bool is_orientable = false;
    bool certified = false;
    std::string rejection_reason;  // empty when certified
};

// Certified iff every link circle at every vertex has length 8 and no
// circle has a shortcut of <= 3 arcs. The geodesic check is reported
// alongside but does not gate certification.
inline SurfaceCertificate certify_surface(const CellComplex& x, const TwoCycle& c) {
    if (!is_two_cycle(x, c.chain))
        throw std::invalid_argument("certify_surface: chain has nonzero boundary");

    SurfaceCertificate cert;
    cert.cycle = c;
    cert.all_eight = true;
    for (int v = 0; v < x.vertex_count; ++v) {
        LinkGraph link = link_graph(x, v);
        VertexGeometry vg;
        vg.decomposition = chain_link_subgraph(link, c.chain);
        for (const auto& circle : vg.decomposition.circles) {
            if (circle.size() != 8 && cert.all_eight) {
                cert.all_eight = false;
                cert.rejection_reason = "link circle of length " +
                                        std::to_string(circle.size()) + " at vertex " +
                                        std::to_string(v);
            }
            auto sv = shortcut_check(link, circle);
            auto gv = geodesic_check(link, circle);
            cert.shortcut_violation_count += static_cast<int>(sv.size());
            cert.geodesic_violation_count += static_cast<int>(gv.size());
            vg.shortcut_violations.insert(vg.shortcut_violations.end(), sv.begin(), sv.end());
            vg.geodesic_violations.insert(vg.geodesic_violations.end(), gv.begin(), gv.end());
        }
        cert.links.push_back(std::move(vg));
    }
    cert.shape = surface_shape(x, c.chain);
    cert.is_orientable = orientable(x, c.chain);
    cert.certified = cert.all_eight && cert.shortcut_violation_count == 0;
    if (!cert.certified && cert.rejection_reason.empty())
        cert.rejection_reason = "shortcut violation in a link circle";
    return cert;
}

// Text layout with the triangle rows of the chain followed by the link
// circle label sequences per vertex.
inline std::string render_certificate(const CellComplex& x, const SurfaceCertificate& cert) {
    std::ostringstream out;
    out << cert.cycle.length << "-cycle " << format_bitstring(cert.cycle) << "\n";
    out << "Triangles in the 2-cycle:\n";
    for (int f = 0; f < cert.cycle.chain.width(); ++f) {
        if (!cert.cycle.chain.test(f)) continue;
        const auto& sides = x.faces[f].sides;
        out << ' ' << x.edges[sides[0]].label << ' ' << x.edges[sides[1]].label << ' '
            << x.edges[sides[2]].label << "\n";
    }
    out << "Cycles in the link:\n";
    for (int v = 0; v < x.vertex_count; ++v) {
        LinkGraph link = link_graph(x, v);
        for (const auto& circle : cert.links[v].decomposition.circles) {
            out << " vertex " << v << ":";
            for (int lbl : circle_labels(x, link, circle)) out << ' ' << lbl;
            out << "\n";
        }
    }
    out << "verdict: " << (cert.certified ? "certified" : "rejected (" + cert.rejection_reason + ")")
        << "\n";
    out << "euler characteristic: " << cert.shape.euler << "\n";
    out << "orientable: " << (cert.is_orientable ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace polysurf

#endif
