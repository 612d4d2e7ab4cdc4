#ifndef POLYSURF_COMPLEX_HPP
#define POLYSURF_COMPLEX_HPP

#include <array>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polysurf/gf2.hpp"
#include "polysurf/presentation.hpp"

namespace polysurf {

struct EdgeCell {
    int label;  // generator index, or encoded cover label
    int origin;
    int terminus;
};

struct FaceCell {
    std::array<int, 3> sides;  // edge indices, cyclic, chaining head-to-tail
};

// A 2-dimensional triangle complex with labeled oriented edges. Covers
// both the 1-vertex polyhedron and its multi-vertex covers.
struct CellComplex {
    int vertex_count = 0;
    std::vector<EdgeCell> edges;
    std::vector<FaceCell> faces;
};

// One vertex, one loop edge per generator, one face per triangle word.
inline CellComplex build_one_vertex_complex(const PolygonalPresentation& p) {
    CellComplex x;
    x.vertex_count = 1;
    x.edges.reserve(static_cast<std::size_t>(p.generator_count));
    for (int g = 1; g <= p.generator_count; ++g) x.edges.push_back({g, 0, 0});
    x.faces.reserve(p.triangles.size());
    for (const auto& t : p.triangles)
        x.faces.push_back({{t.sides[0] - 1, t.sides[1] - 1, t.sides[2] - 1}});
    return x;
}

// Rows = edges, columns = faces. A face contributes its sides mod 2, so
// repeated sides within one face cancel.
inline Gf2Matrix boundary_matrix(const CellComplex& x) {
    Gf2Matrix m(static_cast<int>(x.edges.size()), static_cast<int>(x.faces.size()));
    for (std::size_t f = 0; f < x.faces.size(); ++f)
        for (int e : x.faces[f].sides) m.flip(e, static_cast<int>(f));
    return m;
}

// Edge multiplicities of a face chain; index = edge index.
inline std::vector<int> edge_multiplicities(const CellComplex& x, const BitChain& chain) {
    std::vector<int> mult(x.edges.size(), 0);
    for (int f = 0; f < chain.width(); ++f)
        if (chain.test(f))
            for (int e : x.faces[f].sides) ++mult[e];
    return mult;
}

// A chain is a 2-cycle iff every edge is covered an even number of times.
inline bool is_two_cycle(const CellComplex& x, const BitChain& chain) {
    for (int m : edge_multiplicities(x, chain))
        if (m & 1) return false;
    return true;
}

struct LinkNode {
    int edge;
    int end;  // 0 = origin end, 1 = terminus end
};

struct LinkArc {
    int a;  // terminus-end node of side k
    int b;  // origin-end node of side k+1
    int face;
    int corner;  // k in 0..2
};

// Graph of edge-ends and triangle corners at one vertex.
struct LinkGraph {
    int vertex = 0;
    std::vector<LinkNode> nodes;
    std::vector<LinkArc> arcs;
    std::vector<std::vector<int>> incident;       // node -> arc ids
    std::vector<std::array<int, 2>> node_at_end;  // edge -> {origin node, terminus node}, -1 absent

    int node_of(int edge, int end) const { return node_at_end[edge][end]; }

    int arc_other(int arc, int node) const {
        return arcs[arc].a == node ? arcs[arc].b : arcs[arc].a;
    }

    int degree(int node) const { return static_cast<int>(incident[node].size()); }

    // Bare graph for tests and synthetic checks; node i doubles as its
    // own edge label.
    static LinkGraph synthetic(int node_count, const std::vector<std::pair<int, int>>& arc_list) {
        LinkGraph g;
        g.nodes.reserve(static_cast<std::size_t>(node_count));
        for (int i = 0; i < node_count; ++i) g.nodes.push_back({i, 0});
        g.incident.assign(static_cast<std::size_t>(node_count), {});
        for (std::size_t i = 0; i < arc_list.size(); ++i) {
            auto [a, b] = arc_list[i];
            g.arcs.push_back({a, b, static_cast<int>(i), 0});
            g.incident[a].push_back(static_cast<int>(i));
            g.incident[b].push_back(static_cast<int>(i));
        }
        return g;
    }
};

// Nodes are the edge-ends at v; each face contributes one arc per corner
// at v, joining the terminus-end of side k to the origin-end of side k+1.
inline LinkGraph link_graph(const CellComplex& x, int v) {
    if (v < 0 || v >= x.vertex_count) throw std::invalid_argument("invalid vertex id");
    LinkGraph g;
    g.vertex = v;
    g.node_at_end.assign(x.edges.size(), {-1, -1});
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        if (x.edges[e].origin == v) {
            g.node_at_end[e][0] = static_cast<int>(g.nodes.size());
            g.nodes.push_back({static_cast<int>(e), 0});
        }
        if (x.edges[e].terminus == v) {
            g.node_at_end[e][1] = static_cast<int>(g.nodes.size());
            g.nodes.push_back({static_cast<int>(e), 1});
        }
    }
    g.incident.assign(g.nodes.size(), {});
    for (std::size_t f = 0; f < x.faces.size(); ++f) {
        for (int k = 0; k < 3; ++k) {
            int e1 = x.faces[f].sides[k];
            int e2 = x.faces[f].sides[(k + 1) % 3];
            if (x.edges[e1].terminus != x.edges[e2].origin)
                throw std::logic_error("face sides do not chain head-to-tail");
            if (x.edges[e1].terminus != v) continue;
            LinkArc arc{g.node_of(e1, 1), g.node_of(e2, 0), static_cast<int>(f), k};
            g.incident[arc.a].push_back(static_cast<int>(g.arcs.size()));
            g.incident[arc.b].push_back(static_cast<int>(g.arcs.size()));
            g.arcs.push_back(arc);
        }
    }
    return g;
}

// BFS distances from src; -1 for unreachable. skip_arc, when >= 0, is
// removed from the graph.
inline std::vector<int> bfs_distances(const LinkGraph& g, int src, int skip_arc = -1) {
    std::vector<int> dist(g.nodes.size(), -1);
    dist[src] = 0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int ai : g.incident[u]) {
            if (ai == skip_arc) continue;
            int w = g.arc_other(ai, u);
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

// Exact girth: for each arc, the shortest cycle through it is the
// distance between its endpoints without it, plus one. Returns -1 for
// an acyclic graph. Parallel arcs give girth 2.
inline int graph_girth(const LinkGraph& g) {
    int best = -1;
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
        auto dist = bfs_distances(g, g.arcs[i].a, static_cast<int>(i));
        int d = dist[g.arcs[i].b];
        if (d >= 0 && (best < 0 || d + 1 < best)) best = d + 1;
    }
    return best;
}

// Max finite BFS distance; -1 when the graph is disconnected or empty.
inline int graph_diameter(const LinkGraph& g) {
    if (g.nodes.empty()) return -1;
    int best = 0;
    for (std::size_t s = 0; s < g.nodes.size(); ++s) {
        auto dist = bfs_distances(g, static_cast<int>(s));
        for (int d : dist) {
            if (d < 0) return -1;
            best = std::max(best, d);
        }
    }
    return best;
}

inline bool graph_bipartite(const LinkGraph& g) {
    std::vector<int> color(g.nodes.size(), -1);
    for (std::size_t s = 0; s < g.nodes.size(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<int> queue{static_cast<int>(s)};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int ai : g.incident[u]) {
                int w = g.arc_other(ai, u);
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

inline bool graph_connected(const LinkGraph& g) {
    if (g.nodes.empty()) return true;
    auto dist = bfs_distances(g, 0);
    for (int d : dist)
        if (d < 0) return false;
    return true;
}

struct GqReport {
    int node_count = 0;
    int arc_count = 0;
    int min_degree = 0;
    int max_degree = 0;
    bool regular3 = false;
    int girth = -1;
    int diameter = -1;
    bool bipartite = false;
    bool connected = false;
    bool smallest_gq = false;

    std::string summary() const {
        std::ostringstream out;
        out << node_count << " nodes, " << arc_count << " arcs, ";
        if (regular3)
            out << "3-regular, ";
        else
            out << "degrees " << min_degree << ".." << max_degree << ", ";
        out << "girth " << girth << ", diameter " << diameter
            << (bipartite ? ", bipartite" : ", not bipartite") << " -> "
            << (smallest_gq ? "smallest generalized quadrangle incidence graph"
                            : "not the smallest-GQ incidence graph");
        return out.str();
    }
};

// A 3-regular graph on 30 nodes with girth 8 is the unique (3,8)-cage,
// the incidence graph of the smallest generalized quadrangle.
inline GqReport validate_gq_link(const LinkGraph& g) {
    GqReport r;
    r.node_count = static_cast<int>(g.nodes.size());
    r.arc_count = static_cast<int>(g.arcs.size());
    if (!g.nodes.empty()) {
        r.min_degree = r.max_degree = g.degree(0);
        for (std::size_t n = 1; n < g.nodes.size(); ++n) {
            r.min_degree = std::min(r.min_degree, g.degree(static_cast<int>(n)));
            r.max_degree = std::max(r.max_degree, g.degree(static_cast<int>(n)));
        }
    }
    r.regular3 = !g.nodes.empty() && r.min_degree == 3 && r.max_degree == 3;
    r.girth = graph_girth(g);
    r.diameter = graph_diameter(g);
    r.bipartite = graph_bipartite(g);
    r.connected = graph_connected(g);
    r.smallest_gq = r.node_count == 30 && r.regular3 && r.girth == 8;
    return r;
}

// Deterministic DOT rendering; node names carry the edge label and end.
inline std::string link_graph_dot(const CellComplex& x, const LinkGraph& g) {
    auto name = [&](int n) {
        const auto& node = g.nodes[n];
        return "e" + std::to_string(x.edges[node.edge].label) +
               (node.end == 0 ? ":o" : ":t");
    };
    std::ostringstream out;
    out << "graph link_v" << g.vertex << " {\n";
    for (std::size_t n = 0; n < g.nodes.size(); ++n)
        out << "  \"" << name(static_cast<int>(n)) << "\";\n";
    for (const auto& arc : g.arcs)
        out << "  \"" << name(arc.a) << "\" -- \"" << name(arc.b) << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace polysurf

#endif
