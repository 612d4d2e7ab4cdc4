#ifndef POLYSURF_COVER_HPP
#define POLYSURF_COVER_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polysurf/complex.hpp"
#include "polysurf/presentation.hpp"

namespace polysurf {

// Side label x_i^j of the degree-3 cyclic cover: base generator i,
// sheet j in {1,2,3}. Integer encoding 3(i-1)+j.
struct CoverLabel {
    int base;
    int sheet;

    bool operator==(const CoverLabel&) const = default;
};

inline int encode_label(CoverLabel l) { return 3 * (l.base - 1) + l.sheet; }

inline CoverLabel decode_label(int n, int generator_count) {
    if (n < 1 || n > 3 * generator_count)
        throw std::invalid_argument("cover label " + std::to_string(n) + " out of range 1.." +
                                    std::to_string(3 * generator_count));
    return {(n - 1) / 3 + 1, (n - 1) % 3 + 1};
}

// 3m triangles over encoded cover labels; triangle 3t, 3t+1, 3t+2 are
// the three sheet-shifted lifts of base triangle t.
struct CoverPresentation {
    PolygonalPresentation base;
    std::vector<TriangleWord> triangles;  // sides are encoded labels

    int label_count() const { return 3 * base.generator_count; }
};

// Lift each base triangle (a,b,c) to the three triangles
// (a^s, c^(s+1), b^(s+2)), s = 1..3, sheets mod 3 in {1,2,3}. The sides
// are taken in the order (a,c,b) so that the lifts agree with the
// integer-labeled fixtures; the mirrored order differs from substituting
// in the order (a,b,c) only by swapping sheets 2 and 3, which is a
// relabeling isomorphism of the cover.
inline CoverPresentation cyclic_triple_cover(const PolygonalPresentation& p) {
    CoverPresentation cp;
    cp.base = p;
    cp.triangles.reserve(3 * p.triangles.size());
    for (const auto& t : p.triangles) {
        const int a = t.sides[0], b = t.sides[1], c = t.sides[2];
        for (int s = 1; s <= 3; ++s) {
            auto sheet = [&](int offset) { return (s - 1 + offset) % 3 + 1; };
            cp.triangles.push_back(TriangleWord{{encode_label({a, sheet(0)}),
                                                 encode_label({c, sheet(1)}),
                                                 encode_label({b, sheet(2)})}});
        }
    }
    return cp;
}

// Vertices 0,1,2; the edge with sheet s runs from vertex s-1 to vertex
// s mod 3. This is the unique assignment under which every lifted
// triangle chains head-to-tail.
inline CellComplex build_cover_complex(const CoverPresentation& cp) {
    CellComplex x;
    x.vertex_count = 3;
    const int n = cp.label_count();
    x.edges.reserve(static_cast<std::size_t>(n));
    for (int lbl = 1; lbl <= n; ++lbl) {
        int s = (lbl - 1) % 3 + 1;
        x.edges.push_back({lbl, s - 1, s % 3});
    }
    x.faces.reserve(cp.triangles.size());
    for (const auto& t : cp.triangles) {
        FaceCell f{{t.sides[0] - 1, t.sides[1] - 1, t.sides[2] - 1}};
        for (int k = 0; k < 3; ++k)
            if (x.edges[f.sides[k]].terminus != x.edges[f.sides[(k + 1) % 3]].origin)
                throw std::logic_error("cover face does not chain head-to-tail");
        x.faces.push_back(f);
    }
    return x;
}

// Integer rows ("3 29 1" style), one face per line; when select is
// given, only faces with a set bit are printed.
inline std::string serialize_cover_triangles(const CoverPresentation& cp,
                                             const BitChain* select = nullptr) {
    std::ostringstream out;
    for (std::size_t f = 0; f < cp.triangles.size(); ++f) {
        if (select && !select->test(static_cast<int>(f))) continue;
        const auto& t = cp.triangles[f];
        out << t.sides[0] << ' ' << t.sides[1] << ' ' << t.sides[2] << "\n";
    }
    return out.str();
}

}  // namespace polysurf

#endif
