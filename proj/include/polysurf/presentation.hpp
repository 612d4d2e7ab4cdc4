#ifndef POLYSURF_PRESENTATION_HPP
#define POLYSURF_PRESENTATION_HPP

#include <algorithm>
#include <array>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace polysurf {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One cyclic relation x_i x_j x_k = 1, stored as the ordered triple of
// generator indices. Rotations of the triple describe the same word;
// reversals do not (the corner structure depends on the cyclic order).
struct TriangleWord {
    std::array<int, 3> sides;

    bool operator==(const TriangleWord&) const = default;

    std::array<int, 3> sorted_sides() const {
        auto s = sides;
        std::sort(s.begin(), s.end());
        return s;
    }
};

struct PolygonalPresentation {
    std::string name;
    int generator_count = 0;
    std::vector<TriangleWord> triangles;  // order is significant: it fixes bitstring positions
};

// Plain-text format: optional header line "generators N", body lines
// "i j k" with 1-based indices, '#' starts a comment, blank lines ignored.
inline PolygonalPresentation parse_presentation(std::istream& in, std::string name = "") {
    PolygonalPresentation p;
    p.name = std::move(name);
    int header_count = -1;
    int max_index = 0;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank
        if (first == "generators") {
            if (header_count >= 0 || !p.triangles.empty())
                throw ParseError("line " + std::to_string(line_no) +
                                 ": header must appear once, before any triangle");
            std::string extra;
            if (!(ls >> header_count) || header_count <= 0 || (ls >> extra))
                throw ParseError("line " + std::to_string(line_no) + ": malformed header");
            continue;
        }
        TriangleWord t{};
        std::istringstream ts(line);
        std::string extra;
        if (!(ts >> t.sides[0] >> t.sides[1] >> t.sides[2]) || (ts >> extra))
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected three positive integers");
        for (int g : t.sides) {
            if (g <= 0)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": generator index must be positive");
            max_index = std::max(max_index, g);
        }
        p.triangles.push_back(t);
    }
    if (p.triangles.empty()) throw ParseError("no triangles in input");
    if (header_count >= 0 && header_count < max_index)
        throw ParseError("header declares " + std::to_string(header_count) +
                         " generators but index " + std::to_string(max_index) + " is used");
    p.generator_count = header_count >= 0 ? header_count : max_index;
    return p;
}

inline PolygonalPresentation parse_presentation_text(const std::string& text,
                                                     std::string name = "") {
    std::istringstream in(text);
    return parse_presentation(in, std::move(name));
}

inline std::string serialize_presentation(const PolygonalPresentation& p,
                                          bool with_header = true) {
    std::ostringstream out;
    if (with_header) out << "generators " << p.generator_count << "\n";
    for (const auto& t : p.triangles)
        out << t.sides[0] << ' ' << t.sides[1] << ' ' << t.sides[2] << "\n";
    return out.str();
}

struct ValidationReport {
    // multiplicity[i] = number of side occurrences of generator i (index 0 unused)
    std::vector<int> multiplicity;
    std::vector<int> off_thickness;  // generators whose multiplicity differs from 3
    bool strict = true;
    bool valid = true;

    std::string summary() const {
        std::ostringstream out;
        out << "generators " << multiplicity.size() - 1 << ", ";
        if (valid) {
            out << (strict ? "strict-valid (every generator on exactly 3 sides)" : "valid");
        } else {
            out << "strict-invalid, multiplicity != 3 for:";
            for (int g : off_thickness)
                out << " x" << g << "(" << multiplicity[g] << ")";
        }
        return out.str();
    }
};

// Thickness-3 validation: in strict mode every generator must occur
// exactly 3 times counted with multiplicity over all triangle sides.
inline ValidationReport validate(const PolygonalPresentation& p, bool strict = true) {
    ValidationReport r;
    r.strict = strict;
    r.multiplicity.assign(static_cast<std::size_t>(p.generator_count) + 1, 0);
    for (const auto& t : p.triangles)
        for (int g : t.sides) ++r.multiplicity[g];
    if (strict) {
        for (int g = 1; g <= p.generator_count; ++g)
            if (r.multiplicity[g] != 3) r.off_thickness.push_back(g);
        r.valid = r.off_thickness.empty();
    }
    return r;
}

namespace fixtures {

inline PolygonalPresentation make(std::string name,
                                  std::vector<std::array<int, 3>> rows) {
    PolygonalPresentation p;
    p.name = std::move(name);
    for (const auto& r : rows) {
        p.triangles.push_back(TriangleWord{r});
        for (int g : r) p.generator_count = std::max(p.generator_count, g);
    }
    return p;
}

inline PolygonalPresentation t1() {
    return make("T1", {{1, 1, 10},
                       {1, 15, 2},
                       {2, 11, 9},
                       {2, 14, 3},
                       {3, 7, 4},
                       {3, 15, 13},
                       {4, 8, 6},
                       {4, 12, 11},
                       {5, 5, 8},
                       {5, 10, 12},
                       {6, 6, 14},
                       {7, 7, 12},
                       {8, 13, 9},
                       {9, 14, 15},
                       {10, 13, 11}});
}

// The 8-triangle chain whose single-vertex corner graph splits into
// three circles of length 8.
inline PolygonalPresentation g9_surface_chain() {
    return make("G9_surface_chain", {{8, 7, 3},
                                     {10, 13, 3},
                                     {8, 5, 4},
                                     {14, 14, 4},
                                     {10, 12, 5},
                                     {7, 12, 6},
                                     {15, 9, 6},
                                     {15, 13, 9}});
}

// The three certified 8-triangle chains in the 3-fold cover of T1,
// integer-labeled with x_i^j encoded as 3(i-1)+j.
inline PolygonalPresentation g1_cover_chain(int which) {
    switch (which) {
        case 1:
            return make("G1_cover_chain_1", {{3, 29, 1},
                                             {45, 5, 1},
                                             {44, 4, 3},
                                             {33, 26, 4},
                                             {40, 9, 5},
                                             {44, 37, 9},
                                             {40, 45, 26},
                                             {37, 33, 29}});
        case 2:
            return make("G1_cover_chain_2", {{2, 28, 3},
                                             {43, 6, 2},
                                             {44, 4, 3},
                                             {32, 25, 6},
                                             {42, 8, 4},
                                             {43, 39, 8},
                                             {42, 44, 25},
                                             {39, 32, 28}});
        case 3:
            return make("G1_cover_chain_3", {{1, 30, 2},
                                             {45, 5, 1},
                                             {43, 6, 2},
                                             {31, 27, 5},
                                             {41, 7, 6},
                                             {45, 38, 7},
                                             {41, 43, 27},
                                             {38, 31, 30}});
        default:
            throw std::invalid_argument("g1_cover_chain: index must be 1..3");
    }
}

// Link-circle label sequence (edge labels, cyclic) at vertex 0 for each
// of the three certified chains above.
inline std::vector<int> g1_cover_link_cycle(int which) {
    switch (which) {
        case 1: return {1, 3, 4, 33, 37, 9, 40, 45};
        case 2: return {3, 4, 42, 25, 6, 43, 39, 28};
        case 3: return {1, 30, 31, 27, 43, 6, 7, 45};
        default: throw std::invalid_argument("g1_cover_link_cycle: index must be 1..3");
    }
}

}  // namespace fixtures

inline std::vector<std::string> builtin_fixture_names() {
    return {"T1", "G9_surface_chain", "G1_cover_chain_1", "G1_cover_chain_2",
            "G1_cover_chain_3"};
}

inline PolygonalPresentation builtin_fixture(const std::string& name) {
    if (name == "T1") return fixtures::t1();
    if (name == "G9_surface_chain") return fixtures::g9_surface_chain();
    if (name == "G1_cover_chain_1") return fixtures::g1_cover_chain(1);
    if (name == "G1_cover_chain_2") return fixtures::g1_cover_chain(2);
    if (name == "G1_cover_chain_3") return fixtures::g1_cover_chain(3);
    throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace polysurf

#endif
