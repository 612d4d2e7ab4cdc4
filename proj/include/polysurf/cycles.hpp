#ifndef POLYSURF_CYCLES_HPP
#define POLYSURF_CYCLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polysurf/complex.hpp"
#include "polysurf/gf2.hpp"

namespace polysurf {

// A nonzero mod-2 2-cycle: a face chain with zero boundary.
struct TwoCycle {
    BitChain chain;
    int length = 0;  // popcount of chain

    bool operator==(const TwoCycle&) const = default;
};

inline TwoCycle make_two_cycle(BitChain chain) {
    int len = chain.popcount();
    return {std::move(chain), len};
}

// Canonical report order: by length, then bitstring lexicographic.
inline void sort_cycles(std::vector<TwoCycle>& cycles) {
    std::sort(cycles.begin(), cycles.end(), [](const TwoCycle& a, const TwoCycle& b) {
        if (a.length != b.length) return a.length < b.length;
        return BitChain::bitstring_less(a.chain, b.chain);
    });
}

namespace detail {

// Every producer re-checks its output against the raw edge counts,
// independently of the method that found it.
inline void recheck_cycles(const CellComplex& x, const std::vector<TwoCycle>& cycles) {
    for (const auto& c : cycles)
        if (!is_two_cycle(x, c.chain))
            throw std::logic_error("internal: produced chain has nonzero boundary");
}

}  // namespace detail

// Exhaustive scan of all 2^F nonzero chains, Gray-code incremental
// boundary updates. Refuses face counts above max_faces.
inline std::vector<TwoCycle> two_cycles_bruteforce(const CellComplex& x, int max_faces = 24) {
    const int f_count = static_cast<int>(x.faces.size());
    if (f_count > max_faces)
        throw std::invalid_argument("face count " + std::to_string(f_count) + " exceeds " +
                                    std::to_string(max_faces) + "; use the kernel method");
    std::vector<BitChain> columns;
    columns.reserve(static_cast<std::size_t>(f_count));
    for (int f = 0; f < f_count; ++f) {
        BitChain col(static_cast<int>(x.edges.size()));
        for (int e : x.faces[f].sides) col.flip(e);
        columns.push_back(std::move(col));
    }

    std::vector<TwoCycle> out;
    BitChain chain(f_count);
    BitChain boundary(static_cast<int>(x.edges.size()));
    const std::uint64_t total = (std::uint64_t(1) << f_count) - 1;
    for (std::uint64_t m = 1; m <= total; ++m) {
        int bit = std::countr_zero(m);
        chain.flip(bit);
        boundary ^= columns[static_cast<std::size_t>(bit)];
        if (!boundary.any()) out.push_back(make_two_cycle(chain));
    }
    sort_cycles(out);
    detail::recheck_cycles(x, out);
    return out;
}

// Kernel of the boundary matrix, enumerated from a basis.
inline std::vector<TwoCycle> two_cycles_kernel(const CellComplex& x,
                                               std::uint64_t cap = kDefaultEnumerationCap) {
    auto basis = kernel_basis(boundary_matrix(x));
    std::vector<TwoCycle> out;
    for (auto& chain : enumerate_kernel(basis, cap)) out.push_back(make_two_cycle(std::move(chain)));
    sort_cycles(out);
    detail::recheck_cycles(x, out);
    return out;
}

// Link-based enumeration at a single vertex v of a multi-vertex complex
// where every face meets v exactly once. A face chain is a 2-cycle iff
// its corner 1-chain in the link of v has even degree at every link
// node (a disjoint union of circles) and, for every edge of the complex
// away from v, the faces through that edge are selected an even number
// of times (the three-by-three boundary identification pairs them up;
// all-three is excluded by parity).
inline std::vector<TwoCycle> cycles_via_link(const CellComplex& x, int v,
                                             std::uint64_t cap = kDefaultEnumerationCap) {
    if (x.vertex_count < 2)
        throw std::invalid_argument("cycles_via_link requires a multi-vertex complex");
    const LinkGraph link = link_graph(x, v);
    const int f_count = static_cast<int>(x.faces.size());

    std::vector<int> corners_at_v(static_cast<std::size_t>(f_count), 0);
    for (const auto& arc : link.arcs) ++corners_at_v[arc.face];
    for (int f = 0; f < f_count; ++f)
        if (corners_at_v[f] != 1)
            throw std::invalid_argument("cycles_via_link: face " + std::to_string(f) +
                                        " does not meet vertex " + std::to_string(v) +
                                        " exactly once");

    std::vector<int> away_edges;
    for (std::size_t e = 0; e < x.edges.size(); ++e)
        if (x.edges[e].origin != v && x.edges[e].terminus != v)
            away_edges.push_back(static_cast<int>(e));

    Gf2Matrix system(static_cast<int>(link.nodes.size() + away_edges.size()), f_count);
    for (const auto& arc : link.arcs) {
        system.flip(arc.a, arc.face);
        system.flip(arc.b, arc.face);
    }
    const int base_row = static_cast<int>(link.nodes.size());
    for (std::size_t i = 0; i < away_edges.size(); ++i)
        for (int f = 0; f < f_count; ++f)
            for (int e : x.faces[f].sides)
                if (e == away_edges[i]) system.flip(base_row + static_cast<int>(i), f);

    std::vector<TwoCycle> out;
    for (auto& chain : enumerate_kernel(kernel_basis(system), cap))
        out.push_back(make_two_cycle(std::move(chain)));
    sort_cycles(out);
    detail::recheck_cycles(x, out);
    return out;
}

// Face 1 is the leftmost character, as in the table notation.
inline std::string format_bitstring(const BitChain& chain) { return chain.to_bitstring(); }
inline std::string format_bitstring(const TwoCycle& c) { return c.chain.to_bitstring(); }

struct ParsedChain {
    TwoCycle cycle;
    bool is_cycle = false;  // flagged, not fatal: the chain may have nonzero boundary
};

inline ParsedChain parse_bitstring(const std::string& text, const CellComplex& x) {
    if (text.size() != x.faces.size())
        throw std::invalid_argument("bitstring length " + std::to_string(text.size()) +
                                    " does not match face count " +
                                    std::to_string(x.faces.size()));
    BitChain chain = BitChain::from_bitstring(text);
    bool ok = is_two_cycle(x, chain);
    return {make_two_cycle(std::move(chain)), ok};
}

// "<len>-cycle <bitstring>" per line, in canonical order.
inline std::string table2_report(const std::vector<TwoCycle>& cycles) {
    std::ostringstream out;
    for (const auto& c : cycles) out << c.length << "-cycle " << format_bitstring(c) << "\n";
    return out.str();
}

}  // namespace polysurf

#endif
