#ifndef POLYSURF_REPORT_HPP
#define POLYSURF_REPORT_HPP

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "polysurf/complex.hpp"
#include "polysurf/cover.hpp"
#include "polysurf/cycles.hpp"
#include "polysurf/geometry.hpp"
#include "polysurf/presentation.hpp"

namespace polysurf {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

using json = nlohmann::ordered_json;

inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string input_digest(const PolygonalPresentation& p) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(serialize_presentation(p))));
    return buf;
}

// Per-cycle certification, optionally spread over worker threads. The
// output order is the input order, so worker count never changes reports.
inline std::vector<SurfaceCertificate> certify_all(const CellComplex& x,
                                                   const std::vector<TwoCycle>& cycles,
                                                   int workers = 1) {
    std::vector<SurfaceCertificate> out(cycles.size());
    if (workers <= 1 || cycles.size() <= 1) {
        for (std::size_t i = 0; i < cycles.size(); ++i) out[i] = certify_surface(x, cycles[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < cycles.size(); i = next.fetch_add(1)) {
                try {
                    out[i] = certify_surface(x, cycles[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

inline json gq_report_json(const GqReport& r) {
    return json{{"nodes", r.node_count},
                {"arcs", r.arc_count},
                {"regular3", r.regular3},
                {"girth", r.girth},
                {"diameter", r.diameter},
                {"bipartite", r.bipartite},
                {"connected", r.connected},
                {"smallest_gq", r.smallest_gq}};
}

inline json certificate_json(const CellComplex& x, const SurfaceCertificate& cert) {
    json j;
    j["length"] = cert.cycle.length;
    j["bitstring"] = format_bitstring(cert.cycle);
    json triangles = json::array();
    for (int f = 0; f < cert.cycle.chain.width(); ++f) {
        if (!cert.cycle.chain.test(f)) continue;
        const auto& sides = x.faces[f].sides;
        triangles.push_back({x.edges[sides[0]].label, x.edges[sides[1]].label,
                             x.edges[sides[2]].label});
    }
    j["triangles"] = std::move(triangles);
    json links = json::array();
    for (int v = 0; v < x.vertex_count; ++v) {
        const auto& vg = cert.links[v];
        LinkGraph link = link_graph(x, v);
        json circles = json::array();
        for (const auto& circle : vg.decomposition.circles)
            circles.push_back(circle_labels(x, link, circle));
        links.push_back({{"vertex", v},
                         {"circle_lengths", vg.decomposition.lengths},
                         {"circles", std::move(circles)},
                         {"shortcut_violations", vg.shortcut_violations.size()},
                         {"geodesic_violations", vg.geodesic_violations.size()}});
    }
    j["links"] = std::move(links);
    j["surface"] = {{"faces", cert.shape.faces},
                    {"edges", cert.shape.edges},
                    {"vertices", cert.shape.vertices},
                    {"euler_characteristic", cert.shape.euler}};
    j["orientable"] = cert.is_orientable;
    j["certified"] = cert.certified;
    j["rejection_reason"] = cert.rejection_reason;
    return j;
}

struct AnalysisInput {
    PolygonalPresentation presentation;
    bool cover = false;
};

inline json analysis_json(const AnalysisInput& in, const CellComplex& x,
                          const ValidationReport& validation,
                          const std::vector<SurfaceCertificate>& certificates) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["presentation"] = {{"name", in.presentation.name},
                         {"generators", in.presentation.generator_count},
                         {"triangles", in.presentation.triangles.size()}};
    j["input_digest"] = input_digest(in.presentation);
    j["cover"] = in.cover;
    j["validation"] = {{"strict_valid", validation.valid},
                       {"summary", validation.summary()}};
    json links = json::array();
    for (int v = 0; v < x.vertex_count; ++v)
        links.push_back(gq_report_json(validate_gq_link(link_graph(x, v))));
    j["links"] = std::move(links);
    json cycles = json::array();
    for (const auto& cert : certificates) cycles.push_back(certificate_json(x, cert));
    j["cycles"] = std::move(cycles);
    return j;
}

}  // namespace polysurf

#endif
