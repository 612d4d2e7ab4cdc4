// Command-line front end: validate presentations, enumerate mod-2
// 2-cycles, and certify surface immersions, on a 1-vertex polyhedron or
// its degree-3 cyclic cover.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "polysurf/polysurf.hpp"

namespace {

// Exit codes: 0 success, 1 input error, 2 validation failure,
// 3 internal invariant breach.
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;

struct CommonOptions {
    std::string file;
    std::string fixture;
    bool cover = false;
    std::string dot_path;
    std::uint64_t cap = polysurf::kDefaultEnumerationCap;
};

std::uint64_t env_cap_default() {
    if (const char* env = std::getenv("POLYSURF_ENUM_CAP"))
        return std::strtoull(env, nullptr, 10);
    return polysurf::kDefaultEnumerationCap;
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_cover = true) {
    cmd->add_option("file", opt.file, "presentation file (one triangle per line)");
    cmd->add_option("--fixture", opt.fixture, "built-in fixture name (e.g. T1)");
    if (with_cover)
        cmd->add_flag("--cover", opt.cover, "operate on the degree-3 cyclic cover");
    cmd->add_option("--dot", opt.dot_path, "write the vertex links as DOT graphs");
    cmd->add_option("--cap", opt.cap, "enumeration cap (default env POLYSURF_ENUM_CAP or 2^20)")
        ->default_val(env_cap_default());
}

polysurf::PolygonalPresentation load_input(const CommonOptions& opt) {
    if (!opt.fixture.empty() && !opt.file.empty())
        throw std::invalid_argument("give either a file or --fixture, not both");
    if (!opt.fixture.empty()) return polysurf::builtin_fixture(opt.fixture);
    if (opt.file.empty()) throw std::invalid_argument("no input: give a file or --fixture");
    std::ifstream in(opt.file);
    if (!in) throw polysurf::ParseError("cannot open " + opt.file);
    return polysurf::parse_presentation(in, opt.file);
}

struct BuiltComplex {
    polysurf::CellComplex complex;
    std::optional<polysurf::CoverPresentation> cover;
};

BuiltComplex build(const polysurf::PolygonalPresentation& p, bool cover) {
    if (!cover) return {polysurf::build_one_vertex_complex(p), std::nullopt};
    auto cp = polysurf::cyclic_triple_cover(p);
    return {polysurf::build_cover_complex(cp), std::move(cp)};
}

void maybe_write_dot(const CommonOptions& opt, const polysurf::CellComplex& x) {
    if (opt.dot_path.empty()) return;
    std::ofstream out(opt.dot_path);
    if (!out) throw std::invalid_argument("cannot write " + opt.dot_path);
    for (int v = 0; v < x.vertex_count; ++v)
        out << polysurf::link_graph_dot(x, polysurf::link_graph(x, v));
}

int cmd_validate(const CommonOptions& opt, bool lenient) {
    auto p = load_input(opt);
    auto report = polysurf::validate(p, !lenient);
    std::cout << "presentation " << p.name << ": " << report.summary() << "\n";
    auto built = build(p, opt.cover);
    bool all_gq = true;
    for (int v = 0; v < built.complex.vertex_count; ++v) {
        auto gq = polysurf::validate_gq_link(polysurf::link_graph(built.complex, v));
        std::cout << "link at vertex " << v << ": " << gq.summary() << "\n";
        all_gq = all_gq && gq.smallest_gq;
    }
    maybe_write_dot(opt, built.complex);
    return (report.valid && all_gq) ? kExitOk : kExitValidation;
}

int cmd_cycles(const CommonOptions& opt, const std::string& method, const std::string& format) {
    auto p = load_input(opt);
    auto built = build(p, opt.cover);
    const auto& x = built.complex;

    std::vector<polysurf::TwoCycle> cycles;
    if (method == "brute")
        cycles = polysurf::two_cycles_bruteforce(x);
    else if (method == "kernel")
        cycles = polysurf::two_cycles_kernel(x, opt.cap);
    else if (method == "link")
        cycles = polysurf::cycles_via_link(x, 0, opt.cap);
    else
        throw std::invalid_argument("unknown method: " + method);

    maybe_write_dot(opt, x);

    if (format == "table2") {
        std::cout << polysurf::table2_report(cycles);
        if (built.cover) {
            for (const auto& c : cycles) {
                std::cout << "Triangles in the " << c.length << "-cycle:\n"
                          << polysurf::serialize_cover_triangles(*built.cover, &c.chain);
            }
        }
    } else if (format == "structured") {
        polysurf::json j;
        j["schema_version"] = polysurf::kSchemaVersion;
        j["tool_version"] = polysurf::kToolVersion;
        j["presentation"] = p.name;
        j["input_digest"] = polysurf::input_digest(p);
        j["cover"] = opt.cover;
        j["method"] = method;
        polysurf::json arr = polysurf::json::array();
        for (const auto& c : cycles) {
            polysurf::json jc;
            jc["length"] = c.length;
            jc["bitstring"] = polysurf::format_bitstring(c);
            arr.push_back(std::move(jc));
        }
        j["cycles"] = std::move(arr);
        std::cout << j.dump(2) << "\n";
    } else {
        throw std::invalid_argument("unknown format: " + format);
    }
    return kExitOk;
}

int cmd_certify(const CommonOptions& opt, bool as_json, int workers) {
    auto p = load_input(opt);
    auto validation = polysurf::validate(p, true);
    auto built = build(p, opt.cover);
    const auto& x = built.complex;

    auto cycles = polysurf::two_cycles_kernel(x, opt.cap);
    auto certificates = polysurf::certify_all(x, cycles, workers);
    maybe_write_dot(opt, x);

    if (as_json) {
        std::cout << polysurf::analysis_json({p, opt.cover}, x, validation, certificates).dump(2)
                  << "\n";
    } else {
        std::cout << "presentation " << p.name << ": " << validation.summary() << "\n";
        std::cout << cycles.size() << " nonzero 2-cycle(s)\n";
        for (const auto& cert : certificates)
            std::cout << "\n" << polysurf::render_certificate(x, cert);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-cycles and surface certificates of 1-vertex triangle polyhedra and their 3-fold covers"};
    app.require_subcommand(1);

    CommonOptions validate_opt, cycles_opt, certify_opt;
    bool lenient = false;
    std::string method = "kernel", format = "table2";
    bool as_json = false;
    int workers = 1;

    auto* validate_cmd = app.add_subcommand("validate", "parse and validate a presentation");
    add_common(validate_cmd, validate_opt);
    validate_cmd->add_flag("--lenient", lenient, "skip the thickness-3 check");

    auto* cycles_cmd = app.add_subcommand("cycles", "enumerate all mod-2 2-cycles");
    add_common(cycles_cmd, cycles_opt);
    cycles_cmd->add_option("--method", method, "brute | kernel | link")->default_val("kernel");
    cycles_cmd->add_option("--format", format, "table2 | structured")->default_val("table2");

    auto* certify_cmd = app.add_subcommand("certify", "enumerate and certify 2-cycles");
    add_common(certify_cmd, certify_opt);
    certify_cmd->add_flag("--json", as_json, "emit the structured report");
    certify_cmd->add_option("--workers", workers, "certification worker threads")->default_val(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) return cmd_validate(validate_opt, lenient);
        if (cycles_cmd->parsed()) return cmd_cycles(cycles_opt, method, format);
        if (certify_cmd->parsed()) return cmd_certify(certify_opt, as_json, workers);
    } catch (const polysurf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const polysurf::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
