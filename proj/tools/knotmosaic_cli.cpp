// Command-line interface for building, validating, enumerating and
// transforming knot mosaics.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "knotmosaic/bounds.hpp"
#include "knotmosaic/census.hpp"
#include "knotmosaic/error.hpp"
#include "knotmosaic/gauss.hpp"
#include "knotmosaic/invariants.hpp"
#include "knotmosaic/moves.hpp"
#include "knotmosaic/render.hpp"
#include "knotmosaic/topology.hpp"

namespace {

using namespace knotmosaic;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    out << text;
}

std::string side_name(Side s) {
    switch (s) {
        case Side::North: return "N";
        case Side::East: return "E";
        case Side::South: return "S";
        case Side::West: return "W";
    }
    return "?";
}

int run_validate(const std::string& input) {
    Mosaic m = parse_mosaic(read_input(input));
    Diagnostics d = is_suitably_connected(m);
    if (!d.ok()) {
        std::cerr << "not suitably connected:\n" << d.to_string();
        return 1;
    }
    Counts ct = counts(m);
    std::cout << "ok components=" << ct.components
              << " crossings=" << ct.crossings;
    if (m.alphabet() == Alphabet::Virtual)
        std::cout << " virtual=" << ct.virtual_crossings;
    std::cout << "\n";
    return 0;
}

int run_trace(const std::string& input) {
    Mosaic m = parse_mosaic(read_input(input));
    ComponentSet cs = trace(m);
    for (size_t i = 0; i < cs.components.size(); ++i) {
        std::cout << "component " << i + 1 << ":";
        for (const StrandStep& step : cs.components[i])
            std::cout << " (" << step.row << "," << step.col << ","
                      << side_name(step.entry) << side_name(step.exit) << ")";
        std::cout << "\n";
    }
    std::cout << "components=" << cs.count() << "\n";
    return 0;
}

int run_invariant(const std::string& input, bool bracket, bool jones_flag,
                  bool span) {
    Mosaic m = parse_mosaic(read_input(input));
    if (bracket)
        std::cout << "bracket=" << kauffman_bracket(m).to_string("A") << "\n";
    if (jones_flag)
        std::cout << "jones=" << jones(m).to_string("t") << "\n";
    if (span)
        std::cout << "span_bound=" << span_crossing_bound(m) << "\n";
    if (!bracket && !jones_flag && !span) {
        std::cout << "bracket=" << kauffman_bracket(m).to_string("A") << "\n";
        Counts ct = counts(m);
        if (ct.components == 1 && ct.virtual_crossings == 0) {
            std::cout << "jones=" << jones(m).to_string("t") << "\n";
            std::cout << "span_bound=" << span_crossing_bound(m) << "\n";
        }
    }
    return 0;
}

int run_census(int n, bool knots, bool canonical, bool count_only,
               const std::string& interior, bool use_virtual, int jobs,
               long long max_results) {
    CensusOptions opts;
    opts.knots_only = knots;
    opts.canonical_only = canonical;
    opts.with_jones = knots;
    opts.alphabet = use_virtual ? Alphabet::Virtual : Alphabet::Classical;
    opts.jobs = jobs;
    if (max_results > 0) opts.max_results = max_results;
    if (!interior.empty()) {
        if (interior == "all-crossings") {
            opts.interior = InteriorConstraint::AllCrossings;
        } else if (interior.rfind("min-crossings:", 0) == 0) {
            opts.interior = InteriorConstraint::MinCrossings;
            opts.min_crossings = std::stoi(interior.substr(14));
        } else {
            throw Error(ErrorCode::UnsupportedFilter,
                        "unknown interior constraint '" + interior + "'");
        }
    }

    if (count_only) {
        std::cout << count(n, opts).to_string() << "\n";
        return 0;
    }
    enumerate(n, opts, [](const CensusRecord& rec) {
        std::cout << serialize_mosaic(rec.mosaic);
        std::cout << "# components=" << rec.components
                  << " crossings=" << rec.crossings
                  << " virtual=" << rec.virtual_crossings;
        if (rec.jones) std::cout << " jones=" << rec.jones->to_string("t");
        std::cout << "\n";
        return true;
    });
    return 0;
}

int run_bounds(int crossings, int audit_n) {
    if (audit_n > 0) {
        BoundReport report = audit(audit_n);
        std::cout << report.to_string();
        return report.all_hold() ? 0 : 1;
    }
    std::cout << "min_n=" << min_mosaic_number(crossings)
              << " max_n=" << max_mosaic_number(crossings) << "\n";
    return 0;
}

int run_compile(const std::string& gauss_text, bool allow_virtual,
                const std::string& output) {
    GaussCode code = parse_gauss(gauss_text);
    Mosaic m = layout(code, allow_virtual);
    write_output(output, serialize_mosaic(m));
    return 0;
}

int run_simplify(const std::string& input, int max_steps, int max_grow) {
    Mosaic m = parse_mosaic(read_input(input));
    Mosaic reduced = simplify(
        m, MoveCatalog::builtin(m.alphabet()),
        {.max_steps = max_steps, .max_grow = max_grow});
    std::cout << serialize_mosaic(reduced);
    return 0;
}

int run_render(const std::string& input, bool svg, const std::string& output) {
    Mosaic m = parse_mosaic(read_input(input));
    write_output(output, svg ? render_svg(m) : render_ascii(m));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"knot mosaic toolkit"};
    app.require_subcommand(1);

    std::string input, output, gauss_text, interior;
    int n = 3, crossings = -1, audit_n = -1;
    int jobs = 1, max_steps = 256, max_grow = 1;
    long long max_results = 0;
    bool knots = false, canonical = false, count_only = false;
    bool use_virtual = false, allow_virtual = false;
    bool bracket = false, jones_flag = false, span = false, svg = false,
         ascii = false;

    auto* validate = app.add_subcommand("validate", "check suitable connectivity");
    validate->add_option("file", input, "mosaic file or - for stdin")->required();

    auto* trace_cmd = app.add_subcommand("trace", "trace strand components");
    trace_cmd->add_option("file", input)->required();

    auto* invariant = app.add_subcommand("invariant", "polynomial invariants");
    invariant->add_option("file", input)->required();
    invariant->add_flag("--bracket", bracket, "Kauffman bracket in A");
    invariant->add_flag("--jones", jones_flag, "Jones polynomial in t");
    invariant->add_flag("--span", span, "bracket span crossing bound");

    auto* census_cmd = app.add_subcommand("census", "enumerate n-mosaics");
    census_cmd->add_option("-n", n, "grid size")->required();
    census_cmd->add_flag("--knots", knots, "knots only");
    census_cmd->add_flag("--canonical", canonical, "one record per D4 orbit");
    census_cmd->add_flag("--count-only", count_only,
                         "transfer-matrix count only");
    census_cmd->add_option("--interior", interior,
                           "all-crossings or min-crossings:<k>");
    census_cmd->add_flag("--virtual", use_virtual, "include the virtual tile");
    census_cmd->add_option("--jobs", jobs, "worker threads");
    census_cmd->add_option("--max-results", max_results, "stop after this many");

    auto* bounds_cmd = app.add_subcommand("bounds", "bound formulas and audits");
    bounds_cmd->add_option("--crossings", crossings, "crossing number");
    bounds_cmd->add_option("--audit", audit_n, "audit census size");

    auto* compile_cmd = app.add_subcommand("compile", "Gauss code to mosaic");
    compile_cmd->add_option("--gauss", gauss_text, "code, e.g. O1U2O3U1O2U3")
        ->required();
    compile_cmd->add_flag("--allow-virtual", allow_virtual,
                          "insert virtual crossings when needed");
    compile_cmd->add_option("-o,--output", output, "output file");

    auto* simplify_cmd = app.add_subcommand("simplify", "reduce by moves");
    simplify_cmd->add_option("file", input)->required();
    simplify_cmd->add_option("--max-steps", max_steps, "search expansions");
    simplify_cmd->add_option("--max-grow", max_grow, "allowed size increase");

    auto* render_cmd = app.add_subcommand("render", "draw a mosaic");
    render_cmd->add_option("file", input)->required();
    render_cmd->add_flag("--ascii", ascii, "glyph grid (default)");
    render_cmd->add_flag("--svg", svg, "SVG document");
    render_cmd->add_option("-o,--output", output, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // help and version exit 0, every usage problem exits 2
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return run_validate(input);
        if (trace_cmd->parsed()) return run_trace(input);
        if (invariant->parsed())
            return run_invariant(input, bracket, jones_flag, span);
        if (census_cmd->parsed())
            return run_census(n, knots, canonical, count_only, interior,
                              use_virtual, jobs, max_results);
        if (bounds_cmd->parsed()) {
            if (crossings < 0 && audit_n < 0) {
                std::cerr << "bounds requires --crossings or --audit\n";
                return 2;
            }
            return run_bounds(crossings, audit_n);
        }
        if (compile_cmd->parsed())
            return run_compile(gauss_text, allow_virtual, output);
        if (simplify_cmd->parsed())
            return run_simplify(input, max_steps, max_grow);
        if (render_cmd->parsed()) return run_render(input, svg, output);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::NotRealizable ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
