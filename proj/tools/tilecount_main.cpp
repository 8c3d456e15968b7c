#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tilecount/count.hpp"
#include "tilecount/oracle.hpp"
#include "tilecount/render.hpp"
#include "tilecount/tileset_io.hpp"

using namespace tilecount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitCrosscheckFail = 3;
constexpr int kExitBudget = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OracleBudget budget_from_env() {
    OracleBudget budget;
    if (const char* env = std::getenv("TILECOUNT_MAX_STATES")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) {
            budget.max_states = v;
            budget.max_flood = v;
        }
    }
    return budget;
}

DihGroup parse_group_arg(const std::string& name) {
    auto R = DihGroup::parse(name);
    if (!R) throw UsageError("unknown group name: " + name);
    return *R;
}

Surface parse_surface_arg(const std::string& name) {
    auto s = parse_surface(name);
    if (!s) throw UsageError("unknown surface: " + name);
    return *s;
}

TileDesignSet load_tiles(const std::string& spec, const DihGroup& R) {
    try {
        return resolve_tileset(spec, R);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

void check_surface_group(const GridShape& shape, const DihGroup& R) {
    try {
        check_group_for_surface(R, shape);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << content;
}

// ---- count ----------------------------------------------------------------

struct CountArgs {
    std::string surface = "grid";
    long n = 1, m = 1;
    std::string group = "trivial";
    std::string tiles = "two-color";
    bool breakdown = false;
};

int run_count(const CountArgs& args) {
    Surface surface = parse_surface_arg(args.surface);
    GridShape shape{args.n, args.m, surface};
    DihGroup R = parse_group_arg(args.group);
    check_surface_group(shape, R);
    TileDesignSet ts = load_tiles(args.tiles, R);
    FixedDesignTable t = fixed_design_table(ts);
    if (args.breakdown) {
        for (Dih g : R.elements()) {
            std::cout << "fxpt[" << dih_name(g) << "] = "
                      << fxpt_surface(surface, g, args.n, args.m, t).get_str()
                      << "\n";
        }
    }
    std::cout << count_tilings(shape, R, t).get_str() << "\n";
    return kExitOk;
}

// ---- sequence -------------------------------------------------------------

struct SequenceArgs {
    std::string surface = "grid";
    bool square = false;
    std::string group = "trivial";
    std::string tiles = "two-color";
    long from = 1, to = 8;
    long m_from = 0, m_to = 0;  // 0 = unset
    long offset = 0;            // 0 = index by n itself
    std::string out;
};

int run_sequence(const SequenceArgs& args) {
    Surface surface = parse_surface_arg(args.surface);
    DihGroup R = parse_group_arg(args.group);
    if (args.from < 1 || args.to < args.from) throw UsageError("bad n range");
    TileDesignSet ts = load_tiles(args.tiles, R);
    FixedDesignTable t = fixed_design_table(ts);

    std::ostringstream body;
    if (args.square) {
        if (args.m_from != 0 || args.m_to != 0) {
            throw UsageError("--square is incompatible with an m range");
        }
        long index = args.offset == 0 ? args.from : args.offset;
        for (long n = args.from; n <= args.to; ++n, ++index) {
            GridShape shape{n, n, surface};
            check_surface_group(shape, R);
            body << index << " " << count_tilings(shape, R, t).get_str() << "\n";
        }
    } else {
        long m_from = args.m_from == 0 ? 1 : args.m_from;
        long m_to = args.m_to == 0 ? args.to : args.m_to;
        if (m_from < 1 || m_to < m_from) throw UsageError("bad m range");
        if (m_from == m_to) {
            // b-file: one line per n at fixed m.
            long index = args.offset == 0 ? args.from : args.offset;
            for (long n = args.from; n <= args.to; ++n, ++index) {
                GridShape shape{n, m_from, surface};
                check_surface_group(shape, R);
                body << index << " " << count_tilings(shape, R, t).get_str() << "\n";
            }
        } else {
            // Row-major table: one row per n, one column per m.
            for (long n = args.from; n <= args.to; ++n) {
                body << n;
                for (long m = m_from; m <= m_to; ++m) {
                    GridShape shape{n, m, surface};
                    check_surface_group(shape, R);
                    body << " " << count_tilings(shape, R, t).get_str();
                }
                body << "\n";
            }
        }
    }
    write_output(args.out, body.str());
    return kExitOk;
}

// ---- crosscheck -----------------------------------------------------------

struct CrosscheckArgs {
    long max_n = 3, max_m = 3;
    unsigned long budget = 0;  // 0 = default
    bool corrupt = false;      // negative control: perturb t_id
};

int run_crosscheck(const CrosscheckArgs& args) {
    OracleBudget budget = budget_from_env();
    if (args.budget > 0) {
        budget.max_states = args.budget;
        budget.max_flood = args.budget;
    }
    int failures = 0, passes = 0, skips = 0;
    for (Surface surface : {Surface::Grid, Surface::Cylinder, Surface::Torus}) {
        for (long n = 1; n <= args.max_n; ++n) {
            for (long m = 1; m <= args.max_m; ++m) {
                GridShape shape{n, m, surface};
                for (const auto& R : all_subgroups(DihGroup::d8())) {
                    bool valid = true;
                    try {
                        check_group_for_surface(R, shape);
                    } catch (const std::invalid_argument&) {
                        valid = false;
                    }
                    if (!valid) continue;
                    auto classes = subgroup_classes(R);
                    for (size_t i = 0; i < classes.size(); ++i) {
                        OrbitSpec spec{R, {}};
                        for (size_t j = 0; j < classes.size(); ++j) {
                            spec.counts.emplace_back(classes[j].representative,
                                                     i == j ? 1 : 0);
                        }
                        TileDesignSet ts = realize_orbit_spec(spec);
                        FixedDesignTable t = fixed_design_table(ts);
                        if (args.corrupt) {
                            t.t[static_cast<size_t>(Dih::Id)] += 1;
                        }
                        std::cout << surface_name(surface) << " " << n << "x" << m
                                  << " R=" << R.name() << " orbit=<"
                                  << classes[i].representative.name() << "> : ";
                        try {
                            BigInt closed = count_tilings(shape, R, t);
                            BigInt oracle = count_orbits_direct(
                                full_symmetry_group(R, shape), shape, ts, budget);
                            bool ok = closed == oracle;
                            std::cout << "closed=" << closed.get_str()
                                      << " oracle=" << oracle.get_str() << " "
                                      << (ok ? "PASS" : "FAIL") << "\n";
                            ok ? ++passes : ++failures;
                        } catch (const BudgetExceeded&) {
                            std::cout << "SKIPPED (budget)\n";
                            ++skips;
                        } catch (const std::logic_error& e) {
                            // A non-exact Burnside sum is itself a mismatch.
                            std::cout << "FAIL (" << e.what() << ")\n";
                            ++failures;
                        }
                    }
                }
            }
        }
    }
    std::cout << "crosscheck: " << passes << " pass, " << failures << " fail, "
              << skips << " skipped\n";
    return failures == 0 ? kExitOk : kExitCrosscheckFail;
}

// ---- render ---------------------------------------------------------------

struct RenderArgs {
    std::string surface = "grid";
    long n = 2, m = 2;
    std::string group = "trivial";
    std::string tiles = "two-color";
    std::string format = "ascii";
    std::string out;
};

int run_render(const RenderArgs& args) {
    Surface surface = parse_surface_arg(args.surface);
    GridShape shape{args.n, args.m, surface};
    DihGroup R = parse_group_arg(args.group);
    check_surface_group(shape, R);
    TileDesignSet ts = load_tiles(args.tiles, R);
    auto reps = orbit_representatives(full_symmetry_group(R, shape), shape, ts,
                                      budget_from_env());
    std::string content;
    if (args.format == "svg") {
        content = render_gallery_svg(reps, ts);
    } else if (args.format == "ascii") {
        content = render_gallery_ascii(reps, ts);
    } else {
        throw UsageError("unknown render format: " + args.format);
    }
    write_output(args.out, content);
    return kExitOk;
}

// ---- tileset-info ---------------------------------------------------------

struct InfoArgs {
    std::string tiles = "two-color";
    std::string group;
};

int run_tileset_info(const InfoArgs& args) {
    std::optional<TileDesignSet> ts;
    if (!args.group.empty()) {
        ts = load_tiles(args.tiles, parse_group_arg(args.group));
    } else {
        for (const char* fallback : {"D8", "D4", "trivial"}) {
            try {
                ts = load_tiles(args.tiles, parse_group_arg(fallback));
                break;
            } catch (const ConfigError&) {
            }
        }
        if (!ts) throw ConfigError("cannot resolve tile set: " + args.tiles);
    }
    std::cout << "designs (" << ts->size() << "):";
    for (const auto& d : ts->designs()) std::cout << " " << d;
    std::cout << "\n" << orbit_spec_to_string(classify_orbits(*ts));
    std::cout << "fixed-design table:\n" << table_to_string(fixed_design_table(*ts));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tiling counts for the grid, cylinder, and torus"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count_cmd = app.add_subcommand("count", "Count tilings up to symmetry");
    count_cmd->add_option("--surface", count_args.surface, "grid|cylinder|torus");
    count_cmd->add_option("--n", count_args.n, "columns")->required();
    count_cmd->add_option("--m", count_args.m, "rows")->required();
    count_cmd->add_option("--group", count_args.group, "symmetry group");
    count_cmd->add_option("--tiles", count_args.tiles, "built-in name or config file");
    count_cmd->add_flag("--breakdown", count_args.breakdown,
                        "print per-element fixed-point counts");

    SequenceArgs seq_args;
    auto* seq_cmd = app.add_subcommand("sequence", "Emit a b-file or table");
    seq_cmd->add_option("--surface", seq_args.surface, "grid|cylinder|torus");
    seq_cmd->add_flag("--square", seq_args.square, "traverse n = m");
    seq_cmd->add_option("--group", seq_args.group, "symmetry group");
    seq_cmd->add_option("--tiles", seq_args.tiles, "built-in name or config file");
    seq_cmd->add_option("--from", seq_args.from, "first n");
    seq_cmd->add_option("--to", seq_args.to, "last n");
    seq_cmd->add_option("--m-from", seq_args.m_from, "first m (table mode)");
    seq_cmd->add_option("--m-to", seq_args.m_to, "last m (table mode)");
    seq_cmd->add_option("--offset", seq_args.offset, "index of the first term");
    seq_cmd->add_option("-o,--out", seq_args.out, "output file (default stdout)");

    CrosscheckArgs cc_args;
    auto* cc_cmd = app.add_subcommand("crosscheck",
                                      "Closed forms vs the brute-force oracle");
    cc_cmd->add_option("--max-n", cc_args.max_n, "largest n");
    cc_cmd->add_option("--max-m", cc_args.max_m, "largest m");
    cc_cmd->add_option("--budget", cc_args.budget, "oracle state budget");
    cc_cmd->add_flag("--corrupt", cc_args.corrupt,
                     "negative control: corrupt the t-table");

    RenderArgs render_args;
    auto* render_cmd = app.add_subcommand("render", "Gallery of orbit representatives");
    render_cmd->add_option("--surface", render_args.surface, "grid|cylinder|torus");
    render_cmd->add_option("--n", render_args.n, "columns")->required();
    render_cmd->add_option("--m", render_args.m, "rows")->required();
    render_cmd->add_option("--group", render_args.group, "symmetry group");
    render_cmd->add_option("--tiles", render_args.tiles, "built-in name or config file");
    render_cmd->add_option("--format", render_args.format, "svg|ascii");
    render_cmd->add_option("-o,--out", render_args.out, "output file (default stdout)");

    InfoArgs info_args;
    auto* info_cmd = app.add_subcommand("tileset-info",
                                        "Orbit census and t-table of a tile set");
    info_cmd->add_option("--tiles", info_args.tiles, "built-in name or config file");
    info_cmd->add_option("--group", info_args.group, "ambient group override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count_cmd->parsed()) return run_count(count_args);
        if (seq_cmd->parsed()) return run_sequence(seq_args);
        if (cc_cmd->parsed()) return run_crosscheck(cc_args);
        if (render_cmd->parsed()) return run_render(render_args);
        if (info_cmd->parsed()) return run_tileset_info(info_args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what()
                  << " (set TILECOUNT_MAX_STATES to override)\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
