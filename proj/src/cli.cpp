#include "frob/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "frob/analysis.hpp"
#include "frob/bounds.hpp"
#include "frob/dedekind.hpp"
#include "frob/emit.hpp"
#include "frob/exact.hpp"
#include "frob/montecarlo.hpp"

namespace frob::cli {

namespace {

Instance parse_instance(const std::vector<std::int64_t>& entries) {
    return Instance::validate(entries);
}

void print_bound(std::ostream& out, const BoundResult& b) {
    out << bound_kind_name(b.kind) << ": ";
    if (std::isnan(b.value))
        out << "n/a";
    else
        out << format_real(b.value);
    if (!b.applicable)
        out << "  [not applicable: " << b.reason << "]";
    else if (!b.reason.empty())
        out << "  [caveat: " << b.reason << "]";
    out << '\n';
}

std::optional<Axis> parse_axis(const std::string& name) {
    if (name == "a3") return Axis::A3;
    if (name == "prod12") return Axis::Prod12;
    if (name == "prod123") return Axis::Prod123;
    if (name == "sum") return Axis::Sum;
    return std::nullopt;
}

// Relative output paths resolve under FROB_OUT_DIR when set.
std::filesystem::path resolve_out_path(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_absolute())
        return p;
    if (const char* dir = std::getenv("FROB_OUT_DIR"))
        return std::filesystem::path(dir) / p;
    return p;
}

int run_frobenius(const std::vector<std::int64_t>& entries,
                  std::ostream& out) {
    out << frobenius_exact(parse_instance(entries)) << '\n';
    return exit_ok;
}

int run_bounds(const std::vector<std::int64_t>& entries,
               const std::string& kind, std::ostream& out, std::ostream& err) {
    const Instance inst = parse_instance(entries);
    if (kind == "all") {
        for (const auto& b : all_bounds(inst))
            print_bound(out, b);
        return exit_ok;
    }
    BoundResult b;
    if (kind == "ub1") b = ub_beck_corrected(inst);
    else if (kind == "ub2") b = ub_beck_original(inst);
    else if (kind == "eg") b = ub_classical(inst, BoundKind::ErdosGraham);
    else if (kind == "selmer") b = ub_classical(inst, BoundKind::Selmer);
    else if (kind == "vitek") b = ub_classical(inst, BoundKind::Vitek);
    else if (kind == "fr") b = ub_classical(inst, BoundKind::FukshanskyRobins);
    else if (kind == "pairwise") b = ub_pairwise_sylvester(inst);
    else if (kind == "lower") b = lower_odd_gap(inst);
    else {
        err << "unknown bound kind: " << kind << '\n';
        return exit_usage;
    }
    print_bound(out, b);
    return exit_ok;
}

int run_compare(const std::vector<std::int64_t>& entries, bool exact,
                std::ostream& out) {
    const Instance inst = parse_instance(entries);
    const std::int64_t a1 = inst.entry(0), a2 = inst.entry(1),
                       a3 = inst.entry(2);
    const auto b1 = ub_beck_corrected(inst);
    const auto b2 = ub_beck_original(inst);
    out << "triple: (" << a1 << ", " << a2 << ", " << a3 << ")\n";
    out << "ub1 (corrected): " << format_real(b1.value);
    if (!b1.applicable)
        out << "  [warning, not applicable: " << b1.reason << "]";
    out << '\n';
    out << "ub2 (original):  " << format_real(b2.value);
    if (!b2.applicable)
        out << "  [warning, not applicable: " << b2.reason << "]";
    out << '\n';
    out << "gap (ub2 - ub1): " << format_real(b2.value - b1.value) << '\n';
    const auto margin = condition9_margin(a1, a2, a3);
    out << "condition (9):   "
        << (margin < 0 ? "ub2 strictly sharper"
            : margin == 0 ? "tie (ub1 == ub2)"
                          : "ub1 sharper or equal")
        << '\n';
    if (exact) {
        out << "frobenius:       " << frobenius_exact(inst) << '\n';
    }
    return exit_ok;
}

int run_exceptions(bool allow_repeats, std::int64_t max_a3,
                   std::ostream& out) {
    EnumerationOptions opts;
    opts.allow_repeats = allow_repeats;
    opts.max_a3_for_open_families = max_a3;
    const auto result = enumerate_exceptional_triples(opts);
    for (const auto& t : result.all()) {
        out << '(' << t[0] << ',' << t[1] << ',' << t[2] << ')';
        if (std::find(result.ties.begin(), result.ties.end(), t) !=
            result.ties.end())
            out << "  [tie: ub1 == ub2, condition (9) holds with equality]";
        out << '\n';
    }
    return exit_ok;
}

int run_verify(std::ostream& out) {
    bool all_pass = true;
    auto render = [&](const std::vector<CheckResult>& checks) {
        for (const auto& c : checks) {
            out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  ("
                << c.detail << ")\n";
            all_pass = all_pass && c.pass;
        }
    };
    render(verify_counterexamples());
    render(verify_theorem6_table());
    out << (all_pass ? "verification passed" : "verification FAILED") << '\n';
    return all_pass ? exit_ok : exit_verify;
}

int run_dedekind(std::int64_t a, std::int64_t b, std::int64_t c,
                 std::int64_t t, std::ostream& out) {
    DedekindParams params{{a, b}, c, t};
    const double via_roots = fd_roots_of_unity(params);
    const double via_saw = fd_sawtooth(a, b, c, t);
    const double diff = std::abs(via_roots - via_saw);
    out << "sigma_" << t << "(" << a << "," << b << ";" << c << ")\n";
    out << "roots-of-unity: " << format_real(via_roots) << '\n';
    out << "sawtooth sum:   " << format_real(via_saw) << '\n';
    out << "|difference|:   " << diff << (diff < 1e-9 ? "  (agree)" : "  (DISAGREE)")
        << '\n';
    out << "lower bound:    " << format_real(sigma_lower_bound(c)) << '\n';
    return diff < 1e-9 ? exit_ok : exit_verify;
}

struct SimulateArgs {
    SimulationConfig cfg;
    std::string axis = "a3";
    bool axis_given = false;
    std::string out_path;
    std::string format = "csv";
    bool log_x = false;
    std::size_t svg_max_points = 0;
    std::int64_t bucket_width = 0;
};

int run_simulate(const SimulateArgs& args, std::ostream& out,
                 std::ostream& err) {
    const auto axis = parse_axis(args.axis);
    if (!axis) {
        err << "unknown axis: " << args.axis << '\n';
        return exit_usage;
    }

    std::ostringstream buffer;
    std::ostream* sink = &out;
    std::ofstream file;
    std::filesystem::path target;
    if (!args.out_path.empty()) {
        target = resolve_out_path(args.out_path);
        file.open(target);
        if (!file) {
            err << "cannot open output path: " << target.string() << '\n';
            return exit_io;
        }
        sink = &file;
    }

    const auto records = run_simulation(args.cfg);
    if (args.format == "csv" || args.format == "json") {
        const bool json = args.format == "json";
        if (args.axis_given) {
            const auto rows = aggregate(records, *axis, args.bucket_width);
            json ? write_json(*sink, rows) : write_csv(*sink, rows);
        } else {
            json ? write_json(*sink, records) : write_csv(*sink, records);
        }
    } else if (args.format == "svg-scatter") {
        SvgOptions opts;
        opts.axis = *axis;
        opts.log_x = args.log_x;
        opts.max_points = args.svg_max_points;
        opts.note = "seed=" + std::to_string(args.cfg.seed) +
                    " iterations=" + std::to_string(args.cfg.iterations) +
                    " max_entry=" + std::to_string(args.cfg.max_entry);
        write_svg_scatter(*sink, records, opts);
    } else {
        err << "unknown format: " << args.format << '\n';
        return exit_usage;
    }
    if (sink == &file) {
        file.flush();
        if (!file) {
            err << "write failed (partial output at " << target.string()
                << ")\n";
            return exit_io;
        }
        out << "wrote " << records.size() << " records to " << target.string()
            << '\n';
    }
    return exit_ok;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"Frobenius numbers, upper/lower bounds, and bound-tightness "
                 "analysis"};
    app.require_subcommand(1);

    std::vector<std::int64_t> entries;
    auto* cmd_frob = app.add_subcommand("frobenius",
                                        "exact Frobenius number of a vector");
    cmd_frob->add_option("entries", entries, "positive integers (>= 2 of them)")
        ->required()
        ->expected(-2);

    std::vector<std::int64_t> bound_entries;
    std::string bound_kind = "all";
    auto* cmd_bounds = app.add_subcommand("bounds", "evaluate bound formulas");
    cmd_bounds->add_option("entries", bound_entries, "positive integers")
        ->required()
        ->expected(-2);
    cmd_bounds->add_option("--kind", bound_kind,
                           "all|ub1|ub2|eg|selmer|vitek|fr|pairwise|lower");

    std::vector<std::int64_t> cmp_entries;
    bool cmp_exact = false;
    auto* cmd_cmp = app.add_subcommand("compare",
                                       "ub1 vs ub2 tightness on a triple");
    cmd_cmp->add_option("entries", cmp_entries, "a1 a2 a3")
        ->required()
        ->expected(3);
    cmd_cmp->add_flag("--exact", cmp_exact, "also compute F exactly");

    bool allow_repeats = false;
    std::int64_t max_a3 = 100;
    auto* cmd_exc = app.add_subcommand(
        "exceptions", "triples where ub2 is at least as tight as ub1");
    cmd_exc->add_flag("--allow-repeats", allow_repeats,
                      "include the (1,1,k) family the published table omits");
    cmd_exc->add_option("--max-a3", max_a3,
                        "a3 cutoff for families with no crossover");

    auto* cmd_verify = app.add_subcommand(
        "verify", "counterexample and tabulated-value regression checks");

    std::vector<std::int64_t> dd;
    auto* cmd_dd = app.add_subcommand(
        "dedekind", "Fourier-Dedekind sum via both evaluation routes");
    cmd_dd->add_option("params", dd, "a b c t")->required()->expected(4);

    SimulateArgs sim;
    auto* cmd_sim = app.add_subcommand("simulate",
                                       "seeded bound-tightness sampling run");
    cmd_sim->add_option("--seed", sim.cfg.seed, "rng seed")->required();
    cmd_sim->add_option("--iters", sim.cfg.iterations, "number of records");
    cmd_sim->add_option("--max-norm", sim.cfg.max_entry,
                        "maximum entry value");
    cmd_sim->add_option("--dim", sim.cfg.dimension, "entries per draw (>= 3)");
    cmd_sim->add_flag("--exact", sim.cfg.compute_exact,
                      "compute F per record (max-norm <= 2000)");
    auto* axis_opt = cmd_sim->add_option(
        "--axis", sim.axis,
        "aggregate by a3|prod12|prod123|sum (csv/json); x-axis for svg");
    cmd_sim->add_option("--out", sim.out_path,
                        "output path (FROB_OUT_DIR resolves relative paths)");
    cmd_sim->add_option("--format", sim.format, "csv|json|svg-scatter");
    cmd_sim->add_flag("--log-x", sim.log_x, "log10 x-axis for svg output");
    cmd_sim->add_option("--svg-max-points", sim.svg_max_points,
                        "downsample svg beyond this many points (0 = all)");
    cmd_sim->add_option("--bucket-width", sim.bucket_width,
                        "aggregate bucket width (0 = exact keys)");
    cmd_sim->add_option("--workers", sim.cfg.workers,
                        "worker threads (0 = hardware)");

    std::vector<const char*> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("frob");
    for (const auto& a : args)
        argv_storage.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv_storage.size()),
                  argv_storage.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        // CLI11's own exit codes cover --help (0); anything else is usage.
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (cmd_frob->parsed())
            return run_frobenius(entries, out);
        if (cmd_bounds->parsed())
            return run_bounds(bound_entries, bound_kind, out, err);
        if (cmd_cmp->parsed())
            return run_compare(cmp_entries, cmp_exact, out);
        if (cmd_exc->parsed())
            return run_exceptions(allow_repeats, max_a3, out);
        if (cmd_verify->parsed())
            return run_verify(out);
        if (cmd_dd->parsed())
            return run_dedekind(dd[0], dd[1], dd[2], dd[3], out);
        if (cmd_sim->parsed()) {
            sim.axis_given = axis_opt->count() > 0;
            return run_simulate(sim, out, err);
        }
        err << "no subcommand\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const resource_limit_error& e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }
}

int dispatch(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dispatch(args, std::cout, std::cerr);
}

} // namespace frob::cli
