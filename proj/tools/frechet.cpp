// Batch front end for the Fréchet bounds engine.
//
// Commands:
//   bounds     marginals in, cumulative bounds and extracted tables out
//   check      marginals + candidate table in, membership/sandwich report out
//   sample     draw seeded random members and verify each against the bounds
//   verify     run the randomized property suites
//   residuate  greatest solution of A ⊙ X <= B (left) or X ⊙ B <= A (right)
//
// Exit codes: 0 success, 1 domain failure (infeasible marginals, non-member
// table, property failure), 2 input error (flags, parse, shape).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "maxplus/maxplus.hpp"

namespace {

using namespace maxplus;

struct RunConfig {
    std::string command;
    std::string input;
    std::string output;
    io::Format format = io::Format::json;
    io::NumericMode mode;
    std::uint64_t seed = 0;
    std::int64_t count = -1;  // -1: per-command default
    std::string side = "left";
};

std::string read_input(const RunConfig& cfg) {
    if (cfg.input.empty())
        throw ParseError("command '" + cfg.command + "' needs --input");
    std::ifstream in(cfg.input, std::ios::binary);
    if (!in) throw ParseError("cannot open input file: " + cfg.input);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw ParseError("cannot open output file: " + cfg.output);
    out << text;
}

std::string dump(const io::Json& doc) { return doc.dump(2) + "\n"; }

const char* name(bool b) { return b ? "true" : "false"; }

template <class T>
Compare<T> comparator(const RunConfig& cfg) {
    if constexpr (std::is_same_v<T, double>)
        return Compare<double>{cfg.mode.epsilon};
    else
        return Compare<T>{};
}

template <class T>
int cmd_bounds(const RunConfig& cfg) {
    auto problem = io::parse_problem<T>(read_input(cfg), cfg.format);
    const Marginals<T>& inst = problem.marginals;
    Compare<T> cmp = comparator<T>(cfg);
    require_feasible(inst, cmp);
    BoundsResult<T> b = compute_bounds(inst, cmp);
    if (cfg.format == io::Format::json)
        write_output(cfg, dump(io::bounds_to_json(inst, b)));
    else
        write_output(cfg, io::bounds_to_csv(inst, b));
    return 0;
}

template <class T>
int cmd_check(const RunConfig& cfg) {
    auto problem = io::parse_problem<T>(read_input(cfg), cfg.format);
    const Marginals<T>& inst = problem.marginals;
    if (!problem.table)
        throw ParseError("command 'check' needs a candidate table");
    Compare<T> cmp = comparator<T>(cfg);
    require_feasible(inst, cmp);
    const Dense<T>& table = *problem.table;
    bool member = matches_marginals(table, inst, cmp);
    bool tropical_member = matches_marginals_tropical(table, inst, cmp);
    // The sandwich flags stay meaningful for non-members, so compute them
    // directly instead of going through the throwing membership gate.
    BoundsResult<T> b = compute_bounds(inst, cmp);
    Dense<T> cum = cumulative_table(table);
    bool lower_ok = entrywise_le(b.lower_cumulative, cum, cmp);
    bool upper_ok = entrywise_le(cum, b.upper_cumulative, cmp);
    if (cfg.format == io::Format::json) {
        io::Json doc{{"member", member},
                     {"tropical_member", tropical_member},
                     {"lower_ok", lower_ok},
                     {"upper_ok", upper_ok}};
        write_output(cfg, dump(doc));
    } else {
        std::string out;
        out += std::string("member,") + name(member) + "\n";
        out += std::string("tropical_member,") + name(tropical_member) + "\n";
        out += std::string("lower_ok,") + name(lower_ok) + "\n";
        out += std::string("upper_ok,") + name(upper_ok) + "\n";
        write_output(cfg, out);
    }
    return member && tropical_member ? 0 : 1;
}

template <class T>
int cmd_sample(const RunConfig& cfg) {
    auto problem = io::parse_problem<T>(read_input(cfg), cfg.format);
    const Marginals<T>& inst = problem.marginals;
    Compare<T> cmp = comparator<T>(cfg);
    require_feasible(inst, cmp);
    std::int64_t count = cfg.count < 0 ? 1 : cfg.count;
    if (count < 1) throw ParseError("sample needs --count >= 1");
    bool all_ok = true;
    io::Json samples = io::Json::array();
    std::string csv;
    for (std::int64_t k = 0; k < count; ++k) {
        Dense<T> table =
            sample_feasible(inst, cfg.seed + std::uint64_t(k), cmp);
        bool member = matches_marginals(table, inst, cmp) &&
                      matches_marginals_tropical(table, inst, cmp);
        bool lower_ok = false, upper_ok = false;
        if (member) {
            SandwichReport rep = sandwich_check(table, inst, cmp);
            lower_ok = rep.lower_ok;
            upper_ok = rep.upper_ok;
        }
        bool ok = member && lower_ok && upper_ok;
        all_ok = all_ok && ok;
        if (cfg.format == io::Format::json) {
            samples.push_back(io::Json{{"table", io::table_to_json(table)},
                                       {"member", member},
                                       {"lower_ok", lower_ok},
                                       {"upper_ok", upper_ok}});
        } else {
            csv += "# sample," + std::to_string(k) + ",member," +
                   name(member) + ",lower_ok," + name(lower_ok) +
                   ",upper_ok," + name(upper_ok) + "\n";
            io::table_to_csv(csv, table);
        }
    }
    if (cfg.format == io::Format::json) {
        io::Json doc{{"n", inst.n()},
                     {"m", inst.m()},
                     {"seed", cfg.seed},
                     {"count", count},
                     {"samples", std::move(samples)}};
        write_output(cfg, dump(doc));
    } else {
        write_output(cfg, csv);
    }
    return all_ok ? 0 : 1;
}

template <class T>
int cmd_verify(const RunConfig& cfg) {
    selfcheck::Options opt;
    opt.seed = cfg.seed;
    if (cfg.count >= 0) opt.iterations = std::size_t(cfg.count);
    if (opt.iterations == 0)
        std::cerr << "warning: 0 iterations requested, suites pass vacuously\n";
    selfcheck::Checker<T> checker(opt, comparator<T>(cfg));
    std::vector<selfcheck::SuiteResult> results = checker.run_all();
    bool ok = selfcheck::all_ok(results);
    if (cfg.format == io::Format::json) {
        io::Json suites = io::Json::array();
        for (const auto& r : results)
            suites.push_back(io::Json{{"name", r.name},
                                      {"runs", r.runs},
                                      {"failures", r.failures},
                                      {"counterexample", r.counterexample}});
        write_output(cfg, dump(io::Json{{"suites", std::move(suites)},
                                        {"ok", ok}}));
    } else {
        std::string out = "# suite,runs,failures\n";
        for (const auto& r : results) {
            out += r.name + "," + std::to_string(r.runs) + "," +
                   std::to_string(r.failures) + "\n";
            if (!r.counterexample.is_null())
                out += "# counterexample: " + r.counterexample.dump() + "\n";
        }
        out += std::string("ok,") + name(ok) + "\n";
        write_output(cfg, out);
    }
    if (!ok) {
        for (const auto& r : results)
            if (!r.ok())
                std::cerr << "suite " << r.name << " failed ("
                          << r.failures << "/" << r.runs
                          << "), counterexample: "
                          << r.counterexample.dump() << "\n";
        return 1;
    }
    return 0;
}

template <class T>
int cmd_residuate(const RunConfig& cfg) {
    auto [a, b] = io::parse_matrix_pair<T>(read_input(cfg), cfg.format);
    TropMatrix<T> result =
        cfg.side == "right" ? rdiv(a, b) : ldiv(a, b);
    if (cfg.format == io::Format::json) {
        write_output(cfg, dump(io::Json{
                              {"side", cfg.side},
                              {"result", io::trop_matrix_to_json(result)}}));
    } else {
        std::string out;
        for (std::size_t i = 0; i < result.rows(); ++i) {
            for (std::size_t j = 0; j < result.cols(); ++j) {
                if (j) out += ',';
                out += to_string(result.at(i, j));
            }
            out += '\n';
        }
        write_output(cfg, out);
    }
    return 0;
}

template <class T>
int dispatch(const RunConfig& cfg) {
    if (cfg.command == "bounds") return cmd_bounds<T>(cfg);
    if (cfg.command == "check") return cmd_check<T>(cfg);
    if (cfg.command == "sample") return cmd_sample<T>(cfg);
    if (cfg.command == "verify") return cmd_verify<T>(cfg);
    return cmd_residuate<T>(cfg);
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    std::string format = "json";
    std::string mode = "exact";

    CLI::App app{"Fréchet contingency bounds over max-plus arithmetic"};
    app.require_subcommand(1);
    app.add_option("--input", cfg.input, "input file (CSV or JSON)");
    app.add_option("--output", cfg.output,
                   "output file (default: standard output)");
    app.add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--mode", mode, "exact or float")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--epsilon", cfg.mode.epsilon,
                   "comparison tolerance in float mode");
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--count", cfg.count,
                   "samples to draw / verify iterations");
    app.add_option("--side", cfg.side, "residuation side")
        ->check(CLI::IsMember({"left", "right"}));

    for (const char* sub : {"bounds", "check", "sample", "verify", "residuate"})
        app.add_subcommand(sub)->fallthrough();
    app.get_subcommand("bounds")->description(
        "compute cumulative bounds and their tables from marginals");
    app.get_subcommand("check")->description(
        "test a candidate table for membership and the sandwich property");
    app.get_subcommand("sample")->description(
        "draw seeded random members and verify them against the bounds");
    app.get_subcommand("verify")->description(
        "run the randomized property suites");
    app.get_subcommand("residuate")->description(
        "greatest solution of a one-sided tropical linear inequality");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = format == "csv" ? io::Format::csv : io::Format::json;
    cfg.mode.kind = mode == "float" ? io::NumericMode::Kind::floating
                                    : io::NumericMode::Kind::exact;

    try {
        if (cfg.mode.kind == io::NumericMode::Kind::exact)
            return dispatch<Rational>(cfg);
        return dispatch<double>(cfg);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OverflowError& e) {
        std::cerr << "error: input exceeds the exact 64-bit range: "
                  << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
