#include "nmqc/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "nmqc/assignment.hpp"
#include "nmqc/circuits.hpp"
#include "nmqc/constructions.hpp"
#include "nmqc/feasibility.hpp"

namespace nmqc {

namespace {

using clock_type = std::chrono::steady_clock;

std::string fmt3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

ConstructionReport build_report(Fn& f, const std::string& method) {
    if (method == "fr") return construct_fr(f);
    if (method == "ef") return construct_ef(f);
    if (method == "kr") return construct_kr(f);
    if (method == "csf") return construct_csf(f);
    if (method == "sc") return construct_sc(f);
    throw std::invalid_argument("unknown method " + method);
}

bool verify_report(const ConstructionReport& rep, Fn& f, std::uint64_t seed) {
    if (f.sym) return verify_mod2(rep.poly, *f.sym);
    if (f.n <= 14) return verify_mod2(rep.poly, f.ensure_dense());
    return verify_mod2_sampled(rep.poly, f, 4096, seed);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

mask_t parse_point(const std::string& bits, int n) {
    if (static_cast<int>(bits.size()) != n)
        throw std::invalid_argument("input needs exactly " + std::to_string(n) + " bits");
    mask_t x = 0;
    for (int i = 0; i < n; ++i) {
        if (bits[i] == '1')
            x |= bit(i);
        else if (bits[i] != '0')
            throw std::invalid_argument("inputs are bit strings");
    }
    return x;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

struct CommonArgs {
    std::string fn_spec, method = "fr", assign_file;
};

MeasurementAssignment resolve_assignment(const CommonArgs& args, std::uint64_t seed,
                                         bool raw) {
    if (!args.assign_file.empty())
        return MeasurementAssignment::from_json(read_file(args.assign_file));
    if (args.fn_spec.empty())
        throw std::invalid_argument("needs --fn or --assign");
    Fn f = parse_fn(args.fn_spec);
    ConstructionReport rep = build_report(f, args.method);
    if (!verify_report(rep, f, seed)) throw std::domain_error("representative fails mod-2 check");
    MeasurementAssignment a = assignment_from_poly(rep.poly);
    if (!raw) normalize(a);
    return a;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"compiler and analyzer for deterministic GHZ parity programs"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 12345;
    bool timings = false;
    double budget_ms = 0;
    if (const char* env = std::getenv("NMQC_TIME_BUDGET_MS")) budget_ms = std::atof(env);
    app.add_option("--seed", seed, "random seed recorded in output headers");
    app.add_flag("--timings", timings, "report measured times instead of zeros");
    app.add_option("--time-budget-ms", budget_ms, "abort with exit 4 past this runtime");

    CommonArgs common;
    std::string point, out_file, out_poly, out_assign, format = "csv";
    bool all_points = false, raw = false, assert_feasible = false, assert_pattern = false;
    bool show_witness = false;
    int shots = 10000, t_param = 0;
    double epsilon = 0.01, c_const = 2.5;
    std::string ghz_variant = "log", k_list = "2,4,6,8", n_range = "8..16", t_rel_list = "-1,0";

    CLI::App* compile = app.add_subcommand("compile", "build and verify a representative");
    compile->add_option("--fn", common.fn_spec, "function spec")->required();
    compile->add_option("--method", common.method, "fr|ef|kr|csf|sc");
    compile->add_flag("--raw", raw, "skip angle normalization");
    compile->add_option("--out-poly", out_poly, "write the polynomial json here");
    compile->add_option("--out-assign", out_assign, "write the assignment json here");

    CLI::App* eval = app.add_subcommand("eval", "evaluate a compiled strategy");
    eval->add_option("--fn", common.fn_spec, "function spec");
    eval->add_option("--method", common.method, "fr|ef|kr|csf|sc");
    eval->add_option("--assign", common.assign_file, "assignment json file");
    eval->add_option("--x", point, "input bits x1..xn");
    eval->add_flag("--all", all_points, "whole truth table, lowest index first");

    CLI::App* simulate = app.add_subcommand("simulate", "sample measurement outcomes");
    simulate->add_option("--fn", common.fn_spec, "function spec");
    simulate->add_option("--method", common.method, "fr|ef|kr|csf|sc");
    simulate->add_option("--assign", common.assign_file, "assignment json file");
    simulate->add_option("--x", point, "input bits x1..xn")->required();
    simulate->add_option("--shots", shots, "sample count");
    simulate->add_flag("--raw", raw, "skip angle normalization");

    CLI::App* cost = app.add_subcommand("cost", "stage-by-stage circuit cost");
    cost->add_option("--fn", common.fn_spec, "function spec");
    cost->add_option("--method", common.method, "fr|ef|kr|csf|sc");
    cost->add_option("--assign", common.assign_file, "assignment json file");
    cost->add_option("--epsilon", epsilon, "synthesis accuracy")->check(CLI::Range(1e-12, 1.0));
    cost->add_option("--c", c_const, "synthesis length constant");
    cost->add_option("--ghz", ghz_variant, "log|const preparation variant");

    CLI::App* netlist = app.add_subcommand("netlist", "emit the gate-list circuit");
    netlist->add_option("--fn", common.fn_spec, "function spec");
    netlist->add_option("--method", common.method, "fr|ef|kr|csf|sc");
    netlist->add_option("--assign", common.assign_file, "assignment json file");
    netlist->add_flag("--raw", raw, "skip angle normalization");
    netlist->add_option("--out", out_file, "write the netlist here");

    CLI::App* feasible = app.add_subcommand("feasible", "window support decision");
    feasible->add_option("--fn", common.fn_spec, "symmetric function spec")->required();
    feasible->add_option("--t", t_param, "window half-width")->required();
    feasible->add_flag("--assert-feasible", assert_feasible, "exit 5 when infeasible");
    feasible->add_flag("--witness", show_witness, "print the witness class profile");

    CLI::App* scan = app.add_subcommand("scan", "feasibility over a (k, n, t) grid");
    scan->add_option("--k", k_list, "comma list of threshold degrees");
    scan->add_option("--n", n_range, "arity range lo..hi");
    scan->add_option("--t-rel", t_rel_list, "window offsets relative to k/2");
    scan->add_flag("--assert-pattern", assert_pattern,
                   "exit 5 unless feasible exactly when t >= k/2");
    scan->add_option("--out", out_file, "write the csv here");

    CLI::App* compare = app.add_subcommand("compare", "all construction methods side by side");
    compare->add_option("--fn", common.fn_spec, "function spec")->required();
    compare->add_option("--format", format, "csv|json");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto start = clock_type::now();
    auto elapsed = [&] {
        return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
    };
    auto shown = [&](double ms) { return timings ? ms : 0.0; };
    auto over_budget = [&] { return budget_ms > 0 && elapsed() > budget_ms; };

    try {
        if (app.got_subcommand(compile)) {
            std::cout << "# nmqc compile seed=" << seed << "\n";
            Fn f = parse_fn(common.fn_spec);
            ConstructionReport rep = build_report(f, common.method);
            bool ok = verify_report(rep, f, seed);
            MeasurementAssignment a = assignment_from_poly(rep.poly);
            if (!raw) normalize(a);
            std::cout << "method=" << rep.method << " n=" << rep.n << " k=" << rep.sparsity
                      << " granularity=" << rep.granularity
                      << " clifford_level=" << clifford_level(a) << " verified=" << (ok ? 1 : 0)
                      << " elapsed_ms=" << fmt3(shown(rep.elapsed_ms)) << "\n";
            if (out_poly.empty())
                std::cout << "poly: " << rep.poly.to_json() << "\n";
            else
                write_file(out_poly, rep.poly.to_json() + "\n");
            if (out_assign.empty())
                std::cout << "assignment: " << a.to_json() << "\n";
            else
                write_file(out_assign, a.to_json() + "\n");
            if (!ok) return 3;
        } else if (app.got_subcommand(eval)) {
            MeasurementAssignment a = resolve_assignment(common, seed, false);
            std::cout << "# nmqc eval seed=" << seed << "\n";
            if (all_points != point.empty())
                throw std::invalid_argument("needs exactly one of --x and --all");
            if (all_points) {
                if (a.n > 20) throw std::length_error("truth table too wide to print");
                std::string table(std::size_t{1} << a.n, '0');
                for (mask_t x = 0; x < (mask_t{1} << a.n); ++x)
                    if (evaluate_deterministic(a, x)) table[static_cast<std::size_t>(x)] = '1';
                std::cout << table << "\n";
            } else {
                std::cout << (evaluate_deterministic(a, parse_point(point, a.n)) ? 1 : 0)
                          << "\n";
            }
        } else if (app.got_subcommand(simulate)) {
            MeasurementAssignment a = resolve_assignment(common, seed, raw);
            std::cout << "# nmqc simulate seed=" << seed << "\n";
            mask_t x = parse_point(point, a.n);
            auto outcomes = sample_outcomes(a, x, shots, seed);
            long ones = 0;
            for (auto b : outcomes) ones += b;
            double alpha = a.angle_sum_t(x).get_d();
            double p_odd = (1.0 - std::cos(alpha * M_PI)) / 2.0;
            double p_one = a.final_constant ? 1.0 - p_odd : p_odd;
            std::cout << "x=" << point << " shots=" << shots << " ones=" << ones
                      << " rate=" << fmt3(double(ones) / shots) << " p=" << fmt3(p_one) << "\n";
        } else if (app.got_subcommand(cost)) {
            MeasurementAssignment a = resolve_assignment(common, seed, false);
            std::cout << "# nmqc cost seed=" << seed << "\n";
            CostOptions opts{epsilon, c_const};
            if (ghz_variant != "const" && ghz_variant != "log")
                throw std::invalid_argument("ghz variant must be log or const");
            CircuitCost ghz_cost =
                ghz_variant == "const" ? ghz_const_depth_cost(a.k) : ghz_log_cost(a.k);
            std::cout << "stage,depth,width,gates,exact\n";
            auto row = [&](const char* name, const CircuitCost& cc) {
                std::cout << name << "," << fmt3(cc.depth) << "," << fmt3(cc.width) << ","
                          << fmt3(cc.gates) << "," << (cc.exact ? 1 : 0) << "\n";
            };
            row("linear", linear_stage_cost(a));
            row("ghz", ghz_cost);
            row("measure", measurement_layer_cost(a, opts));
            row("post", post_stage_cost(a.k));
            row("total", total_cost(a, opts));
        } else if (app.got_subcommand(netlist)) {
            MeasurementAssignment a = resolve_assignment(common, seed, raw);
            std::cout << "# nmqc netlist seed=" << seed << "\n";
            std::string text = emit_netlist(a).to_json();
            if (out_file.empty())
                std::cout << text << "\n";
            else
                write_file(out_file, text + "\n");
        } else if (app.got_subcommand(feasible)) {
            Fn f = parse_fn(common.fn_spec);
            if (!f.sym) throw std::invalid_argument("feasible needs a symmetric function");
            std::cout << "# nmqc feasible seed=" << seed << "\n";
            auto support = profile_support(f.n, t_param);
            FeasibilityResult res = decide_symmetric_support(*f.sym, support);
            std::cout << "n=" << f.n << " t=" << t_param << " feasible=" << (res.feasible ? 1 : 0)
                      << " snf_max_diag_bits=" << res.snf_max_diag_bits << "\n";
            if (res.feasible && show_witness) {
                auto profile = witness_profile(*f.sym, res.witness, support);
                std::cout << "profile:";
                for (int i = 0; i <= f.n; ++i)
                    if (profile[i] != 0) std::cout << " " << i << ":" << rat_str(profile[i]);
                std::cout << "\n";
            }
            if (assert_feasible && !res.feasible) return 5;
        } else if (app.got_subcommand(scan)) {
            std::cout << "# nmqc scan seed=" << seed << "\n";
            auto ks = parse_int_list(k_list);
            auto [n_lo, n_hi] = parse_range(n_range);
            auto ts_rel = parse_int_list(t_rel_list);
            std::vector<ScanRow> rows;
            for (int k : ks) {
                for (int n = std::max(n_lo, k); n <= n_hi; ++n) {
                    auto part = conjecture_scan({k}, n, n, ts_rel);
                    rows.insert(rows.end(), part.begin(), part.end());
                    if (over_budget()) {
                        std::cerr << "time budget exceeded\n";
                        return 4;
                    }
                }
            }
            if (!timings)
                for (auto& r : rows) r.elapsed_ms = 0.0;
            std::string csv = scan_csv(rows);
            if (out_file.empty())
                std::cout << csv;
            else
                write_file(out_file, csv);
            if (assert_pattern)
                for (const auto& r : rows)
                    if (r.feasible != (r.t >= (r.k + 1) / 2)) return 5;
        } else if (app.got_subcommand(compare)) {
            std::cout << "# nmqc compare seed=" << seed << "\n";
            Fn f = parse_fn(common.fn_spec);
            double budget = budget_ms > 0 ? budget_ms : 30000.0;
            auto rows = compare_all(f, budget);
            if (format == "json") {
                std::string sep;
                std::cout << "[";
                for (const auto& r : rows) {
                    std::cout << sep << "{\"method\":\"" << r.method << "\",\"ok\":"
                              << (r.ok ? "true" : "false") << ",\"sparsity\":\"" << r.sparsity
                              << "\",\"granularity\":" << r.granularity << ",\"elapsed_ms\":"
                              << fmt3(shown(r.elapsed_ms)) << ",\"note\":\"" << r.note << "\"}";
                    sep = ",";
                }
                std::cout << "]\n";
            } else if (format == "csv") {
                std::cout << "method,ok,sparsity,granularity,elapsed_ms,note\n";
                for (const auto& r : rows)
                    std::cout << r.method << "," << (r.ok ? 1 : 0) << "," << r.sparsity << ","
                              << r.granularity << "," << fmt3(shown(r.elapsed_ms)) << "," << r.note
                              << "\n";
            } else {
                throw std::invalid_argument("format must be csv or json");
            }
        }
        if (over_budget()) {
            std::cerr << "time budget exceeded\n";
            return 4;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 4;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource limit: out of memory\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace nmqc
