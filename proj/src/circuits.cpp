#include "nmqc/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace nmqc {

using ordered_json = nlohmann::ordered_json;

namespace {

int ceil_log2(int k) {
    int d = 0;
    while ((1 << d) < k) ++d;
    return d;
}

long scratch_bits(const MeasurementAssignment& a) {
    long total = 0;
    for (const auto& q : a.qubits) {
        int d = popcount(q.selector.s);
        if (d >= 2) total += d - 1;
    }
    return total;
}

// phase exponent: P(pi t) = S^e with e = 2t mod 4, defined for half-integer t
int phase_exponent(const Rat& t) {
    Rat doubled = 2 * t;
    if (!is_integer(doubled)) return -1;
    Int e = doubled.get_num() % 4;
    if (e < 0) e += 4;
    return static_cast<int>(e.get_si());
}

struct QubitPlan {
    // basis-change gates split around the Hadamard: phase gates first, the
    // conditional and unconditional X corrections after
    std::vector<Gate> before_h;
    std::vector<Gate> after_h;
    int emitted = 0;
};

QubitPlan plan_basis_change(const QubitSpec& q, int qubit, int cond_bit, int cond_val) {
    QubitPlan plan;
    auto phase = [&](const Rat& t, bool conditional) {
        // wanted: P(-pi t) ahead of the H
        if (t == 0) return;
        if (conditional && q.selector.s == 0 && !q.selector.a0) return;
        bool constant_on = q.selector.s == 0 && q.selector.a0;
        int e = phase_exponent(Angle(-t).t());
        Gate g;
        g.q = {qubit};
        if (conditional && !constant_on) {
            g.cond_bit = cond_bit;
            g.cond_val = cond_val;
        }
        if (e < 0) {
            g.g = "rz";
            g.t = Angle(-t).t();
            plan.before_h.push_back(std::move(g));
        } else if (e == 1) {
            g.g = "s";
            plan.before_h.push_back(std::move(g));
        } else if (e == 3) {
            g.g = "sdg";
            plan.before_h.push_back(std::move(g));
        } else if (e == 2) {
            // a Z ahead of the H is an X behind it
            g.g = "x";
            plan.after_h.push_back(std::move(g));
        }
        ++plan.emitted;
    };
    phase(q.theta.t(), false);
    phase(q.phi.t(), true);
    Gate h;
    h.g = "h";
    h.q = {qubit};
    plan.before_h.push_back(std::move(h));
    ++plan.emitted;
    return plan;
}

}  // namespace

CircuitCost linear_stage_cost(const MeasurementAssignment& a) {
    CircuitCost c;
    for (const auto& q : a.qubits) {
        int d = popcount(q.selector.s);
        if (d < 2) continue;
        c.depth = std::max(c.depth, double(ceil_log2(d)));
        c.width += d;
        c.gates += d - 1;
    }
    return c;
}

CircuitCost post_stage_cost(int k) {
    if (k < 1) throw std::invalid_argument("outcome count must be positive");
    return {double(ceil_log2(k)), double(k), double(k - 1), true};
}

CircuitCost ghz_log_cost(int k) {
    if (k < 1) throw std::invalid_argument("qubit count must be positive");
    return {double(ceil_log2(k) + 1), double(k), double(k), true};
}

CircuitCost ghz_const_depth_cost(int k) {
    if (k < 4 || k % 2) throw std::invalid_argument("needs an even qubit count of at least 4");
    double gates = std::floor(k * k / 8.0 + 11.0 * k / 4.0 - 4.0);
    return {double(6 + ceil_log2(k / 2 - 1)), double(k), gates, true};
}

CircuitCost measurement_layer_cost(const MeasurementAssignment& a, const CostOptions& opts) {
    int level = clifford_level(a);
    if (level >= 3) {
        CircuitCost c;
        c.exact = false;
        double term = 2.0 + std::log2(double(a.k)) + std::log2(1.0 / opts.epsilon);
        c.depth = 4.0 * opts.c * term;
        c.width = a.k;
        c.gates = 4.0 * opts.c * a.k * std::log2(4.0 * a.k / opts.epsilon);
        return c;
    }
    CircuitCost c;
    c.width = a.k;
    for (int q = 0; q < a.k; ++q) {
        QubitPlan plan = plan_basis_change(a.qubits[q], q, 0, 1);
        c.gates += plan.emitted;
        c.depth = std::max(c.depth, double(plan.before_h.size() + plan.after_h.size()));
    }
    return c;
}

CircuitCost total_cost(const MeasurementAssignment& a, const CostOptions& opts) {
    if (a.k < 1) throw std::invalid_argument("empty assignment");
    int level = clifford_level(a);
    double scratch = double(scratch_bits(a));
    if (level >= 3) {
        CircuitCost c;
        c.exact = false;
        double k = a.k;
        double term = 2.0 + std::log2(k) + std::log2(1.0 / opts.epsilon);
        c.depth = 2.0 * std::log2(k) + 4.0 * opts.c * term;
        c.width = k + scratch;
        c.gates = scratch + k * (2.0 + 4.0 * opts.c * term);
        return c;
    }
    CircuitCost lin = linear_stage_cost(a);
    CircuitCost ghz = ghz_log_cost(a.k);
    CircuitCost meas = measurement_layer_cost(a, opts);
    CircuitCost post = post_stage_cost(a.k);
    CircuitCost c;
    c.exact = true;
    c.depth = lin.depth + ghz.depth + meas.depth + post.depth;
    c.width = a.k + scratch;
    c.gates = lin.gates + ghz.gates + meas.gates + post.gates;
    return c;
}

Netlist emit_netlist(const MeasurementAssignment& a) {
    if (a.k < 1) throw std::invalid_argument("empty assignment");
    Netlist net;
    net.qregs = a.k;
    net.n_inputs = a.n;

    // classical layout: inputs, xor scratch per wide selector, outcomes
    long scratch_base = a.n;
    long scratch = scratch_bits(a);
    long outcome_base = scratch_base + scratch;
    net.cregs = static_cast<int>(outcome_base + a.k);
    net.output = static_cast<int>(outcome_base);

    // GHZ preparation: H on qubit 0, then doubling cnot fan-out
    {
        Gate h;
        h.g = "h";
        h.q = {0};
        net.layers.push_back({h});
        for (int s = 1; s < a.k; s <<= 1) {
            std::vector<Gate> layer;
            for (int i = 0; i < s && i + s < a.k; ++i) {
                Gate cx;
                cx.g = "cnot";
                cx.q = {i, i + s};
                layer.push_back(std::move(cx));
            }
            net.layers.push_back(std::move(layer));
        }
    }

    // selector parity trees; per-qubit condition bit and value
    std::vector<int> cond_bit(a.k, -1);
    std::vector<int> cond_val(a.k, 1);
    {
        long next_scratch = scratch_base;
        // per qubit: current nodes of its xor tree
        std::vector<std::vector<long>> nodes(a.k);
        for (int q = 0; q < a.k; ++q) {
            auto idxs = mask_indices(a.qubits[q].selector.s);
            for (int i : idxs) nodes[q].push_back(i - 1);
            cond_val[q] = a.qubits[q].selector.a0 ? 0 : 1;
            if (idxs.size() == 1) cond_bit[q] = idxs[0] - 1;
        }
        bool more = true;
        while (more) {
            more = false;
            std::vector<Gate> layer;
            for (int q = 0; q < a.k; ++q) {
                if (nodes[q].size() < 2) continue;
                std::vector<long> next;
                for (std::size_t i = 0; i + 1 < nodes[q].size(); i += 2) {
                    Gate g;
                    g.g = "cxor";
                    g.c = {static_cast<int>(next_scratch), static_cast<int>(nodes[q][i]),
                           static_cast<int>(nodes[q][i + 1])};
                    layer.push_back(std::move(g));
                    next.push_back(next_scratch++);
                }
                if (nodes[q].size() % 2) next.push_back(nodes[q].back());
                nodes[q] = std::move(next);
                if (nodes[q].size() >= 2) more = true;
                if (nodes[q].size() == 1) cond_bit[q] = static_cast<int>(nodes[q][0]);
            }
            if (!layer.empty()) net.layers.push_back(std::move(layer));
        }
    }

    // basis changes: phase gates, hadamards, then deferred X corrections
    {
        std::vector<QubitPlan> plans;
        std::size_t max_before = 0, max_after = 0;
        for (int q = 0; q < a.k; ++q) {
            plans.push_back(plan_basis_change(a.qubits[q], q, cond_bit[q], cond_val[q]));
            max_before = std::max(max_before, plans.back().before_h.size());
            max_after = std::max(max_after, plans.back().after_h.size());
        }
        for (std::size_t step = 0; step < max_before; ++step) {
            std::vector<Gate> layer;
            for (auto& plan : plans) {
                // align so every qubit's H lands with the others; phases first
                std::size_t lead = max_before - plan.before_h.size();
                if (step >= lead) layer.push_back(plan.before_h[step - lead]);
            }
            net.layers.push_back(std::move(layer));
        }
        for (std::size_t step = 0; step < max_after; ++step) {
            std::vector<Gate> layer;
            for (auto& plan : plans)
                if (step < plan.after_h.size()) layer.push_back(plan.after_h[step]);
            net.layers.push_back(std::move(layer));
        }
    }

    // measure everything, then fold the outcome parity into the first bit
    {
        std::vector<Gate> layer;
        for (int q = 0; q < a.k; ++q) {
            Gate m;
            m.g = "measure";
            m.q = {q};
            m.c = {static_cast<int>(outcome_base + q)};
            layer.push_back(std::move(m));
        }
        net.layers.push_back(std::move(layer));
    }
    for (int s = 1; s < a.k; s <<= 1) {
        std::vector<Gate> layer;
        for (int i = 0; i + s < a.k; i += 2 * s) {
            Gate g;
            g.g = "cxor";
            int dst = static_cast<int>(outcome_base + i);
            g.c = {dst, dst, static_cast<int>(outcome_base + i + s)};
            layer.push_back(std::move(g));
        }
        net.layers.push_back(std::move(layer));
    }
    if (a.final_constant) {
        Gate g;
        g.g = "cflip";
        g.c = {net.output};
        net.layers.push_back({g});
    }
    return net;
}

std::string Netlist::to_json() const {
    ordered_json j;
    j["qregs"] = qregs;
    j["cregs"] = cregs;
    j["n_inputs"] = n_inputs;
    j["output"] = output;
    j["layers"] = ordered_json::array();
    for (const auto& layer : layers) {
        ordered_json jl = ordered_json::array();
        for (const auto& g : layer) {
            ordered_json jg;
            jg["g"] = g.g;
            if (!g.q.empty()) jg["q"] = g.q;
            if (!g.c.empty()) jg["c"] = g.c;
            if (g.t) jg["t"] = rat_str(*g.t);
            if (g.cond_bit >= 0) jg["if"] = {{"c", g.cond_bit}, {"v", g.cond_val}};
            jl.push_back(std::move(jg));
        }
        j["layers"].push_back(std::move(jl));
    }
    return j.dump();
}

}  // namespace nmqc
