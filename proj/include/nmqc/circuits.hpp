#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nmqc/assignment.hpp"

namespace nmqc {

struct CircuitCost {
    double depth = 0;
    double width = 0;
    double gates = 0;
    bool exact = true;
};

struct CostOptions {
    double epsilon = 0.01;  // rotation synthesis accuracy for level >= 3
    double c = 2.5;         // synthesis length constant
};

// Classical parity trees for the selectors: singletons read the input bit
// directly, wider selectors take a balanced xor tree on scratch bits.
CircuitCost linear_stage_cost(const MeasurementAssignment& a);

// Parity of the k measurement outcomes, folded pairwise.
CircuitCost post_stage_cost(int k);

// Log-depth GHZ preparation: H then doubling fan-out of CNOTs.
CircuitCost ghz_log_cost(int k);

// Constant-depth GHZ preparation bound; needs even k >= 4.
CircuitCost ghz_const_depth_cost(int k);

// Basis-change stage before the Z measurements. Exact per-qubit gate
// sequences up to second level angles; above that, counts follow the
// epsilon-accurate synthesis bound and exact is false.
CircuitCost measurement_layer_cost(const MeasurementAssignment& a,
                                   const CostOptions& opts = {});

// End-to-end cost of the standard pipeline (log-depth GHZ, measurement
// layer, parity fold). Exact when every angle is second level or below.
CircuitCost total_cost(const MeasurementAssignment& a, const CostOptions& opts = {});

// A flat gate-list circuit. Quantum operands index qubits 0..qregs-1;
// classical bits hold the inputs, xor scratch, outcomes, and the output,
// in that order. Gates within one layer touch disjoint qubits and write
// disjoint classical bits (shared classical reads are fine).
struct Gate {
    std::string g;            // h x s sdg cnot rz measure cxor cflip
    std::vector<int> q;       // qubit operands
    std::vector<int> c;       // classical operands (measure target, cxor args)
    std::optional<Rat> t;     // rz angle as a multiple of pi: diag(1, e^{i pi t})
    int cond_bit = -1;        // classical control, -1 when unconditional
    int cond_val = 1;
};

struct Netlist {
    int qregs = 0;
    int cregs = 0;
    int output = 0;  // classical bit holding the result
    int n_inputs = 0;
    std::vector<std::vector<Gate>> layers;

    std::string to_json() const;
};

// Full circuit for one run: GHZ prep, selector xor trees, conditioned basis
// changes, measurements, outcome parity fold, optional final flip. Inputs
// enter as the first n classical bits.
Netlist emit_netlist(const MeasurementAssignment& a);

}  // namespace nmqc
