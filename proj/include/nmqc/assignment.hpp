#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "nmqc/poly.hpp"
#include "nmqc/rational.hpp"
#include "nmqc/subset.hpp"

namespace nmqc {

// Exact angle as a rational multiple of pi, reduced into [0, 2).
class Angle {
public:
    Angle() = default;
    explicit Angle(const Rat& turns_of_pi);

    const Rat& t() const { return t_; }  // angle = pi * t
    bool is_zero() const { return t_ == 0; }
    double radians() const;

    Angle operator+(const Angle& o) const { return Angle(t_ + o.t_); }
    Angle operator-() const { return Angle(-t_); }
    bool operator==(const Angle& o) const { return t_ == o.t_; }

private:
    Rat t_;
};

// Parity selector s = a0 xor (xor of x_i over S).
struct LinearForm {
    mask_t s = 0;
    bool a0 = false;

    bool eval(mask_t x) const { return (popcount(s & x) & 1) != static_cast<int>(a0); }
};

struct QubitSpec {
    Angle theta;         // input-independent part of the measurement angle
    Angle phi;           // part switched in when the selector fires
    LinearForm selector;
};

// One measurement per qubit of a shared k-qubit GHZ state; the device output
// is the parity of the outcomes, xored with final_constant.
struct MeasurementAssignment {
    int n = 0;
    int k = 0;
    std::vector<QubitSpec> qubits;
    bool final_constant = false;

    // pi * (sum theta_i + sum phi_i s_i(x)), as a multiple of pi.
    Rat angle_sum_t(mask_t x) const;

    std::string to_json() const;
    static MeasurementAssignment from_json(const std::string& text);
};

// theta_i = (pi/k) sum of all coefficients, phi_i = -2 pi c_{S_i}, one qubit
// per nonzero non-constant term in canonical order.
MeasurementAssignment assignment_from_poly(const MultilinearPoly& p);

// Folds the input-independent phase into final_constant: the theta total is
// an integer multiple of pi for any representing polynomial, so each theta
// becomes 0 and the parity of that integer flips the output.
void normalize(MeasurementAssignment& a);

// 1 + max 2-adic exponent across the per-qubit angle ratios; angles must be
// normalized away from theta first. Throws on non-dyadic angles.
int clifford_level(const MeasurementAssignment& a);

struct NondeterministicPoint : std::runtime_error {
    NondeterministicPoint(mask_t x, const Rat& t);
    mask_t x;
    Rat t;  // offending angle sum, as a multiple of pi
};

// Exact device output at input x; the angle sum must land on a multiple of
// pi or the outcome distribution is not deterministic.
bool evaluate_deterministic(const MeasurementAssignment& a, mask_t x);

// Outcome-parity samples from the exact GHZ distribution
// P(product m = -1) = (1 - cos(angle sum))/2, already xored with
// final_constant.
std::vector<std::uint8_t> sample_outcomes(const MeasurementAssignment& a, mask_t x,
                                          int shots, std::uint64_t seed);

// <GHZ| tensor of M(alpha_i) |GHZ> by statevector contraction, k <= 12.
double dense_expectation(const MeasurementAssignment& a, mask_t x);

}  // namespace nmqc
