#include "nmqc/assignment.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace nmqc {

using ordered_json = nlohmann::ordered_json;

Angle::Angle(const Rat& turns_of_pi) : t_(turns_of_pi) {
    // reduce into [0, 2)
    Int whole = t_.get_num() / t_.get_den();  // truncated
    Int halfturns = whole / 2;
    t_ -= 2 * Rat(halfturns);
    while (t_ < 0) t_ += 2;
    while (t_ >= 2) t_ -= 2;
}

double Angle::radians() const { return t_.get_d() * M_PI; }

Rat MeasurementAssignment::angle_sum_t(mask_t x) const {
    Rat total = 0;
    for (const auto& q : qubits) {
        total += q.theta.t();
        if (q.selector.eval(x)) total += q.phi.t();
    }
    return total;
}

MeasurementAssignment assignment_from_poly(const MultilinearPoly& p) {
    MeasurementAssignment a;
    a.n = p.n();
    a.k = p.sparsity();
    if (a.k == 0) {
        Rat c0 = p.coeff(0);
        if (!is_integer(c0))
            throw std::invalid_argument("constant representative must be an integer");
        a.final_constant = mod2(c0);
        return a;
    }
    Rat total = 0;
    for (const auto& [s, c] : p.terms()) total += c;
    Rat theta_each = total / a.k;
    for (const auto& [s, c] : p.terms()) {
        if (s == 0) continue;
        QubitSpec q;
        q.theta = Angle(theta_each);
        q.phi = Angle(-2 * c);
        q.selector.s = s;
        a.qubits.push_back(std::move(q));
    }
    return a;
}

void normalize(MeasurementAssignment& a) {
    Rat total = 0;
    for (const auto& q : a.qubits) total += q.theta.t();
    if (!is_integer(total))
        throw std::domain_error("input-independent phase is not a multiple of pi");
    if (mod2(total)) a.final_constant = !a.final_constant;
    for (auto& q : a.qubits) q.theta = Angle(Rat(0));
}

int clifford_level(const MeasurementAssignment& a) {
    int g = 0;
    for (const auto& q : a.qubits) {
        g = std::max(g, granularity(q.theta.t()));
        g = std::max(g, granularity(q.phi.t()));
    }
    return g + 1;
}

NondeterministicPoint::NondeterministicPoint(mask_t x_, const Rat& t_)
    : std::runtime_error("outcome parity is not deterministic: angle sum " + t_.get_str() +
                         " pi"),
      x(x_),
      t(t_) {}

bool evaluate_deterministic(const MeasurementAssignment& a, mask_t x) {
    Rat t = a.angle_sum_t(x);
    if (!is_integer(t)) throw NondeterministicPoint(x, t);
    return mod2(t) != a.final_constant;
}

std::vector<std::uint8_t> sample_outcomes(const MeasurementAssignment& a, mask_t x,
                                          int shots, std::uint64_t seed) {
    double alpha = a.angle_sum_t(x).get_d() * M_PI;
    double p_odd = (1.0 - std::cos(alpha)) / 2.0;
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution flip(std::min(1.0, std::max(0.0, p_odd)));
    std::vector<std::uint8_t> out(shots);
    for (int i = 0; i < shots; ++i) {
        bool parity = flip(rng);
        out[i] = static_cast<std::uint8_t>(parity != a.final_constant);
    }
    return out;
}

double dense_expectation(const MeasurementAssignment& a, mask_t x) {
    if (a.k > 12) throw std::domain_error("statevector contraction capped at 12 qubits");
    const std::size_t dim = std::size_t{1} << a.k;
    std::vector<std::complex<double>> ghz(dim), phi(dim);
    ghz[0] = ghz[dim - 1] = 1.0 / std::sqrt(2.0);
    phi = ghz;
    for (int q = 0; q < a.k; ++q) {
        double alpha = a.qubits[q].theta.radians() +
                       (a.qubits[q].selector.eval(x) ? a.qubits[q].phi.radians() : 0.0);
        std::complex<double> lo(std::cos(alpha), -std::sin(alpha));
        std::complex<double> hi(std::cos(alpha), std::sin(alpha));
        const std::size_t step = std::size_t{1} << q;
        for (std::size_t i = 0; i < dim; ++i) {
            if (i & step) continue;
            std::complex<double> a0 = phi[i], a1 = phi[i | step];
            phi[i] = lo * a1;
            phi[i | step] = hi * a0;
        }
    }
    std::complex<double> e = 0;
    for (std::size_t i = 0; i < dim; ++i) e += std::conj(ghz[i]) * phi[i];
    return e.real();
}

std::string MeasurementAssignment::to_json() const {
    ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["final_constant"] = final_constant;
    j["qubits"] = ordered_json::array();
    for (const auto& q : qubits) {
        ordered_json e;
        e["theta"] = rat_str(q.theta.t());
        e["phi"] = rat_str(q.phi.t());
        e["S"] = mask_indices(q.selector.s);
        e["a0"] = q.selector.a0 ? 1 : 0;
        j["qubits"].push_back(std::move(e));
    }
    return j.dump();
}

MeasurementAssignment MeasurementAssignment::from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    MeasurementAssignment a;
    a.n = j.at("n").get<int>();
    a.k = j.at("k").get<int>();
    a.final_constant = j.at("final_constant").get<bool>();
    for (const auto& e : j.at("qubits")) {
        QubitSpec q;
        q.theta = Angle(rat_from_str(e.at("theta").get<std::string>()));
        q.phi = Angle(rat_from_str(e.at("phi").get<std::string>()));
        q.selector.s = mask_from_indices(e.at("S").get<std::vector<int>>(), a.n);
        q.selector.a0 = e.value("a0", 0) != 0;
        a.qubits.push_back(std::move(q));
    }
    if (static_cast<int>(a.qubits.size()) != a.k)
        throw std::invalid_argument("qubit count mismatch");
    return a;
}

}  // namespace nmqc
