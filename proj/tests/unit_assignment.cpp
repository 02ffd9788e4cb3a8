#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "nmqc/assignment.hpp"
#include "nmqc/constructions.hpp"

using namespace nmqc;

TEST_CASE("angles reduce into [0, 2) turns of pi") {
    CHECK(Angle(make_rat(-1, 4)).t() == make_rat(7, 4));
    CHECK(Angle(make_rat(9, 2)).t() == make_rat(1, 2));
    CHECK(Angle(make_rat(-9, 2)).t() == make_rat(3, 2));
    CHECK(Angle(Rat(4)).t() == 0);
    CHECK(Angle(Rat(-3)).t() == 1);
    CHECK((Angle(make_rat(3, 2)) + Angle(make_rat(3, 4))).t() == make_rat(1, 4));
    CHECK((-Angle(make_rat(1, 2))).t() == make_rat(3, 2));
    CHECK((-Angle(Rat(0))).t() == 0);
    CHECK(Angle(make_rat(1, 2)).radians() == doctest::Approx(M_PI / 2).epsilon(1e-15));
}

TEST_CASE("two-variable conjunction maps to the known three-qubit strategy") {
    Fn f = parse_fn("builtin:AND:2");
    auto rep = construct_fr(f);
    MeasurementAssignment a = assignment_from_poly(rep.poly);
    REQUIRE(a.k == 3);
    CHECK(a.n == 2);
    CHECK_FALSE(a.final_constant);
    for (const auto& q : a.qubits) CHECK(q.theta.t() == 0);
    REQUIRE(a.qubits.size() == 3);
    CHECK(a.qubits[0].selector.s == bit(0));
    CHECK(a.qubits[1].selector.s == bit(1));
    CHECK(a.qubits[2].selector.s == (bit(0) | bit(1)));
    CHECK(a.qubits[0].phi.t() == make_rat(1, 2));
    CHECK(a.qubits[1].phi.t() == make_rat(1, 2));
    CHECK(a.qubits[2].phi.t() == make_rat(3, 2));
    CHECK(clifford_level(a) == 2);
    for (mask_t x = 0; x < 4; ++x) {
        CHECK(evaluate_deterministic(a, x) == f.eval(x));
        double e = dense_expectation(a, x);
        double want = f.eval(x) ? -1.0 : 1.0;
        CHECK(std::abs(e - want) < 1e-12);
    }
}

TEST_CASE("two-term quadratic gets the four-qubit cancellation strategy") {
    Fn f = parse_fn("anf: x1*x2 + x2*x3");
    auto rep = construct_kr(f);
    MeasurementAssignment a = assignment_from_poly(rep.poly);
    REQUIRE(a.k == 4);
    for (const auto& q : a.qubits) CHECK(q.theta.t() == 0);
    CHECK(a.qubits[0].selector.s == bit(0));
    CHECK(a.qubits[1].selector.s == bit(2));
    CHECK(a.qubits[2].selector.s == (bit(0) | bit(1)));
    CHECK(a.qubits[3].selector.s == (bit(1) | bit(2)));
    CHECK(a.qubits[0].phi.t() == make_rat(1, 2));
    CHECK(a.qubits[1].phi.t() == make_rat(3, 2));
    CHECK(a.qubits[2].phi.t() == make_rat(3, 2));
    CHECK(a.qubits[3].phi.t() == make_rat(1, 2));
    CHECK(clifford_level(a) == 2);
    for (mask_t x = 0; x < 8; ++x) CHECK(evaluate_deterministic(a, x) == f.eval(x));
}

TEST_CASE("43-qubit strategy for the six-variable fifth threshold") {
    Fn f = parse_fn("builtin:C:5:6");
    auto rep = construct_csf(f);
    MeasurementAssignment a = assignment_from_poly(rep.poly);
    REQUIRE(a.k == 43);
    std::map<int, std::set<Rat>> phis;
    for (const auto& q : a.qubits) {
        CHECK(q.theta.t() == 0);
        phis[popcount(q.selector.s)].insert(q.phi.t());
    }
    std::map<int, std::set<Rat>> want = {{1, {make_rat(1, 8)}},
                                         {2, {make_rat(31, 16)}},
                                         {4, {make_rat(1, 16)}},
                                         {5, {make_rat(15, 8)}},
                                         {6, {make_rat(3, 16)}}};
    CHECK(phis == want);
    CHECK(clifford_level(a) == 5);
    for (mask_t x = 0; x < 64; ++x) CHECK(evaluate_deterministic(a, x) == f.eval(x));
}

TEST_CASE("normalization folds a shared pi offset into the output flip") {
    // NOR on two variables: truth table 1000, every angle lands at pi/3
    Fn f = parse_fn("tt:1");
    REQUIRE(f.eval(0));
    REQUIRE_FALSE(f.eval(3));
    auto rep = construct_fr(f);
    MeasurementAssignment a = assignment_from_poly(rep.poly);
    REQUIRE(a.k == 3);
    for (const auto& q : a.qubits) CHECK(q.theta.t() == make_rat(1, 3));
    CHECK_THROWS_AS(clifford_level(a), std::domain_error);
    for (mask_t x = 0; x < 4; ++x) CHECK(evaluate_deterministic(a, x) == f.eval(x));

    normalize(a);
    CHECK(a.final_constant);
    for (const auto& q : a.qubits) CHECK(q.theta.t() == 0);
    CHECK(clifford_level(a) == 2);
    for (mask_t x = 0; x < 4; ++x) CHECK(evaluate_deterministic(a, x) == f.eval(x));
}

TEST_CASE("normalization rejects a non-integer shared offset") {
    MeasurementAssignment a;
    a.n = 1;
    a.k = 1;
    QubitSpec q;
    q.theta = Angle(make_rat(1, 4));
    q.selector.s = bit(0);
    a.qubits.push_back(q);
    CHECK_THROWS_AS(normalize(a), std::domain_error);
}

TEST_CASE("non-integer angle sums surface the offending point") {
    MeasurementAssignment a;
    a.n = 1;
    a.k = 1;
    QubitSpec q;
    q.theta = Angle(make_rat(1, 4));
    q.selector.s = bit(0);
    a.qubits.push_back(q);
    try {
        evaluate_deterministic(a, 0);
        FAIL("expected a nondeterministic point");
    } catch (const NondeterministicPoint& e) {
        CHECK(e.x == 0);
        CHECK(e.t == make_rat(1, 4));
    }
}

TEST_CASE("sampling is exact on deterministic strategies") {
    Fn f = parse_fn("builtin:AND:2");
    MeasurementAssignment a = assignment_from_poly(construct_fr(f).poly);
    for (mask_t x = 0; x < 4; ++x) {
        auto shots = sample_outcomes(a, x, 10000, 7);
        long ones = 0;
        for (auto b : shots) ones += b;
        CHECK(ones == (f.eval(x) ? 10000 : 0));
    }
}

TEST_CASE("sampling tracks the outcome-parity distribution") {
    MeasurementAssignment a;
    a.n = 1;
    a.k = 1;
    QubitSpec q;
    q.theta = Angle(make_rat(1, 3));
    q.selector.s = bit(0);
    a.qubits.push_back(q);
    // at x = 0 the angle is pi/3, so odd parity has probability 1/4
    auto shots = sample_outcomes(a, 0, 10000, 12345);
    long ones = 0;
    for (auto b : shots) ones += b;
    double p = ones / 10000.0;
    double sigma = std::sqrt(0.25 * 0.75 / 10000.0);
    CHECK(std::abs(p - 0.25) <= 3 * sigma);
}

TEST_CASE("tensor contraction reproduces the cosine of the angle sum") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> kd(1, 6), gd(0, 5), numd(0, 63), seld(0, 15), bd(0, 1);
    for (int trial = 0; trial < 500; ++trial) {
        MeasurementAssignment a;
        a.n = 4;
        a.k = kd(rng);
        a.final_constant = bd(rng) != 0;
        for (int i = 0; i < a.k; ++i) {
            QubitSpec q;
            q.theta = Angle(make_rat(numd(rng), 1 << gd(rng)));
            q.phi = Angle(make_rat(numd(rng), 1 << gd(rng)));
            q.selector.s = static_cast<mask_t>(seld(rng));
            q.selector.a0 = bd(rng) != 0;
            a.qubits.push_back(std::move(q));
        }
        mask_t x = static_cast<mask_t>(seld(rng));
        double e = dense_expectation(a, x);
        double want = std::cos(a.angle_sum_t(x).get_d() * M_PI);
        CHECK(std::abs(e - want) < 1e-12);
    }
}

TEST_CASE("strategies round-trip through their json form") {
    Fn f = parse_fn("builtin:AND:2");
    MeasurementAssignment a = assignment_from_poly(construct_fr(f).poly);
    std::string text = a.to_json();
    CHECK(text ==
          "{\"n\":2,\"k\":3,\"final_constant\":false,\"qubits\":["
          "{\"theta\":\"0\",\"phi\":\"1/2\",\"S\":[1],\"a0\":0},"
          "{\"theta\":\"0\",\"phi\":\"1/2\",\"S\":[2],\"a0\":0},"
          "{\"theta\":\"0\",\"phi\":\"3/2\",\"S\":[1,2],\"a0\":0}]}");
    MeasurementAssignment b = MeasurementAssignment::from_json(text);
    CHECK(b.n == a.n);
    CHECK(b.k == a.k);
    CHECK(b.final_constant == a.final_constant);
    REQUIRE(b.qubits.size() == a.qubits.size());
    for (std::size_t i = 0; i < a.qubits.size(); ++i) {
        CHECK(b.qubits[i].theta.t() == a.qubits[i].theta.t());
        CHECK(b.qubits[i].phi.t() == a.qubits[i].phi.t());
        CHECK(b.qubits[i].selector.s == a.qubits[i].selector.s);
        CHECK(b.qubits[i].selector.a0 == a.qubits[i].selector.a0);
    }
    CHECK_THROWS_AS(
        MeasurementAssignment::from_json("{\"n\":1,\"k\":2,\"final_constant\":false,\"qubits\":[]}"),
        std::invalid_argument);
}
